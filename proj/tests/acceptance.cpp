// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
// Each criterion has a wall-clock budget; exceeding it fails the criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "specht/specht.hpp"

using namespace specht;

namespace {

struct Criterion {
  int number;
  int budget_seconds;
  const char* what;
  bool (*run)();
};

SkewTableau tab(const std::string& shape, const std::string& text) {
  return SkewTableau::parse(SkewShape::parse(shape), text);
}

// 1. The worked recursive evaluation: chi at the label (4,4,4) and cycle
// type (5,5,2) equals 2, the first peel removes exactly the two strips
// (4,3) ht 1 and (3,3,1) ht 2, and the full-cycle trace of each strip's
// module carries the matching sign.
bool criterion_1() {
  if (mn_char(Partition{4, 4, 4}, Partition{5, 5, 2}) != 2) return false;
  auto strips = border_strips(Partition{4, 4, 4}, 5);
  if (strips.size() != 2) return false;
  if (strips[0] != std::pair<Partition, int>(Partition{4, 3}, 1)) return false;
  if (strips[1] != std::pair<Partition, int>(Partition{3, 3, 1}, 2))
    return false;
  StraightenCache cache;
  for (const auto& [mu, ht] : strips) {
    SkewShape shape(Partition{4, 4, 4}, mu);
    Int want = ht % 2 == 0 ? 1 : -1;
    if (skew_char_trace(shape, long_cycle(5), cache) != want) return false;
    if (skew_char_ncycle(shape) != want) return false;
  }
  return true;
}

// 2. The worked straightening: the filling 1,2,5/4,3,7/6,8 of (3,3,2)
// expands over exactly five standard fillings with the printed signs, and
// the entries at most 4 fill column shapes (2,2) and (3,1) respectively.
bool criterion_2() {
  SpechtVector sv = straighten(tab("3,3,2", "1,2,5/4,3,7/6,8"));
  struct Golden {
    const char* text;
    int sign;
    Composition four_shape;
  };
  std::vector<Golden> want{{"1,3,5/2,4,7/6,8", -1, {2, 2, 0}},
                           {"1,2,5/3,4,7/6,8", 1, {2, 2, 0}},
                           {"1,3,5/2,6,7/4,8", 1, {3, 1, 0}},
                           {"1,2,5/3,6,7/4,8", -1, {3, 1, 0}},
                           {"1,4,5/2,6,7/3,8", -1, {3, 1, 0}}};
  if (sv.term_count() != want.size()) return false;
  for (const Golden& g : want) {
    SkewTableau u = tab("3,3,2", g.text);
    if (!is_standard(u)) return false;
    if (sv.coefficient(u) != g.sign) return false;
    if (m_shape(u, 4) != g.four_shape) return false;
  }
  // byte-exact golden of the full expansion in column word order
  std::string printed;
  for (const auto& [u, c] : sv.terms())
    printed += (c > 0 ? "+" : "") + to_string(c) + " " + u.str() + "\n";
  const std::string golden =
      "-1 1,4,5/2,6,7/3,8\n"
      "+1 1,3,5/2,6,7/4,8\n"
      "-1 1,3,5/2,4,7/6,8\n"
      "-1 1,2,5/3,6,7/4,8\n"
      "+1 1,2,5/3,4,7/6,8\n";
  return printed == golden;
}

// 3. For every border strip with at most 7 boxes, the full-cycle matrix has
// exactly one nonzero diagonal entry, at the distinguished filling, equal
// to the sign determined by the strip height.  Exhaustive.
bool criterion_3() {
  SuiteReport r = run_suite("unique-trace-tableau", 7, default_threads());
  return r.passed() && r.checks > 0;
}

// 4. For every shape with at most 6 boxes that is not a border strip
// (whether connected or not), the full-cycle trace vanishes.  Exhaustive.
bool criterion_4() {
  StraightenCache cache;
  long long zero_cases = 0;
  for (int n = 1; n <= 6; ++n)
    for (const SkewShape& s : skew_shapes_of_size(n)) {
      if (is_border_strip(s)) continue;
      ++zero_cases;
      if (skew_char_trace(s, long_cycle(n), cache) != 0) return false;
    }
  return zero_cases > 0;
}

// 5. Engine equivalence: the recursive rule and representing-matrix traces
// produce identical character tables for every group size up to 6, and the
// tables satisfy exact row and column orthogonality.
bool criterion_5() {
  for (int n = 1; n <= 6; ++n) {
    CharacterTable a = char_table(n, default_threads(), global_mn_cache());
    CharacterTable b = char_table_trace(n, default_threads());
    if (a.labels != b.labels || a.classes != b.classes) return false;
    if (a.values != b.values) return false;
    if (!rows_orthogonal(a) || !columns_orthogonal(a)) return false;
    if (!rows_orthogonal(b) || !columns_orthogonal(b)) return false;
  }
  return true;
}

// 6. At a full cycle the squared character values sum to the group size for
// 2 <= n <= 10, and the nonzero values are exactly the signs at hooks.
bool criterion_6() {
  MnCache cache;
  for (int n = 2; n <= 10; ++n) {
    Int square_sum = 0;
    for (const Partition& la : partitions_of(n)) {
      Int v = mn_char(la, Partition{n}, cache);
      square_sum += v * v;
      bool hook = la.part(2) <= 1;
      if (!hook && v != 0) return false;
      if (hook) {
        int leg = la.rows() - 1;
        if (v != (leg % 2 == 0 ? 1 : -1)) return false;
      }
    }
    if (square_sum != n) return false;
  }
  return true;
}

// 7. Branching through a product subgroup holds for every label of size up
// to 7 and every split of its size.  Exhaustive.
bool criterion_7() {
  SuiteReport r = run_suite("restriction", 7, default_threads());
  return r.passed() && r.checks > 0;
}

// 8. For every containment of partitions with outer size at most 7, the
// sign multiplicity detects vertical strips and the trivial multiplicity
// detects horizontal strips, both exactly.
bool criterion_8() {
  MnCache cache;
  for (int n = 0; n <= 7; ++n)
    for (const Partition& la : partitions_of(n))
      for (int m = 0; m <= n; ++m)
        for (const Partition& mu : subpartitions_of(la, m)) {
          SkewShape shape(la, mu);
          Rat young = young_multiplicity(shape, cache);
          Rat pieri = pieri_multiplicity(shape, cache);
          if (young != Rat(is_horizontal_strip(shape) ? 1 : 0)) return false;
          if (pieri != Rat(is_vertical_strip(shape) ? 1 : 0)) return false;
        }
  return true;
}

// 9. For every column standard filling of every shape with at most 6 boxes,
// straightening gives its row straightening coefficient exactly +1 and
// every other term is strictly dominated.  Exhaustive.
bool criterion_9() {
  SuiteReport r = run_suite("dominance-lemma", 6, default_threads());
  return r.passed() && r.checks > 0;
}

// 10. The straightening oracle: evaluating the straightened combination in
// the tabloid basis returns the original signed column sum — exhaustively
// for all shapes with at most 6 boxes, then on 1000 pseudo-random fillings
// of shapes with 7 or 8 boxes (fixed seed, reproducible).
bool criterion_10() {
  SuiteReport r = run_suite("straighten-oracle", 6, default_threads());
  if (!r.passed() || r.checks == 0) return false;
  std::vector<SkewShape> shapes = skew_shapes_of_size(7);
  for (SkewShape& s : skew_shapes_of_size(8)) shapes.push_back(std::move(s));
  std::mt19937 rng(12345);
  StraightenCache cache;
  for (int iter = 0; iter < 1000; ++iter) {
    const SkewShape& s = shapes[rng() % shapes.size()];
    int n = s.size();
    std::vector<int> vals(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) vals[static_cast<std::size_t>(v - 1)] = v;
    std::shuffle(vals.begin(), vals.end(), rng);
    SkewTableau t(s, vals);
    if (expand(straighten(t, cache)) != polytabloid(t)) return false;
  }
  return true;
}

// 11. Printed-order fidelity: the six column standard fillings of (2,2)
// descend in the column order exactly as printed, and the dominance covers
// of the row standard fillings of (3,2)/(1) form the printed diagram.
bool criterion_11() {
  std::vector<SkewTableau> cs =
      column_standard_tableaux(SkewShape::parse("2,2"));
  if (cs.size() != 6) return false;
  std::sort(cs.begin(), cs.end(), column_order_greater);
  std::vector<std::string> chain{"1,3/2,4", "1,2/3,4", "2,1/3,4",
                                 "1,2/4,3", "2,1/4,3", "3,1/4,2"};
  for (std::size_t k = 0; k < cs.size(); ++k)
    if (cs[k].str() != chain[k]) return false;

  SkewShape s = SkewShape::parse("3,2/1");
  std::vector<SkewTableau> rs;
  std::vector<int> vals{1, 2, 3, 4};
  do {
    SkewTableau t(s, vals);
    if (is_row_standard(t)) rs.push_back(t);
  } while (std::next_permutation(vals.begin(), vals.end()));
  if (rs.size() != 6) return false;
  auto strictly = [](const SkewTableau& a, const SkewTableau& b) {
    return !(a == b) && dominates_tableau(a, b);
  };
  std::vector<std::pair<std::string, std::string>> covers;
  for (const SkewTableau& a : rs)
    for (const SkewTableau& b : rs) {
      if (!strictly(a, b)) continue;
      bool cover = true;
      for (const SkewTableau& z : rs)
        if (strictly(a, z) && strictly(z, b)) cover = false;
      if (cover) covers.emplace_back(a.str(), b.str());
    }
  std::sort(covers.begin(), covers.end());
  std::vector<std::pair<std::string, std::string>> want{
      {".,1,2/3,4", ".,1,3/2,4"}, {".,1,3/2,4", ".,1,4/2,3"},
      {".,1,3/2,4", ".,2,3/1,4"}, {".,1,4/2,3", ".,2,4/1,3"},
      {".,2,3/1,4", ".,2,4/1,3"}, {".,2,4/1,3", ".,3,4/1,2"}};
  std::sort(want.begin(), want.end());
  return covers == want;
}

const Criterion kCriteria[] = {
    {1, 1, "recursive value and strip decomposition of the worked example",
     &criterion_1},
    {2, 1, "golden straightening of the worked example", &criterion_2},
    {3, 60, "unique signed diagonal entry for border strips up to size 7",
     &criterion_3},
    {4, 60, "full-cycle trace vanishes off border strips up to size 6",
     &criterion_4},
    {5, 120, "recursive and trace engines agree and are orthogonal up to S_6",
     &criterion_5},
    {6, 5, "full-cycle squares sum to n with hook-only support, n <= 10",
     &criterion_6},
    {7, 120, "branching holds for all labels up to size 7", &criterion_7},
    {8, 120, "strip detection by trivial and sign multiplicities up to size 7",
     &criterion_8},
    {9, 120, "dominance of row-sorted leading terms up to size 6",
     &criterion_9},
    {10, 120, "straightening oracle, exhaustive to size 6 plus 1000 random",
     &criterion_10},
    {11, 1, "printed chain and cover diagram reproduced exactly",
     &criterion_11},
};

}  // namespace

int main() {
  int failed = 0;
  for (const Criterion& c : kCriteria) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::printf("criterion %2d: exception: %s\n", c.number, e.what());
      ok = false;
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    bool in_budget = secs <= static_cast<double>(c.budget_seconds);
    bool pass = ok && in_budget;
    if (!pass) ++failed;
    std::printf("criterion %2d: %s  (%.2fs, budget %ds)  %s%s\n", c.number,
                pass ? "pass" : "FAIL", secs, c.budget_seconds, c.what,
                !ok ? "" : (in_budget ? "" : "  [over budget]"));
  }
  if (failed == 0)
    std::printf("acceptance: all %d criteria passed\n",
                static_cast<int>(std::size(kCriteria)));
  else
    std::printf("acceptance: %d of %d criteria FAILED\n", failed,
                static_cast<int>(std::size(kCriteria)));
  return failed == 0 ? 0 : 1;
}
