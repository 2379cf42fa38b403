#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "specht/bigint.hpp"
#include "specht/characters.hpp"
#include "specht/orders.hpp"
#include "specht/parallel.hpp"
#include "specht/partition.hpp"
#include "specht/permutation.hpp"
#include "specht/rep_matrix.hpp"
#include "specht/skew_shape.hpp"
#include "specht/straighten.hpp"
#include "specht/tableau.hpp"
#include "specht/tabloid.hpp"

namespace specht {

struct SuiteReport {
  std::string name;
  int budget = 0;
  long long checks = 0;
  long long failure_count = 0;
  std::vector<std::string> failure_samples;  // sorted, capped
  double seconds = 0.0;
  bool passed() const { return failure_count == 0; }
};

namespace detail {

constexpr std::size_t kFailureSampleCap = 50;

// Per-worker scratch: failures are sampled up to a cap so a badly broken
// build cannot flood memory, while the full count stays exact.
struct SuiteScratch {
  long long checks = 0;
  long long failure_count = 0;
  std::vector<std::string> samples;

  void fail(std::string msg) {
    ++failure_count;
    if (samples.size() < kFailureSampleCap) samples.push_back(std::move(msg));
  }

  template <typename MsgFn>
  void check(bool ok, MsgFn&& msg) {
    ++checks;
    if (!ok) fail(msg());
  }
};

// Gathers per-worker scratches under a lock; results are merged and sorted
// once all workers have joined.
struct ScratchPool {
  std::mutex mu;
  std::vector<SuiteScratch> all;

  void commit(SuiteScratch&& s) {
    std::lock_guard<std::mutex> g(mu);
    all.push_back(std::move(s));
  }

  void finish(SuiteReport& report) {
    for (auto& s : all) {
      report.checks += s.checks;
      report.failure_count += s.failure_count;
      for (auto& m : s.samples) {
        if (report.failure_samples.size() >= kFailureSampleCap) break;
        report.failure_samples.push_back(std::move(m));
      }
    }
    std::sort(report.failure_samples.begin(), report.failure_samples.end());
  }
};

// All normalized shapes with 1..budget boxes, flattened.
inline std::vector<SkewShape> shapes_up_to(int budget) {
  std::vector<SkewShape> out;
  for (int n = 1; n <= budget; ++n)
    for (auto& s : skew_shapes_of_size(n)) out.push_back(std::move(s));
  return out;
}

// ---- individual suites ------------------------------------------------

// Straightening agrees with direct expansion: for every filling of every
// shape, evaluating the straightened combination into the tabloid basis
// returns exactly the signed column sum of the original filling, and every
// output term is standard.
inline SuiteReport suite_straighten_oracle(int budget, unsigned threads) {
  SuiteReport report;
  report.name = "straighten-oracle";
  report.budget = budget;
  std::vector<SkewShape> shapes = shapes_up_to(budget);
  ScratchPool pool;
  parallel_chunks(shapes.size(), threads, [&](std::size_t lo, std::size_t hi) {
    SuiteScratch local;
    StraightenCache cache;
    for (std::size_t k = lo; k < hi; ++k) {
      const SkewShape& shape = shapes[k];
      int n = shape.size();
      std::vector<int> vals(static_cast<std::size_t>(n));
      for (int v = 1; v <= n; ++v) vals[static_cast<std::size_t>(v - 1)] = v;
      do {
        SkewTableau u(shape, vals);
        SpechtVector sv = straighten(u, cache);
        bool all_standard = true;
        for (const auto& [term, c] : sv.terms()) {
          (void)c;
          if (!is_standard(term)) all_standard = false;
        }
        local.check(all_standard, [&] {
          return "shape " + shape.str() + " filling " + u.str() +
                 ": non-standard term in straightened result";
        });
        local.check(expand(sv) == polytabloid(u), [&] {
          return "shape " + shape.str() + " filling " + u.str() +
                 ": straightened expansion differs from column sum";
        });
      } while (std::next_permutation(vals.begin(), vals.end()));
    }
    pool.commit(std::move(local));
  });
  pool.finish(report);
  return report;
}

// The exchange relation vanishes identically: for every column-sorted
// filling and every admissible pivot — the configurations straightening
// actually rewrites — the signed sum of the column sums of the filling and
// all its exchanges is zero in the tabloid basis.
inline SuiteReport suite_garnir_zero(int budget, unsigned threads) {
  SuiteReport report;
  report.name = "garnir-zero";
  report.budget = budget;
  std::vector<SkewShape> shapes = shapes_up_to(budget);
  ScratchPool pool;
  parallel_chunks(shapes.size(), threads, [&](std::size_t lo, std::size_t hi) {
    SuiteScratch local;
    for (std::size_t k = lo; k < hi; ++k) {
      const SkewShape& shape = shapes[k];
      for (const SkewTableau& t : column_standard_tableaux(shape)) {
        for (int i = 1; i <= shape.rows(); ++i)
          for (int j = shape.row_begin(i); j < shape.row_end(i); ++j) {
            GarnirData gd = garnir_data(t, {i, j});
            TabloidVector total = polytabloid(t);
            for (const GarnirSwap& sw : gd.swaps)
              total.add_scaled(polytabloid(apply(t, sw.sigma)), Int(sw.sign));
            local.check(total.is_zero(), [&] {
              return "shape " + shape.str() + " filling " + t.str() +
                     " pivot (" + std::to_string(i) + "," +
                     std::to_string(j) + "): exchange relation not zero";
            });
          }
      }
    }
    pool.commit(std::move(local));
  });
  pool.finish(report);
  return report;
}

// Row-sorting a column-sorted filling gives a standard filling that carries
// coefficient one in the straightened combination, and every other term is
// strictly smaller in the dominance order.
inline SuiteReport suite_dominance_lemma(int budget, unsigned threads) {
  SuiteReport report;
  report.name = "dominance-lemma";
  report.budget = budget;
  std::vector<SkewShape> shapes = shapes_up_to(budget);
  ScratchPool pool;
  parallel_chunks(shapes.size(), threads, [&](std::size_t lo, std::size_t hi) {
    SuiteScratch local;
    StraightenCache cache;
    for (std::size_t k = lo; k < hi; ++k) {
      const SkewShape& shape = shapes[k];
      // exhaustive: every column-sorted filling of every shape
      for (const SkewTableau& t : column_standard_tableaux(shape)) {
        SkewTableau u = row_straighten(t);
        local.check(is_standard(u), [&] {
          return "shape " + shape.str() + " filling " + t.str() +
                 ": row-sorted filling is not standard";
        });
        if (!is_standard(u)) continue;
        SpechtVector sv = straighten(t, cache);
        local.check(sv.coefficient(u) == 1, [&] {
          return "shape " + shape.str() + " filling " + t.str() +
                 ": row-sorted term " + u.str() + " has coefficient " +
                 to_string(sv.coefficient(u));
        });
        for (const auto& [s, c] : sv.terms()) {
          (void)c;
          if (s == u) continue;
          local.check(dominates_tableau(u, s) && !(s == u), [&] {
            return "shape " + shape.str() + " filling " + t.str() +
                   ": term " + s.str() + " not dominated by " + u.str();
          });
        }
      }
    }
    pool.commit(std::move(local));
  });
  pool.finish(report);
  return report;
}

// At a full cycle, the representing matrix of a border strip has exactly one
// nonzero diagonal entry: it sits at the distinguished standard filling and
// equals -1 to the strip's height.
inline SuiteReport suite_unique_trace_tableau(int budget, unsigned threads) {
  SuiteReport report;
  report.name = "unique-trace-tableau";
  report.budget = budget;
  std::vector<SkewShape> strips;
  for (const SkewShape& s : shapes_up_to(budget))
    if (is_border_strip(s)) strips.push_back(s);
  ScratchPool pool;
  parallel_chunks(strips.size(), threads, [&](std::size_t lo, std::size_t hi) {
    SuiteScratch local;
    StraightenCache cache;
    for (std::size_t k = lo; k < hi; ++k) {
      const SkewShape& shape = strips[k];
      int n = shape.size();
      SpechtBasis basis(shape);
      Matrix m = representing_matrix(basis, long_cycle(n), cache);
      std::size_t special = basis.index_of(canonical_strip_tableau(shape));
      Int expect = height(shape) % 2 == 0 ? Int(1) : Int(-1);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        Int want = i == special ? expect : Int(0);
        local.check(m[i][i] == want, [&] {
          return "strip " + shape.str() + " diagonal at " +
                 basis.tableau(i).str() + ": got " + to_string(m[i][i]) +
                 ", want " + to_string(want);
        });
      }
    }
    pool.commit(std::move(local));
  });
  pool.finish(report);
  return report;
}

// The full-cycle character of every skew module, computed as a matrix
// trace, agrees with the value read directly off the shape (signed for a
// border strip, zero otherwise).
inline SuiteReport suite_skew_ncycle(int budget, unsigned threads) {
  SuiteReport report;
  report.name = "skew-ncycle";
  report.budget = budget;
  std::vector<SkewShape> shapes = shapes_up_to(budget);
  ScratchPool pool;
  parallel_chunks(shapes.size(), threads, [&](std::size_t lo, std::size_t hi) {
    SuiteScratch local;
    StraightenCache cache;
    for (std::size_t k = lo; k < hi; ++k) {
      const SkewShape& shape = shapes[k];
      Int traced =
          skew_char_trace(shape, long_cycle(shape.size()), cache);
      Int predicted = skew_char_ncycle(shape);
      local.check(traced == predicted, [&] {
        return "shape " + shape.str() + ": trace " + to_string(traced) +
               " but shape predicts " + to_string(predicted);
      });
    }
    pool.commit(std::move(local));
  });
  pool.finish(report);
  return report;
}

// Branching through a direct product subgroup: for every label and every
// split of its size, the recursive character value at the merged type
// equals the inner-value-weighted sum of skew module traces.
inline SuiteReport suite_restriction(int budget, unsigned threads) {
  SuiteReport report;
  report.name = "restriction";
  report.budget = budget;
  struct Item {
    Partition label, alpha, beta;
  };
  std::vector<Item> items;
  for (int n = 2; n <= budget; ++n)
    for (const Partition& label : partitions_of(n))
      for (int a = 1; a <= n - 1; ++a)
        for (const Partition& alpha : partitions_of(a))
          for (const Partition& beta : partitions_of(n - a))
            items.push_back({label, alpha, beta});
  ScratchPool pool;
  MnCache mn;
  parallel_chunks(items.size(), threads, [&](std::size_t lo, std::size_t hi) {
    SuiteScratch local;
    StraightenCache st;
    for (std::size_t k = lo; k < hi; ++k) {
      const Item& it = items[k];
      local.check(restriction_check(it.label, it.alpha, it.beta, mn, st), [&] {
        return "label " + it.label.str() + " split " + it.alpha.str() +
               " ; " + it.beta.str() + ": branching sum mismatch";
      });
    }
    pool.commit(std::move(local));
  });
  pool.finish(report);
  return report;
}

// The multiplicity of the trivial (resp. sign) character in a skew module
// is one exactly when the shape is a horizontal (resp. vertical) strip,
// else zero.  Multiplicities are computed from recursive character values.
inline SuiteReport suite_pieri_young(int budget, unsigned threads) {
  SuiteReport report;
  report.name = "pieri-young";
  report.budget = budget;
  std::vector<SkewShape> shapes = shapes_up_to(budget);
  ScratchPool pool;
  MnCache mn;
  parallel_chunks(shapes.size(), threads, [&](std::size_t lo, std::size_t hi) {
    SuiteScratch local;
    for (std::size_t k = lo; k < hi; ++k) {
      const SkewShape& shape = shapes[k];
      Rat triv = young_multiplicity(shape, mn);
      Rat sgn = pieri_multiplicity(shape, mn);
      Rat triv_want(is_horizontal_strip(shape) ? 1 : 0);
      Rat sgn_want(is_vertical_strip(shape) ? 1 : 0);
      local.check(triv == triv_want, [&] {
        return "shape " + shape.str() + ": trivial multiplicity " +
               to_string(triv) + ", want " + to_string(triv_want);
      });
      local.check(sgn == sgn_want, [&] {
        return "shape " + shape.str() + ": sign multiplicity " +
               to_string(sgn) + ", want " + to_string(sgn_want);
      });
    }
    pool.commit(std::move(local));
  });
  pool.finish(report);
  return report;
}

// At a full cycle only hook labels carry a nonzero value, the value is a
// sign determined by the leg length, the squares over all labels sum to the
// group size, and the whole table satisfies row orthogonality.
inline SuiteReport suite_hook_orthogonality(int budget, unsigned threads) {
  SuiteReport report;
  report.name = "hook-orthogonality";
  report.budget = budget;
  ScratchPool pool;
  MnCache mn;
  parallel_chunks(static_cast<std::size_t>(budget), threads,
                  [&](std::size_t lo, std::size_t hi) {
                    SuiteScratch local;
                    for (std::size_t k = lo; k < hi; ++k) {
                      int n = static_cast<int>(k) + 1;
                      Partition cycle{n};
                      Int square_sum = 0;
                      for (const Partition& la : partitions_of(n)) {
                        Int v = mn_char(la, cycle, mn);
                        square_sum += v * v;
                        bool hook = la.rows() <= 1 ||
                                    (la.rows() >= 2 && la.part(2) <= 1);
                        Int want = 0;
                        if (hook) {
                          int leg = la.rows() - 1;
                          want = leg % 2 == 0 ? Int(1) : Int(-1);
                        }
                        local.check(v == want, [&] {
                          return "label " + la.str() + " at the " +
                                 std::to_string(n) + "-cycle: got " +
                                 to_string(v) + ", want " + to_string(want);
                        });
                      }
                      local.check(square_sum == n, [&] {
                        return "squares at the " + std::to_string(n) +
                               "-cycle sum to " + to_string(square_sum) +
                               ", want " + std::to_string(n);
                      });
                      CharacterTable table = char_table(n, 1, mn);
                      local.check(rows_orthogonal(table), [&] {
                        return "table for n=" + std::to_string(n) +
                               ": row orthogonality failed";
                      });
                    }
                    pool.commit(std::move(local));
                  });
  pool.finish(report);
  return report;
}

// The recursive rule and representing-matrix traces build identical
// character tables.
inline SuiteReport suite_mn_vs_trace(int budget, unsigned threads) {
  SuiteReport report;
  report.name = "mn-vs-trace";
  report.budget = budget;
  ScratchPool pool;
  MnCache mn;
  SuiteScratch local;
  for (int n = 1; n <= budget; ++n) {
    CharacterTable recursive = char_table(n, threads, mn);
    CharacterTable traced = char_table_trace(n, threads);
    for (std::size_t i = 0; i < recursive.labels.size(); ++i)
      for (std::size_t j = 0; j < recursive.classes.size(); ++j)
        local.check(recursive.values[i][j] == traced.values[i][j], [&] {
          return "label " + recursive.labels[i].str() + " class " +
                 recursive.classes[j].str() + ": rule " +
                 to_string(recursive.values[i][j]) + ", trace " +
                 to_string(traced.values[i][j]);
        });
  }
  pool.commit(std::move(local));
  pool.finish(report);
  return report;
}

}  // namespace detail

struct Suite {
  std::string name;
  int default_budget;
  std::string what;
  SuiteReport (*run)(int budget, unsigned threads);
};

inline const std::vector<Suite>& suite_registry() {
  static const std::vector<Suite> suites = {
      {"straighten-oracle", 6,
       "straightened combinations expand to the original column sums",
       &detail::suite_straighten_oracle},
      {"garnir-zero", 6, "exchange relations vanish in the tabloid basis",
       &detail::suite_garnir_zero},
      {"dominance-lemma", 6,
       "row-sorted leading term has coefficient one and dominates the rest",
       &detail::suite_dominance_lemma},
      {"unique-trace-tableau", 7,
       "full-cycle matrices of border strips have one signed diagonal entry",
       &detail::suite_unique_trace_tableau},
      {"skew-ncycle", 6,
       "full-cycle traces match the value read off the shape",
       &detail::suite_skew_ncycle},
      {"restriction", 7,
       "branching sums of skew traces match recursive character values",
       &detail::suite_restriction},
      {"pieri-young", 7,
       "trivial and sign multiplicities detect horizontal and vertical "
       "strips",
       &detail::suite_pieri_young},
      {"hook-orthogonality", 10,
       "full-cycle support is hooks only and tables are row orthogonal",
       &detail::suite_hook_orthogonality},
      {"mn-vs-trace", 6,
       "recursive and trace-built character tables agree",
       &detail::suite_mn_vs_trace},
  };
  return suites;
}

inline SuiteReport run_suite(const std::string& name, int budget,
                             unsigned threads) {
  for (const Suite& s : suite_registry()) {
    if (s.name != name) continue;
    int b = budget > 0 ? budget : s.default_budget;
    auto start = std::chrono::steady_clock::now();
    SuiteReport report = s.run(b, threads);
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    return report;
  }
  std::string known;
  for (const Suite& s : suite_registry())
    known += (known.empty() ? "" : ", ") + s.name;
  throw std::invalid_argument("run_suite: unknown suite '" + name +
                              "' (known: " + known + ")");
}

inline std::string report_text(const std::vector<SuiteReport>& reports) {
  std::string out;
  bool all_ok = true;
  for (const SuiteReport& r : reports) {
    char line[160];
    std::snprintf(line, sizeof line, "%-22s n<=%-2d %8lld checks  %6.2fs  %s\n",
                  r.name.c_str(), r.budget, r.checks, r.seconds,
                  r.passed() ? "pass" : "FAIL");
    out += line;
    if (!r.passed()) {
      all_ok = false;
      out += "  " + std::to_string(r.failure_count) + " failure(s), e.g.:\n";
      std::size_t shown = 0;
      for (const std::string& m : r.failure_samples) {
        if (shown++ == 5) break;
        out += "    " + m + "\n";
      }
    }
  }
  out += all_ok ? "all suites passed\n" : "SOME SUITES FAILED\n";
  return out;
}

inline std::string report_json(const std::vector<SuiteReport>& reports) {
  nlohmann::ordered_json j;
  j["suites"] = nlohmann::ordered_json::array();
  bool all_ok = true;
  for (const SuiteReport& r : reports) {
    nlohmann::ordered_json s;
    s["name"] = r.name;
    s["budget"] = r.budget;
    s["checks"] = r.checks;
    s["failures"] = r.failure_count;
    s["failure_samples"] = r.failure_samples;
    s["seconds"] = r.seconds;
    s["passed"] = r.passed();
    j["suites"].push_back(std::move(s));
    all_ok = all_ok && r.passed();
  }
  j["passed"] = all_ok;
  return j.dump(1) + "\n";
}

}  // namespace specht
