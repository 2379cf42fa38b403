#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "specht/bigint.hpp"
#include "specht/errors.hpp"
#include "specht/partition.hpp"
#include "specht/permutation.hpp"
#include "specht/skew_shape.hpp"
#include "specht/tableau.hpp"

using namespace specht;

namespace {

SkewTableau tab(const std::string& shape, const std::string& text) {
  return SkewTableau::parse(SkewShape::parse(shape), text);
}

// hook length product oracle for straight shapes
Int hook_count(const Partition& la) {
  Partition conj = conjugate(la);
  Int denom = 1;
  for (int i = 1; i <= la.rows(); ++i)
    for (int j = 1; j <= la.part(i); ++j)
      denom *= Int((la.part(i) - j) + (conj.part(j) - i) + 1);
  return factorial(la.size()) / denom;
}

}  // namespace

TEST_CASE("tableau parsing and printing round trip", "[tableau]") {
  SkewTableau t = tab("5,3,3/2,2", ".,.,1,6,7/.,.,2/3,4,5");
  CHECK(t.str() == ".,.,1,6,7/.,.,2/3,4,5");
  CHECK(t.size() == 7);
  CHECK(t.at(1, 3) == 1);
  CHECK(t.at(1, 5) == 7);
  CHECK(t.at(3, 1) == 3);
  CHECK(t.box_of(2) == Box{2, 3});
  CHECK(t.box_of(6) == Box{1, 4});
  CHECK_THROWS_AS(t.box_of(8), std::invalid_argument);
  CHECK(t.column(3) == std::vector<int>{1, 2, 5});
  CHECK(t.column(9).empty());
  CHECK(t.column_word() == std::vector<int>{3, 4, 1, 2, 5, 6, 7});
  CHECK(tab("3,2", "1,3,5/2,4").str() == "1,3,5/2,4");
  CHECK(tab("2,2/2", ".,./1,2").str() == ".,./1,2");
  CHECK(tab("-", "-").size() == 0);
  CHECK(tab("-", "").str() == "-");
  CHECK(SkewTableau().str() == "-");
}

TEST_CASE("tableau parse errors carry positions", "[tableau]") {
  SkewShape s = SkewShape::parse("2,2");
  try {
    SkewTableau::parse(s, "1,2-3,4");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position() == 3);
    CHECK(std::string(e.what()).find("'/'") != std::string::npos);
  }
  try {
    SkewTableau::parse(s, "1,2/3,x");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position() == 6);
    CHECK(std::string(e.what()).find("digit") != std::string::npos);
  }
  CHECK_THROWS_AS(SkewTableau::parse(s, "1,2/3,4,5"), parse_error);  // trailing
  CHECK_THROWS_AS(SkewTableau::parse(s, "1,2/3"), parse_error);
  CHECK_THROWS_AS(SkewTableau::parse(s, "1,2/3,3"), parse_error);  // repeat
  CHECK_THROWS_AS(SkewTableau::parse(s, "1,2/3,5"), parse_error);  // range
  CHECK_THROWS_AS(
      SkewTableau::parse(SkewShape::parse("2/1"), "1,2"),  // '.' required
      parse_error);
  CHECK_THROWS_AS(SkewTableau::parse(SkewShape::parse("-"), "1"), parse_error);
}

TEST_CASE("tableau constructor validates the filling", "[tableau]") {
  SkewShape s = SkewShape::parse("2,1");
  CHECK_NOTHROW(SkewTableau(s, {2, 3, 1}));
  CHECK_THROWS_AS(SkewTableau(s, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SkewTableau(s, {1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SkewTableau(s, {1, 2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(SkewTableau(s, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("standardness predicates", "[tableau]") {
  CHECK(is_standard(tab("3,2", "1,3,5/2,4")));
  CHECK(is_row_standard(tab("2,2", "1,4/2,3")));
  CHECK(is_column_standard(tab("2,2", "1,4/2,3")) == false);
  CHECK(is_column_standard(tab("2,2", "1,3/2,4")));
  CHECK_FALSE(is_row_standard(tab("2,2", "2,1/3,4")));
  CHECK(is_column_standard(tab("3,1/1", ".,3,1/2")));  // rows unconstrained
  CHECK_FALSE(is_standard(tab("3,1/1", ".,3,1/2")));
  CHECK(is_standard(tab("-", "-")));  // vacuous
}

TEST_CASE("permutations act on entries", "[tableau]") {
  SkewTableau t = tab("2,2", "1,3/2,4");
  CHECK(apply(t, Permutation::from_cycles("(1,2)", 4)).str() == "2,3/1,4");
  CHECK(apply(t, Permutation(4)) == t);
  CHECK_THROWS_AS(apply(t, Permutation(3)), std::invalid_argument);
  // composition acts left factor first
  Permutation a = Permutation::from_cycles("(1,2)", 4);
  Permutation b = Permutation::from_cycles("(2,3)", 4);
  CHECK(apply(apply(t, a), b) == apply(t, compose(a, b)));
}

TEST_CASE("column straightening sorts and tracks the sign", "[tableau]") {
  auto [t1, s1] = column_straighten(tab("1,1", "2/1"));
  CHECK(t1.str() == "1/2");
  CHECK(s1 == -1);
  auto [t2, s2] = column_straighten(tab("2,2", "3,4/1,2"));
  CHECK(t2.str() == "1,2/3,4");
  CHECK(s2 == 1);
  SkewTableau fixed = tab("3,2", "1,3,5/2,4");
  auto [t3, s3] = column_straighten(fixed);
  CHECK(t3 == fixed);
  CHECK(s3 == 1);
  // parity oracle: exhaust one column of height 4
  SkewShape col4 = SkewShape::parse("1,1,1,1");
  std::vector<int> vals{1, 2, 3, 4};
  do {
    int inv = 0;
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y)
        if (vals[x] > vals[y]) ++inv;
    auto [sorted, sign] = column_straighten(SkewTableau(col4, vals));
    CHECK(sorted.str() == "1/2/3/4");
    CHECK(sign == (inv % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(vals.begin(), vals.end()));
  CHECK(row_straighten(tab("2,2", "2,1/4,3")).str() == "1,2/3,4");
}

TEST_CASE("column and row census compositions", "[tableau]") {
  SkewTableau t = tab("2,2", "1,3/2,4");
  CHECK(m_shape(t, 0) == Composition{0, 0});
  CHECK(m_shape(t, 2) == Composition{2, 0});
  CHECK(m_shape(t, 3) == Composition{2, 1});
  CHECK(m_shape(t, 4) == Composition{2, 2});
  CHECK(sh_leq(t, 3) == Composition{2, 1});
  CHECK(sh_leq(t, 4) == Composition{2, 2});
  SkewTableau u = tab("3,1/1", ".,1,3/2");
  CHECK(m_shape(u, 2) == Composition{1, 1, 0});
  CHECK(sh_leq(u, 1) == Composition{1, 0});
  CHECK(sh_leq(u, 3) == Composition{2, 1});
}

TEST_CASE("shift rotates the entries cyclically", "[tableau]") {
  SkewTableau t = tab("2,2", "1,3/2,4");
  CHECK(plus_shift(t).str() == "2,4/3,1");
  SkewTableau round = t;
  for (int k = 0; k < 4; ++k) round = plus_shift(round);
  CHECK(round == t);
}

TEST_CASE("distinguished filling of a border strip", "[tableau]") {
  CHECK(canonical_strip_tableau(SkewShape::parse("5,1,1")).str() ==
        "1,4,5,6,7/2/3");
  CHECK(canonical_strip_tableau(SkewShape::parse("5,3,3/2,2")).str() ==
        ".,.,1,6,7/.,.,2/3,4,5");
  // unnormalized input is normalized first
  SkewTableau c = canonical_strip_tableau(SkewShape::parse("4,4,4/4,3"));
  CHECK(c.shape() == SkewShape::parse("4,4/3"));
  CHECK(c.str() == ".,.,.,1/2,3,4,5");
  CHECK(canonical_strip_tableau(SkewShape::parse("1")).str() == "1");
  CHECK_THROWS_AS(canonical_strip_tableau(SkewShape::parse("2,2")),
                  std::invalid_argument);
  CHECK_THROWS_AS(canonical_strip_tableau(SkewShape::parse("-")),
                  std::invalid_argument);
  for (int n = 1; n <= 6; ++n)
    for (const SkewShape& s : skew_shapes_of_size(n)) {
      if (!is_border_strip(s)) continue;
      SkewTableau strip = canonical_strip_tableau(s);
      CHECK(is_standard(strip));
    }
}

TEST_CASE("standard fillings are enumerated in column word order",
          "[tableau]") {
  std::vector<SkewTableau> st =
      standard_tableaux(SkewShape::parse("2,1,1/1"));
  REQUIRE(st.size() == 3);
  CHECK(st[0].str() == ".,3/1/2");
  CHECK(st[1].str() == ".,2/1/3");
  CHECK(st[2].str() == ".,1/2/3");
  for (int n = 0; n <= 6; ++n)
    for (const Partition& la : partitions_of(n)) {
      std::vector<SkewTableau> all = standard_tableaux(SkewShape(la));
      CHECK(Int(static_cast<long>(all.size())) == hook_count(la));
      for (const SkewTableau& t : all) CHECK(is_standard(t));
      CHECK(std::set<SkewTableau>(all.begin(), all.end()).size() ==
            all.size());
      CHECK(std::is_sorted(all.begin(), all.end(),
                           [](const SkewTableau& a, const SkewTableau& b) {
                             return a.column_word() < b.column_word();
                           }));
    }
}

TEST_CASE("column standard fillings are counted by column sizes",
          "[tableau]") {
  for (int n = 1; n <= 5; ++n)
    for (const SkewShape& s : skew_shapes_of_size(n)) {
      std::vector<SkewTableau> cs = column_standard_tableaux(s);
      Int want = factorial(n);
      for (int j = 1; j <= s.cols(); ++j) want /= factorial(s.col_size(j));
      CHECK(Int(static_cast<long>(cs.size())) == want);
      for (const SkewTableau& t : cs) CHECK(is_column_standard(t));
      std::set<SkewTableau> distinct(cs.begin(), cs.end());
      CHECK(distinct.size() == cs.size());
      // every standard filling occurs among the column standard ones
      for (const SkewTableau& t : standard_tableaux(s))
        CHECK(distinct.count(t) == 1);
    }
}
