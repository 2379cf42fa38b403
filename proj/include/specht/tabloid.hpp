#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "specht/bigint.hpp"
#include "specht/permutation.hpp"
#include "specht/tableau.hpp"

namespace specht {

// A row-equivalence class of fillings, stored as its row-sorted
// representative.
class Tabloid {
 public:
  Tabloid() = default;
  explicit Tabloid(const SkewTableau& t) : rep_(row_straighten(t)) {}

  const SkewTableau& representative() const { return rep_; }

  friend auto operator<=>(const Tabloid&, const Tabloid&) = default;

  std::string str() const { return rep_.str(); }

 private:
  SkewTableau rep_;
};

inline Tabloid tabloid_of(const SkewTableau& t) { return Tabloid(t); }

inline Tabloid apply(const Tabloid& tb, const Permutation& p) {
  return Tabloid(apply(tb.representative(), p));
}

// An integer linear combination of tabloids.
class TabloidVector {
 public:
  TabloidVector() = default;

  void add(const Tabloid& tb, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(tb, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const TabloidVector& other, const Int& scale) {
    if (scale == 0) return;
    for (const auto& [tb, c] : other.terms_) add(tb, c * scale);
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Tabloid, Int>& terms() const { return terms_; }

  Int coefficient(const Tabloid& tb) const {
    auto it = terms_.find(tb);
    return it == terms_.end() ? Int(0) : it->second;
  }

  friend bool operator==(const TabloidVector&, const TabloidVector&) = default;

 private:
  std::map<Tabloid, Int> terms_;
};

inline TabloidVector apply(const TabloidVector& v, const Permutation& p) {
  TabloidVector out;
  for (const auto& [tb, c] : v.terms()) out.add(apply(tb, p), c);
  return out;
}

// The signed sum of the tabloids of all fillings obtained from t by
// rearranging the entries within each column, each term signed by the parity
// of the rearrangement.
inline TabloidVector polytabloid(const SkewTableau& t) {
  const SkewShape& s = t.shape();
  // collect the columns as (boxes, entries)
  std::vector<std::vector<Box>> col_boxes;
  std::vector<std::vector<int>> col_entries;
  for (int j = 1; j <= s.cols(); ++j) {
    int b = s.col_begin(j);
    if (b == 0) continue;
    std::vector<Box> boxes;
    std::vector<int> entries;
    for (int i = b; i <= s.col_end(j); ++i) {
      boxes.push_back({i, j});
      entries.push_back(t.at(i, j));
    }
    col_boxes.push_back(std::move(boxes));
    col_entries.push_back(std::move(entries));
  }

  std::vector<Box> all_boxes = s.boxes();
  auto box_index = [&](Box b) {
    std::size_t k = 0;
    while (all_boxes[k] != b) ++k;
    return k;
  };

  std::vector<int> vals(all_boxes.size(), 0);
  TabloidVector out;
  auto rec = [&](auto&& self, std::size_t c, int sign) -> void {
    if (c == col_boxes.size()) {
      out.add(Tabloid(SkewTableau(s, vals)), Int(sign));
      return;
    }
    // iterate over all arrangements of this column's entry set; the parity
    // of an arrangement is the parity of its index sequence relative to the
    // original top-down order
    const auto& boxes = col_boxes[c];
    const auto& orig = col_entries[c];
    std::vector<int> order(orig.size());
    for (std::size_t k = 0; k < order.size(); ++k)
      order[k] = static_cast<int>(k);
    do {
      int par = 1;
      for (std::size_t x = 0; x < order.size(); ++x)
        for (std::size_t y = x + 1; y < order.size(); ++y)
          if (order[x] > order[y]) par = -par;
      for (std::size_t k = 0; k < boxes.size(); ++k)
        vals[box_index(boxes[k])] = orig[static_cast<std::size_t>(order[k])];
      self(self, c + 1, sign * par);
    } while (std::next_permutation(order.begin(), order.end()));
    return;
  };
  rec(rec, 0, 1);
  return out;
}

}  // namespace specht
