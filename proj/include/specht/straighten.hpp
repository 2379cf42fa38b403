#pragma once

#include <list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "specht/bigint.hpp"
#include "specht/garnir.hpp"
#include "specht/tableau.hpp"
#include "specht/tabloid.hpp"

namespace specht {

// Orders fillings by shape, then lexicographically by column reading word.
struct ColumnWordLess {
  bool operator()(const SkewTableau& a, const SkewTableau& b) const {
    if (a.shape() != b.shape()) return a.shape() < b.shape();
    return a.column_word() < b.column_word();
  }
};

// An integer linear combination of standard fillings, iterated in column
// reading word order.
class SpechtVector {
 public:
  SpechtVector() = default;

  void add(const SkewTableau& t, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const SpechtVector& other, const Int& scale) {
    if (scale == 0) return;
    for (const auto& [t, c] : other.terms_) add(t, c * scale);
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<SkewTableau, Int, ColumnWordLess>& terms() const {
    return terms_;
  }

  Int coefficient(const SkewTableau& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Int(0) : it->second;
  }

  friend bool operator==(const SpechtVector&, const SpechtVector&) = default;

 private:
  std::map<SkewTableau, Int, ColumnWordLess> terms_;
};

// Bounded memo for straightening results, keyed by the text form of a
// column-sorted filling.  Lookup returns a copy so entries may be evicted
// freely.  Not thread safe: use one cache per worker thread.
class StraightenCache {
 public:
  explicit StraightenCache(std::size_t capacity = 1 << 18)
      : capacity_(capacity) {}

  std::optional<SpechtVector> find(const std::string& key) {
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    order_.splice(order_.begin(), order_, it->second.second);
    return it->second.first;
  }

  void insert(const std::string& key, const SpechtVector& value) {
    if (map_.find(key) != map_.end()) return;
    order_.push_front(key);
    map_.emplace(key, std::make_pair(value, order_.begin()));
    while (map_.size() > capacity_) {
      map_.erase(order_.back());
      order_.pop_back();
    }
  }

  std::size_t size() const { return map_.size(); }

 private:
  std::size_t capacity_;
  std::list<std::string> order_;  // most recently used first
  std::unordered_map<std::string,
                     std::pair<SpechtVector, std::list<std::string>::iterator>>
      map_;
};

namespace detail {

// Straightens a column-sorted filling.  Recursion: if the filling has a row
// descent, rewrite it through the exchange relation at the earliest descent
// (row-major order) and recurse; every exchanged filling is strictly larger
// in the column order, so this terminates.
inline SpechtVector straighten_column_sorted(const SkewTableau& ts,
                                             StraightenCache& cache) {
  std::string key = ts.str();
  if (auto hit = cache.find(key)) return *hit;

  SpechtVector result;
  if (is_row_standard(ts)) {
    result.add(ts, Int(1));
  } else {
    const SkewShape& s = ts.shape();
    Box pivot{0, 0};
    for (int i = 1; i <= s.rows() && pivot.row == 0; ++i)
      for (int j = s.row_begin(i); j < s.row_end(i); ++j)
        if (ts.at(i, j) > ts.at(i, j + 1)) {
          pivot = {i, j};
          break;
        }
    GarnirData gd = garnir_data(ts, pivot);
    for (const GarnirSwap& sw : gd.swaps) {
      auto [next, eps] = column_straighten(apply(ts, sw.sigma));
      SpechtVector part = straighten_column_sorted(next, cache);
      result.add_scaled(part, Int(-sw.sign * eps));
    }
  }
  cache.insert(key, result);
  return result;
}

}  // namespace detail

// Expresses the polytabloid of an arbitrary filling as an integer
// combination of polytabloids of standard fillings.
inline SpechtVector straighten(const SkewTableau& t, StraightenCache& cache) {
  auto [ts, eps] = column_straighten(t);
  SpechtVector inner = detail::straighten_column_sorted(ts, cache);
  if (eps == 1) return inner;
  SpechtVector out;
  out.add_scaled(inner, Int(eps));
  return out;
}

inline SpechtVector straighten(const SkewTableau& t) {
  StraightenCache cache;
  return straighten(t, cache);
}

// Evaluates a combination of standard fillings into the tabloid basis.
inline TabloidVector expand(const SpechtVector& v) {
  TabloidVector out;
  for (const auto& [t, c] : v.terms()) out.add_scaled(polytabloid(t), c);
  return out;
}

// Applies a permutation to every term and re-expresses the result over
// standard fillings.
inline SpechtVector act(const SpechtVector& v, const Permutation& p,
                        StraightenCache& cache) {
  SpechtVector out;
  for (const auto& [t, c] : v.terms())
    out.add_scaled(straighten(apply(t, p), cache), c);
  return out;
}

}  // namespace specht
