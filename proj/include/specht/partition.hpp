#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specht/bigint.hpp"
#include "specht/errors.hpp"

namespace specht {

namespace detail {

// Parses a comma-separated list of decimal numbers ("4,4,4").  Shared by the
// partition and composition parsers; `offset` shifts reported positions when
// the list is embedded in a larger string.
inline std::vector<int> parse_int_list(std::string_view text,
                                       std::size_t offset = 0) {
  if (text.empty())
    throw parse_error("expected a number at position " + std::to_string(offset),
                      offset);
  std::vector<int> out;
  std::size_t i = 0;
  while (true) {
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == start) {
      std::string tok(1, i < text.size() ? text[i] : '?');
      throw parse_error("expected a digit, found '" + tok + "' at position " +
                            std::to_string(offset + i),
                        offset + i);
    }
    if (i - start > 9)
      throw parse_error("number too large at position " +
                            std::to_string(offset + start),
                        offset + start);
    int v = 0;
    for (std::size_t k = start; k < i; ++k) v = v * 10 + (text[k] - '0');
    out.push_back(v);
    if (i == text.size()) break;
    if (text[i] != ',')
      throw parse_error(std::string("expected ',', found '") + text[i] +
                            "' at position " + std::to_string(offset + i),
                        offset + i);
    ++i;
    if (i == text.size())
      throw parse_error("trailing ',' at position " +
                            std::to_string(offset + i - 1),
                        offset + i - 1);
  }
  return out;
}

}  // namespace detail

// A partition: weakly decreasing positive parts.  Trailing zeros are accepted
// on construction but never stored, so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  // Text form "4,4,4"; the empty partition is "-".
  static Partition parse(std::string_view text, std::size_t offset = 0) {
    if (text == "-") return Partition{};
    std::vector<int> parts = detail::parse_int_list(text, offset);
    try {
      return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
      throw parse_error(std::string(e.what()) + " in \"" + std::string(text) +
                            "\"",
                        offset);
    }
  }

  int rows() const { return static_cast<int>(parts_.size()); }

  // 1-based part access; rows beyond the last are 0.
  int part(int i) const {
    return (i >= 1 && i <= rows()) ? parts_[static_cast<std::size_t>(i - 1)]
                                   : 0;
  }

  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  friend auto operator<=>(const Partition&, const Partition&) = default;

  std::string str() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

 private:
  std::vector<int> parts_;
};

// A composition: non-negative parts, zeros allowed anywhere and preserved.
class Composition {
 public:
  Composition() = default;

  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 0)
        throw std::invalid_argument("composition parts must be non-negative");
  }

  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  int length() const { return static_cast<int>(parts_.size()); }

  // Index of the last nonzero part; 0 when all parts vanish.
  int ell() const {
    for (int i = length(); i >= 1; --i)
      if (parts_[static_cast<std::size_t>(i - 1)] != 0) return i;
    return 0;
  }

  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)]
                                     : 0;
  }

  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  const std::vector<int>& parts() const { return parts_; }

  friend auto operator<=>(const Composition&, const Composition&) = default;

  std::string str() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

 private:
  std::vector<int> parts_;
};

// 1-based matrix coordinates; ordered row-major.
struct Box {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

inline Partition conjugate(const Partition& la) {
  std::vector<int> cols;
  cols.reserve(static_cast<std::size_t>(la.part(1)));
  for (int j = 1; j <= la.part(1); ++j) {
    int count = 0;
    for (int i = 1; i <= la.rows(); ++i)
      if (la.part(i) >= j) ++count;
    cols.push_back(count);
  }
  return Partition(std::move(cols));
}

// True iff mu fits inside la row by row.
inline bool is_subpartition(const Partition& mu, const Partition& la) {
  for (int i = 1; i <= mu.rows(); ++i)
    if (mu.part(i) > la.part(i)) return false;
  return true;
}

// Dominance order: d dominates g iff d's nonzero support is no longer and
// every prefix sum of d (up to its last nonzero part) weakly exceeds the
// matching prefix sum of g.  Only defined between compositions of equal size.
inline bool dominates(const Composition& d, const Composition& g) {
  if (d.size() != g.size())
    throw std::invalid_argument(
        "dominates: compositions must have equal size");
  int ld = d.ell();
  if (ld > g.ell()) return false;
  long long pd = 0, pg = 0;
  for (int k = 1; k <= ld; ++k) {
    pd += d.part(k);
    pg += g.part(k);
    if (pd < pg) return false;
  }
  return true;
}

// All partitions of n in reverse-lexicographic order:
// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxp) -> void {
    if (rem == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// All subpartitions of la with exactly m boxes, lexicographically decreasing.
inline std::vector<Partition> subpartitions_of(const Partition& la, int m) {
  std::vector<Partition> out;
  if (m < 0 || m > la.size()) return out;
  // suffix[i] = boxes available in rows i..rows
  std::vector<int> suffix(static_cast<std::size_t>(la.rows()) + 2, 0);
  for (int i = la.rows(); i >= 1; --i)
    suffix[static_cast<std::size_t>(i)] =
        suffix[static_cast<std::size_t>(i + 1)] + la.part(i);
  std::vector<int> cur;
  auto rec = [&](auto&& self, int i, int rem, int prev) -> void {
    if (rem == 0) {
      out.push_back(Partition(cur));
      return;
    }
    if (i > la.rows() || rem > suffix[static_cast<std::size_t>(i)]) return;
    int hi = std::min({prev, la.part(i), rem});
    for (int p = hi; p >= 1; --p) {
      cur.push_back(p);
      self(self, i + 1, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, 1, m, m);
  return out;
}

// Order of the centralizer of a permutation of cycle type `type` in the full
// symmetric group: the product over distinct part sizes i of i^{m_i} * m_i!.
inline Int centralizer_order(const Partition& type) {
  std::map<int, int> mult;
  for (int p : type.parts()) ++mult[p];
  Int z = 1;
  for (const auto& [len, m] : mult) {
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(len),
                  static_cast<unsigned long>(m));
    z *= pw * factorial(m);
  }
  return z;
}

// Multiset union of two cycle types, sorted back into a partition.
inline Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

}  // namespace specht
