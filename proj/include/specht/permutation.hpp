#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specht/errors.hpp"
#include "specht/partition.hpp"

namespace specht {

// A permutation of {1, ..., n}.  Everything downstream acts on the right, so
// compose(a, b) means "apply a first, then b".
class Permutation {
 public:
  Permutation() = default;  // degree 0

  explicit Permutation(int degree) {
    if (degree < 0)
      throw std::invalid_argument("permutation degree must be >= 0");
    img_.resize(static_cast<std::size_t>(degree));
    std::iota(img_.begin(), img_.end(), 1);
  }

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int v : img_) {
      if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument(
            "permutation images must be a bijection on 1..n");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  // Parses disjoint cycle notation, e.g. "(1,2)(3,4,5,6,7)"; "()" is the
  // identity.  With degree == -1 the degree is the largest element mentioned.
  static Permutation from_cycles(std::string_view text, int degree = -1);

  int degree() const { return static_cast<int>(img_.size()); }

  int operator()(int x) const {
    assert(x >= 1 && x <= degree());
    return img_[static_cast<std::size_t>(x - 1)];
  }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int x = 1; x <= degree(); ++x)
      inv[static_cast<std::size_t>((*this)(x)-1)] = x;
    return Permutation(std::move(inv));
  }

  bool is_identity() const {
    for (int x = 1; x <= degree(); ++x)
      if ((*this)(x) != x) return false;
    return true;
  }

  const std::vector<int>& images() const { return img_; }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  // Canonical cycle text: cycles sorted by least element, each starting at
  // its least element, fixed points omitted; the identity prints as "()".
  std::string cycles_str() const {
    std::string out;
    std::vector<bool> done(img_.size() + 1, false);
    for (int s = 1; s <= degree(); ++s) {
      if (done[static_cast<std::size_t>(s)] || (*this)(s) == s) continue;
      out += '(';
      int x = s;
      bool first = true;
      do {
        if (!first) out += ',';
        out += std::to_string(x);
        done[static_cast<std::size_t>(x)] = true;
        x = (*this)(x);
        first = false;
      } while (x != s);
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

 private:
  std::vector<int> img_;
};

inline Permutation Permutation::from_cycles(std::string_view text,
                                            int degree) {
  if (degree < -1)
    throw std::invalid_argument("from_cycles: degree must be >= 0 or -1");
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen;
  int max_elem = 0;
  std::size_t i = 0;
  if (text.empty())
    throw parse_error("expected '(' at position 0", 0);
  while (i < text.size()) {
    if (text[i] != '(')
      throw parse_error(std::string("expected '(', found '") + text[i] +
                            "' at position " + std::to_string(i),
                        i);
    ++i;
    std::vector<int> cycle;
    if (i < text.size() && text[i] == ')') {
      ++i;  // "()" — empty cycle, contributes nothing
      continue;
    }
    while (true) {
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (i == start) {
        std::string tok(1, i < text.size() ? text[i] : '?');
        throw parse_error("expected a digit, found '" + tok +
                              "' at position " + std::to_string(i),
                          i);
      }
      if (i - start > 9)
        throw parse_error("number too large at position " +
                              std::to_string(start),
                          start);
      int v = 0;
      for (std::size_t k = start; k < i; ++k) v = v * 10 + (text[k] - '0');
      if (v < 1)
        throw parse_error("cycle elements must be >= 1 (position " +
                              std::to_string(start) + ")",
                          start);
      if (degree != -1 && v > degree)
        throw parse_error("cycle element " + std::to_string(v) +
                              " exceeds degree " + std::to_string(degree) +
                              " (position " + std::to_string(start) + ")",
                          start);
      if (static_cast<std::size_t>(v) >= seen.size())
        seen.resize(static_cast<std::size_t>(v) + 1, false);
      if (seen[static_cast<std::size_t>(v)])
        throw parse_error("element " + std::to_string(v) +
                              " appears twice (position " +
                              std::to_string(start) + ")",
                          start);
      seen[static_cast<std::size_t>(v)] = true;
      max_elem = std::max(max_elem, v);
      cycle.push_back(v);
      if (i >= text.size())
        throw parse_error("unterminated cycle at position " +
                              std::to_string(i),
                          i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] != ',')
        throw parse_error(std::string("expected ',' or ')', found '") +
                              text[i] + "' at position " + std::to_string(i),
                          i);
      ++i;
    }
    cycles.push_back(std::move(cycle));
  }
  int n = degree == -1 ? max_elem : degree;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k)
      img[static_cast<std::size_t>(c[k] - 1)] = c[(k + 1) % c.size()];
  return Permutation(std::move(img));
}

// Apply a, then b.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(static_cast<std::size_t>(a.degree()));
  for (int x = 1; x <= a.degree(); ++x)
    img[static_cast<std::size_t>(x - 1)] = b(a(x));
  return Permutation(std::move(img));
}

inline Partition cycle_type(const Permutation& p) {
  std::vector<int> lens;
  std::vector<bool> done(static_cast<std::size_t>(p.degree()) + 1, false);
  for (int s = 1; s <= p.degree(); ++s) {
    if (done[static_cast<std::size_t>(s)]) continue;
    int len = 0, x = s;
    do {
      done[static_cast<std::size_t>(x)] = true;
      x = p(x);
      ++len;
    } while (x != s);
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  return Partition(std::move(lens));
}

inline int sign(const Permutation& p) {
  int transpositions = p.degree() - cycle_type(p).rows();
  return transpositions % 2 == 0 ? 1 : -1;
}

inline Permutation transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b)
    throw std::invalid_argument("transposition: points must be distinct in 1..n");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::swap(img[static_cast<std::size_t>(a - 1)],
            img[static_cast<std::size_t>(b - 1)]);
  return Permutation(std::move(img));
}

// The n-cycle (1,2,...,n): x -> x+1 and n -> 1.
inline Permutation long_cycle(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x)
    img[static_cast<std::size_t>(x - 1)] = x == n ? 1 : x + 1;
  return Permutation(std::move(img));
}

// Canonical class representative: consecutive cycles in decreasing part
// order, e.g. (5,5,2) -> (1,...,5)(6,...,10)(11,12).
inline Permutation class_representative(const Partition& type) {
  int n = type.size();
  std::vector<int> img(static_cast<std::size_t>(n));
  int base = 0;
  for (int part : type.parts()) {
    for (int k = 1; k <= part; ++k)
      img[static_cast<std::size_t>(base + k - 1)] =
          k == part ? base + 1 : base + k + 1;
    base += part;
  }
  return Permutation(std::move(img));
}

}  // namespace specht
