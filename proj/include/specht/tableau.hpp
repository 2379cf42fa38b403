#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specht/errors.hpp"
#include "specht/permutation.hpp"
#include "specht/skew_shape.hpp"

namespace specht {

// A bijective filling of a skew shape with n boxes by the entries 1..n.
// Values are stored row-major (top to bottom, left to right).
class SkewTableau {
 public:
  SkewTableau() = default;

  SkewTableau(SkewShape shape, std::vector<int> vals)
      : shape_(std::move(shape)), vals_(std::move(vals)) {
    int n = shape_.size();
    if (static_cast<int>(vals_.size()) != n)
      throw std::invalid_argument("tableau: one entry per box required");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : vals_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("tableau: entries must be exactly 1..n");
      seen[static_cast<std::size_t>(v)] = true;
    }
    row_off_.resize(static_cast<std::size_t>(shape_.rows()) + 1, 0);
    for (int i = 1; i <= shape_.rows(); ++i)
      row_off_[static_cast<std::size_t>(i)] =
          row_off_[static_cast<std::size_t>(i - 1)] + shape_.row_size(i);
  }

  // Text form: rows top to bottom joined by '/', entries comma-separated,
  // each absent (inner) box written as '.', e.g. ".,.,1,6,7/.,.,2/3,4,5".
  // The shape is given separately; the text must agree with it.
  static SkewTableau parse(const SkewShape& shape, std::string_view text);

  const SkewShape& shape() const { return shape_; }
  int size() const { return static_cast<int>(vals_.size()); }

  int at(int i, int j) const {
    assert(shape_.contains(i, j));
    return vals_[static_cast<std::size_t>(row_off_[static_cast<std::size_t>(
                     i - 1)] +
                 (j - shape_.row_begin(i)))];
  }
  int at(Box b) const { return at(b.row, b.col); }

  const std::vector<int>& values() const { return vals_; }

  Box box_of(int value) const {
    for (int i = 1; i <= shape_.rows(); ++i)
      for (int j = shape_.row_begin(i); j <= shape_.row_end(i); ++j)
        if (at(i, j) == value) return {i, j};
    throw std::invalid_argument("box_of: no such entry");
  }

  // Entries of column j, top to bottom.
  std::vector<int> column(int j) const {
    std::vector<int> out;
    int b = shape_.col_begin(j);
    if (b == 0) return out;
    for (int i = b; i <= shape_.col_end(j); ++i) out.push_back(at(i, j));
    return out;
  }

  // Entries read column by column, each column top to bottom.
  std::vector<int> column_word() const {
    std::vector<int> out;
    out.reserve(vals_.size());
    for (int j = 1; j <= shape_.cols(); ++j) {
      int b = shape_.col_begin(j);
      if (b == 0) continue;
      for (int i = b; i <= shape_.col_end(j); ++i) out.push_back(at(i, j));
    }
    return out;
  }

  friend auto operator<=>(const SkewTableau&, const SkewTableau&) = default;

  std::string str() const {
    if (shape_.rows() == 0) return "-";
    std::string out;
    for (int i = 1; i <= shape_.rows(); ++i) {
      if (i > 1) out += '/';
      bool first = true;
      for (int j = 1; j <= shape_.inner().part(i); ++j) {
        if (!first) out += ',';
        out += '.';
        first = false;
      }
      for (int j = shape_.row_begin(i); j <= shape_.row_end(i); ++j) {
        if (!first) out += ',';
        out += std::to_string(at(i, j));
        first = false;
      }
    }
    return out;
  }

 private:
  SkewShape shape_;
  std::vector<int> row_off_;
  std::vector<int> vals_;
};

inline SkewTableau SkewTableau::parse(const SkewShape& shape,
                                      std::string_view text) {
  if (shape.rows() == 0) {
    if (text.empty() || text == "-") return SkewTableau(shape, {});
    throw parse_error("expected \"-\" for the empty tableau", 0);
  }
  std::vector<int> vals;
  vals.reserve(static_cast<std::size_t>(shape.size()));
  std::size_t pos = 0;
  for (int i = 1; i <= shape.rows(); ++i) {
    if (i > 1) {
      if (pos >= text.size() || text[pos] != '/')
        throw parse_error("expected '/' at position " + std::to_string(pos) +
                              " (shape has " + std::to_string(shape.rows()) +
                              " rows)",
                          pos);
      ++pos;
    }
    int dots = shape.inner().part(i);
    int entries = shape.row_size(i);
    for (int k = 0; k < dots + entries; ++k) {
      if (k > 0) {
        if (pos >= text.size() || text[pos] != ',')
          throw parse_error("expected ',' at position " + std::to_string(pos),
                            pos);
        ++pos;
      }
      if (k < dots) {
        if (pos >= text.size() || text[pos] != '.')
          throw parse_error("expected '.' for an absent box at position " +
                                std::to_string(pos),
                            pos);
        ++pos;
      } else {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
          ++pos;
        if (pos == start) {
          std::string tok(1, pos < text.size() ? text[pos] : '?');
          throw parse_error("expected a digit, found '" + tok +
                                "' at position " + std::to_string(pos),
                            pos);
        }
        if (pos - start > 9)
          throw parse_error("number too large at position " +
                                std::to_string(start),
                            start);
        int v = 0;
        for (std::size_t q = start; q < pos; ++q) v = v * 10 + (text[q] - '0');
        vals.push_back(v);
      }
    }
  }
  if (pos != text.size())
    throw parse_error("unexpected trailing text at position " +
                          std::to_string(pos),
                      pos);
  try {
    return SkewTableau(shape, std::move(vals));
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string(e.what()), 0);
  }
}

inline bool is_row_standard(const SkewTableau& t) {
  const SkewShape& s = t.shape();
  for (int i = 1; i <= s.rows(); ++i)
    for (int j = s.row_begin(i); j < s.row_end(i); ++j)
      if (t.at(i, j) >= t.at(i, j + 1)) return false;
  return true;
}

inline bool is_column_standard(const SkewTableau& t) {
  const SkewShape& s = t.shape();
  for (int j = 1; j <= s.cols(); ++j) {
    int b = s.col_begin(j);
    if (b == 0) continue;
    for (int i = b; i < s.col_end(j); ++i)
      if (t.at(i, j) >= t.at(i + 1, j)) return false;
  }
  return true;
}

inline bool is_standard(const SkewTableau& t) {
  return is_row_standard(t) && is_column_standard(t);
}

// Right action: every entry is replaced by its image under p.
inline SkewTableau apply(const SkewTableau& t, const Permutation& p) {
  if (p.degree() != t.size())
    throw std::invalid_argument(
        "apply: permutation degree must equal the tableau size");
  std::vector<int> vals;
  vals.reserve(t.values().size());
  for (int v : t.values()) vals.push_back(p(v));
  return SkewTableau(t.shape(), std::move(vals));
}

struct SignedTableau {
  SkewTableau tableau;
  int sign = 1;
};

// Sorts every column into increasing order and records the sign of the
// permutation that does so.
inline SignedTableau column_straighten(const SkewTableau& t) {
  const SkewShape& s = t.shape();
  std::vector<int> vals = t.values();
  int sign = 1;
  // row_off mirrors the tableau's internal layout
  std::vector<int> row_off(static_cast<std::size_t>(s.rows()) + 1, 0);
  for (int i = 1; i <= s.rows(); ++i)
    row_off[static_cast<std::size_t>(i)] =
        row_off[static_cast<std::size_t>(i - 1)] + s.row_size(i);
  auto idx = [&](int i, int j) {
    return static_cast<std::size_t>(row_off[static_cast<std::size_t>(i - 1)] +
                                    (j - s.row_begin(i)));
  };
  for (int j = 1; j <= s.cols(); ++j) {
    int b = s.col_begin(j);
    if (b == 0) continue;
    int e = s.col_end(j);
    std::vector<int> col;
    for (int i = b; i <= e; ++i) col.push_back(vals[idx(i, j)]);
    // count inversions for the sign, then sort
    for (std::size_t x = 0; x < col.size(); ++x)
      for (std::size_t y = x + 1; y < col.size(); ++y)
        if (col[x] > col[y]) sign = -sign;
    std::sort(col.begin(), col.end());
    for (int i = b; i <= e; ++i)
      vals[idx(i, j)] = col[static_cast<std::size_t>(i - b)];
  }
#ifdef SPECHT_MUTATION_SIGN_FLIP
  // Fault-injection hook: a build with this macro defined must be caught by
  // the verification suites (see the mutation smoke test).
  sign = -sign;
#endif
  return {SkewTableau(s, std::move(vals)), sign};
}

// Sorts every row into increasing order.
inline SkewTableau row_straighten(const SkewTableau& t) {
  const SkewShape& s = t.shape();
  std::vector<int> vals = t.values();
  std::size_t off = 0;
  for (int i = 1; i <= s.rows(); ++i) {
    std::size_t len = static_cast<std::size_t>(s.row_size(i));
    std::sort(vals.begin() + static_cast<std::ptrdiff_t>(off),
              vals.begin() + static_cast<std::ptrdiff_t>(off + len));
    off += len;
  }
  return SkewTableau(s, std::move(vals));
}

// Column counts of the entries <= m: one count per column 1..cols.
inline Composition m_shape(const SkewTableau& t, int m) {
  const SkewShape& s = t.shape();
  std::vector<int> counts(static_cast<std::size_t>(s.cols()), 0);
  for (int j = 1; j <= s.cols(); ++j) {
    int b = s.col_begin(j);
    if (b == 0) continue;
    for (int i = b; i <= s.col_end(j); ++i)
      if (t.at(i, j) <= m) ++counts[static_cast<std::size_t>(j - 1)];
  }
  return Composition(std::move(counts));
}

// Row counts of the entries <= y: one count per row 1..rows.
inline Composition sh_leq(const SkewTableau& t, int y) {
  const SkewShape& s = t.shape();
  std::vector<int> counts(static_cast<std::size_t>(s.rows()), 0);
  for (int i = 1; i <= s.rows(); ++i)
    for (int j = s.row_begin(i); j <= s.row_end(i); ++j)
      if (t.at(i, j) <= y) ++counts[static_cast<std::size_t>(i - 1)];
  return Composition(std::move(counts));
}

// Replaces every entry x by x+1, and n by 1.
inline SkewTableau plus_shift(const SkewTableau& t) {
  return apply(t, long_cycle(t.size()));
}

// The distinguished standard filling of a border strip: the boxes with a box
// directly below them get 1..z top to bottom (one per row above the last),
// the remaining boxes — the bottom box of each column — get z+1..n left to
// right.  An unnormalized shape is normalized first.
inline SkewTableau canonical_strip_tableau(const SkewShape& shape) {
  SkewShape s = shape.is_normalized() ? shape : shape.normalized();
  if (!is_border_strip(s))
    throw std::invalid_argument(
        "canonical_strip_tableau: shape must be a border strip");
  int n = s.size();
  std::vector<std::vector<int>> grid(
      static_cast<std::size_t>(s.rows()) + 1,
      std::vector<int>(static_cast<std::size_t>(s.cols()) + 1, 0));
  int next = 1;
  for (int i = 1; i <= s.rows(); ++i)
    for (int j = s.row_begin(i); j <= s.row_end(i); ++j)
      if (s.contains(i + 1, j))
        grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            next++;
  for (int j = 1; j <= s.cols(); ++j) {
    int i = s.col_end(j);
    grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = next++;
  }
  assert(next == n + 1);
  (void)n;
  std::vector<int> vals;
  for (int i = 1; i <= s.rows(); ++i)
    for (int j = s.row_begin(i); j <= s.row_end(i); ++j)
      vals.push_back(
          grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return SkewTableau(s, std::move(vals));
}

// All standard fillings, enumerated by placing 1..n one at a time into boxes
// whose left and upper neighbours (when present) are already filled, then
// sorted lexicographically by column reading word.
inline std::vector<SkewTableau> standard_tableaux(const SkewShape& s) {
  std::vector<Box> boxes = s.boxes();
  int n = static_cast<int>(boxes.size());
  std::vector<int> vals(static_cast<std::size_t>(n), 0);
  std::vector<SkewTableau> out;
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      out.emplace_back(s, vals);
      return;
    }
    for (int b = 0; b < n; ++b) {
      if (vals[static_cast<std::size_t>(b)] != 0) continue;
      Box box = boxes[static_cast<std::size_t>(b)];
      bool ready = true;
      for (Box nb : {Box{box.row, box.col - 1}, Box{box.row - 1, box.col}}) {
        if (!s.contains(nb)) continue;
        // row-major index of the neighbour
        int ni = 0;
        while (boxes[static_cast<std::size_t>(ni)] != nb) ++ni;
        if (vals[static_cast<std::size_t>(ni)] == 0) ready = false;
      }
      if (!ready) continue;
      vals[static_cast<std::size_t>(b)] = k;
      self(self, k + 1);
      vals[static_cast<std::size_t>(b)] = 0;
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(),
            [](const SkewTableau& a, const SkewTableau& b) {
              return a.column_word() < b.column_word();
            });
  return out;
}

// All column-standard fillings: every way to distribute 1..n over the
// columns (each column sorted increasingly), columns filled left to right
// with index-ascending subset choices.
inline std::vector<SkewTableau> column_standard_tableaux(const SkewShape& s) {
  int n = s.size();
  std::vector<std::vector<Box>> cols;
  for (int j = 1; j <= s.cols(); ++j) {
    int b = s.col_begin(j);
    if (b == 0) continue;
    std::vector<Box> col;
    for (int i = b; i <= s.col_end(j); ++i) col.push_back({i, j});
    cols.push_back(std::move(col));
  }
  std::vector<std::vector<int>> grid(
      static_cast<std::size_t>(s.rows()) + 1,
      std::vector<int>(static_cast<std::size_t>(s.cols()) + 1, 0));
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) pool[static_cast<std::size_t>(v - 1)] = v;
  std::vector<SkewTableau> out;
  auto emit = [&]() {
    std::vector<int> vals;
    vals.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= s.rows(); ++i)
      for (int j = s.row_begin(i); j <= s.row_end(i); ++j)
        vals.push_back(
            grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    out.emplace_back(s, std::move(vals));
  };
  // For column c, choose an increasing subset of avail of the column's size
  // (by index mask), write it down the column, and recurse on the rest.
  auto fill = [&](auto&& self, std::size_t c,
                  const std::vector<int>& avail) -> void {
    if (c == cols.size()) {
      emit();
      return;
    }
    const auto& col = cols[c];
    std::size_t need = col.size();
    std::vector<std::size_t> picked;
    auto choose = [&](auto&& inner, std::size_t from) -> void {
      if (picked.size() == need) {
        for (std::size_t k = 0; k < need; ++k)
          grid[static_cast<std::size_t>(col[k].row)]
              [static_cast<std::size_t>(col[k].col)] = avail[picked[k]];
        std::vector<int> rest;
        rest.reserve(avail.size() - need);
        std::size_t pi = 0;
        for (std::size_t k = 0; k < avail.size(); ++k) {
          if (pi < need && picked[pi] == k)
            ++pi;
          else
            rest.push_back(avail[k]);
        }
        self(self, c + 1, rest);
        return;
      }
      for (std::size_t k = from;
           k < avail.size() && avail.size() - k >= need - picked.size(); ++k) {
        picked.push_back(k);
        inner(inner, k + 1);
        picked.pop_back();
      }
    };
    choose(choose, 0);
  };
  fill(fill, 0, pool);
  return out;
}

}  // namespace specht
