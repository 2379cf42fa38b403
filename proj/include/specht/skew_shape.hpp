#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specht/errors.hpp"
#include "specht/partition.hpp"

namespace specht {

// A skew shape outer/inner with inner contained in outer.  Row i occupies
// columns inner_i+1 .. outer_i, so both rows and columns of the diagram are
// contiguous runs of boxes.
class SkewShape {
 public:
  SkewShape() = default;

  explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}

  SkewShape(Partition outer, Partition inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!is_subpartition(inner_, outer_))
      throw std::invalid_argument(
          "skew shape: inner partition must be contained in the outer one");
  }

  // Text form "4,4,4/4,3"; a straight shape may omit the inner part or write
  // it as "-" ("4,4,4" or "4,4,4/-").  The empty shape is "-".
  static SkewShape parse(std::string_view text) {
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
      return SkewShape(Partition::parse(text));
    Partition outer = Partition::parse(text.substr(0, slash));
    Partition inner = Partition::parse(text.substr(slash + 1), slash + 1);
    try {
      return SkewShape(std::move(outer), std::move(inner));
    } catch (const std::invalid_argument& e) {
      throw parse_error(std::string(e.what()) + " in \"" + std::string(text) +
                            "\"",
                        slash + 1);
    }
  }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }

  int size() const { return outer_.size() - inner_.size(); }
  int rows() const { return outer_.rows(); }
  int cols() const { return outer_.part(1); }
  bool empty() const { return size() == 0; }

  int row_begin(int i) const { return inner_.part(i) + 1; }
  int row_end(int i) const { return outer_.part(i); }
  int row_size(int i) const {
    return std::max(0, row_end(i) - row_begin(i) + 1);
  }

  bool contains(int i, int j) const {
    return i >= 1 && i <= rows() && j >= row_begin(i) && j <= row_end(i);
  }
  bool contains(Box b) const { return contains(b.row, b.col); }

  // First/last row of column j; 0 when the column is empty.
  int col_begin(int j) const {
    for (int i = 1; i <= rows(); ++i)
      if (contains(i, j)) return i;
    return 0;
  }
  int col_end(int j) const {
    for (int i = rows(); i >= 1; --i)
      if (contains(i, j)) return i;
    return 0;
  }
  int col_size(int j) const {
    int b = col_begin(j);
    return b == 0 ? 0 : col_end(j) - b + 1;
  }

  std::vector<Box> boxes() const {
    std::vector<Box> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i = 1; i <= rows(); ++i)
      for (int j = row_begin(i); j <= row_end(i); ++j) out.push_back({i, j});
    return out;
  }

  // Normalized means no empty rows and no empty columns.
  bool is_normalized() const {
    for (int i = 1; i <= rows(); ++i)
      if (row_size(i) == 0) return false;
    for (int j = 1; j <= cols(); ++j)
      if (col_size(j) == 0) return false;
    return true;
  }

  // Deletes empty rows and columns, shifting the remaining boxes up and left.
  // Rows and columns of a skew diagram are contiguous, so the result is again
  // a skew shape of the same size.
  SkewShape normalized() const {
    std::vector<bool> col_used(static_cast<std::size_t>(cols()) + 1, false);
    for (int i = 1; i <= rows(); ++i)
      for (int j = row_begin(i); j <= row_end(i); ++j)
        col_used[static_cast<std::size_t>(j)] = true;
    std::vector<int> new_col(static_cast<std::size_t>(cols()) + 1, 0);
    int next = 0;
    for (int j = 1; j <= cols(); ++j)
      if (col_used[static_cast<std::size_t>(j)])
        new_col[static_cast<std::size_t>(j)] = ++next;
    std::vector<int> nouter, ninner;
    for (int i = 1; i <= rows(); ++i) {
      if (row_size(i) == 0) continue;
      nouter.push_back(new_col[static_cast<std::size_t>(row_end(i))]);
      ninner.push_back(new_col[static_cast<std::size_t>(row_begin(i))] - 1);
    }
    return SkewShape(Partition(std::move(nouter)), Partition(std::move(ninner)));
  }

  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

  std::string str() const {
    if (outer_.empty()) return "-";
    if (inner_.empty()) return outer_.str();
    return outer_.str() + "/" + inner_.str();
  }

 private:
  Partition outer_, inner_;
};

// Number of non-empty rows minus one.  Undefined (throws) on the empty shape.
inline int height(const SkewShape& s) {
  if (s.empty())
    throw std::invalid_argument("height: shape must be non-empty");
  int occupied = 0;
  for (int i = 1; i <= s.rows(); ++i)
    if (s.row_size(i) > 0) ++occupied;
  return occupied - 1;
}

// Connectivity through shared edges (not corners).  Vacuously true for the
// empty shape and singletons.
inline bool is_connected(const SkewShape& s) {
  std::vector<Box> bs = s.boxes();
  if (bs.size() <= 1) return true;
  std::set<Box> todo(bs.begin() + 1, bs.end());
  std::vector<Box> stack{bs.front()};
  while (!stack.empty()) {
    Box b = stack.back();
    stack.pop_back();
    for (Box nb : {Box{b.row - 1, b.col}, Box{b.row + 1, b.col},
                   Box{b.row, b.col - 1}, Box{b.row, b.col + 1}}) {
      auto it = todo.find(nb);
      if (it != todo.end()) {
        todo.erase(it);
        stack.push_back(nb);
      }
    }
  }
  return todo.empty();
}

// A border strip is non-empty, edge-connected, and contains no 2x2 block.
inline bool is_border_strip(const SkewShape& s) {
  if (s.empty()) return false;
  for (int i = 1; i < s.rows(); ++i)
    for (int j = s.row_begin(i); j < s.row_end(i); ++j)
      if (s.contains(i, j) && s.contains(i, j + 1) && s.contains(i + 1, j) &&
          s.contains(i + 1, j + 1))
        return false;
  return is_connected(s);
}

// At most one box per row.
inline bool is_vertical_strip(const SkewShape& s) {
  for (int i = 1; i <= s.rows(); ++i)
    if (s.row_size(i) > 1) return false;
  return true;
}

// At most one box per column.
inline bool is_horizontal_strip(const SkewShape& s) {
  for (int j = 1; j <= s.cols(); ++j)
    if (s.col_size(j) > 1) return false;
  return true;
}

// All ways to remove a border strip of exactly n boxes from la, as pairs
// (remaining partition, strip height), sorted lexicographically decreasing by
// the remaining partition.
//
// Uses first-column hook lengths: with beta_i = la_i + (rows - i), removable
// strips of size n correspond to beta_i with beta_i - n >= 0 not already in
// the beta set, and the strip spans one row per beta value displaced.
inline std::vector<std::pair<Partition, int>> border_strips(
    const Partition& la, int n) {
  if (n < 1) throw std::invalid_argument("border_strips: n must be >= 1");
  std::vector<std::pair<Partition, int>> out;
  if (n > la.size()) return out;
  int rows = la.rows();
  std::vector<int> beta(static_cast<std::size_t>(rows));
  for (int i = 1; i <= rows; ++i)
    beta[static_cast<std::size_t>(i - 1)] = la.part(i) + (rows - i);
  for (int i = 0; i < rows; ++i) {
    int target = beta[static_cast<std::size_t>(i)] - n;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    std::vector<int> nb = beta;
    nb[static_cast<std::size_t>(i)] = target;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    std::vector<int> mu(static_cast<std::size_t>(rows));
    for (int k = 1; k <= rows; ++k)
      mu[static_cast<std::size_t>(k - 1)] =
          nb[static_cast<std::size_t>(k - 1)] - (rows - k);
    int ht = 0;
    for (int k = 0; k < rows; ++k)
      if (k != i && beta[static_cast<std::size_t>(k)] > target &&
          beta[static_cast<std::size_t>(k)] < beta[static_cast<std::size_t>(i)])
        ++ht;
    out.emplace_back(Partition(std::move(mu)), ht);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

// All normalized skew shapes with exactly n boxes, in a deterministic order
// (lexicographic by outer then inner partition).  Rows are generated top-down
// as intervals [a_i+1, b_i]; the shape is normalized exactly when every row
// is non-empty, a_i <= b_{i+1} for consecutive rows, and the last a is 0.
inline std::vector<SkewShape> skew_shapes_of_size(int n) {
  if (n < 0)
    throw std::invalid_argument("skew_shapes_of_size: n must be >= 0");
  std::vector<SkewShape> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> as, bs;
  auto rec = [&](auto&& self, bool first, int prev_a, int prev_b,
                 int rem) -> void {
    // Choose the next row's columns a+1..b.  Below the first row the bounds
    // are: b <= prev_b and a <= prev_a (partition monotonicity), and
    // b >= prev_a so no column between the rows is left empty.
    int b_hi = first ? rem : std::min(prev_b, prev_a + rem);
    int b_lo = first ? 1 : std::max(1, prev_a);
    for (int b = b_hi; b >= b_lo; --b) {
      int a_hi = first ? b - 1 : std::min(prev_a, b - 1);
      for (int a = std::max(0, b - rem); a <= a_hi; ++a) {
        as.push_back(a);
        bs.push_back(b);
        int left = rem - (b - a);
        if (left == 0 && a == 0)
          out.emplace_back(Partition(std::vector<int>(bs)),
                           Partition(std::vector<int>(as)));
        else if (left > 0)
          self(self, false, a, b, left);
        as.pop_back();
        bs.pop_back();
      }
    }
  };
  rec(rec, true, 0, 0, n);
  std::sort(out.begin(), out.end(), [](const SkewShape& x, const SkewShape& y) {
    if (x.outer() != y.outer()) return x.outer() < y.outer();
    return x.inner() < y.inner();
  });
  return out;
}

}  // namespace specht
