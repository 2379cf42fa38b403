#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "specht/permutation.hpp"
#include "specht/tableau.hpp"

namespace specht {

// One exchange move: a product of k disjoint transpositions, each swapping
// an entry of X (column j, weakly below the pivot) with an entry of Y
// (column j+1, weakly above the box right of the pivot), together with its
// sign (-1)^k.
struct GarnirSwap {
  Permutation sigma;
  int sign = 1;
};

struct GarnirData {
  std::vector<int> xs;  // column-j entries in rows >= pivot row, increasing
  std::vector<int> ys;  // column-(j+1) entries in rows <= pivot row, increasing
  std::vector<GarnirSwap> swaps;  // all non-trivial exchanges
};

// Builds the exchange relation for the pivot box (i, j) of t: X is the set
// of entries of column j weakly below the pivot, Y the set of entries of
// column j+1 weakly above row i.  The relation states that the signed sum of
// the polytabloids of t and of all its exchanges t*sigma vanishes, i.e.
//
//   e(t) = - sum over swaps of  sign(sigma) * e(t . sigma).
//
// Requires both (i, j) and (i, j+1) to be boxes of the shape.
inline GarnirData garnir_data(const SkewTableau& t, Box pivot) {
  const SkewShape& s = t.shape();
  int i = pivot.row, j = pivot.col;
  if (!s.contains(i, j) || !s.contains(i, j + 1))
    throw std::invalid_argument(
        "garnir_data: pivot and its right neighbour must be boxes");
  GarnirData out;
  for (int r = i; r <= s.col_end(j); ++r) out.xs.push_back(t.at(r, j));
  for (int r = s.col_begin(j + 1); r <= i; ++r)
    out.ys.push_back(t.at(r, j + 1));
  std::sort(out.xs.begin(), out.xs.end());
  std::sort(out.ys.begin(), out.ys.end());

  int n = t.size();
  std::size_t nx = out.xs.size(), ny = out.ys.size();
  std::vector<std::size_t> xi, yi;
  // choose k indices into xs and k into ys, both increasing, k >= 1
  auto choose_y = [&](auto&& self, std::size_t from) -> void {
    if (yi.size() == xi.size()) {
      std::vector<int> img(static_cast<std::size_t>(n));
      for (int v = 1; v <= n; ++v)
        img[static_cast<std::size_t>(v - 1)] = v;
      for (std::size_t k = 0; k < xi.size(); ++k) {
        int x = out.xs[xi[k]], y = out.ys[yi[k]];
        std::swap(img[static_cast<std::size_t>(x - 1)],
                  img[static_cast<std::size_t>(y - 1)]);
      }
      out.swaps.push_back(
          {Permutation(std::move(img)), xi.size() % 2 == 0 ? 1 : -1});
      return;
    }
    for (std::size_t q = from; q < ny; ++q) {
      yi.push_back(q);
      self(self, q + 1);
      yi.pop_back();
    }
  };
  auto choose_x = [&](auto&& self, std::size_t from, std::size_t k) -> void {
    if (k == 0) {
      choose_y(choose_y, 0);
      return;
    }
    for (std::size_t q = from; q + k <= nx; ++q) {
      xi.push_back(q);
      self(self, q + 1, k - 1);
      xi.pop_back();
    }
  };
  std::size_t kmax = std::min(nx, ny);
  for (std::size_t k = 1; k <= kmax; ++k) choose_x(choose_x, 0, k);
  return out;
}

}  // namespace specht
