#pragma once

#include <stdexcept>

#include "specht/partition.hpp"
#include "specht/tableau.hpp"

namespace specht {

// Column order on fillings of one shape: a > b when the greatest entry that
// sits in different columns of a and b sits strictly further right in a.
// Returns false for equal fillings.
inline bool column_order_greater(const SkewTableau& a, const SkewTableau& b) {
  if (a.shape() != b.shape())
    throw std::invalid_argument("column_order_greater: shapes must agree");
  int n = a.size();
  for (int v = n; v >= 1; --v) {
    int ca = a.box_of(v).col;
    int cb = b.box_of(v).col;
    if (ca != cb) return ca > cb;
  }
  return false;
}

// Dominance order on row-standard fillings of one shape: a dominates b when
// for every y the row counts of entries <= y in a dominate those in b.
// The order is partial; dominates_tableau(a, b) and dominates_tableau(b, a)
// may both be false.
inline bool dominates_tableau(const SkewTableau& a, const SkewTableau& b) {
  if (a.shape() != b.shape())
    throw std::invalid_argument("dominates_tableau: shapes must agree");
  int n = a.size();
  for (int y = 1; y <= n; ++y)
    if (!dominates(sh_leq(a, y), sh_leq(b, y))) return false;
  return true;
}

}  // namespace specht
