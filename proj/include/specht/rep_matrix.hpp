#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "specht/bigint.hpp"
#include "specht/straighten.hpp"
#include "specht/tableau.hpp"

namespace specht {

// The standard fillings of a shape in column reading word order, with index
// lookup by text form.
class SpechtBasis {
 public:
  explicit SpechtBasis(const SkewShape& shape)
      : shape_(shape), tableaux_(standard_tableaux(shape)) {
    for (std::size_t i = 0; i < tableaux_.size(); ++i)
      index_.emplace(tableaux_[i].str(), i);
  }

  const SkewShape& shape() const { return shape_; }
  std::size_t size() const { return tableaux_.size(); }
  const SkewTableau& tableau(std::size_t i) const { return tableaux_[i]; }
  const std::vector<SkewTableau>& tableaux() const { return tableaux_; }

  std::size_t index_of(const SkewTableau& t) const {
    auto it = index_.find(t.str());
    if (it == index_.end())
      throw std::invalid_argument("index_of: not a standard filling");
    return it->second;
  }

 private:
  SkewShape shape_;
  std::vector<SkewTableau> tableaux_;
  std::map<std::string, std::size_t> index_;
};

using Matrix = std::vector<std::vector<Int>>;

inline Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size(), k = b.size(), m = k == 0 ? 0 : b[0].size();
  Matrix out(n, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < k; ++q) {
      if (a[i][q] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][q] * b[q][j];
    }
  return out;
}

inline Int trace(const Matrix& m) {
  Int t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

// Row i holds the coordinates of (basis filling i acted on by p) over the
// standard fillings, so composition of permutations matches matrix product:
// the matrix of (apply a, then b) is M(a) * M(b).
inline Matrix representing_matrix(const SpechtBasis& basis,
                                  const Permutation& p,
                                  StraightenCache& cache) {
  std::size_t d = basis.size();
  Matrix m(d, std::vector<Int>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    SpechtVector row = straighten(apply(basis.tableau(i), p), cache);
    for (const auto& [t, c] : row.terms()) m[i][basis.index_of(t)] = c;
  }
  return m;
}

// The number of standard fillings.
inline Int dimension(const SkewShape& shape) {
  return Int(static_cast<unsigned long>(standard_tableaux(shape).size()));
}

}  // namespace specht
