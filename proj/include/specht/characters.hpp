#pragma once

#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "specht/bigint.hpp"
#include "specht/parallel.hpp"
#include "specht/partition.hpp"
#include "specht/permutation.hpp"
#include "specht/rep_matrix.hpp"
#include "specht/skew_shape.hpp"
#include "specht/straighten.hpp"
#include "specht/tableau.hpp"

namespace specht {

// Thread-safe memo for character values, keyed by "<label>|<class>".
class MnCache {
 public:
  std::optional<Int> find(const std::string& key) {
    std::lock_guard<std::mutex> g(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const std::string& key, const Int& value) {
    std::lock_guard<std::mutex> g(mu_);
    map_.emplace(key, value);
  }

  std::size_t size() {
    std::lock_guard<std::mutex> g(mu_);
    return map_.size();
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::string, Int> map_;
};

inline MnCache& global_mn_cache() {
  static MnCache cache;
  return cache;
}

// Irreducible character value: recursively strips one border strip of length
// equal to the largest remaining cycle, alternating signs by strip height.
inline Int mn_char(const Partition& label, const Partition& type,
                   MnCache& cache) {
  if (label.size() != type.size())
    throw std::invalid_argument(
        "mn_char: partition and cycle type must have equal size");
  if (label.empty()) return 1;
  std::string key = label.str() + "|" + type.str();
  if (auto hit = cache.find(key)) return *hit;

  int k = type.part(1);  // parts are decreasing, so this is the largest
  std::vector<int> rest_parts(type.parts().begin() + 1, type.parts().end());
  Partition rest(std::move(rest_parts));

  Int sum = 0;
  for (const auto& [mu, ht] : border_strips(label, k)) {
    Int term = mn_char(mu, rest, cache);
    sum += (ht % 2 == 0) ? term : -term;
  }
  cache.insert(key, sum);
  return sum;
}

inline Int mn_char(const Partition& label, const Partition& type) {
  return mn_char(label, type, global_mn_cache());
}

// Character of the module of a skew shape at a full cycle, read off the
// shape itself: nonzero exactly when the shape (ignoring empty rows and
// columns) is a border strip, in which case the value is -1 to the height.
inline Int skew_char_ncycle(const SkewShape& shape) {
  if (shape.size() == 0)
    throw std::invalid_argument("skew_char_ncycle: shape must be non-empty");
  SkewShape s = shape.is_normalized() ? shape : shape.normalized();
  if (!is_border_strip(s)) return 0;
  return height(s) % 2 == 0 ? Int(1) : Int(-1);
}

// Character of the module of a skew shape at one permutation, computed as
// the trace of the representing matrix over the standard basis.
inline Int skew_char_trace(const SkewShape& shape, const Permutation& p,
                           StraightenCache& cache) {
  if (p.degree() != shape.size())
    throw std::invalid_argument(
        "skew_char_trace: permutation degree must equal the shape size");
  SpechtBasis basis(shape);
  return trace(representing_matrix(basis, p, cache));
}

inline Int skew_char_trace(const SkewShape& shape, const Partition& type) {
  StraightenCache cache;
  return skew_char_trace(shape, class_representative(type), cache);
}

// Character of the module of a skew shape at cycle type beta, computed from
// irreducible values alone: summing z-weighted products over the classes
// alpha of the inner partition's symmetric group inverts the branching
// identity for characters of a direct product subgroup.
inline Int skew_char(const SkewShape& shape, const Partition& beta,
                     MnCache& cache) {
  if (beta.size() != shape.size())
    throw std::invalid_argument(
        "skew_char: cycle type size must equal the shape size");
  const Partition& la = shape.outer();
  const Partition& mu = shape.inner();
  Rat sum = 0;
  for (const Partition& alpha : partitions_of(mu.size())) {
    Int inner_val = mn_char(mu, alpha, cache);
    if (inner_val == 0) continue;
    Int outer_val = mn_char(la, merge_parts(alpha, beta), cache);
    if (outer_val == 0) continue;
    sum += Rat(inner_val * outer_val) / Rat(centralizer_order(alpha));
  }
  sum.canonicalize();
  if (sum.get_den() != 1)
    throw std::logic_error("skew_char: non-integral value");
  return Int(sum.get_num());
}

inline Int skew_char(const SkewShape& shape, const Partition& beta) {
  return skew_char(shape, beta, global_mn_cache());
}

// A function on the conjugacy classes of one symmetric group, one value per
// class in the order produced by partitions_of(n).
struct ClassFunction {
  int n = 0;
  std::vector<Int> values;
};

inline ClassFunction trivial_class_function(int n) {
  ClassFunction f;
  f.n = n;
  f.values.assign(partitions_of(n).size(), Int(1));
  return f;
}

inline ClassFunction sign_class_function(int n) {
  ClassFunction f;
  f.n = n;
  for (const Partition& rho : partitions_of(n)) {
    int exponent = n - rho.rows();
    f.values.push_back(exponent % 2 == 0 ? Int(1) : Int(-1));
  }
  return f;
}

inline ClassFunction skew_class_function(const SkewShape& shape,
                                         MnCache& cache) {
  ClassFunction f;
  f.n = shape.size();
  for (const Partition& rho : partitions_of(f.n))
    f.values.push_back(skew_char(shape, rho, cache));
  return f;
}

// The standard scalar product of class functions: average over the group,
// i.e. sum over classes weighted by inverse centralizer orders.
inline Rat inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.n != b.n || a.values.size() != b.values.size())
    throw std::invalid_argument(
        "inner_product: class functions must live on the same group");
  Rat sum = 0;
  std::vector<Partition> classes = partitions_of(a.n);
  for (std::size_t j = 0; j < classes.size(); ++j)
    sum += Rat(a.values[j] * b.values[j]) /
           Rat(centralizer_order(classes[j]));
  sum.canonicalize();
  return sum;
}

// Multiplicity of the trivial character in the skew module's character;
// equals 1 when every column of the shape has at most one box, else 0.
inline Rat young_multiplicity(const SkewShape& shape, MnCache& cache) {
  return inner_product(skew_class_function(shape, cache),
                       trivial_class_function(shape.size()));
}

// Multiplicity of the sign character; equals 1 when every row of the shape
// has at most one box, else 0.
inline Rat pieri_multiplicity(const SkewShape& shape, MnCache& cache) {
  return inner_product(skew_class_function(shape, cache),
                       sign_class_function(shape.size()));
}

// The full character table of one symmetric group.  Rows are labelled by
// partitions, columns by cycle types, both in the order produced by
// partitions_of(n).
struct CharacterTable {
  int n = 0;
  std::vector<Partition> labels;
  std::vector<Partition> classes;
  Matrix values;
};

inline CharacterTable char_table(int n, unsigned threads, MnCache& cache) {
  CharacterTable t;
  t.n = n;
  t.labels = partitions_of(n);
  t.classes = t.labels;
  t.values.assign(t.labels.size(),
                  std::vector<Int>(t.classes.size(), Int(0)));
  parallel_chunks(t.labels.size(), threads,
                  [&](std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i)
                      for (std::size_t j = 0; j < t.classes.size(); ++j)
                        t.values[i][j] =
                            mn_char(t.labels[i], t.classes[j], cache);
                  });
  return t;
}

inline CharacterTable char_table(int n) {
  return char_table(n, 1, global_mn_cache());
}

// The same table computed from traces of representing matrices — an
// independent route used to cross-check the recursive rule.
inline CharacterTable char_table_trace(int n, unsigned threads) {
  CharacterTable t;
  t.n = n;
  t.labels = partitions_of(n);
  t.classes = t.labels;
  t.values.assign(t.labels.size(),
                  std::vector<Int>(t.classes.size(), Int(0)));
  std::vector<Permutation> reps;
  reps.reserve(t.classes.size());
  for (const Partition& rho : t.classes)
    reps.push_back(class_representative(rho));
  parallel_chunks(
      t.labels.size(), threads, [&](std::size_t begin, std::size_t end) {
        StraightenCache cache;
        for (std::size_t i = begin; i < end; ++i) {
          SpechtBasis basis{SkewShape(t.labels[i], Partition{})};
          for (std::size_t j = 0; j < t.classes.size(); ++j)
            t.values[i][j] = trace(representing_matrix(basis, reps[j], cache));
        }
      });
  return t;
}

// First orthogonality: distinct rows are orthogonal and each row has norm
// one under the class-weighted product.
inline bool rows_orthogonal(const CharacterTable& t) {
  std::vector<Int> z;
  z.reserve(t.classes.size());
  for (const Partition& rho : t.classes) z.push_back(centralizer_order(rho));
  for (std::size_t i = 0; i < t.labels.size(); ++i)
    for (std::size_t k = i; k < t.labels.size(); ++k) {
      Rat sum = 0;
      for (std::size_t j = 0; j < t.classes.size(); ++j)
        sum += Rat(t.values[i][j] * t.values[k][j]) / Rat(z[j]);
      sum.canonicalize();
      if (sum != Rat(i == k ? 1 : 0)) return false;
    }
  return true;
}

// Second orthogonality: distinct columns are orthogonal and each column's
// square sum is the centralizer order of its class.
inline bool columns_orthogonal(const CharacterTable& t) {
  for (std::size_t j = 0; j < t.classes.size(); ++j)
    for (std::size_t l = j; l < t.classes.size(); ++l) {
      Int sum = 0;
      for (std::size_t i = 0; i < t.labels.size(); ++i)
        sum += t.values[i][j] * t.values[i][l];
      Int expect = j == l ? centralizer_order(t.classes[j]) : Int(0);
      if (sum != expect) return false;
    }
  return true;
}

// Branching through a direct product subgroup: the irreducible value at the
// merged cycle type equals the sum over inner shapes of (inner irreducible
// value) times (skew module trace).  Both sides are computed by independent
// routes: the left by the recursive rule, the right by representing
// matrices.
inline bool restriction_check(const Partition& label, const Partition& alpha,
                              const Partition& beta, MnCache& mn_cache,
                              StraightenCache& st_cache) {
  if (alpha.size() + beta.size() != label.size())
    throw std::invalid_argument(
        "restriction_check: |alpha| + |beta| must equal |label|");
  Int lhs = mn_char(label, merge_parts(alpha, beta), mn_cache);
  Int rhs = 0;
  Permutation rep = class_representative(beta);
  for (const Partition& mu : subpartitions_of(label, alpha.size())) {
    Int inner_val = mn_char(mu, alpha, mn_cache);
    if (inner_val == 0) continue;
    SkewShape shape(label, mu);
    if (shape.size() == 0) {
      rhs += inner_val;  // empty shape: one-dimensional trivial action
      continue;
    }
    SpechtBasis basis(shape);
    rhs += inner_val * trace(representing_matrix(basis, rep, st_cache));
  }
  return lhs == rhs;
}

}  // namespace specht
