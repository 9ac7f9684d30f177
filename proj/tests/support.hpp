#pragma once

#include <string>
#include <vector>

#include "qha/borel.hpp"
#include "qha/errors.hpp"
#include "qha/io.hpp"
#include "qha/resolution.hpp"

namespace qha::test {

inline Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Scalar(x));
  return v;
}

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec> rs;
  int cols = 0;
  for (auto r : rows) {
    rs.push_back(vec(r));
    cols = static_cast<int>(r.size());
  }
  return Matrix::from_rows(rs, cols);
}

inline AlgebraPtr algebra(FinDimAlgebra a) { return std::make_shared<const FinDimAlgebra>(std::move(a)); }

// Linear quiver 1 -> 2 -> ... -> n, arrows a1, a2, ...
inline Quiver line_quiver(int n) {
  Quiver q;
  q.n = n;
  for (int i = 0; i + 1 < n; ++i) q.arrows.push_back({i, i + 1, "a" + std::to_string(i + 1)});
  return q;
}

inline Relation monomial_relation(std::vector<int> arrows) {
  return {{Scalar(1), Path{-1, std::move(arrows)}}};
}

inline AlgebraPtr auslander(int n) {
  return build_description(example_auslander(n)).a;
}

inline AlgebraPtr dual_numbers() {
  return build_description(example_dual_numbers()).a;
}

// Index of the basis element with the given name.
inline int basis_index(const FinDimAlgebra& a, const std::string& name) {
  for (int i = 0; i < a.dim(); ++i)
    if (a.name(i) == name) return i;
  return -1;
}

inline Vec named(const FinDimAlgebra& a, const std::vector<std::pair<long, std::string>>& terms) {
  Vec v = zero_vec(a.dim());
  for (auto& [c, n] : terms) v[basis_index(a, n)] += Scalar(c);
  return v;
}

}  // namespace qha::test
