#pragma once

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "qha/ainfinity.hpp"
#include "qha/module.hpp"

namespace qha {

// Bounded complex of projectives; term q is P^{-q} = sum over summands of A*eps_s.
// The differential P^{-q} -> P^{-q+1} is given by elements c[s][t] in eps_s A eps_t acting as x -> x*c.
struct ProjComplex {
  AlgebraPtr alg;
  std::vector<std::vector<Vec>> terms;
  std::vector<std::vector<std::vector<Vec>>> diffs;  // diffs[q] for q >= 1; diffs[0] empty
  std::vector<Vec> augmentation;                      // images of the degree-0 summand idempotents in M
  Representation augmented;                           // the resolved module

  int length() const { return static_cast<int>(terms.size()) - 1; }
  int summands(int q) const { return q < 0 || q > length() ? 0 : static_cast<int>(terms[q].size()); }
  std::vector<int> offsets(int q) const;
  int term_dim(int q) const;
  Representation term_module(int q) const;
  // Module map P^{-q} -> P^{-q+1}.
  Matrix diff_matrix(int q) const;
  // Module map P^0 -> M.
  Matrix augmentation_matrix() const;
  // Matrix of the map summand s of P^{-q} -> summand t of P^{-r} given by x -> x*c.
  Matrix element_matrix(int q, int s, int r, int t, const Vec& c) const;
};

// Minimal projective resolution; throws ScopeError if longer than max_len unless truncation is allowed.
ProjComplex minimal_projective_resolution(const Representation& m, int max_len, bool allow_truncation = false);
// R (x)_B P for a complex over B: summands eps -> iota(eps), differential elements -> iota(c).
ProjComplex induce_complex(const SubalgebraEmbedding& emb, const ProjComplex& p);
// Homology in degree -q as a vector space dimension.
int homology_dim(const ProjComplex& p, int q);

struct ExtSpace {
  int degree = 0;
  int dim = 0;
  std::vector<Vec> cocycles;  // in Hom(P^{-k}, N) = sum_s eps_s N, concatenated
};
ExtSpace ext_space(const Representation& m, const Representation& n, int k);

// End*(P(M_1) + ... + P(M_r)) as a dg algebra over L = k^r. A basis element is a corner element c of
// eps_s A eps_t for summand s of P^{-qa}(M_a) and t of P^{-qb}(M_b); it has degree qa - qb and lies in e_b E e_a.
struct DgEndData {
  AlgebraPtr alg;
  std::vector<ProjComplex> cx;
  struct Block {
    int a, qa, s, b, qb, t;
    std::vector<Vec> corner;
  };
  std::vector<Block> blocks;
  std::vector<std::pair<int, int>> basis;  // (block, index in corner)
  std::map<std::array<int, 6>, int> lookup;
  std::vector<Echelon> coord;  // per block
  std::vector<int> first;      // first basis index per block

  // -1 when the block is zero.
  int block_index(int a, int qa, int s, int b, int qb, int t) const;
  // Map of basis element x as a module map P^{-qa}(M_a) -> P^{-qb}(M_b).
  Matrix element_matrix(int x) const;
  // Element given by component elements c[s][t] for all summand pairs between two terms.
  SVec from_components(int a, int qa, int b, int qb, const std::vector<std::vector<Vec>>& c) const;
  SVec from_element(int block, const Vec& c) const;
  // Module map P^{-qa}(M_a) -> P^{-qb}(M_b) of a homogeneous element.
  Matrix as_matrix(const SVec& x, int a, int qa, int b, int qb) const;
};

struct DgEnd {
  std::shared_ptr<const DgEndData> data;
  std::shared_ptr<AInftyAlgebra> dga;

  const DgEndData* operator->() const { return data.get(); }
};

DgEnd dg_endomorphisms(std::vector<ProjComplex> cx, int cap);

}  // namespace qha
