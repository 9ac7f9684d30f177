#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qha/algebra.hpp"

namespace qha {

// Finite-dimensional left module given by one action matrix per basis element of the algebra.
class Representation {
 public:
  Representation() = default;
  Representation(AlgebraPtr alg, int dim, std::vector<Matrix> action);

  const AlgebraPtr& algebra() const { return alg_; }
  const FinDimAlgebra& alg() const { return *alg_; }
  int dim() const { return dim_; }
  const Matrix& action(int b) const { return action_[b]; }
  const std::vector<Matrix>& actions() const { return action_; }
  Matrix act(const Vec& x) const;
  Vec act(const Vec& x, const Vec& m) const;
  // dim e_i M for every idempotent.
  std::vector<int> dim_vector() const;
  // Checks the action against structure constants on generators; throws VerificationError.
  void verify() const;

 private:
  AlgebraPtr alg_;
  int dim_ = 0;
  std::vector<Matrix> action_;
};

Representation zero_module(const AlgebraPtr& a);
Representation regular_module(const AlgebraPtr& a);
// Homogeneous basis of A*eps (vectors of A).
std::vector<Vec> projective_basis(const FinDimAlgebra& a, const Vec& eps);
Representation projective_module(const AlgebraPtr& a, const Vec& eps);
Representation direct_sum(const std::vector<Representation>& ms);
// Module over amb viewed over sub.
Representation restrict_module(const SubalgebraEmbedding& emb, const Representation& m);
// Module transported along an algebra isomorphism phi: src -> tgt (matrix tgt.dim x src.dim).
Representation transport_module(const AlgebraPtr& tgt, const Matrix& phi, const Representation& m);

struct Subquotient {
  Representation mod;
  Matrix map;  // inclusion (M.dim x U.dim) for submodules, projection (Q.dim x M.dim) for quotients
  Matrix section;  // for quotients: a linear lift Q -> M
};

std::vector<Vec> generated_submodule(const Representation& m, const std::vector<Vec>& gens);
Subquotient submodule(const Representation& m, const std::vector<Vec>& basis);
Subquotient quotient(const Representation& m, const std::vector<Vec>& sub);
// Basis of rad(A) modulo rad(A)^2 (lifted).
std::vector<Vec> radical_generators(const FinDimAlgebra& a);
std::vector<Vec> module_radical(const Representation& m);
Subquotient top(const Representation& m);
std::vector<Representation> simple_modules(const AlgebraPtr& a);
// Multiplicities per simple class.
std::vector<int> top_multiplicities(const Representation& m);
std::vector<int> composition_multiplicities(const Representation& m);

struct ProjectiveCover {
  std::vector<int> summands;    // idempotent indices, one per copy of P_i
  std::vector<Vec> generators;  // image of the summand idempotent in M
  Representation module;
  Matrix surjection;
};
ProjectiveCover projective_cover(const Representation& m);

bool is_module_map(const Representation& m, const Representation& n, const Matrix& f);
std::vector<Matrix> hom_space(const Representation& m, const Representation& n);

enum class Decision { yes, no, undetermined };
std::string decision_str(Decision d);

struct IsoResult {
  Decision decision = Decision::undetermined;
  std::optional<Matrix> witness;
  std::string note;
};
IsoResult module_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed = 1);

// amb (x)_sub M with a record of how pure tensors map into it.
struct InducedModule {
  Representation module;
  std::vector<Vec> sub_idem;                 // images of the sub idempotents in amb
  std::vector<std::vector<Vec>> left_basis;  // basis of amb * iota(e_i)
  std::vector<std::vector<Vec>> right_basis; // basis of e_i M
  std::vector<Echelon> left_coord, right_coord;
  std::vector<int> offset;
  Echelon relations{0};
  std::vector<int> qpos;  // position in the quotient basis, -1 for pivots of the relations

  Vec reduce(const Vec& v) const;

  Vec tensor_class(const Vec& a, const Vec& m) const;
  // The unit M -> amb (x) M, m -> 1 (x) m.
  Matrix unit_map(int mdim) const;
};
InducedModule induce(const SubalgebraEmbedding& emb, const Representation& m);
bool is_induction_exact(const SubalgebraEmbedding& emb);

// End(P)^op for P = sum of A*eps_s: basis blocks eps_s A eps_t (the map x -> x*c from summand s to t),
// product of (s,t,c) and (t,u,c') is (s,u,cc').
struct ProjectiveEndomorphisms {
  AlgebraPtr base;
  AlgebraPtr alg;
  std::vector<Vec> eps;
  std::vector<std::vector<std::vector<Vec>>> corner;  // corner[s][t]; corner[s][s][0] = eps_s
  std::vector<std::vector<std::vector<int>>> index;   // basis index of corner[s][t][k]
  std::vector<Echelon> coord;                         // coordinates inside corner[s][t], flattened s*n+t

  int summands() const { return static_cast<int>(eps.size()); }
  // Element of alg for the map given by c in eps_s A eps_t.
  Vec element(int s, int t, const Vec& c) const;
  // Component in eps_s A eps_t of an element of alg.
  Vec component(const Vec& r, int s, int t) const;
};
ProjectiveEndomorphisms projective_endomorphisms(const AlgebraPtr& a, const std::vector<Vec>& eps,
                                                 const std::vector<std::string>& summand_names = {});

// End_A(M_1 + ... + M_k)^op on a Hom-space basis organized by summand blocks; idempotents are summand identities.
struct EndomorphismAlgebra {
  AlgebraPtr alg;
  std::vector<Matrix> maps;  // basis as endomorphisms of the direct sum
};
EndomorphismAlgebra endomorphism_algebra(const std::vector<Representation>& summands);

}  // namespace qha
