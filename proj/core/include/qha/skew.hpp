#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qha/module.hpp"
#include "qha/qh.hpp"

namespace qha {

struct FiniteGroup {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul;  // mul[g][h] = gh
  std::vector<int> generators;

  int order() const { return static_cast<int>(names.size()); }
  int identity() const;
  int inverse(int g) const;
  static FiniteGroup cyclic(int n);
};

// One automorphism matrix per group element.
struct GroupAction {
  FiniteGroup group;
  AlgebraPtr alg;
  std::vector<Matrix> maps;

  Vec apply(int g, const Vec& x) const { return maps[g].apply(x); }
  // Automorphisms, group laws, and char(k) not dividing |G|; throws VerificationError or ScopeError.
  void verify() const;
};

// The cyclic action generated by one automorphism of order dividing n.
GroupAction cyclic_action(const AlgebraPtr& a, const Matrix& generator, int n);
GroupAction trivial_action(const AlgebraPtr& a, const FiniteGroup& g);

struct Cocycle {
  std::vector<Vec> rho;  // per group element
};
// rho(1) = 1 and rho(gh) = rho(g) g(rho(h)) with units; empty string when valid.
std::string cocycle_defect(const GroupAction& act, const Cocycle& c);
// The cocycle of a cyclic group determined by rho(generator).
Cocycle cyclic_cocycle(const GroupAction& act, const Vec& rho_g);

FinDimAlgebra skew_group_algebra(const GroupAction& act);
// Simple class of gL for each simple class L.
std::vector<int> simple_permutation(const GroupAction& act, int g);
bool check_invariant_order(const GroupAction& act, const SimpleOrder& order);
// g * a = rho(g) g(a) rho(g)^{-1}.
GroupAction twist_action(const GroupAction& act, const Cocycle& c);
// Characteristic polynomial of every group element as a linear map.
std::vector<Polynomial> action_char_polys(const GroupAction& act);
// Roots to try when factoring polynomials of the action: roots of unity of order dividing |G| in k.
std::vector<Scalar> group_roots(const GroupAction& act);

// A family of cocycles rho(g) = sum_k p_k(lambda) v_k with g * B = B, for the generator g of a cyclic group.
struct TwistFamily {
  std::vector<Scalar> arrow_scalars;  // action of g * - on the arrow generators of B
  int parameters = 0;
  Vec representative;  // rho(g) with all parameters 0
  Vec sample;          // rho(g) with all parameters 1
  std::vector<Polynomial> char_polys;
  std::string formula;  // rho(g) in the basis names, parameters as l1, l2, ...
};

struct TwistClassification {
  std::vector<TwistFamily> families;
  bool complete = true;  // false when some branch exceeded the elimination bounds
  std::string note;
};
TwistClassification classify_compatible_twists(const GroupAction& act, const SubalgebraEmbedding& b);

struct ObstructionResult {
  enum class Verdict { exists, obstructed, undetermined };
  Verdict verdict = Verdict::undetermined;
  std::vector<Polynomial> base_polys;
  TwistClassification twists;
  std::optional<Vec> witness;  // u with g(u^{-1} B u) = u^{-1} B u
  std::string note;
};
std::string verdict_str(ObstructionResult::Verdict v);
ObstructionResult invariant_borel_obstruction(const GroupAction& act, const SubalgebraEmbedding& b);

// iota o g = g o iota on a basis, for every group element.
bool equivariance_check(const SubalgebraEmbedding& iota, const GroupAction& on_sub, const GroupAction& on_amb);

}  // namespace qha
