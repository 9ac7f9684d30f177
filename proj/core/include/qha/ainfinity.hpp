#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qha/matrix.hpp"

namespace qha {

// Basis of a graded L-L-bimodule, L = k^nobj; element b lies in e_tgt V e_src in degree deg.
struct GradedBasis {
  int nobj = 0;
  std::vector<int> deg, src, tgt;
  std::vector<std::string> names;

  int size() const { return static_cast<int>(deg.size()); }
  void add(int d, int s, int t, std::string name);
  // x_1 (x) ... (x) x_n is composable when src(x_k) == tgt(x_{k+1}).
  bool composable(const std::vector<int>& xs) const;
  int degree(const std::vector<int>& xs) const;
  std::vector<int> dims_in_degree(int d) const;
};

// Strictly unital A-infinity algebra over L. Either given by tables of m_n on tuples without unit slots
// (units are basis elements), or a dg-algebra with m_1 and m_2 supplied as functions.
class AInftyAlgebra {
 public:
  AInftyAlgebra(GradedBasis basis, std::vector<Vec> units, int cap);

  const GradedBasis& basis() const { return basis_; }
  int dim() const { return basis_.size(); }
  int cap() const { return cap_; }
  int nobj() const { return basis_.nobj; }
  const std::vector<Vec>& units() const { return units_; }
  // Basis index equal to the unit of object a, or -1.
  int unit_index(int a) const { return unit_index_[a]; }
  bool is_unit(int b) const { return unit_of_[b] >= 0; }
  int unit_object(int b) const { return unit_of_[b]; }
  bool is_dg() const { return static_cast<bool>(d_); }
  bool is_minimal() const;

  SVec m(const std::vector<int>& args) const;
  SVec m(const std::vector<SVec>& args) const;

  void set_op(const std::vector<int>& args, SVec v);
  const std::map<std::vector<int>, SVec>& table() const { return table_; }
  void set_dg(std::function<SVec(int)> d, std::function<SVec(int, int)> mul);
  void set_cap(int c) { cap_ = c; }
  std::string element_str(const SVec& v) const;

 private:
  GradedBasis basis_;
  std::vector<Vec> units_;
  std::vector<int> unit_index_, unit_of_;
  int cap_;
  std::map<std::vector<int>, SVec> table_;
  std::function<SVec(int)> d_;
  std::function<SVec(int, int)> mul_;
  struct Cache {
    std::mutex mu;
    std::map<std::pair<int, int>, SVec> mul;
    std::map<int, SVec> d;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

using AInftyPtr = std::shared_ptr<const AInftyAlgebra>;

// Strictly unital A-infinity morphism: f_1 on a unit basis element of the source is the target unit, higher
// components vanish on tuples with a unit slot. f_1 may be given as a function (strict linear part).
class AInftyMorphism {
 public:
  AInftyMorphism(AInftyPtr source, AInftyPtr target);

  const AInftyPtr& source() const { return src_; }
  const AInftyPtr& target() const { return tgt_; }
  int max_arity() const { return max_arity_; }

  SVec f(const std::vector<int>& args) const;
  SVec f(const std::vector<SVec>& args) const;
  void set(const std::vector<int>& args, SVec v);
  void set_linear(std::function<SVec(int)> f1);
  const std::map<std::vector<int>, SVec>& table() const { return table_; }
  // Matrix of f_1 restricted to source basis elements of degree d (columns) into target degree d.
  Matrix linear_part() const;

 private:
  AInftyPtr src_, tgt_;
  std::map<std::vector<int>, SVec> table_;
  std::function<SVec(int)> f1_;
  int max_arity_ = 1;
};

using MorphismPtr = std::shared_ptr<const AInftyMorphism>;

// All composable basis tuples of the given length whose entries pass the filter.
std::vector<std::vector<int>> composable_tuples(const GradedBasis& b, int n, const std::function<bool(int)>& keep);

struct StasheffReport {
  std::vector<int> defects;  // per arity 1..up_to: number of basis tuples with nonzero defect
  bool ok() const;
  std::string str() const;
};
StasheffReport check_stasheff(const AInftyAlgebra& a, int up_to);
// Evaluates one Stasheff identity on a basis tuple.
SVec stasheff_defect(const AInftyAlgebra& a, const std::vector<int>& xs);
StasheffReport check_morphism(const AInftyMorphism& f, int up_to);
SVec morphism_defect(const AInftyMorphism& f, const std::vector<int>& xs);
// Checks strict unitality of ops on all tuples up to the given arity.
bool check_strict_unit(const AInftyAlgebra& a, int up_to);

AInftyMorphism identity_morphism(const AInftyPtr& a);
// (f o g)_n = sum (-1)^{sum_l (1-j_l) sum_{l'<=l} j_l'} f_k(g_j1 (x) ... (x) g_jk); target(g) == source(f).
AInftyMorphism compose(const AInftyMorphism& f, const AInftyMorphism& g, int up_to);
// Two-sided inverse of f with g_1 = f_1^{-1}; requires f_1 invertible.
AInftyMorphism invert(const AInftyMorphism& f, int up_to);
bool morphisms_equal(const AInftyMorphism& f, const AInftyMorphism& g, int up_to);

struct Transfer {
  std::shared_ptr<AInftyAlgebra> model;
  std::shared_ptr<AInftyMorphism> inclusion;  // model -> dg algebra
  std::vector<int> source_degrees;
  // model basis element k is represented by the cocycle rep[k] of the dg algebra
  std::vector<SVec> rep;
};

// Minimal model of a dg-algebra unital over L by the tree recursion on an L-bimodule contraction.
// positive_only restricts to L plus positive-degree cohomology (the truncation of the minimal model).
Transfer homotopy_transfer(const AInftyPtr& dg, bool positive_only = false);

// L plus the positive part, ops restricted.
std::shared_ptr<AInftyAlgebra> truncate(const AInftyAlgebra& a, std::vector<int>* kept = nullptr);
bool is_coconnected(const AInftyAlgebra& a);

// g with f o g = f' for f, f' into a minimal coconnected algebra and f_1 invertible.
AInftyMorphism complete_triangle(const AInftyMorphism& f, const AInftyMorphism& fprime, int up_to);

// Pushes a morphism into a dg algebra along a strict dg map given on basis elements.
AInftyMorphism postcompose_strict(const AInftyMorphism& f, const AInftyPtr& new_target,
                                  const std::function<SVec(int)>& strict);

}  // namespace qha
