#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qha/matrix.hpp"

namespace qha {

struct Arrow {
  int src = 0;
  int tgt = 0;
  std::string name;
};

// Vertices are 0-based internally and printed 1-based.
struct Quiver {
  int n = 0;
  std::vector<Arrow> arrows;
  std::vector<std::string> vertex_names;

  int arrow_index(const std::string& name) const;
  std::string vertex_name(int v) const;
};

// A path written right-to-left: arrows[0] is applied last.
struct Path {
  int vertex = -1;  // used only when arrows is empty
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  int src(const Quiver& q) const;
  int tgt(const Quiver& q) const;
  bool operator==(const Path& o) const { return arrows == o.arrows && (!arrows.empty() || vertex == o.vertex); }
};

struct PathTerm {
  Scalar coeff;
  Path path;
};
using Relation = std::vector<PathTerm>;

struct QuiverPresentation {
  Quiver quiver;
  std::vector<Relation> relations;
  std::vector<Path> basis_paths;
};

class FinDimAlgebra {
 public:
  FinDimAlgebra(std::vector<std::string> names, std::vector<SVec> table, std::vector<Vec> idempotents);

  int dim() const { return static_cast<int>(names_.size()); }
  int num_idempotents() const { return static_cast<int>(idem_.size()); }
  const std::string& name(int b) const { return names_[b]; }
  const std::vector<std::string>& names() const { return names_; }
  const Vec& idempotent(int i) const { return idem_[i]; }
  const std::vector<Vec>& idempotents() const { return idem_; }
  const Vec& unit() const { return unit_; }
  // b lies in e_tgt A e_src; -1 when b is not homogeneous.
  int src(int b) const { return src_[b]; }
  int tgt(int b) const { return tgt_[b]; }
  bool homogeneous() const;

  const SVec& mul(int i, int j) const { return table_[static_cast<size_t>(i) * dim() + j]; }
  const std::vector<SVec>& table() const { return table_; }
  Vec mul(const Vec& x, const Vec& y) const;
  Matrix left_mult(const Vec& x) const;
  Matrix right_mult(const Vec& x) const;
  Vec basis_vec(int b) const { return unit_vec(dim(), b); }
  // Index of basis element equal to e_i, or -1.
  int idempotent_basis_index(int i) const;

  void verify_associative() const;

  // Jacobson radical and derived data.
  const std::vector<Vec>& radical() const;
  const std::vector<Vec>& radical_squared() const;
  bool is_split() const;
  void require_split() const;
  // Simple class of each idempotent; classes numbered in order of first idempotent.
  const std::vector<int>& simple_class() const;
  int num_simples() const;
  std::vector<int> class_members(int c) const;
  bool is_basic() const { return num_simples() == num_idempotents(); }
  // Basis elements plus idempotents generating A as an algebra.
  const std::vector<Vec>& generators() const;
  int loewy_length() const;

  // Basis of e_j A e_i (as vectors of A) for arbitrary idempotent vectors.
  std::vector<Vec> corner(const Vec& ej, const Vec& ei) const;

  std::string element_str(const Vec& x) const;

  const std::optional<QuiverPresentation>& presentation() const { return pres_; }
  void set_presentation(QuiverPresentation p) { pres_ = std::move(p); }
  // Path residues have length >= 1 iff in the arrow ideal.
  bool monomial(int b) const { return pres_.has_value() && b < static_cast<int>(pres_->basis_paths.size()); }

 private:
  struct Cache {
    std::mutex mu;
    std::optional<std::vector<Vec>> rad, rad2, gens;
    std::optional<std::vector<int>> cls;
    std::optional<bool> split;
  };

  std::vector<std::string> names_;
  std::vector<SVec> table_;
  std::vector<Vec> idem_;
  Vec unit_;
  std::vector<int> src_, tgt_;
  std::optional<QuiverPresentation> pres_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();

  std::vector<Vec> compute_radical() const;
};

using AlgebraPtr = std::shared_ptr<const FinDimAlgebra>;

FinDimAlgebra build_path_algebra(const Quiver& q, const std::vector<Relation>& relations, int max_length = 48);
FinDimAlgebra opposite(const FinDimAlgebra& a);
bool is_invertible(const FinDimAlgebra& a, const Vec& x);
std::optional<Vec> inverse_element(const FinDimAlgebra& a, const Vec& x);
Polynomial linear_map_char_poly(const Matrix& f);
// Product of a list of elements left to right.
Vec product(const FinDimAlgebra& a, const std::vector<Vec>& xs);
std::vector<Vec> ideal_product(const FinDimAlgebra& a, const std::vector<Vec>& x, const std::vector<Vec>& y);

struct SubalgebraEmbedding {
  AlgebraPtr sub;
  AlgebraPtr amb;
  Matrix map;  // amb.dim x sub.dim

  Vec image(const Vec& x) const { return map.apply(x); }
  Vec image_basis(int b) const { return map.col(b); }
  std::vector<Vec> image_span() const;
  // Checks injectivity, multiplicativity and unit preservation; throws VerificationError.
  void verify(bool unital = true) const;
};

// Smallest unital subalgebra containing gens; sub idempotents are taken from idempotent generators when those
// form a complete orthogonal family, otherwise the unit alone.
SubalgebraEmbedding subalgebra_closure(const AlgebraPtr& a, const std::vector<Vec>& gens,
                                       std::vector<std::string> names = {});

// Structure constants of an algebra spanned by given independent vectors of amb, with a chosen idempotent family
// inside the span; basis is rearranged to be homogeneous for that family.
SubalgebraEmbedding subalgebra_from_span(const AlgebraPtr& amb, const std::vector<Vec>& span,
                                         const std::vector<Vec>& sub_idempotents, std::vector<std::string> names = {});

struct ArrowGenerator {
  int src = 0;
  int tgt = 0;
  Vec v;
};
// Lifts of bases of e_j rad e_i modulo e_j rad^2 e_i over all vertex pairs.
std::vector<ArrowGenerator> arrow_generators(const FinDimAlgebra& b);
// The algebra isomorphism b -> b2 with given images of the idempotents followed by the arrow generators, if any.
std::optional<Matrix> extend_to_isomorphism(const FinDimAlgebra& b, const std::vector<ArrowGenerator>& arrows,
                                           const FinDimAlgebra& b2, const std::vector<Vec>& images);

}  // namespace qha
