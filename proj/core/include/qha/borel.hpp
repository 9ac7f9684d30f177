#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qha/ainfinity.hpp"
#include "qha/qh.hpp"
#include "qha/resolution.hpp"
#include "qha/twisted.hpp"

namespace qha {

// Ext algebra of a family of modules: resolutions, the dg End algebra and its transferred model.
struct ExtModel {
  std::vector<Representation> modules;
  std::vector<ProjComplex> resolutions;
  DgEnd dg;
  Transfer transfer;
};
// max_len bounds the resolutions (ScopeError beyond it); cap is the arity cap of the transfer.
ExtModel ext_model(const std::vector<Representation>& modules, int max_len, int cap, bool positive_only);

struct ReconstructedAlgebra {
  Quiver quiver;
  std::vector<Relation> relations;
  AlgebraPtr alg;
  std::vector<int> arrow_of;     // model basis index -> arrow, -1 outside degree 1
  std::vector<int> model_index;  // arrow -> model basis index
  std::vector<int> arrow_basis;  // arrow -> basis index of the arrow in alg
};

// Bound quiver algebra dual to a minimal coconnected model: arrows from degree 1, relations from the
// components of m_n landing in degree 2.
ReconstructedAlgebra reconstruct(const AInftyAlgebra& model, int max_length = 48);

// Module over a path algebra given by full matrices for each arrow on a space graded by vertices.
Representation path_module(const AlgebraPtr& alg, const std::vector<int>& dims, const std::vector<Matrix>& arrows);

Representation keller_module(const ReconstructedAlgebra& rec, const TwistedModule& t);

struct ModuleTwist {
  TwistedModule twist;
  Matrix basis;  // columns: module basis vectors adapted to the vertices, in twist order
  Matrix inverse;
};
ModuleTwist twist_from_module(const AInftyPtr& model, const ReconstructedAlgebra& rec, const Representation& m);

struct FenwickData {
  int n = 0;
  std::vector<std::vector<int>> index_set;  // alpha in {0,1}^n with alpha_n = 1, entries alpha_1..alpha_n
  std::vector<int> start;                   // s(alpha), 1-based
  std::vector<int> j;                       // j(alpha), 1-based
  std::vector<int> zeros;                   // n(alpha)
  std::vector<std::vector<int>> by_start;   // I_i as indices into index_set
  // q[i][k]: multiplicity of P_{k+1} in Q_{i+1}
  std::vector<std::vector<int>> q;

  int find(const std::vector<int>& alpha) const;
  static std::string label(const std::vector<int>& alpha);
};
FenwickData fenwick_projectives(int n);

struct BorelSynthesis {
  AlgebraPtr a;
  SimpleOrder order_a;
  std::vector<Representation> deltas;
  ExtModel ext;
  std::shared_ptr<AInftyAlgebra> model;  // truncated minimal model
  ReconstructedAlgebra b;
  std::vector<Representation> q;           // Q_i in mod A
  std::vector<std::vector<int>> q_classes;  // simple classes of the projective summands of Q_i
  ProjectiveEndomorphisms r;
  std::vector<int> summand_vertex;  // R summand -> B vertex
  SimpleOrder order_r;
  SubalgebraEmbedding iota;
  BorelReport report;

  struct Vertex {
    std::vector<Vec> pb_basis;  // basis of B e_i as vectors of B
    ModuleTwist twist;
    Realization real;
    ProjectiveCover cover;
    Matrix cover_inverse;
    int first_summand = 0;
  };
  std::vector<Vertex> vertices;
  struct Summand {
    std::vector<Vec> basis;  // basis of A eps_s
    Vec eps_coords;          // eps_s in that basis
  };
  std::vector<Summand> summands;
};

BorelSynthesis synthesize_borel_pair(const AlgebraPtr& a, const SimpleOrder& order, int cap = 6,
                                     const BorelOptions& opt = {});

// Induced map of the right multiplication r_b on sum_i P_i^B, as an element of End_A(sum Q_i)^op.
Vec induced_endomorphism(const BorelSynthesis& s, const Vec& b);

struct ConjugationResult {
  Decision decision = Decision::undetermined;
  std::optional<Vec> unit;
  std::optional<Matrix> phi;  // the isomorphism sub -> sub2 matched by the unit
  std::vector<int> vertex_match;
  int candidates = 0;
  std::string note;
};

// u with u iota(B) u^{-1} = iota'(B').
ConjugationResult conjugate_subalgebras(const SubalgebraEmbedding& b, const SubalgebraEmbedding& b2,
                                        std::uint64_t seed = 1, int max_candidates = 96);
bool verify_conjugation(const SubalgebraEmbedding& b, const SubalgebraEmbedding& b2, const Vec& u);
// The same subalgebra embedded by x -> u iota(x) u^{-1}.
SubalgebraEmbedding conjugate_embedding(const SubalgebraEmbedding& emb, const Vec& u);
// Random invertible element with small integer coordinates.
Vec random_unit(const FinDimAlgebra& a, std::uint64_t seed);

struct DiagramReport {
  bool ok = false;
  int simples = 0;
  int twists = 0;
  int passed = 0;
  std::vector<Matrix> witnesses;
  std::string diagnostics;
};

// Compares A (x)_B M with A (x)_B' G(M) for simples and rank-2 twists M, G transport along the conjugation.
DiagramReport check_diagram_commutes(const SubalgebraEmbedding& b, const SubalgebraEmbedding& b2, const Vec& u,
                                     int min_twists = 10);

}  // namespace qha
