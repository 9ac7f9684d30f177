#pragma once

#include <map>
#include <vector>

#include "qha/ainfinity.hpp"
#include "qha/module.hpp"
#include "qha/resolution.hpp"

namespace qha {

// (X, w) with X = sum_a X_a an L-module concentrated in degree 0 and w = sum xi (x) phi_xi over degree-1 basis
// elements xi of the base. phi_xi is stored as a full matrix on X supported on the block X_src -> X_tgt.
struct TwistedModule {
  AInftyPtr base;
  std::vector<int> dims;
  std::map<int, Matrix> w;

  int total() const;
  int offset(int a) const;
  // Embeds a block X_a -> X_b into a full matrix.
  Matrix place(int a, int b, const Matrix& block) const;
  Matrix block(const Matrix& full, int a, int b) const;
  void add(int xi, const Matrix& full);
};

TwistedModule zero_twist(const AInftyPtr& base, std::vector<int> dims);
// (L_a, 0)
TwistedModule simple_twist(const AInftyPtr& base, int a);

bool is_triangular(const TwistedModule& t);
// sum_n m_n(w, ..., w); empty map when the Maurer-Cartan equation holds.
std::map<int, Matrix> mc_defect(const TwistedModule& t);
bool is_maurer_cartan(const TwistedModule& t);

struct H0Hom {
  int dim = 0;
  std::vector<std::map<int, Matrix>> cocycles;  // representatives, zeta -> full |Y| x |X| matrix
};
H0Hom h0_hom(const TwistedModule& x, const TwistedModule& y);

// H^0(P(M) (x)_L X, d (x) 1 + w) for a twist over the dg End algebra of the resolutions.
struct Realization {
  Representation module;
  Matrix projection;  // T^0 -> H^0
  Matrix section;
  std::vector<int> t0_offsets;  // offset of P^0(M_a) (x) X_a in T^0
  std::vector<int> dims;        // X_a
};
Realization realize_full(const DgEnd& e, const TwistedModule& t);
Representation realize(const DgEnd& e, const TwistedModule& t);
// Endomorphism of the realization induced by an L-linear map F of X commuting with the twist.
Matrix realize_map(const DgEnd& e, const Realization& src, const Realization& dst, const Matrix& f);

TwistedModule twmod_apply(const AInftyMorphism& f, const TwistedModule& t);

// X' + X'' with w = [[w', c], [0, w'']]; c is given as full |X'| x |X''| matrices per basis element.
// The result is ordered by objects, X'_a before X''_a.
TwistedModule twist_of_extension(const TwistedModule& lower, const TwistedModule& upper,
                                 const std::vector<std::pair<int, Matrix>>& cross);

}  // namespace qha
