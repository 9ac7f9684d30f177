#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qha/module.hpp"

namespace qha {

// Strict partial order on simple classes 0..n-1, stored transitively closed.
class SimpleOrder {
 public:
  SimpleOrder() = default;
  // Cover pairs (i, j) meaning i < j; throws ScopeError on cycles.
  SimpleOrder(int n, const std::vector<std::pair<int, int>>& covers);
  static SimpleOrder chain(int n);

  int size() const { return n_; }
  bool less(int i, int j) const { return lt_[static_cast<size_t>(i) * n_ + j]; }
  bool less_eq(int i, int j) const { return i == j || less(i, j); }
  std::vector<std::pair<int, int>> covers() const;
  // Order transported along a map of index sets: result(i, j) = less(f(i), f(j)).
  SimpleOrder pullback(const std::vector<int>& f) const;

 private:
  int n_ = 0;
  std::vector<bool> lt_;
};

// One standard module per simple class, in class order.
std::vector<Representation> standard_modules(const AlgebraPtr& a, const SimpleOrder& order);

// Top-down filtration: entry 0 is the top factor.
std::optional<std::vector<int>> delta_filtration(const Representation& m, const std::vector<Representation>& deltas);

struct QhReport {
  bool ok = false;
  std::vector<int> end_dims;
  std::vector<std::optional<std::vector<int>>> projective_filtrations;
  std::string diagnostics;
};
QhReport check_quasi_hereditary(const AlgebraPtr& a, const SimpleOrder& order);

struct RegularityDegree {
  int degree = 0;
  int dim_sub = 0;   // Ext^k_B(L, L)
  int dim_amb = 0;   // Ext^k_A(Delta, Delta)
  int rank = 0;      // rank of [f] -> [id (x) f]
};

struct BorelReport {
  bool exact = false;
  bool simples_to_standards = false;
  std::vector<int> phi;  // sub vertex -> amb simple class
  bool directed = false;
  Decision normal = Decision::undetermined;
  std::vector<Vec> normal_complement;  // kernel of the splitting, a right ideal
  bool regular = false;
  std::vector<RegularityDegree> regularity;
  bool strong = false;
  std::string diagnostics;

  // The retraction amb -> sub along the complement.
  Matrix splitting(const SubalgebraEmbedding& emb) const;
};

struct BorelOptions {
  int regular_up_to = 4;
  int normal_attempts = 64;
  std::uint64_t seed = 1;
};

BorelReport verify_exact_borel(const AlgebraPtr& a, const SimpleOrder& order, const SubalgebraEmbedding& emb,
                               const BorelOptions& opt = {});
// Kernel of a splitting found by the bounded search, if any.
std::optional<std::vector<Vec>> find_normal_complement(const SubalgebraEmbedding& emb, int attempts, std::uint64_t seed);
bool is_normal_complement(const SubalgebraEmbedding& emb, const std::vector<Vec>& c);
bool is_strong(const SubalgebraEmbedding& emb);
// Ext^k comparison between the sub simples and their inductions.
std::vector<RegularityDegree> regularity_ranks(const SubalgebraEmbedding& emb, int up_to);

struct LemmaReport {
  bool strong = false;
  bool radical_inclusion = true;  // A rad(B) in rad(A), tested when strong
  int samples = 0;
  bool top_inequality = true;
  bool top_equality = true;  // tested when strong
  std::string diagnostics;
  bool ok() const { return radical_inclusion && top_inequality && (!strong || top_equality); }
};
LemmaReport check_strong_lemmas(const AlgebraPtr& a, const SimpleOrder& order, const SubalgebraEmbedding& emb,
                                std::uint64_t seed = 1);

}  // namespace qha
