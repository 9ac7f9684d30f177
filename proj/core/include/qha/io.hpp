#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qha/qh.hpp"
#include "qha/skew.hpp"

namespace qha {

// A term coeff * path; from/to name projective summands when the ambient algebra is End(P)^op.
// Coefficients are rationals or residues, optionally times a power of xi ("-2*xi^2").
struct TermDesc {
  std::string coeff = "1";
  std::vector<std::string> path;  // arrow names, applied right to left
  std::string vertex;             // used when path is empty
  std::string from, to;
};
using ElementDesc = std::vector<TermDesc>;

struct ArrowDesc {
  std::string name, src, tgt;
};

struct QuiverDesc {
  std::vector<std::string> vertices;
  std::vector<ArrowDesc> arrows;
  std::vector<ElementDesc> relations;
};

struct SummandDesc {
  std::string name, vertex;
};

struct SubalgebraDesc {
  std::string name;
  QuiverDesc quiver;
  std::vector<std::pair<std::string, ElementDesc>> vertex_images;
  std::vector<std::pair<std::string, ElementDesc>> arrow_images;
  std::vector<std::pair<std::string, std::string>> action;  // arrow -> scalar under the group generator
};

// Cyclic group of the given order; xi is the smallest primitive order-th root of unity in the field.
struct GroupDesc {
  int order = 1;
  std::vector<std::pair<std::string, ElementDesc>> arrow_images;  // generator images of arrows; vertices fixed
  std::vector<std::pair<std::string, int>> summand_weights;       // g(s,t,c) = xi^(w_s - w_t) (s,t,g(c))
};

struct Description {
  std::string name;
  std::string field = "rational";
  QuiverDesc quiver;
  std::vector<std::pair<std::string, std::string>> order;  // cover pairs, less first
  std::vector<SummandDesc> projective;
  std::vector<SubalgebraDesc> subalgebras;
  std::optional<GroupDesc> group;
};

// Throws ParseError with line and column for malformed JSON, and with the JSON pointer for bad content.
Description parse_description(const std::string& text);
std::string emit_description(const Description& d);

// Objects built from a description in the current field.
struct BuiltDescription {
  AlgebraPtr a;
  SimpleOrder order;
  std::optional<ProjectiveEndomorphisms> r;
  AlgebraPtr amb;          // R when projective summands are given, otherwise A
  SimpleOrder amb_order;  // order on the simple classes of amb
  struct Sub {
    std::string name;
    SubalgebraEmbedding emb;
    std::optional<GroupAction> action;
  };
  std::vector<Sub> subs;
  std::optional<GroupAction> action_a, action_amb;
  std::optional<Scalar> xi;

  const Sub& sub(const std::string& name) const;
};
BuiltDescription build_description(const Description& d);

// Smallest primitive n-th root of unity of the current field.
std::optional<Scalar> primitive_root(int n);
Scalar parse_scalar(const std::string& text, const std::optional<Scalar>& xi);

// Built-in examples.
Description example_auslander(int n, const std::string& field = "rational");
Description example_two_source();
Description example_yuehui();
Description example_dual_numbers();

}  // namespace qha
