#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qha/borel.hpp"
#include "qha/errors.hpp"
#include "qha/io.hpp"
#include "qha/skew.hpp"

using namespace qha;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  int arity_cap = 6;
  std::string field;
  bool json = false;
};

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ScopeError("cannot read '" + path + "'");
    os << in.rdbuf();
  }
  return os.str();
}

json coords(const Vec& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(x.str());
  return j;
}

json witness(const FinDimAlgebra& a, const Vec& v) { return json{{"coordinates", coords(v)}, {"expansion", a.element_str(v)}}; }

json matrix_json(const Matrix& m) {
  json j = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    j.push_back(row);
  }
  return j;
}

std::string vertex_name(const Description& d, int v) { return d.quiver.vertices[v]; }

json borel_json(const BorelReport& r, const SubalgebraEmbedding& emb) {
  json j;
  j["exact"] = r.exact;
  j["simples_to_standards"] = r.simples_to_standards;
  j["phi"] = r.phi;
  j["directed"] = r.directed;
  j["normal"] = decision_str(r.normal);
  if (r.normal == Decision::yes) {
    json c = json::array();
    for (const auto& v : r.normal_complement) c.push_back(witness(*emb.amb, v));
    j["normal_complement"] = c;
  }
  j["regular"] = r.regular;
  json reg = json::array();
  for (const auto& g : r.regularity)
    reg.push_back(json{{"degree", g.degree}, {"ext_sub", g.dim_sub}, {"ext_amb", g.dim_amb}, {"rank", g.rank}});
  j["regularity"] = reg;
  j["strong"] = r.strong;
  if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
  return j;
}

bool borel_ok(const BorelReport& r) {
  return r.exact && r.simples_to_standards && r.directed && r.normal == Decision::yes && r.regular;
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_text(const json& j, const std::string& indent, std::ostream& os);

void print_value(const std::string& lead, const std::string& indent, const json& v, std::ostream& os) {
  if (v.is_object() || (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array()))) {
    os << lead << ":\n";
    print_text(v, indent + "  ", os);
  } else if (v.is_array()) {
    os << lead << ": [";
    for (size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << scalar_text(v[k]);
    os << "]\n";
  } else {
    os << lead << ": " << scalar_text(v) << "\n";
  }
}

// YAML-like rendering of a report.
void print_text(const json& j, const std::string& indent, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) print_value(indent + it.key(), indent, *it, os);
    return;
  }
  for (const auto& v : j) {
    if (v.is_object()) {
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        print_value(indent + (first ? "- " : "  ") + it.key(), indent + "  ", *it, os);
        first = false;
      }
    } else if (v.is_array()) {
      os << indent << "- [";
      for (size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << scalar_text(v[k]);
      os << "]\n";
    } else {
      os << indent << "- " << scalar_text(v) << "\n";
    }
  }
}

void emit_report(const Globals& g, const json& j) {
  if (g.json)
    std::cout << j.dump(2) << "\n";
  else
    print_text(j, "", std::cout);
}

std::vector<Scalar> poly_roots(const std::optional<Scalar>& xi, int order) {
  std::vector<Scalar> c{Scalar(1), Scalar(-1)};
  if (xi)
    for (int k = 1; k < order; ++k) {
      Scalar r = xi->pow(k);
      if (std::find(c.begin(), c.end(), r) == c.end()) c.push_back(r);
    }
  return c;
}

struct Loaded {
  Description desc;
  std::unique_ptr<FieldScope> scope;
  BuiltDescription built;
};

std::unique_ptr<Loaded> load(const Globals& g, const std::string& path) {
  auto l = std::make_unique<Loaded>();
  l->desc = parse_description(read_input(path));
  Field f = Field::rational();
  try {
    f = Field::parse(g.field.empty() ? l->desc.field : g.field);
  } catch (const std::exception& e) {
    throw ScopeError(e.what());
  }
  l->scope = std::make_unique<FieldScope>(f);
  l->built = build_description(l->desc);
  return l;
}

json header(const Loaded& l, const std::string& command) {
  json j;
  j["command"] = command;
  if (!l.desc.name.empty()) j["name"] = l.desc.name;
  j["field"] = Field::current().name();
  return j;
}

int cmd_check(const Globals& g, const std::string& path) {
  auto l = load(g, path);
  auto rep = check_quasi_hereditary(l->built.a, l->built.order);
  json j = header(*l, "check");
  j["dim"] = l->built.a->dim();
  j["quasi_hereditary"] = rep.ok;
  j["end_delta_dims"] = rep.end_dims;
  json filt = json::object();
  for (size_t k = 0; k < rep.projective_filtrations.size(); ++k) {
    const std::string v = "P" + vertex_name(l->desc, static_cast<int>(k));
    if (!rep.projective_filtrations[k]) {
      filt[v] = "none";
      continue;
    }
    json f = json::array();
    for (int c : *rep.projective_filtrations[k]) f.push_back("D" + vertex_name(l->desc, c));
    filt[v] = f;
  }
  j["delta_filtrations"] = filt;
  if (!rep.diagnostics.empty()) j["diagnostics"] = rep.diagnostics;
  emit_report(g, j);
  return rep.ok ? 0 : 1;
}

int cmd_standard(const Globals& g, const std::string& path) {
  auto l = load(g, path);
  auto deltas = standard_modules(l->built.a, l->built.order);
  json j = header(*l, "standard-modules");
  json arr = json::array();
  for (size_t k = 0; k < deltas.size(); ++k) {
    json d;
    d["module"] = "D" + vertex_name(l->desc, static_cast<int>(k));
    d["dim"] = deltas[k].dim();
    json f = json::object();
    auto mult = composition_multiplicities(deltas[k]);
    for (int c = static_cast<int>(mult.size()) - 1; c >= 0; --c)
      if (mult[c]) f["L" + vertex_name(l->desc, c)] = mult[c];
    d["composition_factors"] = f;
    arr.push_back(d);
  }
  j["standard_modules"] = arr;
  emit_report(g, j);
  return 0;
}

std::vector<Representation> chosen_modules(const Loaded& l, const std::string& which) {
  if (which == "simples") return simple_modules(l.built.a);
  if (which == "delta") return standard_modules(l.built.a, l.built.order);
  throw ScopeError("--modules must be delta or simples");
}

int cmd_ext(const Globals& g, const std::string& path, const std::string& which, int max_degree) {
  auto l = load(g, path);
  auto mods = chosen_modules(*l, which);
  const std::string pre = which == "delta" ? "D" : "L";
  json j = header(*l, "ext");
  j["modules"] = which;
  json table = json::array();
  for (int k = 0; k <= max_degree; ++k)
    for (size_t a = 0; a < mods.size(); ++a)
      for (size_t b = 0; b < mods.size(); ++b) {
        const int d = ext_space(mods[a], mods[b], k).dim;
        if (!d) continue;
        table.push_back(json{{"degree", k},
                             {"from", pre + vertex_name(l->desc, static_cast<int>(a))},
                             {"to", pre + vertex_name(l->desc, static_cast<int>(b))},
                             {"dim", d}});
      }
  j["max_degree"] = max_degree;
  j["nonzero"] = table;
  emit_report(g, j);
  return 0;
}

json model_json(const AInftyAlgebra& m, const Description& d) {
  json j;
  const auto& b = m.basis();
  json basis = json::array();
  for (int k = 0; k < b.size(); ++k)
    basis.push_back(json{{"name", b.names[k]}, {"degree", b.deg[k]}, {"from", "D" + vertex_name(d, b.src[k])},
                         {"to", "D" + vertex_name(d, b.tgt[k])}});
  j["basis"] = basis;
  json ops = json::array();
  for (const auto& [args, v] : m.table()) {
    if (v.empty()) continue;
    json names = json::array();
    for (int x : args) names.push_back(b.names[x]);
    ops.push_back(json{{"arity", args.size()}, {"args", names}, {"value", m.element_str(v)}});
  }
  j["operations"] = ops;
  std::vector<int> higher;
  for (const auto& [args, v] : m.table())
    if (args.size() >= 3 && !v.empty()) higher.push_back(static_cast<int>(args.size()));
  j["higher_operations_vanish"] = higher.empty();
  return j;
}

int cmd_minimal_model(const Globals& g, const std::string& path) {
  auto l = load(g, path);
  auto deltas = standard_modules(l->built.a, l->built.order);
  auto e = ext_model(deltas, 2 * l->built.a->num_simples() + 2, g.arity_cap, false);
  json j = header(*l, "minimal-model");
  j["arity_cap"] = g.arity_cap;
  j["model"] = model_json(*e.transfer.model, l->desc);
  j["coconnected"] = is_coconnected(*e.transfer.model);
  auto st = check_stasheff(*e.transfer.model, g.arity_cap);
  j["stasheff_defects"] = st.defects;
  j["stasheff_ok"] = st.ok();
  emit_report(g, j);
  return st.ok() ? 0 : 1;
}

json quiver_json(const ReconstructedAlgebra& rec) {
  json j;
  j["vertices"] = rec.quiver.n;
  json arrows = json::array();
  for (const auto& a : rec.quiver.arrows)
    arrows.push_back(json{{"name", a.name}, {"src", a.src + 1}, {"tgt", a.tgt + 1}});
  j["arrows"] = arrows;
  json rels = json::array();
  for (const auto& r : rec.relations) {
    std::string s;
    for (const auto& t : r) {
      std::string p;
      for (int a : t.path.arrows) p += (p.empty() ? "" : "*") + rec.quiver.arrows[a].name;
      std::string c = t.coeff.str();
      s += (s.empty() ? "" : " + ") + (c == "1" ? "" : c + "*") + p;
    }
    rels.push_back(s);
  }
  j["relations"] = rels;
  j["dim"] = rec.alg->dim();
  return j;
}

int cmd_reconstruct(const Globals& g, const std::string& path) {
  auto l = load(g, path);
  auto deltas = standard_modules(l->built.a, l->built.order);
  auto e = ext_model(deltas, 2 * l->built.a->num_simples() + 2, g.arity_cap, true);
  auto rec = reconstruct(*e.transfer.model);
  json j = header(*l, "reconstruct");
  j["algebra"] = quiver_json(rec);
  emit_report(g, j);
  return 0;
}

int cmd_synthesize(const Globals& g, const std::string& path) {
  auto l = load(g, path);
  BorelOptions opt;
  opt.seed = g.seed;
  auto s = synthesize_borel_pair(l->built.a, l->built.order, g.arity_cap, opt);
  json j = header(*l, "synthesize");
  j["dim_A"] = s.a->dim();
  j["B"] = quiver_json(s.b);
  j["dim_R"] = s.r.alg->dim();
  json q = json::object();
  for (size_t i = 0; i < s.q_classes.size(); ++i) {
    json c = json::array();
    for (int k : s.q_classes[i]) c.push_back("P" + vertex_name(l->desc, k));
    q["Q" + std::to_string(i + 1)] = c;
  }
  j["projective_summands"] = q;
  json iota = json::object();
  for (int k = 0; k < s.b.alg->dim(); ++k) iota[s.b.alg->name(k)] = witness(*s.r.alg, s.iota.image_basis(k));
  j["iota"] = iota;
  j["report"] = borel_json(s.report, s.iota);
  emit_report(g, j);
  return borel_ok(s.report) ? 0 : 1;
}

// A declared subalgebra, or g(name) for its image under the group generator.
SubalgebraEmbedding resolve_sub(const Loaded& l, const std::string& name) {
  if (name.size() > 3 && name.rfind("g(", 0) == 0 && name.back() == ')') {
    const auto& s = l.built.sub(name.substr(2, name.size() - 3));
    if (!l.built.action_amb) throw ScopeError("g(...) needs a group action");
    SubalgebraEmbedding e = s.emb;
    e.map = l.built.action_amb->maps[1] * e.map;
    e.verify();
    return e;
  }
  return l.built.sub(name).emb;
}

int cmd_verify_borel(const Globals& g, const std::string& path, const std::string& sub) {
  auto l = load(g, path);
  auto emb = resolve_sub(*l, sub);
  BorelOptions opt;
  opt.seed = g.seed;
  auto r = verify_exact_borel(l->built.amb, l->built.amb_order, emb, opt);
  json j = header(*l, "verify-borel");
  j["subalgebra"] = sub;
  j["dim_ambient"] = l->built.amb->dim();
  j["dim_sub"] = emb.sub->dim();
  j["report"] = borel_json(r, emb);
  emit_report(g, j);
  return borel_ok(r) ? 0 : 1;
}

int cmd_conjugate(const Globals& g, const std::string& path, const std::string& sub, const std::string& sub2) {
  auto l = load(g, path);
  auto e1 = resolve_sub(*l, sub), e2 = resolve_sub(*l, sub2);
  auto c = conjugate_subalgebras(e1, e2, g.seed);
  json j = header(*l, "conjugate");
  j["subalgebra"] = sub;
  j["subalgebra2"] = sub2;
  j["decision"] = decision_str(c.decision);
  j["candidates"] = c.candidates;
  if (c.unit) {
    j["unit"] = witness(*l->built.amb, *c.unit);
    j["verified"] = verify_conjugation(e1, e2, *c.unit);
  }
  if (c.phi) j["isomorphism"] = matrix_json(*c.phi);
  if (!c.note.empty()) j["note"] = c.note;
  emit_report(g, j);
  return c.decision == Decision::yes ? 0 : 1;
}

int cmd_skew(const Globals& g, const std::string& path, const std::string& sub_name) {
  auto l = load(g, path);
  const auto& b = l->built;
  if (!b.action_amb) throw ScopeError("skew needs a group action in the input");
  if (b.subs.empty()) throw ScopeError("skew needs a declared subalgebra");
  const auto& sub = sub_name.empty() ? b.subs.front() : b.sub(sub_name);
  const auto& act = *b.action_amb;
  const int order = act.group.order();
  auto roots = poly_roots(b.xi, order);
  json j = header(*l, "skew");
  j["group_order"] = order;
  j["subalgebra"] = sub.name;
  auto sk = skew_group_algebra(act);
  j["dim_skew_group_algebra"] = sk.dim();
  const bool inv = check_invariant_order(act, b.amb_order);
  j["invariant_order"] = inv;
  if (sub.action) j["equivariant_embedding"] = equivariance_check(sub.emb, *sub.action, act);
  auto ob = invariant_borel_obstruction(act, sub.emb);
  json base = json::array();
  for (int k = 0; k < order; ++k) base.push_back(json{{"element", act.group.names[k]}, {"char_poly", ob.base_polys[k].factored_str(roots)}});
  j["base_action"] = base;
  json fams = json::array();
  for (const auto& f : ob.twists.families) {
    json fj;
    fj["rho"] = f.formula;
    fj["parameters"] = f.parameters;
    json sc = json::array();
    for (const auto& x : f.arrow_scalars) sc.push_back(x.str());
    fj["arrow_scalars"] = sc;
    fj["char_poly"] = f.char_polys[order > 1 ? 1 : 0].factored_str(roots);
    fams.push_back(fj);
  }
  j["twists"] = fams;
  j["classification_complete"] = ob.twists.complete;
  if (!ob.twists.note.empty()) j["classification_note"] = ob.twists.note;
  j["verdict"] = verdict_str(ob.verdict);
  if (ob.witness) j["witness"] = witness(*b.amb, *ob.witness);
  j["note"] = ob.note;
  emit_report(g, j);
  return inv ? 0 : 1;
}

int cmd_example(const Globals& g, const std::string& which, int n, const std::string& emit) {
  Description d;
  if (which == "auslander")
    d = example_auslander(n, g.field.empty() ? "rational" : g.field);
  else if (which == "two-source")
    d = example_two_source();
  else if (which == "yuehui")
    d = example_yuehui();
  else if (which == "dual-numbers")
    d = example_dual_numbers();
  else
    throw ScopeError("unknown example '" + which + "' (auslander, two-source, yuehui, dual-numbers)");
  if (which != "auslander" && !g.field.empty()) d.field = g.field;
  const std::string text = emit_description(d);
  if (emit.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(emit);
    if (!out) throw ScopeError("cannot write '" + emit + "'");
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-hereditary algebras, exact Borel subalgebras and A-infinity tools"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized searches");
  app.add_option("--arity-cap", g.arity_cap, "Highest arity of A-infinity operations computed")->check(CLI::Range(2, 12));
  app.add_option("--field", g.field, "rational or fp:<p>; overrides the input file");
  app.add_flag("--json", g.json, "JSON output");

  std::string file, modules = "delta", sub, sub2, which, emit;
  int n = 3, max_degree = 4;
  auto* check = app.add_subcommand("check", "Quasi-heredity report");
  auto* standard = app.add_subcommand("standard-modules", "Standard modules and their composition factors");
  auto* ext = app.add_subcommand("ext", "Ext dimension table");
  ext->add_option("--modules", modules, "delta or simples");
  ext->add_option("--max-degree", max_degree, "Highest Ext degree")->check(CLI::Range(0, 8));
  auto* mm = app.add_subcommand("minimal-model", "A-infinity minimal model of Ext(Delta, Delta)");
  auto* rec = app.add_subcommand("reconstruct", "Bound quiver algebra dual to the model");
  auto* syn = app.add_subcommand("synthesize", "Exact Borel pair (R, B, iota) with its report");
  auto* vb = app.add_subcommand("verify-borel", "Report for a declared subalgebra");
  vb->add_option("--sub", sub, "Subalgebra name, or g(name)")->required();
  auto* conj = app.add_subcommand("conjugate", "Conjugating unit between two subalgebras");
  conj->add_option("--sub", sub, "Subalgebra name, or g(name)")->required();
  conj->add_option("--sub2", sub2, "Subalgebra name, or g(name)")->required();
  auto* skew = app.add_subcommand("skew", "Skew group algebra, invariant order, twists and obstruction");
  skew->add_option("--sub", sub, "Subalgebra name");
  for (auto* c : {check, standard, ext, mm, rec, syn, vb, conj, skew})
    c->add_option("file", file, "Input description, - for stdin")->required();
  auto* ex = app.add_subcommand("example", "Emit a built-in description");
  ex->add_option("which", which, "auslander, two-source, yuehui or dual-numbers")->required();
  ex->add_option("--n", n, "Size of the Auslander example")->check(CLI::Range(1, 8));
  ex->add_option("--emit", emit, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (*check) return cmd_check(g, file);
    if (*standard) return cmd_standard(g, file);
    if (*ext) return cmd_ext(g, file, modules, max_degree);
    if (*mm) return cmd_minimal_model(g, file);
    if (*rec) return cmd_reconstruct(g, file);
    if (*syn) return cmd_synthesize(g, file);
    if (*vb) return cmd_verify_borel(g, file, sub);
    if (*conj) return cmd_conjugate(g, file, sub, sub2);
    if (*skew) return cmd_skew(g, file, sub);
    if (*ex) return cmd_example(g, which, n, emit);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ScopeError& e) {
    std::cerr << "scope error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "scope error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
