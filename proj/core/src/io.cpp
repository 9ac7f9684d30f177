#include "qha/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>

#include "qha/borel.hpp"
#include "qha/errors.hpp"

namespace qha {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ParseError((where.empty() ? std::string("/") : where) + ": " + what);
}

const json& field_of(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, "missing key '" + key + "'");
  return *it;
}

std::string str_of(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

const json& array_of(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

TermDesc parse_term(const json& j, const std::string& where) {
  TermDesc t;
  if (!j.is_object()) bad(where, "expected a term object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string w = where + "/" + it.key();
    if (it.key() == "c") {
      if (it->is_number_integer())
        t.coeff = std::to_string(it->get<long long>());
      else
        t.coeff = str_of(*it, w);
    } else if (it.key() == "path") {
      for (size_t k = 0; k < array_of(*it, w).size(); ++k) t.path.push_back(str_of((*it)[k], w + "/" + std::to_string(k)));
    } else if (it.key() == "vertex") {
      t.vertex = str_of(*it, w);
    } else if (it.key() == "from") {
      t.from = str_of(*it, w);
    } else if (it.key() == "to") {
      t.to = str_of(*it, w);
    } else {
      bad(w, "unknown key");
    }
  }
  if (t.path.empty() == t.vertex.empty()) bad(where, "a term needs exactly one of 'path' and 'vertex'");
  return t;
}

ElementDesc parse_element(const json& j, const std::string& where) {
  ElementDesc e;
  for (size_t k = 0; k < array_of(j, where).size(); ++k) e.push_back(parse_term(j[k], where + "/" + std::to_string(k)));
  return e;
}

std::vector<std::pair<std::string, ElementDesc>> parse_images(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  std::vector<std::pair<std::string, ElementDesc>> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.emplace_back(it.key(), parse_element(*it, where + "/" + it.key()));
  return out;
}

QuiverDesc parse_quiver(const json& q, const json* rels, const std::string& where, const std::string& rwhere) {
  QuiverDesc out;
  const json& vs = array_of(field_of(q, "vertices", where), where + "/vertices");
  for (size_t k = 0; k < vs.size(); ++k) out.vertices.push_back(str_of(vs[k], where + "/vertices/" + std::to_string(k)));
  const json& as = array_of(field_of(q, "arrows", where), where + "/arrows");
  for (size_t k = 0; k < as.size(); ++k) {
    const std::string w = where + "/arrows/" + std::to_string(k);
    out.arrows.push_back({str_of(field_of(as[k], "name", w), w + "/name"), str_of(field_of(as[k], "src", w), w + "/src"),
                          str_of(field_of(as[k], "tgt", w), w + "/tgt")});
  }
  if (rels)
    for (size_t k = 0; k < array_of(*rels, rwhere).size(); ++k)
      out.relations.push_back(parse_element((*rels)[k], rwhere + "/" + std::to_string(k)));
  return out;
}

json emit_term(const TermDesc& t) {
  json j;
  j["c"] = t.coeff;
  if (!t.from.empty()) j["from"] = t.from;
  if (!t.to.empty()) j["to"] = t.to;
  if (t.path.empty())
    j["vertex"] = t.vertex;
  else
    j["path"] = t.path;
  return j;
}

json emit_element(const ElementDesc& e) {
  json j = json::array();
  for (const auto& t : e) j.push_back(emit_term(t));
  return j;
}

json emit_images(const std::vector<std::pair<std::string, ElementDesc>>& im) {
  json j = json::object();
  for (const auto& [k, v] : im) j[k] = emit_element(v);
  return j;
}

json emit_quiver(const QuiverDesc& q) {
  json j;
  j["vertices"] = q.vertices;
  j["arrows"] = json::array();
  for (const auto& a : q.arrows) j["arrows"].push_back(json{{"name", a.name}, {"src", a.src}, {"tgt", a.tgt}});
  return j;
}

json emit_relations(const QuiverDesc& q) {
  json j = json::array();
  for (const auto& r : q.relations) j.push_back(emit_element(r));
  return j;
}

std::pair<int, int> line_col(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Description parse_description(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    auto p = msg.find("parse error");
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     (p == std::string::npos ? msg : msg.substr(p)));
  }
  if (!j.is_object()) bad("", "expected an object");
  const std::string comp = str_of(field_of(j, "composition", ""), "/composition");
  if (comp != "right-to-left") bad("/composition", "only \"right-to-left\" is supported");
  Description d;
  for (auto it = j.begin(); it != j.end(); ++it) {
    static const std::vector<std::string> known{"composition", "name",     "field",       "quiver", "relations",
                                                "order",       "projective", "subalgebras", "group"};
    if (std::find(known.begin(), known.end(), it.key()) == known.end()) bad("/" + it.key(), "unknown key");
  }
  if (j.contains("name")) d.name = str_of(j["name"], "/name");
  if (j.contains("field")) d.field = str_of(j["field"], "/field");
  const json* rels = j.contains("relations") ? &j["relations"] : nullptr;
  d.quiver = parse_quiver(field_of(j, "quiver", ""), rels, "/quiver", "/relations");
  if (j.contains("order")) {
    const json& o = array_of(j["order"], "/order");
    for (size_t k = 0; k < o.size(); ++k) {
      const std::string w = "/order/" + std::to_string(k);
      if (!o[k].is_array() || o[k].size() != 2) bad(w, "expected a pair [less, greater]");
      d.order.emplace_back(str_of(o[k][0], w + "/0"), str_of(o[k][1], w + "/1"));
    }
  }
  if (j.contains("projective")) {
    const json& p = array_of(j["projective"], "/projective");
    for (size_t k = 0; k < p.size(); ++k) {
      const std::string w = "/projective/" + std::to_string(k);
      d.projective.push_back({str_of(field_of(p[k], "name", w), w + "/name"), str_of(field_of(p[k], "vertex", w), w + "/vertex")});
    }
  }
  if (j.contains("subalgebras")) {
    const json& s = array_of(j["subalgebras"], "/subalgebras");
    for (size_t k = 0; k < s.size(); ++k) {
      const std::string w = "/subalgebras/" + std::to_string(k);
      SubalgebraDesc sd;
      sd.name = str_of(field_of(s[k], "name", w), w + "/name");
      const json* srels = s[k].contains("relations") ? &s[k]["relations"] : nullptr;
      sd.quiver = parse_quiver(field_of(s[k], "quiver", w), srels, w + "/quiver", w + "/relations");
      const json& im = field_of(s[k], "images", w);
      sd.vertex_images = parse_images(field_of(im, "vertices", w + "/images"), w + "/images/vertices");
      if (im.contains("arrows")) sd.arrow_images = parse_images(im["arrows"], w + "/images/arrows");
      if (s[k].contains("action")) {
        const json& act = s[k]["action"];
        if (!act.is_object()) bad(w + "/action", "expected an object");
        for (auto it = act.begin(); it != act.end(); ++it)
          sd.action.emplace_back(it.key(), str_of(*it, w + "/action/" + it.key()));
      }
      d.subalgebras.push_back(std::move(sd));
    }
  }
  if (j.contains("group")) {
    const json& g = j["group"];
    GroupDesc gd;
    const json& ord = field_of(g, "order", "/group");
    if (!ord.is_number_integer() || ord.get<int>() < 1) bad("/group/order", "expected a positive integer");
    gd.order = ord.get<int>();
    if (g.contains("arrows")) gd.arrow_images = parse_images(g["arrows"], "/group/arrows");
    if (g.contains("summand_weights")) {
      const json& sw = g["summand_weights"];
      if (!sw.is_object()) bad("/group/summand_weights", "expected an object");
      for (auto it = sw.begin(); it != sw.end(); ++it) {
        if (!it->is_number_integer()) bad("/group/summand_weights/" + it.key(), "expected an integer");
        gd.summand_weights.emplace_back(it.key(), it->get<int>());
      }
    }
    d.group = std::move(gd);
  }
  return d;
}

std::string emit_description(const Description& d) {
  json j;
  j["composition"] = "right-to-left";
  if (!d.name.empty()) j["name"] = d.name;
  j["field"] = d.field;
  j["quiver"] = emit_quiver(d.quiver);
  j["relations"] = emit_relations(d.quiver);
  j["order"] = json::array();
  for (const auto& [a, b] : d.order) j["order"].push_back(json::array({a, b}));
  if (!d.projective.empty()) {
    j["projective"] = json::array();
    for (const auto& s : d.projective) j["projective"].push_back(json{{"name", s.name}, {"vertex", s.vertex}});
  }
  if (!d.subalgebras.empty()) {
    j["subalgebras"] = json::array();
    for (const auto& s : d.subalgebras) {
      json sj;
      sj["name"] = s.name;
      sj["quiver"] = emit_quiver(s.quiver);
      sj["relations"] = emit_relations(s.quiver);
      sj["images"] = json{{"vertices", emit_images(s.vertex_images)}, {"arrows", emit_images(s.arrow_images)}};
      if (!s.action.empty()) {
        json a = json::object();
        for (const auto& [k, v] : s.action) a[k] = v;
        sj["action"] = a;
      }
      j["subalgebras"].push_back(sj);
    }
  }
  if (d.group) {
    json g;
    g["order"] = d.group->order;
    g["arrows"] = emit_images(d.group->arrow_images);
    if (!d.group->summand_weights.empty()) {
      json w = json::object();
      for (const auto& [k, v] : d.group->summand_weights) w[k] = v;
      g["summand_weights"] = w;
    }
    j["group"] = g;
  }
  return j.dump(2) + "\n";
}

std::optional<Scalar> primitive_root(int n) {
  if (n < 1) return std::nullopt;
  if (n == 1) return Scalar(1);
  const Field& f = Field::current();
  if (f.is_rational()) {
    if (n == 2) return Scalar(-1);
    return std::nullopt;
  }
  const std::uint64_t p = f.characteristic();
  if ((p - 1) % static_cast<std::uint64_t>(n) != 0) return std::nullopt;
  std::vector<int> primes;
  for (int q = 2, m = n; q <= m; ++q)
    if (m % q == 0) {
      primes.push_back(q);
      while (m % q == 0) m /= q;
    }
  for (std::uint64_t x = 2; x < p; ++x) {
    Scalar s(static_cast<long>(x));
    if (!s.pow(n).is_one()) continue;
    bool prim = true;
    for (int q : primes)
      if (s.pow(n / q).is_one()) prim = false;
    if (prim) return s;
  }
  return std::nullopt;
}

Scalar parse_scalar(const std::string& text, const std::optional<Scalar>& xi) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw ParseError("empty scalar");
  bool neg = false;
  while (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    if (s[0] == '-') neg = !neg;
    s = s.substr(1);
  }
  Scalar out(1);
  auto xpos = s.find("xi");
  std::string num = xpos == std::string::npos ? s : s.substr(0, xpos);
  if (!num.empty() && num.back() == '*') num.pop_back();
  if (!num.empty()) {
    try {
      out = Scalar::from_string(num);
    } catch (const std::exception&) {
      throw ParseError("bad scalar '" + text + "'");
    }
  }
  if (xpos != std::string::npos) {
    if (!xi) throw ScopeError("scalar '" + text + "' uses xi but no primitive root of unity of the group order exists in " + Field::current().name());
    long e = 1;
    std::string rest = s.substr(xpos + 2);
    if (!rest.empty()) {
      if (rest[0] != '^') throw ParseError("bad scalar '" + text + "'");
      try {
        e = std::stol(rest.substr(1));
      } catch (const std::exception&) {
        throw ParseError("bad scalar '" + text + "'");
      }
    }
    Scalar x = *xi;
    if (e < 0) {
      x = x.inv();
      e = -e;
    }
    out *= x.pow(e);
  }
  return neg ? -out : out;
}

namespace {

int index_of(const std::vector<std::string>& names, const std::string& n, const std::string& what) {
  auto it = std::find(names.begin(), names.end(), n);
  if (it == names.end()) throw ParseError("unknown " + what + " '" + n + "'");
  return static_cast<int>(it - names.begin());
}

Quiver make_quiver(const QuiverDesc& q) {
  Quiver out;
  out.n = static_cast<int>(q.vertices.size());
  out.vertex_names = q.vertices;
  for (const auto& a : q.arrows) {
    for (const auto& b : out.arrows)
      if (b.name == a.name) throw ParseError("duplicate arrow '" + a.name + "'");
    out.arrows.push_back({index_of(q.vertices, a.src, "vertex"), index_of(q.vertices, a.tgt, "vertex"), a.name});
  }
  return out;
}

Path make_path(const Quiver& q, const TermDesc& t) {
  Path p;
  if (t.path.empty()) {
    p.vertex = index_of(q.vertex_names, t.vertex, "vertex");
    return p;
  }
  for (const auto& a : t.path) {
    int k = q.arrow_index(a);
    if (k < 0) throw ParseError("unknown arrow '" + a + "'");
    p.arrows.push_back(k);
  }
  for (size_t k = 0; k + 1 < p.arrows.size(); ++k)
    if (q.arrows[p.arrows[k + 1]].tgt != q.arrows[p.arrows[k]].src)
      throw ParseError("path is not composable right to left at arrow '" + t.path[k] + "'");
  return p;
}

// Path as an element of a path algebra: product of its arrows.
Vec path_element(const FinDimAlgebra& a, const Path& p) {
  const auto& pres = *a.presentation();
  if (p.arrows.empty()) return a.idempotent(p.vertex);
  auto arrow_vec = [&](int k) {
    for (size_t b = 0; b < pres.basis_paths.size(); ++b)
      if (pres.basis_paths[b].arrows.size() == 1 && pres.basis_paths[b].arrows[0] == k) return a.basis_vec(static_cast<int>(b));
    return zero_vec(a.dim());
  };
  Vec out = arrow_vec(p.arrows[0]);
  for (size_t k = 1; k < p.arrows.size(); ++k) out = a.mul(out, arrow_vec(p.arrows[k]));
  return out;
}

std::vector<Relation> make_relations(const Quiver& q, const QuiverDesc& d, const std::optional<Scalar>& xi) {
  std::vector<Relation> out;
  for (const auto& r : d.relations) {
    Relation rel;
    for (const auto& t : r) {
      if (!t.from.empty() || !t.to.empty()) throw ParseError("relations cannot name summands");
      rel.push_back({parse_scalar(t.coeff, xi), make_path(q, t)});
    }
    out.push_back(rel);
  }
  return out;
}

struct ElementContext {
  const Quiver* quiver;
  const FinDimAlgebra* a;
  const ProjectiveEndomorphisms* r;
  std::vector<std::string> summands;
  std::optional<Scalar> xi;
};

Vec make_element(const ElementContext& cx, const ElementDesc& e) {
  const int d = cx.r ? cx.r->alg->dim() : cx.a->dim();
  Vec out = zero_vec(d);
  for (const auto& t : e) {
    Scalar c = parse_scalar(t.coeff, cx.xi);
    Path p = make_path(*cx.quiver, t);
    Vec v = path_element(*cx.a, p);
    if (cx.r) {
      if (t.from.empty() || t.to.empty()) throw ParseError("terms of End(P)^op elements need 'from' and 'to'");
      const int s = index_of(cx.summands, t.from, "summand"), u = index_of(cx.summands, t.to, "summand");
      Vec c2 = cx.a->mul(cx.a->mul(cx.r->eps[s], v), cx.r->eps[u]);
      if (c2 != v) throw ParseError("path does not lie in the corner of summands '" + t.from + "', '" + t.to + "'");
      v = cx.r->element(s, u, v);
    } else if (!t.from.empty() || !t.to.empty()) {
      throw ParseError("summands named but no projective summands declared");
    }
    axpy(out, c, v);
  }
  return out;
}

// The linear map on a path algebra sending each arrow to a given element and fixing vertices.
Matrix path_algebra_map(const FinDimAlgebra& src, const std::vector<Vec>& vertex_images, const std::vector<Vec>& arrow_images,
                        int tgt_dim, const std::function<Vec(const Vec&, const Vec&)>& mul) {
  const auto& pres = *src.presentation();
  Matrix m(tgt_dim, src.dim());
  for (int b = 0; b < src.dim(); ++b) {
    const Path& p = pres.basis_paths[b];
    Vec v = p.arrows.empty() ? vertex_images[p.vertex] : arrow_images[p.arrows[0]];
    for (size_t k = 1; k < p.arrows.size(); ++k) v = mul(v, arrow_images[p.arrows[k]]);
    for (int i = 0; i < tgt_dim; ++i) m(i, b) = v[i];
  }
  return m;
}

}  // namespace

const BuiltDescription::Sub& BuiltDescription::sub(const std::string& name) const {
  for (const auto& s : subs)
    if (s.name == name) return s;
  throw ScopeError("no subalgebra named '" + name + "'");
}

BuiltDescription build_description(const Description& d) {
  BuiltDescription out;
  const int order_n = d.group ? d.group->order : 1;
  out.xi = primitive_root(order_n);
  Quiver q = make_quiver(d.quiver);
  auto a = std::make_shared<FinDimAlgebra>(build_path_algebra(q, make_relations(q, d.quiver, out.xi)));
  out.a = a;
  if (a->num_simples() != q.n) throw ScopeError("vertices of the quiver are not pairwise non-isomorphic");
  std::vector<std::pair<int, int>> covers;
  for (const auto& [x, y] : d.order)
    covers.emplace_back(index_of(q.vertex_names, x, "vertex"), index_of(q.vertex_names, y, "vertex"));
  out.order = SimpleOrder(q.n, covers);
  ElementContext cx{&q, a.get(), nullptr, {}, out.xi};
  if (!d.projective.empty()) {
    std::vector<Vec> eps;
    std::vector<int> cls;
    for (const auto& s : d.projective) {
      const int v = index_of(q.vertex_names, s.vertex, "vertex");
      eps.push_back(a->idempotent(v));
      cls.push_back(v);
      if (std::count(cx.summands.begin(), cx.summands.end(), s.name)) throw ParseError("duplicate summand '" + s.name + "'");
      cx.summands.push_back(s.name);
    }
    out.r = projective_endomorphisms(a, eps, cx.summands);
    cx.r = &*out.r;
    out.amb = out.r->alg;
    const auto& rc = out.amb->simple_class();
    std::vector<int> f(static_cast<size_t>(out.amb->num_simples()), -1);
    for (size_t s = 0; s < cls.size(); ++s) f[rc[s]] = cls[s];
    if (std::count(f.begin(), f.end(), -1)) throw ScopeError("projective summands do not cover every vertex");
    out.amb_order = out.order.pullback(f);
  } else {
    out.amb = a;
    out.amb_order = out.order;
  }
  if (d.group) {
    const auto& g = *d.group;
    std::vector<Vec> arrows;
    for (int k = 0; k < static_cast<int>(q.arrows.size()); ++k) arrows.push_back(path_element(*a, Path{-1, {k}}));
    for (const auto& [name, img] : g.arrow_images) {
      const int k = q.arrow_index(name);
      if (k < 0) throw ParseError("unknown arrow '" + name + "' in the group action");
      ElementContext ca{&q, a.get(), nullptr, {}, out.xi};
      arrows[k] = make_element(ca, img);
    }
    if (!out.xi) throw ScopeError("no primitive root of unity of order " + std::to_string(g.order) + " in " + Field::current().name());
    std::vector<Vec> verts;
    for (int v = 0; v < q.n; ++v) verts.push_back(a->idempotent(v));
    Matrix ga = path_algebra_map(*a, verts, arrows, a->dim(), [&](const Vec& x, const Vec& y) { return a->mul(x, y); });
    out.action_a = cyclic_action(a, ga, g.order);
    if (out.r) {
      std::vector<int> w(cx.summands.size(), 0);
      for (const auto& [name, wt] : g.summand_weights) w[index_of(cx.summands, name, "summand")] = wt;
      const auto& r = *out.r;
      const int dr = r.alg->dim(), ns = r.summands();
      Matrix gr(dr, dr);
      for (int s = 0; s < ns; ++s)
        for (int t = 0; t < ns; ++t)
          for (size_t k = 0; k < r.corner[s][t].size(); ++k) {
            Vec img = scaled(r.element(s, t, ga.apply(r.corner[s][t][k])), out.xi->pow(((w[s] - w[t]) % g.order + g.order) % g.order));
            const int col = r.index[s][t][k];
            for (int i = 0; i < dr; ++i) gr(i, col) = img[i];
          }
      out.action_amb = cyclic_action(out.amb, gr, g.order);
    } else {
      if (!g.summand_weights.empty()) throw ParseError("summand weights given but no projective summands declared");
      out.action_amb = out.action_a;
    }
  }
  for (const auto& sd : d.subalgebras) {
    Quiver sq = make_quiver(sd.quiver);
    auto sa = std::make_shared<FinDimAlgebra>(build_path_algebra(sq, make_relations(sq, sd.quiver, out.xi)));
    std::vector<Vec> verts(static_cast<size_t>(sq.n)), arrows(sq.arrows.size());
    std::vector<bool> vseen(verts.size()), aseen(arrows.size());
    for (const auto& [name, img] : sd.vertex_images) {
      const int v = index_of(sq.vertex_names, name, "subalgebra vertex");
      verts[v] = make_element(cx, img);
      vseen[v] = true;
    }
    for (const auto& [name, img] : sd.arrow_images) {
      const int k = sq.arrow_index(name);
      if (k < 0) throw ParseError("unknown subalgebra arrow '" + name + "'");
      arrows[k] = make_element(cx, img);
      aseen[k] = true;
    }
    if (std::count(vseen.begin(), vseen.end(), false) || std::count(aseen.begin(), aseen.end(), false))
      throw ParseError("subalgebra '" + sd.name + "' needs an image for every vertex and arrow");
    BuiltDescription::Sub sub;
    sub.name = sd.name;
    const auto& amb = out.amb;
    sub.emb = SubalgebraEmbedding{sa, amb,
                                  path_algebra_map(*sa, verts, arrows, amb->dim(),
                                                   [&](const Vec& x, const Vec& y) { return amb->mul(x, y); })};
    sub.emb.verify();
    if (!sd.action.empty()) {
      std::vector<Vec> sverts, sarrows;
      for (int v = 0; v < sq.n; ++v) sverts.push_back(sa->idempotent(v));
      for (int k = 0; k < static_cast<int>(sq.arrows.size()); ++k) sarrows.push_back(path_element(*sa, Path{-1, {k}}));
      for (const auto& [name, sc] : sd.action) {
        const int k = sq.arrow_index(name);
        if (k < 0) throw ParseError("unknown subalgebra arrow '" + name + "' in action");
        sarrows[k] = scaled(sarrows[k], parse_scalar(sc, out.xi));
      }
      Matrix gs = path_algebra_map(*sa, sverts, sarrows, sa->dim(), [&](const Vec& x, const Vec& y) { return sa->mul(x, y); });
      sub.action = cyclic_action(sa, gs, order_n);
    }
    out.subs.push_back(std::move(sub));
  }
  return out;
}

namespace {

TermDesc vertex_term(const std::string& v, const std::string& c = "1") {
  TermDesc t;
  t.coeff = c;
  t.vertex = v;
  return t;
}

TermDesc path_term(std::vector<std::string> p, const std::string& c = "1") {
  TermDesc t;
  t.coeff = c;
  t.path = std::move(p);
  return t;
}

std::string num(int i) { return std::to_string(i); }

}  // namespace

Description example_auslander(int n, const std::string& field) {
  if (n < 1) throw ScopeError("auslander example needs n >= 1");
  Description d;
  d.name = "auslander-" + num(n);
  d.field = field;
  for (int i = 1; i <= n; ++i) d.quiver.vertices.push_back(num(i));
  for (int i = 1; i < n; ++i) d.quiver.arrows.push_back({"x" + num(i), num(i), num(i + 1)});
  for (int i = 2; i <= n; ++i) d.quiver.arrows.push_back({"y" + num(i), num(i), num(i - 1)});
  for (int i = 2; i <= n - 1; ++i)
    d.quiver.relations.push_back({path_term({"y" + num(i + 1), "x" + num(i)}), path_term({"x" + num(i - 1), "y" + num(i)}, "-1")});
  if (n > 1) d.quiver.relations.push_back({path_term({"x" + num(n - 1), "y" + num(n)})});
  for (int i = 1; i < n; ++i) d.order.emplace_back(num(i), num(i + 1));

  // R = End(P)^op for P the sum of the Q_i, and B the free algebra on the complete directed graph.
  FenwickData f = fenwick_projectives(n);
  auto label = [&](int idx) { return FenwickData::label(f.index_set[idx]); };
  for (int i = 0; i < n; ++i)
    for (int idx : f.by_start[i]) d.projective.push_back({label(idx), num(f.j[idx])});
  // Path from vertex v going up a steps, then down b steps.
  auto up_down = [&](int v, int a, int b) {
    std::vector<std::string> applied;
    for (int k = 0; k < a; ++k) applied.push_back("x" + num(v + k));
    for (int k = 0; k < b; ++k) applied.push_back("y" + num(v + a - k));
    std::reverse(applied.begin(), applied.end());
    return applied;
  };
  auto r_term = [&](int s, int t, int a, int b) {
    TermDesc term;
    term.from = label(s);
    term.to = label(t);
    if (a == 0 && b == 0)
      term.vertex = num(f.j[s]);
    else
      term.path = up_down(f.j[t], a, b);
    return term;
  };
  auto beta = [&](int i) {
    std::vector<int> v(static_cast<size_t>(n), 0);
    for (int k = i; k <= n; ++k) v[k - 1] = 1;
    return v;
  };
  auto plus_eps = [&](std::vector<int> v, int i) {
    v[i - 1] = 1;
    return v;
  };
  SubalgebraDesc b;
  b.name = "B";
  for (int i = 1; i <= n; ++i) b.quiver.vertices.push_back(num(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) b.quiver.arrows.push_back({"(" + num(i) + "," + num(j) + ")", num(i), num(j)});
  for (int i = 1; i <= n; ++i) {
    ElementDesc e;
    for (int idx : f.by_start[i - 1]) e.push_back(r_term(idx, idx, 0, 0));
    b.vertex_images.emplace_back(num(i), e);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      ElementDesc e;
      if (j > i + 1) {
        for (int idx : f.by_start[j - 1]) e.push_back(r_term(idx, f.find(plus_eps(f.index_set[idx], i)), 0, 0));
      } else {
        const int bi1 = f.find(beta(i + 1));
        e.push_back(r_term(bi1, f.find(beta(i)), 1, 0));
        for (int k = i + 2; k <= n; ++k) e.push_back(r_term(bi1, f.find(plus_eps(beta(k), i)), 0, k - i - 1));
        for (int idx : f.by_start[i])
          if (idx != bi1) e.push_back(r_term(idx, f.find(plus_eps(f.index_set[idx], i)), 0, 0));
      }
      const std::string name = "(" + num(i) + "," + num(j) + ")";
      b.arrow_images.emplace_back(name, e);
      const int ex = ((-j + i + 1) % n + n) % n;
      b.action.emplace_back(name, ex == 0 ? "1" : (ex == 1 ? "xi" : "xi^" + num(ex)));
    }
  d.subalgebras.push_back(b);

  // g(x) = x, g(y) = xi y, included when the field has a primitive n-th root of unity.
  bool has_root = false;
  {
    FieldScope fs(Field::parse(field));
    has_root = primitive_root(n).has_value();
  }
  if (n > 1 && has_root) {
    GroupDesc g;
    g.order = n;
    for (int i = 2; i <= n; ++i) g.arrow_images.emplace_back("y" + num(i), ElementDesc{path_term({"y" + num(i)}, "xi")});
    for (int i = 0; i < n; ++i)
      for (int idx : f.by_start[i]) g.summand_weights.emplace_back(label(idx), f.zeros[idx]);
    d.group = g;
  }
  return d;
}

Description example_two_source() {
  Description d;
  d.name = "two-source";
  d.quiver.vertices = {"1", "2", "3"};
  d.quiver.arrows = {{"a", "1", "2"}, {"b", "3", "2"}};
  d.order = {{"1", "2"}, {"2", "3"}};
  d.projective = {{"1", "1"}, {"3'", "3"}, {"2", "2"}, {"3", "3"}};
  auto term = [](const std::string& from, const std::string& to, std::vector<std::string> path, const std::string& v) {
    TermDesc t;
    t.from = from;
    t.to = to;
    t.path = std::move(path);
    t.vertex = v;
    return t;
  };
  SubalgebraDesc b;
  b.name = "B";
  b.quiver.vertices = {"1", "2", "3"};
  b.quiver.arrows = {{"a'", "1", "2"}, {"b'", "1", "3"}};
  b.vertex_images = {{"1", {term("1", "1", {}, "1"), term("3'", "3'", {}, "3")}},
                     {"2", {term("2", "2", {}, "2")}},
                     {"3", {term("3", "3", {}, "3")}}};
  b.arrow_images = {{"a'", {term("2", "1", {"a"}, ""), term("2", "3'", {"b"}, "")}}, {"b'", {term("3", "3'", {}, "3")}}};
  d.subalgebras.push_back(b);
  GroupDesc g;
  g.order = 2;
  g.arrow_images = {{"a", {path_term({"a"}, "-1")}}};
  d.group = g;
  return d;
}

Description example_yuehui() {
  Description d;
  d.name = "yuehui";
  d.quiver.vertices = {"1", "2", "3"};
  d.quiver.arrows = {{"alpha", "1", "3"}, {"beta", "3", "2"}};
  d.order = {{"1", "2"}, {"2", "3"}};
  SubalgebraDesc b;
  b.name = "B";
  b.quiver.vertices = {"1", "2", "3"};
  b.quiver.arrows = {{"alpha", "1", "3"}};
  b.vertex_images = {{"1", {vertex_term("1")}}, {"2", {vertex_term("2")}}, {"3", {vertex_term("3")}}};
  b.arrow_images = {{"alpha", {path_term({"alpha"})}}};
  d.subalgebras.push_back(b);
  return d;
}

Description example_dual_numbers() {
  Description d;
  d.name = "dual-numbers";
  d.quiver.vertices = {"1"};
  d.quiver.arrows = {{"x", "1", "1"}};
  d.quiver.relations = {{path_term({"x", "x"})}};
  return d;
}

}  // namespace qha
