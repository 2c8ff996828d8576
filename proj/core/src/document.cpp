#include "steincalc/document.hpp"

#include <algorithm>
#include <set>

#include "steincalc/error.hpp"

namespace steincalc {

namespace {

std::string escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

std::string at(const std::string& base, const std::string& key) { return base + "/" + escape(key); }
std::string at(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

[[noreturn]] void fail(const std::string& loc, const std::string& msg) { throw ParseError(loc.empty() ? "/" : loc, msg); }

void check_keys(const Json& j, const std::string& loc, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    const bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
    if (!ok) fail(at(loc, key), "unknown field '" + key + "'");
  }
}

const Json& require_object(const Json& j, const std::string& loc) {
  if (!j.is_object()) fail(loc, "expected an object");
  return j;
}

const Json& require_array(const Json& j, const std::string& loc) {
  if (!j.is_array()) fail(loc, "expected an array");
  return j;
}

Int as_int(const Json& j, const std::string& loc) {
  if (!j.is_number_integer()) fail(loc, "expected an integer");
  return j.get<Int>();
}

int as_small_int(const Json& j, const std::string& loc) {
  const Int v = as_int(j, loc);
  if (v < -1'000'000 || v > 1'000'000) fail(loc, "integer out of range");
  return static_cast<int>(v);
}

std::string as_string(const Json& j, const std::string& loc) {
  if (!j.is_string()) fail(loc, "expected a string");
  return j.get<std::string>();
}

std::string as_name(const Json& j, const std::string& loc) {
  std::string s = as_string(j, loc);
  if (s.empty()) fail(loc, "name must be non-empty");
  return s;
}

const Json& field(const Json& j, const char* key, const std::string& loc) {
  if (!j.contains(key)) fail(loc, std::string("missing field '") + key + "'");
  return j.at(key);
}

IntVector int_vector(const Json& j, const std::string& loc, std::size_t rank) {
  require_array(j, loc);
  if (j.size() != rank)
    fail(loc, "vector has length " + std::to_string(j.size()) + ", surface rank is " + std::to_string(rank));
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(as_int(j[i], at(loc, i)));
  return v;
}

std::vector<std::string> name_list(const Json& j, const std::string& loc) {
  require_array(j, loc);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_name(j[i], at(loc, i)));
  return out;
}

std::vector<TwistDecl> twist_list(const Json& j, const std::string& loc) {
  require_array(j, loc);
  std::vector<TwistDecl> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string l = at(loc, i);
    if (j[i].is_string()) {
      out.push_back({as_name(j[i], l), 1});
      continue;
    }
    require_object(j[i], l);
    check_keys(j[i], l, {"curve", "sign"});
    TwistDecl t{as_name(field(j[i], "curve", l), at(l, "curve")), 1};
    if (j[i].contains("sign")) {
      t.sign = as_small_int(j[i]["sign"], at(l, "sign"));
      if (t.sign != 1 && t.sign != -1) fail(at(l, "sign"), "sign must be 1 or -1");
    }
    out.push_back(t);
  }
  return out;
}

CurveDecl parse_curve(const Json& j, const std::string& loc, const Surface& s) {
  require_object(j, loc);
  check_keys(j, loc, {"name", "homology", "hole_set", "rotation", "boundary_parallel_to"});
  CurveDecl c;
  c.name = as_name(field(j, "name", loc), at(loc, "name"));
  if (j.contains("rotation")) c.rotation = as_small_int(j["rotation"], at(loc, "rotation"));
  if (j.contains("boundary_parallel_to")) {
    const std::string l = at(loc, "boundary_parallel_to");
    c.boundary_parallel_to = as_small_int(j["boundary_parallel_to"], l);
    if (*c.boundary_parallel_to < 1 || *c.boundary_parallel_to > s.boundary_count())
      fail(l, "boundary component out of range");
  }
  if (j.contains("hole_set")) {
    const std::string l = at(loc, "hole_set");
    if (!s.planar()) fail(l, "hole sets are only allowed on planar pages");
    require_array(j["hole_set"], l);
    std::vector<int> holes;
    for (std::size_t i = 0; i < j["hole_set"].size(); ++i) {
      const int h = as_small_int(j["hole_set"][i], at(l, i));
      if (h < 1 || h > s.boundary_count()) fail(at(l, i), "hole index " + std::to_string(h) + " out of range");
      holes.push_back(h);
    }
    std::sort(holes.begin(), holes.end());
    if (std::adjacent_find(holes.begin(), holes.end()) != holes.end()) fail(l, "repeated hole index");
    if (!holes.empty() && holes.front() == 1) {
      if (c.boundary_parallel_to != 1 || holes.size() != 1)
        fail(l, "hole 1 is the outer boundary; only a curve with boundary_parallel_to = 1 may use [1]");
      holes.clear();
      for (int k = 2; k <= s.boundary_count(); ++k) holes.push_back(k);
    }
    c.hole_set = std::move(holes);
  }
  if (j.contains("homology")) {
    c.homology = int_vector(j["homology"], at(loc, "homology"), s.rank());
  } else if (c.boundary_parallel_to) {
    c.homology = HomologyClass::boundary(s, *c.boundary_parallel_to).coords();
  } else if (c.hole_set) {
    c.homology = HomologyClass::holes(s, *c.hole_set).coords();
  } else {
    fail(loc, "curve '" + c.name + "' needs a homology class, hole set or boundary_parallel_to");
  }
  return c;
}

RelatorDecl parse_relator(const Json& j, const std::string& loc) {
  require_object(j, loc);
  check_keys(j, loc, {"name", "builtin", "roles", "chain", "boundary", "genus", "left", "right", "I", "provenance"});
  RelatorDecl r;
  r.name = as_name(field(j, "name", loc), at(loc, "name"));
  if (j.contains("builtin")) r.builtin = as_name(j["builtin"], at(loc, "builtin"));
  if (j.contains("roles")) {
    const std::string l = at(loc, "roles");
    require_object(j["roles"], l);
    for (const auto& [role, curve] : j["roles"].items()) r.roles[role] = as_name(curve, at(l, role));
  }
  if (j.contains("chain")) r.chain = name_list(j["chain"], at(loc, "chain"));
  if (j.contains("boundary")) r.boundary = name_list(j["boundary"], at(loc, "boundary"));
  if (j.contains("genus")) r.genus = as_small_int(j["genus"], at(loc, "genus"));
  if (j.contains("left")) r.left = twist_list(j["left"], at(loc, "left"));
  if (j.contains("right")) r.right = twist_list(j["right"], at(loc, "right"));
  if (j.contains("I")) r.I = as_int(j["I"], at(loc, "I"));
  if (j.contains("provenance")) {
    const std::string p = as_string(j["provenance"], at(loc, "provenance"));
    if (p != "user-asserted") fail(at(loc, "provenance"), "document relators are always user-asserted");
  }
  if (!r.builtin) {
    if (!j.contains("left") || !j.contains("right")) fail(loc, "user relator needs 'left' and 'right'");
    for (const char* k : {"roles", "chain", "boundary", "genus"})
      if (j.contains(k)) fail(at(loc, k), "field only applies to built-in relators");
    for (std::size_t i = 0; i < r.left.size(); ++i)
      if (r.left[i].sign != 1) fail(at(at(loc, "left"), i), "relator sides must be positive words");
    for (std::size_t i = 0; i < r.right.size(); ++i)
      if (r.right[i].sign != 1) fail(at(at(loc, "right"), i), "relator sides must be positive words");
  } else {
    for (const char* k : {"left", "right", "I"})
      if (j.contains(k)) fail(at(loc, k), "built-in relators carry their own words and values");
  }
  return r;
}

CurveId resolve(const CurveSystem& sys, const std::string& name, const std::string& loc) {
  if (auto id = sys.find(name)) return *id;
  fail(loc, "unknown curve '" + name + "'");
}

Word resolve_word(const std::shared_ptr<const CurveSystem>& sys, const std::vector<TwistDecl>& twists,
                  const std::string& loc) {
  std::vector<Twist> t;
  for (std::size_t i = 0; i < twists.size(); ++i)
    t.push_back({resolve(*sys, twists[i].curve, at(loc, i)), twists[i].sign});
  return Word(sys, std::move(t));
}

template <class F>
auto located(const std::string& loc, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(loc, e.what());
  }
}

RelatorEntry build_relator(const std::shared_ptr<const CurveSystem>& sys, const RelatorDecl& r,
                           const std::string& loc) {
  auto role = [&](const char* key) {
    auto it = r.roles.find(key);
    if (it == r.roles.end()) fail(at(loc, "roles"), std::string("missing role '") + key + "'");
    return resolve(*sys, it->second, at(at(loc, "roles"), key));
  };
  auto expect_roles = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : r.roles)
      if (std::none_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; }))
        fail(at(at(loc, "roles"), k), "unknown role '" + k + "'");
  };
  auto names = [&](const std::vector<std::string>& list, const char* key) {
    std::vector<CurveId> ids;
    for (std::size_t i = 0; i < list.size(); ++i) ids.push_back(resolve(*sys, list[i], at(at(loc, key), i)));
    return ids;
  };

  if (!r.builtin) {
    const Word left = resolve_word(sys, r.left, at(loc, "left"));
    const Word right = resolve_word(sys, r.right, at(loc, "right"));
    return located(loc, [&] {
      RelatorEntry e;
      e.relator = make_relator(r.name, left, right, r.I, Provenance::user_asserted);
      e.m = obstruction_from(e.relator.I, e.relator.n);
      return e;
    });
  }
  const std::string& kind = *r.builtin;
  if (kind == "lantern") {
    expect_roles({"a1", "a2", "a3", "a4", "a12", "a23", "a13"});
    const LanternCurves c{role("a1"), role("a2"), role("a3"), role("a4"), role("a12"), role("a23"), role("a13")};
    return located(loc, [&] { return lantern(sys, c, r.name); });
  }
  if (kind == "braid") {
    expect_roles({"alpha", "beta", "gamma"});
    const CurveId a = role("alpha"), b = role("beta"), g = role("gamma");
    return located(loc, [&] { return braid(sys, a, b, g, r.name); });
  }
  if (kind == "chain") {
    if (r.chain.empty()) fail(at(loc, "chain"), "chain relator needs its chain curves");
    ChainConfig cfg{static_cast<int>(r.chain.size()), names(r.chain, "chain"), names(r.boundary, "boundary")};
    return located(loc, [&] { return chain(sys, cfg, r.name); });
  }
  if (kind == "r_ns") {
    expect_roles({"alpha", "beta", "alpha1", "alpha12", "alpha13", "alpha4'", "alpha12'", "alpha13'"});
    NonStandardConfiguration cfg;
    cfg.system = sys;
    cfg.left = {role("alpha4'"), role("alpha13"), role("alpha12")};
    cfg.right.push_back(role("alpha"));
    for (int i = 0; i < 5; ++i) cfg.right.insert(cfg.right.end(), {role("beta"), role("alpha")});
    cfg.right.insert(cfg.right.end(), {role("alpha13'"), role("alpha12'"), role("alpha1")});
    RelatorEntry e = located(loc, [&] { return non_standard_relator(cfg, r.name); });
    if (verify_relator(e.relator).homology_identity != CheckStatus::pass)
      fail(at(loc, "roles"), "curves do not realize the non-standard relator in homology");
    return e;
  }
  if (kind == "genus_boundary") {
    if (!r.genus) fail(loc, "genus_boundary relator needs 'genus'");
    const auto ids = names(r.boundary, "boundary");
    const int b = static_cast<int>(ids.size());
    GenusBoundaryLookup g = located(loc, [&] { return genus_boundary_relator(*r.genus, b, sys, ids); });
    if (!g.entry) fail(loc, "no relator for Sigma_{" + std::to_string(*r.genus) + "," + std::to_string(b) + "}: " + g.note);
    g.entry->relator.name = r.name;
    return *g.entry;
  }
  fail(at(loc, "builtin"), "unknown built-in relator '" + kind + "'");
}

}  // namespace

const Word& Workspace::word(const std::string& name) const {
  for (const auto& [n, w] : words)
    if (n == name) return w;
  throw PreconditionError("unknown word '" + name + "'");
}

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Byte offset to line:column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(std::to_string(line) + ":" + std::to_string(col), "malformed JSON");
  }
  return parse_document_json(j);
}

Document parse_document_json(const Json& j) {
  require_object(j, "");
  check_keys(j, "", {"surface", "curves", "disjoint", "arcs", "words", "relators", "declarations", "baselines",
                     "meridians"});
  Document doc;
  const Json& surf = require_object(field(j, "surface", ""), "/surface");
  check_keys(surf, "/surface", {"g", "b"});
  doc.genus = as_small_int(field(surf, "g", "/surface"), "/surface/g");
  doc.boundary = as_small_int(field(surf, "b", "/surface"), "/surface/b");
  if (doc.genus < 0) fail("/surface/g", "genus must be non-negative");
  if (doc.boundary < 1) fail("/surface/b", "a page has at least one boundary component");
  if (doc.genus > 10'000 || doc.boundary > 10'000) fail("/surface", "surface too large");
  const Surface s(doc.genus, doc.boundary);

  if (j.contains("curves")) {
    const Json& cs = require_array(j["curves"], "/curves");
    for (std::size_t i = 0; i < cs.size(); ++i) doc.curves.push_back(parse_curve(cs[i], at("/curves", i), s));
  }
  if (j.contains("disjoint")) {
    const Json& ds = require_array(j["disjoint"], "/disjoint");
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const auto pair = name_list(ds[i], at("/disjoint", i));
      if (pair.size() != 2) fail(at("/disjoint", i), "expected a pair of curve names");
      doc.disjoint.emplace_back(pair[0], pair[1]);
    }
  }
  if (j.contains("arcs")) {
    const Json& as = require_array(j["arcs"], "/arcs");
    for (std::size_t i = 0; i < as.size(); ++i) {
      const std::string l = at("/arcs", i);
      require_object(as[i], l);
      check_keys(as[i], l, {"name", "class"});
      doc.arcs.push_back({as_name(field(as[i], "name", l), at(l, "name")),
                          int_vector(field(as[i], "class", l), at(l, "class"), s.rank())});
    }
  }
  if (j.contains("words")) {
    const Json& ws = require_object(j["words"], "/words");
    for (const auto& [name, twists] : ws.items()) {
      if (name.empty()) fail("/words", "word names must be non-empty");
      doc.words.push_back({name, twist_list(twists, at("/words", name))});
    }
  }
  if (j.contains("relators")) {
    const Json& rs = require_array(j["relators"], "/relators");
    for (std::size_t i = 0; i < rs.size(); ++i) doc.relators.push_back(parse_relator(rs[i], at("/relators", i)));
  }
  if (j.contains("declarations")) {
    const Json& ds = require_array(j["declarations"], "/declarations");
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const std::string l = at("/declarations", i);
      require_object(ds[i], l);
      check_keys(ds[i], l, {"name", "g", "b", "multicurve"});
      DeclarationDecl d;
      d.name = as_name(field(ds[i], "name", l), at(l, "name"));
      d.genus = as_small_int(field(ds[i], "g", l), at(l, "g"));
      d.boundary = as_small_int(field(ds[i], "b", l), at(l, "b"));
      d.multicurve = name_list(field(ds[i], "multicurve", l), at(l, "multicurve"));
      doc.declarations.push_back(std::move(d));
    }
  }
  if (j.contains("baselines")) {
    const Json& bs = require_object(j["baselines"], "/baselines");
    for (const auto& [name, v] : bs.items()) doc.baselines.emplace_back(name, as_int(v, at("/baselines", name)));
  }
  if (j.contains("meridians")) {
    const Json& ms = require_object(j["meridians"], "/meridians");
    for (const auto& [name, list] : ms.items()) {
      const std::string l = at("/meridians", name);
      require_array(list, l);
      std::vector<IntVector> classes;
      for (std::size_t i = 0; i < list.size(); ++i) classes.push_back(int_vector(list[i], at(l, i), s.rank()));
      doc.meridians.emplace_back(name, std::move(classes));
    }
  }
  (void)build_workspace(doc);
  return doc;
}

Workspace build_workspace(const Document& doc) {
  const Surface s = [&] {
    try {
      return Surface(doc.genus, doc.boundary);
    } catch (const Error& e) {
      fail("/surface", e.what());
    }
  }();
  auto sys = std::make_shared<CurveSystem>(s);
  for (std::size_t i = 0; i < doc.curves.size(); ++i) {
    const CurveDecl& c = doc.curves[i];
    const std::string l = at("/curves", i);
    if (c.homology.size() != s.rank()) fail(at(l, "homology"), "vector length does not match surface rank");
    located(l, [&] {
      return sys->add(Curve{c.name, HomologyClass(s, c.homology), c.hole_set, c.rotation, c.boundary_parallel_to});
    });
  }
  for (std::size_t i = 0; i < doc.disjoint.size(); ++i) {
    const std::string l = at("/disjoint", i);
    const CurveId x = resolve(*sys, doc.disjoint[i].first, at(l, 0));
    const CurveId y = resolve(*sys, doc.disjoint[i].second, at(l, 1));
    if (x == y) fail(l, "a curve is not disjoint from itself");
    sys->declare_disjoint(x, y);
  }

  Workspace ws;
  ws.system = sys;
  if (!doc.arcs.empty()) {
    if (doc.arcs.size() != s.rank()) fail("/arcs", "need exactly " + std::to_string(s.rank()) + " arcs");
    ws.arcs = doc.arcs;
    // Reject non-bases at parse time.
    located("/arcs", [&] { return h1_boundary(Word(sys), *ws.arcs); });
  }
  std::set<std::string> word_names;
  for (const NamedWord& w : doc.words) {
    if (!word_names.insert(w.name).second) fail(at("/words", w.name), "duplicate word name");
    ws.words.emplace_back(w.name, resolve_word(sys, w.twists, at("/words", w.name)));
  }
  for (std::size_t i = 0; i < doc.relators.size(); ++i) {
    const std::string l = at("/relators", i);
    RelatorEntry e = build_relator(sys, doc.relators[i], l);
    if (ws.relators.find(e.name())) fail(at(l, "name"), "duplicate relator name '" + e.name() + "'");
    ws.relators.add(std::move(e));
  }
  std::set<std::string> decl_names;
  for (std::size_t i = 0; i < doc.declarations.size(); ++i) {
    const DeclarationDecl& d = doc.declarations[i];
    const std::string l = at("/declarations", i);
    if (!decl_names.insert(d.name).second) fail(at(l, "name"), "duplicate declaration name");
    if (d.genus < 0 || d.boundary < 1) fail(l, "invalid subsurface type");
    if (static_cast<int>(d.multicurve.size()) != d.boundary)
      fail(at(l, "multicurve"), "multicurve must have b = " + std::to_string(d.boundary) + " curves");
    BoundingDeclaration b{d.name, {d.genus, d.boundary}, {}};
    for (std::size_t k = 0; k < d.multicurve.size(); ++k)
      b.multicurve.push_back(resolve(*sys, d.multicurve[k], at(at(l, "multicurve"), k)));
    ws.declarations.push_back(std::move(b));
  }
  for (const auto& [name, v] : doc.baselines) {
    if (!word_names.contains(name)) fail(at("/baselines", name), "baseline for unknown word '" + name + "'");
    ws.baselines[name] = v;
  }
  for (const auto& [name, classes] : doc.meridians) {
    const std::string l = at("/meridians", name);
    if (!word_names.contains(name)) fail(l, "meridians for unknown word '" + name + "'");
    if (classes.size() != ws.word(name).size()) fail(l, "need one meridian class per twist");
    std::vector<HomologyClass> hs;
    for (const IntVector& v : classes) {
      if (v.size() != s.rank()) fail(l, "vector length does not match surface rank");
      hs.emplace_back(s, v);
    }
    ws.meridians[name] = std::move(hs);
  }
  return ws;
}

namespace {

Json twists_json(const std::vector<TwistDecl>& twists) {
  Json out = Json::array();
  for (const TwistDecl& t : twists) out.push_back({{"curve", t.curve}, {"sign", t.sign}});
  return out;
}

}  // namespace

Json serialize(const Document& doc) {
  Json j;
  j["surface"] = {{"g", doc.genus}, {"b", doc.boundary}};
  j["curves"] = Json::array();
  for (const CurveDecl& c : doc.curves) {
    Json cj;
    cj["name"] = c.name;
    cj["homology"] = c.homology;
    if (c.hole_set) cj["hole_set"] = *c.hole_set;
    if (c.rotation) cj["rotation"] = *c.rotation;
    if (c.boundary_parallel_to) cj["boundary_parallel_to"] = *c.boundary_parallel_to;
    j["curves"].push_back(std::move(cj));
  }
  if (!doc.disjoint.empty()) {
    j["disjoint"] = Json::array();
    for (const auto& [x, y] : doc.disjoint) j["disjoint"].push_back({x, y});
  }
  if (!doc.arcs.empty()) {
    j["arcs"] = Json::array();
    for (const Arc& a : doc.arcs) j["arcs"].push_back({{"name", a.name}, {"class", a.rel_class}});
  }
  j["words"] = Json::object();
  for (const NamedWord& w : doc.words) j["words"][w.name] = twists_json(w.twists);
  if (!doc.relators.empty()) {
    j["relators"] = Json::array();
    for (const RelatorDecl& r : doc.relators) {
      Json rj;
      rj["name"] = r.name;
      if (r.builtin) {
        rj["builtin"] = *r.builtin;
        if (!r.roles.empty()) {
          rj["roles"] = Json::object();
          for (const auto& [k, v] : r.roles) rj["roles"][k] = v;
        }
        if (!r.chain.empty()) rj["chain"] = r.chain;
        if (!r.boundary.empty()) rj["boundary"] = r.boundary;
        if (r.genus) rj["genus"] = *r.genus;
      } else {
        rj["left"] = twists_json(r.left);
        rj["right"] = twists_json(r.right);
        if (r.I) rj["I"] = *r.I;
        rj["provenance"] = "user-asserted";
      }
      j["relators"].push_back(std::move(rj));
    }
  }
  if (!doc.declarations.empty()) {
    j["declarations"] = Json::array();
    for (const DeclarationDecl& d : doc.declarations)
      j["declarations"].push_back({{"name", d.name}, {"g", d.genus}, {"b", d.boundary}, {"multicurve", d.multicurve}});
  }
  if (!doc.baselines.empty()) {
    j["baselines"] = Json::object();
    for (const auto& [name, v] : doc.baselines) j["baselines"][name] = v;
  }
  if (!doc.meridians.empty()) {
    j["meridians"] = Json::object();
    for (const auto& [name, classes] : doc.meridians) j["meridians"][name] = classes;
  }
  return j;
}

Document document_from(const CurveSystem& system) {
  Document doc;
  doc.genus = system.surface().genus();
  doc.boundary = system.surface().boundary_count();
  for (std::uint32_t i = 0; i < system.size(); ++i) {
    const Curve& c = system[CurveId{i}];
    doc.curves.push_back({c.name, c.homology.coords(), c.hole_set, c.rotation, c.boundary_parallel_to});
  }
  for (const auto& [x, y] : system.disjoint_pairs()) doc.disjoint.emplace_back(system[x].name, system[y].name);
  return doc;
}

std::vector<TwistDecl> twist_decls(const Word& w) {
  std::vector<TwistDecl> out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back({w.curve_at(i).name, w[i].sign});
  return out;
}

}  // namespace steincalc
