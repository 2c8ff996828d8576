#include "steincalc/generators.hpp"

#include "steincalc/configurations.hpp"
#include "steincalc/error.hpp"

namespace steincalc {

namespace {

std::vector<std::string> names(const CurveSystem& s, const std::vector<CurveId>& ids) {
  std::vector<std::string> out;
  for (CurveId id : ids) out.push_back(s[id].name);
  return out;
}

std::vector<TwistDecl> positive(const CurveSystem& s, const std::vector<CurveId>& ids) {
  std::vector<TwistDecl> out;
  for (CurveId id : ids) out.push_back({s[id].name, 1});
  return out;
}

}  // namespace

Document generate_tau_boundary(int genus, int boundary) {
  const TauBoundaryConfiguration t = tau_boundary_configuration(genus, boundary);
  Document doc = document_from(*t.system);
  doc.words.push_back({"tau_boundary", positive(*t.system, t.boundary)});
  doc.declarations.push_back({"page_boundary", genus, boundary, names(*t.system, t.boundary)});
  if (genus > 0 && boundary > 1) doc.baselines.emplace_back("tau_boundary", -1);
  return doc;
}

Document generate_lantern() {
  const StandardLantern l = standard_lantern_configuration();
  const CurveSystem& s = *l.system;
  Document doc = document_from(s);
  doc.words.push_back({"tau_boundary", positive(s, l.boundary)});
  doc.words.push_back({"lantern_right", positive(s, {l.curves.a12, l.curves.a23, l.curves.a13})});
  RelatorDecl r;
  r.name = "lantern";
  r.builtin = "lantern";
  r.roles = {{"a1", s[l.curves.a1].name},   {"a2", s[l.curves.a2].name},   {"a3", s[l.curves.a3].name},
             {"a4", s[l.curves.a4].name},   {"a12", s[l.curves.a12].name}, {"a23", s[l.curves.a23].name},
             {"a13", s[l.curves.a13].name}};
  doc.relators.push_back(std::move(r));
  return doc;
}

Document generate_chain(int n) {
  const StandardChain c = standard_chain_configuration(n);
  const CurveSystem& s = *c.system;
  Document doc = document_from(s);
  std::vector<CurveId> left;
  if (n % 2 == 0)
    left = {c.config.boundary[0]};
  else
    left = {c.config.boundary[1], c.config.boundary[0]};
  std::vector<CurveId> right;
  for (int k = 0; k < chain_power(n); ++k) right.insert(right.end(), c.config.chain.begin(), c.config.chain.end());
  doc.words.push_back({"tau_delta", positive(s, left)});
  doc.words.push_back({"chain_power", positive(s, right)});
  RelatorDecl r;
  r.name = "chain" + std::to_string(n);
  r.builtin = "chain";
  r.chain = names(s, c.config.chain);
  r.boundary = names(s, c.config.boundary);
  doc.relators.push_back(std::move(r));
  const int g = n / 2;
  const int b = n % 2 == 0 ? 1 : 2;
  doc.declarations.push_back({"chain_neighborhood", g, b, names(s, c.config.boundary)});
  return doc;
}

Document generate_r_ns() {
  const NonStandardConfiguration c = non_standard_configuration();
  const CurveSystem& s = *c.system;
  Document doc = document_from(s);
  doc.words.push_back({"rns_left", positive(s, c.left)});
  doc.words.push_back({"rns_right", positive(s, c.right)});
  RelatorDecl r;
  r.name = "r_ns";
  r.builtin = "r_ns";
  for (const char* role : {"alpha", "beta", "alpha1", "alpha12", "alpha13", "alpha4'", "alpha12'", "alpha13'"})
    r.roles[role] = role;
  doc.relators.push_back(std::move(r));
  return doc;
}

}  // namespace steincalc
