#include "steincalc/commands.hpp"

#include <future>
#include <map>

#include "steincalc/generators.hpp"

namespace steincalc {

Json envelope(Json report) {
  Json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["report"] = std::move(report);
  return j;
}

Json error_envelope(const std::string& kind, const std::string& message, const std::string& location) {
  Json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  Json e{{"kind", kind}, {"message", message}};
  if (!location.empty()) e["location"] = location;
  j["error"] = std::move(e);
  return j;
}

Json to_json(const AbelianGroup& g) { return Json::array({g.torsion, g.free_rank}); }

namespace {

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

Json optional_int(const std::optional<Int>& v) { return v ? Json(*v) : Json(nullptr); }

Json sigma_json(const SigmaValue& s) {
  Json j{{"mode", to_string(s.mode)}, {"value", optional_int(s.value)}};
  if (s.baseline) j["baseline"] = *s.baseline;
  return j;
}

Json obstruction_json(const Obstruction& m) {
  Json j{{"kind", to_string(m.kind)}};
  j["value"] = m.kind == Obstruction::Kind::known ? Json(m.value) : Json(nullptr);
  return j;
}

Json word_json(const Word& w) {
  Json out = Json::array();
  for (const TwistDecl& t : twist_decls(w)) out.push_back({{"curve", t.curve}, {"sign", t.sign}});
  return out;
}

Json subsurface_json(const SubsurfaceType& t) { return {{"g", t.genus}, {"b", t.boundary}}; }

}  // namespace

Json to_json(const FillingInvariants& inv) {
  Json j;
  j["surface"] = {{"g", inv.surface.genus()}, {"b", inv.surface.boundary_count()}};
  j["euler"] = inv.euler;
  j["sigma"] = sigma_json(inv.sigma);
  j["b2"] = inv.b2;
  if (inv.planar) {
    j["q"] = matrix_json(inv.planar->Q);
    j["q_invariant_factors"] = inv.planar->invariant_factors;
  } else {
    j["q"] = nullptr;
    j["q_invariant_factors"] = nullptr;
  }
  j["h1"] = to_json(inv.h1.group);
  j["esig"] = optional_int(inv.esig);
  j["esig_mod4"] = inv.esig_mod4 ? Json(*inv.esig_mod4) : Json(nullptr);
  if (inv.chern) {
    j["c1_pd"] = {{"class", inv.chern->c1_pd},
                  {"reduced", inv.chern->reduced},
                  {"order", inv.chern->order},
                  {"zero", inv.chern->is_zero()}};
  } else {
    j["c1_pd"] = nullptr;
  }
  j["notes"] = inv.notes;
  return j;
}

Json to_json(const PlanarityCertificate& cert) {
  Json j;
  j["verdict"] = to_string(cert.verdict);
  if (!cert.witness) {
    j["witness"] = nullptr;
  } else if (const auto* r = std::get_if<RelatorWitness>(&*cert.witness)) {
    Json w{{"kind", "relator"},
           {"relator", r->relator},
           {"direction", r->direction},
           {"positions", r->positions},
           {"commutations", r->commutations},
           {"m", obstruction_json(r->m)}};
    w["allowable"] = r->allowable ? Json(*r->allowable) : Json(nullptr);
    w["bounds"] = r->bounds ? subsurface_json(*r->bounds) : Json(nullptr);
    j["witness"] = std::move(w);
  } else {
    const auto& b = std::get<BoundingWitness>(*cert.witness);
    j["witness"] = {{"kind", "bounding"},
                    {"subsurface", subsurface_json(b.subsurface)},
                    {"positions", b.positions},
                    {"commutations", b.commutations}};
  }
  j["paper_basis"] = cert.paper_basis;
  j["notes"] = cert.notes;
  return j;
}

namespace {

struct Context {
  Workspace ws;
  std::map<std::string, Int> baselines;
};

Context make_context(const Document& doc, const CommandOptions& opt) {
  Context c{build_workspace(doc), {}};
  c.baselines = c.ws.baselines;
  for (const auto& [name, v] : opt.baselines) {
    (void)c.ws.word(name);
    c.baselines[name] = v;
  }
  return c;
}

const std::string& single_word(const Context& c, const CommandOptions& opt) {
  if (opt.words.size() > 1) throw PreconditionError("this command takes a single --word");
  if (!opt.words.empty()) {
    (void)c.ws.word(opt.words.front());
    return opt.words.front();
  }
  if (c.ws.words.empty()) throw PreconditionError("document has no words");
  return c.ws.words.front().first;
}

FillingInvariants invariants_of(const Context& c, const std::string& name, const Word& w,
                                const std::optional<SigmaLedger>& ledger) {
  InvariantOptions o;
  if (ledger) o.ledger = &*ledger;
  if (auto it = c.ws.meridians.find(name); it != c.ws.meridians.end()) o.meridians = it->second;
  o.arcs = c.ws.arcs;
  return compute_invariants(w, o);
}

std::optional<SigmaLedger> baseline_ledger(const Context& c, const std::string& name) {
  if (auto it = c.baselines.find(name); it != c.baselines.end()) return SigmaLedger(name, it->second);
  return std::nullopt;
}

void require_positive(const Word& w, const std::string& name) {
  if (!w.is_positive()) throw PreconditionError("word '" + name + "' must be a positive factorization");
}

CommandResult cmd_invariants(const Context& c, const CommandOptions& opt) {
  const std::string& name = single_word(c, opt);
  const Word& w = c.ws.word(name);
  require_positive(w, name);
  Json r{{"command", "invariants"}, {"word", name}, {"length", w.size()}};
  r.update(to_json(invariants_of(c, name, w, baseline_ledger(c, name))));
  return {r, kExitOk};
}

CommandResult cmd_substitute(const Context& c, const CommandOptions& opt) {
  const std::string& name = single_word(c, opt);
  if (!opt.relator) throw PreconditionError("substitute needs --relator");
  const Word& w = c.ws.word(name);
  require_positive(w, name);
  const RelatorEntry& e = c.ws.relators.at(*opt.relator);
  const int direction = opt.reverse ? -1 : 1;
  const SubstitutionResult s = substitute(w, e.relator, direction);

  auto ledger = baseline_ledger(c, name);
  const FillingInvariants before = invariants_of(c, name, w, ledger);
  if (ledger) ledger->record(s.record);
  const FillingInvariants after = invariants_of(c, name, s.word, ledger);

  Json r{{"command", "substitute"}, {"word", name}, {"relator", e.name()}, {"direction", direction}};
  r["input"] = word_json(w);
  r["output"] = word_json(s.word);
  r["embedding"] = {{"positions", s.record.embedding.positions},
                    {"block_start", *s.record.embedding.block_start},
                    {"commutations", s.record.embedding.commutations}};
  r["ledger"] = {{"dI", optional_int(s.record.dI)}, {"dn", s.record.dn}};
  r["euler"] = {{"before", before.euler}, {"after", after.euler}};
  r["sigma"] = {{"before", sigma_json(before.sigma)}, {"after", sigma_json(after.sigma)}};
  r["esig"] = {{"before", optional_int(before.esig)}, {"after", optional_int(after.esig)}};
  return {r, kExitOk};
}

CommandResult cmd_detect(const Context& c, const CommandOptions& opt) {
  const std::string& name = single_word(c, opt);
  const Word& w = c.ws.word(name);
  require_positive(w, name);
  bool non_planar = false;
  Json certs = Json::array();
  for (const PlanarityCertificate& cert : detect_relator(w, c.ws.relators)) {
    non_planar = non_planar || cert.verdict == Verdict::non_planar;
    certs.push_back(to_json(cert));
  }
  Json bounding = Json::array();
  for (const BoundingDeclaration& d : c.ws.declarations) {
    try {
      const PlanarityCertificate cert = detect_bounding(w, d);
      non_planar = non_planar || cert.verdict == Verdict::non_planar;
      Json j = to_json(cert);
      j["declaration"] = d.name;
      bounding.push_back(std::move(j));
    } catch (const NotApplicable& e) {
      bounding.push_back({{"declaration", d.name}, {"verdict", "not-applicable"}, {"notes", Json::array({e.what()})}});
    }
  }
  Json r{{"command", "detect"}, {"word", name}};
  r["verdict"] = to_string(non_planar ? Verdict::non_planar : Verdict::no_obstruction_found);
  r["certificates"] = std::move(certs);
  r["bounding"] = std::move(bounding);
  return {r, kExitOk};
}

CommandResult cmd_verify(const Context& c, const CommandOptions& opt) {
  Json list = Json::array();
  bool all_pass = true;
  for (const RelatorEntry& e : c.ws.relators.entries()) {
    if (opt.relator && e.name() != *opt.relator) continue;
    const RelatorReport rep = verify_relator(e.relator);
    all_pass = all_pass && rep.necessary_conditions_hold();
    Json j{{"name", e.name()},
           {"provenance", to_string(e.relator.provenance)},
           {"I", optional_int(e.relator.I)},
           {"n", optional_int(e.relator.n)},
           {"m", obstruction_json(e.m)}};
    j["left"] = e.relator.left ? word_json(*e.relator.left) : Json(nullptr);
    j["right"] = e.relator.right ? word_json(*e.relator.right) : Json(nullptr);
    Json parts = Json::array();
    for (const auto& p : e.decomposition) parts.push_back({{"relator", p.relator}, {"multiplicity", p.multiplicity}});
    j["decomposition"] = std::move(parts);
    j["homology_identity"] = to_string(rep.homology_identity);
    j["exponent_consistent"] = to_string(rep.exponent_consistent);
    j["allowable"] = rep.allowable ? Json(*rep.allowable) : Json(nullptr);
    j["failing_basis_vectors"] = rep.failing_basis_vectors;
    if (e.m.kind == Obstruction::Kind::known) j["m_mod4"] = mod4(e.m.value);
    j["notes"] = rep.notes;
    list.push_back(std::move(j));
  }
  if (opt.relator && list.empty()) throw PreconditionError("unknown relator '" + *opt.relator + "'");
  Json r{{"command", "verify-relator"}, {"all_necessary_conditions_hold", all_pass}, {"relators", std::move(list)}};
  return {r, kExitOk};
}

CommandResult cmd_esig(const Context& c, const CommandOptions& opt) {
  if (opt.words.size() != 2) throw PreconditionError("esig-compare needs exactly two --word options");
  std::vector<FillingInvariants> inv;
  Json rows = Json::array();
  for (const std::string& name : opt.words) {
    const Word& w = c.ws.word(name);
    require_positive(w, name);
    inv.push_back(invariants_of(c, name, w, baseline_ledger(c, name)));
    rows.push_back({{"word", name},
                    {"euler", inv.back().euler},
                    {"sigma", sigma_json(inv.back().sigma)},
                    {"esig", optional_int(inv.back().esig)}});
  }
  // Baselines are named after their words; two words are comparable when
  // both are exact or both trace back to one shared baseline name.
  const EsigComparison cmp = esig_check(inv[0], inv[1], opt.assert_same_boundary);
  Json r{{"command", "esig-compare"}, {"fillings", std::move(rows)}};
  r["equal"] = cmp.equal;
  r["congruent_mod4"] = cmp.congruent_mod4;
  r["planarity_contradiction"] = cmp.planarity_contradiction;
  if (opt.assert_same_boundary) {
    const EsigPlanarityReport t = esig_planarity_test(cmp.esig1, cmp.esig2);
    r["planarity_test"] = {{"verdict", t.verdict},
                           {"certificate", t.certificate ? to_json(*t.certificate) : Json(nullptr)}};
  }
  return {r, cmp.planarity_contradiction ? kExitAlarm : kExitOk};
}

}  // namespace

CommandResult run(const std::string& command, const Document& doc, const CommandOptions& options) {
  const Context c = make_context(doc, options);
  if (command == "invariants") return cmd_invariants(c, options);
  if (command == "substitute") return cmd_substitute(c, options);
  if (command == "detect") return cmd_detect(c, options);
  if (command == "verify-relator") return cmd_verify(c, options);
  if (command == "esig-compare") return cmd_esig(c, options);
  throw PreconditionError("unknown command '" + command + "'");
}

CommandResult run_family(const CommandOptions& o) {
  if (o.g_max < 0 || o.b_min < 1 || o.b_max < o.b_min) throw PreconditionError("empty or invalid family range");
  std::vector<std::future<Json>> rows;
  for (int g = 0; g <= o.g_max; ++g)
    for (int b = o.b_min; b <= o.b_max; ++b)
      rows.push_back(std::async(std::launch::async, [g, b] {
        const Document doc = generate_tau_boundary(g, b);
        const Context c = make_context(doc, {});
        const Word& w = c.ws.word("tau_boundary");
        const FillingInvariants inv = invariants_of(c, "tau_boundary", w, baseline_ledger(c, "tau_boundary"));
        Json row{{"g", g}, {"b", b}};
        row.update(to_json(inv));
        row.erase("surface");
        return row;
      }));
  Json table = Json::array();
  for (auto& f : rows) table.push_back(f.get());
  return {Json{{"command", "family"}, {"rows", std::move(table)}}, kExitOk};
}

}  // namespace steincalc
