#include "steincalc/relators.hpp"

#include <array>
#include <string>

#include "steincalc/error.hpp"

namespace steincalc {

std::string to_string(Obstruction::Kind k) {
  switch (k) {
    case Obstruction::Kind::known:
      return "known";
    case Obstruction::Kind::nonzero_unspecified:
      return "nonzero-unspecified";
    case Obstruction::Kind::unknown:
      return "unknown";
  }
  return "unknown";
}

Obstruction obstruction_from(const std::optional<Int>& I, const std::optional<Int>& n) {
  if (I && n) return Obstruction::known(checked_add(*I, *n));
  return Obstruction::unknown();
}

RelatorEntry RelatorEntry::inverse() const {
  RelatorEntry inv;
  inv.relator.name = relator.name + "^-1";
  inv.relator.left = relator.right;
  inv.relator.right = relator.left;
  if (relator.I) inv.relator.I = -*relator.I;
  if (relator.n) inv.relator.n = -*relator.n;
  inv.relator.provenance = relator.provenance;
  inv.m = m;
  if (m.kind == Obstruction::Kind::known) inv.m.value = -m.value;
  if (decomposition.empty()) {
    inv.decomposition.push_back({relator.name, -1});
  } else {
    for (auto it = decomposition.rbegin(); it != decomposition.rend(); ++it)
      inv.decomposition.push_back({it->relator, -it->multiplicity});
  }
  inv.notes = notes;
  return inv;
}

namespace {

const Curve& curve(const CurveSystem& s, CurveId id) {
  if (id.value >= s.size()) throw PreconditionError("unknown curve id");
  return s[id];
}

bool lantern_classes_balance(const CurveSystem& s, const LanternCurves& c) {
  const std::array<CurveId, 4> left{c.a1, c.a2, c.a3, c.a4};
  const std::array<CurveId, 3> right{c.a12, c.a23, c.a13};
  const Surface& surf = s.surface();

  bool all_planar = true;
  for (CurveId id : left) all_planar = all_planar && curve(s, id).hole_set.has_value();
  for (CurveId id : right) all_planar = all_planar && curve(s, id).hole_set.has_value();
  if (all_planar) {
    HomologyClass l = HomologyClass::zero(surf), r = HomologyClass::zero(surf);
    for (CurveId id : left) l = l + HomologyClass::holes(surf, *s[id].hole_set);
    for (CurveId id : right) r = r + HomologyClass::holes(surf, *s[id].hole_set);
    return l == r;
  }
  // Orientations are not part of the data, so try every choice.
  for (unsigned mask = 0; mask < (1U << 6); ++mask) {
    HomologyClass sum = curve(s, left[0]).homology;
    for (std::size_t i = 1; i < 4; ++i) {
      const HomologyClass& h = curve(s, left[i]).homology;
      sum = (mask >> (i - 1)) & 1U ? sum - h : sum + h;
    }
    for (std::size_t i = 0; i < 3; ++i) {
      const HomologyClass& h = curve(s, right[i]).homology;
      sum = (mask >> (i + 3)) & 1U ? sum + h : sum - h;
    }
    if (sum.is_zero()) return true;
  }
  return false;
}

std::string side_string(const CurveSystem& s, std::span<const CurveId> ids) {
  std::string out;
  for (CurveId id : ids) out += (out.empty() ? "" : ", ") + s[id].name;
  return out;
}

}  // namespace

RelatorEntry lantern(std::shared_ptr<const CurveSystem> system, const LanternCurves& c, std::string name) {
  if (!system) throw PreconditionError("lantern needs a curve system");
  if (!lantern_classes_balance(*system, c))
    throw PreconditionError("lantern curves violate [a12] + [a23] + [a13] = [a1] + [a2] + [a3] + [a4]");
  const std::array<CurveId, 4> left{c.a1, c.a2, c.a3, c.a4};
  const std::array<CurveId, 3> right{c.a12, c.a23, c.a13};
  RelatorEntry e;
  e.relator = make_relator(std::move(name), Word::positive(system, left), Word::positive(system, right), Int{1},
                           Provenance::paper_value);
  e.m = obstruction_from(e.relator.I, e.relator.n);
  return e;
}

RelatorEntry braid(std::shared_ptr<const CurveSystem> system, CurveId alpha, CurveId beta, CurveId gamma,
                   std::string name) {
  if (!system) throw PreconditionError("braid relator needs a curve system");
  const HomologyClass expected = twist_action(curve(*system, alpha), curve(*system, beta).homology);
  const HomologyClass& g = curve(*system, gamma).homology;
  if (!(g == expected || g == -expected))
    throw PreconditionError("braid relator: class of '" + (*system)[gamma].name + "' is not tau_alpha(beta)");
  const std::array<CurveId, 2> left{alpha, beta};
  const std::array<CurveId, 2> right{gamma, alpha};
  RelatorEntry e;
  e.relator = make_relator(std::move(name), Word::positive(system, left), Word::positive(system, right), Int{0},
                           Provenance::paper_value);
  e.m = obstruction_from(e.relator.I, e.relator.n);
  return e;
}

Int chain_exponent(int n) {
  if (n < 1) throw PreconditionError("chain length must be at least 1");
  const Int k = n;
  return n % 2 == 0 ? k * (2 * k + 2) - 1 : k * (k + 1) - 2;
}

int chain_power(int n) {
  if (n < 1) throw PreconditionError("chain length must be at least 1");
  return n % 2 == 0 ? 2 * n + 2 : n + 1;
}

std::optional<Int> chain_signature(int n) {
  switch (n) {
    case 1:
      return 0;
    case 2:
      return -7;
    case 3:
      return -6;
    default:
      return std::nullopt;
  }
}

void validate_chain(const CurveSystem& system, const ChainConfig& config) {
  if (config.n < 1 || static_cast<int>(config.chain.size()) != config.n)
    throw PreconditionError("chain must list exactly n curves");
  const std::size_t want = config.n % 2 == 0 ? 1 : 2;
  if (config.boundary.size() != want)
    throw PreconditionError("a " + std::to_string(config.n) + "-chain has " + std::to_string(want) +
                            " boundary curve(s)");
  for (std::size_t i = 0; i < config.chain.size(); ++i)
    for (std::size_t j = i + 1; j < config.chain.size(); ++j) {
      const Int p = intersection_pairing(curve(system, config.chain[i]).homology, curve(system, config.chain[j]).homology);
      const bool consecutive = j == i + 1;
      if (consecutive ? (p != 1 && p != -1) : p != 0)
        throw PreconditionError("chain curves '" + system[config.chain[i]].name + "' and '" +
                                system[config.chain[j]].name + "' have intersection number " + std::to_string(p));
    }
  for (CurveId id : config.boundary) (void)curve(system, id);
}

RelatorEntry chain(std::shared_ptr<const CurveSystem> system, const ChainConfig& config,
                   std::optional<std::string> name) {
  if (!system) throw PreconditionError("chain relator needs a curve system");
  validate_chain(*system, config);
  const int n = config.n;
  std::vector<CurveId> left;
  if (n % 2 == 0)
    left = {config.boundary[0]};
  else
    left = {config.boundary[1], config.boundary[0]};
  std::vector<CurveId> right;
  for (int k = 0; k < chain_power(n); ++k) right.insert(right.end(), config.chain.begin(), config.chain.end());

  const auto I = chain_signature(n);
  RelatorEntry e;
  e.relator = make_relator(name.value_or("chain" + std::to_string(n)), Word::positive(system, left),
                           Word::positive(system, right), I,
                           n == 2 || n == 3 ? Provenance::paper_value : Provenance::derived);
  e.m = obstruction_from(I, e.relator.n);
  if (n % 2 == 0)
    e.bounds = SubsurfaceType{n / 2, 1};
  else
    e.bounds = SubsurfaceType{(n - 1) / 2, 2};
  if (n == 1) e.notes.push_back("the 1-chain relation holds word for word in the annulus, so I = 0");
  if (!I) e.notes.push_back("signature not tabulated for this chain length");
  return e;
}

RelatorEntry compose_relators(std::span<const RelatorEntry> parts, std::string name) {
  RelatorEntry e;
  e.relator.name = std::move(name);
  e.relator.provenance = Provenance::derived;
  std::optional<Int> I = Int{0}, n = Int{0};
  bool m_known = true;
  Int m = 0;
  for (const RelatorEntry& p : parts) {
    I = I && p.relator.I ? std::optional<Int>(checked_add(*I, *p.relator.I)) : std::nullopt;
    n = n && p.relator.n ? std::optional<Int>(checked_add(*n, *p.relator.n)) : std::nullopt;
    if (p.m.kind == Obstruction::Kind::known)
      m = checked_add(m, p.m.value);
    else
      m_known = false;
    if (p.decomposition.empty())
      e.decomposition.push_back({p.name(), 1});
    else
      e.decomposition.insert(e.decomposition.end(), p.decomposition.begin(), p.decomposition.end());
  }
  e.relator.I = I;
  e.relator.n = n;
  e.m = m_known ? Obstruction::known(m) : Obstruction::unknown();
  return e;
}

RelatorEntry non_standard_relator(const NonStandardConfiguration& config, std::string name) {
  const StandardLantern sl = standard_lantern_configuration();
  const RelatorEntry lan = lantern(sl.system, sl.curves);
  const StandardChain sc = standard_chain_configuration(2);
  const RelatorEntry ch = chain(sc.system, sc.config);
  const std::array<RelatorEntry, 3> parts{lan, lan.inverse(), ch};
  const RelatorEntry values = compose_relators(parts, name);

  RelatorEntry e;
  e.relator = make_relator(std::move(name), Word::positive(config.system, config.left),
                           Word::positive(config.system, config.right), values.relator.I, Provenance::paper_value);
  if (e.relator.n != values.relator.n)
    throw Error("internal error: non-standard relator exponent disagrees with its decomposition");
  e.m = obstruction_from(e.relator.I, e.relator.n);
  e.decomposition = {{lan.name(), 1}, {lan.name(), -1}, {ch.name(), 1}};
  e.notes.push_back("right side: " + side_string(*config.system, config.right));
  return e;
}

RelatorEntry non_standard_relator() { return non_standard_relator(non_standard_configuration()); }

GenusBoundaryLookup genus_boundary_relator(int genus, int boundary) {
  if (genus < 0 || boundary < 1) throw PreconditionError("invalid subsurface type");
  const std::string label = "Sigma_{" + std::to_string(genus) + "," + std::to_string(boundary) + "}";
  if (genus == 1 && boundary == 1) {
    GenusBoundaryLookup out;
    const StandardChain sc = standard_chain_configuration(2);
    out.entry = chain(sc.system, sc.config, "genus1_b1");
    out.note = "the 2-chain relator";
    return out;
  }
  if (genus == 1 && boundary <= 9) {
    RelatorEntry e;
    e.relator.name = "genus1_b" + std::to_string(boundary);
    e.relator.provenance = Provenance::paper_value;
    e.m = Obstruction::known(4);
    e.bounds = SubsurfaceType{1, boundary};
    e.notes.push_back("built from one 2-chain and lanterns; I and n not tabulated");
    return {e, "relator on " + label + " with m = 4"};
  }
  if (genus == 1) return {std::nullopt, "no such relator for b > 9"};
  if (genus == 2 && boundary <= 8) {
    RelatorEntry e;
    e.relator.name = "genus2_b" + std::to_string(boundary);
    e.relator.provenance = Provenance::paper_value;
    e.m = Obstruction::nonzero();
    e.bounds = SubsurfaceType{2, boundary};
    e.notes.push_back("m is non-zero; its value is not tabulated");
    return {e, "relator on " + label + " with non-zero m"};
  }
  if (genus == 2 && boundary <= 12) return {std::nullopt, "it is not known whether relators exist"};
  if (genus == 2) return {std::nullopt, "no such relator for b > 12"};
  return {std::nullopt, "no tabulated relator for genus " + std::to_string(genus)};
}

GenusBoundaryLookup genus_boundary_relator(int genus, int boundary, std::shared_ptr<const CurveSystem> system,
                                           std::span<const CurveId> boundary_curves) {
  if (!system) throw PreconditionError("genus-boundary relator needs a curve system");
  if (static_cast<int>(boundary_curves.size()) != boundary)
    throw PreconditionError("expected " + std::to_string(boundary) + " boundary curves, got " +
                            std::to_string(boundary_curves.size()));
  GenusBoundaryLookup out = genus_boundary_relator(genus, boundary);
  if (!out.entry) return out;
  for (CurveId id : boundary_curves) (void)curve(*system, id);
  RelatorEntry& e = *out.entry;
  e.relator.left = Word::positive(system, boundary_curves);
  e.relator.right.reset();
  e.relator.I.reset();
  e.relator.n.reset();
  e.decomposition.clear();
  e.bounds = SubsurfaceType{genus, boundary};
  return out;
}

void RelatorDatabase::add(RelatorEntry entry) {
  if (index_.contains(entry.name())) throw PreconditionError("duplicate relator name '" + entry.name() + "'");
  index_.emplace(entry.name(), entries_.size());
  entries_.push_back(std::move(entry));
}

const RelatorEntry* RelatorDatabase::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const RelatorEntry& RelatorDatabase::at(const std::string& name) const {
  if (const RelatorEntry* e = find(name)) return *e;
  throw PreconditionError("unknown relator '" + name + "'");
}

RelatorDatabase standard_relators() {
  RelatorDatabase db;
  const StandardLantern sl = standard_lantern_configuration();
  db.add(lantern(sl.system, sl.curves));
  const BraidConfiguration bc = braid_configuration();
  db.add(braid(bc.system, bc.alpha, bc.beta, bc.gamma));
  for (int n : {2, 3}) {
    const StandardChain sc = standard_chain_configuration(n);
    db.add(chain(sc.system, sc.config));
  }
  db.add(non_standard_relator());
  return db;
}

}  // namespace steincalc
