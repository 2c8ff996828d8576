#include "steincalc/planarity.hpp"

#include "steincalc/error.hpp"

namespace steincalc {

namespace {

constexpr const char* kRelatorBasis =
    "an admitted allowable relator r with I(r) + n(r) != 0 excludes planar supporting open books";
constexpr const char* kBoundingBasis =
    "a monodromy bounding Sigma_{g,b} with b in {1,2}, or g = 1 and b <= 9, or g = 2 and b <= 8, excludes "
    "planar supporting open books";
constexpr const char* kEsigBasis =
    "planar contact manifolds have e + sigma constant over Stein fillings; e + sigma mod 4 is constant for all";

std::string describe(const SubsurfaceType& t) {
  return "Sigma_{" + std::to_string(t.genus) + "," + std::to_string(t.boundary) + "}";
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::non_planar ? "non-planar" : "no-obstruction-found"; }

bool is_bounding_obstruction_case(const SubsurfaceType& t) {
  if (t.genus < 1 || t.boundary < 1) return false;
  if (t.boundary <= 2) return true;
  return (t.genus == 1 && t.boundary <= 9) || (t.genus == 2 && t.boundary <= 8);
}

std::vector<PlanarityCertificate> detect_relator(const Word& w, const RelatorDatabase& db, std::size_t budget) {
  std::vector<PlanarityCertificate> fired;
  std::vector<std::string> notes;
  for (const RelatorEntry& e : db.entries()) {
    const auto allowable = e.relator.allowable();
    const bool bounds_case = e.bounds && is_bounding_obstruction_case(*e.bounds);
    for (int direction : {1, -1}) {
      const auto& side = direction == 1 ? e.relator.left : e.relator.right;
      if (!side || side->system_ptr() != w.system_ptr() || side->empty()) continue;
      // r^{-1} only counts for allowable relators: the bounding exception is
      // about the left side.
      if (direction == -1 && allowable != true) continue;
      const ContainmentResult c = contains(w, *side, budget);
      if (c.status != Containment::yes) continue;

      const std::string label = direction == 1 ? "'" + e.name() + "'" : "'" + e.name() + "^-1'";
      if (!e.m.certainly_nonzero()) {
        notes.push_back(label + " is contained but " +
                        (e.m.kind == Obstruction::Kind::known ? "m = 0" : "m is unknown"));
        continue;
      }
      if (allowable != true && !bounds_case) {
        notes.push_back(label + " is contained with m != 0 but is not allowable");
        continue;
      }
      Obstruction m = e.m;
      if (direction == -1 && m.kind == Obstruction::Kind::known) m.value = -m.value;
      PlanarityCertificate cert;
      cert.verdict = Verdict::non_planar;
      cert.paper_basis = kRelatorBasis;
      cert.witness =
          RelatorWitness{e.name(), direction, c.witness->positions, c.witness->commutations, m, allowable, e.bounds};
      if (allowable != true)
        cert.notes.push_back("left side is the boundary of an embedded " + describe(*e.bounds) +
                             ", an obstruction case even though a twist curve is null-homologous");
      if (direction == -1) cert.notes.push_back("right side contained: the inverse relator is admitted");
      fired.push_back(std::move(cert));
    }
  }
  if (!fired.empty()) {
    for (auto& cert : fired) cert.notes.insert(cert.notes.end(), notes.begin(), notes.end());
    return fired;
  }
  PlanarityCertificate none;
  none.paper_basis = kRelatorBasis;
  none.notes = std::move(notes);
  none.notes.push_back("no obstruction found; this does not mean the contact structure is planar");
  return {std::move(none)};
}

bool recheck(const Word& w, const RelatorDatabase& db, const RelatorWitness& witness) {
  const RelatorEntry* e = db.find(witness.relator);
  if (!e || (witness.direction != 1 && witness.direction != -1)) return false;
  const auto& side = witness.direction == 1 ? e->relator.left : e->relator.right;
  Obstruction m = e->m;
  if (witness.direction == -1 && m.kind == Obstruction::Kind::known) m.value = -m.value;
  if (!side || !m.certainly_nonzero() || !(m == witness.m)) return false;
  const bool bounds_case = witness.direction == 1 && e->bounds && is_bounding_obstruction_case(*e->bounds);
  if (e->relator.allowable() != true && !bounds_case) return false;
  // The certificate must replay and put the left side in the claimed positions.
  Word arranged = w;
  try {
    arranged = apply_commutations(w, witness.commutations);
  } catch (const Error&) {
    return false;
  }
  const Word& left = *side;
  if (witness.positions.size() != left.size()) return false;
  for (std::size_t k = 0; k < left.size(); ++k)
    if (witness.positions[k] >= w.size() || !(w[witness.positions[k]] == left[k])) return false;
  // Positions must appear in target order after rearranging.
  std::vector<std::size_t> where(w.size());
  std::vector<std::size_t> perm(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) perm[i] = i;
  for (std::size_t s : witness.commutations) std::swap(perm[s], perm[s + 1]);
  for (std::size_t i = 0; i < w.size(); ++i) where[perm[i]] = i;
  for (std::size_t k = 0; k + 1 < left.size(); ++k)
    if (where[witness.positions[k]] >= where[witness.positions[k + 1]]) return false;
  return true;
}

PlanarityCertificate detect_bounding(const Word& w, const BoundingDeclaration& decl, std::size_t budget) {
  const SubsurfaceType& t = decl.subsurface;
  if (t.genus < 0 || t.boundary < 1) throw PreconditionError("invalid subsurface type in '" + decl.name + "'");
  if (static_cast<int>(decl.multicurve.size()) != t.boundary)
    throw PreconditionError("declaration '" + decl.name + "' lists " + std::to_string(decl.multicurve.size()) +
                            " curves for " + std::to_string(t.boundary) + " boundary components");
  const CurveSystem& sys = w.system();
  for (CurveId id : decl.multicurve)
    if (id.value >= sys.size()) throw PreconditionError("declaration '" + decl.name + "' names an unknown curve");
  for (std::size_t i = 0; i < decl.multicurve.size(); ++i)
    for (std::size_t j = i + 1; j < decl.multicurve.size(); ++j)
      if (curves_commute(sys, decl.multicurve[i], decl.multicurve[j]) != CommuteStatus::commute)
        throw PreconditionError("declaration '" + decl.name + "': curves '" + sys[decl.multicurve[i]].name +
                                "' and '" + sys[decl.multicurve[j]].name + "' are not certified disjoint");

  // A boundary multicurve is null-homologous for a suitable orientation.
  if (decl.multicurve.size() <= 20) {
    bool balanced = false;
    for (std::uint32_t mask = 0; mask < (1U << decl.multicurve.size()) && !balanced; mask += 2) {
      HomologyClass sum = HomologyClass::zero(sys.surface());
      for (std::size_t i = 0; i < decl.multicurve.size(); ++i) {
        const HomologyClass& h = sys[decl.multicurve[i]].homology;
        sum = (mask >> i) & 1U ? sum - h : sum + h;
      }
      balanced = sum.is_zero();
    }
    if (!balanced)
      throw PreconditionError("declaration '" + decl.name + "': the multicurve cannot bound a subsurface");
  }

  const Word multicurve = Word::positive(w.system_ptr(), decl.multicurve);
  const ContainmentResult c = contains(w, multicurve, budget);
  if (c.status != Containment::yes)
    throw NotApplicable("the multicurve of '" + decl.name + "' is not certifiably contained in the factorization");

  PlanarityCertificate cert;
  cert.paper_basis = kBoundingBasis;
  if (is_bounding_obstruction_case(t)) {
    cert.verdict = Verdict::non_planar;
    cert.witness = BoundingWitness{t, c.witness->positions, c.witness->commutations};
    if (t.genus == 1 && t.boundary == 1)
      cert.notes.push_back("Sigma_{1,1}: the 2-chain relator applies");
    return cert;
  }
  if (t.genus == 0)
    cert.notes.push_back("a planar subsurface gives no obstruction");
  else
    cert.notes.push_back(genus_boundary_relator(t.genus, t.boundary).note);
  cert.notes.push_back("no obstruction found; this does not mean the contact structure is planar");
  return cert;
}

EsigPlanarityReport esig_planarity_test(Int esig1, Int esig2) {
  EsigPlanarityReport r;
  r.comparison.esig1 = esig1;
  r.comparison.esig2 = esig2;
  r.comparison.equal = esig1 == esig2;
  r.comparison.congruent_mod4 = mod4(esig1) == mod4(esig2);
  if (r.comparison.equal) {
    r.verdict = "consistent with planarity";
  } else if (r.comparison.congruent_mod4) {
    r.verdict = "not planar (conditional on the asserted common boundary)";
    PlanarityCertificate cert;
    cert.verdict = Verdict::non_planar;
    cert.paper_basis = kEsigBasis;
    cert.notes.push_back("e + sigma = " + std::to_string(esig1) + " vs " + std::to_string(esig2) +
                         "; valid only if both fillings have the asserted common contact boundary");
    r.certificate = std::move(cert);
  } else {
    r.verdict = "assertion inconsistent";
  }
  return r;
}

EsigPlanarityReport esig_planarity_test(const FillingInvariants& x, const FillingInvariants& y) {
  const EsigComparison c = esig_check(x, y);
  return esig_planarity_test(c.esig1, c.esig2);
}

}  // namespace steincalc
