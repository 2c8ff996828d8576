#include "steincalc/invariants.hpp"

#include <algorithm>

#include "steincalc/error.hpp"

namespace steincalc {

Int euler_characteristic(const Word& w) {
  return checked_add(w.surface().euler_characteristic(), static_cast<Int>(w.size()));
}

namespace {

IntMatrix boundary_map(const Word& w) {
  std::vector<IntVector> cols;
  cols.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) cols.push_back(w.curve_at(i).homology.coords());
  return IntMatrix::from_columns(w.surface().rank(), cols);
}

}  // namespace

PlanarForm planar_intersection_form(const Word& w) {
  if (!w.surface().planar()) throw UnsupportedInput("planar intersection form needs a genus-0 page");
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!w.curve_at(i).hole_set) throw UnsupportedInput("curve '" + w.curve_at(i).name + "' has no hole set");

  PlanarForm f;
  f.boundary_map = boundary_map(w);
  const auto kernel = integer_kernel(f.boundary_map);
  f.b2 = kernel.size();
  f.kernel = IntMatrix::from_columns(w.size(), kernel);
  f.Q = IntMatrix(f.b2, f.b2);
  for (std::size_t u = 0; u < f.b2; ++u)
    for (std::size_t v = 0; v < f.b2; ++v) {
      Int dot = 0;
      for (std::size_t k = 0; k < w.size(); ++k) dot = checked_add(dot, checked_mul(kernel[u][k], kernel[v][k]));
      f.Q(u, v) = -dot;
    }
  f.invariant_factors = invariant_factors(f.Q);
  f.signature = signature(f.Q);
  return f;
}

std::size_t second_betti_number(const Word& w) { return w.size() - rational_rank(boundary_map(w)); }

std::optional<Int> SigmaLedger::offset() const {
  Int sum = 0;
  for (const auto& r : records_) {
    if (!r.dI) return std::nullopt;
    sum = checked_add(sum, *r.dI);
  }
  return sum;
}

std::string to_string(SigmaValue::Mode m) {
  switch (m) {
    case SigmaValue::Mode::exact:
      return "exact";
    case SigmaValue::Mode::relative:
      return "relative";
    case SigmaValue::Mode::unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

bool has_full_hole_data(const Word& w) {
  if (!w.surface().planar()) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!w.curve_at(i).hole_set) return false;
  return true;
}

}  // namespace

SigmaValue sigma(const Word& w, const SigmaLedger* ledger) {
  if (has_full_hole_data(w)) return {SigmaValue::Mode::exact, planar_intersection_form(w).signature, std::nullopt};
  if (!ledger) throw RelativeUnavailable("no sigma baseline for a non-planar page");
  SigmaValue s;
  s.baseline = ledger->baseline();
  if (auto off = ledger->offset()) {
    s.mode = SigmaValue::Mode::relative;
    s.value = checked_add(ledger->baseline_sigma(), *off);
  }
  return s;
}

H1Boundary h1_boundary(const Word& w) { return h1_boundary(w, relative_basis(w.surface())); }

H1Boundary h1_boundary(const Word& w, std::span<const Arc> arcs) {
  const Surface& s = w.surface();
  std::vector<IntVector> basis;
  for (const Arc& arc : arcs) {
    if (arc.rel_class.size() != s.rank()) throw PreconditionError("arc '" + arc.name + "' has the wrong rank");
    basis.push_back(arc.rel_class);
  }
  if (arcs.size() != s.rank()) throw PreconditionError("need exactly " + std::to_string(s.rank()) + " arcs");
  const SmithForm snf = smith_normal_form(IntMatrix::from_columns(s.rank(), basis));
  const IntVector diag = snf.diagonal();
  if (snf.rank != s.rank() || std::any_of(diag.begin(), diag.end(), [](Int d) { return d != 1; }))
    throw PreconditionError("arcs do not form a basis of relative homology");

  std::vector<IntVector> relations;
  for (const Arc& arc : arcs) {
    HomologyClass diff = HomologyClass::zero(s);
    for (auto it = w.twists().rbegin(); it != w.twists().rend(); ++it) {
      const HomologyClass& c = w.system()[it->curve].homology;
      // Current relative class: the arc plus the image of the accumulated
      // closed difference (its boundary coordinates die).
      IntVector rel = to_relative(diff);
      for (std::size_t i = 0; i < rel.size(); ++i) rel[i] = checked_add(rel[i], arc.rel_class[i]);
      const Int k = arc_pairing(s, rel, c);
      if (k != 0) diff = diff + c.scaled(checked_mul(it->sign, k));
    }
    relations.push_back(diff.coords());
  }
  H1Boundary h;
  h.relations = IntMatrix::from_columns(s.rank(), relations);
  h.group = FinitelyGeneratedQuotient(h.relations).group();
  return h;
}

bool is_boundary_multitwist(const Word& w) {
  const int b = w.surface().boundary_count();
  if (static_cast<int>(w.size()) != b || !w.is_positive()) return false;
  std::vector<char> seen(static_cast<std::size_t>(b) + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& j = w.curve_at(i).boundary_parallel_to;
    if (!j || seen[static_cast<std::size_t>(*j)]) return false;
    seen[static_cast<std::size_t>(*j)] = 1;
  }
  return true;
}

ChernData chern_pd(const Word& w, const std::optional<std::vector<Int>>& rotations,
                   const std::optional<std::vector<HomologyClass>>& meridians) {
  const Surface& s = w.surface();
  ChernData out;
  if (rotations) {
    if (rotations->size() != w.size()) throw UnsupportedInput("need one rotation number per twist");
    out.rotations = *rotations;
  } else {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto& r = w.curve_at(i).rotation;
      if (!r) throw UnsupportedInput("curve '" + w.curve_at(i).name + "' has no rotation number");
      out.rotations.push_back(*r);
    }
  }
  std::vector<HomologyClass> mu;
  if (meridians) {
    if (meridians->size() != w.size()) throw UnsupportedInput("need one meridian class per twist");
    mu = *meridians;
  } else {
    if (!is_boundary_multitwist(w))
      throw UnsupportedInput("meridian classes are only defaulted for the boundary multitwist");
    for (std::size_t i = 0; i < w.size(); ++i) mu.push_back(w.curve_at(i).homology);
  }
  HomologyClass c1 = HomologyClass::zero(s);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(mu[i].surface() == s)) throw UnsupportedInput("meridian class on the wrong surface");
    c1 = c1 + mu[i].scaled(out.rotations[i]);
  }
  out.c1_pd = c1.coords();
  const FinitelyGeneratedQuotient q(h1_boundary(w).relations);
  out.reduced = q.reduce(out.c1_pd);
  out.order = q.order(out.c1_pd);
  return out;
}

int mod4(Int x) { return static_cast<int>(((x % 4) + 4) % 4); }

FillingInvariants compute_invariants(const Word& w, const InvariantOptions& options) {
  FillingInvariants inv;
  inv.surface = w.surface();
  inv.euler = euler_characteristic(w);
  inv.b2 = second_betti_number(w);
  if (has_full_hole_data(w)) inv.planar = planar_intersection_form(w);
  try {
    inv.sigma = sigma(w, options.ledger);
  } catch (const RelativeUnavailable& e) {
    inv.notes.emplace_back(e.what());
  }
  if (inv.sigma.value) {
    inv.esig = checked_add(inv.euler, *inv.sigma.value);
    inv.esig_mod4 = mod4(*inv.esig);
  }
  inv.h1 = options.arcs ? h1_boundary(w, *options.arcs) : h1_boundary(w);
  try {
    inv.chern = chern_pd(w, options.rotations, options.meridians);
  } catch (const UnsupportedInput& e) {
    inv.notes.push_back(std::string("c1 not computed: ") + e.what());
  }
  return inv;
}

EsigComparison esig_check(const FillingInvariants& x, const FillingInvariants& y, bool same_boundary) {
  using M = SigmaValue::Mode;
  const bool both_exact = x.sigma.mode == M::exact && y.sigma.mode == M::exact;
  const bool same_baseline =
      x.sigma.mode == M::relative && y.sigma.mode == M::relative && x.sigma.baseline == y.sigma.baseline;
  if (!both_exact && !same_baseline)
    throw IncomparableModes("sigma values are not comparable: " + to_string(x.sigma.mode) + " vs " +
                            to_string(y.sigma.mode));
  if (!x.esig || !y.esig) throw IncomparableModes("e + sigma unavailable");
  EsigComparison c;
  c.esig1 = *x.esig;
  c.esig2 = *y.esig;
  c.equal = c.esig1 == c.esig2;
  c.congruent_mod4 = mod4(c.esig1) == mod4(c.esig2);
  c.planarity_contradiction = same_boundary && both_exact && !c.equal;
  return c;
}

}  // namespace steincalc
