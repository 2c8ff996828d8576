#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "steincalc/invariants.hpp"
#include "steincalc/relators.hpp"
#include "steincalc/word.hpp"

namespace steincalc {

enum class Verdict { non_planar, no_obstruction_found };

std::string to_string(Verdict v);

struct RelatorWitness {
  std::string relator;
  int direction = 1;  // -1: the right side is contained, so r^{-1} is admitted
  std::vector<std::size_t> positions;
  std::vector<std::size_t> commutations;
  Obstruction m;
  std::optional<bool> allowable;
  std::optional<SubsurfaceType> bounds;
};

struct BoundingWitness {
  SubsurfaceType subsurface;
  std::vector<std::size_t> positions;
  std::vector<std::size_t> commutations;
};

/// The engine never certifies planarity: the only verdicts are non-planar
/// (with a re-checkable witness) and no-obstruction-found.
struct PlanarityCertificate {
  Verdict verdict = Verdict::no_obstruction_found;
  std::optional<std::variant<RelatorWitness, BoundingWitness>> witness;
  std::string paper_basis;
  std::vector<std::string> notes;
};

/// The multicurve bounding an embedded Sigma_{g',b'}, as curves of the page.
struct BoundingDeclaration {
  std::string name;
  SubsurfaceType subsurface;
  std::vector<CurveId> multicurve;
};

/// (g >= 1, b in {1,2}), (1, b <= 9) or (2, b <= 8).
bool is_bounding_obstruction_case(const SubsurfaceType& t);

/// One certificate per database entry (and direction) that fires; if none
/// fires, a single no-obstruction-found certificate whose notes list the
/// m = 0 and unknown-m matches. An entry fires when its left side is contained
/// in w, its m is non-zero (known or flagged), and it is allowable or its left
/// side bounds a subsurface of an obstruction case. An allowable entry also
/// fires through r^{-1} when its right side is contained. Entries on other
/// curve systems are skipped.
std::vector<PlanarityCertificate> detect_relator(const Word& w, const RelatorDatabase& db,
                                                 std::size_t budget = kDefaultSearchBudget);

/// Throws PreconditionError for a malformed declaration and NotApplicable
/// when the multicurve is not certifiably contained in w.
PlanarityCertificate detect_bounding(const Word& w, const BoundingDeclaration& decl,
                                     std::size_t budget = kDefaultSearchBudget);

/// Re-runs containment, allowability and the m lookup for a relator witness.
bool recheck(const Word& w, const RelatorDatabase& db, const RelatorWitness& witness);

struct EsigPlanarityReport {
  EsigComparison comparison;
  std::string verdict;  // "consistent with planarity", "not planar (conditional ...)", "assertion inconsistent"
  std::optional<PlanarityCertificate> certificate;
};

/// For two fillings asserted to have the same contact boundary.
EsigPlanarityReport esig_planarity_test(Int esig1, Int esig2);
EsigPlanarityReport esig_planarity_test(const FillingInvariants& x, const FillingInvariants& y);

}  // namespace steincalc
