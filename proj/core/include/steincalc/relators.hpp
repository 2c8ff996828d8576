#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steincalc/configurations.hpp"
#include "steincalc/word.hpp"

namespace steincalc {

/// Value of the obstruction m(r) = I(r) + n(r).
struct Obstruction {
  enum class Kind { known, nonzero_unspecified, unknown };
  Kind kind = Kind::unknown;
  Int value = 0;  // meaningful only when known

  static Obstruction known(Int v) { return {Kind::known, v}; }
  static Obstruction nonzero() { return {Kind::nonzero_unspecified, 0}; }
  static Obstruction unknown() { return {Kind::unknown, 0}; }

  /// True when m is known to be non-zero (either a non-zero value or flagged).
  bool certainly_nonzero() const { return kind == Kind::nonzero_unspecified || (kind == Kind::known && value != 0); }

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

std::string to_string(Obstruction::Kind k);

struct DecompositionPart {
  std::string relator;
  int multiplicity = 1;  // +1 or -1 (reversed)

  friend bool operator==(const DecompositionPart&, const DecompositionPart&) = default;
};

/// Genus and boundary count of an embedded subsurface.
struct SubsurfaceType {
  int genus = 0;
  int boundary = 0;

  friend bool operator==(const SubsurfaceType&, const SubsurfaceType&) = default;
};

struct RelatorEntry {
  Relator relator;
  Obstruction m;
  std::vector<DecompositionPart> decomposition;
  /// Set when the left side is the boundary multicurve of an embedded
  /// Sigma_{g,b} that the relator lives on.
  std::optional<SubsurfaceType> bounds;
  std::vector<std::string> notes;

  const std::string& name() const { return relator.name; }
  /// r^{-1}: sides swapped, I, n and m negated.
  RelatorEntry inverse() const;
};

/// m from I and n when both are known.
Obstruction obstruction_from(const std::optional<Int>& I, const std::optional<Int>& n);

/// tau_{a1} tau_{a2} tau_{a3} tau_{a4} = tau_{a12} tau_{a23} tau_{a13}; I = 1, m = 0.
/// Throws PreconditionError when the classes do not satisfy
/// [a12] + [a23] + [a13] = [a1] + [a2] + [a3] + [a4] (up to orientation).
RelatorEntry lantern(std::shared_ptr<const CurveSystem> system, const LanternCurves& curves,
                     std::string name = "lantern");

/// tau_alpha tau_beta = tau_gamma tau_alpha with gamma = tau_alpha(beta). The
/// class of gamma is checked up to sign; I = 0, m = 0.
RelatorEntry braid(std::shared_ptr<const CurveSystem> system, CurveId alpha, CurveId beta, CurveId gamma,
                   std::string name = "braid");

/// Exponent n of the n-chain relator: n(2n+2) - 1 for even n, n(n+1) - 2 for odd n.
Int chain_exponent(int n);
/// Power of (tau_{a1} ... tau_{an}) on the right side.
int chain_power(int n);
/// Signature of the n-chain relator where known (n = 1, 2, 3).
std::optional<Int> chain_signature(int n);

/// Checks consecutive pairings +-1, others 0, and the boundary count.
void validate_chain(const CurveSystem& system, const ChainConfig& config);

/// lambda = (tau_{a1} ... tau_{an})^k with lambda = tau_delta (n even) or
/// tau_{delta2} tau_{delta1} (n odd).
RelatorEntry chain(std::shared_ptr<const CurveSystem> system, const ChainConfig& config,
                   std::optional<std::string> name = std::nullopt);

/// Value-only product of relators: I, n and m add up (missing values
/// propagate). Reversed parts are passed already inverted.
RelatorEntry compose_relators(std::span<const RelatorEntry> parts, std::string name);

/// The non-standard relator on Sigma_{1,3}: two lanterns and a 2-chain.
RelatorEntry non_standard_relator(const NonStandardConfiguration& config, std::string name = "r_ns");
RelatorEntry non_standard_relator();

struct GenusBoundaryLookup {
  std::optional<RelatorEntry> entry;
  std::string note;
};

/// Relator whose left side is the boundary multicurve of Sigma_{g,b}, for
/// the ranges where its m is known. Value-only; the right side is not
/// written out.
GenusBoundaryLookup genus_boundary_relator(int genus, int boundary);
/// Same, with the left side given by explicit boundary curves in a system.
GenusBoundaryLookup genus_boundary_relator(int genus, int boundary, std::shared_ptr<const CurveSystem> system,
                                           std::span<const CurveId> boundary_curves);

class RelatorDatabase {
 public:
  /// Throws PreconditionError on a duplicate name.
  void add(RelatorEntry entry);
  const RelatorEntry* find(const std::string& name) const;
  const RelatorEntry& at(const std::string& name) const;
  const std::vector<RelatorEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::vector<RelatorEntry> entries_;
  std::map<std::string, std::size_t> index_;
};

/// Lantern, braid, 2-chain, 3-chain and the non-standard relator on their
/// standard configurations.
RelatorDatabase standard_relators();

}  // namespace steincalc
