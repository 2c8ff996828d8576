#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steincalc/integer_matrix.hpp"
#include "steincalc/surface.hpp"
#include "steincalc/word.hpp"

namespace steincalc {

/// e(X) = (2 - 2g - b) + length(lambda).
Int euler_characteristic(const Word& w);

/// Intersection form of a planar filling. The boundary map sends each
/// vanishing cycle to its homology class; Q is -Id restricted to its kernel.
struct PlanarForm {
  IntMatrix boundary_map;  // (b-1) x n
  IntMatrix kernel;        // n x b2, columns a kernel basis
  IntMatrix Q;             // b2 x b2
  IntVector invariant_factors;
  std::size_t b2 = 0;
  int signature = 0;
};

/// Throws UnsupportedInput unless the page is planar and every twisted curve
/// carries a hole set.
PlanarForm planar_intersection_form(const Word& w);

/// rank H_2(X) = n - rank(boundary map into H_1 of the page).
std::size_t second_betti_number(const Word& w);

/// Baseline sigma for one named factorization plus the substitutions applied
/// since.
class SigmaLedger {
 public:
  SigmaLedger(std::string baseline, Int baseline_sigma) : baseline_(std::move(baseline)), sigma_(baseline_sigma) {}

  void record(const SubstitutionRecord& r) { records_.push_back(r); }

  const std::string& baseline() const noexcept { return baseline_; }
  Int baseline_sigma() const noexcept { return sigma_; }
  const std::vector<SubstitutionRecord>& records() const noexcept { return records_; }
  /// Sum of dI; absent if some record has unknown I.
  std::optional<Int> offset() const;

 private:
  std::string baseline_;
  Int sigma_;
  std::vector<SubstitutionRecord> records_;
};

struct SigmaValue {
  enum class Mode { exact, relative, unknown };
  Mode mode = Mode::unknown;
  std::optional<Int> value;
  std::optional<std::string> baseline;  // relative mode
};

std::string to_string(SigmaValue::Mode m);

/// Exact for planar pages with hole sets, otherwise baseline + offset from the
/// ledger (unknown if an applied relator has unknown I). Throws
/// RelativeUnavailable when neither applies.
SigmaValue sigma(const Word& w, const SigmaLedger* ledger = nullptr);

struct H1Boundary {
  IntMatrix relations;  // columns are the vectors sigma - phi(sigma), one per relative basis element
  AbelianGroup group;
};

/// H_1 of the boundary 3-manifold: Z^{2g+b-1} modulo the variations of the
/// relative basis arcs A_i, B_i, sigma_j.
H1Boundary h1_boundary(const Word& w);
/// Same with a user-chosen basis of relative homology; throws
/// PreconditionError unless the arcs form a basis.
H1Boundary h1_boundary(const Word& w, std::span<const Arc> arcs);

struct ChernData {
  std::vector<Int> rotations;       // per twist
  IntVector c1_pd;                  // sum r_i mu_i in H_1 coordinates, before reduction
  IntVector reduced;                // canonical coordinates in H_1(M)
  Int order = 0;                    // order of c1_pd in H_1(M); 0 = infinite
  bool is_zero() const { return order == 1; }
};

/// Rotations default to each curve's rotation field; meridians default to the
/// curve class only when w is a boundary-multitwist (each boundary component
/// twisted once). Missing data throws UnsupportedInput.
ChernData chern_pd(const Word& w, const std::optional<std::vector<Int>>& rotations = std::nullopt,
                   const std::optional<std::vector<HomologyClass>>& meridians = std::nullopt);

/// True when w is a product of one positive twist about each boundary component.
bool is_boundary_multitwist(const Word& w);

struct FillingInvariants {
  Surface surface{0, 1};
  Int euler = 0;
  SigmaValue sigma;
  std::size_t b2 = 0;
  std::optional<PlanarForm> planar;
  H1Boundary h1;
  std::optional<Int> esig;
  std::optional<int> esig_mod4;
  std::optional<ChernData> chern;
  std::vector<std::string> notes;
};

struct InvariantOptions {
  const SigmaLedger* ledger = nullptr;
  std::optional<std::vector<Int>> rotations;
  std::optional<std::vector<HomologyClass>> meridians;
  std::optional<std::vector<Arc>> arcs;  // relative basis for the H_1 relations
};

/// Everything computable for w. sigma falls back to unknown and Chern data
/// is omitted (with a note) when their inputs are missing.
FillingInvariants compute_invariants(const Word& w, const InvariantOptions& options = {});

/// Non-negative residue mod 4.
int mod4(Int x);

struct EsigComparison {
  Int esig1 = 0;
  Int esig2 = 0;
  bool equal = false;
  bool congruent_mod4 = false;
  /// Two exact (planar-page) fillings asserted to share their contact boundary
  /// disagree. A planar page makes the contact structure planar, so this can
  /// only mean a false assertion or a bug.
  bool planarity_contradiction = false;
};

/// Throws IncomparableModes unless both sigmas are exact or both relative to
/// the same baseline with known values. `same_boundary` is the caller's
/// assertion that both fillings have the same contact boundary.
EsigComparison esig_check(const FillingInvariants& x, const FillingInvariants& y, bool same_boundary = false);

}  // namespace steincalc
