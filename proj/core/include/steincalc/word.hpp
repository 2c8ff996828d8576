#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steincalc/surface.hpp"

namespace steincalc {

struct Twist {
  CurveId curve;
  int sign = 1;

  Twist inverse() const { return {curve, -sign}; }
  friend bool operator==(const Twist&, const Twist&) = default;
};

/// Word in Dehn twists, stored left to right and applied right to left:
/// [t_n, ..., t_1] is the mapping class t_n o ... o t_1. Words are kept fully
/// expanded so that positions can be cited in certificates.
class Word {
 public:
  explicit Word(std::shared_ptr<const CurveSystem> system, std::vector<Twist> twists = {});
  static Word positive(std::shared_ptr<const CurveSystem> system, std::span<const CurveId> curves);

  const CurveSystem& system() const noexcept { return *system_; }
  const std::shared_ptr<const CurveSystem>& system_ptr() const noexcept { return system_; }
  const Surface& surface() const noexcept { return system_->surface(); }

  std::span<const Twist> twists() const noexcept { return twists_; }
  std::size_t size() const noexcept { return twists_.size(); }
  bool empty() const noexcept { return twists_.empty(); }
  const Twist& operator[](std::size_t i) const { return twists_.at(i); }
  const Curve& curve_at(std::size_t i) const { return (*system_)[twists_.at(i).curve]; }

  bool is_positive() const;
  Word inverse() const;

  /// Induced action on H_1 of the page.
  HomologyClass act(const HomologyClass& x) const;
  /// Columns are the images of the basis vectors.
  IntMatrix action_matrix() const;

  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.system_ == b.system_ && a.twists_ == b.twists_;
  }

 private:
  std::shared_ptr<const CurveSystem> system_;
  std::vector<Twist> twists_;
};

/// Concatenation w1 followed by w2; no cancellation.
Word compose(const Word& w1, const Word& w2);

/// Cancels adjacent t t^{-1} pairs with identical curve until none remain.
Word free_reduce(const Word& w);

/// Swaps positions i and i+1; throws IndeterminateCommutation unless the two
/// curves are certified disjoint.
Word commute_adjacent(const Word& w, std::size_t i);

/// Where a target word sits inside a host word, with the certified
/// commutations that bring it into place.
struct Embedding {
  /// Host positions matched by the target twists, in target order.
  std::vector<std::size_t> positions;
  /// Host positions in their rearranged order.
  std::vector<std::size_t> arrangement;
  /// Sequence of adjacent transpositions (i, i+1) turning the host into the
  /// rearranged word. Every step is a certified commutation.
  std::vector<std::size_t> commutations;
  /// For block embeddings, the index in the arrangement where the target starts.
  std::optional<std::size_t> block_start;
};

enum class Containment { yes, unknown };

struct ContainmentResult {
  Containment status = Containment::unknown;
  std::optional<Embedding> witness;
};

/// Search budget; exhausting it yields "unknown", never a false "yes".
inline constexpr std::size_t kDefaultSearchBudget = 1'000'000;

/// Does the target appear in order inside the host, up to certified
/// commutations? A negative answer is always reported as unknown.
ContainmentResult contains(const Word& host, const Word& target, std::size_t budget = kDefaultSearchBudget);

/// Like `contains`, but the target must become a contiguous block.
std::optional<Embedding> find_block_embedding(const Word& host, const Word& target,
                                              std::size_t budget = kDefaultSearchBudget);

/// Replays the commutation certificate; throws if any step is not certified.
Word apply_commutations(const Word& w, std::span<const std::size_t> commutations);

enum class Provenance { paper_value, derived, user_asserted };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

/// r = left^{-1} right. Either side may be missing for entries that only carry
/// ledger values (compositions, or relators known to exist but not written out).
struct Relator {
  std::string name;
  std::optional<Word> left;
  std::optional<Word> right;
  std::optional<Int> I;  // signature of the relator
  std::optional<Int> n;  // total exponent
  Provenance provenance = Provenance::user_asserted;

  /// True iff every twist is about a homologically non-trivial curve; absent
  /// when a side is missing.
  std::optional<bool> allowable() const;
};

/// Builds a relator from two positive words, deriving n = |right| - |left|.
Relator make_relator(std::string name, Word left, Word right, std::optional<Int> I, Provenance provenance);

struct SubstitutionRecord {
  std::string relator;
  int direction = 1;  // +1 replaces left by right, -1 the reverse
  std::optional<Int> dI;
  Int dn = 0;
  Embedding embedding;
};

struct SubstitutionResult {
  Word word;
  SubstitutionRecord record;
};

/// r-substitution: replace the relator's left side (or right side for
/// direction -1) inside w. Throws NotApplicable when no certified block
/// embedding exists.
SubstitutionResult substitute(const Word& w, const Relator& r, int direction = 1);
SubstitutionResult substitute(const Word& w, const Relator& r, const Embedding& embedding, int direction = 1);

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct RelatorReport {
  CheckStatus homology_identity = CheckStatus::skipped;
  CheckStatus exponent_consistent = CheckStatus::skipped;
  /// Allowability is reported but is not a relator condition.
  std::optional<bool> allowable;
  /// Basis labels on which left and right act differently.
  std::vector<std::string> failing_basis_vectors;
  std::vector<std::string> notes;

  /// Homology and exponent checks passed (skipped counts as passed). A
  /// necessary condition for lying in the kernel, not a proof.
  bool necessary_conditions_hold() const;
};

RelatorReport verify_relator(const Relator& r);

}  // namespace steincalc
