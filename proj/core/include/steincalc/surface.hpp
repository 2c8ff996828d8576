#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "steincalc/integer_matrix.hpp"

namespace steincalc {

/// Compact oriented surface of genus g with b >= 1 boundary components.
///
/// H_1 has the ordered basis (a_1, b_1, ..., a_g, b_g, d_2, ..., d_b) where
/// (a_i, b_i) are symplectic pairs and d_j is the class of a curve parallel to
/// boundary component j. Boundary component 1 is the outer one; its class is
/// d_1 = -(d_2 + ... + d_b) and it is not a basis element.
class Surface {
 public:
  Surface(int genus, int boundary_count);

  int genus() const noexcept { return genus_; }
  int boundary_count() const noexcept { return boundary_count_; }
  std::size_t rank() const noexcept { return static_cast<std::size_t>(2 * genus_ + boundary_count_ - 1); }
  bool planar() const noexcept { return genus_ == 0; }
  int euler_characteristic() const noexcept { return 2 - 2 * genus_ - boundary_count_; }

  /// Coordinate indices, 1-based to match the usual labels.
  std::size_t a_index(int i) const;
  std::size_t b_index(int i) const;
  std::size_t d_index(int j) const;  // 2 <= j <= b

  /// "a1", "b1", ..., "d2", ...
  std::string basis_label(std::size_t index) const;

  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  int genus_;
  int boundary_count_;
};

/// Integer vector over the fixed basis of H_1 of its surface.
class HomologyClass {
 public:
  HomologyClass(Surface surface, IntVector coords);
  static HomologyClass zero(const Surface& surface);
  static HomologyClass basis(const Surface& surface, std::size_t index);
  /// d_j, with d_1 = -(d_2 + ... + d_b).
  static HomologyClass boundary(const Surface& surface, int j);
  /// Indicator vector of a hole set on the d_j coordinates (planar convention).
  static HomologyClass holes(const Surface& surface, const std::vector<int>& hole_set);

  const Surface& surface() const noexcept { return surface_; }
  const IntVector& coords() const noexcept { return coords_; }
  Int operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  HomologyClass operator+(const HomologyClass& o) const;
  HomologyClass operator-(const HomologyClass& o) const;
  HomologyClass operator-() const;
  HomologyClass scaled(Int k) const;

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

 private:
  Surface surface_;
  IntVector coords_;
};

/// Algebraic intersection number: symplectic on (a_i, b_i), zero on the d_j.
Int intersection_pairing(const HomologyClass& x, const HomologyClass& y);

/// Relative class in the basis (A_1, B_1, ..., A_g, B_g, S_2, ..., S_b) of
/// H_1(Sigma, boundary). S_j is the arc sigma_j from boundary 1 to boundary j;
/// A_i and B_i are the images of the closed classes a_i and b_i.
struct Arc {
  std::string name;
  IntVector rel_class;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// The standard arc sigma_j (rel_class = S_j).
Arc standard_arc(const Surface& surface, int j);
/// A_1, B_1, ..., A_g, B_g, sigma_2, ..., sigma_b: a basis of relative homology.
std::vector<Arc> relative_basis(const Surface& surface);

/// Duality pairing of a relative class with a closed class.
Int arc_pairing(const Surface& surface, std::span<const Int> rel_class, const HomologyClass& y);
/// Image of a closed class in relative homology (boundary classes die).
IntVector to_relative(const HomologyClass& x);

/// Simple closed curve, carried by its homology class plus optional planar data.
struct Curve {
  std::string name;
  HomologyClass homology;
  std::optional<std::vector<int>> hole_set;  // sorted subset of {2..b}, genus 0 only
  std::optional<int> rotation;
  std::optional<int> boundary_parallel_to;

  /// Convex planar curve around the given holes.
  static Curve around_holes(const Surface& surface, std::string name, std::vector<int> hole_set);
  /// Curve parallel to boundary component j. On a planar surface it also
  /// carries the hole set ({j}, or {2..b} for the outer component).
  static Curve parallel_to_boundary(const Surface& surface, std::string name, int j);
  static Curve with_class(std::string name, HomologyClass homology);

  bool allowable() const { return !homology.is_zero(); }

  friend bool operator==(const Curve&, const Curve&) = default;
};

/// Checks the Curve invariants against its surface; throws PreconditionError.
void validate_curve(const Curve& curve);

/// Image of x under the positive (sign = +1) or negative (sign = -1) twist about c.
HomologyClass twist_action(const Curve& c, const HomologyClass& x, int sign = 1);

struct CurveId {
  std::uint32_t value = 0;
  friend auto operator<=>(const CurveId&, const CurveId&) = default;
};

enum class CommuteStatus { commute, indeterminate };

/// The curves of one surface, addressed by id, plus declared disjointness facts.
/// Equality of curves is identity of ids; the library never decides isotopy.
class CurveSystem {
 public:
  explicit CurveSystem(Surface surface) : surface_(surface) {}

  const Surface& surface() const noexcept { return surface_; }

  CurveId add(Curve curve);
  void declare_disjoint(CurveId x, CurveId y);

  std::size_t size() const noexcept { return curves_.size(); }
  const Curve& operator[](CurveId id) const { return curves_.at(id.value); }
  std::optional<CurveId> find(std::string_view name) const;
  CurveId at(std::string_view name) const;  // throws PreconditionError
  bool declared_disjoint(CurveId x, CurveId y) const;
  const std::set<std::pair<CurveId, CurveId>>& disjoint_pairs() const noexcept { return disjoint_; }

 private:
  Surface surface_;
  std::vector<Curve> curves_;
  std::map<std::string, CurveId, std::less<>> by_name_;
  std::set<std::pair<CurveId, CurveId>> disjoint_;
};

/// Certified disjointness. A curve commutes with itself, boundary-parallel
/// curves commute with everything, planar hole sets commute when nested or
/// disjoint, anything else only when declared disjoint.
CommuteStatus curves_commute(const CurveSystem& system, CurveId x, CurveId y);

}  // namespace steincalc
