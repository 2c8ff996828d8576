#include "steincalc/surface.hpp"

#include <algorithm>

#include "steincalc/error.hpp"

namespace steincalc {

Surface::Surface(int genus, int boundary_count) : genus_(genus), boundary_count_(boundary_count) {
  if (genus < 0) throw PreconditionError("surface genus must be non-negative");
  if (boundary_count < 1) throw PreconditionError("pages have at least one boundary component");
}

std::size_t Surface::a_index(int i) const {
  if (i < 1 || i > genus_) throw StructuralError("a_" + std::to_string(i) + " is not a basis element");
  return static_cast<std::size_t>(2 * (i - 1));
}

std::size_t Surface::b_index(int i) const {
  if (i < 1 || i > genus_) throw StructuralError("b_" + std::to_string(i) + " is not a basis element");
  return static_cast<std::size_t>(2 * (i - 1) + 1);
}

std::size_t Surface::d_index(int j) const {
  if (j < 2 || j > boundary_count_) throw StructuralError("d_" + std::to_string(j) + " is not a basis element");
  return static_cast<std::size_t>(2 * genus_ + (j - 2));
}

std::string Surface::basis_label(std::size_t index) const {
  const auto g2 = static_cast<std::size_t>(2 * genus_);
  if (index < g2) return (index % 2 == 0 ? "a" : "b") + std::to_string(index / 2 + 1);
  return "d" + std::to_string(index - g2 + 2);
}

HomologyClass::HomologyClass(Surface surface, IntVector coords) : surface_(surface), coords_(std::move(coords)) {
  if (coords_.size() != surface_.rank())
    throw StructuralError("homology vector has length " + std::to_string(coords_.size()) + ", surface rank is " +
                          std::to_string(surface_.rank()));
}

HomologyClass HomologyClass::zero(const Surface& surface) { return {surface, IntVector(surface.rank(), 0)}; }

HomologyClass HomologyClass::basis(const Surface& surface, std::size_t index) {
  IntVector v(surface.rank(), 0);
  v.at(index) = 1;
  return {surface, std::move(v)};
}

HomologyClass HomologyClass::boundary(const Surface& surface, int j) {
  IntVector v(surface.rank(), 0);
  if (j == 1) {
    for (int k = 2; k <= surface.boundary_count(); ++k) v[surface.d_index(k)] = -1;
  } else {
    v[surface.d_index(j)] = 1;
  }
  return {surface, std::move(v)};
}

HomologyClass HomologyClass::holes(const Surface& surface, const std::vector<int>& hole_set) {
  IntVector v(surface.rank(), 0);
  for (int j : hole_set) v[surface.d_index(j)] += 1;
  return {surface, std::move(v)};
}

bool HomologyClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
}

HomologyClass HomologyClass::operator+(const HomologyClass& o) const {
  if (!(surface_ == o.surface_)) throw StructuralError("homology classes live on different surfaces");
  IntVector v(coords_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(coords_[i], o.coords_[i]);
  return {surface_, std::move(v)};
}

HomologyClass HomologyClass::operator-(const HomologyClass& o) const { return *this + (-o); }

HomologyClass HomologyClass::operator-() const { return scaled(-1); }

HomologyClass HomologyClass::scaled(Int k) const {
  IntVector v(coords_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_mul(k, coords_[i]);
  return {surface_, std::move(v)};
}

Int intersection_pairing(const HomologyClass& x, const HomologyClass& y) {
  if (!(x.surface() == y.surface())) throw StructuralError("intersection pairing across different surfaces");
  Int sum = 0;
  for (int i = 0; i < x.surface().genus(); ++i) {
    const auto a = static_cast<std::size_t>(2 * i);
    const auto b = a + 1;
    sum = checked_add(sum, checked_add(checked_mul(x[a], y[b]), -checked_mul(x[b], y[a])));
  }
  return sum;
}

Arc standard_arc(const Surface& surface, int j) {
  IntVector rel(surface.rank(), 0);
  rel[surface.d_index(j)] = 1;
  return {"sigma" + std::to_string(j), std::move(rel)};
}

std::vector<Arc> relative_basis(const Surface& surface) {
  std::vector<Arc> arcs;
  for (int i = 1; i <= surface.genus(); ++i) {
    IntVector a(surface.rank(), 0), b(surface.rank(), 0);
    a[surface.a_index(i)] = 1;
    b[surface.b_index(i)] = 1;
    arcs.push_back({"A" + std::to_string(i), std::move(a)});
    arcs.push_back({"B" + std::to_string(i), std::move(b)});
  }
  for (int j = 2; j <= surface.boundary_count(); ++j) arcs.push_back(standard_arc(surface, j));
  return arcs;
}

Int arc_pairing(const Surface& surface, std::span<const Int> rel_class, const HomologyClass& y) {
  if (rel_class.size() != surface.rank() || !(y.surface() == surface))
    throw StructuralError("arc pairing dimension mismatch");
  Int sum = 0;
  for (int i = 0; i < surface.genus(); ++i) {
    const auto a = static_cast<std::size_t>(2 * i);
    const auto b = a + 1;
    // A_i pairs like a_i, B_i like b_i.
    sum = checked_add(sum, checked_add(checked_mul(rel_class[a], y[b]), -checked_mul(rel_class[b], y[a])));
  }
  for (int j = 2; j <= surface.boundary_count(); ++j) {
    const auto d = surface.d_index(j);
    sum = checked_add(sum, checked_mul(rel_class[d], y[d]));
  }
  return sum;
}

IntVector to_relative(const HomologyClass& x) {
  IntVector rel = x.coords();
  const auto g2 = static_cast<std::size_t>(2 * x.surface().genus());
  std::fill(rel.begin() + static_cast<std::ptrdiff_t>(g2), rel.end(), 0);
  return rel;
}

Curve Curve::around_holes(const Surface& surface, std::string name, std::vector<int> hole_set) {
  std::sort(hole_set.begin(), hole_set.end());
  Curve c{std::move(name), HomologyClass::holes(surface, hole_set), hole_set, std::nullopt, std::nullopt};
  validate_curve(c);
  return c;
}

Curve Curve::parallel_to_boundary(const Surface& surface, std::string name, int j) {
  if (j < 1 || j > surface.boundary_count())
    throw PreconditionError("boundary index " + std::to_string(j) + " out of range");
  Curve c{std::move(name), HomologyClass::boundary(surface, j), std::nullopt, std::nullopt, j};
  if (surface.planar()) {
    std::vector<int> holes;
    if (j == 1)
      for (int k = 2; k <= surface.boundary_count(); ++k) holes.push_back(k);
    else
      holes.push_back(j);
    c.hole_set = std::move(holes);
  }
  validate_curve(c);
  return c;
}

Curve Curve::with_class(std::string name, HomologyClass homology) {
  return {std::move(name), std::move(homology), std::nullopt, std::nullopt, std::nullopt};
}

void validate_curve(const Curve& c) {
  const Surface& s = c.homology.surface();
  auto fail = [&](const std::string& why) { throw PreconditionError("curve '" + c.name + "': " + why); };
  if (c.name.empty()) throw PreconditionError("curve name must be non-empty");
  if (c.boundary_parallel_to) {
    const int j = *c.boundary_parallel_to;
    if (j < 1 || j > s.boundary_count()) fail("boundary_parallel_to out of range");
    const HomologyClass d = HomologyClass::boundary(s, j);
    if (!(c.homology == d || c.homology == -d)) fail("homology does not match boundary component " + std::to_string(j));
  }
  if (!c.hole_set) return;
  if (!s.planar()) fail("hole sets are only meaningful on planar surfaces");
  const auto& h = *c.hole_set;
  if (!std::is_sorted(h.begin(), h.end()) || std::adjacent_find(h.begin(), h.end()) != h.end())
    fail("hole set must be sorted without repeats");
  for (int j : h) {
    if (j == 1) fail("hole set contains the outer boundary 1; use boundary_parallel_to = 1 instead");
    if (j < 2 || j > s.boundary_count()) fail("hole index " + std::to_string(j) + " out of range");
  }
  const HomologyClass indicator = HomologyClass::holes(s, h);
  if (c.boundary_parallel_to == 1) {
    if (static_cast<int>(h.size()) != s.boundary_count() - 1) fail("outer-parallel curve must enclose every hole");
    if (!(c.homology == -indicator)) fail("outer-parallel curve must carry class -(d_2 + ... + d_b)");
  } else if (!(c.homology == indicator)) {
    fail("homology must equal the indicator vector of the hole set");
  }
}

HomologyClass twist_action(const Curve& c, const HomologyClass& x, int sign) {
  if (sign != 1 && sign != -1) throw PreconditionError("twist sign must be +1 or -1");
  const Int k = intersection_pairing(x, c.homology);
  if (k == 0) return x;
  return x + c.homology.scaled(sign * k);
}

CurveId CurveSystem::add(Curve curve) {
  if (!(curve.homology.surface() == surface_)) throw StructuralError("curve '" + curve.name + "' is on another surface");
  validate_curve(curve);
  if (by_name_.contains(curve.name)) throw PreconditionError("duplicate curve name '" + curve.name + "'");
  const CurveId id{static_cast<std::uint32_t>(curves_.size())};
  by_name_.emplace(curve.name, id);
  curves_.push_back(std::move(curve));
  return id;
}

void CurveSystem::declare_disjoint(CurveId x, CurveId y) {
  if (x.value >= curves_.size() || y.value >= curves_.size()) throw PreconditionError("unknown curve id");
  disjoint_.insert(std::minmax(x, y));
}

std::optional<CurveId> CurveSystem::find(std::string_view name) const {
  if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
  return std::nullopt;
}

CurveId CurveSystem::at(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw PreconditionError("unknown curve '" + std::string(name) + "'");
}

bool CurveSystem::declared_disjoint(CurveId x, CurveId y) const { return disjoint_.contains(std::minmax(x, y)); }

CommuteStatus curves_commute(const CurveSystem& system, CurveId x, CurveId y) {
  if (x == y) return CommuteStatus::commute;
  const Curve& cx = system[x];
  const Curve& cy = system[y];
  if (cx.boundary_parallel_to || cy.boundary_parallel_to) return CommuteStatus::commute;
  if (system.declared_disjoint(x, y)) return CommuteStatus::commute;
  if (cx.hole_set && cy.hole_set) {
    const auto& a = *cx.hole_set;
    const auto& b = *cy.hole_set;
    const bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
    const bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (a_in_b || b_in_a || common.empty()) return CommuteStatus::commute;
  }
  return CommuteStatus::indeterminate;
}

}  // namespace steincalc
