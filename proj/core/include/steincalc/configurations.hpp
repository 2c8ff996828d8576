#pragma once

#include <memory>
#include <vector>

#include "steincalc/surface.hpp"
#include "steincalc/word.hpp"

namespace steincalc {

/// Boundary-parallel curves d_1, ..., d_b on Sigma_{g,b}. For b > 1 the
/// curves carry the rotation numbers of the flat-page Legendrian realization:
/// r(d_1) = 0, r(d_i) = 1 for 2 <= i <= b-1, r(d_b) = 2g.
struct TauBoundaryConfiguration {
  std::shared_ptr<const CurveSystem> system;
  std::vector<CurveId> boundary;  // d_1 .. d_b

  /// tau_boundary = [d_1, ..., d_b] (the twists commute).
  Word word() const { return Word::positive(system, boundary); }
};

TauBoundaryConfiguration tau_boundary_configuration(int genus, int boundary_count);
/// Adds d_1..d_b to an existing system (names "d1".."db").
std::vector<CurveId> add_boundary_curves(CurveSystem& system);

struct LanternCurves {
  CurveId a1, a2, a3, a4;
  CurveId a12, a23, a13;
};

/// Sigma_{0,4}: d1..d4 (d1 outer, hole set {2,3,4}) and the convex curves
/// a12 = {2,3}, a23 = {3,4}, a13 = {2,4}. The lantern uses
/// (a1, a2, a3, a4) = (d2, d3, d4, d1).
struct StandardLantern {
  std::shared_ptr<const CurveSystem> system;
  std::vector<CurveId> boundary;
  LanternCurves curves;
};

StandardLantern standard_lantern_configuration();

/// Chain a_1, ..., a_n with boundary curve(s) of its regular neighborhood.
struct ChainConfig {
  int n = 0;
  std::vector<CurveId> chain;
  std::vector<CurveId> boundary;  // delta (n even) or delta_1, delta_2 (n odd)
};

/// Chain on its minimal supporting surface: Sigma_{n/2,1} for even n,
/// Sigma_{(n-1)/2,2} for odd n. Classes c_{2i-1} = b_i - b_{i-1}, c_{2i} = a_i,
/// and for odd n the last curve is d_2 - b_g. Non-consecutive curves are
/// declared disjoint.
struct StandardChain {
  std::shared_ptr<const CurveSystem> system;
  ChainConfig config;
};

StandardChain standard_chain_configuration(int n);

/// Sigma_{1,3} carrying the non-standard relator built from two lanterns and
/// a 2-chain.
struct NonStandardConfiguration {
  std::shared_ptr<const CurveSystem> system;
  std::vector<CurveId> left;   // alpha4', alpha13, alpha12
  std::vector<CurveId> right;  // alpha (beta alpha)^5 alpha13' alpha12' alpha1
  std::vector<CurveId> boundary;
};

NonStandardConfiguration non_standard_configuration();

/// Sigma_{1,1} with alpha = a1, beta = b1 and gamma = tau_alpha(beta).
struct BraidConfiguration {
  std::shared_ptr<const CurveSystem> system;
  CurveId alpha, beta, gamma;
};

BraidConfiguration braid_configuration();

}  // namespace steincalc
