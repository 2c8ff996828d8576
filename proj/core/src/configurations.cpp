#include "steincalc/configurations.hpp"

#include <string>

#include "steincalc/error.hpp"

namespace steincalc {

std::vector<CurveId> add_boundary_curves(CurveSystem& system) {
  const Surface& s = system.surface();
  const int b = s.boundary_count();
  std::vector<CurveId> ids;
  for (int j = 1; j <= b; ++j) {
    Curve c = Curve::parallel_to_boundary(s, "d" + std::to_string(j), j);
    if (b > 1) c.rotation = j == 1 ? 0 : (j == b ? 2 * s.genus() : 1);
    ids.push_back(system.add(std::move(c)));
  }
  return ids;
}

TauBoundaryConfiguration tau_boundary_configuration(int genus, int boundary_count) {
  auto system = std::make_shared<CurveSystem>(Surface(genus, boundary_count));
  auto ids = add_boundary_curves(*system);
  return {std::move(system), std::move(ids)};
}

StandardLantern standard_lantern_configuration() {
  const Surface s(0, 4);
  auto system = std::make_shared<CurveSystem>(s);
  auto boundary = add_boundary_curves(*system);
  const CurveId a12 = system->add(Curve::around_holes(s, "a12", {2, 3}));
  const CurveId a23 = system->add(Curve::around_holes(s, "a23", {3, 4}));
  const CurveId a13 = system->add(Curve::around_holes(s, "a13", {2, 4}));
  LanternCurves curves{boundary[1], boundary[2], boundary[3], boundary[0], a12, a23, a13};
  return {std::move(system), std::move(boundary), curves};
}

StandardChain standard_chain_configuration(int n) {
  if (n < 1) throw PreconditionError("chain length must be at least 1");
  const int g = n / 2;
  const int b = n % 2 == 0 ? 1 : 2;
  const Surface s(g, b);
  auto system = std::make_shared<CurveSystem>(s);

  ChainConfig config;
  config.n = n;
  for (int k = 1; k <= n; ++k) {
    const std::string name = "c" + std::to_string(k);
    if (n == 1) {
      config.chain.push_back(system->add(Curve::around_holes(s, name, {2})));
      break;
    }
    HomologyClass h = HomologyClass::zero(s);
    if (k % 2 == 0) {
      h = HomologyClass::basis(s, s.a_index(k / 2));
    } else if (k == n) {
      // odd chain: closes up through the second boundary component
      h = HomologyClass::boundary(s, 2) - HomologyClass::basis(s, s.b_index(g));
    } else {
      const int i = (k + 1) / 2;
      h = HomologyClass::basis(s, s.b_index(i));
      if (i > 1) h = h - HomologyClass::basis(s, s.b_index(i - 1));
    }
    config.chain.push_back(system->add(Curve::with_class(name, h)));
  }
  for (int j = 1; j <= b; ++j)
    config.boundary.push_back(system->add(Curve::parallel_to_boundary(s, "delta" + std::to_string(j), j)));
  for (std::size_t i = 0; i < config.chain.size(); ++i)
    for (std::size_t j = i + 2; j < config.chain.size(); ++j) system->declare_disjoint(config.chain[i], config.chain[j]);
  return {std::move(system), std::move(config)};
}

NonStandardConfiguration non_standard_configuration() {
  const Surface s(1, 3);
  auto system = std::make_shared<CurveSystem>(s);
  NonStandardConfiguration out;
  const HomologyClass a = HomologyClass::basis(s, s.a_index(1));
  const HomologyClass b = HomologyClass::basis(s, s.b_index(1));
  const HomologyClass d2 = HomologyClass::boundary(s, 2);
  const HomologyClass d3 = HomologyClass::boundary(s, 3);

  const CurveId alpha = system->add(Curve::with_class("alpha", a));
  const CurveId beta = system->add(Curve::with_class("beta", b));
  // alpha1, alpha2, alpha3 are parallel to the three boundary components.
  const CurveId alpha1 = system->add(Curve::parallel_to_boundary(s, "alpha1", 1));
  out.boundary = {alpha1, system->add(Curve::parallel_to_boundary(s, "alpha2", 2)),
                  system->add(Curve::parallel_to_boundary(s, "alpha3", 3))};
  // alpha_ij encloses boundaries i and j: class d_i + d_j.
  const CurveId alpha12 = system->add(Curve::with_class("alpha12", -d3));
  const CurveId alpha13 = system->add(Curve::with_class("alpha13", -d2));
  // Second lantern: alpha'_1 = beta, so its curves pick up b_1.
  const CurveId alpha4p = system->add(Curve::with_class("alpha4'", b + d2 + d3));
  const CurveId alpha12p = system->add(Curve::with_class("alpha12'", b + d2));
  const CurveId alpha13p = system->add(Curve::with_class("alpha13'", b + d3));

  out.left = {alpha4p, alpha13, alpha12};
  out.right.push_back(alpha);
  for (int i = 0; i < 5; ++i) {
    out.right.push_back(beta);
    out.right.push_back(alpha);
  }
  out.right.insert(out.right.end(), {alpha13p, alpha12p, alpha1});
  out.system = std::move(system);
  return out;
}

BraidConfiguration braid_configuration() {
  const Surface s(1, 1);
  auto system = std::make_shared<CurveSystem>(s);
  const Curve alpha = Curve::with_class("alpha", HomologyClass::basis(s, s.a_index(1)));
  const Curve beta = Curve::with_class("beta", HomologyClass::basis(s, s.b_index(1)));
  const Curve gamma = Curve::with_class("gamma", twist_action(alpha, beta.homology));
  BraidConfiguration out;
  out.alpha = system->add(alpha);
  out.beta = system->add(beta);
  out.gamma = system->add(gamma);
  out.system = std::move(system);
  return out;
}

}  // namespace steincalc
