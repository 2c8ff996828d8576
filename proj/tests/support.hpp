#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "steincalc/configurations.hpp"
#include "steincalc/relators.hpp"
#include "steincalc/surface.hpp"
#include "steincalc/word.hpp"

namespace steincalc::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Convex curves on Sigma_{0,b} created on demand, one per hole set.
class PlanarCurves {
 public:
  explicit PlanarCurves(int b) : system_(std::make_shared<CurveSystem>(Surface(0, b))) {}

  CurveId get(std::vector<int> holes) {
    std::sort(holes.begin(), holes.end());
    if (auto it = ids_.find(holes); it != ids_.end()) return it->second;
    std::string name = "h";
    for (int h : holes) name += "_" + std::to_string(h);
    const CurveId id = system_->add(Curve::around_holes(system_->surface(), name, holes));
    ids_.emplace(holes, id);
    return id;
  }

  std::vector<int> random_holes() {
    const int b = system_->surface().boundary_count();
    std::vector<int> holes;
    while (holes.empty())
      for (int h = 2; h <= b; ++h)
        if (uniform(0, 1)) holes.push_back(h);
    return holes;
  }

  std::shared_ptr<CurveSystem> system() const { return system_; }

 private:
  std::shared_ptr<CurveSystem> system_;
  std::map<std::vector<int>, CurveId> ids_;
};

/// Three disjoint non-empty hole groups A, B, C with the lantern
/// A, B, C, ABC = AB, BC, AC.
inline LanternCurves random_lantern(PlanarCurves& curves) {
  const int b = curves.system()->surface().boundary_count();
  std::vector<int> group(static_cast<std::size_t>(b + 1), 3);
  std::vector<int> parts[3];
  do {
    for (auto& p : parts) p.clear();
    for (int h = 2; h <= b; ++h) {
      group[h] = uniform(0, 3);
      if (group[h] < 3) parts[group[h]].push_back(h);
    }
  } while (parts[0].empty() || parts[1].empty() || parts[2].empty());
  auto join = [](std::vector<int> x, const std::vector<int>& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };
  LanternCurves l;
  l.a1 = curves.get(parts[0]);
  l.a2 = curves.get(parts[1]);
  l.a3 = curves.get(parts[2]);
  l.a4 = curves.get(join(join(parts[0], parts[1]), parts[2]));
  l.a12 = curves.get(join(parts[0], parts[1]));
  l.a23 = curves.get(join(parts[1], parts[2]));
  l.a13 = curves.get(join(parts[0], parts[2]));
  return l;
}

/// Random positive word on Sigma_{0,b} of length <= max_length with one or two
/// planted lantern sides, and the matching lantern relators.
struct PlanarSample {
  std::shared_ptr<const CurveSystem> system;
  Word word;
  std::vector<RelatorEntry> lanterns;
};

inline PlanarSample random_planar_sample(int b, std::size_t max_length) {
  PlanarCurves curves(b);
  std::vector<LanternCurves> planted;
  const int count = uniform(1, 2);
  for (int i = 0; i < count; ++i) planted.push_back(random_lantern(curves));
  std::vector<std::vector<int>> singles;
  for (int i = 0; i < 6; ++i) singles.push_back(curves.random_holes());

  std::vector<CurveId> ids;
  for (const auto& s : singles) ids.push_back(curves.get(s));
  std::shared_ptr<const CurveSystem> system = curves.system();

  std::vector<CurveId> letters;
  while (true) {
    std::vector<CurveId> chunk;
    const int kind = uniform(0, 3);
    if (kind < 2) {
      chunk.push_back(ids[static_cast<std::size_t>(uniform(0, static_cast<int>(ids.size()) - 1))]);
    } else {
      const LanternCurves& l = planted[static_cast<std::size_t>(uniform(0, count - 1))];
      if (kind == 2)
        chunk = {l.a1, l.a2, l.a3, l.a4};
      else
        chunk = {l.a12, l.a23, l.a13};
    }
    if (letters.size() + chunk.size() > max_length) break;
    letters.insert(letters.end(), chunk.begin(), chunk.end());
  }
  PlanarSample sample{system, Word::positive(system, letters), {}};
  for (int i = 0; i < count; ++i)
    sample.lanterns.push_back(lantern(system, planted[static_cast<std::size_t>(i)], "lantern" + std::to_string(i)));
  return sample;
}

}  // namespace steincalc::testing
