#include <gtest/gtest.h>

#include <queue>
#include <set>

#include "steincalc/configurations.hpp"
#include "steincalc/error.hpp"
#include "steincalc/word.hpp"
#include "support.hpp"

using namespace steincalc;
using steincalc::testing::PlanarCurves;
using steincalc::testing::uniform;

namespace {

// Disjointness of convex planar curves from their hole sets alone.
bool oracle_commute(const Curve& x, const Curve& y) {
  const std::set<int> a(x.hole_set->begin(), x.hole_set->end());
  const std::set<int> b(y.hole_set->begin(), y.hole_set->end());
  bool a_in_b = true, b_in_a = true, disjoint = true;
  for (int h : a) {
    if (!b.count(h)) a_in_b = false;
    if (b.count(h)) disjoint = false;
  }
  for (int h : b)
    if (!a.count(h)) b_in_a = false;
  return a_in_b || b_in_a || disjoint;
}

// Every arrangement of the host reachable by commuting adjacent disjoint
// twists, as sequences of curve ids.
std::set<std::vector<std::uint32_t>> commutation_class(const Word& w) {
  std::vector<std::uint32_t> start;
  for (const Twist& t : w.twists()) start.push_back(t.curve.value);
  std::set<std::vector<std::uint32_t>> seen{start};
  std::queue<std::vector<std::uint32_t>> todo;
  todo.push(start);
  while (!todo.empty()) {
    const auto cur = todo.front();
    todo.pop();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] == cur[i + 1]) continue;
      if (!oracle_commute(w.system()[CurveId{cur[i]}], w.system()[CurveId{cur[i + 1]}])) continue;
      auto next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) todo.push(next);
    }
  }
  return seen;
}

bool is_subsequence(const std::vector<std::uint32_t>& host, const std::vector<std::uint32_t>& target) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < host.size() && k < target.size(); ++i)
    if (host[i] == target[k]) ++k;
  return k == target.size();
}

bool is_block(const std::vector<std::uint32_t>& host, const std::vector<std::uint32_t>& target) {
  return std::search(host.begin(), host.end(), target.begin(), target.end()) != host.end();
}

std::vector<std::uint32_t> ids(const Word& w) {
  std::vector<std::uint32_t> out;
  for (const Twist& t : w.twists()) out.push_back(t.curve.value);
  return out;
}

struct Fixture {
  std::shared_ptr<CurveSystem> sys = std::make_shared<CurveSystem>(Surface(0, 4));
  CurveId a = sys->add(Curve::around_holes(sys->surface(), "a", {2}));
  CurveId b = sys->add(Curve::around_holes(sys->surface(), "b", {2, 3}));
  CurveId c = sys->add(Curve::around_holes(sys->surface(), "c", {3, 4}));
  Word w(std::vector<Twist> t) const { return Word(sys, std::move(t)); }
};

void expect_same_action(const Word& x, const Word& y) { EXPECT_EQ(x.action_matrix(), y.action_matrix()); }

}  // namespace

TEST(Word, ComposeAndInverse) {
  Fixture f;
  const Word ab = f.w({{f.a, 1}, {f.b, 1}});
  EXPECT_EQ(compose(ab, f.w({})), ab);
  EXPECT_EQ(compose(ab, f.w({{f.b, -1}})).size(), 3U);
  EXPECT_EQ(ab.inverse(), f.w({{f.b, -1}, {f.a, -1}}));
  EXPECT_TRUE(ab.is_positive());
  EXPECT_FALSE(ab.inverse().is_positive());
  EXPECT_THROW(compose(ab, Word(std::make_shared<CurveSystem>(Surface(0, 4)))), StructuralError);
}

TEST(Word, FreeReduceExamples) {
  Fixture f;
  EXPECT_TRUE(free_reduce(f.w({{f.a, 1}, {f.a, -1}})).empty());
  EXPECT_EQ(free_reduce(f.w({{f.a, 1}, {f.b, 1}, {f.b, -1}, {f.a, 1}})), f.w({{f.a, 1}, {f.a, 1}}));
  EXPECT_EQ(free_reduce(f.w({{f.a, 1}, {f.b, -1}, {f.b, 1}, {f.b, 1}})), f.w({{f.a, 1}, {f.b, 1}}));
}

TEST(Word, FreeReducePreservesAction) {
  const auto chain = standard_chain_configuration(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Twist> t;
    const int len = uniform(0, 12);
    for (int i = 0; i < len; ++i)
      t.push_back({chain.config.chain[static_cast<std::size_t>(uniform(0, 3))], uniform(0, 1) ? 1 : -1});
    const Word w(chain.system, t);
    const Word r = free_reduce(w);
    expect_same_action(w, r);
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      EXPECT_FALSE(r[i].curve == r[i + 1].curve && r[i].sign == -r[i + 1].sign);
  }
}

TEST(Word, CommuteAdjacent) {
  Fixture f;
  const Word w = f.w({{f.a, 1}, {f.b, 1}, {f.c, 1}});
  EXPECT_EQ(commute_adjacent(w, 0), f.w({{f.b, 1}, {f.a, 1}, {f.c, 1}}));
  expect_same_action(w, commute_adjacent(w, 0));
  EXPECT_THROW(commute_adjacent(w, 1), IndeterminateCommutation);
  EXPECT_THROW(commute_adjacent(w, 2), PreconditionError);
}

TEST(Word, LanternCurvesDoNotCommute) {
  const StandardLantern l = standard_lantern_configuration();
  const Word w(l.system, {{l.curves.a12, 1}, {l.curves.a23, 1}});
  EXPECT_THROW(commute_adjacent(w, 0), IndeterminateCommutation);
}

TEST(Contains, Examples) {
  Fixture f;
  const Word aba = f.w({{f.a, 1}, {f.b, 1}, {f.a, 1}});
  EXPECT_EQ(contains(aba, f.w({{f.a, 1}, {f.a, 1}})).status, Containment::yes);

  const StandardLantern l = standard_lantern_configuration();
  const Word lantern_left = Word::positive(l.system, std::vector<CurveId>{l.curves.a1, l.curves.a2, l.curves.a3,
                                                                          l.curves.a4});
  const Word boundary = Word::positive(l.system, l.boundary);
  EXPECT_EQ(contains(boundary, lantern_left).status, Containment::yes);

  const Word only12(l.system, {{l.curves.a12, 1}});
  EXPECT_EQ(contains(only12, Word(l.system, {{l.curves.a13, 1}})).status, Containment::unknown);
}

TEST(Contains, MatchesCommutationClosureOracle) {
  int positives = 0;
  for (int trial = 0; trial < 400; ++trial) {
    PlanarCurves curves(uniform(3, 5));
    std::vector<CurveId> pool;
    for (int i = 0; i < 4; ++i) pool.push_back(curves.get(curves.random_holes()));
    std::vector<CurveId> host_ids, target_ids;
    const int hl = uniform(1, 7);
    for (int i = 0; i < hl; ++i) host_ids.push_back(pool[static_cast<std::size_t>(uniform(0, 3))]);
    const int tl = uniform(1, 3);
    for (int i = 0; i < tl; ++i) target_ids.push_back(pool[static_cast<std::size_t>(uniform(0, 3))]);
    std::shared_ptr<const CurveSystem> sys = curves.system();
    const Word host = Word::positive(sys, host_ids);
    const Word target = Word::positive(sys, target_ids);

    const auto closure = commutation_class(host);
    bool sub = false, block = false;
    for (const auto& arrangement : closure) {
      sub = sub || is_subsequence(arrangement, ids(target));
      block = block || is_block(arrangement, ids(target));
    }
    const ContainmentResult c = contains(host, target);
    EXPECT_EQ(c.status == Containment::yes, sub) << host.to_string() << " / " << target.to_string();
    const auto e = find_block_embedding(host, target);
    EXPECT_EQ(e.has_value(), block) << host.to_string() << " / " << target.to_string();
    if (c.status == Containment::yes) {
      ++positives;
      const Word arranged = apply_commutations(host, c.witness->commutations);
      expect_same_action(host, arranged);
      for (std::size_t k = 0; k < target.size(); ++k) EXPECT_EQ(host[c.witness->positions[k]], target[k]);
    }
    if (e) {
      const Word arranged = apply_commutations(host, e->commutations);
      for (std::size_t k = 0; k < target.size(); ++k) EXPECT_EQ(arranged[*e->block_start + k], target[k]);
    }
  }
  EXPECT_GT(positives, 50);
}

TEST(Contains, MonotoneUnderAppending) {
  for (int trial = 0; trial < 200; ++trial) {
    PlanarCurves curves(uniform(3, 6));
    std::vector<CurveId> pool;
    for (int i = 0; i < 5; ++i) pool.push_back(curves.get(curves.random_holes()));
    std::shared_ptr<const CurveSystem> sys = curves.system();
    auto random_word = [&](int lo, int hi) {
      std::vector<CurveId> out;
      const int n = uniform(lo, hi);
      for (int i = 0; i < n; ++i) out.push_back(pool[static_cast<std::size_t>(uniform(0, 4))]);
      return Word::positive(sys, out);
    };
    const Word host = random_word(1, 8);
    const Word target = random_word(1, 3);
    if (contains(host, target).status != Containment::yes) continue;
    EXPECT_EQ(contains(compose(host, random_word(0, 6)), target).status, Containment::yes);
    EXPECT_EQ(contains(compose(random_word(0, 6), host), target).status, Containment::yes);
  }
}

TEST(Contains, ExhaustedBudgetIsUnknown) {
  Fixture f;
  const Word aba = f.w({{f.a, 1}, {f.b, 1}, {f.a, 1}});
  EXPECT_EQ(contains(aba, f.w({{f.a, 1}, {f.a, 1}}), 0).status, Containment::unknown);
}

TEST(ApplyCommutations, RejectsUncertifiedSteps) {
  Fixture f;
  const Word w = f.w({{f.b, 1}, {f.c, 1}});
  const std::vector<std::size_t> steps{0};
  EXPECT_THROW(apply_commutations(w, steps), IndeterminateCommutation);
}

TEST(Substitute, LanternOnBoundaryWord) {
  const StandardLantern l = standard_lantern_configuration();
  const auto lc = l.curves;
  const Relator r = make_relator("lantern", Word::positive(l.system, std::vector<CurveId>{lc.a1, lc.a2, lc.a3, lc.a4}),
                                 Word::positive(l.system, std::vector<CurveId>{lc.a12, lc.a23, lc.a13}), 1,
                                 Provenance::paper_value);
  const Word boundary = Word::positive(l.system, l.boundary);
  const SubstitutionResult s = substitute(boundary, r);
  EXPECT_EQ(s.word, *r.right);
  EXPECT_EQ(s.record.dn, -1);
  EXPECT_EQ(s.record.dI, 1);
  expect_same_action(boundary, s.word);

  const SubstitutionResult back = substitute(s.word, r, -1);
  EXPECT_EQ(back.word.size(), 4U);
  EXPECT_EQ(back.record.dI, -1);
  EXPECT_EQ(back.record.dn, 1);
}

TEST(Substitute, AfterCommutations) {
  const StandardLantern l = standard_lantern_configuration();
  const auto lc = l.curves;
  auto sys = std::make_shared<CurveSystem>(*l.system);
  const CurveId x = sys->add(Curve::around_holes(sys->surface(), "x", {}));
  std::shared_ptr<const CurveSystem> csys = sys;
  const Relator r = make_relator("lantern", Word::positive(csys, std::vector<CurveId>{lc.a1, lc.a2, lc.a3, lc.a4}),
                                 Word::positive(csys, std::vector<CurveId>{lc.a12, lc.a23, lc.a13}), 1,
                                 Provenance::paper_value);
  const Word w = Word::positive(csys, std::vector<CurveId>{x, lc.a1, lc.a3, lc.a2, lc.a4});
  const SubstitutionResult s = substitute(w, r);
  EXPECT_EQ(s.word.size(), 4U);
  EXPECT_FALSE(s.record.embedding.commutations.empty());
  expect_same_action(w, s.word);
}

TEST(Substitute, TrivialRelatorLeavesWord) {
  Fixture f;
  const Word w = f.w({{f.a, 1}, {f.b, 1}});
  const Relator r = make_relator("trivial", f.w({{f.a, 1}}), f.w({{f.a, 1}}), 0, Provenance::user_asserted);
  EXPECT_EQ(substitute(w, r).word, w);
  EXPECT_EQ(substitute(w, r).record.dn, 0);
}

TEST(Substitute, NotApplicable) {
  Fixture f;
  const Relator r = make_relator("r", f.w({{f.c, 1}}), f.w({{f.c, 1}}), 0, Provenance::user_asserted);
  EXPECT_THROW(substitute(f.w({{f.a, 1}}), r), NotApplicable);
}

TEST(Substitute, LengthChangesByExponent) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto sample = steincalc::testing::random_planar_sample(uniform(4, 8), 20);
    for (const auto& entry : sample.lanterns)
      for (int direction : {1, -1}) {
        try {
          const SubstitutionResult s = substitute(sample.word, entry.relator, direction);
          EXPECT_EQ(static_cast<Int>(s.word.size()) - static_cast<Int>(sample.word.size()),
                    direction * *entry.relator.n);
          expect_same_action(sample.word, s.word);
        } catch (const NotApplicable&) {
        }
      }
  }
}

TEST(VerifyRelator, Examples) {
  const auto chain = standard_chain_configuration(2);
  std::vector<CurveId> power;
  for (int k = 0; k < 6; ++k) power.insert(power.end(), chain.config.chain.begin(), chain.config.chain.end());
  const Relator r = make_relator("chain2", Word::positive(chain.system, chain.config.boundary),
                                 Word::positive(chain.system, power), -7, Provenance::paper_value);
  const RelatorReport ok = verify_relator(r);
  EXPECT_EQ(ok.homology_identity, CheckStatus::pass);
  EXPECT_EQ(*r.n, 11);
  EXPECT_TRUE(ok.necessary_conditions_hold());
  EXPECT_EQ(ok.allowable, false);

  const Relator fake = make_relator("fake", Word::positive(chain.system, std::vector<CurveId>{chain.config.chain[0]}),
                                    Word::positive(chain.system, std::vector<CurveId>{chain.config.chain[1]}),
                                    std::nullopt, Provenance::user_asserted);
  const RelatorReport bad = verify_relator(fake);
  EXPECT_EQ(bad.homology_identity, CheckStatus::fail);
  EXPECT_FALSE(bad.failing_basis_vectors.empty());
  EXPECT_FALSE(bad.necessary_conditions_hold());
}

TEST(VerifyRelator, InconsistentExponentFails) {
  const auto chain = standard_chain_configuration(2);
  Relator r = make_relator("r", Word::positive(chain.system, chain.config.boundary),
                           Word::positive(chain.system, chain.config.boundary), 0, Provenance::user_asserted);
  r.n = 3;
  EXPECT_EQ(verify_relator(r).exponent_consistent, CheckStatus::fail);
}
