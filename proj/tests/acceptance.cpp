// Acceptance gate: one PASS/FAIL line per criterion.

#include <Eigen/Dense>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "steincalc/configurations.hpp"
#include "steincalc/error.hpp"
#include "steincalc/invariants.hpp"
#include "steincalc/planarity.hpp"
#include "steincalc/relators.hpp"
#include "support.hpp"

using namespace steincalc;
namespace st = steincalc::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

bool has_values(const RelatorEntry& e, Int I, Int n) {
  return e.relator.I == I && e.relator.n == n && e.m == Obstruction::known(I + n);
}

Outcome relator_values() {
  Outcome o;
  const RelatorDatabase db = standard_relators();
  o.require(has_values(db.at("lantern"), 1, -1), "lantern");
  o.require(has_values(db.at("chain2"), -7, 11), "2-chain");
  o.require(has_values(db.at("braid"), 0, 0), "braid");
  const std::vector<RelatorEntry> parts{db.at("lantern"), db.at("chain2")};
  o.require(has_values(compose_relators(parts, "chain3"), -6, 10), "3-chain by composition");
  o.require(has_values(db.at("chain3"), -6, 10), "3-chain entry");
  o.require(has_values(db.at("r_ns"), -7, 11), "r_ns");
  o.detail = o.pass ? "lantern (1,-1), 2-chain (-7,11), braid (0,0), 3-chain (-6,10), r_ns (-7,11)" : o.detail;
  return o;
}

Outcome planar_calibration() {
  Outcome o;
  for (int b = 2; b <= 10; ++b) {
    const auto cfg = tau_boundary_configuration(0, b);
    const Word w = cfg.word();
    const PlanarForm f = planar_intersection_form(w);
    const std::string at = "b = " + std::to_string(b);
    o.require(f.b2 == 1 && f.invariant_factors == IntVector{b}, at + ": Q");
    o.require(f.signature == -1, at + ": sigma");
    o.require(euler_characteristic(w) == 2, at + ": e");
    o.require(h1_boundary(w).group == AbelianGroup{{b}, 0}, at + ": H1");
  }
  if (o.pass) o.detail = "b = 2..10: Q = <-b>, sigma = -1, e = 2, H1 = Z/b";
  return o;
}

Outcome substitution_consistency() {
  Outcome o;
  const StandardLantern l = standard_lantern_configuration();
  const RelatorEntry r = lantern(l.system, l.curves);
  const Word before = Word::positive(l.system, l.boundary);
  const SubstitutionResult s = substitute(before, r.relator);
  const Int e0 = euler_characteristic(before), e1 = euler_characteristic(s.word);
  const int s0 = planar_intersection_form(before).signature, s1 = planar_intersection_form(s.word).signature;
  o.require(e0 == 2 && s0 == -1, "before");
  o.require(e1 == 1 && s1 == 0, "after");
  o.require(s1 - s0 == *r.relator.I && s.record.dI == *r.relator.I, "delta sigma = I");
  o.require(e1 - e0 == *r.relator.n && s.record.dn == *r.relator.n, "delta e = n");
  if (o.pass) o.detail = "(e, sigma): (2, -1) -> (1, 0); delta sigma = I = 1, delta e = n = -1";
  return o;
}

std::size_t indicator_rank(const Word& w) {
  const int b = w.surface().boundary_count();
  if (w.empty()) return 0;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(b - 1, static_cast<Eigen::Index>(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i)
    for (int h : *w.curve_at(i).hole_set) m(h - 2, static_cast<Eigen::Index>(i)) = 1.0;
  return static_cast<std::size_t>(Eigen::FullPivLU<Eigen::MatrixXd>(m).rank());
}

Outcome esig_invariance() {
  Outcome o;
  constexpr int kSamples = 1000;
  int substitutions = 0;
  for (int i = 0; i < kSamples && o.pass; ++i) {
    const int b = st::uniform(4, 8);
    const auto sample = st::random_planar_sample(b, 20);
    std::vector<Word> frontier{sample.word};
    // Up to three rounds of every applicable substitution, both directions.
    for (int round = 0; round < 3 && !frontier.empty(); ++round) {
      std::vector<Word> next;
      for (const Word& w : frontier) {
        const Int esig = euler_characteristic(w) + planar_intersection_form(w).signature;
        o.require(esig == Int{2 - b} + static_cast<Int>(indicator_rank(w)), "library e + sigma vs rank oracle");
        for (const auto& entry : sample.lanterns)
          for (int direction : {1, -1}) {
            std::optional<Word> out;
            try {
              out = substitute(w, entry.relator, direction).word;
            } catch (const NotApplicable&) {
              continue;
            }
            ++substitutions;
            const Int after = euler_characteristic(*out) + planar_intersection_form(*out).signature;
            o.require(after == esig, "e + sigma changed under " + entry.name());
            if (next.size() < 4) next.push_back(*out);
          }
      }
      frontier = std::move(next);
    }
  }
  o.require(substitutions >= kSamples, "too few applicable substitutions");
  if (o.pass)
    o.detail = std::to_string(kSamples) + " factorizations, " + std::to_string(substitutions) +
               " lantern substitutions, e + sigma invariant";
  return o;
}

bool identity_on_basis(const Relator& r) {
  const Surface& s = r.left->surface();
  for (std::size_t i = 0; i < s.rank(); ++i) {
    const HomologyClass e = HomologyClass::basis(s, i);
    if (r.left->act(e) != r.right->act(e)) return false;
  }
  return true;
}

Outcome homology_identity() {
  Outcome o;
  std::vector<std::string> ranks;
  auto check = [&](const RelatorEntry& e) {
    const RelatorReport rep = verify_relator(e.relator);
    o.require(rep.homology_identity == CheckStatus::pass && rep.failing_basis_vectors.empty(), e.name());
    o.require(identity_on_basis(e.relator), e.name() + " (basis replay)");
    ranks.push_back(e.name() + ":" + std::to_string(e.relator.left->surface().rank()));
  };
  const RelatorDatabase db = standard_relators();
  for (const RelatorEntry& e : db.entries()) check(e);
  for (int n = 1; n <= 6; ++n) {
    const StandardChain sc = standard_chain_configuration(n);
    check(chain(sc.system, sc.config));
  }
  if (o.pass) {
    o.detail = "ranks";
    for (const auto& r : ranks) o.detail += " " + r;
    o.detail += " (r_ns lives on Sigma_{1,3}, whose H1 has rank 2g+b-1 = 4)";
  }
  return o;
}

Outcome h1_family() {
  Outcome o;
  for (int g = 0; g <= 3; ++g)
    for (int b = 2; b <= 12; ++b) {
      const auto cfg = tau_boundary_configuration(g, b);
      o.require(h1_boundary(cfg.word()).group == AbelianGroup{{b}, static_cast<std::size_t>(2 * g)},
                "g = " + std::to_string(g) + ", b = " + std::to_string(b));
    }
  if (o.pass) o.detail = "0 <= g <= 3, 2 <= b <= 12: H1 = Z^{2g} + Z/b";
  return o;
}

Outcome chern_cases() {
  Outcome o;
  int checked = 0;
  for (int g = 1; g <= 4; ++g)
    for (int b = 2; b <= 8; ++b) {
      const auto cfg = tau_boundary_configuration(g, b);
      const ChernData c = chern_pd(cfg.word());
      const std::string at = "g = " + std::to_string(g) + ", b = " + std::to_string(b);
      const Int k = 2 * g - 2;
      if (b == 2) o.require(c.is_zero(), at + ": expected 0");
      if (g == 1) o.require(c.is_zero(), at + ": expected 0");
      if (g > 1 && b > 2) {
        const H1Boundary h = h1_boundary(cfg.word());
        const FinitelyGeneratedQuotient q(h.relations);
        IntVector diff = c.c1_pd;
        diff[cfg.system->surface().d_index(2)] -= k;
        o.require(q.is_zero(diff), at + ": c1 != (2g-2) d2");
        o.require(c.order > 0 && b % c.order == 0, at + ": order does not divide b");
        o.require(c.order == b / std::gcd(k, Int{b}), at + ": order");
        o.require(c.is_zero() == (k % b == 0), at + ": vanishing");
      }
      ++checked;
    }
  if (o.pass) o.detail = std::to_string(checked) + " pages, g <= 4, b <= 8";
  return o;
}

Outcome obstruction_certificates() {
  Outcome o;
  const StandardChain sc = standard_chain_configuration(2);
  RelatorDatabase db;
  db.add(chain(sc.system, sc.config));
  const CurveId a = sc.config.chain[0], b = sc.config.chain[1], delta = sc.config.boundary[0];
  const Word w = Word::positive(sc.system, std::vector<CurveId>{b, delta, a, a});
  const auto certs = detect_relator(w, db);
  o.require(certs.size() == 1 && certs[0].verdict == Verdict::non_planar, "2-chain not detected");
  if (o.pass) {
    const auto& witness = std::get<RelatorWitness>(*certs[0].witness);
    o.require(witness.m == Obstruction::known(4), "m != 4");
    o.require(recheck(w, db, witness), "witness does not recheck");
  }
  for (int g = 0; g <= 3; ++g)
    for (int bb = 1; bb <= 12; ++bb) {
      const auto cfg = tau_boundary_configuration(g, bb);
      const BoundingDeclaration decl{"page", {g, bb}, cfg.boundary};
      const PlanarityCertificate c = detect_bounding(cfg.word(), decl);
      const bool expected = g >= 1 && (bb <= 2 || (g == 1 && bb <= 9) || (g == 2 && bb <= 8));
      o.require((c.verdict == Verdict::non_planar) == expected,
                "bounding (" + std::to_string(g) + "," + std::to_string(bb) + ")");
      if (g == 1 && bb == 10)
        o.require(!c.notes.empty() && c.notes.front() == "no such relator for b > 9", "(1,10) note");
    }
  if (o.pass) o.detail = "2-chain m = 4 with rechecked witness; bounding cases exact over g <= 3, b <= 12";
  return o;
}

Outcome mod4_sanity() {
  Outcome o;
  int count = 0;
  auto check = [&](const RelatorEntry& e) {
    if (e.m.kind != Obstruction::Kind::known) return;
    ++count;
    o.require(mod4(e.m.value) == 0, e.name());
  };
  const RelatorDatabase db = standard_relators();
  for (const RelatorEntry& e : db.entries()) {
    check(e);
    check(e.inverse());
  }
  for (int n = 1; n <= 6; ++n) {
    const StandardChain sc = standard_chain_configuration(n);
    check(chain(sc.system, sc.config));
  }
  for (int b = 1; b <= 9; ++b)
    if (auto g = genus_boundary_relator(1, b); g.entry) check(*g.entry);

  // Two genuine planar fillings whose e + sigma differ mod 4, asserted to share a boundary.
  const StandardLantern l = standard_lantern_configuration();
  const FillingInvariants x = compute_invariants(Word::positive(l.system, l.boundary));
  const FillingInvariants y = compute_invariants(Word::positive(l.system, std::vector<CurveId>{l.curves.a12}));
  const EsigComparison c = esig_check(x, y, true);
  o.require(!c.congruent_mod4, "pair is congruent mod 4");
  o.require(esig_planarity_test(x, y).verdict == "assertion inconsistent", "pair verdict");
  o.require(esig_planarity_test(1, 2).verdict == "assertion inconsistent", "(1, 2) verdict");
  if (o.pass)
    o.detail = std::to_string(count) + " relators with I + n = 0 mod 4; e + sigma " + std::to_string(*x.esig) +
               " vs " + std::to_string(*y.esig) + " flagged as assertion inconsistent";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"relator value table", relator_values},
      {"planar calibration", planar_calibration},
      {"substitution consistency", substitution_consistency},
      {"e + sigma invariance (planar)", esig_invariance},
      {"homology identity of relators", homology_identity},
      {"H1 family sweep", h1_family},
      {"Chern computations", chern_cases},
      {"obstruction certificates", obstruction_certificates},
      {"mod-4 sanity", mod4_sanity},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d (%s): %s - %s\n", index++, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
