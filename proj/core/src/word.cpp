#include "steincalc/word.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>

#include "steincalc/error.hpp"

namespace steincalc {

Word::Word(std::shared_ptr<const CurveSystem> system, std::vector<Twist> twists)
    : system_(std::move(system)), twists_(std::move(twists)) {
  if (!system_) throw PreconditionError("word needs a curve system");
  for (const Twist& t : twists_) {
    if (t.curve.value >= system_->size()) throw PreconditionError("twist refers to an unknown curve");
    if (t.sign != 1 && t.sign != -1) throw PreconditionError("twist sign must be +1 or -1");
  }
}

Word Word::positive(std::shared_ptr<const CurveSystem> system, std::span<const CurveId> curves) {
  std::vector<Twist> twists;
  twists.reserve(curves.size());
  for (CurveId c : curves) twists.push_back({c, 1});
  return Word(std::move(system), std::move(twists));
}

bool Word::is_positive() const {
  return std::all_of(twists_.begin(), twists_.end(), [](const Twist& t) { return t.sign == 1; });
}

Word Word::inverse() const {
  std::vector<Twist> inv;
  inv.reserve(twists_.size());
  for (auto it = twists_.rbegin(); it != twists_.rend(); ++it) inv.push_back(it->inverse());
  return Word(system_, std::move(inv));
}

HomologyClass Word::act(const HomologyClass& x) const {
  HomologyClass y = x;
  for (auto it = twists_.rbegin(); it != twists_.rend(); ++it) y = twist_action((*system_)[it->curve], y, it->sign);
  return y;
}

IntMatrix Word::action_matrix() const {
  const Surface& s = surface();
  std::vector<IntVector> columns;
  for (std::size_t i = 0; i < s.rank(); ++i) columns.push_back(act(HomologyClass::basis(s, i)).coords());
  return IntMatrix::from_columns(s.rank(), columns);
}

std::string Word::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < twists_.size(); ++i) {
    if (i) out += ", ";
    out += (*system_)[twists_[i].curve].name;
    if (twists_[i].sign < 0) out += "^-1";
  }
  return out + "]";
}

Word compose(const Word& w1, const Word& w2) {
  if (w1.system_ptr() != w2.system_ptr()) throw StructuralError("cannot compose words over different curve systems");
  std::vector<Twist> t(w1.twists().begin(), w1.twists().end());
  t.insert(t.end(), w2.twists().begin(), w2.twists().end());
  return Word(w1.system_ptr(), std::move(t));
}

Word free_reduce(const Word& w) {
  std::vector<Twist> stack;
  for (const Twist& t : w.twists()) {
    if (!stack.empty() && stack.back() == t.inverse())
      stack.pop_back();
    else
      stack.push_back(t);
  }
  return Word(w.system_ptr(), std::move(stack));
}

Word commute_adjacent(const Word& w, std::size_t i) {
  if (i + 1 >= w.size()) throw PreconditionError("commutation position out of range");
  if (curves_commute(w.system(), w[i].curve, w[i + 1].curve) != CommuteStatus::commute)
    throw IndeterminateCommutation("cannot certify that " + w.curve_at(i).name + " and " + w.curve_at(i + 1).name +
                                   " are disjoint");
  std::vector<Twist> t(w.twists().begin(), w.twists().end());
  std::swap(t[i], t[i + 1]);
  return Word(w.system_ptr(), std::move(t));
}

Word apply_commutations(const Word& w, std::span<const std::size_t> commutations) {
  Word cur = w;
  for (std::size_t i : commutations) cur = commute_adjacent(cur, i);
  return cur;
}

namespace {

// Dependency order of a word: i precedes j (i < j) when some chain of
// non-commuting twists forces it.
class DependencyOrder {
 public:
  explicit DependencyOrder(const Word& w) : n_(w.size()), words_((n_ + 63) / 64), direct_(n_), reach_(n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      direct_[i].assign(words_, 0);
      reach_[i].assign(words_, 0);
    }
    for (std::size_t i = n_; i-- > 0;)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (curves_commute(w.system(), w[i].curve, w[j].curve) != CommuteStatus::commute) {
          set(direct_[i], j);
          set(reach_[i], j);
          for (std::size_t k = 0; k < words_; ++k) reach_[i][k] |= reach_[j][k];
        }
  }

  bool depends(std::size_t i, std::size_t j) const { return test(direct_[i], j); }
  bool precedes(std::size_t i, std::size_t j) const { return test(reach_[i], j); }
  std::size_t size() const { return n_; }

 private:
  static void set(std::vector<std::uint64_t>& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
  static bool test(const std::vector<std::uint64_t>& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> direct_;
  std::vector<std::vector<std::uint64_t>> reach_;
};

// Adjacent transpositions turning the identity order into `arrangement`.
std::vector<std::size_t> transpositions_for(std::span<const std::size_t> arrangement) {
  std::vector<std::size_t> current(arrangement.size());
  for (std::size_t i = 0; i < current.size(); ++i) current[i] = i;
  std::vector<std::size_t> swaps;
  for (std::size_t t = 0; t < arrangement.size(); ++t) {
    auto s = static_cast<std::size_t>(std::find(current.begin(), current.end(), arrangement[t]) - current.begin());
    while (s > t) {
      std::swap(current[s - 1], current[s]);
      swaps.push_back(s - 1);
      --s;
    }
  }
  return swaps;
}

bool contiguous_possible(const DependencyOrder& order, std::span<const std::size_t> chosen) {
  std::vector<char> is_chosen(order.size(), 0);
  for (std::size_t p : chosen) is_chosen[p] = 1;
  for (std::size_t x = 0; x < order.size(); ++x) {
    if (is_chosen[x]) continue;
    bool below = false, above = false;
    for (std::size_t p : chosen) {
      below = below || order.precedes(p, x);
      above = above || order.precedes(x, p);
    }
    if (below && above) return false;
  }
  return true;
}

// Backtracking over host positions for each target twist, in lexicographic
// order. `accept` sees complete assignments.
bool search_embedding(const Word& host, const Word& target, const DependencyOrder& order, std::size_t budget,
                      const std::function<bool(std::span<const std::size_t>)>& accept,
                      std::vector<std::size_t>& chosen) {
  std::vector<std::vector<std::size_t>> candidates(target.size());
  for (std::size_t k = 0; k < target.size(); ++k)
    for (std::size_t j = 0; j < host.size(); ++j)
      if (host[j] == target[k]) candidates[k].push_back(j);

  std::vector<char> used(host.size(), 0);
  std::size_t steps = 0;
  std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
    if (k == target.size()) return accept(chosen);
    for (std::size_t j : candidates[k]) {
      if (++steps > budget) return false;
      if (used[j]) continue;
      bool ok = true;
      for (std::size_t p : chosen)
        if (order.precedes(j, p)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used[j] = 1;
      chosen.push_back(j);
      if (go(k + 1)) return true;
      chosen.pop_back();
      used[j] = 0;
    }
    return false;
  };
  return go(0);
}

void check_same_system(const Word& host, const Word& target) {
  if (host.system_ptr() != target.system_ptr())
    throw StructuralError("host and target words use different curve systems");
}

}  // namespace

ContainmentResult contains(const Word& host, const Word& target, std::size_t budget) {
  check_same_system(host, target);
  if (!host.is_positive()) throw PreconditionError("containment is defined for positive words");
  const DependencyOrder order(host);
  std::vector<std::size_t> chosen;
  if (!search_embedding(host, target, order, budget, [](auto) { return true; }, chosen)) return {};

  // Kahn's algorithm over dependency edges plus the target chain, smallest index first.
  const std::size_t n = host.size();
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (order.depends(i, j)) {
        succ[i].push_back(j);
        ++indegree[j];
      }
  for (std::size_t k = 0; k + 1 < chosen.size(); ++k) {
    succ[chosen[k]].push_back(chosen[k + 1]);
    ++indegree[chosen[k + 1]];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push(i);
  Embedding e;
  e.positions = chosen;
  while (!ready.empty()) {
    const std::size_t i = ready.top();
    ready.pop();
    e.arrangement.push_back(i);
    for (std::size_t j : succ[i])
      if (--indegree[j] == 0) ready.push(j);
  }
  if (e.arrangement.size() != n) throw Error("internal error: containment order has a cycle");
  e.commutations = transpositions_for(e.arrangement);
  return {Containment::yes, std::move(e)};
}

std::optional<Embedding> find_block_embedding(const Word& host, const Word& target, std::size_t budget) {
  check_same_system(host, target);
  const DependencyOrder order(host);
  std::vector<std::size_t> chosen;
  auto accept = [&](std::span<const std::size_t> c) { return contiguous_possible(order, c); };
  if (!search_embedding(host, target, order, budget, accept, chosen)) return std::nullopt;

  const std::size_t n = host.size();
  std::vector<char> is_chosen(n, 0);
  for (std::size_t p : chosen) is_chosen[p] = 1;
  const std::size_t first = chosen.empty() ? 0 : *std::min_element(chosen.begin(), chosen.end());

  // Everything forced before the block, or already before it and not forced
  // after it, stays in front; the rest follows in original order.
  Embedding e;
  e.positions = chosen;
  std::vector<std::size_t> tail;
  for (std::size_t x = 0; x < n; ++x) {
    if (is_chosen[x]) continue;
    bool ancestor = x < first;
    for (std::size_t p : chosen) ancestor = ancestor || order.precedes(x, p);
    (ancestor ? e.arrangement : tail).push_back(x);
  }
  e.block_start = e.arrangement.size();
  e.arrangement.insert(e.arrangement.end(), chosen.begin(), chosen.end());
  e.arrangement.insert(e.arrangement.end(), tail.begin(), tail.end());
  e.commutations = transpositions_for(e.arrangement);
  return e;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::paper_value:
      return "paper-value";
    case Provenance::derived:
      return "derived";
    case Provenance::user_asserted:
      return "user-asserted";
  }
  return "user-asserted";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "paper-value") return Provenance::paper_value;
  if (s == "derived") return Provenance::derived;
  if (s == "user-asserted") return Provenance::user_asserted;
  throw PreconditionError("unknown provenance '" + s + "'");
}

std::optional<bool> Relator::allowable() const {
  if (!left || !right) return std::nullopt;
  for (const Word* w : {&*left, &*right})
    for (std::size_t i = 0; i < w->size(); ++i)
      if (!w->curve_at(i).allowable()) return false;
  return true;
}

Relator make_relator(std::string name, Word left, Word right, std::optional<Int> I, Provenance provenance) {
  if (left.system_ptr() != right.system_ptr())
    throw StructuralError("relator sides use different curve systems");
  if (!left.is_positive() || !right.is_positive())
    throw PreconditionError("relator '" + name + "' must have positive sides");
  const Int n = static_cast<Int>(right.size()) - static_cast<Int>(left.size());
  return Relator{std::move(name), std::move(left), std::move(right), I, n, provenance};
}

SubstitutionResult substitute(const Word& w, const Relator& r, int direction) {
  if (direction != 1 && direction != -1) throw PreconditionError("direction must be +1 or -1");
  if (!r.left || !r.right) throw NotApplicable("relator '" + r.name + "' has no explicit word for both sides");
  const Word& target = direction == 1 ? *r.left : *r.right;
  auto embedding = find_block_embedding(w, target);
  if (!embedding)
    throw NotApplicable("no certified embedding of " + target.to_string() + " in " + w.to_string() +
                        " (absence is not proven)");
  return substitute(w, r, *embedding, direction);
}

SubstitutionResult substitute(const Word& w, const Relator& r, const Embedding& embedding, int direction) {
  if (direction != 1 && direction != -1) throw PreconditionError("direction must be +1 or -1");
  if (!r.left || !r.right) throw NotApplicable("relator '" + r.name + "' has no explicit word for both sides");
  if (!w.is_positive()) throw PreconditionError("substitution requires a positive word");
  const Word& from = direction == 1 ? *r.left : *r.right;
  const Word& to = direction == 1 ? *r.right : *r.left;
  check_same_system(w, from);
  if (!embedding.block_start) throw PreconditionError("substitution needs a block embedding");

  // Re-derive the arranged word through the certificate, so a forged
  // embedding cannot slip through.
  const Word arranged = apply_commutations(w, embedding.commutations);
  const std::size_t start = *embedding.block_start;
  if (start + from.size() > arranged.size()) throw PreconditionError("embedding block out of range");
  for (std::size_t k = 0; k < from.size(); ++k)
    if (!(arranged[start + k] == from[k])) throw PreconditionError("embedding does not match the relator side");

  std::vector<Twist> out(arranged.twists().begin(), arranged.twists().begin() + static_cast<std::ptrdiff_t>(start));
  out.insert(out.end(), to.twists().begin(), to.twists().end());
  out.insert(out.end(), arranged.twists().begin() + static_cast<std::ptrdiff_t>(start + from.size()),
             arranged.twists().end());

  SubstitutionRecord rec;
  rec.relator = r.name;
  rec.direction = direction;
  if (r.I) rec.dI = direction * *r.I;
  rec.dn = static_cast<Int>(to.size()) - static_cast<Int>(from.size());
  rec.embedding = embedding;
  return {Word(w.system_ptr(), std::move(out)), std::move(rec)};
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "skipped";
}

bool RelatorReport::necessary_conditions_hold() const {
  return homology_identity != CheckStatus::fail && exponent_consistent != CheckStatus::fail;
}

RelatorReport verify_relator(const Relator& r) {
  RelatorReport rep;
  if (!r.left || !r.right) {
    rep.notes.push_back("relator sides not written out; homology and exponent checks skipped");
    return rep;
  }
  const Surface& s = r.left->surface();
  for (std::size_t i = 0; i < s.rank(); ++i) {
    const HomologyClass e = HomologyClass::basis(s, i);
    if (!(r.left->act(e) == r.right->act(e))) rep.failing_basis_vectors.push_back(s.basis_label(i));
  }
  rep.homology_identity = rep.failing_basis_vectors.empty() ? CheckStatus::pass : CheckStatus::fail;

  const Int n = static_cast<Int>(r.right->size()) - static_cast<Int>(r.left->size());
  rep.exponent_consistent = (!r.n || *r.n == n) ? CheckStatus::pass : CheckStatus::fail;
  rep.allowable = r.allowable();
  if (rep.allowable == false) rep.notes.push_back("relator involves a null-homologous curve");
  rep.notes.push_back(rep.necessary_conditions_hold()
                          ? "necessary conditions hold; membership in the kernel is not proven"
                          : "relator fails a necessary condition");
  return rep;
}

}  // namespace steincalc
