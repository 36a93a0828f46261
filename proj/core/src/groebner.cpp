#include "dsbent/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace dsbent {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  const BuchbergerLimits& limits;
  std::uint64_t steps = 0;
  Clock::time_point start = Clock::now();

  void charge(std::uint64_t n = 1) {
    steps += n;
    if (limits.max_reduction_steps && steps > limits.max_reduction_steps)
      throw resource_limit_error("reduction step cap exceeded");
    if (limits.max_seconds > 0 && (steps & 0x3FF) == 0) {
      const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
      if (elapsed > limits.max_seconds) throw resource_limit_error("wall clock cap exceeded");
    }
  }
};

MultiPoly normal_form_budgeted(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                               Budget& budget) {
  MultiPoly h = p;
  std::vector<MultiPoly::Term> remainder;
  while (!h.is_zero()) {
    const MultiPoly::Term& lt = h.leading_term();
    bool reduced_once = false;
    for (const MultiPoly& g : basis) {
      if (g.is_zero()) continue;
      if (!g.leading_monomial().divides(lt.mono)) continue;
      const Monomial shift = lt.mono.divide_by(g.leading_monomial());
      const CycNum factor = lt.coeff * g.leading_term().coeff.inverse();
      h = h.sub_scaled(factor, shift, g);
      budget.charge();
      reduced_once = true;
      break;
    }
    if (!reduced_once) {
      remainder.push_back(lt);
      h = h.without_leading_term();
    }
  }
  return MultiPoly::of_terms(p.field(), p.nvars(), std::move(remainder), p.order());
}

MultiPoly spoly(const MultiPoly& f, const MultiPoly& g) {
  const Monomial l = f.leading_monomial().lcm_with(g.leading_monomial());
  const Monomial mf = l.divide_by(f.leading_monomial());
  const Monomial mg = l.divide_by(g.leading_monomial());
  const MultiPoly a = MultiPoly::term(f.field(), f.nvars(), mf,
                                      f.leading_term().coeff.inverse(), f.order()) *
                      f;
  const MultiPoly b = MultiPoly::term(g.field(), g.nvars(), mg,
                                      g.leading_term().coeff.inverse(), g.order()) *
                      g;
  return a - b;
}

}  // namespace

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis, std::uint64_t* steps,
                      const BuchbergerLimits& limits) {
  Budget budget{limits};
  MultiPoly r = normal_form_budgeted(p, basis, budget);
  if (steps) *steps += budget.steps;
  return r;
}

GroebnerBasis buchberger(std::vector<MultiPoly> generators, MonomialOrder order,
                         const BuchbergerLimits& limits) {
  if (generators.empty()) throw std::invalid_argument("empty generator list");
  const FieldPtr field = generators[0].field();
  const unsigned nvars = generators[0].nvars();

  Budget budget{limits};
  std::vector<MultiPoly> basis;
  for (MultiPoly& g : generators) {
    if (g.nvars() != nvars || g.field()->level() != field->level())
      throw std::invalid_argument("generators live in different rings");
    MultiPoly h = g.order() == order ? std::move(g) : g.with_order(order);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
  }
  GroebnerBasis out;
  out.order = order;
  out.nvars = nvars;
  out.field = field;
  if (basis.empty()) {
    out.generators = {};
    out.reduced = true;
    return out;
  }

  using Pair = std::pair<std::size_t, std::size_t>;
  struct QueueEntry {
    Monomial lcm;
    Pair pair;
  };
  auto entry_less = [order](const QueueEntry& a, const QueueEntry& b) {
    const int c = Monomial::compare(a.lcm, b.lcm, order);
    if (c != 0) return c < 0;
    return a.pair < b.pair;
  };

  std::vector<QueueEntry> queue;
  std::set<Pair> pending;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    queue.push_back(QueueEntry{basis[i].leading_monomial().lcm_with(basis[j].leading_monomial()),
                               Pair{i, j}});
    std::push_heap(queue.begin(), queue.end(),
                   [&](const QueueEntry& a, const QueueEntry& b) { return entry_less(b, a); });
    pending.insert(Pair{i, j});
  };

  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

  while (!queue.empty()) {
    std::pop_heap(queue.begin(), queue.end(),
                  [&](const QueueEntry& a, const QueueEntry& b) { return entry_less(b, a); });
    const QueueEntry entry = std::move(queue.back());
    queue.pop_back();
    const auto [i, j] = entry.pair;
    pending.erase(entry.pair);

    const Monomial& lmi = basis[i].leading_monomial();
    const Monomial& lmj = basis[j].leading_monomial();
    // Buchberger's first criterion
    if (lmi.coprime_with(lmj)) continue;
    // chain criterion: some k with LM_k | lcm and both cross pairs settled
    const Monomial lcm = lmi.lcm_with(lmj);
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!basis[k].leading_monomial().divides(lcm)) continue;
      const Pair ik{std::min(i, k), std::max(i, k)};
      const Pair jk{std::min(j, k), std::max(j, k)};
      if (!pending.count(ik) && !pending.count(jk)) skip = true;
    }
    if (skip) continue;

    MultiPoly r = normal_form_budgeted(spoly(basis[i], basis[j]), basis, budget);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    const std::size_t n = basis.size() - 1;
    for (std::size_t k = 0; k < n; ++k) push_pair(k, n);
  }

  // minimal basis: drop generators whose LM is divisible by another kept LM
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < basis.size() && keep; ++j) {
      if (i == j) continue;
      const Monomial& lmj = basis[j].leading_monomial();
      if (!lmj.divides(basis[i].leading_monomial())) continue;
      if (lmj == basis[i].leading_monomial() && j > i) continue;  // keep the first of duplicates
      keep = false;
    }
    if (keep) minimal.push_back(basis[i]);
  }

  // inter-reduce tails for the reduced basis
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MultiPoly r = normal_form_budgeted(minimal[i], others, budget);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [order](const MultiPoly& a, const MultiPoly& b) {
    return Monomial::compare(a.leading_monomial(), b.leading_monomial(), order) > 0;
  });

  out.generators = std::move(reduced);
  out.reduced = true;
  return out;
}

}  // namespace dsbent
