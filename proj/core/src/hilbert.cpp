#include "dsbent/hilbert.hpp"

#include <stdexcept>

#include "dsbent/boolfn.hpp"
#include "dsbent/charsum.hpp"

namespace dsbent {

std::vector<MultiPoly> build_generators(const GroupSpec& spec, const DSParams& params,
                                        unsigned var_cap) {
  if (params.v != spec.order()) throw std::invalid_argument("params.v does not match group order");
  if (spec.order() > var_cap) throw std::invalid_argument("group order exceeds the variable cap");
  const unsigned v = static_cast<unsigned>(spec.order());
  FieldPtr field = charsum_field(spec);
  const std::uint64_t n = field->level();

  std::vector<MultiPoly> gens;
  gens.reserve(2 * v);

  // zeta exponent of xi^g, per unity point and group element
  std::vector<std::uint64_t> steps(spec.rank());
  for (std::uint64_t u = 0; u < spec.order(); ++u) {
    const UnityPoint xi = unity_point_at(spec, u);
    for (std::size_t l = 0; l < spec.rank(); ++l)
      steps[l] = (n / spec.modulus(l)) * xi.exponents[l] % n;
    std::vector<std::uint64_t> expo(v);
    for (std::uint64_t g = 0; g < v; ++g) {
      const GroupElement e = spec.element_at(g);
      std::uint64_t s = 0;
      for (std::size_t l = 0; l < spec.rank(); ++l) s = (s + steps[l] * e.coords[l]) % n;
      expo[g] = s;
    }

    // Psi(xi, A) = (sum_g A_g xi^g)(sum_g A_g xi^{-g}) - lambda rho_G(G)(xi) - (k - lambda)
    std::vector<MultiPoly::Term> terms;
    terms.reserve(v * (v + 1) / 2 + 2);
    for (unsigned g = 0; g < v; ++g) {
      for (unsigned h = 0; h < v; ++h) {
        const long long diff = static_cast<long long>(expo[g]) - static_cast<long long>(expo[h]);
        terms.push_back(MultiPoly::Term{Monomial::var(g) * Monomial::var(h),
                                        CycNum::root_power(field, diff)});
      }
    }
    CycNum rho_g = CycNum::zero(field);
    for (unsigned g = 0; g < v; ++g) rho_g += CycNum::root_power(field, static_cast<long long>(expo[g]));
    terms.push_back(MultiPoly::Term{
        Monomial::one(), -(rho_g.scaled(Rational(static_cast<long>(params.lambda))))});
    terms.push_back(MultiPoly::Term{
        Monomial::one(),
        CycNum::of(field, -Rational(static_cast<long>(params.k - params.lambda)))});
    gens.push_back(MultiPoly::of_terms(field, v, std::move(terms)));
  }

  for (unsigned g = 0; g < v; ++g) {
    std::vector<MultiPoly::Term> terms;
    terms.push_back(MultiPoly::Term{Monomial::var(g, 2), CycNum::one(field)});
    terms.push_back(MultiPoly::Term{Monomial::var(g), CycNum::of(field, Rational(-1))});
    gens.push_back(MultiPoly::of_terms(field, v, std::move(terms)));
  }
  return gens;
}

namespace {

// Per-variable exponent bounds from pure-power leading monomials; nullopt
// when a variable has none (infinite-dimensional quotient).
std::optional<std::vector<std::uint32_t>> pure_power_bounds(const GroebnerBasis& gb) {
  if (!gb.reduced) throw std::invalid_argument("requires a reduced basis");
  for (const MultiPoly& g : gb.generators)
    if (!g.is_zero() && g.leading_monomial().is_one()) return std::vector<std::uint32_t>{};
  std::vector<std::uint32_t> bounds(gb.nvars, 0);
  for (const MultiPoly& g : gb.generators) {
    const auto pp = g.leading_monomial().as_pure_power();
    if (!pp) continue;
    if (bounds[pp->first] == 0 || pp->second < bounds[pp->first]) bounds[pp->first] = pp->second;
  }
  for (std::uint32_t b : bounds)
    if (b == 0) return std::nullopt;
  return bounds;
}

// Walks exponent vectors below the bounds, skipping multiples of leading
// monomials, and hands each standard monomial's total degree to the sink.
template <class F>
void visit_standard_monomials(const GroebnerBasis& gb, const std::vector<std::uint32_t>& bounds,
                              F&& sink) {
  if (bounds.empty()) return;  // basis contains a unit
  std::vector<Monomial> lms;
  lms.reserve(gb.generators.size());
  for (const MultiPoly& g : gb.generators) lms.push_back(g.leading_monomial());

  std::vector<std::uint32_t> expo(gb.nvars, 0);
  std::vector<Monomial::Factor> factors;
  auto rec = [&](auto&& self, std::uint32_t var, std::uint32_t degree) -> void {
    if (var == gb.nvars) {
      factors.clear();
      for (std::uint32_t v2 = 0; v2 < gb.nvars; ++v2)
        if (expo[v2]) factors.emplace_back(v2, expo[v2]);
      const Monomial m = Monomial::of_factors(factors);
      for (const Monomial& lm : lms)
        if (lm.divides(m)) return;
      sink(degree);
      return;
    }
    for (std::uint32_t e = 0; e < bounds[var]; ++e) {
      expo[var] = e;
      self(self, var + 1, degree + e);
    }
    expo[var] = 0;
  };
  rec(rec, 0, 0);
}

}  // namespace

std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& gb) {
  const auto bounds = pure_power_bounds(gb);
  if (!bounds) return std::nullopt;
  std::uint64_t count = 0;
  visit_standard_monomials(gb, *bounds, [&](std::uint32_t) { ++count; });
  return count;
}

std::uint64_t affine_hilbert_function(const GroebnerBasis& gb, unsigned s) {
  if (!order_is_degree_compatible(gb.order))
    throw std::invalid_argument("affine Hilbert function requires a degree-compatible order");
  auto bounds = pure_power_bounds(gb);
  if (!bounds) {
    // truncate unbounded directions at s+1: higher exponents exceed degree s
    bounds = std::vector<std::uint32_t>(gb.nvars, 0);
    for (const MultiPoly& g : gb.generators) {
      const auto pp = g.leading_monomial().as_pure_power();
      if (pp && ((*bounds)[pp->first] == 0 || pp->second < (*bounds)[pp->first]))
        (*bounds)[pp->first] = pp->second;
    }
    for (auto& b : *bounds) b = b == 0 ? s + 1 : std::min<std::uint32_t>(b, s + 1);
  }
  std::uint64_t count = 0;
  visit_standard_monomials(gb, *bounds, [&](std::uint32_t d) {
    if (d <= s) ++count;
  });
  return count;
}

unsigned affine_hilbert_stabilization(const GroebnerBasis& gb) {
  const auto bounds = pure_power_bounds(gb);
  if (!bounds) throw std::invalid_argument("quotient is not finite dimensional");
  std::uint32_t max_degree = 0;
  visit_standard_monomials(gb, *bounds,
                           [&](std::uint32_t d) { max_degree = std::max(max_degree, d); });
  return max_degree;
}

GroebnerBasis homogenize(const GroebnerBasis& gb) {
  if (!gb.reduced) throw std::invalid_argument("homogenize expects a reduced basis");
  if (!order_is_degree_compatible(gb.order))
    throw std::invalid_argument("homogenization of a basis requires a degree-compatible order");
  GroebnerBasis out;
  out.order = gb.order;
  out.nvars = gb.nvars + 1;
  out.field = gb.field;
  out.reduced = true;  // tails stay reduced: leading monomials are B-free
  out.generators.reserve(gb.generators.size());
  for (const MultiPoly& g : gb.generators) out.generators.push_back(g.homogenized(gb.nvars));
  return out;
}

std::uint64_t graded_hilbert_function(const GroebnerBasis& gb, unsigned s) {
  for (const MultiPoly& g : gb.generators)
    if (!g.is_homogeneous()) throw std::invalid_argument("basis is not homogeneous");
  std::vector<Monomial> lms;
  for (const MultiPoly& g : gb.generators) {
    if (!g.is_zero() && g.leading_monomial().is_one()) return 0;
    lms.push_back(g.leading_monomial());
  }
  // exponent bounds: pure-power LMs cap a variable, degree s caps the rest
  std::vector<std::uint32_t> bounds(gb.nvars, s + 1);
  for (const Monomial& lm : lms) {
    const auto pp = lm.as_pure_power();
    if (pp && pp->second < bounds[pp->first]) bounds[pp->first] = pp->second;
  }
  std::uint64_t count = 0;
  std::vector<std::uint32_t> expo(gb.nvars, 0);
  auto rec = [&](auto&& self, std::uint32_t var, std::uint32_t degree) -> void {
    if (var == gb.nvars) {
      if (degree != s) return;
      std::vector<Monomial::Factor> factors;
      for (std::uint32_t v2 = 0; v2 < gb.nvars; ++v2)
        if (expo[v2]) factors.emplace_back(v2, expo[v2]);
      const Monomial m = Monomial::of_factors(std::move(factors));
      for (const Monomial& lm : lms)
        if (lm.divides(m)) return;
      ++count;
      return;
    }
    for (std::uint32_t e = 0; e < bounds[var] && degree + e <= s; ++e) {
      expo[var] = e;
      self(self, var + 1, degree + e);
    }
    expo[var] = 0;
  };
  rec(rec, 0, 0);
  return count;
}

std::uint64_t count_difference_sets_hilbert(const GroupSpec& spec, const DSParams& params,
                                            unsigned var_cap, const BuchbergerLimits& limits) {
  std::vector<MultiPoly> gens = build_generators(spec, params, var_cap);
  const GroebnerBasis gb = buchberger(std::move(gens), MonomialOrder::Grevlex, limits);
  const auto dim = quotient_dimension(gb);
  if (!dim) throw std::logic_error("difference-set ideal is not zero dimensional");
  return *dim;
}

std::uint64_t count_bent(unsigned t, const BuchbergerLimits& limits) {
  if (t % 2 != 0) throw std::invalid_argument("bent count requires even t");
  if (t > 4) throw std::invalid_argument("bent count via Groebner is capped at t = 4");
  const GroupSpec spec(std::vector<std::uint32_t>(t, 2));
  const DSParams params = bent_params(t, +1);
  return 2 * count_difference_sets_hilbert(spec, params, 16, limits);
}

}  // namespace dsbent
