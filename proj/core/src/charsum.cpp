#include "dsbent/charsum.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dsbent {

namespace {

constexpr unsigned kLevelCap = 1u << 16;

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

void check_unity_point(const GroupSpec& spec, const UnityPoint& xi) {
  if (xi.exponents.size() != spec.rank()) throw std::invalid_argument("unity point rank mismatch");
  for (std::size_t l = 0; l < spec.rank(); ++l)
    if (xi.exponents[l] >= spec.modulus(l))
      throw std::invalid_argument("unity point exponent out of range");
}

void check_mask(const GroupSpec& spec, const SubsetMask& m) {
  if (m.universe_size() != spec.order()) throw std::invalid_argument("mask size mismatch");
}

}  // namespace

UnityPoint unity_point_at(const GroupSpec& spec, std::uint64_t index) {
  GroupElement e = spec.element_at(index);
  return UnityPoint{std::move(e.coords)};
}

std::uint64_t unity_index_of(const GroupSpec& spec, const UnityPoint& xi) {
  check_unity_point(spec, xi);
  return spec.index_of(GroupElement{xi.exponents});
}

unsigned cyclotomic_level(const GroupSpec& spec) {
  std::uint64_t n = 1;
  for (std::uint32_t m : spec.moduli()) {
    n = lcm_u64(n, m);
    if (n > kLevelCap) throw std::invalid_argument("cyclotomic level exceeds cap");
  }
  return static_cast<unsigned>(n);
}

FieldPtr charsum_field(const GroupSpec& spec) { return CyclotomicField::get(cyclotomic_level(spec)); }

CycNum rho_eval(const GroupSpec& spec, const SubsetMask& T, const UnityPoint& xi) {
  check_mask(spec, T);
  check_unity_point(spec, xi);
  FieldPtr field = charsum_field(spec);
  const std::uint64_t N = field->level();
  // zeta_N exponent contributed by one unit step of coordinate l
  std::vector<std::uint64_t> step(spec.rank());
  for (std::size_t l = 0; l < spec.rank(); ++l)
    step[l] = (N / spec.modulus(l)) * xi.exponents[l] % N;

  CycNum acc = CycNum::zero(field);
  T.bits().for_each_set([&](std::size_t idx) {
    const GroupElement g = spec.element_at(idx);
    std::uint64_t e = 0;
    for (std::size_t l = 0; l < spec.rank(); ++l) e = (e + step[l] * g.coords[l]) % N;
    acc += CycNum::root_power(field, static_cast<long long>(e));
  });
  return acc;
}

CycNum rho_group(const GroupSpec& spec, const UnityPoint& xi) {
  return rho_eval(spec, SubsetMask::full(spec.order()), xi);
}

bool is_difference_set_charsum(const GroupSpec& spec, const SubsetMask& D, const DSParams& params) {
  if (params.v != spec.order()) throw std::invalid_argument("params.v does not match group order");
  check_mask(spec, D);
  if (D.count() != params.k) return false;
  FieldPtr field = charsum_field(spec);
  const CycNum lam = CycNum::of(field, Rational(static_cast<long>(params.lambda)));
  const CycNum k_minus_lam =
      CycNum::of(field, Rational(static_cast<long>(params.k - params.lambda)));
  for (std::uint64_t u = 0; u < spec.order(); ++u) {
    const UnityPoint xi = unity_point_at(spec, u);
    const CycNum z = rho_eval(spec, D, xi);
    const CycNum lhs = z * z.conj() - lam * rho_group(spec, xi) - k_minus_lam;
    if (!lhs.is_zero()) return false;
  }
  return true;
}

SpectrumTable rho_spectrum(const GroupSpec& spec, const SubsetMask& D) {
  check_mask(spec, D);
  SpectrumTable table;
  table.values.reserve(spec.order());
  for (std::uint64_t u = 0; u < spec.order(); ++u)
    table.values.push_back(rho_eval(spec, D, unity_point_at(spec, u)));
  return table;
}

void walsh_hadamard_inplace(std::span<std::int64_t> a) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("length must be a power of two");
  for (std::size_t len = 1; len < n; len <<= 1) {
    for (std::size_t block = 0; block < n; block += 2 * len) {
      for (std::size_t i = block; i < block + len; ++i) {
        const std::int64_t x = a[i];
        const std::int64_t y = a[i + len];
        a[i] = x + y;
        a[i + len] = x - y;
      }
    }
  }
}

std::vector<std::int64_t> spectrum_2group(unsigned t, const SubsetMask& D) {
  const std::uint64_t n = std::uint64_t{1} << t;
  if (D.universe_size() != n) throw std::invalid_argument("mask size is not 2^t");
  std::vector<std::int64_t> a(n, 0);
  D.bits().for_each_set([&](std::size_t i) { a[i] = 1; });
  walsh_hadamard_inplace(a);
  return a;
}

CycNum delta_poly(const GroupSpec& spec, const SubsetMask& D1, const SubsetMask& D2,
                  const UnityPoint& xi) {
  check_mask(spec, D1);
  check_mask(spec, D2);
  return rho_eval(spec, D1.set_minus(D2), xi) - rho_eval(spec, D2.set_minus(D1), xi);
}

namespace {

std::optional<std::int64_t> exact_isqrt(std::int64_t n) {
  if (n < 0) return std::nullopt;
  std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return std::nullopt;
  return r;
}

}  // namespace

ExchangeReport exchange_check(const GroupSpec& spec, const SubsetMask& D1, const DSParams& params1,
                              const SubsetMask& D2, const DSParams& params2) {
  if (!spec.is_elementary_2group())
    throw std::invalid_argument("exchange criterion requires an elementary 2-group");
  if (params1.v != spec.order() || params2.v != spec.order())
    throw std::invalid_argument("params.v does not match group order");
  check_mask(spec, D1);
  check_mask(spec, D2);
  const unsigned t = static_cast<unsigned>(spec.rank());

  if (!is_difference_set_bruteforce(spec, D1, params1))
    throw std::invalid_argument("D1 is not a difference set with the stated parameters");

  const std::int64_t n1 = static_cast<std::int64_t>(params1.k - params1.lambda);
  const std::int64_t n2 = static_cast<std::int64_t>(params2.k - params2.lambda);
  const auto s1 = exact_isqrt(n1);
  if (!s1 && spec.order() > 1)
    throw std::invalid_argument("k1 - lambda1 is not a perfect square");

  const std::vector<std::int64_t> sp1 = spectrum_2group(t, D1);
  const std::vector<std::int64_t> sp2 = spectrum_2group(t, D2);

  ExchangeReport report;
  for (std::uint64_t u = 0; u < spec.order(); ++u) {
    ++report.points_checked;
    const std::int64_t delta = sp1[u] - sp2[u];
    bool ok;
    if (u == 0) {
      ok = delta == static_cast<std::int64_t>(params1.k) - static_cast<std::int64_t>(params2.k);
    } else if (sp1[u] == *s1) {
      // delta in { s1 - sqrt(n2), s1 + sqrt(n2) }, decided by squaring
      ok = (delta - *s1) * (delta - *s1) == n2;
    } else if (sp1[u] == -*s1) {
      ok = (delta + *s1) * (delta + *s1) == n2;
    } else {
      throw std::logic_error("verified difference set has an off-spectrum value");
    }
    if (!ok) {
      report.admissible = false;
      report.violation = ExchangeViolation{u, delta, sp1[u]};
      return report;
    }
  }
  report.admissible = true;
  return report;
}

}  // namespace dsbent
