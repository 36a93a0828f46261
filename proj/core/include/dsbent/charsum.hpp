#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dsbent/cyclotomic.hpp"
#include "dsbent/group.hpp"

namespace dsbent {

/// A tuple of roots of unity (xi_1, ..., xi_t), xi_l = zeta_{n_l}^{e_l}.
/// The all-zero exponent vector is the trivial point (1, ..., 1).
struct UnityPoint {
  std::vector<std::uint32_t> exponents;

  bool is_trivial() const {
    for (auto e : exponents)
      if (e) return false;
    return true;
  }
  bool operator==(const UnityPoint&) const = default;
};

/// The point set U carries the same mixed-radix indexing as the group.
UnityPoint unity_point_at(const GroupSpec& spec, std::uint64_t index);
std::uint64_t unity_index_of(const GroupSpec& spec, const UnityPoint& xi);

/// Level N = lcm(n_l) of the cyclotomic field all values live in.
unsigned cyclotomic_level(const GroupSpec& spec);
FieldPtr charsum_field(const GroupSpec& spec);

/// rho_G(T)(xi) = sum over (i_1..i_t) in T of xi_1^{i_1} ... xi_t^{i_t},
/// evaluated exactly in Q(zeta_N).
CycNum rho_eval(const GroupSpec& spec, const SubsetMask& T, const UnityPoint& xi);

/// rho_G(G)(xi): v at the trivial point, 0 elsewhere (computed exactly).
CycNum rho_group(const GroupSpec& spec, const UnityPoint& xi);

/// Criterion: D is a (v,k,lambda)-difference set iff |D| = k and
/// |rho(D)(xi)|^2 - lambda*rho(G)(xi) - (k-lambda) = 0 for every xi in U,
/// with |z|^2 = z * conj(z) taken in Q(zeta_N).
bool is_difference_set_charsum(const GroupSpec& spec, const SubsetMask& D, const DSParams& params);

/// Complete table of rho_G(D) over U, indexed like the group elements.
struct SpectrumTable {
  std::vector<CycNum> values;
};
SpectrumTable rho_spectrum(const GroupSpec& spec, const SubsetMask& D);

/// In-place butterfly: a[u] <- sum_x (-1)^{u.x} a[x]; O(t 2^t).
/// Applying it twice multiplies by 2^t.
void walsh_hadamard_inplace(std::span<std::int64_t> a);

/// rho_G(D) over all of U for an elementary 2-group, as integers:
/// value at index u equals sum_{x in D} (-1)^{u.x}.
std::vector<std::int64_t> spectrum_2group(unsigned t, const SubsetMask& D);

/// Delta(D1,D2)(xi) = rho(D1 \ D2)(xi) - rho(D2 \ D1)(xi).
CycNum delta_poly(const GroupSpec& spec, const SubsetMask& D1, const SubsetMask& D2,
                  const UnityPoint& xi);

struct ExchangeViolation {
  std::uint64_t point_index = 0;   // index of xi in U
  std::int64_t delta = 0;          // Delta(D1,D2)(xi)
  std::int64_t rho_d1 = 0;         // rho(D1)(xi), fixing the admissible set
};

struct ExchangeReport {
  bool admissible = false;
  std::uint64_t points_checked = 0;
  std::optional<ExchangeViolation> violation;
};

/// Exchange criterion for elementary 2-groups: given that D1 is a
/// (v,k1,lambda1)-difference set (verified here; throws otherwise), decides
/// whether Delta(D1,D2)(xi) lies in the admissible set at every xi in U,
/// which holds iff D2 is a (v,k2,lambda2)-difference set. Membership against
/// sqrt(k-lambda) is decided in exact integers by squaring.
ExchangeReport exchange_check(const GroupSpec& spec, const SubsetMask& D1, const DSParams& params1,
                              const SubsetMask& D2, const DSParams& params2);

}  // namespace dsbent
