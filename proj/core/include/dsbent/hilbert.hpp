#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dsbent/groebner.hpp"
#include "dsbent/group.hpp"

namespace dsbent {

/// Generators of the ideal J whose variety is the set of characteristic
/// vectors of (v,k,lambda)-difference sets: Psi(xi, A) for every xi in U,
/// followed by the field equations A_g^2 - A_g. Coefficients live in
/// Q(zeta_N), N = lcm of the moduli; for elementary 2-groups they are
/// rational integers.
std::vector<MultiPoly> build_generators(const GroupSpec& spec, const DSParams& params,
                                        unsigned var_cap = 16);

/// Number of standard monomials, or nullopt when some variable has no pure
/// power among the leading monomials (infinite quotient dimension).
std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& gb);

/// Number of standard monomials of total degree <= s. Requires a
/// degree-compatible order.
std::uint64_t affine_hilbert_function(const GroebnerBasis& gb, unsigned s);

/// Smallest s at which the affine Hilbert function reaches the quotient
/// dimension; pre: finite quotient.
unsigned affine_hilbert_stabilization(const GroebnerBasis& gb);

/// Homogenizes every generator with a fresh variable B of index nvars; the
/// result is a Groebner basis of the homogenized ideal.
GroebnerBasis homogenize(const GroebnerBasis& gb);

/// Graded Hilbert function: number of monomials of total degree exactly s
/// (in all nvars variables) outside the leading term ideal.
std::uint64_t graded_hilbert_function(const GroebnerBasis& homogeneous_gb, unsigned s);

/// Count of (v,k,lambda)-difference sets as the quotient dimension of J.
std::uint64_t count_difference_sets_hilbert(const GroupSpec& spec, const DSParams& params,
                                            unsigned var_cap = 16,
                                            const BuchbergerLimits& limits = BuchbergerLimits{});

/// Count of bent functions of t variables: twice the count of difference
/// sets with parameters (2^t, 2^{t-1}+2^{(t-2)/2}, 2^{t-2}+2^{(t-2)/2}).
std::uint64_t count_bent(unsigned t, const BuchbergerLimits& limits = BuchbergerLimits{});

}  // namespace dsbent
