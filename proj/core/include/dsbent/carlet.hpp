#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dsbent/boolfn.hpp"

namespace dsbent {

/// F_2^m vectors are m-bit masks; coordinate i (1-based) sits at bit m-i, so
/// a vector reads as the binary number x_1 x_2 ... x_m.
using F2Vec = std::uint32_t;

/// Subspace of F_2^m held in canonical row-reduced form (pivots at the most
/// significant differing bits, each pivot cleared from the other rows).
class SubspaceSpec {
 public:
  SubspaceSpec(unsigned m, const std::vector<F2Vec>& basis);
  static SubspaceSpec zero(unsigned m) { return SubspaceSpec(m, {}); }
  static SubspaceSpec full(unsigned m);
  /// span(e_a, e_{a+1}, ..., e_b), 1-based inclusive coordinate range.
  static SubspaceSpec coordinate_span(unsigned m, unsigned a, unsigned b);

  unsigned ambient_dim() const { return m_; }
  unsigned dim() const { return static_cast<unsigned>(rows_.size()); }
  const std::vector<F2Vec>& basis() const { return rows_; }

  bool contains(F2Vec x) const { return reduce(x) == 0; }
  /// Canonical coset representative of x + L (zeroes at pivot positions).
  F2Vec reduce(F2Vec x) const;

  /// All 2^dim elements, in the order induced by basis combinations.
  std::vector<F2Vec> elements() const;
  /// Canonical representatives of all 2^{m-dim} cosets.
  std::vector<F2Vec> coset_representatives() const;

  SubspaceSpec orthogonal_complement() const;

  bool operator==(const SubspaceSpec& o) const { return m_ == o.m_ && rows_ == o.rows_; }

 private:
  unsigned m_ = 0;
  std::vector<F2Vec> rows_;
};

/// (m, P, L): pi(x) = (x_1 + P(x_2..x_m), x_2, ..., x_m), an involution, and
/// the subspace L entering f_(pi,L)(x,y) = x . pi(y) + 1_{L^perp}(x).
struct CarletSpec {
  unsigned m = 0;
  AnfPoly P;       // uses variables X_2..X_m only
  SubspaceSpec L;

  CarletSpec(unsigned m, AnfPoly P, SubspaceSpec L);
};

F2Vec apply_pi(const CarletSpec& spec, F2Vec x);
inline F2Vec apply_pi_inv(const CarletSpec& spec, F2Vec x) { return apply_pi(spec, x); }

/// Truth table of f_(pi,L) on 2m variables; index = (x << m) | y.
TruthTable build_f(const CarletSpec& spec);

/// True iff F - b is closed under addition for one (equivalently every) b in F.
bool is_flat(const std::vector<F2Vec>& F);

struct FlatCheckReport {
  bool holds = false;
  /// Filled when holds is false; p, q, base lie in the failing preimage set
  /// while p ^ q ^ base does not, and a is the coset representative.
  F2Vec witness_a = 0;
  std::array<F2Vec, 3> witness_vectors{0, 0, 0};
};

/// C-condition: pi^{-1}(a+L) is a flat for every a, checked once per coset.
FlatCheckReport check_c_condition(const CarletSpec& spec, unsigned dim_cap = 16);

enum class CoordinateCase { HoldsPrefix, HoldsSuffix, ViolatedSuffix, Unclassified };

/// Classifier for coordinate subspaces. L = span(e_1..e_s) always satisfies
/// the C-condition (HoldsPrefix). For L = span(e_{s+1}..e_m) the condition
/// holds iff every monomial of P has at most one variable index above s
/// (HoldsSuffix / ViolatedSuffix). Anything else is Unclassified.
CoordinateCase classify_coordinate_case(const CarletSpec& spec);

struct ProductFamily {
  CarletSpec spec;        // P = X_{r+1}...X_m, L = span(e_{s+1}..e_m)
  TruthTable f_pi_l;      // not bent
  TruthTable f_mclass;    // x.y + prod_{i>s}(x_i+1), Maiorana-McFarland, bent
  ProductFamily(CarletSpec s, TruthTable a, TruthTable b)
      : spec(std::move(s)), f_pi_l(std::move(a)), f_mclass(std::move(b)) {}
};

/// The non-bent family where pi adds the product of coordinates r+1..m:
/// m >= 3, 1 <= r <= s <= m-2.
ProductFamily product_family(unsigned m, unsigned r, unsigned s);

/// sum over F_2^{m-s} of (-1)^{sum x_i + prod (x_i+1)}; equals -2 for every
/// valid pair m >= 3, 1 <= s <= m-2.
std::int64_t signed_tail_sum(unsigned m, unsigned s);

/// Delta(D, D_(pi,L)) at the distinguished point (xi_{r+1..s} = -1, eta_1 = -1,
/// all other coordinates +1); equals 2^{s+1} for the family above.
std::int64_t delta_family_value(unsigned m, unsigned r, unsigned s);

}  // namespace dsbent
