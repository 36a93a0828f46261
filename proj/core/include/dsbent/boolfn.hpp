#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsbent/bitvec.hpp"
#include "dsbent/group.hpp"

namespace dsbent {

/// Boolean function on F_2^t as a 2^t-bit table. Index convention: x_1 is the
/// most significant bit, so bit index of (x_1..x_t) is the binary integer
/// x_1 x_2 ... x_t, matching the group element indexing of (Z/2)^t.
class TruthTable {
 public:
  TruthTable(unsigned t, BitVec bits);
  static TruthTable zeros(unsigned t) { return TruthTable(t, BitVec(std::size_t{1} << t)); }
  static TruthTable from_hex(unsigned t, std::string_view hex);
  /// Table whose support is the given subset of (Z/2)^t.
  static TruthTable of_support(unsigned t, const SubsetMask& support);

  unsigned arity() const { return t_; }
  std::uint64_t size() const { return bits_.size(); }
  bool value(std::uint64_t x) const { return bits_.get(x); }
  const BitVec& bits() const { return bits_; }
  std::string to_hex() const { return bits_.to_hex(); }

  TruthTable with_value(std::uint64_t x, bool v) const;

  bool operator==(const TruthTable&) const = default;

 private:
  unsigned t_ = 0;
  BitVec bits_;
};

/// Algebraic normal form: a set of multilinear monomials over X_1..X_t.
/// Each monomial is a strictly increasing list of 1-based variable indices;
/// the empty monomial is the constant 1.
struct AnfPoly {
  std::vector<std::vector<unsigned>> monomials;

  /// Reduces exponents mod 2 inside monomials and cancels duplicate
  /// monomials in pairs; the result is sorted canonically.
  static AnfPoly canonical(std::vector<std::vector<unsigned>> monomials);

  unsigned max_var() const;
  bool operator==(const AnfPoly&) const = default;
};

TruthTable anf_to_tt(unsigned t, const AnfPoly& p);
AnfPoly tt_to_anf(const TruthTable& f);

SubsetMask support(const TruthTable& f);

using WalshSpectrum = std::vector<std::int64_t>;

/// W_f(u) = sum_x (-1)^{f(x) + u.x}, by the fast transform.
WalshSpectrum walsh(const TruthTable& f);

/// True iff |W_f(u)| = 2^{t/2} for every u. Requires even arity (t = 2 is
/// accepted; front ends flag it as below the usual range).
bool is_bent(const TruthTable& f);

/// Difference-set parameters (2^t, 2^{t-1} +- 2^{(t-2)/2}, 2^{t-2} +- 2^{(t-2)/2}).
DSParams bent_params(unsigned t, int sign);

std::uint64_t hamming_distance(const TruthTable& f, const TruthTable& g);

}  // namespace dsbent
