#include "dsbent/boolfn.hpp"

#include <algorithm>
#include <stdexcept>

#include "dsbent/charsum.hpp"

namespace dsbent {

TruthTable::TruthTable(unsigned t, BitVec bits) : t_(t), bits_(std::move(bits)) {
  if (bits_.size() != (std::uint64_t{1} << t)) throw std::invalid_argument("table length is not 2^t");
}

TruthTable TruthTable::from_hex(unsigned t, std::string_view hex) {
  return TruthTable(t, BitVec::from_hex(std::size_t{1} << t, hex));
}

TruthTable TruthTable::of_support(unsigned t, const SubsetMask& support) {
  if (support.universe_size() != (std::uint64_t{1} << t))
    throw std::invalid_argument("support size is not 2^t");
  return TruthTable(t, support.bits());
}

TruthTable TruthTable::with_value(std::uint64_t x, bool v) const {
  BitVec b = bits_;
  b.set(x, v);
  return TruthTable(t_, std::move(b));
}

AnfPoly AnfPoly::canonical(std::vector<std::vector<unsigned>> monomials) {
  for (auto& m : monomials) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());  // X_i^2 = X_i
  }
  std::sort(monomials.begin(), monomials.end());
  // duplicate monomials cancel over F_2
  std::vector<std::vector<unsigned>> out;
  for (std::size_t i = 0; i < monomials.size();) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(monomials[i]);
    i = j;
  }
  return AnfPoly{std::move(out)};
}

unsigned AnfPoly::max_var() const {
  unsigned m = 0;
  for (const auto& mon : monomials)
    for (unsigned v : mon) m = std::max(m, v);
  return m;
}

namespace {

// Binary Moebius/zeta transform over the subset lattice; self inverse mod 2.
void mobius_inplace(BitVec& a, unsigned t) {
  const std::uint64_t n = std::uint64_t{1} << t;
  for (unsigned b = 0; b < t; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    for (std::uint64_t x = 0; x < n; ++x)
      if (x & bit)
        if (a.get(x ^ bit)) a.flip(x);
  }
}

std::uint64_t monomial_mask(unsigned t, const std::vector<unsigned>& mon) {
  std::uint64_t m = 0;
  for (unsigned v : mon) {
    if (v == 0 || v > t) throw std::invalid_argument("monomial variable index out of range");
    m |= std::uint64_t{1} << (t - v);  // x_1 is the most significant bit
  }
  return m;
}

}  // namespace

TruthTable anf_to_tt(unsigned t, const AnfPoly& p) {
  AnfPoly canon = AnfPoly::canonical(p.monomials);
  BitVec a(std::size_t{1} << t);
  for (const auto& mon : canon.monomials) a.flip(monomial_mask(t, mon));
  mobius_inplace(a, t);
  return TruthTable(t, std::move(a));
}

AnfPoly tt_to_anf(const TruthTable& f) {
  const unsigned t = f.arity();
  BitVec a = f.bits();
  mobius_inplace(a, t);
  std::vector<std::vector<unsigned>> monomials;
  a.for_each_set([&](std::size_t mask) {
    std::vector<unsigned> mon;
    for (unsigned v = 1; v <= t; ++v)
      if (mask & (std::uint64_t{1} << (t - v))) mon.push_back(v);
    monomials.push_back(std::move(mon));
  });
  return AnfPoly::canonical(std::move(monomials));
}

SubsetMask support(const TruthTable& f) { return SubsetMask::of_bits(f.bits()); }

WalshSpectrum walsh(const TruthTable& f) {
  const std::uint64_t n = f.size();
  WalshSpectrum a(n);
  for (std::uint64_t x = 0; x < n; ++x) a[x] = f.value(x) ? -1 : 1;
  walsh_hadamard_inplace(a);
  return a;
}

bool is_bent(const TruthTable& f) {
  const unsigned t = f.arity();
  if (t % 2 != 0) throw std::invalid_argument("bentness requires an even number of variables");
  const std::int64_t target = std::int64_t{1} << (t / 2);
  for (std::int64_t w : walsh(f))
    if (w != target && w != -target) return false;
  return true;
}

DSParams bent_params(unsigned t, int sign) {
  if (t % 2 != 0 || t < 2) throw std::invalid_argument("bent parameters require even t >= 2");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const std::uint64_t v = std::uint64_t{1} << t;
  const std::uint64_t half = std::uint64_t{1} << (t - 1);
  const std::uint64_t quarter = std::uint64_t{1} << (t - 2);
  const std::uint64_t off = std::uint64_t{1} << ((t - 2) / 2);
  if (sign > 0) return DSParams(v, half + off, quarter + off);
  return DSParams(v, half - off, quarter - off);
}

std::uint64_t hamming_distance(const TruthTable& f, const TruthTable& g) {
  if (f.arity() != g.arity()) throw std::invalid_argument("arity mismatch");
  return (f.bits() ^ g.bits()).popcount();
}

}  // namespace dsbent
