#include "dsbent/carlet.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "dsbent/charsum.hpp"

namespace dsbent {

namespace {

bool parity(std::uint32_t x) { return __builtin_parity(x); }

F2Vec coordinate_vector(unsigned m, unsigned i) {
  return F2Vec{1} << (m - i);  // e_i, 1-based
}

// Monomial masks for fast ANF evaluation.
std::vector<F2Vec> compile_anf(unsigned m, const AnfPoly& p, bool& has_constant) {
  std::vector<F2Vec> masks;
  has_constant = false;
  for (const auto& mon : p.monomials) {
    if (mon.empty()) {
      has_constant = !has_constant;
      continue;
    }
    F2Vec mask = 0;
    for (unsigned v : mon) {
      if (v == 0 || v > m) throw std::invalid_argument("ANF variable index out of range");
      mask |= coordinate_vector(m, v);
    }
    masks.push_back(mask);
  }
  return masks;
}

bool eval_masks(const std::vector<F2Vec>& masks, bool constant, F2Vec x) {
  bool acc = constant;
  for (F2Vec mask : masks) acc ^= (x & mask) == mask;
  return acc;
}

}  // namespace

SubspaceSpec::SubspaceSpec(unsigned m, const std::vector<F2Vec>& basis) : m_(m) {
  if (m == 0 || m > 31) throw std::invalid_argument("ambient dimension must be in [1, 31]");
  const F2Vec space_mask = (F2Vec{1} << m) - 1;
  for (F2Vec v : basis) {
    if (v & ~space_mask) throw std::invalid_argument("basis vector has bits beyond dimension");
    F2Vec x = v;
    for (F2Vec row : rows_) {
      const F2Vec high = F2Vec{1} << (31 - __builtin_clz(row));
      if (x & high) x ^= row;
    }
    if (x == 0) throw std::invalid_argument("basis vectors are linearly dependent");
    rows_.push_back(x);
    // keep rows in row-reduced echelon form: sort by pivot, clear pivots above
    std::sort(rows_.begin(), rows_.end(), std::greater<F2Vec>());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const F2Vec high = F2Vec{1} << (31 - __builtin_clz(rows_[i]));
      for (std::size_t j = 0; j < rows_.size(); ++j)
        if (j != i && (rows_[j] & high)) rows_[j] ^= rows_[i];
    }
    std::sort(rows_.begin(), rows_.end(), std::greater<F2Vec>());
  }
}

SubspaceSpec SubspaceSpec::full(unsigned m) {
  std::vector<F2Vec> basis;
  for (unsigned i = 1; i <= m; ++i) basis.push_back(coordinate_vector(m, i));
  return SubspaceSpec(m, basis);
}

SubspaceSpec SubspaceSpec::coordinate_span(unsigned m, unsigned a, unsigned b) {
  std::vector<F2Vec> basis;
  for (unsigned i = a; i <= b; ++i) basis.push_back(coordinate_vector(m, i));
  return SubspaceSpec(m, basis);
}

F2Vec SubspaceSpec::reduce(F2Vec x) const {
  for (F2Vec row : rows_) {
    const F2Vec high = F2Vec{1} << (31 - __builtin_clz(row));
    if (x & high) x ^= row;
  }
  return x;
}

std::vector<F2Vec> SubspaceSpec::elements() const {
  std::vector<F2Vec> out{0};
  out.reserve(std::size_t{1} << dim());
  for (F2Vec row : rows_) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ row);
  }
  return out;
}

std::vector<F2Vec> SubspaceSpec::coset_representatives() const {
  F2Vec pivots = 0;
  for (F2Vec row : rows_) pivots |= F2Vec{1} << (31 - __builtin_clz(row));
  std::vector<unsigned> free_bits;
  for (unsigned b = 0; b < m_; ++b)
    if (!(pivots & (F2Vec{1} << b))) free_bits.push_back(b);
  std::vector<F2Vec> reps;
  reps.reserve(std::size_t{1} << free_bits.size());
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << free_bits.size()); ++c) {
    F2Vec rep = 0;
    for (std::size_t i = 0; i < free_bits.size(); ++i)
      if (c & (std::uint64_t{1} << i)) rep |= F2Vec{1} << free_bits[i];
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

SubspaceSpec SubspaceSpec::orthogonal_complement() const {
  // Solve <row, y> = 0 for all rows; classic pivot/free-column split.
  std::vector<F2Vec> rows = rows_;
  std::vector<unsigned> pivot_cols;  // bit positions
  for (F2Vec row : rows) pivot_cols.push_back(31 - __builtin_clz(row));
  std::vector<F2Vec> basis;
  for (unsigned b = 0; b < m_; ++b) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), b) != pivot_cols.end()) continue;
    F2Vec y = F2Vec{1} << b;  // free coordinate set to 1
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (parity(rows[i] & y)) y ^= F2Vec{1} << pivot_cols[i];
    basis.push_back(y);
  }
  return SubspaceSpec(m_, basis);
}

CarletSpec::CarletSpec(unsigned m_, AnfPoly P_, SubspaceSpec L_)
    : m(m_), P(AnfPoly::canonical(std::move(P_.monomials))), L(std::move(L_)) {
  if (m < 2) throw std::invalid_argument("CarletSpec requires m >= 2");
  if (L.ambient_dim() != m) throw std::invalid_argument("subspace ambient dimension mismatch");
  for (const auto& mon : P.monomials)
    for (unsigned v : mon) {
      if (v < 2 || v > m) throw std::invalid_argument("P must use variables X_2..X_m only");
    }
}

F2Vec apply_pi(const CarletSpec& spec, F2Vec x) {
  if (x >> spec.m) throw std::invalid_argument("vector has bits beyond dimension");
  bool constant = false;
  // P sees only x_2..x_m; masks never touch bit m-1, so passing x is safe.
  std::vector<F2Vec> masks = compile_anf(spec.m, spec.P, constant);
  const bool p = eval_masks(masks, constant, x);
  return p ? x ^ coordinate_vector(spec.m, 1) : x;
}

TruthTable build_f(const CarletSpec& spec) {
  const unsigned m = spec.m;
  const std::uint64_t size_m = std::uint64_t{1} << m;
  bool constant = false;
  const std::vector<F2Vec> masks = compile_anf(m, spec.P, constant);
  const F2Vec e1 = coordinate_vector(m, 1);

  std::vector<F2Vec> pi(size_m);
  for (std::uint64_t y = 0; y < size_m; ++y)
    pi[y] = eval_masks(masks, constant, static_cast<F2Vec>(y)) ? static_cast<F2Vec>(y) ^ e1
                                                               : static_cast<F2Vec>(y);
  const SubspaceSpec l_perp = spec.L.orthogonal_complement();
  std::vector<bool> in_l_perp(size_m);
  for (std::uint64_t x = 0; x < size_m; ++x) in_l_perp[x] = l_perp.contains(static_cast<F2Vec>(x));

  BitVec table(std::size_t{1} << (2 * m));
  for (std::uint64_t x = 0; x < size_m; ++x) {
    const bool ind = in_l_perp[x];
    for (std::uint64_t y = 0; y < size_m; ++y) {
      const bool v = parity(static_cast<F2Vec>(x) & pi[y]) ^ ind;
      if (v) table.set((x << m) | y);
    }
  }
  return TruthTable(2 * m, std::move(table));
}

bool is_flat(const std::vector<F2Vec>& F) {
  if (F.empty()) throw std::invalid_argument("flat test on empty set");
  const F2Vec b = F[0];
  // F - b is a subspace iff |F - b| = 2^rank(F - b).
  std::vector<F2Vec> rows;
  std::unordered_set<F2Vec> seen;
  for (F2Vec f : F) {
    F2Vec x = f ^ b;
    if (!seen.insert(x).second) continue;
    for (F2Vec row : rows) {
      const F2Vec high = F2Vec{1} << (31 - __builtin_clz(row));
      if (x & high) x ^= row;
    }
    if (x) rows.push_back(x);
  }
  return seen.size() == (std::size_t{1} << rows.size());
}

namespace {

// Finds p, q, base in F with p ^ q ^ base outside F; only called when the
// affine closure fails, so a witness exists.
std::array<F2Vec, 3> flat_witness(const std::vector<F2Vec>& F) {
  std::unordered_set<F2Vec> members(F.begin(), F.end());
  const F2Vec base = F[0];
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = i + 1; j < F.size(); ++j)
      if (!members.count(F[i] ^ F[j] ^ base)) return {F[i], F[j], base};
  throw std::logic_error("flat witness requested for a flat set");
}

}  // namespace

FlatCheckReport check_c_condition(const CarletSpec& spec, unsigned dim_cap) {
  if (spec.m > dim_cap) throw std::invalid_argument("dimension exceeds the C-condition cap");
  const std::vector<F2Vec> l_elems = spec.L.elements();
  bool constant = false;
  const std::vector<F2Vec> masks = compile_anf(spec.m, spec.P, constant);
  const F2Vec e1 = coordinate_vector(spec.m, 1);

  FlatCheckReport report;
  std::vector<F2Vec> preimage(l_elems.size());
  for (F2Vec a : spec.L.coset_representatives()) {
    for (std::size_t i = 0; i < l_elems.size(); ++i) {
      const F2Vec w = a ^ l_elems[i];
      preimage[i] = eval_masks(masks, constant, w) ? w ^ e1 : w;
    }
    if (!is_flat(preimage)) {
      report.holds = false;
      report.witness_a = a;
      report.witness_vectors = flat_witness(preimage);
      return report;
    }
  }
  report.holds = true;
  return report;
}

CoordinateCase classify_coordinate_case(const CarletSpec& spec) {
  const unsigned m = spec.m;
  const auto& rows = spec.L.basis();
  // coordinate subspace: every basis row is a standard vector
  std::vector<unsigned> coords;  // 1-based indices i with e_i in the basis
  for (F2Vec row : rows) {
    if (row & (row - 1)) return CoordinateCase::Unclassified;
    coords.push_back(m - static_cast<unsigned>(__builtin_ctz(row)));
  }
  std::sort(coords.begin(), coords.end());
  const unsigned d = static_cast<unsigned>(coords.size());

  // prefix span(e_1..e_s), s >= 1
  if (d >= 1 && coords.front() == 1 && coords.back() == d) return CoordinateCase::HoldsPrefix;

  // suffix span(e_{s+1}..e_m) with s = m - d in [1, m]; d = 0 gives L = {0}
  const bool suffix = d == 0 || (coords.front() == m - d + 1 && coords.back() == m);
  if (!suffix) return CoordinateCase::Unclassified;
  const unsigned s = m - d;
  for (const auto& mon : spec.P.monomials) {
    unsigned above = 0;
    for (unsigned v : mon)
      if (v > s) ++above;
    if (above >= 2) return CoordinateCase::ViolatedSuffix;
  }
  return CoordinateCase::HoldsSuffix;
}

ProductFamily product_family(unsigned m, unsigned r, unsigned s) {
  if (m < 3 || r < 1 || r > s || s > m - 2)
    throw std::invalid_argument("family requires m >= 3 and 1 <= r <= s <= m-2");
  std::vector<unsigned> top_monomial;
  for (unsigned i = r + 1; i <= m; ++i) top_monomial.push_back(i);
  CarletSpec spec(m, AnfPoly{{top_monomial}}, SubspaceSpec::coordinate_span(m, s + 1, m));
  TruthTable f_pi_l = build_f(spec);

  // f_M(x,y) = sum x_i y_i + prod_{i=s+1}^m (x_i + 1)
  const std::uint64_t size_m = std::uint64_t{1} << m;
  const F2Vec low_mask = static_cast<F2Vec>((std::uint64_t{1} << (m - s)) - 1);  // x_{s+1}..x_m
  BitVec table(std::size_t{1} << (2 * m));
  for (std::uint64_t x = 0; x < size_m; ++x) {
    const bool ind = (x & low_mask) == 0;
    for (std::uint64_t y = 0; y < size_m; ++y)
      if (parity(static_cast<F2Vec>(x & y)) ^ ind) table.set((x << m) | y);
  }
  return ProductFamily(std::move(spec), std::move(f_pi_l), TruthTable(2 * m, std::move(table)));
}

std::int64_t signed_tail_sum(unsigned m, unsigned s) {
  if (m < 3 || s < 1 || s > m - 2) throw std::invalid_argument("signed tail sum requires m >= 3, 1 <= s <= m-2");
  const unsigned u = m - s;
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << u); ++x) {
    const bool expo = (__builtin_popcountll(x) & 1) ^ (x == 0 ? 1 : 0);
    sum += expo ? -1 : 1;
  }
  return sum;
}

std::int64_t delta_family_value(unsigned m, unsigned r, unsigned s) {
  ProductFamily fam = product_family(m, r, s);
  const unsigned t = 2 * m;
  GroupSpec group(std::vector<std::uint32_t>(t, 2));
  UnityPoint xi{std::vector<std::uint32_t>(t, 0)};
  for (unsigned i = r + 1; i <= s; ++i) xi.exponents[i - 1] = 1;  // xi_i = -1
  xi.exponents[m] = 1;                                            // eta_1 = -1
  const CycNum d = delta_poly(group, support(fam.f_mclass), support(fam.f_pi_l), xi);
  const Rational q = d.to_rational();
  if (q.get_den() != 1) throw std::logic_error("delta value is not an integer");
  return static_cast<std::int64_t>(q.get_num().get_si());
}

}  // namespace dsbent
