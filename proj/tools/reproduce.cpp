#include "reproduce.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "dsbent/carlet.hpp"
#include "dsbent/charsum.hpp"

namespace dsbent::repro {

namespace {

void add(std::vector<Check>& out, std::string name, const std::string& expected,
         const std::string& computed) {
  out.push_back(Check{std::move(name), expected, computed, expected == computed});
}

void add_int(std::vector<Check>& out, std::string name, std::int64_t expected,
             std::int64_t computed) {
  add(out, std::move(name), std::to_string(expected), std::to_string(computed));
}

void add_bool(std::vector<Check>& out, std::string name, bool expected, bool computed) {
  add(out, std::move(name), expected ? "true" : "false", computed ? "true" : "false");
}

// (rho_D(xi))^2 - lambda * rho_G(xi) - (k - lambda) with the consistent bent
// parameter triple chosen by support size.
std::int64_t criterion_value(unsigned t, const SubsetMask& d, const UnityPoint& xi) {
  GroupSpec g(std::vector<std::uint32_t>(t, 2));
  const DSParams params = bent_params(t, d.count() >= (std::uint64_t{1} << (t - 1)) ? +1 : -1);
  const CycNum rho = rho_eval(g, d, xi);
  const CycNum rho_full = rho_group(g, xi);
  const CycNum value =
      rho * rho - rho_full.scaled(Rational(static_cast<long>(params.lambda))) -
      CycNum::of(charsum_field(g), Rational(static_cast<long>(params.k - params.lambda)));
  const Rational q = value.to_rational();
  if (q.get_den() != 1) throw std::logic_error("criterion value is not an integer");
  return static_cast<std::int64_t>(q.get_num().get_si());
}

std::string multiplicities_str(const WalshSpectrum& w) {
  std::map<std::int64_t, std::uint64_t> mult;
  for (std::int64_t x : w) ++mult[x];
  std::ostringstream os;
  bool first = true;
  for (const auto& [value, count] : mult) {
    if (!first) os << ' ';
    first = false;
    os << value << ':' << count;
  }
  return os.str();
}

std::vector<Check> case_ex61() {
  std::vector<Check> out;
  const SubspaceSpec L = SubspaceSpec::coordinate_span(4, 3, 4);
  for (unsigned bits = 0; bits < 16; ++bits) {
    const bool alpha = bits & 1, beta = bits & 2, gamma = bits & 4, delta = bits & 8;
    std::vector<std::vector<unsigned>> monos;
    if (alpha) monos.push_back({2, 3});
    if (beta) monos.push_back({2, 4});
    if (gamma) monos.push_back({3, 4});
    if (delta) monos.push_back({2, 3, 4});
    const CarletSpec spec(4, AnfPoly::canonical(std::move(monos)), L);
    const TruthTable f = build_f(spec);
    const auto d = support(f);
    std::ostringstream tag;
    tag << "(" << alpha << "," << beta << "," << gamma << "," << delta << ")";

    add_bool(out, "bent" + tag.str(), !gamma && !delta, is_bent(f));

    if (gamma) {
      // xi = (1,1,1,1,-1,1,1,1): y_1 = -1
      UnityPoint xi{std::vector<std::uint32_t>(8, 0)};
      xi.exponents[4] = 1;
      add_int(out, "value" + tag.str() + "@y1", -64, criterion_value(8, d, xi));
    } else if (delta) {
      // xi = (1,-1,1,1,-1,1,1,1): x_2 = -1, y_1 = -1
      UnityPoint xi{std::vector<std::uint32_t>(8, 0)};
      xi.exponents[1] = 1;
      xi.exponents[4] = 1;
      const std::int64_t expected = (alpha && beta) ? 192 : -64;
      add_int(out, "value" + tag.str() + "@x2y1", expected, criterion_value(8, d, xi));
    }

    if (!alpha && !beta && !gamma && delta)
      add(out, "walsh-multiplicities(0,0,0,1)", "-32:8 -16:104 0:48 16:88 32:8",
          multiplicities_str(walsh(f)));
  }
  return out;
}

std::vector<Check> case_ex62() {
  std::vector<Check> out;
  const CarletSpec spec(6, AnfPoly{{{3, 4}, {5, 6}}}, SubspaceSpec::coordinate_span(6, 3, 6));
  const TruthTable f = build_f(spec);
  add_bool(out, "bent", false, is_bent(f));
  UnityPoint xi{std::vector<std::uint32_t>(12, 0)};
  xi.exponents[6] = 1;  // y_1 = -1
  add_int(out, "value@y1", -768, criterion_value(12, support(f), xi));
  return out;
}

std::vector<Check> case_thm52() {
  std::vector<Check> out;
  for (unsigned m = 3; m <= 6; ++m)
    for (unsigned r = 1; r + 2 <= m; ++r)
      for (unsigned s = r; s + 2 <= m; ++s) {
        const ProductFamily fam = product_family(m, r, s);
        std::ostringstream tag;
        tag << "(" << m << "," << r << "," << s << ")";
        add_bool(out, "non-bent" + tag.str(), true, !is_bent(fam.f_pi_l));
        add_bool(out, "mclass-bent" + tag.str(), true, is_bent(fam.f_mclass));
        const auto d = support(fam.f_mclass);
        const auto d_pi = support(fam.f_pi_l);
        const std::int64_t one_side = std::int64_t{1} << (m + r - 2);
        add_int(out, "d-minus-dpi" + tag.str(), one_side,
                static_cast<std::int64_t>(d.set_minus(d_pi).count()));
        add_int(out, "dpi-minus-d" + tag.str(), one_side,
                static_cast<std::int64_t>(d_pi.set_minus(d).count()));
        add_int(out, "distance" + tag.str(), 2 * one_side,
                static_cast<std::int64_t>(hamming_distance(fam.f_mclass, fam.f_pi_l)));
        add_int(out, "delta" + tag.str(), std::int64_t{1} << (s + 1), delta_family_value(m, r, s));
      }
  return out;
}

std::vector<Check> case_lemma51() {
  std::vector<Check> out;
  for (unsigned m = 3; m <= 10; ++m)
    for (unsigned s = 1; s + 2 <= m; ++s) {
      std::ostringstream tag;
      tag << "sum(" << m << "," << s << ")";
      add_int(out, tag.str(), -2, signed_tail_sum(m, s));
    }
  return out;
}

}  // namespace

std::vector<Check> run_case(const std::string& name) {
  if (name == "ex61") return case_ex61();
  if (name == "ex62") return case_ex62();
  if (name == "thm52") return case_thm52();
  if (name == "lemma51") return case_lemma51();
  throw std::invalid_argument("unknown case: " + name +
                              " (expected ex61, ex62, thm52 or lemma51)");
}

bool all_match(const std::vector<Check>& checks) {
  for (const Check& c : checks)
    if (!c.match) return false;
  return true;
}

}  // namespace dsbent::repro
