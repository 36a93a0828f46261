#include <doctest.h>

#include "dsbent/carlet.hpp"
#include "dsbent/charsum.hpp"
#include "test_util.hpp"

using namespace dsbent;

namespace {

SubspaceSpec random_subspace(testutil::Rng& rng, unsigned m) {
  std::vector<F2Vec> rows;
  const unsigned want = static_cast<unsigned>(rng.below(m + 1));
  SubspaceSpec cur = SubspaceSpec::zero(m);
  for (unsigned tries = 0; tries < 4 * m && cur.dim() < want; ++tries) {
    const F2Vec v = static_cast<F2Vec>(rng.below(std::uint64_t{1} << m));
    if (v == 0 || cur.contains(v)) continue;
    rows.push_back(v);
    cur = SubspaceSpec(m, rows);
  }
  return cur;
}

AnfPoly random_p(testutil::Rng& rng, unsigned m, unsigned max_monomials) {
  std::vector<std::vector<unsigned>> monos;
  const unsigned count = static_cast<unsigned>(rng.below(max_monomials + 1));
  for (unsigned i = 0; i < count; ++i) {
    std::vector<unsigned> mon;
    for (unsigned v = 2; v <= m; ++v)
      if (rng.coin()) mon.push_back(v);
    monos.push_back(std::move(mon));
  }
  return AnfPoly::canonical(std::move(monos));
}

}  // namespace

TEST_CASE("pi applies P to the first coordinate") {
  CarletSpec id(3, AnfPoly{}, SubspaceSpec::zero(3));
  for (F2Vec x = 0; x < 8; ++x) CHECK(apply_pi(id, x) == x);

  CarletSpec spec(3, AnfPoly{{{2, 3}}}, SubspaceSpec::zero(3));
  // x = (0,1,1) -> (1,1,1)
  CHECK(apply_pi(spec, 0b011) == 0b111);
  CHECK(apply_pi(spec, 0b010) == 0b010);
}

TEST_CASE("pi rejects vectors outside the ambient space") {
  CarletSpec spec(3, AnfPoly{{{2, 3}}}, SubspaceSpec::zero(3));
  CHECK_THROWS_AS(apply_pi(spec, 0b1000), std::invalid_argument);
}

TEST_CASE("pi is an involution") {
  testutil::Rng rng(31);
  for (int rep = 0; rep < 50; ++rep) {
    const unsigned m = 2 + static_cast<unsigned>(rng.below(9));  // m <= 10
    CarletSpec spec(m, random_p(rng, m, 4), SubspaceSpec::zero(m));
    for (F2Vec x = 0; x < (F2Vec{1} << m); ++x) {
      CHECK(apply_pi_inv(spec, apply_pi(spec, x)) == x);
    }
  }
}

TEST_CASE("orthogonal complement") {
  CHECK(SubspaceSpec::zero(4).orthogonal_complement() == SubspaceSpec::full(4));
  // span(e_{s+1}..e_m) has complement span(e_1..e_s)
  for (unsigned m = 2; m <= 6; ++m)
    for (unsigned s = 1; s + 1 <= m; ++s)
      CHECK(SubspaceSpec::coordinate_span(m, s + 1, m).orthogonal_complement() ==
            SubspaceSpec::coordinate_span(m, 1, s));

  testutil::Rng rng(67);
  for (int rep = 0; rep < 60; ++rep) {
    const unsigned m = 1 + static_cast<unsigned>(rng.below(8));
    const SubspaceSpec l = random_subspace(rng, m);
    const SubspaceSpec perp = l.orthogonal_complement();
    CHECK(l.dim() + perp.dim() == m);
    for (F2Vec a : l.basis())
      for (F2Vec b : perp.basis()) CHECK(__builtin_parity(a & b) == 0);
    CHECK(perp.orthogonal_complement() == l);
  }
}

TEST_CASE("subspace membership and dependent bases") {
  SubspaceSpec l(3, {0b110, 0b011});
  CHECK(l.contains(0b101));
  CHECK_FALSE(l.contains(0b100));
  CHECK_THROWS_AS(SubspaceSpec(3, {0b110, 0b011, 0b101}), std::invalid_argument);
  CHECK(l.coset_representatives().size() == 2);
}

TEST_CASE("build_f unfolds the definition for P = 0, L full") {
  CarletSpec spec(3, AnfPoly{}, SubspaceSpec::full(3));
  const TruthTable f = build_f(spec);
  // 1_{L_perp}(x) = [x = 0]; f(0,y) = 1, f(x,y) = x.y otherwise
  for (F2Vec x = 0; x < 8; ++x)
    for (F2Vec y = 0; y < 8; ++y) {
      const bool expected = x == 0 ? true : __builtin_parity(x & y);
      CHECK(f.value((static_cast<std::uint64_t>(x) << 3) | y) == expected);
    }
}

TEST_CASE("build_f matches the expanded ANF for the m=4 family case") {
  // m=4, P = X3*X4, L = span(e3,e4): f = sum x_i y_i + x1 y3 y4 + (x3+1)(x4+1)
  CarletSpec spec(4, AnfPoly{{{3, 4}}}, SubspaceSpec::coordinate_span(4, 3, 4));
  const TruthTable f = build_f(spec);
  // variables: x1..x4 -> X1..X4, y1..y4 -> X5..X8
  AnfPoly expanded = AnfPoly::canonical({{1, 5},
                                         {2, 6},
                                         {3, 7},
                                         {4, 8},
                                         {1, 7, 8},
                                         {3, 4},
                                         {3},
                                         {4},
                                         {}});
  CHECK(f == anf_to_tt(8, expanded));
  CHECK(tt_to_anf(f) == expanded);
}

TEST_CASE("support sizes of the m=4 quadratic-P bent cases") {
  for (bool alpha : {false, true})
    for (bool beta : {false, true}) {
      std::vector<std::vector<unsigned>> monos;
      if (alpha) monos.push_back({2, 3});
      if (beta) monos.push_back({2, 4});
      CarletSpec spec(4, AnfPoly::canonical(std::move(monos)),
                      SubspaceSpec::coordinate_span(4, 3, 4));
      const auto size = support(build_f(spec)).count();
      CHECK((size == 120 || size == 136));
    }
}

TEST_CASE("flat detection") {
  CHECK(is_flat({0b101}));
  CHECK_FALSE(is_flat({0b00, 0b01, 0b10}));
  CHECK(is_flat({0b00, 0b01, 0b10, 0b11}));
  CHECK_THROWS_AS(is_flat({}), std::invalid_argument);

  testutil::Rng rng(23);
  for (int rep = 0; rep < 60; ++rep) {
    const unsigned m = 1 + static_cast<unsigned>(rng.below(8));
    const SubspaceSpec l = random_subspace(rng, m);
    const F2Vec shift = static_cast<F2Vec>(rng.below(std::uint64_t{1} << m));
    std::vector<F2Vec> flat;
    for (F2Vec e : l.elements()) flat.push_back(e ^ shift);
    CHECK(is_flat(flat));
  }
}

TEST_CASE("C-condition on coordinate subspace cases") {
  // prefix span: holds for arbitrary P
  {
    CarletSpec spec(4, AnfPoly{{{3, 4}, {2, 3, 4}}}, SubspaceSpec::coordinate_span(4, 1, 2));
    CHECK(check_c_condition(spec).holds);
    CHECK(classify_coordinate_case(spec) == CoordinateCase::HoldsPrefix);
  }
  // suffix span, every monomial has at most one index above s
  {
    CarletSpec spec(4, AnfPoly{{{2, 3}}}, SubspaceSpec::coordinate_span(4, 3, 4));
    CHECK(check_c_condition(spec).holds);
    CHECK(classify_coordinate_case(spec) == CoordinateCase::HoldsSuffix);
  }
  // suffix span, some monomial with two indices above s
  {
    CarletSpec spec(4, AnfPoly{{{3, 4}}}, SubspaceSpec::coordinate_span(4, 3, 4));
    const auto report = check_c_condition(spec);
    CHECK_FALSE(report.holds);
    CHECK(classify_coordinate_case(spec) == CoordinateCase::ViolatedSuffix);
  }
}

TEST_CASE("classifier on hand-picked cases") {
  CHECK(classify_coordinate_case(CarletSpec(4, AnfPoly{{{2, 3, 4}}},
                                            SubspaceSpec::coordinate_span(4, 1, 2))) ==
        CoordinateCase::HoldsPrefix);
  CHECK(classify_coordinate_case(CarletSpec(4, AnfPoly{{{2, 3}, {2, 4}}},
                                            SubspaceSpec::coordinate_span(4, 3, 4))) ==
        CoordinateCase::HoldsSuffix);
  CHECK(classify_coordinate_case(CarletSpec(4, AnfPoly{{{2, 3, 4}}},
                                            SubspaceSpec::coordinate_span(4, 3, 4))) ==
        CoordinateCase::ViolatedSuffix);
  // non-coordinate subspace
  CHECK(classify_coordinate_case(CarletSpec(3, AnfPoly{}, SubspaceSpec(3, {0b110}))) ==
        CoordinateCase::Unclassified);
}

TEST_CASE("C-condition dimension cap") {
  CarletSpec spec(5, AnfPoly{}, SubspaceSpec::zero(5));
  CHECK(check_c_condition(spec, 5).holds);
  CHECK_THROWS_AS(check_c_condition(spec, 4), std::invalid_argument);
}

TEST_CASE("C-condition failures come with a checkable witness") {
  testutil::Rng rng(404);
  int failures = 0;
  for (int rep = 0; rep < 200 && failures < 30; ++rep) {
    const unsigned m = 3 + static_cast<unsigned>(rng.below(3));
    CarletSpec spec(m, random_p(rng, m, 3), random_subspace(rng, m));
    const auto report = check_c_condition(spec);
    if (report.holds) continue;
    ++failures;
    // rebuild the failing preimage set and confirm the witness
    std::vector<F2Vec> preimage;
    for (F2Vec l : spec.L.elements()) preimage.push_back(apply_pi_inv(spec, report.witness_a ^ l));
    CHECK_FALSE(is_flat(preimage));
    const auto [p, q, base] = report.witness_vectors;
    auto in = [&](F2Vec x) {
      for (F2Vec y : preimage)
        if (x == y) return true;
      return false;
    };
    CHECK(in(p));
    CHECK(in(q));
    CHECK(in(base));
    CHECK_FALSE(in(p ^ q ^ base));
  }
  CHECK(failures > 0);
}

TEST_CASE("C-condition holders are bent (random search, m <= 5)") {
  testutil::Rng rng(777);
  int holders = 0;
  for (int rep = 0; rep < 400 && holders < 60; ++rep) {
    const unsigned m = 2 + static_cast<unsigned>(rng.below(4));
    CarletSpec spec(m, random_p(rng, m, 3), random_subspace(rng, m));
    if (!check_c_condition(spec).holds) continue;
    ++holders;
    CHECK(is_bent(build_f(spec)));
  }
  CHECK(holders >= 30);
}

TEST_CASE("product family data") {
  auto fam311 = product_family(3, 1, 1);
  CHECK(fam311.f_pi_l.arity() == 6);
  CHECK_FALSE(is_bent(fam311.f_pi_l));
  CHECK(is_bent(fam311.f_mclass));

  // |D \ D'| = 2^{m+r-2}
  auto fam422 = product_family(4, 2, 2);
  const auto d = support(fam422.f_mclass);
  const auto d_pi = support(fam422.f_pi_l);
  CHECK(d.set_minus(d_pi).count() == 16);
  CHECK(d_pi.set_minus(d).count() == 16);

  // Hamming distance 2^{m+r-1}
  auto fam513 = product_family(5, 1, 3);
  CHECK(hamming_distance(fam513.f_mclass, fam513.f_pi_l) == 32);

  CHECK_THROWS_AS(product_family(3, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(product_family(2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(product_family(4, 2, 1), std::invalid_argument);
}

TEST_CASE("product family across the small grid") {
  for (unsigned m = 3; m <= 6; ++m)
    for (unsigned r = 1; r + 2 <= m; ++r)
      for (unsigned s = r; s + 2 <= m; ++s) {
        auto fam = product_family(m, r, s);
        CHECK_FALSE(is_bent(fam.f_pi_l));
        CHECK(is_bent(fam.f_mclass));
        const auto d = support(fam.f_mclass);
        const auto d_pi = support(fam.f_pi_l);
        const std::uint64_t expected = std::uint64_t{1} << (m + r - 2);
        CHECK(d.set_minus(d_pi).count() == expected);
        CHECK(d_pi.set_minus(d).count() == expected);
        CHECK(hamming_distance(fam.f_mclass, fam.f_pi_l) == 2 * expected);
        CHECK(classify_coordinate_case(fam.spec) == CoordinateCase::ViolatedSuffix);
      }
}

TEST_CASE("signed tail sums") {
  CHECK(signed_tail_sum(3, 1) == -2);
  CHECK(signed_tail_sum(8, 1) == -2);
  for (unsigned m = 3; m <= 10; ++m)
    for (unsigned s = 1; s + 2 <= m; ++s) CHECK(signed_tail_sum(m, s) == -2);
  CHECK_THROWS_AS(signed_tail_sum(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(signed_tail_sum(5, 4), std::invalid_argument);
}

TEST_CASE("delta at the distinguished point") {
  CHECK(delta_family_value(3, 1, 1) == 4);
  CHECK(delta_family_value(4, 2, 2) == 8);
  CHECK(delta_family_value(6, 2, 4) == 32);
}

TEST_CASE("exchange criterion rejects the product family pair") {
  const unsigned m = 6, r = 2, s = 2;
  auto fam = product_family(m, r, s);
  GroupSpec g(std::vector<std::uint32_t>(2 * m, 2));
  const auto d1 = support(fam.f_mclass);
  const auto d2 = support(fam.f_pi_l);
  const DSParams params(4096, d1.count(), d1.count() - 1024);  // k - lambda = 2^{2m-2}
  REQUIRE(d1.count() == d2.count());
  const auto report = exchange_check(g, d1, params, d2, params);
  CHECK_FALSE(report.admissible);
  REQUIRE(report.violation.has_value());
  // violating value 2^{s+1} = 8, outside {0, +-2^m} = {0, +-64}
  CHECK(report.violation->delta == 8);
  CHECK(delta_family_value(m, r, s) == 8);
}
