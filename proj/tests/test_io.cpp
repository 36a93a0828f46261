#include <doctest.h>

#include "dsbent/io.hpp"

using namespace dsbent;

TEST_CASE("group JSON round trip") {
  GroupSpec g({2, 3, 4});
  CHECK(group_to_json(g) == R"({"moduli":[2,3,4]})");
  CHECK(group_from_json(group_to_json(g)) == g);
  CHECK_THROWS_AS(group_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(group_from_json(R"({"moduli":[0]})"), std::invalid_argument);
  CHECK_THROWS_AS(group_from_json("not json"), std::invalid_argument);
}

TEST_CASE("ANF JSON round trip") {
  const AnfPoly p = AnfPoly::canonical({{1, 2}, {3}});
  CHECK(anf_to_json(p) == "[[1,2],[3]]");
  CHECK(anf_from_json("[[1,2],[3]]") == p);
  CHECK(anf_from_json("[]") == AnfPoly{});
  CHECK(anf_from_json("[[2,2]]") == AnfPoly{{{2}}});  // exponent reduction
  CHECK_THROWS_AS(anf_from_json("[[0]]"), std::invalid_argument);
  CHECK_THROWS_AS(anf_from_json("{}"), std::invalid_argument);
}

TEST_CASE("Carlet spec JSON round trip") {
  const std::string text = R"({"m":4,"P":[[3,4]],"L":{"basis":[[0,0,1,0],[0,0,0,1]]}})";
  const CarletSpec spec = carlet_from_json(text);
  CHECK(spec.m == 4);
  CHECK(spec.P == AnfPoly{{{3, 4}}});
  CHECK(spec.L == SubspaceSpec::coordinate_span(4, 3, 4));
  const CarletSpec again = carlet_from_json(carlet_to_json(spec));
  CHECK(again.m == spec.m);
  CHECK(again.P == spec.P);
  CHECK(again.L == spec.L);
  CHECK_THROWS_AS(carlet_from_json(R"({"m":4,"P":[[1]],"L":{"basis":[]}})"),
                  std::invalid_argument);  // P may not use X_1
  CHECK_THROWS_AS(carlet_from_json(R"({"m":4,"P":[],"L":{"basis":[[1,0]]}})"),
                  std::invalid_argument);  // basis width mismatch
}

TEST_CASE("spectrum JSON forms") {
  GroupSpec g2({2, 2});
  auto d = SubsetMask::of_indices(4, {0, 1, 2});
  CHECK(spectrum_to_json(g2, rho_spectrum(g2, d)) == "[3,1,1,-1]");

  GroupSpec g4({4});
  const std::string s = spectrum_to_json(g4, rho_spectrum(g4, SubsetMask::of_indices(4, {0, 1})));
  CHECK(s.find("\"point\":[1]") != std::string::npos);
  CHECK(s.find("\"coeffs\":[\"1\",\"1\"]") != std::string::npos);  // 1 + i at xi = i
}
