#include "dsbent/io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace dsbent {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

}  // namespace

std::string group_to_json(const GroupSpec& spec) {
  json j;
  j["moduli"] = spec.moduli();
  return j.dump();
}

GroupSpec group_from_json(std::string_view text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("moduli") || !j["moduli"].is_array())
    throw std::invalid_argument("group JSON needs a \"moduli\" array");
  std::vector<std::uint32_t> moduli;
  for (const auto& m : j["moduli"]) {
    if (!m.is_number_unsigned() || m.get<std::uint64_t>() == 0)
      throw std::invalid_argument("moduli must be positive integers");
    moduli.push_back(m.get<std::uint32_t>());
  }
  return GroupSpec(std::move(moduli));
}

std::string anf_to_json(const AnfPoly& p) {
  json j = json::array();
  for (const auto& mon : p.monomials) j.push_back(mon);
  return j.dump();
}

AnfPoly anf_from_json(std::string_view text) {
  const json j = parse(text);
  if (!j.is_array()) throw std::invalid_argument("ANF JSON must be a list of integer lists");
  std::vector<std::vector<unsigned>> monomials;
  for (const auto& mon : j) {
    if (!mon.is_array()) throw std::invalid_argument("ANF monomial must be an integer list");
    std::vector<unsigned> vars;
    for (const auto& v : mon) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
        throw std::invalid_argument("ANF variable indices are positive integers");
      vars.push_back(v.get<unsigned>());
    }
    monomials.push_back(std::move(vars));
  }
  return AnfPoly::canonical(std::move(monomials));
}

namespace {

json f2vec_to_json(unsigned m, F2Vec v) {
  json row = json::array();
  for (unsigned i = 1; i <= m; ++i) row.push_back((v >> (m - i)) & 1u);
  return row;
}

F2Vec f2vec_from_json(unsigned m, const json& row) {
  if (!row.is_array() || row.size() != m)
    throw std::invalid_argument("basis vector length must equal m");
  F2Vec v = 0;
  for (unsigned i = 1; i <= m; ++i) {
    const auto& b = row[i - 1];
    if (!b.is_number_unsigned() || b.get<std::uint64_t>() > 1)
      throw std::invalid_argument("basis vector entries must be 0 or 1");
    if (b.get<unsigned>()) v |= F2Vec{1} << (m - i);
  }
  return v;
}

}  // namespace

std::string carlet_to_json(const CarletSpec& spec) {
  json j;
  j["m"] = spec.m;
  j["P"] = json::parse(anf_to_json(spec.P));
  json basis = json::array();
  for (F2Vec row : spec.L.basis()) basis.push_back(f2vec_to_json(spec.m, row));
  j["L"] = json{{"basis", basis}};
  return j.dump();
}

CarletSpec carlet_from_json(std::string_view text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("m") || !j.contains("P") || !j.contains("L"))
    throw std::invalid_argument("Carlet JSON needs m, P and L");
  if (!j["m"].is_number_unsigned()) throw std::invalid_argument("m must be a positive integer");
  const unsigned m = j["m"].get<unsigned>();
  AnfPoly p = anf_from_json(j["P"].dump());
  if (!j["L"].is_object() || !j["L"].contains("basis") || !j["L"]["basis"].is_array())
    throw std::invalid_argument("L needs a \"basis\" array");
  std::vector<F2Vec> basis;
  for (const auto& row : j["L"]["basis"]) basis.push_back(f2vec_from_json(m, row));
  return CarletSpec(m, std::move(p), SubspaceSpec(m, basis));
}

std::string spectrum_to_json(const GroupSpec& spec, const SpectrumTable& table) {
  json j = json::array();
  if (spec.is_elementary_2group()) {
    for (const CycNum& v : table.values) {
      const Rational q = v.to_rational();
      if (q.get_den() != 1) throw std::logic_error("2-group spectrum value is not an integer");
      j.push_back(q.get_num().get_si());
    }
  } else {
    for (std::uint64_t u = 0; u < table.values.size(); ++u) {
      json rec;
      rec["point"] = unity_point_at(spec, u).exponents;
      json coeffs = json::array();
      for (const Rational& c : table.values[u].coeffs()) coeffs.push_back(c.get_str());
      rec["coeffs"] = coeffs;
      j.push_back(rec);
    }
  }
  return j.dump();
}

}  // namespace dsbent
