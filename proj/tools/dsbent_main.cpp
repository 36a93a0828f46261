#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dsbent/hilbert.hpp"
#include "dsbent/io.hpp"
#include "dsbent/version.hpp"
#include "reproduce.hpp"

using json = nlohmann::json;
using namespace dsbent;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;   // a check ran fine and answered "no"
constexpr int kExitError = 2;

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

/// --group accepts inline JSON, a path to a JSON file, or "n1,n2,...".
GroupSpec parse_group(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{' && std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  if (!text.empty() && text[0] == '{') return group_from_json(text);
  std::vector<std::uint32_t> moduli;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      const unsigned long n = std::stoul(item);
      moduli.push_back(static_cast<std::uint32_t>(n));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad modulus '" + item + "' in --group");
    }
  }
  return GroupSpec(std::move(moduli));
}

/// --spec accepts inline JSON or a path to a JSON file.
CarletSpec parse_carlet(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{' && std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  CarletSpec spec = carlet_from_json(text);
  if (spec.m > 14) throw std::invalid_argument("m is capped at 14 on the command line");
  return spec;
}

struct Reporter {
  std::string command;
  json inputs = json::object();
  json payload = json::object();
  bool pretty = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  int finish(int exit_code) {
    json report;
    report["schema_version"] = kSchemaVersion;
    report["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    report["command"] = command;
    report["inputs_digest"] = fnv1a_hex(inputs.dump());
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
    for (auto& [key, value] : payload.items()) report[key] = value;
    std::cout << (pretty ? report.dump(2) : report.dump()) << "\n";
    return exit_code;
  }

  int fail(const std::string& message) {
    payload["error"] = message;
    return finish(kExitError);
  }
};

json spectrum_json(const GroupSpec& spec, const SubsetMask& d) {
  return json::parse(spectrum_to_json(spec, rho_spectrum(spec, d)));
}

std::string coordinate_case_name(CoordinateCase c) {
  switch (c) {
    case CoordinateCase::HoldsPrefix: return "holds-prefix";
    case CoordinateCase::HoldsSuffix: return "holds-suffix";
    case CoordinateCase::ViolatedSuffix: return "violated-suffix";
    case CoordinateCase::Unclassified: return "unclassified";
  }
  return "unclassified";
}

json f2vec_json(unsigned m, F2Vec v) {
  json row = json::array();
  for (unsigned i = 1; i <= m; ++i) row.push_back((v >> (m - i)) & 1u);
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for difference sets, bent functions and Hilbert-function counts"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON report");

  std::ostringstream cmdline;
  for (int i = 0; i < argc; ++i) {
    if (i) cmdline << ' ';
    cmdline << argv[i];
  }

  // ---- check-ds ----
  auto* check_ds = app.add_subcommand("check-ds", "Difference-set check for a subset");
  std::string cd_group, cd_subset, cd_method = "both";
  std::uint64_t cd_k = 0, cd_lambda = 0;
  bool cd_spectrum = false;
  check_ds->add_option("--group", cd_group, "Group: JSON, file or comma list")->required();
  check_ds->add_option("--subset", cd_subset, "Subset as hex mask")->required();
  check_ds->add_option("--k", cd_k, "Subset size k")->required();
  check_ds->add_option("--lambda", cd_lambda, "Difference multiplicity lambda")->required();
  check_ds->add_option("--method", cd_method, "brute | charsum | both")
      ->check(CLI::IsMember({"brute", "charsum", "both"}));
  check_ds->add_flag("--emit-spectrum", cd_spectrum, "Include the rho spectrum over U");

  // ---- enumerate-ds ----
  auto* enum_ds = app.add_subcommand("enumerate-ds", "Count difference sets by exhaustive scan");
  std::string ed_group;
  std::uint64_t ed_k = 0, ed_lambda = 0, ed_cap = 24;
  bool ed_list = false;
  enum_ds->add_option("--group", ed_group)->required();
  enum_ds->add_option("--k", ed_k)->required();
  enum_ds->add_option("--lambda", ed_lambda)->required();
  enum_ds->add_option("--cap", ed_cap, "Order cap for the scan");
  enum_ds->add_flag("--list", ed_list, "Emit the masks found");

  // ---- wht ----
  auto* wht_cmd = app.add_subcommand("wht", "Walsh-Hadamard spectrum of a truth table");
  unsigned wh_t = 0;
  std::string wh_tt;
  wht_cmd->add_option("--t", wh_t, "Number of variables")->required();
  wht_cmd->add_option("--tt", wh_tt, "Truth table as hex")->required();

  // ---- carlet ----
  auto* carlet = app.add_subcommand("carlet", "Carlet construction tools");
  carlet->require_subcommand(1);
  std::string ca_spec;
  unsigned ca_cap = 16;
  auto* ca_check = carlet->add_subcommand("check-c", "Check the C-condition");
  ca_check->add_option("--spec", ca_spec, "Carlet spec: JSON or file")->required();
  ca_check->add_option("--cap", ca_cap, "Dimension cap");
  auto* ca_build = carlet->add_subcommand("build", "Build the truth table of f_(pi,L)");
  ca_build->add_option("--spec", ca_spec)->required();
  auto* ca_bent = carlet->add_subcommand("bent-check", "Bentness of f_(pi,L)");
  ca_bent->add_option("--spec", ca_spec)->required();
  auto* ca_classify = carlet->add_subcommand("classify", "Coordinate-subspace classification");
  ca_classify->add_option("--spec", ca_spec)->required();
  auto* ca_family = carlet->add_subcommand("family", "Product family instance (m, r, s)");
  unsigned fam_m = 0, fam_r = 0, fam_s = 0;
  ca_family->add_option("--m", fam_m)->required();
  ca_family->add_option("--r", fam_r)->required();
  ca_family->add_option("--s", fam_s)->required();

  // ---- exchange ----
  auto* exchange = app.add_subcommand("exchange", "Exchange criterion for 2-group subsets");
  std::string ex_group, ex_d1, ex_d2;
  std::uint64_t ex_k1 = 0, ex_l1 = 0, ex_k2 = 0, ex_l2 = 0;
  exchange->add_option("--group", ex_group)->required();
  exchange->add_option("--d1", ex_d1, "Verified difference set, hex")->required();
  exchange->add_option("--k1", ex_k1)->required();
  exchange->add_option("--lambda1", ex_l1)->required();
  exchange->add_option("--d2", ex_d2, "Candidate subset, hex")->required();
  exchange->add_option("--k2", ex_k2)->required();
  exchange->add_option("--lambda2", ex_l2)->required();

  // ---- hilbert-count ----
  auto* hilbert = app.add_subcommand("hilbert-count", "Difference-set count via Hilbert functions");
  std::string hc_group;
  std::uint64_t hc_k = 0, hc_lambda = 0, hc_steps = 1'000'000;
  unsigned hc_var_cap = 16;
  int hc_hf = -1;
  bool hc_emit_gb = false;
  hilbert->add_option("--group", hc_group)->required();
  hilbert->add_option("--k", hc_k)->required();
  hilbert->add_option("--lambda", hc_lambda)->required();
  hilbert->add_flag("--emit-gb", hc_emit_gb, "Emit the reduced Groebner basis");
  hilbert->add_option("--hf", hc_hf, "Also report Hilbert function values up to s");
  hilbert->add_option("--max-steps", hc_steps, "Reduction step cap");
  hilbert->add_option("--var-cap", hc_var_cap, "Variable count cap");

  // ---- count-bent ----
  auto* cbent = app.add_subcommand("count-bent", "Bent function count via the Hilbert engine");
  unsigned cb_t = 0;
  std::uint64_t cb_steps = 1'000'000;
  double cb_seconds = 0.0;
  cbent->add_option("--t", cb_t, "Number of variables (even, at most 4)")->required();
  cbent->add_option("--max-steps", cb_steps, "Reduction step cap (0 = unlimited)");
  cbent->add_option("--max-seconds", cb_seconds, "Wall clock cap (0 = unlimited)");

  // ---- reproduce ----
  auto* repro_cmd = app.add_subcommand("reproduce", "Run a canned verification case");
  std::string rp_case;
  repro_cmd->add_option("--case", rp_case, "ex61 | ex62 | thm52 | lemma51")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  Reporter rep;
  rep.command = cmdline.str();
  rep.pretty = pretty;

  try {
    if (*check_ds) {
      const GroupSpec group = parse_group(cd_group);
      const SubsetMask d = SubsetMask::from_hex(group.order(), cd_subset);
      const DSParams params(group.order(), cd_k, cd_lambda);
      rep.inputs = {{"group", json::parse(group_to_json(group))},
                    {"subset", d.to_hex()},
                    {"k", cd_k},
                    {"lambda", cd_lambda},
                    {"method", cd_method}};
      rep.payload["group"] = json::parse(group_to_json(group));
      rep.payload["subset"] = d.to_hex();
      rep.payload["params"] = {{"v", params.v}, {"k", params.k}, {"lambda", params.lambda}};
      rep.payload["params_consistent"] = params.consistent();
      json results = json::object();
      bool verdict = false;
      if (cd_method == "brute" || cd_method == "both") {
        const bool b = is_difference_set_bruteforce(group, d, params);
        results["brute"] = b;
        verdict = b;
      }
      if (cd_method == "charsum" || cd_method == "both") {
        const bool c = is_difference_set_charsum(group, d, params);
        results["charsum"] = c;
        verdict = c;
      }
      if (cd_method == "both" && results["brute"] != results["charsum"]) {
        rep.payload["results"] = results;
        return rep.fail("methods disagree; this indicates an implementation bug");
      }
      if (cd_spectrum && cd_method != "brute") rep.payload["spectrum"] = spectrum_json(group, d);
      rep.payload["results"] = results;
      rep.payload["verdict"] = verdict;
      return rep.finish(verdict ? kExitOk : kExitFalse);
    }

    if (*enum_ds) {
      const GroupSpec group = parse_group(ed_group);
      const DSParams params(group.order(), ed_k, ed_lambda);
      rep.inputs = {{"group", json::parse(group_to_json(group))},
                    {"k", ed_k},
                    {"lambda", ed_lambda}};
      EnumerateOptions options;
      options.order_cap = ed_cap;
      options.collect = ed_list;
      const EnumerateResult result = enumerate_difference_sets(group, params, options);
      rep.payload["count"] = result.count;
      if (ed_list) {
        json masks = json::array();
        for (const auto& m : result.sets) masks.push_back(m.to_hex());
        rep.payload["sets"] = masks;
      }
      return rep.finish(kExitOk);
    }

    if (*wht_cmd) {
      if (wh_t == 0 || wh_t > 28) throw std::invalid_argument("--t must be in [1, 28]");
      const TruthTable f = TruthTable::from_hex(wh_t, wh_tt);
      rep.inputs = {{"t", wh_t}, {"tt", f.to_hex()}};
      rep.payload["t"] = wh_t;
      rep.payload["spectrum"] = walsh(f);
      return rep.finish(kExitOk);
    }

    if (*ca_check) {
      const CarletSpec spec = parse_carlet(ca_spec);
      rep.inputs = {{"spec", json::parse(carlet_to_json(spec))}, {"cap", ca_cap}};
      rep.payload["spec"] = json::parse(carlet_to_json(spec));
      const FlatCheckReport report = check_c_condition(spec, ca_cap);
      rep.payload["holds"] = report.holds;
      if (!report.holds) {
        rep.payload["witness"] = {
            {"a", f2vec_json(spec.m, report.witness_a)},
            {"vectors", json::array({f2vec_json(spec.m, report.witness_vectors[0]),
                                     f2vec_json(spec.m, report.witness_vectors[1]),
                                     f2vec_json(spec.m, report.witness_vectors[2])})}};
      }
      return rep.finish(report.holds ? kExitOk : kExitFalse);
    }

    if (*ca_build) {
      const CarletSpec spec = parse_carlet(ca_spec);
      rep.inputs = {{"spec", json::parse(carlet_to_json(spec))}};
      const TruthTable f = build_f(spec);
      rep.payload["t"] = f.arity();
      rep.payload["tt"] = f.to_hex();
      rep.payload["support"] = support(f).to_hex();
      rep.payload["support_size"] = support(f).count();
      return rep.finish(kExitOk);
    }

    if (*ca_bent) {
      const CarletSpec spec = parse_carlet(ca_spec);
      rep.inputs = {{"spec", json::parse(carlet_to_json(spec))}};
      const TruthTable f = build_f(spec);
      const bool bent = is_bent(f);
      rep.payload["t"] = f.arity();
      rep.payload["bent"] = bent;
      if (f.arity() == 2) rep.payload["t_below_usual_range"] = true;
      return rep.finish(bent ? kExitOk : kExitFalse);
    }

    if (*ca_classify) {
      const CarletSpec spec = parse_carlet(ca_spec);
      rep.inputs = {{"spec", json::parse(carlet_to_json(spec))}};
      rep.payload["case"] = coordinate_case_name(classify_coordinate_case(spec));
      return rep.finish(kExitOk);
    }

    if (*ca_family) {
      rep.inputs = {{"m", fam_m}, {"r", fam_r}, {"s", fam_s}};
      const ProductFamily fam = product_family(fam_m, fam_r, fam_s);
      const auto d = support(fam.f_mclass);
      const auto d_pi = support(fam.f_pi_l);
      rep.payload["t"] = fam.f_pi_l.arity();
      rep.payload["f_pi_l"] = {{"tt", fam.f_pi_l.to_hex()},
                               {"bent", is_bent(fam.f_pi_l)},
                               {"support_size", d_pi.count()}};
      rep.payload["f_mclass"] = {{"tt", fam.f_mclass.to_hex()},
                                 {"bent", is_bent(fam.f_mclass)},
                                 {"support_size", d.count()}};
      rep.payload["exchanged_in"] = d.set_minus(d_pi).count();
      rep.payload["exchanged_out"] = d_pi.set_minus(d).count();
      rep.payload["hamming_distance"] = hamming_distance(fam.f_mclass, fam.f_pi_l);
      rep.payload["delta_at_distinguished_point"] = delta_family_value(fam_m, fam_r, fam_s);
      return rep.finish(kExitOk);
    }

    if (*exchange) {
      const GroupSpec group = parse_group(ex_group);
      const SubsetMask d1 = SubsetMask::from_hex(group.order(), ex_d1);
      const SubsetMask d2 = SubsetMask::from_hex(group.order(), ex_d2);
      const DSParams p1(group.order(), ex_k1, ex_l1);
      const DSParams p2(group.order(), ex_k2, ex_l2);
      rep.inputs = {{"group", json::parse(group_to_json(group))},
                    {"d1", d1.to_hex()},
                    {"k1", ex_k1},
                    {"lambda1", ex_l1},
                    {"d2", d2.to_hex()},
                    {"k2", ex_k2},
                    {"lambda2", ex_l2}};
      const ExchangeReport report = exchange_check(group, d1, p1, d2, p2);
      rep.payload["admissible"] = report.admissible;
      rep.payload["points_checked"] = report.points_checked;
      if (report.violation) {
        rep.payload["violation"] = {{"point_index", report.violation->point_index},
                                    {"delta", report.violation->delta},
                                    {"rho_d1", report.violation->rho_d1}};
      }
      return rep.finish(report.admissible ? kExitOk : kExitFalse);
    }

    if (*hilbert) {
      const GroupSpec group = parse_group(hc_group);
      const DSParams params(group.order(), hc_k, hc_lambda);
      rep.inputs = {{"group", json::parse(group_to_json(group))},
                    {"k", hc_k},
                    {"lambda", hc_lambda}};
      BuchbergerLimits limits;
      limits.max_reduction_steps = hc_steps;
      const GroebnerBasis gb =
          buchberger(build_generators(group, params, hc_var_cap), MonomialOrder::Grevlex, limits);
      const auto dim = quotient_dimension(gb);
      if (!dim) return rep.fail("quotient is not zero dimensional");
      rep.payload["count"] = *dim;
      if (hc_emit_gb) {
        json gens = json::array();
        for (const MultiPoly& g : gb.generators) gens.push_back(g.str());
        rep.payload["groebner_basis"] = gens;
      }
      if (hc_hf >= 0) {
        json hf = json::array();
        for (int s = 0; s <= hc_hf; ++s)
          hf.push_back({{"s", s}, {"value", affine_hilbert_function(gb, static_cast<unsigned>(s))}});
        rep.payload["hilbert_function"] = hf;
      }
      return rep.finish(kExitOk);
    }

    if (*cbent) {
      rep.inputs = {{"t", cb_t}};
      BuchbergerLimits limits;
      limits.max_reduction_steps = cb_steps;
      limits.max_seconds = cb_seconds;
      rep.payload["count"] = count_bent(cb_t, limits);
      return rep.finish(kExitOk);
    }

    if (*repro_cmd) {
      rep.inputs = {{"case", rp_case}};
      const auto checks = repro::run_case(rp_case);
      json rows = json::array();
      for (const auto& c : checks)
        rows.push_back({{"name", c.name},
                        {"expected", c.expected},
                        {"computed", c.computed},
                        {"match", c.match}});
      const bool ok = repro::all_match(checks);
      rep.payload["case"] = rp_case;
      rep.payload["checks"] = rows;
      rep.payload["all_match"] = ok;
      return rep.finish(ok ? kExitOk : kExitError);
    }
  } catch (const resource_limit_error& e) {
    return rep.fail(std::string("resource limit: ") + e.what());
  } catch (const std::exception& e) {
    return rep.fail(e.what());
  }
  return rep.fail("no subcommand handled");
}
