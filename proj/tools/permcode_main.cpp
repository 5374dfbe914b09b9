// permcode: permutation-code toolkit CLI.
//
// Subcommands: classify, contract, hd, group, certify, table5, selftest.
// Exit codes: 0 success (including expected hypothesis failures),
// 1 bound violation or selftest failure, 2 usage/parse errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permcode/certify.hpp"
#include "permcode/contraction.hpp"
#include "permcode/distance.hpp"
#include "permcode/selftest.hpp"

using namespace permcode;

namespace {

struct RunConfig {
  int n = 0;  // degree hint for cycle-notation input
  int q = 0;
  std::pair<int, int> q_range{0, 0};
  int m = 1;
  std::string family;
  std::string format = "text";
  long long exact_cutoff = 30000;
  int threads = 0;
  uint64_t seed = 0;
  bool no_timing = false;
};

std::vector<int> parse_q_list(const std::string& text) {
  std::vector<int> qs;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (!token.empty()) qs.push_back(std::stoi(token));
  }
  return qs;
}

PermutationArray read_array_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::vector<Permutation> members;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    members.push_back(parse_permutation(line));
  }
  if (members.empty()) throw std::invalid_argument("no permutations in " + path);
  const int degree = members.front().degree();
  return make_array(degree, std::move(members));
}

int cmd_classify(const RunConfig& cfg, const std::string& sigma_text,
                 const std::string& tau_text) {
  const Permutation sigma = parse_permutation(sigma_text, cfg.n);
  const Permutation tau = parse_permutation(tau_text, cfg.n);
  const DeltaClass dc = classify(sigma, tau);
  const bool contractions_differ = contract(sigma) != contract(tau);

  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["line"] = dc.line;
    j["dhd"] = dc.delta_hd;
    j["context"] = {{"i", dc.context.i}, {"j", dc.context.j},
                    {"a", dc.context.a}, {"b", dc.context.b},
                    {"c", dc.context.c}, {"d", dc.context.d}};
    if (contractions_differ) {
      const auto pred = predict_decomposition(sigma, tau);
      j["omega"] = pred.omega.symbols;
      j["pi"] = pred.pi.symbols;
      j["omega_equals_pi"] = pred.omega_equals_pi;
      j["chi"] = pred.chi;
      j["rho"] = pred.rho.cycles;
    }
    std::cout << j.dump() << '\n';
    return 0;
  }

  std::cout << "line=" << dc.line << " dhd=" << dc.delta_hd << '\n';
  if (contractions_differ) {
    const auto pred = predict_decomposition(sigma, tau);
    auto show = [](const AnchoredCycle& cycle) {
      if (cycle.trivial()) return std::string("()");
      std::ostringstream out;
      out << '(';
      for (size_t s = 0; s < cycle.symbols.size(); ++s)
        out << (s ? " " : "") << cycle.symbols[s];
      out << ')';
      return out.str();
    };
    std::cout << "omega=" << show(pred.omega) << '\n';
    std::cout << "pi=" << show(pred.pi) << '\n';
    std::ostringstream chi;
    for (const auto& cycle : pred.chi) {
      chi << '(';
      for (size_t s = 0; s < cycle.size(); ++s) chi << (s ? " " : "") << cycle[s];
      chi << ')';
    }
    std::cout << "chi=" << (pred.chi.empty() ? "()" : chi.str()) << '\n';
    std::cout << "rho=" << format_cycles(pred.rho) << '\n';
  } else {
    std::cout << "contractions equal; no decomposition prediction\n";
  }
  return 0;
}

int cmd_contract(const RunConfig& cfg, const std::string& perm_text,
                 const std::string& file) {
  if (!file.empty()) {
    const PermutationArray P = read_array_file(file);
    auto [contracted, report] = contract_array(P, cfg.m, true, cfg.threads);
    std::cout << "# size " << report.size_before << " -> " << report.size_after
              << " (merged " << report.duplicates_merged << ")";
    if (report.min_hd_before)
      std::cout << ", hd " << *report.min_hd_before << " -> "
                << (report.min_hd_after ? std::to_string(*report.min_hd_after)
                                        : std::string("n/a"));
    std::cout << '\n';
    for (const auto& member : contracted.members)
      std::cout << format_image_table(member) << '\n';
    return 0;
  }
  const Permutation sigma = parse_permutation(perm_text, cfg.n);
  const Permutation result = contract_m(sigma, cfg.m);
  std::cout << format_image_table(result) << '\n';
  std::cout << format_cycles(result) << '\n';
  return 0;
}

int cmd_hd(const RunConfig& cfg, const std::string& sigma_text,
           const std::string& tau_text, const std::string& file) {
  if (!file.empty()) {
    const PermutationArray P = read_array_file(file);
    std::cout << min_hamming_distance(P, cfg.threads) << '\n';
    return 0;
  }
  const Permutation sigma = parse_permutation(sigma_text, cfg.n);
  const Permutation tau = parse_permutation(tau_text, cfg.n);
  std::cout << hamming_distance(sigma, tau) << '\n';
  return 0;
}

PermutationArray build_family(const std::string& family, int q) {
  if (family == "agl1" || family == "agl") return agl1(q);
  if (family == "pgl2" || family == "pgl") return pgl2(q);
  if (family == "agammal1" || family == "agammal") return agammal1(q);
  if (family == "pgammal2" || family == "pgammal") return pgammal2(q);
  throw CLI::ValidationError("--family",
                             "expected agl1, pgl2, agammal1, or pgammal2");
}

int cmd_group(const RunConfig& cfg, const std::string& out_path) {
  const PermutationArray G = build_family(cfg.family, cfg.q);
  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file_out.open(out_path);
    if (!file_out) throw std::invalid_argument("cannot write " + out_path);
    out = &file_out;
  }
  *out << "# family=" << cfg.family << " q=" << cfg.q << " degree=" << G.degree
       << " size=" << G.size() << '\n';
  for (const auto& member : G.members)
    *out << format_image_table(member) << '\n';
  return 0;
}

BoundCertificate certify_one(const RunConfig& cfg, int q) {
  CertifyOptions opts;
  opts.exact_cutoff = cfg.exact_cutoff;
  opts.threads = cfg.threads;
  if (cfg.family == "agl" || cfg.family == "agl1")
    return certify_agl(q, cfg.m, opts);
  if (cfg.family == "pgl" || cfg.family == "pgl2") {
    if (cfg.m != 2)
      throw CLI::ValidationError("--m", "pgl2 certificates use exactly m=2");
    return certify_pgl_two_contractions(q, opts);
  }
  if (cfg.family == "agammal" || cfg.family == "agammal1")
    return certify_semilinear(q, cfg.m, /*projective=*/false, opts);
  if (cfg.family == "pgammal" || cfg.family == "pgammal2")
    return certify_semilinear(q, cfg.m, /*projective=*/true, opts);
  throw CLI::ValidationError("--family",
                             "expected agl, pgl2, agammal, or pgammal");
}

int cmd_certify(const RunConfig& cfg) {
  std::vector<int> qs;
  if (cfg.q_range.second > 0) {
    for (int q = cfg.q_range.first; q <= cfg.q_range.second; ++q) qs.push_back(q);
  } else {
    qs.push_back(cfg.q);
  }
  bool violated = false;
  if (cfg.format == "csv") std::cout << csv_header() << '\n';
  for (int q : qs) {
    BoundCertificate cert;
    try {
      cert = certify_one(cfg, q);
    } catch (const CLI::ValidationError&) {
      throw;
    } catch (const std::exception& err) {
      std::cout << "# q=" << q << " error: " << err.what() << '\n';
      continue;
    }
    violated = violated || cert.status == CertStatus::bound_violated;
    if (cfg.format == "csv")
      std::cout << to_csv_row(cert) << '\n';
    else
      std::cout << to_json_line(cert) << '\n';
  }
  return violated ? 1 : 0;
}

int cmd_table5(const RunConfig& cfg, const std::string& q_list,
               int exact_max_q) {
  std::vector<int> qs =
      q_list.empty() ? std::vector<int>{8, 17, 23} : parse_q_list(q_list);
  std::cout << "q,target,obtained_bound,size_check,min_hd_exact,elapsed_s\n";
  bool violated = false;
  for (int q : qs) {
    const auto start = std::chrono::steady_clock::now();
    CertifyOptions opts;
    opts.threads = cfg.threads;
    // for rows past the exact cutoff, skip group construction entirely
    opts.exact_cutoff =
        q <= exact_max_q ? static_cast<long long>(q) * q * q : 0;
    const auto cert = certify_pgl_two_contractions(q, opts);
    std::string size_check = "hypothesis_failed";
    if (cert.status == CertStatus::verified)
      size_check = "ok";
    else if (cert.status == CertStatus::bound_violated)
      size_check = "FAIL";
    violated = violated || cert.status == CertStatus::bound_violated;
    const double elapsed =
        cfg.no_timing
            ? 0.0
            : std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
    std::cout << q << ",\"M(" << q - 1 << ',' << q - 5 << ")\"," << cert.size
              << ',' << size_check << ','
              << (cert.min_hd_exact ? std::to_string(*cert.min_hd_exact)
                                    : std::string())
              << ',' << elapsed << '\n';
  }
  return violated ? 1 : 0;
}

int cmd_selftest(const RunConfig& cfg, const std::string& level) {
  if (level != "quick" && level != "full")
    throw CLI::ValidationError("level", "expected quick or full");
  std::cout << "# level=" << level << " seed=" << cfg.seed << '\n';
  const auto results =
      selftest::run_selftest(level == "full", cfg.seed, cfg.threads);
  bool all_pass = true;
  for (const auto& suite : results) {
    all_pass = all_pass && suite.passed();
    std::cout << "suite=" << suite.name << " checks=" << suite.checks
              << " failures=" << suite.failures;
    if (!suite.detail.empty()) std::cout << " note=\"" << suite.detail << '"';
    std::cout << '\n';
  }
  std::cout << (all_pass ? "selftest: PASS" : "selftest: FAIL") << '\n';
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation-code toolkit: contraction calculus, group "
               "generation, and distance bound certificates"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string sigma_text, tau_text, file, out_path, q_list, level = "quick";
  std::string q_range_text;
  int exact_max_q = 23;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
    sub->add_option("--format", cfg.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* classify_cmd =
      app.add_subcommand("classify", "classify the hd drop of a pair");
  classify_cmd->add_option("sigma", sigma_text)->required();
  classify_cmd->add_option("tau", tau_text)->required();
  classify_cmd->add_option("--n", cfg.n, "degree for cycle notation");
  add_common(classify_cmd);

  auto* contract_cmd =
      app.add_subcommand("contract", "contract a permutation or an array file");
  contract_cmd->add_option("sigma", sigma_text);
  contract_cmd->add_option("--file", file, "one image table per line");
  contract_cmd->add_option("--n", cfg.n);
  contract_cmd->add_option("--m", cfg.m, "number of contractions");
  add_common(contract_cmd);

  auto* hd_cmd = app.add_subcommand("hd", "Hamming distance of a pair or an array file");
  hd_cmd->add_option("sigma", sigma_text);
  hd_cmd->add_option("tau", tau_text);
  hd_cmd->add_option("--file", file);
  hd_cmd->add_option("--n", cfg.n);
  add_common(hd_cmd);

  auto* group_cmd = app.add_subcommand("group", "generate a group family");
  group_cmd->add_option("--family", cfg.family)->required();
  group_cmd->add_option("--q", cfg.q)->required();
  group_cmd->add_option("--out", out_path, "write to a file instead of stdout");
  add_common(group_cmd);

  auto* certify_cmd =
      app.add_subcommand("certify", "emit bound certificates for a family");
  certify_cmd->add_option("--family", cfg.family)->required();
  certify_cmd->add_option("--q", cfg.q);
  certify_cmd->add_option("--q-range", q_range_text, "A..B inclusive");
  certify_cmd->add_option("--m", cfg.m);
  certify_cmd->add_option("--exact-cutoff", cfg.exact_cutoff,
                          "max members for exact distance computation");
  add_common(certify_cmd);

  auto* table5_cmd =
      app.add_subcommand("table5", "two-contraction pgl2 bound table (CSV)");
  table5_cmd->add_option("--q-list", q_list, "comma-separated q values");
  table5_cmd->add_option("--exact-cutoff", exact_max_q,
                         "largest q computed exactly");
  table5_cmd->add_flag("--no-timing", cfg.no_timing,
                       "zero the elapsed column for byte-exact output");
  add_common(table5_cmd);

  auto* selftest_cmd = app.add_subcommand("selftest", "run the invariant suites");
  selftest_cmd->add_option("level", level, "quick or full");
  selftest_cmd->add_option("--seed", cfg.seed, "seed for randomized suites");
  add_common(selftest_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(cfg, sigma_text, tau_text);
    if (contract_cmd->parsed()) {
      if (file.empty() && sigma_text.empty())
        throw CLI::ValidationError("contract", "need a permutation or --file");
      return cmd_contract(cfg, sigma_text, file);
    }
    if (hd_cmd->parsed()) {
      if (file.empty() && (sigma_text.empty() || tau_text.empty()))
        throw CLI::ValidationError("hd", "need two permutations or --file");
      return cmd_hd(cfg, sigma_text, tau_text, file);
    }
    if (group_cmd->parsed()) return cmd_group(cfg, out_path);
    if (certify_cmd->parsed()) {
      if (!q_range_text.empty()) {
        const auto dots = q_range_text.find("..");
        if (dots == std::string::npos)
          throw CLI::ValidationError("--q-range", "expected A..B");
        cfg.q_range = {std::stoi(q_range_text.substr(0, dots)),
                       std::stoi(q_range_text.substr(dots + 2))};
      } else if (cfg.q == 0) {
        throw CLI::ValidationError("certify", "need --q or --q-range");
      }
      return cmd_certify(cfg);
    }
    if (table5_cmd->parsed()) return cmd_table5(cfg, q_list, exact_max_q);
    if (selftest_cmd->parsed()) return cmd_selftest(cfg, level);
  } catch (const CLI::ValidationError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 2;
}
