#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "prolong/algebra_io.hpp"
#include "prolong/models.hpp"
#include "prolong/oracle.hpp"
#include "prolong/prolongation.hpp"
#include "prolong/verify.hpp"

namespace {

using namespace prolong;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

std::pair<int, int> parse_k_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int k = std::stoi(text);
    return {k, k};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

/// A non-positively graded input splits into a negative base plus the
/// adjoint action of its degree-0 part, which prolongs as a fixed g0.
std::pair<GradedAlgebra, std::optional<std::vector<Derivation>>> split_input(
    const GradedAlgebra& a) {
  if (a.max_degree() < 0) return {a, std::nullopt};
  if (a.max_degree() > 0)
    throw std::runtime_error("tanaka input must be non-positively graded");
  std::vector<BasisElement> neg_basis;
  std::vector<std::size_t> neg_idx, zero_idx;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.element(i).degree < 0) {
      neg_idx.push_back(i);
      neg_basis.push_back(a.element(i));
    } else {
      zero_idx.push_back(i);
    }
  }
  std::vector<BracketSpec> br;
  for (std::size_t p = 0; p < neg_idx.size(); ++p)
    for (std::size_t q = p + 1; q < neg_idx.size(); ++q) {
      Vec w = a.bracket_basis(neg_idx[p], neg_idx[q]);
      BracketSpec spec{a.element(neg_idx[p]).name, a.element(neg_idx[q]).name, {}};
      for (std::size_t t = 0; t < w.size(); ++t)
        if (w[t] != 0) spec.value.emplace_back(a.element(t).name, w[t]);
      if (!spec.value.empty()) br.push_back(std::move(spec));
    }
  GradedAlgebra base = GradedAlgebra::build(neg_basis, br);
  std::map<int, std::vector<std::size_t>> by_degree;
  for (auto i : neg_idx) by_degree[a.element(i).degree].push_back(i);
  std::map<std::size_t, std::pair<int, std::size_t>> pos_of;
  for (auto& [d, idxs] : by_degree)
    for (std::size_t p = 0; p < idxs.size(); ++p) pos_of[idxs[p]] = {d, p};
  std::vector<Derivation> g0;
  for (auto z : zero_idx) {
    Derivation d;
    for (auto& [deg, idxs] : by_degree) {
      RatMatrix blk(idxs.size(), idxs.size());
      for (std::size_t c = 0; c < idxs.size(); ++c) {
        Vec w = a.bracket_basis(z, idxs[c]);
        for (std::size_t t = 0; t < w.size(); ++t)
          if (w[t] != 0) blk.set(pos_of.at(t).second, c, w[t]);
      }
      d.blocks[deg] = std::move(blk);
    }
    g0.push_back(std::move(d));
  }
  return {base, g0};
}

std::string dims_table(const std::map<int, std::size_t>& dims, int nu,
                       const std::string& terminated, std::size_t total) {
  std::ostringstream os;
  os << "degree  dim\n";
  for (auto& [d, n] : dims) os << std::left << std::setw(8) << d << n << "\n";
  os << "total = " << total << ", nu = " << nu << ", terminated = " << terminated << "\n";
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Tanaka prolongation of graded nilpotent Lie algebras"};
  app.require_subcommand(1);

  auto* model_cmd = app.add_subcommand("model", "emit a built-in algebra as JSON");
  std::string family = "m";
  int model_k = 3;
  std::string model_out;
  model_cmd->add_option("--family", family, "m | gprime | heisenberg | ns")
      ->check(CLI::IsMember({"m", "gprime", "heisenberg", "ns"}));
  model_cmd->add_option("--k", model_k, "family parameter k")->required();
  model_cmd->add_option("--output,--emit", model_out, "output file (default stdout)");

  auto* tanaka_cmd = app.add_subcommand("tanaka", "prolong an algebra from JSON");
  std::string tanaka_in, tanaka_fmt = "json", tanaka_out;
  int tanaka_cap = default_max_degree();
  tanaka_cmd->add_option("--input", tanaka_in, "algebra JSON file ('-' for stdin)");
  tanaka_cmd->add_option("--max-degree", tanaka_cap, "prolongation degree cap");
  tanaka_cmd->add_option("--format", tanaka_fmt, "json | table")
      ->check(CLI::IsMember({"json", "table"}));
  tanaka_cmd->add_option("--output", tanaka_out, "output file (default stdout)");

  auto* oracle_cmd = app.add_subcommand("oracle", "polynomial-model prolongation of (n, s)");
  int oracle_k = 3, oracle_cap = default_max_degree();
  std::string oracle_fmt = "table";
  bool oracle_basis = false;
  oracle_cmd->add_option("--k", oracle_k, "family parameter k")->required();
  oracle_cmd->add_option("--cap", oracle_cap, "degree cap");
  oracle_cmd->add_option("--format", oracle_fmt, "table | json | poly")
      ->check(CLI::IsMember({"table", "json", "poly"}));
  oracle_cmd->add_flag("--basis", oracle_basis, "include component bases");

  auto* verify_cmd = app.add_subcommand("verify", "check the dimension and depth formulas");
  std::string verify_range_text = "3..6", verify_fmt = "table";
  int verify_cap = default_max_degree();
  bool verify_serial = false;
  verify_cmd->add_option("--k", verify_range_text, "single k or range like 3..6");
  verify_cmd->add_option("--max-degree", verify_cap, "prolongation degree cap");
  verify_cmd->add_option("--format", verify_fmt, "table | json | csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  verify_cmd->add_flag("--serial", verify_serial, "disable per-k concurrency");

  auto* cross_cmd = app.add_subcommand("cross-check", "engine vs polynomial oracle on (n, s)");
  int cross_k = 3, cross_cap = default_max_degree();
  std::string cross_fmt = "table";
  cross_cmd->add_option("--k", cross_k, "family parameter k")->required();
  cross_cmd->add_option("--max-degree", cross_cap, "prolongation degree cap");
  cross_cmd->add_option("--format", cross_fmt, "table | json")
      ->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help is success; malformed usage is 2
  }

  if (model_cmd->parsed()) {
    GradedAlgebra a = [&] {
      if (family == "m") return make_m(model_k);
      if (family == "gprime") return make_gprime(model_k);
      if (family == "heisenberg") return make_heisenberg(model_k).algebra;
      return make_s(model_k).ns;
    }();
    emit(algebra_to_json(a), model_out);
    return 0;
  }

  if (tanaka_cmd->parsed()) {
    GradedAlgebra input = algebra_from_json(read_input(tanaka_in));
    auto [base, g0] = split_input(input);
    ProlongationResult r = tanaka(base, g0, tanaka_cap);
    if (tanaka_fmt == "json") {
      emit(result_to_json(r), tanaka_out);
    } else {
      emit(dims_table(r.dims_by_degree(), r.nu,
                      r.terminated == Termination::Vanished ? "vanished" : "capped",
                      r.total_dim()),
           tanaka_out);
    }
    return 0;
  }

  if (oracle_cmd->parsed()) {
    OracleResult r = oracle_full(oracle_k, oracle_cap);
    if (oracle_fmt == "json") {
      nlohmann::ordered_json j;
      j["k"] = r.k;
      nlohmann::ordered_json dims;
      for (auto& [d, n] : r.dims_by_degree()) dims[std::to_string(d)] = n;
      j["dims"] = dims;
      j["nu"] = r.nu;
      j["total_dim"] = r.total_dim();
      if (oracle_basis) {
        j["components"] = nlohmann::ordered_json::array();
        for (std::size_t d = 0; d < r.components.size(); ++d) {
          nlohmann::ordered_json comp;
          comp["degree"] = d;
          comp["basis"] = nlohmann::ordered_json::array();
          for (auto& p : r.components[d])
            comp["basis"].push_back(nlohmann::ordered_json::parse(p.to_json()));
          j["components"].push_back(comp);
        }
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << dims_table(r.dims_by_degree(), r.nu, "vanished", r.total_dim());
      if (oracle_basis || oracle_fmt == "poly")
        for (std::size_t d = 0; d < r.components.size(); ++d) {
          std::cout << "g_" << d << ":\n";
          for (auto& p : r.components[d]) std::cout << "  " << p.to_string() << "\n";
        }
    }
    return 0;
  }

  if (verify_cmd->parsed()) {
    auto [k_min, k_max] = parse_k_range(verify_range_text);
    if (k_max > 6)
      std::cerr << "warning: k > 6 can take a long time with exact arithmetic\n";
    Report report = verify_range(k_min, k_max, verify_cap, !verify_serial);
    if (verify_fmt == "json")
      std::cout << report_to_json(report);
    else if (verify_fmt == "csv")
      std::cout << report_to_csv(report);
    else
      std::cout << report_to_table(report);
    return report.all_pass() ? 0 : 1;
  }

  if (cross_cmd->parsed()) {
    CrossCheckRow row = cross_check(cross_k, cross_cap);
    auto dims_json = [](const std::map<int, std::size_t>& dims) {
      nlohmann::ordered_json j;
      for (auto& [d, n] : dims) j[std::to_string(d)] = n;
      return j;
    };
    if (cross_fmt == "json") {
      nlohmann::ordered_json j;
      j["k"] = row.k;
      j["engine_dims"] = dims_json(row.engine_dims);
      j["oracle_second_marginal"] = dims_json(row.oracle_second_marginal);
      j["ns_engine_dims"] = dims_json(row.ns_engine_dims);
      j["oracle_first_dims"] = dims_json(row.oracle_first_dims);
      j["engine_total"] = row.engine_total;
      j["oracle_total"] = row.oracle_total;
      j["pass"] = row.pass;
      std::cout << j.dump(2) << "\n";
    } else {
      auto print_pair = [](const char* label, const std::map<int, std::size_t>& a,
                           const std::map<int, std::size_t>& b) {
        std::cout << label << "\ndegree  engine  oracle\n";
        std::map<int, std::pair<std::size_t, std::size_t>> merged;
        for (auto& [d, n] : a) merged[d].first = n;
        for (auto& [d, n] : b) merged[d].second = n;
        for (auto& [d, p] : merged)
          std::cout << std::left << std::setw(8) << d << std::setw(8) << p.first << p.second
                    << "\n";
      };
      print_pair("m(k) grading:", row.engine_dims, row.oracle_second_marginal);
      print_pair("(n, s) grading:", row.ns_engine_dims, row.oracle_first_dims);
      std::cout << "totals: engine = " << row.engine_total << ", oracle = " << row.oracle_total
                << "\n"
                << (row.pass ? "MATCH" : "MISMATCH") << "\n";
    }
    return row.pass ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
