#include "prolong/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "prolong/models.hpp"
#include "prolong/oracle.hpp"
#include "prolong/prolongation.hpp"

namespace prolong {

Int fibonacci(int n) {
  if (n < 1) throw std::invalid_argument("fibonacci: n >= 1 required");
  Int a = 1, b = 1;
  for (int i = 2; i < n; ++i) {
    Int c = a + b;
    a = b;
    b = c;
  }
  return b;
}

bool fibonacci_binomial_identity(int n) {
  Int total = 0;
  for (int i = 0; 2 * i <= n - 1; ++i) total += binomial(n - 1 - i, i);
  return total == fibonacci(n);
}

CheckRow verify_k(int k, int cap) {
  if (k < 3) throw std::invalid_argument("verify_k: the closed forms hold for k >= 3");
  auto t0 = std::chrono::steady_clock::now();
  CheckRow row;
  row.k = k;
  row.expected_total = Int(k + 6) + fibonacci(k + 3);
  row.expected_nu = (k + 1) * (k + 1) / 4 - 2;
  ProlongationResult r = tanaka(make_m(k), std::nullopt, cap);
  row.total_dim = r.total_dim();
  row.nu = r.nu;
  row.terminated = r.terminated == Termination::Vanished ? "vanished" : "capped";
  row.dims = r.dims_by_degree();
  row.fib_pass = r.terminated == Termination::Vanished && Int(row.total_dim) == row.expected_total;
  row.depth_pass = r.terminated == Termination::Vanished && row.nu == row.expected_nu;
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

bool check_fibonacci(int k, int cap) { return verify_k(k, cap).fib_pass; }
bool check_depth(int k, int cap) { return verify_k(k, cap).depth_pass; }

CrossCheckRow cross_check(int k, int cap) {
  auto t0 = std::chrono::steady_clock::now();
  CrossCheckRow row;
  row.k = k;
  ProlongationResult engine = tanaka(make_m(k), std::nullopt, cap);
  SModel s = make_s(k);
  ProlongationResult ns_engine = tanaka(s.heis.algebra, s.s_derivations, cap);
  OracleResult oracle = oracle_full(k, cap);
  auto table = bidegree_table(oracle);

  row.engine_dims = engine.dims_by_degree();
  row.ns_engine_dims = ns_engine.dims_by_degree();
  row.oracle_first_dims = oracle.dims_by_degree();
  for (auto& [bd, n] : table) row.oracle_second_marginal[bd.second] += n;
  std::map<int, std::size_t> first_marginal;
  for (auto& [bd, n] : table) first_marginal[bd.first] += n;

  row.engine_total = engine.total_dim();
  row.oracle_total = oracle.total_dim();
  row.pass = engine.terminated == Termination::Vanished &&
             ns_engine.terminated == Termination::Vanished &&
             row.engine_total == row.oracle_total &&
             row.engine_dims == row.oracle_second_marginal &&
             row.ns_engine_dims == row.oracle_first_dims &&
             first_marginal == row.oracle_first_dims;
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

bool Report::all_pass() const {
  for (auto& r : rows)
    if (!r.pass()) return false;
  return true;
}

Report verify_range(int k_min, int k_max, int cap, bool parallel) {
  if (k_min > k_max || k_min < 3)
    throw std::invalid_argument("verify_range: need 3 <= k_min <= k_max");
  Report report;
  if (!parallel) {
    for (int k = k_min; k <= k_max; ++k) report.rows.push_back(verify_k(k, cap));
    return report;
  }
  std::vector<std::future<CheckRow>> futures;
  for (int k = k_min; k <= k_max; ++k)
    futures.push_back(std::async(std::launch::async, verify_k, k, cap));
  for (auto& f : futures) report.rows.push_back(f.get());
  return report;
}

std::string report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["rows"] = nlohmann::ordered_json::array();
  for (auto& row : r.rows) {
    nlohmann::ordered_json jr;
    jr["k"] = row.k;
    jr["total_dim"] = row.total_dim;
    jr["expected_total"] = row.expected_total.str();
    jr["nu"] = row.nu;
    jr["expected_nu"] = row.expected_nu;
    jr["fib_pass"] = row.fib_pass;
    jr["depth_pass"] = row.depth_pass;
    jr["terminated"] = row.terminated;
    nlohmann::ordered_json dims;
    for (auto& [d, n] : row.dims) dims[std::to_string(d)] = n;
    jr["dims"] = dims;
    jr["seconds"] = row.seconds;
    j["rows"].push_back(jr);
  }
  j["all_pass"] = r.all_pass();
  return j.dump(2) + "\n";
}

std::string report_to_csv(const Report& r) {
  std::ostringstream os;
  os << "k,total_dim,expected_total,nu,expected_nu,fib_pass,depth_pass,terminated,seconds\n";
  for (auto& row : r.rows)
    os << row.k << "," << row.total_dim << "," << row.expected_total << "," << row.nu << ","
       << row.expected_nu << "," << (row.fib_pass ? "true" : "false") << ","
       << (row.depth_pass ? "true" : "false") << "," << row.terminated << "," << std::fixed
       << std::setprecision(3) << row.seconds << "\n";
  return os.str();
}

std::string report_to_table(const Report& r) {
  std::ostringstream os;
  os << std::left << std::setw(4) << "k" << std::setw(10) << "dim" << std::setw(10) << "expect"
     << std::setw(5) << "nu" << std::setw(8) << "nu_exp" << std::setw(12) << "terminated"
     << std::setw(6) << "fib" << std::setw(7) << "depth" << "seconds\n";
  for (auto& row : r.rows)
    os << std::left << std::setw(4) << row.k << std::setw(10) << row.total_dim << std::setw(10)
       << row.expected_total << std::setw(5) << row.nu << std::setw(8) << row.expected_nu
       << std::setw(12) << row.terminated << std::setw(6) << (row.fib_pass ? "ok" : "FAIL")
       << std::setw(7) << (row.depth_pass ? "ok" : "FAIL") << std::fixed << std::setprecision(3)
       << row.seconds << "\n";
  return os.str();
}

int default_max_degree() {
  const char* env = std::getenv("PROLONG_MAX_DEGREE");
  if (!env) return 64;
  int value = std::atoi(env);
  if (value < 1) throw std::invalid_argument("PROLONG_MAX_DEGREE must be a positive integer");
  return value;
}

}  // namespace prolong
