#pragma once

#include <map>
#include <string>
#include <vector>

#include "prolong/rational.hpp"

namespace prolong {

/// Fib_1 = Fib_2 = 1.
Int fibonacci(int n);

/// Diagonal binomial identity sum_i C(n-1-i, i) == Fib_n.
bool fibonacci_binomial_identity(int n);

struct CheckRow {
  int k = 0;
  std::size_t total_dim = 0;
  Int expected_total = 0;  // k + 6 + Fib_{k+3}
  int nu = 0;
  int expected_nu = 0;  // floor((k+1)^2 / 4) - 2
  bool fib_pass = false;
  bool depth_pass = false;
  std::string terminated;
  std::map<int, std::size_t> dims;
  double seconds = 0.0;

  bool pass() const { return fib_pass && depth_pass; }
};

/// Runs the full prolongation of m(k) and checks both closed forms.
CheckRow verify_k(int k, int cap);
bool check_fibonacci(int k, int cap);
bool check_depth(int k, int cap);

struct CrossCheckRow {
  int k = 0;
  /// tanaka(m(k)) per-degree table (abstract engine, first computation path).
  std::map<int, std::size_t> engine_dims;
  /// Polynomial oracle on (n, s), marginalized over its own grading so that
  /// the remaining axis is the m(k) grading.
  std::map<int, std::size_t> oracle_second_marginal;
  /// Same engine run on (n(k), s) directly, against the oracle's native table.
  std::map<int, std::size_t> ns_engine_dims;
  std::map<int, std::size_t> oracle_first_dims;
  std::size_t engine_total = 0, oracle_total = 0;
  bool pass = false;
  double seconds = 0.0;
};

/// Both computation paths of the same prolongation: the structure-constant
/// engine (on m(k) and on (n, s)) versus the polynomial-model oracle, with
/// the bidegree table translating between the two gradings.
CrossCheckRow cross_check(int k, int cap);

struct Report {
  std::vector<CheckRow> rows;
  bool all_pass() const;
};

/// verify_k for every k in [k_min, k_max]; rows in ascending k. Independent
/// values of k run concurrently.
Report verify_range(int k_min, int k_max, int cap, bool parallel = true);

std::string report_to_json(const Report& r);
std::string report_to_csv(const Report& r);
std::string report_to_table(const Report& r);

/// Prolongation degree cap: PROLONG_MAX_DEGREE when set, else 64.
int default_max_degree();

}  // namespace prolong
