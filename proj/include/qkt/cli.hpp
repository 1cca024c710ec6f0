#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Figure-data front end. Each cmd_* writes one CSV table (header row first)
// to the given stream; run() parses argv and maps failures onto exit codes.
namespace qkt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

// Invalid arguments detected after parsing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fixed CSV number format: 12 significant digits, '.' decimal point, and
/// no negative zero.
std::string format_number(double value);

/// Parses "3/2", "1.5" or "3" into 2j; throws UsageError unless 2j is a
/// positive integer.
int parse_two_j(std::string_view text);

struct DickeArgs {
  std::vector<int> qubits{15, 20, 25, 30};
  std::optional<double> m_min;
  std::optional<double> m_max;
};
// N,M,C_closed,C_numeric
void cmd_dicke(const DickeArgs& args, std::ostream& out);

struct EprArgs {
  std::vector<int> qubits;  // empty: 1..50
};
// N,C
void cmd_epr(const EprArgs& args, std::ostream& out);

struct CoherentArgs {
  std::vector<int> qubits{2, 5, 10, 30};
  std::vector<double> etas{0.0, 0.3, 1.0, 2.5};
};
// N,eta,c_lambda,C
void cmd_coherent(const CoherentArgs& args, std::ostream& out);

struct SeriesArgs {
  int two_j = 3;
  double kappa0 = 0.0;
  double theta0 = 0.0;
  double phi0 = 0.0;
  int n_max = 200;
};
// n,C  (plus C_analytic when 2j = 3)
void cmd_qkt_series(const SeriesArgs& args, std::ostream& out);

struct SweepArgs {
  int two_j = 3;
  std::optional<double> kappa0_min;  // default 0
  std::optional<double> kappa0_max;  // default pi * j
  int points = 50;
  double theta0 = 0.0;
  double phi0 = 0.0;
  int n_max = 500;
  int burn_in = 0;
};
// kappa0,C_timeavg
void cmd_qkt_sweep(const SweepArgs& args, std::ostream& out);

struct Analytic3Args {
  double kappa0 = 0.0;
  int n_max = 200;
};
// n,chi,T_n,U_n_minus_1,abs_alpha2,abs_beta2,C_analytic
void cmd_analytic3(const Analytic3Args& args, std::ostream& out);

struct LyapunovArgs {
  std::vector<double> kappa0s;
  int steps = 0;
  int seeds = 1;
  int transient = 100;
  int every = 100;
  std::optional<double> theta0;  // fixed initial point; otherwise drawn per seed
  std::optional<double> phi0;
};
// kappa0,seed,n,lambda_running
void cmd_lyapunov(const LyapunovArgs& args, std::ostream& out);

/// Full command line entry point. Writes CSV to `out` (or to --out
/// atomically) and diagnostics to `err`. Returns 0, 2 (arguments) or 3
/// (numerical failure).
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace qkt::cli
