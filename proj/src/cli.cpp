#include "qkt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qkt/analytic3.hpp"
#include "qkt/classical.hpp"
#include "qkt/concurrence.hpp"
#include "qkt/error.hpp"
#include "qkt/kicked_top.hpp"
#include "qkt/pairwise.hpp"
#include "qkt/spin.hpp"

namespace qkt::cli {

namespace {

constexpr double kSeriesAgreement = 1e-9;
constexpr double kDickeAgreement = 1e-9;

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header) : out_(out) {
    bool first = true;
    for (auto h : header) {
      if (!first) out_ << ',';
      out_ << h;
      first = false;
    }
    out_ << '\n';
  }

  template <typename... Ts>
  void row(const Ts&... values) {
    bool first = true;
    ((emit(values, first)), ...);
    out_ << '\n';
  }

 private:
  void emit(double v, bool& first) { sep(first), out_ << format_number(v); }
  void emit(int v, bool& first) { sep(first), out_ << v; }
  void emit(std::uint64_t v, bool& first) { sep(first), out_ << v; }
  void sep(bool& first) {
    if (!first) out_ << ',';
    first = false;
  }

  std::ostream& out_;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

double half_round(double m) { return 0.5 * std::round(2.0 * m); }

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

int parse_two_j(std::string_view text) {
  const auto fail = [&] { throw UsageError("j must be a positive half-integer (e.g. 3/2 or 1.5), got '" + std::string(text) + "'"); };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    int num = 0, den = 0;
    const auto a = std::from_chars(text.data(), text.data() + slash, num);
    const auto b = std::from_chars(text.data() + slash + 1, text.data() + text.size(), den);
    if (a.ec != std::errc{} || b.ec != std::errc{} || a.ptr != text.data() + slash ||
        b.ptr != text.data() + text.size() || (den != 1 && den != 2) || num <= 0)
      fail();
    return den == 1 ? 2 * num : num;
  }
  double j = 0.0;
  try {
    std::size_t used = 0;
    j = std::stod(std::string(text), &used);
    if (used != text.size()) fail();
  } catch (const std::logic_error&) {
    fail();
  }
  const double two_j = 2.0 * j;
  if (!(two_j >= 1.0) || std::abs(two_j - std::round(two_j)) > 1e-12) fail();
  return static_cast<int>(std::llround(two_j));
}

void cmd_dicke(const DickeArgs& args, std::ostream& out) {
  require(!args.qubits.empty(), "at least one N is required");
  for (int n : args.qubits) require(n >= 2, "N must be ≥ 2 (got " + std::to_string(n) + ")");
  CsvWriter csv(out, {"N", "M", "C_closed", "C_numeric"});
  std::vector<int> sorted = args.qubits;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int n : sorted) {
    const double half = 0.5 * n;
    const double lo = std::max(-half, args.m_min.value_or(-half));
    const double hi = std::min(half, args.m_max.value_or(half));
    for (int k = 0; k <= n; ++k) {
      const double m = k - half;
      if (m < lo - 1e-12 || m > hi + 1e-12) continue;
      const double closed = dicke_concurrence_closed(n, m);
      const double numeric = pairwise_concurrence(dicke_state(n, m)).concurrence;
      if (std::abs(closed - numeric) > kDickeAgreement)
        throw Error(ErrorKind::NumericalFailure, "Dicke closed form and pipeline disagree at N=" + std::to_string(n));
      csv.row(n, half_round(m), closed, numeric);
    }
  }
}

void cmd_epr(const EprArgs& args, std::ostream& out) {
  std::vector<int> qubits = args.qubits;
  if (qubits.empty())
    for (int n = 1; n <= 50; ++n) qubits.push_back(n);
  for (int n : qubits) require(n >= 1, "N must be >= 1 (got " + std::to_string(n) + ")");
  std::sort(qubits.begin(), qubits.end());
  qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
  CsvWriter csv(out, {"N", "C"});
  for (int n : qubits) csv.row(n, wootters(epr_reduce(n)).concurrence);
}

void cmd_coherent(const CoherentArgs& args, std::ostream& out) {
  require(!args.qubits.empty() && !args.etas.empty(), "need at least one N and one eta");
  for (int n : args.qubits) require(n >= 2, "N must be ≥ 2 (got " + std::to_string(n) + ")");
  std::vector<int> qubits = args.qubits;
  std::vector<double> etas = args.etas;
  std::sort(qubits.begin(), qubits.end());
  std::sort(etas.begin(), etas.end());
  CsvWriter csv(out, {"N", "eta", "c_lambda", "C"});
  for (int n : qubits)
    for (double eta : etas) {
      const ConcurrenceResult r = pairwise_concurrence(spin_coherent(n, eta));
      csv.row(n, eta, r.c_lambda, r.concurrence);
    }
}

void cmd_qkt_series(const SeriesArgs& args, std::ostream& out) {
  require(args.two_j >= 2, "concurrence needs 2j >= 2 qubits");
  require(args.n_max >= 1, "--n-max must be >= 1");
  require(std::isfinite(args.kappa0), "kappa0 must be finite");
  const KickedTopParams params{SpinQuantum(args.two_j), args.kappa0};
  const ConcurrenceSeries series = concurrence_series(params, args.theta0, args.phi0, args.n_max);
  const bool three_qubit = args.two_j == analytic3::kQubits && args.theta0 == 0.0 && args.phi0 == 0.0;
  if (three_qubit) {
    CsvWriter csv(out, {"n", "C", "C_analytic"});
    for (const auto& e : series.entries) {
      const double analytic = analytic3::analytic_concurrence(e.n, args.kappa0);
      if (std::abs(analytic - e.concurrence) > kSeriesAgreement)
        throw Error(ErrorKind::NumericalFailure, "simulator and closed form disagree at n=" + std::to_string(e.n));
      csv.row(e.n, e.concurrence, analytic);
    }
  } else {
    CsvWriter csv(out, {"n", "C"});
    for (const auto& e : series.entries) csv.row(e.n, e.concurrence);
  }
}

void cmd_qkt_sweep(const SweepArgs& args, std::ostream& out) {
  require(args.two_j >= 2, "concurrence needs 2j >= 2 qubits");
  require(args.points >= 1, "--points must be >= 1");
  require(args.n_max >= 1 && args.burn_in >= 0 && args.burn_in < args.n_max, "need 0 <= --burn-in < --n-max");
  const double lo = args.kappa0_min.value_or(0.0);
  const double hi = args.kappa0_max.value_or(std::numbers::pi * 0.5 * args.two_j);
  require(lo <= hi, "kappa0 range is empty");
  CsvWriter csv(out, {"kappa0", "C_timeavg"});
  for (int k = 0; k < args.points; ++k) {
    const double kappa0 = args.points == 1 ? lo : lo + (hi - lo) * k / (args.points - 1);
    const KickedTopParams params{SpinQuantum(args.two_j), kappa0};
    const ConcurrenceSeries series = concurrence_series(params, args.theta0, args.phi0, args.n_max);
    csv.row(kappa0, time_average(series, args.burn_in));
  }
}

void cmd_analytic3(const Analytic3Args& args, std::ostream& out) {
  require(args.n_max >= 1, "--n-max must be >= 1");
  CsvWriter csv(out, {"n", "chi", "T_n", "U_n_minus_1", "abs_alpha2", "abs_beta2", "C_analytic"});
  for (int n = 1; n <= args.n_max; ++n) {
    const analytic3::ChebyshevStep s = analytic3::chebyshev_step(n, args.kappa0);
    csv.row(n, s.chi, s.t_n, s.u_n_minus_1, std::norm(s.alpha), std::norm(s.beta),
            analytic3::analytic_concurrence(n, args.kappa0));
  }
}

void cmd_lyapunov(const LyapunovArgs& args, std::ostream& out) {
  require(!args.kappa0s.empty(), "at least one --kappa0 is required");
  require(args.steps >= 1000, "--steps must be >= 1000");
  require(args.seeds >= 1, "--seeds must be >= 1");
  require(args.transient >= 0 && args.transient < args.steps, "need 0 <= --transient < --steps");
  require(args.every >= 1, "--every must be >= 1");
  require(args.theta0.has_value() == args.phi0.has_value(), "--theta0 and --phi0 go together for lyapunov");
  std::vector<double> kappas = args.kappa0s;
  std::sort(kappas.begin(), kappas.end());
  CsvWriter csv(out, {"kappa0", "seed", "n", "lambda_running"});
  for (double kappa0 : kappas)
    for (std::uint64_t seed = 0; seed < static_cast<std::uint64_t>(args.seeds); ++seed) {
      const classical::SpherePoint pt0 = args.theta0
                                             ? classical::SpherePoint::from_angles(*args.theta0, *args.phi0)
                                             : classical::random_sphere_point(seed);
      const std::vector<double> running =
          classical::lyapunov_running(kappa0, std::numbers::pi / 2.0, pt0, args.steps, args.transient, seed);
      for (std::size_t k = 0; k < running.size(); ++k) {
        const int n = static_cast<int>(k) + 1;
        if (n % args.every == 0 || k + 1 == running.size()) csv.row(kappa0, seed, n, running[k]);
      }
    }
}

namespace {

void write_atomically(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) throw UsageError("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

// Exactly one of --kappa0 / --kappa; kappa0 = 6 kappa.
double resolve_kappa0(const std::optional<double>& kappa0, const std::optional<double>& kappa) {
  require(kappa0.has_value() != kappa.has_value(), "give exactly one of --kappa0 or --kappa");
  return kappa0 ? *kappa0 : kappa0_from_kappa(*kappa);
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pairwise entanglement of symmetric multiqubit states and the quantum kicked top"};
  app.name(argv.empty() ? "qkt" : argv.front());
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write CSV to this file (atomically) instead of stdout");

  DickeArgs dicke;
  auto* dicke_cmd = app.add_subcommand("dicke", "Dicke-state concurrence. Columns: N,M,C_closed,C_numeric");
  dicke_cmd->add_option("--N", dicke.qubits, "Qubit counts (default 15 20 25 30)")->expected(1, -1);
  dicke_cmd->add_option("--M-min", dicke.m_min, "Smallest M");
  dicke_cmd->add_option("--M-max", dicke.m_max, "Largest M");

  EprArgs epr;
  auto* epr_cmd = app.add_subcommand("epr", "EPR-correlated ensembles. Columns: N,C");
  epr_cmd->add_option("--N", epr.qubits, "Ensemble sizes (default 1..50)")->expected(1, -1);

  CoherentArgs coherent;
  auto* coherent_cmd = app.add_subcommand("coherent", "Spin coherent states. Columns: N,eta,c_lambda,C");
  coherent_cmd->add_option("--N", coherent.qubits, "Qubit counts")->expected(1, -1);
  coherent_cmd->add_option("--eta", coherent.etas, "Real coherent-state parameters")->expected(1, -1);

  SeriesArgs series;
  std::string series_j = "3/2";
  std::optional<double> series_kappa0, series_kappa;
  auto* series_cmd = app.add_subcommand(
      "qkt-series", "Kicked-top concurrence per kick. Columns: n,C (plus C_analytic for j=3/2 from |000>)");
  series_cmd->add_option("--j", series_j, "Spin j (e.g. 3/2)")->capture_default_str();
  series_cmd->add_option("--kappa0", series_kappa0, "Twist strength kappa0");
  series_cmd->add_option("--kappa", series_kappa, "kappa = kappa0 / 6");
  series_cmd->add_option("--theta0", series.theta0, "Initial polar angle")->capture_default_str();
  series_cmd->add_option("--phi0", series.phi0, "Initial azimuth")->capture_default_str();
  series_cmd->add_option("--n-max", series.n_max, "Number of kicks")->capture_default_str();

  SweepArgs sweep;
  std::string sweep_j = "3/2";
  auto* sweep_cmd = app.add_subcommand("qkt-sweep", "Time-averaged concurrence over a kappa0 grid. Columns: kappa0,C_timeavg");
  sweep_cmd->add_option("--j", sweep_j, "Spin j")->capture_default_str();
  sweep_cmd->add_option("--kappa0-min", sweep.kappa0_min, "Grid start (default 0)");
  sweep_cmd->add_option("--kappa0-max", sweep.kappa0_max, "Grid end (default pi*j)");
  sweep_cmd->add_option("--points", sweep.points, "Grid points")->capture_default_str();
  sweep_cmd->add_option("--theta0", sweep.theta0, "Initial polar angle")->capture_default_str();
  sweep_cmd->add_option("--phi0", sweep.phi0, "Initial azimuth")->capture_default_str();
  sweep_cmd->add_option("--n-max", sweep.n_max, "Kicks per point")->capture_default_str();
  sweep_cmd->add_option("--burn-in", sweep.burn_in, "Kicks excluded from the average")->capture_default_str();

  Analytic3Args analytic;
  std::optional<double> analytic_kappa0, analytic_kappa;
  auto* analytic_cmd = app.add_subcommand(
      "analytic3", "Closed-form three-qubit results. Columns: n,chi,T_n,U_n_minus_1,abs_alpha2,abs_beta2,C_analytic");
  analytic_cmd->add_option("--kappa0", analytic_kappa0, "Twist strength kappa0");
  analytic_cmd->add_option("--kappa", analytic_kappa, "kappa = kappa0 / 6");
  analytic_cmd->add_option("--n-max", analytic.n_max, "Number of kicks")->capture_default_str();

  LyapunovArgs lyap;
  auto* lyap_cmd = app.add_subcommand("lyapunov", "Finite-time Lyapunov exponents of the classical top. Columns: kappa0,seed,n,lambda_running");
  lyap_cmd->add_option("--kappa0", lyap.kappa0s, "Twist strengths")->expected(1, -1)->required();
  lyap_cmd->add_option("--steps", lyap.steps, "Total kicks including the transient (>= 1000)")->required();
  lyap_cmd->add_option("--seeds", lyap.seeds, "Number of seeds (initial point and tangent)")->capture_default_str();
  lyap_cmd->add_option("--transient", lyap.transient, "Discarded kicks")->capture_default_str();
  lyap_cmd->add_option("--every", lyap.every, "Emit every k-th running estimate")->capture_default_str();
  lyap_cmd->add_option("--theta0", lyap.theta0, "Fixed initial polar angle");
  lyap_cmd->add_option("--phi0", lyap.phi0, "Fixed initial azimuth");

  std::vector<const char*> cargv;
  cargv.reserve(argv.size() + 1);
  if (argv.empty()) cargv.push_back("qkt");
  for (const auto& a : argv) cargv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  std::ostringstream buffer;
  try {
    if (dicke_cmd->parsed()) {
      cmd_dicke(dicke, buffer);
    } else if (epr_cmd->parsed()) {
      cmd_epr(epr, buffer);
    } else if (coherent_cmd->parsed()) {
      cmd_coherent(coherent, buffer);
    } else if (series_cmd->parsed()) {
      series.two_j = parse_two_j(series_j);
      series.kappa0 = resolve_kappa0(series_kappa0, series_kappa);
      cmd_qkt_series(series, buffer);
    } else if (sweep_cmd->parsed()) {
      sweep.two_j = parse_two_j(sweep_j);
      cmd_qkt_sweep(sweep, buffer);
    } else if (analytic_cmd->parsed()) {
      analytic.kappa0 = resolve_kappa0(analytic_kappa0, analytic_kappa);
      cmd_analytic3(analytic, buffer);
    } else if (lyap_cmd->parsed()) {
      cmd_lyapunov(lyap, buffer);
    }
    if (out_path.empty())
      out << buffer.str();
    else
      write_atomically(out_path, buffer.str());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace qkt::cli
