#ifndef STABSIGN_REPORT_HPP
#define STABSIGN_REPORT_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <functional>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabsign/alpha.hpp"
#include "stabsign/dac_model.hpp"
#include "stabsign/exact_rational.hpp"
#include "stabsign/paintbox.hpp"
#include "stabsign/quadrature.hpp"
#include "stabsign/sign_mc.hpp"
#include "stabsign/stable_sampler.hpp"

namespace stabsign::report {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Command { Integrate, McSigns, Paintbox, DacCheck, Report };
enum class Format { Json, Csv };
enum class Which { I1, I2, Both };

inline std::string to_string(Command c) {
  switch (c) {
    case Command::Integrate: return "integrate";
    case Command::McSigns: return "mc-signs";
    case Command::Paintbox: return "paintbox";
    case Command::DacCheck: return "dac-check";
    case Command::Report: return "report";
  }
  return "?";
}

inline std::string to_string(Format f) { return f == Format::Json ? "json" : "csv"; }

inline std::string to_string(Which w) {
  switch (w) {
    case Which::I1: return "I1";
    case Which::I2: return "I2";
    case Which::Both: return "both";
  }
  return "?";
}

/// Invalid run configuration (exit status 2 at the CLI).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultSeed = 42;
inline const char* const kSeedEnvVar = "STABSIGN_SEED";

struct RunConfig {
  Command command = Command::Report;
  std::vector<double> alpha_grid = {0.5, 1.0, 1.5, 2.0};
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-8;
  std::vector<unsigned> n_values = {2, 3, 4, 5, 6};
  Format output_format = Format::Json;
  std::optional<std::string> output_path;
  Which which = Which::Both;
  std::size_t ks_m = 10'000;
  std::size_t ks_replicates = 10'000;
  /// Worker threads for Monte Carlo; never affects the deterministic output.
  unsigned threads = 0;

  bool uses_monte_carlo() const {
    return command == Command::McSigns || command == Command::Paintbox ||
           command == Command::DacCheck || command == Command::Report;
  }

  /// `report` mixes quadrature and Monte Carlo; grid points outside the
  /// sampler domain only get the integral checks there. The dedicated MC
  /// commands reject them.
  void validate() const {
    if (alpha_grid.empty()) throw ConfigError("alpha grid is empty");
    for (double a : alpha_grid) {
      if (!std::isfinite(a) || a <= 0.0) {
        throw ConfigError("every alpha must be finite and > 0, got " + std::to_string(a));
      }
      const bool mc_only = command == Command::McSigns || command == Command::DacCheck;
      if (mc_only && !Alpha(a).sampler_valid()) {
        throw ConfigError("Monte Carlo commands need 0.05 <= alpha <= 2, got " +
                          std::to_string(a));
      }
    }
    if (uses_monte_carlo() && trials < kMinTrials) {
      throw ConfigError("Monte Carlo commands need --trials >= 10000");
    }
    if (command == Command::DacCheck && trials < dac::kMinCompareTrials) {
      throw ConfigError("dac-check needs --trials >= 100000");
    }
    if (!std::isfinite(tol) || tol < 1e-10) throw ConfigError("--tol must be >= 1e-10");
    for (unsigned n : n_values) {
      if (n > paintbox::kMaxExactOrder) throw ConfigError("--n values must be <= 200");
      const bool mc_n = command == Command::McSigns || command == Command::Report;
      if (mc_n && (n == 0 || n > kMaxProductOrder)) {
        throw ConfigError("n-fold sign products need 1 <= n <= 32, got " + std::to_string(n));
      }
    }
    if ((command == Command::Paintbox || command == Command::Report) &&
        (ks_m == 0 || ks_replicates < 1000)) {
      throw ConfigError("--ks-m must be >= 1 and --ks-replicates >= 1000");
    }
  }
};

/// One verified quantity. `value`/`target` are numbers, or exact rationals
/// rendered as "p/q" strings.
struct CheckRecord {
  std::string name;
  std::optional<double> alpha;
  std::optional<unsigned> n;
  std::optional<double> t;
  nlohmann::ordered_json value;
  nlohmann::ordered_json target;
  std::string target_expr;
  double tolerance = 0.0;
  std::optional<double> std_error;
  bool pass = false;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::optional<std::string> error;
  double runtime_ms = 0.0;  // reported in the metadata block only
};

struct Report {
  std::string version = kToolVersion;
  RunConfig config;
  std::vector<CheckRecord> checks;
  bool pass = false;
  std::string started_at;
};

// -- targets, evaluated in long double -------------------------------------

namespace targets {
inline double pi_squared_over(int d) {
  const long double pi = std::numbers::pi_v<long double>;
  return static_cast<double>(pi * pi / static_cast<long double>(d));
}
inline double gaussian_orthant_product(long double rho) {
  return static_cast<double>(2.0L / std::numbers::pi_v<long double> * std::asin(rho));
}
inline double product_moment(unsigned n) { return n % 2 ? 0.0 : 1.0 / (n + 1.0); }
}  // namespace targets

/// Monte Carlo checks pass at |estimate - target| <= max(0.005, 4/sqrt(trials)).
inline double mc_tolerance(std::uint64_t trials) {
  return std::max(0.005, 4.0 / std::sqrt(static_cast<double>(trials)));
}

/// Independent seeds per family of checks, derived from the run seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

enum SeedTag : std::uint64_t {
  kPairTag = 1,
  kTripleTag = 2,
  kProductTag = 3,
  kCfDirectTag = 4,
  kCfThresholdTag = 5,
  kPaintboxTag = 6,
  kMixingTag = 7,
  kDacTag = 8,
};

namespace detail {

class Runner {
 public:
  explicit Runner(const RunConfig& cfg) : cfg_(cfg) {
    mc_.parallelism.threads = cfg.threads;
  }

  std::vector<CheckRecord> take() { return std::move(records_); }

  void integrals(bool i1, bool i2) {
    for (double a : cfg_.alpha_grid) {
      if (i1) {
        timed([&] {
          CheckRecord r = base("integral_I1", a);
          r.target = targets::pi_squared_over(6);
          r.target_expr = "pi^2/6";
          r.tolerance = cfg_.tol;
          const quadrature::QuadResult q = quadrature::pv_integrate_I1(a, cfg_.tol);
          r.value = q.value;
          r.pass = std::abs(q.value - r.target.get<double>()) <= r.tolerance;
          r.details["error_estimate"] = q.error_estimate;
          r.details["excision_value"] = q.excision_diagnostic->extrapolated;
          return r;
        });
        timed([&] {
          CheckRecord r = base("pv_scheme_agreement", a);
          r.target = 0.0;
          r.target_expr = "0";
          r.tolerance = quadrature::kSchemeAgreement;
          const double fold = quadrature::pv_fold_I1(a, cfg_.tol).value;
          const double excision = quadrature::pv_excision_I1(a, cfg_.tol).value;
          r.value = std::abs(fold - excision);
          r.pass = r.value.get<double>() <= r.tolerance;
          r.details["fold_value"] = fold;
          r.details["excision_value"] = excision;
          return r;
        });
      }
      if (i2) {
        timed([&] {
          CheckRecord r = base("integral_I2", a);
          r.target = targets::pi_squared_over(4);
          r.target_expr = "pi^2/4";
          r.tolerance = cfg_.tol;
          const quadrature::QuadResult q = quadrature::integrate_I2(a, cfg_.tol);
          r.value = q.value;
          r.pass = std::abs(q.value - r.target.get<double>()) <= r.tolerance;
          r.details["error_estimate"] = q.error_estimate;
          return r;
        });
      }
    }
  }

  void sampler_cf() {
    static constexpr double kTs[] = {0.25, 0.5, 1.0, 2.0, 4.0};
    for (double a : mc_alphas()) {
      const Alpha alpha(a);
      const double tol = 4.0 / std::sqrt(static_cast<double>(cfg_.trials));
      for (int route = 0; route < 2; ++route) {
        const bool direct = route == 0;
        std::vector<double> xs;
        const auto t0 = std::chrono::steady_clock::now();
        xs = direct ? sample_sas_many(alpha, cfg_.trials, seed(kCfDirectTag), mc_.parallelism)
                    : sample_threshold_x1_many(alpha, cfg_.trials, seed(kCfThresholdTag),
                                               mc_.parallelism);
        const double sample_ms = elapsed_ms(t0);
        for (double t : kTs) {
          timed([&] {
            CheckRecord r = base(direct ? "sampler_cf_direct" : "sampler_cf_threshold_x1", a);
            r.t = t;
            r.target = stable_cf(a, t);
            r.target_expr = "exp(-|t|^alpha)";
            r.tolerance = tol;
            const double re = empirical_cf(xs, t);
            const double im = empirical_cf_sine(xs, t);
            r.value = re;
            r.details["sine_part"] = im;
            r.pass = std::abs(re - r.target.get<double>()) <= tol && std::abs(im) <= tol;
            return r;
          });
        }
        if (!records_.empty()) records_.back().runtime_ms += sample_ms;
      }
    }
  }

  void sign_moments() {
    for (double a : mc_alphas()) {
      const Alpha alpha(a);
      const PairSignCounts pair = tally_pair_signs(alpha, cfg_.trials, seed(kPairTag), mc_);
      const SignTripleCounts triple =
          tally_sign_triples(alpha, cfg_.trials, seed(kTripleTag), mc_);
      const bool gaussian = a == 2.0;
      mc_record("mc_pair_product", a, std::nullopt, pair.product(),
                gaussian ? targets::gaussian_orthant_product(0.5L) : 1.0 / 3.0,
                gaussian ? "(2/pi) asin(1/2)" : "1/3");
      mc_record("mc_pair_orthant", a, std::nullopt, pair.positive_orthant(), 1.0 / 3.0, "1/3");
      mc_record("mc_x1_s_product", a, std::nullopt, triple.x1_s_product(),
                gaussian ? targets::gaussian_orthant_product(std::sqrt(0.5L)) : 0.5,
                gaussian ? "(2/pi) asin(1/sqrt(2))" : "1/2");
      mc_record("mc_x1_s_orthant", a, std::nullopt, triple.x1_s_positive_orthant(), 3.0 / 8.0,
                "3/8");
    }
  }

  void n_products() {
    for (double a : mc_alphas()) {
      for (unsigned n : cfg_.n_values) {
        timed([&] {
          const McEstimate e =
              estimate_n_product(Alpha(a), n, cfg_.trials, seed(kProductTag), mc_);
          return mc_check("mc_n_product", a, n, e, targets::product_moment(n),
                          n % 2 ? "0" : "1/(n+1)");
        });
      }
    }
  }

  /// Bridge between the quadrature and the sign covariance:
  /// (2/pi^2) I1 = E[sgn X_1 sgn X_2].
  void integral_vs_mc() {
    for (double a : mc_alphas()) {
      timed([&] {
        CheckRecord r = base("integral_vs_mc_pair_product", a);
        const double integral = quadrature::pv_integrate_I1(a, cfg_.tol).value;
        const McEstimate e = estimate_pair_product(Alpha(a), cfg_.trials, seed(kPairTag), mc_);
        r.value = 2.0 / (std::numbers::pi * std::numbers::pi) * integral;
        r.target = e.mean;
        r.target_expr = "E[sgn X1 sgn X2] (Monte Carlo)";
        r.std_error = e.std_error;
        r.tolerance = 3.0 * e.std_error;
        r.pass = std::abs(r.value.get<double>() - e.mean) <= r.tolerance;
        return r;
      });
    }
  }

  void paintbox_exact() {
    unsigned n_max = 0;
    for (unsigned n : cfg_.n_values) n_max = std::max(n_max, n);
    const auto p = paintbox::all_even_probabilities(n_max);
    for (unsigned n : cfg_.n_values) {
      timed([&] {
        CheckRecord r = base("paintbox_exact", std::nullopt, n);
        const ExactRational expected =
            n % 2 ? ExactRational(0) : ExactRational(1, static_cast<long long>(n) + 1);
        r.value = stabsign::to_string(p[n]);
        r.target = stabsign::to_string(expected);
        r.target_expr = n % 2 ? "0" : "1/(n+1)";
        r.tolerance = 0.0;
        r.pass = p[n] == expected;
        return r;
      });
    }
  }

  void paintbox_simulation(bool against_stable) {
    for (unsigned n : cfg_.n_values) {
      if (n == 0) continue;
      const McEstimate freq =
          paintbox::estimate_all_even_frequency(n, cfg_.trials, seed(kPaintboxTag), mc_);
      timed([&] {
        CheckRecord r = base("paintbox_sim_all_even", std::nullopt, n);
        const double exact = to_double(paintbox::all_even_probability(n));
        const double se = std::sqrt(exact * (1.0 - exact) / static_cast<double>(cfg_.trials));
        r.value = freq.mean;
        r.target = exact;
        r.target_expr = n % 2 ? "0" : "1/(n+1)";
        r.std_error = se;
        r.tolerance = 3.0 * se;
        r.pass = std::abs(freq.mean - exact) <= r.tolerance;
        return r;
      });
      if (!against_stable || n > kMaxProductOrder) continue;
      for (double a : mc_alphas()) {
        timed([&] {
          CheckRecord r = base("paintbox_vs_stable_n_product", a, n);
          const McEstimate stable =
              estimate_n_product(Alpha(a), n, cfg_.trials, seed(kProductTag), mc_);
          r.value = freq.mean;
          r.target = stable.mean;
          r.target_expr = "E[sgn(X1...Xn)] (Monte Carlo)";
          r.std_error = combined_std_error(freq, stable);
          r.tolerance = 3.0 * *r.std_error;
          r.pass = std::abs(freq.mean - stable.mean) <= r.tolerance;
          return r;
        });
      }
    }
  }

  void mixing_measure() {
    timed([&] {
      CheckRecord r = base("definetti_uniformity_ks");
      r.value = paintbox::definetti_uniformity_stat(cfg_.ks_m, cfg_.ks_replicates,
                                                    seed(kMixingTag), paintbox::Kind::Geometric,
                                                    mc_.parallelism);
      r.target = 0.0;
      r.target_expr = "KS distance to Uniform[0,1]";
      r.tolerance = paintbox::kUniformityThreshold;
      r.pass = r.value.get<double>() <= r.tolerance;
      r.details["m"] = cfg_.ks_m;
      r.details["replicates"] = cfg_.ks_replicates;
      return r;
    });
    timed([&] {
      CheckRecord r = base("definetti_single_box_control");
      r.value = paintbox::definetti_uniformity_stat(cfg_.ks_m, cfg_.ks_replicates,
                                                    seed(kMixingTag), paintbox::Kind::SingleBox,
                                                    mc_.parallelism);
      r.target = 0.5;
      r.target_expr = "KS of a two-point law vs uniform";
      r.tolerance = 0.1;
      r.pass = r.value.get<double>() >= 0.4;
      return r;
    });
  }

  void dac() {
    const auto exact = dac::dac_pmf_exact(dac::PartitionWeights::symmetric());
    static constexpr const char* kExpected[8] = {"1/4", "1/8", "1/8", "0", "0", "1/8", "1/8", "1/4"};
    for (std::size_t k = 0; k < 8; ++k) {
      timed([&] {
        CheckRecord r = base("dac_pmf_exact");
        r.details["outcome"] = sign_triple_label(k);
        r.value = stabsign::to_string(exact[k]);
        r.target = kExpected[k];
        r.target_expr = "divide and color, weights 1/2 on {{1,2},{3}} and {{1,3},{2}}";
        r.tolerance = 0.0;
        r.pass = r.value == r.target;
        return r;
      });
    }
    for (double a : mc_alphas()) {
      const dac::Comparison c = dac::compare(Alpha(a), cfg_.trials, seed(kDacTag),
                                             dac::PartitionWeights::symmetric(), mc_);
      timed([&] {
        CheckRecord r = base("dac_max_deviation", a);
        r.value = c.max_deviation;
        r.target = 0.0;
        r.target_expr = "max |empirical - exact| over 8 outcomes";
        r.tolerance = mc_tolerance(cfg_.trials);
        r.pass = c.max_deviation <= r.tolerance;
        nlohmann::ordered_json freqs = nlohmann::ordered_json::array();
        for (double p : c.empirical.probs) freqs.push_back(p);
        r.details["empirical"] = freqs;
        return r;
      });
      timed([&] {
        CheckRecord r = base("dac_forbidden_outcomes", a);
        r.value = c.forbidden_count;
        r.target = 0;
        r.target_expr = "count of (-1,+1,+1) and (+1,-1,-1)";
        r.tolerance = 0.0;
        r.pass = c.forbidden_count == 0;
        return r;
      });
    }
  }

 private:
  std::vector<double> mc_alphas() const {
    std::vector<double> out;
    for (double a : cfg_.alpha_grid) {
      if (Alpha(a).sampler_valid()) out.push_back(a);
    }
    return out;
  }

  std::uint64_t seed(SeedTag tag) const { return derive_seed(cfg_.seed, tag); }

  static CheckRecord base(std::string name, std::optional<double> alpha = std::nullopt,
                          std::optional<unsigned> n = std::nullopt) {
    CheckRecord r;
    r.name = std::move(name);
    r.alpha = alpha;
    r.n = n;
    return r;
  }

  static double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }

  static CheckRecord mc_check(std::string name, double a, std::optional<unsigned> n,
                              const McEstimate& e, double target, std::string expr) {
    CheckRecord r = base(std::move(name), a, n);
    r.value = e.mean;
    r.target = target;
    r.target_expr = std::move(expr);
    r.std_error = e.std_error;
    r.tolerance = mc_tolerance(e.trials);
    r.pass = std::abs(e.mean - target) <= r.tolerance;
    r.details["seed"] = e.seed;
    r.details["zero_sign_events"] = e.zero_sign_events;
    return r;
  }

  void mc_record(std::string name, double a, std::optional<unsigned> n, const McEstimate& e,
                 double target, std::string expr) {
    timed([&] { return mc_check(std::move(name), a, n, e, target, std::move(expr)); });
  }

  /// Runs `make`, stamps its runtime, and turns an exception into a failed
  /// record carrying the message.
  void timed(const std::function<CheckRecord()>& make) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckRecord r;
    try {
      r = make();
    } catch (const std::exception& ex) {
      r.name = "error";
      r.value = nullptr;
      r.target = nullptr;
      r.pass = false;
      r.error = ex.what();
    }
    r.runtime_ms = elapsed_ms(t0);
    records_.push_back(std::move(r));
  }

  const RunConfig& cfg_;
  McOptions mc_;
  std::vector<CheckRecord> records_;
};

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace detail

/// Runs the checks selected by `config.command`, in this fixed order:
///   integrate: integral_I1 + pv_scheme_agreement (per alpha), integral_I2
///   mc-signs:  sampler_cf_direct, sampler_cf_threshold_x1, mc_pair_product,
///              mc_pair_orthant, mc_x1_s_product, mc_x1_s_orthant, mc_n_product
///   paintbox:  paintbox_exact, paintbox_sim_all_even, definetti_uniformity_ks,
///              definetti_single_box_control
///   dac-check: dac_pmf_exact (8 outcomes), dac_max_deviation,
///              dac_forbidden_outcomes
///   report:    integrate, mc-signs, integral_vs_mc_pair_product, paintbox
///              (with paintbox_vs_stable_n_product), dac-check
inline Report run(const RunConfig& config) {
  config.validate();
  Report rep;
  rep.config = config;
  rep.started_at = detail::utc_timestamp();
  detail::Runner runner(config);
  const bool i1 = config.which != Which::I2;
  const bool i2 = config.which != Which::I1;
  switch (config.command) {
    case Command::Integrate:
      runner.integrals(i1, i2);
      break;
    case Command::McSigns:
      runner.sampler_cf();
      runner.sign_moments();
      runner.n_products();
      break;
    case Command::Paintbox:
      runner.paintbox_exact();
      runner.paintbox_simulation(false);
      runner.mixing_measure();
      break;
    case Command::DacCheck:
      runner.dac();
      break;
    case Command::Report:
      runner.integrals(true, true);
      runner.sampler_cf();
      runner.sign_moments();
      runner.n_products();
      runner.integral_vs_mc();
      runner.paintbox_exact();
      runner.paintbox_simulation(true);
      runner.mixing_measure();
      runner.dac();
      break;
  }
  rep.checks = runner.take();
  rep.pass = !rep.checks.empty();
  for (const CheckRecord& r : rep.checks) rep.pass = rep.pass && r.pass;
  return rep;
}

inline nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = to_string(c.command);
  j["alpha_grid"] = c.alpha_grid;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["tol"] = c.tol;
  j["n_values"] = c.n_values;
  j["which"] = to_string(c.which);
  j["ks_m"] = c.ks_m;
  j["ks_replicates"] = c.ks_replicates;
  j["format"] = to_string(c.output_format);
  return j;
}

/// Canonical JSON. Everything outside "metadata" is a function of the
/// configuration alone; "metadata" (thread count, timestamps, runtimes) is not.
inline nlohmann::ordered_json to_json(const Report& rep, bool include_metadata = true) {
  nlohmann::ordered_json j;
  j["version"] = rep.version;
  j["config"] = config_json(rep.config);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  nlohmann::ordered_json runtimes = nlohmann::ordered_json::array();
  for (const CheckRecord& r : rep.checks) {
    nlohmann::ordered_json c;
    c["name"] = r.name;
    if (r.alpha) c["alpha"] = *r.alpha;
    if (r.n) c["n"] = *r.n;
    if (r.t) c["t"] = *r.t;
    c["value"] = r.value;
    c["target"] = r.target;
    c["target_expr"] = r.target_expr;
    c["tolerance"] = r.tolerance;
    if (r.std_error) c["std_error"] = *r.std_error;
    c["pass"] = r.pass;
    if (!r.details.empty()) c["details"] = r.details;
    if (r.error) c["error"] = *r.error;
    checks.push_back(std::move(c));
    runtimes.push_back(r.runtime_ms);
  }
  j["checks"] = std::move(checks);
  j["pass"] = rep.pass;
  if (include_metadata) {
    nlohmann::ordered_json meta;
    meta["deterministic"] = false;
    meta["started_at"] = rep.started_at;
    meta["threads"] = Parallelism{rep.config.threads}.resolved();
    meta["runtime_ms"] = std::move(runtimes);
    meta["sampler"] =
        "symmetric Chambers-Mallows-Stuck; alpha == 1 via tan(U); near-1 alphas use the "
        "generic transform, which is continuous there for beta = 0";
    j["metadata"] = std::move(meta);
  }
  return j;
}

/// One check per row; CSV has no metadata block.
inline std::string to_csv(const Report& rep) {
  auto cell = [](const nlohmann::ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return std::string();
    return v.dump();
  };
  auto num = [](double x) { return nlohmann::ordered_json(x).dump(); };
  std::ostringstream os;
  os << "name,alpha,n,t,value,target,tolerance,std_error,pass\n";
  for (const CheckRecord& r : rep.checks) {
    os << r.name << ',' << (r.alpha ? num(*r.alpha) : "") << ','
       << (r.n ? std::to_string(*r.n) : "") << ',' << (r.t ? num(*r.t) : "") << ','
       << cell(r.value) << ',' << cell(r.target) << ',' << num(r.tolerance) << ','
       << (r.std_error ? num(*r.std_error) : "") << ',' << (r.pass ? "true" : "false") << '\n';
  }
  os << "overall,,,,,,,," << (rep.pass ? "true" : "false") << '\n';
  return os.str();
}

inline std::string render(const Report& rep) {
  if (rep.config.output_format == Format::Csv) return to_csv(rep);
  return to_json(rep).dump(2) + "\n";
}

}  // namespace stabsign::report

#endif  // STABSIGN_REPORT_HPP
