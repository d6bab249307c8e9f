// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "stabsign/stabsign.hpp"

namespace {

using namespace stabsign;

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kTrials = 1'000'000;
const std::vector<double> kGrid = {0.25, 0.5, 0.75, 1, 1.25, 1.5, 1.75, 1.9, 2, 2.5, 3, 4};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome integral_one() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (double a : kGrid) {
    const double err = std::abs(quadrature::pv_integrate_I1(a, 1e-6).value - kPi * kPi / 6);
    worst = std::max(worst, err);
    o.require(err <= 1e-6, fmt("alpha=%g err=%.3g", a, err));
  }
  const double secs = seconds_since(t0);
  o.require(secs < 5.0, fmt("runtime %.2fs >= 5s", secs));
  if (o.pass) o.detail = fmt("max |I1 - pi^2/6| = %.2e, %.2fs", worst, secs);
  return o;
}

Outcome integral_two() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (double a : kGrid) {
    const double err = std::abs(quadrature::integrate_I2(a, 1e-6).value - kPi * kPi / 4);
    worst = std::max(worst, err);
    o.require(err <= 1e-6, fmt("alpha=%g err=%.3g", a, err));
  }
  const double secs = seconds_since(t0);
  o.require(secs < 5.0, fmt("runtime %.2fs >= 5s", secs));
  if (o.pass) o.detail = fmt("max |I2 - pi^2/4| = %.2e, %.2fs", worst, secs);
  return o;
}

Outcome scheme_agreement() {
  Outcome o;
  double worst = 0.0;
  for (double a : kGrid) {
    const double gap = std::abs(quadrature::pv_fold_I1(a, 1e-6).value -
                                quadrature::pv_excision_I1(a, 1e-6).value);
    worst = std::max(worst, gap);
    o.require(gap <= 1e-7, fmt("alpha=%g gap=%.3g", a, gap));
  }
  if (o.pass) o.detail = fmt("max |fold - excision| = %.2e", worst);
  return o;
}

void near(Outcome& o, const char* what, double alpha, double value, double target, double tol) {
  o.require(std::abs(value - target) <= tol,
            std::string(what) + fmt(" alpha=%g value=%.5f target=%.5f", alpha, value, target));
}

Outcome pair_moments() {
  Outcome o;
  for (double a : {0.5, 1.0, 1.5, 1.9}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Alpha alpha(a);
    const auto pair = tally_pair_signs(alpha, kTrials, 4001);
    const auto triple = tally_sign_triples(alpha, kTrials, 4002);
    near(o, "E[sgnX1 sgnX2]", a, pair.product().mean, 1.0 / 3, 0.005);
    near(o, "P[X1>0,X2>0]", a, pair.positive_orthant().mean, 1.0 / 3, 0.005);
    near(o, "E[sgnX1 sgnS]", a, triple.x1_s_product().mean, 0.5, 0.005);
    near(o, "P[X1>0,S>0]", a, triple.x1_s_positive_orthant().mean, 3.0 / 8, 0.005);
    const double secs = seconds_since(t0);
    o.require(secs < 10.0, fmt("alpha=%g runtime %.2fs >= 10s", a, secs));
  }
  if (o.pass) o.detail = "1/3, 1/3, 1/2, 3/8 within 0.005 at alpha 0.5, 1, 1.5, 1.9";
  return o;
}

Outcome gaussian_anchor() {
  Outcome o;
  const Alpha alpha(2.0);
  const double pair_target = 2.0 / kPi * std::asin(0.5);
  const double x1s_target = 2.0 / kPi * std::asin(1.0 / std::sqrt(2.0));
  const double pair = estimate_pair_product(alpha, kTrials, 5001).mean;
  const double x1s = estimate_x1_s_product(alpha, kTrials, 5002).mean;
  near(o, "pair", 2.0, pair, pair_target, 0.005);
  near(o, "x1-s", 2.0, x1s, x1s_target, 0.005);
  if (o.pass) o.detail = fmt("pair %.4f vs %.4f, x1-s %.4f vs 0.5", pair, pair_target, x1s);
  return o;
}

Outcome n_fold() {
  Outcome o;
  const Alpha alpha(1.0);
  for (unsigned n : {3u, 4u, 5u, 6u}) {
    const double target = n % 2 ? 0.0 : 1.0 / (n + 1);
    const double v = estimate_n_product(alpha, n, kTrials, 6000 + n).mean;
    o.require(std::abs(v - target) <= 0.005, fmt("n=%g value=%.5f target=%.5f", n, v, target));
  }
  if (o.pass) o.detail = "n = 3, 4, 5, 6 within 0.005 of 0, 1/5, 0, 1/7";
  return o;
}

Outcome exact_recursion() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto p = paintbox::all_even_probabilities(40);
  for (unsigned n = 0; n <= 40; ++n) {
    const ExactRational expected = n % 2 ? ExactRational(0) : ExactRational(1, n + 1);
    o.require(p[n] == expected, "n=" + std::to_string(n) + " got " + to_string(p[n]));
  }
  const double secs = seconds_since(t0);
  o.require(secs < 1.0, fmt("runtime %.3fs >= 1s", secs));
  if (o.pass) o.detail = fmt("p_n = 1/(n+1) exactly for even n <= 40, 0 for odd; %.3fs", secs);
  return o;
}

Outcome paintbox_equivalence() {
  Outcome o;
  for (unsigned n : {2u, 4u}) {
    const McEstimate freq = paintbox::estimate_all_even_frequency(n, kTrials, 8000 + n);
    const double exact = to_double(paintbox::all_even_probability(n));
    o.require(std::abs(freq.mean - exact) <= 3.0 * freq.std_error,
              fmt("n=%g sim %.5f vs exact %.5f", n, freq.mean, exact));
    for (double a : {0.5, 1.0, 1.5}) {
      const McEstimate stable = estimate_n_product(Alpha(a), n, kTrials, 8100 + n);
      o.require(std::abs(freq.mean - stable.mean) <= 3.0 * combined_std_error(freq, stable),
                fmt("n=%g alpha=%g sim %.5f vs stable", n, a, freq.mean) +
                    fmt(" %.5f", stable.mean));
    }
  }
  if (o.pass) o.detail = "n = 2, 4 against recursion and stable signs (alpha 0.5, 1, 1.5)";
  return o;
}

Outcome divide_and_color() {
  Outcome o;
  double worst = 0.0;
  for (double a : {0.5, 1.0, 1.5}) {
    const dac::Comparison c = dac::compare(Alpha(a), kTrials, 9001);
    worst = std::max(worst, c.max_deviation);
    o.require(c.max_deviation <= 0.005, fmt("alpha=%g deviation %.4f", a, c.max_deviation));
    o.require(c.forbidden_count == 0,
              fmt("alpha=%g forbidden count %g", a, static_cast<double>(c.forbidden_count)));
  }
  if (o.pass) o.detail = fmt("max deviation %.4f, forbidden outcomes 0", worst);
  return o;
}

Outcome cf_suite() {
  Outcome o;
  const double tol = 4.0 / std::sqrt(static_cast<double>(kTrials));
  double worst = 0.0;
  for (double a : {0.5, 1.0, 1.5, 2.0}) {
    const auto direct = sample_sas_many(Alpha(a), kTrials, 10001);
    const auto x1 = sample_threshold_x1_many(Alpha(a), kTrials, 10002);
    for (double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      for (const auto* xs : {&direct, &x1}) {
        const double err = std::abs(empirical_cf(*xs, t) - stable_cf(a, t));
        worst = std::max(worst, err);
        o.require(err <= tol, fmt("alpha=%g t=%g err=%.5f", a, t, err));
        o.require(std::abs(empirical_cf_sine(*xs, t)) <= tol, fmt("alpha=%g t=%g sine", a, t));
      }
    }
  }
  if (o.pass) o.detail = fmt("max |ECF - exp(-|t|^a)| = %.5f <= %.4f", worst, tol);
  return o;
}

Outcome de_finetti() {
  Outcome o;
  const double d = paintbox::definetti_uniformity_stat(10'000, 10'000, 11001);
  const double control =
      paintbox::definetti_uniformity_stat(10'000, 10'000, 11001, paintbox::Kind::SingleBox);
  o.require(d <= paintbox::kUniformityThreshold, fmt("KS %.4f > %.3f", d, paintbox::kUniformityThreshold));
  o.require(control >= 0.4, fmt("single-box control KS %.4f < 0.4", control));
  if (o.pass) o.detail = fmt("KS %.4f <= %.2f, single-box control %.4f", d, paintbox::kUniformityThreshold, control);
  return o;
}

Outcome determinism() {
  Outcome o;
  // Default configuration: the same run as a bare `stabsign report`.
  report::RunConfig cfg;
  cfg.command = report::Command::Report;
  cfg.threads = 1;
  const std::string first = report::to_json(report::run(cfg), false).dump();
  cfg.threads = 4;
  const report::Report second_rep = report::run(cfg);
  const std::string second = report::to_json(second_rep, false).dump();
  o.require(first == second, "deterministic sections differ between 1 and 4 threads");
  o.require(second_rep.pass, "report did not pass");
  if (o.pass) {
    o.detail = "identical " + std::to_string(first.size()) + "-byte deterministic sections (" +
               std::to_string(second_rep.checks.size()) + " checks)";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1  integral I1 = pi^2/6 on the alpha grid", integral_one},
      {"AC2  integral I2 = pi^2/4 on the alpha grid", integral_two},
      {"AC3  PV fold and excision schemes agree", scheme_agreement},
      {"AC4  Monte Carlo pair and X1-S moments", pair_moments},
      {"AC5  Gaussian anchor (alpha = 2)", gaussian_anchor},
      {"AC6  n-fold sign products", n_fold},
      {"AC7  exact paintbox recursion", exact_recursion},
      {"AC8  paintbox / stable-sign equivalence", paintbox_equivalence},
      {"AC9  divide-and-color sign law", divide_and_color},
      {"AC10 sampler characteristic functions", cf_suite},
      {"AC11 de Finetti mixing measure is uniform", de_finetti},
      {"AC12 report determinism across thread counts", determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
