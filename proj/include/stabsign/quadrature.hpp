#ifndef STABSIGN_QUADRATURE_HPP
#define STABSIGN_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "stabsign/errors.hpp"
#include "stabsign/tanh_sinh.hpp"

// The two angular integrals over (0, pi)
//
//   I1(alpha) = PV int log(|cos|^a + |sin|^a + |cos + sin|^a) / (a cos sin)
//   I2(alpha) =    int log(|sin|^a / 2 + |cos + 2^{-1/a} sin|^a) / (a cos sin)
//
// whose values are pi^2/6 and pi^2/4 for every alpha > 0.

namespace stabsign::quadrature {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;
inline constexpr double kQuarterPi = 0.25 * std::numbers::pi;

enum class IntegrandId { I1, I2 };

inline std::string to_string(IntegrandId id) { return id == IntegrandId::I1 ? "I1" : "I2"; }

struct SingularityCatalog {
  std::vector<double> pv_poles;
  std::vector<double> removable_points;
  std::vector<double> log_points;
  std::vector<double> kink_points;
};

struct ExcisionDiagnostic {
  std::vector<double> epsilons;        // eps_k = eps_0 2^-k
  std::vector<double> partial_values;  // integral with the three poles excised by eps_k
  std::vector<double> exponents;       // powers of eps eliminated, in order
  double extrapolated = 0.0;
  double extrapolation_error = 0.0;
  double fold_value = 0.0;  // strategy A, for side-by-side reporting
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
  std::optional<ExcisionDiagnostic> excision_diagnostic;
};

namespace detail {

inline void require_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw DomainError("alpha must be finite and > 0, got " + std::to_string(alpha));
  }
}

inline void require_tol(double tol) {
  if (!(tol >= 1e-10) || !std::isfinite(tol)) {
    throw std::invalid_argument("tol must be >= 1e-10, got " + std::to_string(tol));
  }
}

/// log(sum_i t_i^alpha) for t_i >= 0, factoring out the largest term so that
/// neither large nor small alpha over- or underflows.
template <std::size_t N>
double log_power_sum(double alpha, const std::array<double, N>& terms) {
  std::size_t imax = 0;
  for (std::size_t i = 1; i < N; ++i) {
    if (terms[i] > terms[imax]) imax = i;
  }
  const double m = terms[imax];
  double rest = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    if (i != imax) rest += std::pow(terms[i] / m, alpha);
  }
  return alpha * std::log(m) + std::log1p(rest);
}

}  // namespace detail

/// First integrand at a given (cos theta, sin theta). Callers guarantee
/// c != 0 and s != 0.
inline double integrand1_cs(double alpha, double c, double s) {
  const double num =
      detail::log_power_sum<3>(alpha, {std::abs(c), std::abs(s), std::abs(c + s)});
  return num / (alpha * c * s);
}

/// Second integrand at a given (cos theta, sin theta).
inline double integrand2_cs(double alpha, double c, double s) {
  const double k = std::exp2(-1.0 / alpha);
  // |s|^a / 2 == (2^{-1/a} |s|)^a
  const double num = detail::log_power_sum<2>(alpha, {k * std::abs(s), std::abs(c + k * s)});
  return num / (alpha * c * s);
}

/// theta*(alpha) in (pi/2, pi), the zero of cos + 2^{-1/alpha} sin.
inline double integrand2_kink(double alpha) {
  detail::require_alpha(alpha);
  return kPi - std::atan(std::exp2(1.0 / alpha));
}

namespace detail {

inline void require_interior(double theta) {
  if (!(theta > 0.0 && theta < kPi) || theta == kHalfPi) {
    throw DomainError("theta must lie in (0, pi) minus {pi/2}, got " + std::to_string(theta));
  }
}

}  // namespace detail

inline double integrand1(double alpha, double theta) {
  detail::require_alpha(alpha);
  detail::require_interior(theta);
  return integrand1_cs(alpha, std::cos(theta), std::sin(theta));
}

inline double integrand2(double alpha, double theta) {
  detail::require_alpha(alpha);
  detail::require_interior(theta);
  if (theta == integrand2_kink(alpha)) {
    throw DomainError("integrand2 is evaluated at its kink theta*; use integrand2_limit");
  }
  return integrand2_cs(alpha, std::cos(theta), std::sin(theta));
}

/// Value of the second integrand at a catalog point, as a limit.
/// theta in {0, pi/2, pi, theta*}; +-infinity where the limit diverges
/// (theta = 0 or pi with alpha < 1, an integrable singularity).
inline double integrand2_limit(double alpha, double theta) {
  detail::require_alpha(alpha);
  if (theta == kHalfPi) return std::exp2(1.0 / alpha - 1.0);
  if (theta == 0.0 || theta == kPi) {
    if (alpha > 1.0) return std::exp2(-1.0 / alpha);
    if (alpha == 1.0) return theta == 0.0 ? 1.0 : 0.0;
    return theta == 0.0 ? std::numeric_limits<double>::infinity()
                        : -std::numeric_limits<double>::infinity();
  }
  if (theta == integrand2_kink(alpha)) {
    // The |.|^alpha term vanishes; the rest is smooth.
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return (alpha * std::log(s) - std::log(2.0)) / (alpha * c * s);
  }
  throw DomainError("integrand2_limit: " + std::to_string(theta) + " is not a catalog point");
}

inline SingularityCatalog classify_singularities(IntegrandId id, double alpha) {
  detail::require_alpha(alpha);
  SingularityCatalog cat;
  if (id == IntegrandId::I1) {
    cat.pv_poles = {0.0, kHalfPi, kPi};
    // cos + sin = 0; a true kink only for alpha < 1 but always a breakpoint.
    cat.kink_points = {3.0 * kQuarterPi};
  } else {
    cat.removable_points = {0.0, kHalfPi, kPi};
    cat.log_points = {integrand2_kink(alpha)};
  }
  return cat;
}

// ---------------------------------------------------------------------------
// Local coordinates. (0, pi) is cut into four quarter-panels, each measured
// by its distance x in (0, pi/4) from the nearest multiple of pi/2, so that
// cos and sin are exact near every pole.

enum class Anchor { Zero, HalfPiBelow, HalfPiAbove, Pi };

inline constexpr std::array<Anchor, 4> kAnchors = {Anchor::Zero, Anchor::HalfPiBelow,
                                                   Anchor::HalfPiAbove, Anchor::Pi};

struct CosSin {
  double c;
  double s;
};

inline CosSin local_cos_sin(Anchor anchor, double x) {
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  switch (anchor) {
    case Anchor::Zero:
      return {cx, sx};
    case Anchor::HalfPiBelow:
      return {sx, cx};
    case Anchor::HalfPiAbove:
      return {-sx, cx};
    case Anchor::Pi:
      return {-cx, sx};
  }
  return {cx, sx};
}

/// f(theta) + f(pi - theta) for the first integrand, theta in (0, pi/2),
/// given a = cos theta > 0 and b = sin theta > 0. The three principal-value
/// poles cancel inside this combination; it is bounded on (0, pi/2) and
/// symmetric under theta -> pi/2 - theta. Evaluated as
/// log1p((A - B) / B) / (alpha a b) with A - B = (a+b)^alpha - |a-b|^alpha
/// formed through expm1, so there is no cancellation near the poles.
inline double folded_integrand1(double alpha, double a, double b) {
  const double m = a + b;
  const double lo = std::min(a, b);
  const double gap = std::abs(a - b) / m;
  const double diff = -std::expm1(alpha * std::log1p(-2.0 * lo / m));
  const double base = std::pow(a / m, alpha) + std::pow(b / m, alpha) + std::pow(gap, alpha);
  return std::log1p(diff / base) / (alpha * a * b);
}

/// Strategy A: fold theta -> pi - theta, then theta -> pi/2 - theta; the
/// principal value becomes 2 * int_0^{pi/4} folded_integrand1, an ordinary
/// bounded integral.
inline QuadResult pv_fold_I1(double alpha, double tol) {
  detail::require_alpha(alpha);
  detail::require_tol(tol);
  auto g = [alpha](double x) { return folded_integrand1(alpha, std::cos(x), std::sin(x)); };
  const quad::PanelResult r = quad::integrate(g, 0.0, kQuarterPi, 0.5 * tol);
  return {2.0 * r.value, 2.0 * r.error_estimate, r.panels, std::nullopt};
}

namespace detail {

/// Integral of the first integrand over (0, pi) with (eps-neighbourhoods of)
/// 0, pi/2 and pi removed, one common eps, integrating the raw integrand
/// panel by panel.
inline double excised_I1(double alpha, double eps, double tol, int& panels) {
  double total = 0.0;
  for (Anchor anchor : kAnchors) {
    auto f = [alpha, anchor](double x) {
      const CosSin cs = local_cos_sin(anchor, x);
      return integrand1_cs(alpha, cs.c, cs.s);
    };
    const quad::PanelResult r = quad::integrate(f, eps, kQuarterPi, 0.25 * tol);
    total += r.value;
    panels += r.panels;
  }
  return total;
}

/// Powers of eps in the expansion of the excised integral: the folded
/// integrand is a double series in x and x^alpha, so the excised part is a
/// combination of eps^{j alpha + m + 1}. Returns the first `count` distinct
/// exponents in increasing order.
inline std::vector<double> excision_exponents(double alpha, std::size_t count) {
  std::vector<double> p;
  for (std::size_t m = 0; m <= count; ++m) {
    for (std::size_t j = 0; j <= count; ++j) {
      const double e = static_cast<double>(j) * alpha + static_cast<double>(m) + 1.0;
      if (e > static_cast<double>(count) + 2.0) break;
      p.push_back(e);
    }
  }
  std::sort(p.begin(), p.end());
  std::vector<double> out;
  for (double e : p) {
    if (out.empty() || e - out.back() > 1e-9 * e) out.push_back(e);
  }
  if (out.size() > count) out.resize(count);
  return out;
}

}  // namespace detail

struct ExcisionOptions {
  double eps0 = 1.0 / 16.0;
  int levels = 10;           // eps_0 .. eps_0 2^-levels
  double panel_tol = 1e-13;  // per excised integral
};

/// Strategy B: excise symmetric eps-neighbourhoods of all three poles for
/// eps_k = eps_0 2^-k and extrapolate eps -> 0 by Richardson elimination of
/// the known powers of eps.
inline QuadResult pv_excision_I1(double alpha, double tol, const ExcisionOptions& opt = {}) {
  detail::require_alpha(alpha);
  detail::require_tol(tol);
  ExcisionDiagnostic diag;
  int panels = 0;
  const auto levels = static_cast<std::size_t>(opt.levels);
  for (std::size_t k = 0; k <= levels; ++k) {
    const double eps = std::ldexp(opt.eps0, -static_cast<int>(k));
    diag.epsilons.push_back(eps);
    diag.partial_values.push_back(detail::excised_I1(alpha, eps, opt.panel_tol, panels));
  }
  diag.exponents = detail::excision_exponents(alpha, levels);

  // table[k] holds the k-th entry of the current column.
  std::vector<double> table = diag.partial_values;
  double previous_corner = table.back();
  for (std::size_t col = 0; col < diag.exponents.size(); ++col) {
    const double r = std::exp2(diag.exponents[col]);
    previous_corner = table.back();
    std::vector<double> next;
    for (std::size_t k = 1; k < table.size(); ++k) {
      next.push_back((r * table[k] - table[k - 1]) / (r - 1.0));
    }
    table = std::move(next);
  }
  diag.extrapolated = table.back();
  diag.extrapolation_error =
      std::max(std::abs(diag.extrapolated - previous_corner), 4.0 * opt.panel_tol);

  QuadResult out;
  out.value = diag.extrapolated;
  out.error_estimate = diag.extrapolation_error;
  out.subdivisions = panels;
  out.excision_diagnostic = std::move(diag);
  if (out.error_estimate > tol) {
    throw ConvergenceError("I1 excision: extrapolation error " +
                           std::to_string(out.error_estimate) + " above tol " + std::to_string(tol));
  }
  return out;
}

/// Agreement required between the two principal-value strategies.
inline constexpr double kSchemeAgreement = 1e-7;

/// Principal value of the first integral with a single common excision
/// radius at 0, pi/2 and pi. The fold value is returned; the excision value
/// rides along in the diagnostic and must agree to max(1e-7, tol).
inline QuadResult pv_integrate_I1(double alpha, double tol) {
  QuadResult fold = pv_fold_I1(alpha, tol);
  if (fold.error_estimate > tol) {
    throw ConvergenceError("I1 fold: error estimate " + std::to_string(fold.error_estimate) +
                           " above tol " + std::to_string(tol));
  }
  QuadResult excision = pv_excision_I1(alpha, tol);
  ExcisionDiagnostic diag = std::move(*excision.excision_diagnostic);
  diag.fold_value = fold.value;
  const double gap = std::abs(fold.value - diag.extrapolated);
  if (gap > std::max(kSchemeAgreement, tol)) {
    throw ConvergenceError("I1 principal-value schemes disagree by " + std::to_string(gap) +
                           " at alpha = " + std::to_string(alpha));
  }
  fold.subdivisions += excision.subdivisions;
  fold.excision_diagnostic = std::move(diag);
  return fold;
}

/// The second integral; absolutely convergent, so no excision. Breakpoints
/// at 0, pi/2, pi (removable), theta* (kink) and the quarter points.
inline QuadResult integrate_I2(double alpha, double tol) {
  detail::require_alpha(alpha);
  detail::require_tol(tol);
  // theta* = pi/2 + kink_offset lies in the HalfPiAbove quarter.
  const double kink_offset = std::atan(std::exp2(-1.0 / alpha));
  QuadResult out;
  const double panel_tol = tol / 5.0;
  for (Anchor anchor : kAnchors) {
    auto h = [alpha, anchor](double x) {
      const CosSin cs = local_cos_sin(anchor, x);
      return integrand2_cs(alpha, cs.c, cs.s);
    };
    std::vector<double> cuts = {0.0, kQuarterPi};
    if (anchor == Anchor::HalfPiAbove && kink_offset < kQuarterPi) {
      cuts = {0.0, kink_offset, kQuarterPi};
    }
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const quad::PanelResult r = quad::integrate(h, cuts[i], cuts[i + 1], panel_tol);
      out.value += r.value;
      out.error_estimate += r.error_estimate;
      out.subdivisions += r.panels;
    }
  }
  if (out.error_estimate > tol) {
    throw ConvergenceError("I2: error estimate " + std::to_string(out.error_estimate) +
                           " above tol " + std::to_string(tol));
  }
  return out;
}

}  // namespace stabsign::quadrature

#endif  // STABSIGN_QUADRATURE_HPP
