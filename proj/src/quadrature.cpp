#include "extail/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "extail/asymptotics.hpp"

namespace extail {

namespace {

constexpr double kHalfPi = 1.5707963267948966;
constexpr double kUCap = 7.5;        // |u| cap; ln Q stays a normal double
constexpr double kLogCut = 80.0;     // nats below the peak treated as zero
constexpr std::size_t kEvalBudget = std::size_t{1} << 20;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Log-integrand after the double-exponential change of variables
// Q = exp((pi/2) sinh u): value is ln[f(Q(u)) * dQ/du].
class Transformed {
 public:
  explicit Transformed(const LogIntegrand& f) : f_(f) {}

  double operator()(double u) {
    ++evals_;
    const double w = kHalfPi * std::sinh(u);  // ln Q
    const double q = std::exp(w);             // 0 or inf at extreme u is fine
    const double fl = f_(q, w);
    if (std::isnan(fl)) throw std::domain_error("integrate_semiaxis: integrand returned NaN");
    if (fl == std::numeric_limits<double>::infinity())
      throw std::domain_error("integrate_semiaxis: integrand returned +inf");
    if (fl == kNegInf) return kNegInf;
    return fl + w + std::log(kHalfPi * std::cosh(u));
  }

  std::size_t evals() const { return evals_; }

 private:
  const LogIntegrand& f_;
  std::size_t evals_ = 0;
};

// Unimodal maximization on [a, b] keeping the best point interior, so flat
// -inf shoulders around a narrow peak cannot mislead the bracket update.
double trisect_max(Transformed& g, double a, double mid, double b, double* peak_value) {
  double fm = g(mid);
  for (int i = 0; i < 60 && (b - a) > 1e-13 * std::max(1.0, std::fabs(mid)); ++i) {
    const double l = 0.5 * (a + mid);
    const double r = 0.5 * (mid + b);
    const double fl = g(l);
    const double fr = g(r);
    if (fl >= fm && fl >= fr) {
      b = mid;
      mid = l;
      fm = fl;
    } else if (fr >= fm && fr >= fl) {
      a = mid;
      mid = r;
      fm = fr;
    } else {
      a = l;
      b = r;
    }
  }
  *peak_value = fm;
  return mid;
}

QuadratureResult zero_integral() {
  QuadratureResult res;
  res.log_value = kNegInf;
  res.value = 0.0;
  return res;
}

}  // namespace

QuadratureResult integrate_semiaxis(const LogIntegrand& f_log, double rel_tol) {
  if (!(rel_tol >= 1e-13 && rel_tol <= 1e-2))
    throw std::domain_error("integrate_semiaxis: rel_tol must be in [1e-13, 1e-2]");

  Transformed g(f_log);

  // Locate the transformed integrand's peak: coarse scan, then bracketed
  // refinement. The peak level is subtracted from every node before
  // exponentiation, which is what keeps exp(-10^4)-scale integrals alive.
  constexpr double kScanStep = 0.25;
  double u_best = 0.0;
  double g_best = kNegInf;
  for (double u = -kUCap; u <= kUCap + 1e-9; u += kScanStep) {
    const double v = g(u);
    if (v > g_best) {
      g_best = v;
      u_best = u;
    }
  }
  if (g_best == kNegInf) {
    QuadratureResult res = zero_integral();
    res.evaluations = g.evals();
    return res;
  }
  double peak = kNegInf;
  const double u_star = trisect_max(g, u_best - kScanStep, u_best, u_best + kScanStep, &peak);

  // Walk outward until the integrand is kLogCut nats below the peak; the
  // double-exponential decay makes everything beyond that truncation noise.
  constexpr double kWalkStep = 0.125;
  auto walk = [&](double direction) {
    double reach = kWalkStep;
    while (u_star + direction * reach > -kUCap && u_star + direction * reach < kUCap) {
      if (g(u_star + direction * reach) < peak - kLogCut) break;
      reach += kWalkStep;
    }
    return reach + 2.0 * kWalkStep;
  };
  const double reach_left = walk(-1.0);
  const double reach_right = walk(+1.0);

  // Trapezoid refinement on the grid u* + k h, anchored at the peak so the
  // very first level already samples it. Levels halve h and add the odd
  // multiples until two successive levels agree within rel_tol.
  const double h0 = std::min(kScanStep, (reach_left + reach_right) / 16.0);
  const long k_left0 = static_cast<long>(std::ceil(reach_left / h0));
  const long k_right0 = static_cast<long>(std::ceil(reach_right / h0));

  double shifted_sum = 0.0;
  double h = h0;
  double prev_log = 0.0;
  bool have_prev = false;

  for (int level = 0;; ++level) {
    if (level == 0) {
      for (long k = -k_left0; k <= k_right0; ++k)
        shifted_sum += std::exp(g(u_star + k * h) - peak);
    } else {
      h *= 0.5;
      const long k_hi = (k_right0 << level);
      for (long k = -(k_left0 << level) + 1; k <= k_hi; k += 2)
        shifted_sum += std::exp(g(u_star + k * h) - peak);
    }
    const double level_log = peak + std::log(h * shifted_sum);
    if (have_prev) {
      const double rel = std::fabs(std::expm1(level_log - prev_log));
      if (rel <= rel_tol) {
        QuadratureResult res;
        res.log_value = level_log;
        res.value = std::exp(level_log);
        res.rel_tol_achieved = rel;
        res.abs_tol_achieved = rel * std::fabs(res.value);
        res.evaluations = g.evals();
        return res;
      }
    }
    prev_log = level_log;
    have_prev = true;
    if (g.evals() > kEvalBudget)
      throw NonConvergenceError("integrate_semiaxis: evaluation budget exhausted");
  }
}

AuxIntegralSpec::AuxIntegralSpec(double theta, std::function<double(double)> g)
    : AuxIntegralSpec(theta, std::move(g), nullptr, 1.0) {}

AuxIntegralSpec::AuxIntegralSpec(double theta, std::function<double(double)> g,
                                 std::function<double(double)> weight, double weight_max)
    : theta_(theta), g_(std::move(g)), weight_(std::move(weight)), weight_max_(weight_max) {
  if (!(theta_ > 0.0)) throw std::domain_error("aux integral: theta must be > 0");
  if (!g_) throw std::domain_error("aux integral: g must be callable");
  if (!(g_(1e-12) <= 1e-8))
    throw std::domain_error("aux integral: g must vanish at the origin (g(1e-12) > 1e-8)");
  if (weight_ && !(weight_max_ > 0.0 && std::isfinite(weight_max_)))
    throw std::domain_error("aux integral: weight bound must be finite and positive");
}

double AuxIntegralSpec::weight(double x) const { return weight_ ? weight_(x) : 1.0; }

QuadratureResult aux_integral(const AuxIntegralSpec& spec, double t, double rel_tol) {
  if (!(t > 0.0)) throw std::domain_error("aux_integral: t must be > 0");
  const double theta = spec.theta();
  const LogIntegrand f = [&spec, t, theta](double x, double log_x) {
    if (std::isinf(x)) return kNegInf;  // the exp(-t x) factor has won
    const double gx = spec.g(x);
    double log_w = 0.0;
    if (spec.has_weight()) {
      const double wx = spec.weight(x);
      if (std::isnan(wx) || wx < 0.0 || wx > spec.weight_max() * (1.0 + 1e-9))
        throw std::domain_error("aux_integral: weight left its declared range");
      if (wx == 0.0) return kNegInf;
      log_w = std::log(wx);
    }
    return (theta - 1.0) * log_x - t * x - gx + log_w;
  };
  QuadratureResult res = integrate_semiaxis(f, rel_tol);
  res.singular_endpoint = theta < 1.0;
  return res;
}

QuadratureResult bound_power(const MixingDensity& m, const TailEnvelope& e, double t,
                             double rel_tol) {
  if (e.form() != EnvelopeForm::DirectPower)
    throw FormMismatchError("bound_power: envelope must be direct-power");
  if (!(t >= 1.0)) throw std::domain_error("bound_power: t must be >= 1");
  const LogIntegrand f = [&m, &e, t](double, double log_q) {
    return m.log_pdf_from_log(log_q) + e.log_eval_from_log(t, log_q);
  };
  return integrate_semiaxis(f, rel_tol);
}

QuadratureResult bound_exp(const MixingDensity& m, const TailEnvelope& e, double t,
                           double rel_tol) {
  if (e.form() != EnvelopeForm::InversePower)
    throw FormMismatchError("bound_exp: envelope must be inverse-power");
  if (!(t >= 1.0)) throw std::domain_error("bound_exp: t must be >= 1");

  // Factor out the exponent's minimum before integrating; the shifted
  // integrand peaks at e^0 regardless of how deep the true bound is.
  const double phi_star = saddle_solve(e, m, t).phi_star;
  const LogIntegrand f = [&m, &e, t, phi_star](double, double log_q) {
    return m.log_pdf_from_log(log_q) + e.log_eval_from_log(t, log_q) + phi_star;
  };
  QuadratureResult res = integrate_semiaxis(f, rel_tol);
  res.log_value -= phi_star;
  res.value = std::exp(res.log_value);
  res.abs_tol_achieved = res.rel_tol_achieved * std::fabs(res.value);
  return res;
}

}  // namespace extail
