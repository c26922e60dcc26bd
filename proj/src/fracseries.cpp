#include "fraxform/fracseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fraxform/error.hpp"

namespace fraxform {

namespace {

void require_same_order(const FractalSeries& a, const FractalSeries& b) {
  if (a.alpha() != b.alpha()) {
    throw Error(ErrorKind::alpha_mismatch, "fractal series of different order: " +
                                               to_string(a.alpha()) + " vs " +
                                               to_string(b.alpha()));
  }
}

// Gamma(1 + num_k alpha) / Gamma(1 + den_k alpha)
GammaCoeff gamma_ratio(const Rational& alpha, std::size_t num_k, std::size_t den_k) {
  return GammaCoeff::gamma_one_plus(alpha * Rational(num_k)) *
         GammaCoeff::gamma_one_plus(alpha * Rational(den_k)).reciprocal();
}

// Compensated sum with a running bound on rounding growth.
class HonestSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    comp_ += std::fabs(sum_) >= std::fabs(x) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
    magnitude_ += std::fabs(x);
    ++count_;
  }
  double value() const { return sum_ + comp_; }
  double error_bound() const {
    return magnitude_ * std::numeric_limits<double>::epsilon() * static_cast<double>(count_ + 4);
  }
  void check(const char* what, const specfun::EvalConfig& cfg) const {
    const double v = value();
    if (!std::isfinite(v) || !std::isfinite(magnitude_)) {
      throw Error(ErrorKind::precision, std::string(what) + ": overflow");
    }
    if (error_bound() > cfg.tol * std::max(1.0, std::fabs(v))) {
      throw Error(ErrorKind::precision, std::string(what) + ": cancellation exceeds tolerance");
    }
  }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double magnitude_ = 0.0;
  std::size_t count_ = 0;
};

}  // namespace

FractalSeries::FractalSeries(Rational alpha, std::vector<GammaCoeff> coeffs, std::size_t order)
    : alpha_(std::move(alpha)), order_(order), coeffs_(std::move(coeffs)) {
  require_valid_order(alpha_);
  if (coeffs_.size() > order_ + 1) {
    throw Error(ErrorKind::invalid_argument, "more coefficients than the truncation order allows");
  }
  trim();
}

FractalSeries::FractalSeries(Rational alpha, const std::vector<Rational>& coeffs)
    : alpha_(std::move(alpha)), order_(coeffs.empty() ? 0 : coeffs.size() - 1) {
  require_valid_order(alpha_);
  coeffs_.reserve(coeffs.size());
  for (const auto& c : coeffs) coeffs_.emplace_back(c);
  trim();
}

FractalSeries FractalSeries::zero(Rational alpha, std::size_t order) {
  return FractalSeries(std::move(alpha), std::vector<GammaCoeff>{}, order);
}

FractalSeries FractalSeries::monomial(Rational alpha, std::size_t k, const Rational& c) {
  std::vector<GammaCoeff> coeffs(k + 1);
  coeffs[k] = GammaCoeff(c);
  return FractalSeries(std::move(alpha), std::move(coeffs), k);
}

FractalSeries FractalSeries::mittag_leffler(Rational alpha, const Rational& coef,
                                            const Rational& rate, std::size_t order) {
  std::vector<GammaCoeff> coeffs;
  coeffs.reserve(order + 1);
  Rational power = coef;
  for (std::size_t k = 0; k <= order; ++k) {
    coeffs.push_back(GammaCoeff(power) *
                     GammaCoeff::gamma_one_plus(alpha * Rational(k)).reciprocal());
    power *= -rate;
  }
  return FractalSeries(std::move(alpha), std::move(coeffs), order);
}

GammaCoeff FractalSeries::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : GammaCoeff{};
}

void FractalSeries::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool operator==(const FractalSeries& a, const FractalSeries& b) {
  return a.alpha_ == b.alpha_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

FractalSeries series_add(const FractalSeries& a, const FractalSeries& b) {
  require_same_order(a, b);
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<GammaCoeff> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a.coeff(k) + b.coeff(k);
  return FractalSeries(a.alpha(), std::move(out), std::max(a.order(), b.order()));
}

FractalSeries series_scale(const Rational& c, const FractalSeries& a) {
  std::vector<GammaCoeff> out;
  out.reserve(a.coeffs().size());
  const GammaCoeff factor(c);
  for (const auto& x : a.coeffs()) out.push_back(factor * x);
  return FractalSeries(a.alpha(), std::move(out), a.order());
}

FractalSeries series_mul(const FractalSeries& a, const FractalSeries& b, std::size_t cap) {
  require_same_order(a, b);
  const std::size_t order = std::min(a.order() + b.order(), cap);
  if (a.is_zero() || b.is_zero()) return FractalSeries::zero(a.alpha(), order);
  const std::size_t n = std::min(a.coeffs().size() + b.coeffs().size() - 1, order + 1);
  std::vector<GammaCoeff> out(n);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size() && i + j < n; ++j) {
      out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return FractalSeries(a.alpha(), std::move(out), order);
}

FractalSeries lf_derivative(const FractalSeries& a) {
  if (a.order() == 0 || a.coeffs().size() <= 1) {
    return FractalSeries::zero(a.alpha(), a.order() == 0 ? 0 : a.order() - 1);
  }
  std::vector<GammaCoeff> out;
  out.reserve(a.coeffs().size() - 1);
  for (std::size_t k = 1; k < a.coeffs().size(); ++k) {
    out.push_back(a.coeffs()[k] * gamma_ratio(a.alpha(), k, k - 1));
  }
  return FractalSeries(a.alpha(), std::move(out), a.order() - 1);
}

double lf_integral(const FractalSeries& a, double b, const specfun::EvalConfig& cfg) {
  cfg.validate();
  if (!(b >= 0.0) || !std::isfinite(b)) {
    throw Error(ErrorKind::invalid_argument, "lf_integral: upper limit must be finite and >= 0");
  }
  const double alpha = to_double(a.alpha());
  const double base = std::pow(b, alpha);
  HonestSum sum;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    if (a.coeffs()[k].is_zero()) continue;
    const double weight = (a.coeffs()[k] * gamma_ratio(a.alpha(), k, k + 1)).to_double();
    sum.add(weight * std::pow(base, static_cast<double>(k + 1)));
  }
  sum.check("lf_integral", cfg);
  return sum.value();
}

double lf_integral(const FractalSeries& a, double lo, double hi, const specfun::EvalConfig& cfg) {
  if (!(lo >= 0.0) || !(hi >= lo)) {
    throw Error(ErrorKind::invalid_argument, "lf_integral: need 0 <= lo <= hi");
  }
  return lf_integral(a, hi, cfg) - lf_integral(a, lo, cfg);
}

double series_eval(const FractalSeries& a, double x, const specfun::EvalConfig& cfg) {
  cfg.validate();
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw Error(ErrorKind::invalid_argument, "series_eval: point must be finite and >= 0");
  }
  if (a.is_zero()) return 0.0;
  const double base = std::pow(x, to_double(a.alpha()));
  // Horner in base, with a parallel pass on magnitudes for the error bound.
  double value = 0.0;
  double magnitude = 0.0;
  for (std::size_t k = a.coeffs().size(); k-- > 0;) {
    const double c = a.coeffs()[k].to_double();
    value = value * base + c;
    magnitude = magnitude * base + std::fabs(c);
  }
  const double bound =
      magnitude * std::numeric_limits<double>::epsilon() * static_cast<double>(2 * a.coeffs().size() + 4);
  if (!std::isfinite(value) || !std::isfinite(magnitude)) {
    throw Error(ErrorKind::precision, "series_eval: overflow");
  }
  if (bound > cfg.tol * std::max(1.0, std::fabs(value))) {
    throw Error(ErrorKind::precision, "series_eval: cancellation exceeds tolerance");
  }
  return value;
}

}  // namespace fraxform
