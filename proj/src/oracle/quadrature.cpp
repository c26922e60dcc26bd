#include "fraxform/oracle/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <numbers>
#include <queue>
#include <vector>

#include "fraxform/error.hpp"

namespace fraxform::oracle {

void QuadratureConfig::validate() const {
  auto ok = [](double t) { return t > 0.0 && t <= 1e-2; };
  if (!ok(abs_tol) || !ok(rel_tol)) {
    throw Error(ErrorKind::invalid_argument, "quadrature tolerances must lie in (0, 1e-2]");
  }
  if (max_subdivisions < 50) {
    throw Error(ErrorKind::invalid_argument, "max_subdivisions must be at least 50");
  }
  if (!(tail_cut > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "tail_cut must be positive");
  }
}

namespace {

constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for nodes 1, 3, 5 and the centre.
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  const Integrand* f;
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const Integrand& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kKronrod[7];
  double gauss = fc * kGauss[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double pair = f(centre - dx) + f(centre + dx);
    kronrod += kKronrod[i] * pair;
    if (i % 2 == 1) gauss += kGauss[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  double error = std::fabs(kronrod - gauss);
  // Floor at the rounding level of the rule itself.
  error = std::max(error, 50.0 * std::numeric_limits<double>::epsilon() * std::fabs(kronrod));
  if (!std::isfinite(kronrod)) {
    throw Error(ErrorKind::accuracy, "integrand is not finite on the integration range");
  }
  return {&f, a, b, kronrod, error};
}

// Global adaptive bisection over a set of independent pieces.
QuadResult adaptive(const std::vector<std::pair<const Integrand*, std::pair<double, double>>>& pieces,
                    const QuadratureConfig& cfg) {
  std::priority_queue<Segment> heap;
  double total = 0.0;
  double error = 0.0;
  for (const auto& [f, range] : pieces) {
    if (range.second == range.first) continue;
    Segment s = gauss_kronrod(*f, range.first, range.second);
    total += s.value;
    error += s.error;
    heap.push(s);
  }
  std::size_t used = heap.size();
  while (!heap.empty() && error > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total))) {
    if (used >= cfg.max_subdivisions) {
      throw Error(ErrorKind::accuracy, "quadrature subdivision budget exhausted (error estimate " +
                                           std::to_string(error) + ")");
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = gauss_kronrod(*worst.f, worst.a, mid);
    const Segment right = gauss_kronrod(*worst.f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++used;
  }
  // Re-sum to shed accumulated update drift.
  double value = 0.0, err = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {value, err};
}

// Wynn epsilon extrapolation of a sequence of partial sums.
double wynn_epsilon(const std::vector<double>& sums) {
  std::vector<double> prev(sums.size() + 1, 0.0);
  std::vector<double> cur = sums;
  double best = sums.back();
  for (std::size_t col = 1; cur.size() > 1; ++col) {
    std::vector<double> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0.0) return col % 2 == 1 ? cur[i + 1] : best;
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (col % 2 == 0 && std::isfinite(cur.back())) best = cur.back();
  }
  return best;
}

}  // namespace

QuadResult quad_finite(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorKind::invalid_argument, "quad_finite needs finite limits");
  }
  if (a == b) return {0.0, 0.0};
  const bool flip = b < a;
  QuadResult r = adaptive({{&f, {std::min(a, b), std::max(a, b)}}}, cfg);
  if (flip) r.value = -r.value;
  return r;
}

QuadResult quad_semi_infinite(const Integrand& f, double lower, const QuadratureConfig& cfg) {
  cfg.validate();
  const double c = cfg.tail_cut;
  const double split = lower + c;
  // x = split + c (1 - t) / t maps t in (0, 1] onto [split, inf).
  const Integrand tail = [&f, split, c](double t) {
    if (t <= 0.0) return 0.0;
    const double x = split + c * (1.0 - t) / t;
    const double jac = c / (t * t);
    const double fx = f(x);
    return fx == 0.0 ? 0.0 : fx * jac;
  };
  return adaptive({{&f, {lower, split}}, {&tail, {0.0, 1.0}}}, cfg);
}

QuadResult quad_oscillatory(const Integrand& f, double omega, TransformKind kernel,
                            const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw Error(ErrorKind::invalid_argument, "quad_oscillatory needs finite omega >= 0");
  }
  const bool sine = kernel == TransformKind::sine;
  if (omega == 0.0) {
    if (sine) return {0.0, 0.0};
    return quad_semi_infinite(f, cfg);
  }
  const Integrand g = [&f, omega, sine](double x) {
    const double k = sine ? std::sin(omega * x) : std::cos(omega * x);
    return f(x) * k;
  };
  const double period = std::numbers::pi / omega;
  // Kernel zeros: sine at j*period, cosine at (j + 1/2)*period.
  const double first_zero = sine ? 1.0 : 0.5;
  constexpr std::size_t kMaxSegments = 600;
  constexpr std::size_t kWindow = 24;

  // Per-segment tolerance is a fraction of the overall target.
  QuadratureConfig seg_cfg = cfg;
  seg_cfg.abs_tol = cfg.abs_tol * 0.05;
  seg_cfg.rel_tol = cfg.rel_tol * 0.05;

  std::vector<double> sums;
  std::vector<double> estimates;
  double partial = 0.0;
  double seg_error = 0.0;
  double lo = 0.0;
  std::size_t quiet = 0;
  for (std::size_t j = 0; j < kMaxSegments; ++j) {
    const double hi = (static_cast<double>(j) + first_zero) * period;
    QuadResult seg = quad_finite(g, lo, hi, seg_cfg);
    lo = hi;
    partial += seg.value;
    seg_error += seg.error_estimate;
    sums.push_back(partial);

    const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(partial));
    // Plainly converged: the last contributions are already negligible.
    if (std::fabs(seg.value) <= 1e-3 * target) {
      if (++quiet >= 3) return {partial, seg_error + 3.0 * std::fabs(seg.value)};
    } else {
      quiet = 0;
    }
    if (sums.size() < 4) continue;
    const std::size_t from = sums.size() > kWindow ? sums.size() - kWindow : 0;
    estimates.push_back(wynn_epsilon(std::vector<double>(sums.begin() + from, sums.end())));
    if (estimates.size() >= 3) {
      const std::size_t n = estimates.size();
      const double d1 = std::fabs(estimates[n - 1] - estimates[n - 2]);
      const double d2 = std::fabs(estimates[n - 2] - estimates[n - 3]);
      const double goal = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(estimates[n - 1]));
      if (d1 + d2 <= goal && seg_error <= goal) {
        return {estimates[n - 1], seg_error + d1 + d2};
      }
    }
  }
  throw Error(ErrorKind::accuracy, "oscillatory integral did not converge within segment budget");
}

double classical_transform(const Integrand& f, double omega, TransformKind kind,
                           const QuadratureConfig& cfg) {
  return 2.0 * quad_oscillatory(f, omega, kind, cfg).value;
}

}  // namespace fraxform::oracle
