#include "maxkin/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "maxkin/constants.hpp"

namespace maxkin {
namespace {

// 15-point Kronrod abscissae (positive half) and weights, with the embedded
// 7-point Gauss weights. Values from QUADPACK dqk15.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct RuleResult {
  double value;
  double error;
};

// One Gauss-Kronrod 7-15 pass over [a, b]; error estimate per QUADPACK.
RuleResult gk15(const std::function<double(double)>& f, double a, double b,
                std::int64_t& evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  auto eval = [&](double x) {
    const double v = f(x);
    ++evaluations;
    if (std::isnan(v)) {
      throw std::invalid_argument("integrand returned NaN at x = " +
                                  std::to_string(x));
    }
    return v;
  };

  double fv1[7];
  double fv2[7];
  const double fc = eval(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::fabs(resk);
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const double absc = half * kXgk[jtw];
    const double fval1 = eval(center - absc);
    const double fval2 = eval(center + absc);
    fv1[jtw] = fval1;
    fv2[jtw] = fval2;
    const double fsum = fval1 + fval2;
    resg += kWg[j] * fsum;
    resk += kWgk[jtw] * fsum;
    resabs += kWgk[jtw] * (std::fabs(fval1) + std::fabs(fval2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double absc = half * kXgk[jtwm1];
    const double fval1 = eval(center - absc);
    const double fval2 = eval(center + absc);
    fv1[jtwm1] = fval1;
    fv2[jtwm1] = fval2;
    const double fsum = fval1 + fval2;
    resk += kWgk[jtwm1] * fsum;
    resabs += kWgk[jtwm1] * (std::fabs(fval1) + std::fabs(fval2));
  }

  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
  }
  resabs *= std::fabs(half);
  resasc *= std::fabs(half);

  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double epmach = std::numeric_limits<double>::epsilon();
  const double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50.0 * epmach)) {
    err = std::max(epmach * 50.0 * resabs, err);
  }
  return {resk * half, err};
}

struct Segment {
  double a;
  double b;
  double value;
  double error;
  int depth;
};

// Worst error first; position breaks ties so the pop order is fully
// determined by the inputs.
struct SegmentOrder {
  bool operator()(const Segment& x, const Segment& y) const {
    if (x.error != y.error) {
      return x.error < y.error;
    }
    return x.a > y.a;
  }
};

constexpr int kMaxDepth = 100;

bool unsplittable(const Segment& seg) {
  return seg.depth >= kMaxDepth ||
         (seg.b - seg.a) <= std::numeric_limits<double>::epsilon() *
                                std::max({std::fabs(seg.a), std::fabs(seg.b),
                                          1.0});
}

// Sums segments in position order; stable regardless of refinement history.
QuadratureResult combine(std::vector<Segment> done,
                         std::vector<Segment> active,
                         std::int64_t evaluations) {
  done.insert(done.end(), active.begin(), active.end());
  std::sort(done.begin(), done.end(),
            [](const Segment& x, const Segment& y) { return x.a < y.a; });
  QuadratureResult result{0.0, 0.0, evaluations};
  for (const Segment& seg : done) {
    result.value += seg.value;
    result.abs_error_estimate += seg.error;
  }
  return result;
}

QuadratureResult integrate_finite(const std::function<double(double)>& f,
                                  double lo, double hi,
                                  const IntegrateOptions& opts) {
  std::int64_t evaluations = 0;
  auto first = gk15(f, lo, hi, evaluations);

  std::vector<Segment> active;  // max-heap on the error estimate
  std::vector<Segment> done;    // segments that cannot improve further
  active.push_back({lo, hi, first.value, first.error, 0});
  double active_error = first.error;
  double done_error = 0.0;

  while (!active.empty() && active_error + done_error > opts.tol) {
    std::pop_heap(active.begin(), active.end(), SegmentOrder{});
    const Segment seg = active.back();
    active.pop_back();
    active_error -= seg.error;

    if (unsplittable(seg)) {
      done.push_back(seg);
      done_error += seg.error;
      continue;
    }
    if (evaluations + 30 > opts.max_evaluations) {
      active.push_back(seg);
      throw ConvergenceError(
          "integration did not converge within the evaluation budget",
          combine(std::move(done), std::move(active), evaluations));
    }

    const double mid = 0.5 * (seg.a + seg.b);
    auto left = gk15(f, seg.a, mid, evaluations);
    auto right = gk15(f, mid, seg.b, evaluations);
    active.push_back({seg.a, mid, left.value, left.error, seg.depth + 1});
    std::push_heap(active.begin(), active.end(), SegmentOrder{});
    active.push_back({mid, seg.b, right.value, right.error, seg.depth + 1});
    std::push_heap(active.begin(), active.end(), SegmentOrder{});
    active_error += left.error + right.error;
  }

  return combine(std::move(done), std::move(active), evaluations);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, const IntegrateOptions& opts) {
  if (std::isnan(lo) || std::isnan(hi)) {
    throw std::invalid_argument("integration bounds must not be NaN");
  }
  if (!(opts.tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  if (lo == hi) {
    if (std::isfinite(lo) && std::isnan(f(lo))) {
      throw std::invalid_argument("integrand returned NaN at x = " +
                                  std::to_string(lo));
    }
    return {0.0, 0.0, 1};
  }
  if (lo > hi) {
    QuadratureResult r = integrate(f, hi, lo, opts);
    r.value = -r.value;
    return r;
  }

  const bool lo_inf = std::isinf(lo);
  const bool hi_inf = std::isinf(hi);
  if (lo_inf && hi_inf) {
    // x = t/(1-t^2), dx = (1+t^2)/(1-t^2)^2 dt, t in (-1, 1).
    auto g = [&f](double t) {
      const double w = 1.0 - t * t;
      return f(t / w) * (1.0 + t * t) / (w * w);
    };
    return integrate_finite(g, -1.0, 1.0, opts);
  }
  if (hi_inf) {
    // x = lo + t/(1-t), dx = dt/(1-t)^2, t in [0, 1).
    auto g = [&f, lo](double t) {
      const double w = 1.0 - t;
      return f(lo + t / w) / (w * w);
    };
    return integrate_finite(g, 0.0, 1.0, opts);
  }
  if (lo_inf) {
    auto g = [&f, hi](double t) {
      const double w = 1.0 - t;
      return f(hi - t / w) / (w * w);
    };
    return integrate_finite(g, 0.0, 1.0, opts);
  }
  return integrate_finite(f, lo, hi, opts);
}

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double tol) {
  IntegrateOptions opts;
  opts.tol = tol;
  return integrate(f, lo, hi, opts);
}

double gaussian_moment(int n, double c) {
  if (n < 0) {
    throw std::domain_error("moment order must be non-negative");
  }
  if (n > 100) {
    throw std::domain_error("moment order capped at 100");
  }
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::domain_error("gaussian scale c must be positive and finite");
  }
  double double_factorial = 1.0;  // (2n-1)!!, empty product for n = 0
  for (int k = 3; k <= 2 * n - 1; k += 2) {
    double_factorial *= k;
  }
  return std::sqrt(constants::pi / c) * double_factorial /
         std::pow(2.0 * c, n);
}

double q_gamma_3half(double lambda) {
  if (std::isnan(lambda) || lambda < 0.0) {
    throw std::domain_error("lambda must be non-negative");
  }
  const double root = std::sqrt(lambda);
  return std::erfc(root) +
         2.0 * std::sqrt(lambda / constants::pi) * std::exp(-lambda);
}

}  // namespace maxkin
