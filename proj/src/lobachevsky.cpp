#include "equivol/lobachevsky.hpp"

#include <atomic>
#include <cmath>
#include <numbers>

namespace equivol {

namespace {

constexpr double kPi = std::numbers::pi;

std::atomic<long> clamp_count{0};

// zeta(2n) for n = 1..40 via zeta(2) = pi^2/6 and
// (n + 1/2) zeta(2n) = sum_{k=1}^{n-1} zeta(2k) zeta(2n-2k).
const double* zeta_even_table() {
  static const auto table = [] {
    static double z[41];
    z[1] = kPi * kPi / 6.0;
    for (int n = 2; n <= 40; ++n) {
      double s = 0.0;
      for (int k = 1; k < n; ++k) s += z[k] * z[n - k];
      z[n] = s * 2.0 / (2 * n + 1);
    }
    return z;
  }();
  return table;
}

// L on the reduced interval [0, pi/2]:
//   L(r) = r (1 - log(2r)) + r sum_{n>=1} zeta(2n)/(n(2n+1)) (r/pi)^(2n).
// The ratio (r/pi)^2 <= 1/4, so 40 terms overshoot 1e-13 by a wide margin.
double lobachevsky_reduced(double r) {
  if (r == 0.0) return 0.0;
  const double* z = zeta_even_table();
  const double x = (r / kPi) * (r / kPi);
  double power = 1.0;
  double sum = 0.0;
  for (int n = 1; n <= 40; ++n) {
    power *= x;
    double term = z[n] / (n * (2.0 * n + 1.0)) * power;
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return r * (1.0 - std::log(2.0 * r)) + r * sum;
}

double clamp_volume(double v, const char* what) {
  if (v >= 0.0) return v;
  if (v > -1e-12) {
    clamp_count.fetch_add(1, std::memory_order_relaxed);
    return 0.0;
  }
  throw Error(ErrorKind::NegativeArea,
              std::string(what) + " came out " + std::to_string(v));
}

void require_angle(double a, double lo, double hi, const char* what) {
  if (!(a >= lo && a <= hi)) {
    throw Error(ErrorKind::AngleOutOfRange,
                std::string(what) + " = " + std::to_string(a) +
                    " outside [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
  }
}

void require_open_angle(double a, const char* what) {
  if (!(a > 0.0 && a < kPi / 2)) {
    throw Error(ErrorKind::AngleOutOfRange,
                std::string(what) + " = " + std::to_string(a) +
                    " outside (0, pi/2)");
  }
}

}  // namespace

double lobachevsky(double theta) {
  // remainder() is exact and odd, so r inherits the sign symmetry bit for
  // bit and adding (a representable) pi to theta leaves r unchanged.
  double r = std::remainder(theta, kPi);
  if (r < 0.0) return -lobachevsky_reduced(-r);
  return lobachevsky_reduced(r);
}

double constant_V8() {
  static const double v = 8.0 * lobachevsky(kPi / 4.0);
  return v;
}

double constant_V3() {
  static const double v = 2.0 * lobachevsky(kPi / 6.0);
  return v;
}

double catalan_constant() {
  // K = sum (-1)^n / (2n+1)^2, summed in pairs from the small end so the
  // truncation tail (about 1/(32 M^2)) stays below 1e-13.
  static const double k = [] {
    const long pairs = 2000000;
    double s = 0.0;
    for (long m = pairs - 1; m >= 0; --m) {
      double a = 4.0 * m + 1.0;
      double b = 4.0 * m + 3.0;
      s += 1.0 / (a * a) - 1.0 / (b * b);
    }
    return s;
  }();
  return k;
}

double cone_on_ideal_polygon(const std::vector<double>& angles) {
  double s = 0.0;
  for (double a : angles) {
    require_angle(a, 0.0, kPi / 2, "cone angle");
    s += lobachevsky(a);
  }
  return clamp_volume(s, "cone volume");
}

double two_ideal_vertex_tet_volume(double alpha) {
  require_angle(alpha, 0.0, kPi / 2, "alpha");
  return clamp_volume(lobachevsky(kPi / 2 - alpha) / 2.0, "tetrahedron volume");
}

double orthoscheme_volume(double alpha, double beta, double gamma) {
  require_open_angle(alpha, "alpha");
  require_open_angle(beta, "beta");
  require_open_angle(gamma, "gamma");
  const double sa = std::sin(alpha), sg = std::sin(gamma);
  const double cb = std::cos(beta);
  const double disc = sa * sa * sg * sg - cb * cb;
  if (disc > 1e-12) {
    throw Error(ErrorKind::NotAnOrthoscheme,
                "sin^2(alpha) sin^2(gamma) - cos^2(beta) = " +
                    std::to_string(disc) + " > 0");
  }
  const double delta =
      std::atan(std::sqrt(std::max(-disc, 0.0)) /
                (std::cos(alpha) * std::cos(gamma)));
  const double v =
      (lobachevsky(alpha + delta) - lobachevsky(alpha - delta) +
       lobachevsky(gamma + delta) - lobachevsky(gamma - delta) -
       lobachevsky(kPi / 2 - beta + delta) +
       lobachevsky(kPi / 2 - beta - delta) + 2.0 * lobachevsky(kPi / 2 - delta)) /
      4.0;
  return clamp_volume(v, "orthoscheme volume");
}

double ideal_orthoscheme_volume(double alpha, double gamma) {
  require_open_angle(alpha, "alpha");
  require_open_angle(gamma, "gamma");
  const double v = (lobachevsky(alpha + gamma) + lobachevsky(alpha - gamma) +
                    2.0 * lobachevsky(kPi / 2 - alpha)) /
                   4.0;
  return clamp_volume(v, "orthoscheme volume");
}

double vertex_volume_cap(int m, double c) {
  if (m < 1) {
    throw Error(ErrorKind::ConstraintOutOfRange,
                "need at least one angle, got m = " + std::to_string(m));
  }
  if (!(c >= 0.0 && c <= m * (kPi / 2) + 1e-12)) {
    throw Error(ErrorKind::ConstraintOutOfRange,
                "angle sum " + std::to_string(c) + " outside [0, m pi/2]");
  }
  return clamp_volume(m / 2.0 * lobachevsky(kPi / 2 - c / m), "vertex cap");
}

long volume_clamp_count() { return clamp_count.load(std::memory_order_relaxed); }

}  // namespace equivol
