#include "pcv/numeric.hpp"

#include <cmath>

namespace pcv {

C rand_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double r = radius * std::sqrt(unit(rng));
  double phi = 2.0 * M_PI * unit(rng);
  return C(r * std::cos(phi), r * std::sin(phi));
}

std::pair<C, C> solve_monic_quadratic(C b, C c) {
  C disc = std::sqrt(b * b - 4.0 * c);
  // Citardauq-style pairing to avoid cancellation.
  C q = (std::real(std::conj(b) * disc) >= 0) ? -(b + disc) / 2.0
                                              : -(b - disc) / 2.0;
  if (std::abs(q) == 0.0) return {C(0), -b};
  return {q, c / q};
}

namespace {

std::vector<C> rk4_step(
    const std::function<std::vector<C>(const std::vector<C>&)>& f,
    const std::vector<C>& y, C h) {
  auto axpy = [](const std::vector<C>& a, C s, const std::vector<C>& b) {
    std::vector<C> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * b[i];
    return r;
  };
  std::vector<C> k1 = f(y);
  std::vector<C> k2 = f(axpy(y, h / 2.0, k1));
  std::vector<C> k3 = f(axpy(y, h / 2.0, k2));
  std::vector<C> k4 = f(axpy(y, h, k3));
  std::vector<C> out(y.size());
  for (size_t i = 0; i < y.size(); ++i)
    out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

}  // namespace

std::vector<C> integrate_rk4(
    const std::function<std::vector<C>(const std::vector<C>&)>& f,
    std::vector<C> y, C total_time, double tol, long max_steps) {
  if (std::abs(total_time) == 0.0) return y;
  double s = 0.0, h = 0.05;
  long steps = 0;
  while (s < 1.0) {
    if (++steps > max_steps) throw DomainError("integrator step limit exceeded");
    if (s + h > 1.0) h = 1.0 - s;
    C dt = total_time * h;
    std::vector<C> big = rk4_step(f, y, dt);
    std::vector<C> half = rk4_step(f, y, dt / 2.0);
    std::vector<C> two = rk4_step(f, half, dt / 2.0);
    double err = 0.0, scale = 1.0;
    for (size_t i = 0; i < y.size(); ++i) {
      err = std::max(err, std::abs(big[i] - two[i]));
      scale = std::max(scale, std::abs(two[i]));
    }
    double bound = tol * scale;
    if (err > bound && h > 1e-12) {
      h /= 2.0;
      continue;
    }
    y = two;
    s += h;
    if (err < bound / 32.0) h *= 2.0;
  }
  return y;
}

}  // namespace pcv
