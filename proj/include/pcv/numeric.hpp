#pragma once

#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "pcv/scalar.hpp"

namespace pcv {

using C = std::complex<double>;

inline std::mt19937_64 seeded_rng(uint64_t seed) { return std::mt19937_64(seed); }

// Uniform draw from the disk of given radius.
C rand_disk(std::mt19937_64& rng, double radius);

// Roots of x^2 + b x + c.
std::pair<C, C> solve_monic_quadratic(C b, C c);

// Integrates y' = f(y) * T for pseudo-time s in [0,1] (complex total time T)
// with step-doubling adaptive RK4.  Throws DomainError when the step count
// limit is exceeded.
std::vector<C> integrate_rk4(
    const std::function<std::vector<C>(const std::vector<C>&)>& f,
    std::vector<C> y0, C total_time, double tol = 1e-10,
    long max_steps = 1000000);

}  // namespace pcv
