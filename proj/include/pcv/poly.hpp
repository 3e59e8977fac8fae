#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pcv/scalar.hpp"
#include "pcv/symbols.hpp"

namespace pcv {

using ExactPoint = std::map<Sym, GaussianRational>;
using NumPoint = std::map<Sym, std::complex<double>>;

// Sparse multivariate Laurent polynomial over Q(i).  Surface variables
// (X0..U1) are kept to nonnegative exponents by construction; parameter
// symbols are units and may carry negative exponents.
class Poly {
 public:
  using Terms = std::map<ExpVec, GaussianRational>;

  Poly() = default;
  explicit Poly(GaussianRational c) {
    if (!c.is_zero()) terms_[ExpVec{}] = std::move(c);
  }
  explicit Poly(long n) : Poly(GaussianRational(n)) {}

  static Poly var(Sym s, int exp = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The constant term (also the full value when is_constant()).
  GaussianRational constant_value() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b);
  Poly& operator-=(const Poly& b);
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend Poly operator*(const Poly& a, const GaussianRational& c);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(int n) const;

  // Degree in one symbol; zero polynomial reports INT_MIN.
  int degree(Sym s) const;
  // Coefficients with respect to one symbol: exponent -> coefficient poly.
  std::map<int, Poly> by_degree(Sym s) const;

  // Division with remainder in `var`.  The divisor's leading coefficient in
  // `var` must be a single invertible term (unit monomial).
  std::pair<Poly, Poly> divmod(const Poly& d, Sym var) const;

  // True when the polynomial is a single term whose monomial is a unit
  // (no surface-variable exponents).
  bool is_unit_monomial() const;
  Poly unit_inverse() const;

  GaussianRational eval_exact(const ExactPoint& p) const;
  std::complex<double> eval_num(const NumPoint& p) const;

  // Partial derivative.
  Poly derivative(Sym s) const;

  std::vector<Sym> symbols() const;
  std::string to_string() const;

 private:
  void insert_term(const ExpVec& e, const GaussianRational& c);
  Terms terms_;
};

}  // namespace pcv
