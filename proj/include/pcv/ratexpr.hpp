#pragma once

#include <map>
#include <optional>
#include <string>

#include "pcv/poly.hpp"

namespace pcv {

// Fraction of Laurent polynomials.  No GCD reduction; the denominator is
// normalized so that its first stored coefficient equals 1.
class RatExpr {
 public:
  RatExpr() : num_(), den_(Poly(1)) {}
  RatExpr(Poly num, Poly den = Poly(1));
  explicit RatExpr(GaussianRational c) : RatExpr(Poly(std::move(c))) {}
  explicit RatExpr(long n) : RatExpr(Poly(n)) {}
  static RatExpr var(Sym s, int exp = 1) { return RatExpr(Poly::var(s, exp)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == Poly(1); }

  friend RatExpr operator+(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator-(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator-(const RatExpr& a);
  friend RatExpr operator*(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator/(const RatExpr& a, const RatExpr& b);
  RatExpr& operator+=(const RatExpr& b) { return *this = *this + b; }
  RatExpr& operator-=(const RatExpr& b) { return *this = *this - b; }
  RatExpr& operator*=(const RatExpr& b) { return *this = *this * b; }
  RatExpr& operator/=(const RatExpr& b) { return *this = *this / b; }
  RatExpr pow(int n) const;

  GaussianRational eval_exact(const ExactPoint& p) const;
  std::complex<double> eval_num(const NumPoint& p) const;

  std::string to_string() const;

 private:
  Poly num_, den_;
};

using SubstMap = std::map<Sym, RatExpr>;

// Substitutes rules into a polynomial / rational expression.  Symbols absent
// from the map are left unchanged.
RatExpr subst(const Poly& p, const SubstMap& rules);
RatExpr subst(const RatExpr& f, const SubstMap& rules);

enum class Verdict { True, False, Inconclusive };
const char* verdict_name(Verdict v);

// Exact equality test: clears denominators and (optionally) reduces the
// numerator difference modulo a cubic that is monic in `var`.  With a
// modulus, both denominators are additionally required to be nonzero
// modulo the cubic.
bool identity_equal_exact(const RatExpr& f, const RatExpr& g,
                          const Poly* modulo = nullptr, Sym var = Sym::X1);

// Randomized-but-exact equality test: evaluates at n exact rational points
// (numerators/denominators bounded by 1000), skipping points where a
// denominator vanishes.  Inconclusive when every point was skipped.
Verdict identity_equal_randomized(const RatExpr& f, const RatExpr& g, int n,
                                  uint64_t seed);

}  // namespace pcv
