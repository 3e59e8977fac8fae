#include "pcv/ratexpr.hpp"

#include <algorithm>
#include <random>

namespace pcv {

RatExpr::RatExpr(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const GaussianRational& lead = den_.terms().begin()->second;
  if (!lead.is_one()) {
    GaussianRational inv = lead.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatExpr operator+(const RatExpr& a, const RatExpr& b) {
  if (a.den_ == b.den_) return RatExpr(a.num_ + b.num_, a.den_);
  return RatExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatExpr operator-(const RatExpr& a, const RatExpr& b) {
  if (a.den_ == b.den_) return RatExpr(a.num_ - b.num_, a.den_);
  return RatExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatExpr operator-(const RatExpr& a) { return RatExpr(-a.num_, a.den_); }

RatExpr operator*(const RatExpr& a, const RatExpr& b) {
  return RatExpr(a.num_ * b.num_, a.den_ * b.den_);
}

RatExpr operator/(const RatExpr& a, const RatExpr& b) {
  if (b.num_.is_zero()) throw DomainError("division by zero expression");
  return RatExpr(a.num_ * b.den_, a.den_ * b.num_);
}

RatExpr RatExpr::pow(int n) const {
  if (n < 0) {
    if (num_.is_zero()) throw DomainError("negative power of zero");
    return RatExpr(den_, num_).pow(-n);
  }
  // Both halves are powers of polynomials; keep them as such.
  return RatExpr(num_.pow(n), den_.pow(n));
}

GaussianRational RatExpr::eval_exact(const ExactPoint& p) const {
  GaussianRational d = den_.eval_exact(p);
  if (d.is_zero()) throw DomainError("denominator vanishes at point");
  return num_.eval_exact(p) / d;
}

std::complex<double> RatExpr::eval_num(const NumPoint& p) const {
  return num_.eval_num(p) / den_.eval_num(p);
}

std::string RatExpr::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatExpr subst(const Poly& p, const SubstMap& rules) {
  RatExpr sum;
  for (const auto& [e, c] : p.terms()) {
    RatExpr term{c};
    for (int i = 0; i < kSymCount; ++i) {
      if (e[i] == 0) continue;
      Sym s = static_cast<Sym>(i);
      auto it = rules.find(s);
      if (it == rules.end())
        term *= RatExpr::var(s, e[i]);
      else
        term *= it->second.pow(e[i]);
    }
    sum += term;
  }
  return sum;
}

RatExpr subst(const RatExpr& f, const SubstMap& rules) {
  return subst(f.num(), rules) / subst(f.den(), rules);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    default: return "inconclusive";
  }
}

bool identity_equal_exact(const RatExpr& f, const RatExpr& g,
                          const Poly* modulo, Sym var) {
  Poly diff = f.num() * g.den() - g.num() * f.den();
  if (!modulo) return diff.is_zero();
  Poly r = diff.divmod(*modulo, var).second;
  if (!r.is_zero()) return false;
  if (f.den().divmod(*modulo, var).second.is_zero()) return false;
  if (g.den().divmod(*modulo, var).second.is_zero()) return false;
  return true;
}

Verdict identity_equal_randomized(const RatExpr& f, const RatExpr& g, int n,
                                  uint64_t seed) {
  std::vector<Sym> syms;
  for (const Poly* p : {&f.num(), &f.den(), &g.num(), &g.den()}) {
    for (Sym s : p->symbols())
      if (std::find(syms.begin(), syms.end(), s) == syms.end())
        syms.push_back(s);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num_dist(-1000, 1000);
  std::uniform_int_distribution<long> den_dist(1, 1000);
  bool any_evaluated = false;
  for (int trial = 0; trial < n; ++trial) {
    ExactPoint p;
    for (Sym s : syms)
      p[s] = GaussianRational(mpq_class(num_dist(rng), den_dist(rng)));
    bool skip = false;
    for (Sym s : syms) {
      // Laurent symbols must be invertible at the sample point.
      if (!is_surface_var(s) && p[s].is_zero()) skip = true;
    }
    if (!skip &&
        (f.den().eval_exact(p).is_zero() || g.den().eval_exact(p).is_zero()))
      skip = true;
    if (skip) continue;
    any_evaluated = true;
    if (f.eval_exact(p) != g.eval_exact(p)) return Verdict::False;
  }
  return any_evaluated ? Verdict::True : Verdict::Inconclusive;
}

}  // namespace pcv
