#include "pcv/poly.hpp"

#include <climits>
#include <sstream>

namespace pcv {

Poly Poly::var(Sym s, int exp) {
  if (exp == 0) return Poly(1);
  if (exp < 0 && is_surface_var(s))
    throw DomainError(std::string("negative exponent on surface variable ") +
                      sym_name(s));
  Poly p;
  ExpVec e{};
  e[static_cast<int>(s)] = static_cast<int16_t>(exp);
  p.terms_[e] = GaussianRational(1);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == ExpVec{};
}

GaussianRational Poly::constant_value() const {
  auto it = terms_.find(ExpVec{});
  return it == terms_.end() ? GaussianRational() : it->second;
}

void Poly::insert_term(const ExpVec& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  r += b;
  return r;
}

Poly& Poly::operator+=(const Poly& b) {
  for (const auto& [e, c] : b.terms_) insert_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& b) {
  for (const auto& [e, c] : b.terms_) insert_term(e, -c);
  return *this;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  r -= b;
  return r;
}

Poly operator-(const Poly& a) {
  Poly r;
  for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
  return r;
}

Poly operator*(const Poly& a, const GaussianRational& c) {
  Poly r;
  if (c.is_zero()) return r;
  for (const auto& [e, coeff] : a.terms_) r.terms_[e] = coeff * c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ExpVec e;
      for (int i = 0; i < kSymCount; ++i)
        e[i] = static_cast<int16_t>(ea[i] + eb[i]);
      r.insert_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::pow(int n) const {
  if (n < 0) {
    if (!is_unit_monomial()) throw DomainError("negative power of non-unit");
    return unit_inverse().pow(-n);
  }
  Poly acc(1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

int Poly::degree(Sym s) const {
  int d = INT_MIN;
  int i = static_cast<int>(s);
  for (const auto& [e, c] : terms_)
    if (e[i] > d) d = e[i];
  return d;
}

std::map<int, Poly> Poly::by_degree(Sym s) const {
  std::map<int, Poly> out;
  int i = static_cast<int>(s);
  for (const auto& [e, c] : terms_) {
    ExpVec stripped = e;
    stripped[i] = 0;
    out[e[i]].insert_term(stripped, c);
  }
  return out;
}

bool Poly::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const ExpVec& e = terms_.begin()->first;
  for (int i = 0; i < kSymCount; ++i)
    if (e[i] != 0 && is_surface_var(static_cast<Sym>(i))) return false;
  return true;
}

Poly Poly::unit_inverse() const {
  if (!is_unit_monomial()) throw DomainError("not a unit monomial");
  const auto& [e, c] = *terms_.begin();
  ExpVec inv;
  for (int i = 0; i < kSymCount; ++i) inv[i] = static_cast<int16_t>(-e[i]);
  Poly r;
  r.terms_[inv] = c.inverse();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d, Sym var) const {
  if (d.is_zero()) throw DomainError("division by zero polynomial");
  int m = d.degree(var);
  auto dcoeffs = d.by_degree(var);
  const Poly& lead = dcoeffs.rbegin()->second;
  if (!lead.is_unit_monomial())
    throw DomainError("divisor leading coefficient is not invertible");
  Poly lead_inv = lead.unit_inverse();

  Poly q, r = *this;
  int n;
  while (!r.is_zero() && (n = r.degree(var)) >= m) {
    auto rc = r.by_degree(var);
    Poly term = rc.rbegin()->second * lead_inv * Poly::var(var, n - m);
    q += term;
    r -= term * d;
  }
  return {q, r};
}

GaussianRational Poly::eval_exact(const ExactPoint& p) const {
  GaussianRational sum;
  for (const auto& [e, c] : terms_) {
    GaussianRational t = c;
    for (int i = 0; i < kSymCount; ++i) {
      if (e[i] == 0) continue;
      auto it = p.find(static_cast<Sym>(i));
      if (it == p.end())
        throw DomainError(std::string("missing value for symbol ") +
                          sym_name(static_cast<Sym>(i)));
      t *= it->second.pow(e[i]);
    }
    sum += t;
  }
  return sum;
}

std::complex<double> Poly::eval_num(const NumPoint& p) const {
  std::complex<double> sum = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (int i = 0; i < kSymCount; ++i) {
      if (e[i] == 0) continue;
      auto it = p.find(static_cast<Sym>(i));
      if (it == p.end())
        throw DomainError(std::string("missing value for symbol ") +
                          sym_name(static_cast<Sym>(i)));
      t *= std::pow(it->second, e[i]);
    }
    sum += t;
  }
  return sum;
}

Poly Poly::derivative(Sym s) const {
  Poly r;
  int i = static_cast<int>(s);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    ExpVec d = e;
    d[i] = static_cast<int16_t>(e[i] - 1);
    r.insert_term(d, c * GaussianRational(e[i]));
  }
  return r;
}

std::vector<Sym> Poly::symbols() const {
  std::vector<Sym> out;
  for (int i = 0; i < kSymCount; ++i) {
    for (const auto& [e, c] : terms_) {
      if (e[i] != 0) {
        out.push_back(static_cast<Sym>(i));
        break;
      }
    }
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (int i = 0; i < kSymCount; ++i) {
      if (e[i] == 0) continue;
      os << "*" << sym_name(static_cast<Sym>(i));
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace pcv
