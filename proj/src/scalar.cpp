#include "pcv/scalar.hpp"

#include <ostream>
#include <sstream>

namespace pcv {

GaussianRational GaussianRational::pow(long e) const {
  GaussianRational base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  GaussianRational acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

// Parses a rational "a" or "a/b" starting at pos; advances pos past it.
std::optional<mpq_class> parse_rat(const std::string& s, size_t& pos) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  size_t digits = pos;
  while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits) return std::nullopt;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t den = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == den) return std::nullopt;
  }
  mpq_class q;
  if (q.set_str(s.substr(start, pos - start), 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

}  // namespace

std::string GaussianRational::to_string() const {
  if (im_ == 0) return rat_str(re_);
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = rat_str(im_) + "*i";
  if (re_ == 0) return imag;
  std::string out = rat_str(re_);
  if (imag[0] != '-') out += "+";
  return out + imag;
}

std::optional<GaussianRational> GaussianRational::parse(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) return std::nullopt;

  // One or two signed components; a component is "a[/b][*i]" or "i"/"+i"/"-i".
  mpq_class re = 0, im = 0;
  bool seen_re = false, seen_im = false;
  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    size_t comp_start = pos;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (comp_start != 0) {
      return std::nullopt;  // components must be joined by +/-
    }
    if (pos < s.size() && s[pos] == 'i' &&
        (pos + 1 == s.size() || s[pos + 1] == '+' || s[pos + 1] == '-')) {
      if (seen_im) return std::nullopt;
      im = sign;
      seen_im = true;
      ++pos;
      continue;
    }
    auto q = parse_rat(s, pos);
    if (!q) return std::nullopt;
    if (pos < s.size() && s[pos] == '*') {
      if (pos + 1 >= s.size() || s[pos + 1] != 'i') return std::nullopt;
      pos += 2;
      if (seen_im) return std::nullopt;
      im = sign * *q;
      seen_im = true;
    } else {
      if (seen_re) return std::nullopt;
      re = sign * *q;
      seen_re = true;
    }
  }
  if (!seen_re && !seen_im) return std::nullopt;
  return GaussianRational(re, im);
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& v) {
  return os << v.to_string();
}

}  // namespace pcv
