#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace pcv {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact element of Q(i).  mpq_class keeps denominators positive and reduced,
// which is all the normalization we need.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long n) : re_(n), im_(0) {}
  GaussianRational(mpq_class re) : re_(std::move(re)), im_(0) {
    re_.canonicalize();
  }
  GaussianRational(mpq_class re, mpq_class im)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  friend GaussianRational operator+(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a) {
    return {-a.re_, -a.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  GaussianRational inverse() const {
    mpq_class n = re_ * re_ + im_ * im_;
    if (n == 0) throw DomainError("division by zero in Q(i)");
    return {re_ / n, -im_ / n};
  }
  friend GaussianRational operator/(const GaussianRational& a,
                                    const GaussianRational& b) {
    return a * b.inverse();
  }
  GaussianRational& operator+=(const GaussianRational& b) {
    re_ += b.re_;
    im_ += b.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& b) {
    re_ -= b.re_;
    im_ -= b.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& b) {
    *this = *this * b;
    return *this;
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0;
    return cmp(a.im_, b.im_) < 0;
  }

  GaussianRational pow(long e) const;

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  // Serialized as "a/b+c/d*i" (components omitted when zero, "a" for whole
  // real values).  parse() accepts the same grammar.
  std::string to_string() const;
  static std::optional<GaussianRational> parse(const std::string& text);

 private:
  mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& v);

}  // namespace pcv
