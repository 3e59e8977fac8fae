#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcv/charvar_vi.hpp"
#include "pcv/ratexpr.hpp"

namespace pcv {

// --- small dense matrices ---------------------------------------------------
template <typename T>
struct Mat3 {
  std::array<std::array<T, 3>, 3> a{};
  static Mat3 identity() {
    Mat3 m;
    for (int i = 0; i < 3; ++i) m.a[i][i] = T(1);
    return m;
  }
  static Mat3 diag(T d0, T d1, T d2) {
    Mat3 m;
    m.a[0][0] = std::move(d0);
    m.a[1][1] = std::move(d1);
    m.a[2][2] = std::move(d2);
    return m;
  }
  T& operator()(int r, int c) { return a[r][c]; }
  const T& operator()(int r, int c) const { return a[r][c]; }
  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 out;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        T acc = x.a[r][0] * y.a[0][c];
        for (int k = 1; k < 3; ++k) acc += x.a[r][k] * y.a[k][c];
        out.a[r][c] = std::move(acc);
      }
    return out;
  }
  friend Mat3 operator-(const Mat3& x, const Mat3& y) {
    Mat3 out;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) out.a[r][c] = x.a[r][c] - y.a[r][c];
    return out;
  }
  friend bool operator==(const Mat3& x, const Mat3& y) { return x.a == y.a; }
  T trace() const { return a[0][0] + a[1][1] + a[2][2]; }
  // Sum of the three principal 2x2 minors.
  T minor_sum() const {
    return a[0][0] * a[1][1] - a[0][1] * a[1][0] + a[0][0] * a[2][2] -
           a[0][2] * a[2][0] + a[1][1] * a[2][2] - a[1][2] * a[2][1];
  }
  T det() const {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  }
  Mat3 inverse() const {  // adjugate / det; T must support division
    T d = det();
    Mat3 out;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        int r1 = (c + 1) % 3, r2 = (c + 2) % 3;  // transposed cofactor
        int c1 = (r + 1) % 3, c2 = (r + 2) % 3;
        out.a[r][c] = (a[r1][c1] * a[r2][c2] - a[r1][c2] * a[r2][c1]) / d;
      }
    return out;
  }
};
using Mat3Q = Mat3<GaussianRational>;
using Mat3C = Mat3<C>;
using Mat3X = Mat3<RatExpr>;

template <typename T>
struct Mat2 {
  std::array<std::array<T, 2>, 2> a{};
  static Mat2 identity() { return diag(T(1), T(1)); }
  static Mat2 diag(T d0, T d1) {
    Mat2 m;
    m.a[0][0] = std::move(d0);
    m.a[1][1] = std::move(d1);
    return m;
  }
  T& operator()(int r, int c) { return a[r][c]; }
  const T& operator()(int r, int c) const { return a[r][c]; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 out;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        out.a[r][c] = x.a[r][0] * y.a[0][c] + x.a[r][1] * y.a[1][c];
    return out;
  }
  Mat2 inverse() const {
    T d = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    Mat2 m;
    m.a[0][0] = a[1][1] / d;
    m.a[0][1] = -a[0][1] / d;
    m.a[1][0] = -a[1][0] / d;
    m.a[1][1] = a[0][0] / d;
    return m;
  }
};
using Mat2C = Mat2<C>;

// --- Stokes data ------------------------------------------------------------
template <typename T>
struct StokesGeneric {
  T s0t, st0, st1, s1t, s10, s01;
  T e0, et, e1;
};
using StokesDataVI = StokesGeneric<GaussianRational>;
using StokesSym = StokesGeneric<RatExpr>;
// Fully symbolic data: each field is its own symbol.
StokesSym stokes_sym();

// Unipotent S_{ij} = I + s E_{ij}, indices 0 -> 0, 1 -> t, 2 -> 1.
template <typename T>
Mat3<T> stokes_matrix(int i, int j, const T& s) {
  Mat3<T> m = Mat3<T>::identity();
  m(i, j) = m(i, j) + s;
  return m;
}

// Trace coordinates read off the Stokes data.
template <typename T>
std::array<T, 3> traces_from_stokes(const StokesGeneric<T>& d) {
  const T &e0 = d.e0, &et = d.et, &e1 = d.e1;
  return {(et * et + e1 * e1 + e1 * e1 * d.st1 * d.s1t) / (et * e1),
          (e0 * e0 + e1 * e1 + e0 * e0 * d.s10 * d.s01) / (e0 * e1),
          (e0 * e0 + et * et + e0 * e0 * d.s0t * d.st0) / (e0 * et)};
}

template <typename T>
struct MonodromyMats {
  Mat3<T> M0, Mt, M1, Minf_inv;
  T E, Eprime;  // trace and principal-minor sum of Minf_inv
};

template <typename T>
MonodromyMats<T> monodromy_from_stokes(const StokesGeneric<T>& d) {
  T one(1);
  Mat3<T> N0 = Mat3<T>::diag(d.e0 * d.e0, one, one);
  Mat3<T> Nt = Mat3<T>::diag(one, d.et * d.et, one);
  Mat3<T> N1 = Mat3<T>::diag(one, one, d.e1 * d.e1);
  Mat3<T> N1i = Mat3<T>::diag(one, one, one / (d.e1 * d.e1));
  Mat3<T> N = Mat3<T>::diag(d.e0 * d.e0, d.et * d.et, d.e1 * d.e1);
  Mat3<T> S0t = stokes_matrix(0, 1, d.s0t), St0 = stokes_matrix(1, 0, d.st0),
          St1 = stokes_matrix(1, 2, d.st1), S1t = stokes_matrix(2, 1, d.s1t),
          S10 = stokes_matrix(2, 0, d.s10), S01 = stokes_matrix(0, 2, d.s01);
  MonodromyMats<T> out;
  out.M0 = N0 * S01 * S0t;
  out.Mt = N1i * St0 * St1 * Nt * N1;
  out.M1 = S1t * S10 * N1;
  out.Minf_inv = S1t * S10 * St0 * St1 * N * S01 * S0t;
  out.E = out.Minf_inv.trace();
  out.Eprime = out.Minf_inv.minor_sum();
  return out;
}

// The five diagonal-conjugation invariants of the Stokes data.
template <typename T>
std::array<T, 5> stokes_invariants(const StokesGeneric<T>& d) {
  return {d.s0t * d.st0, d.st1 * d.s1t, d.s10 * d.s01, d.s0t * d.st1 * d.s10,
          d.s1t * d.st0 * d.s01};
}

// 1 - E + E' - (e0 et e1)^2; vanishes exactly when the data comes from a
// monodromy representation (it is affine-linear in s0t).
GaussianRational admissibility_residual(const StokesDataVI& d);
// a_inf determined by the data: (E - 1) / (e0 et e1).
GaussianRational ainf_from_stokes(const StokesDataVI& d);
// Numeric e_inf from the quadratic e^2 - a_inf e + 1 = 0; picks the root
// with |e| >= 1, or the one closest to the hint when given.
C einf_from_stokes_num(C E, C P, std::optional<C> hint = std::nullopt);

// Random exact Stokes data satisfying the admissibility constraint (s0t is
// solved from the other five coefficients); all s nonzero.
StokesDataVI make_admissible_stokes(uint64_t seed);

// --- braid action -----------------------------------------------------------
enum class StokesBraid { b0t, bt1 };
// Refactorizes the monodromy triple after the braid move, conjugates into
// canonical shape and reads the new coefficients off the matrices; swaps the
// respective pair of e-values.  Throws DomainError when the refactored
// matrices fail the required unipotent shape.
StokesDataVI braid_on_stokes(StokesBraid which, const StokesDataVI& d);

// --- confluent (outer) data -------------------------------------------------
template <typename T>
struct OuterGeneric {
  T s0t, s01, st0, s10;  // outer coefficients
  T X0;
  T e0, et, e1;
};
using OuterStokesData = OuterGeneric<GaussianRational>;
using OuterSym = OuterGeneric<RatExpr>;
OuterSym outer_sym();  // each field its own symbol (X0 the surface symbol)

struct ConfluentStokesResult {
  OuterStokesData outer;
  std::array<GaussianRational, 3> P;  // (X0, Wt, U1)
};
// Outer data and degenerate-surface coordinates; throws DomainError with an
// "on line L_0" message when s_{1t} = 0.
ConfluentStokesResult confluent_stokes(const StokesDataVI& d);

template <typename T>
struct OuterMonodromy {
  Mat3<T> Minf_inv;  // = S~_1 S~_t N~ S~_0
  T E, Eprime;
};

template <typename T>
OuterMonodromy<T> assemble_outer_monodromy(const OuterGeneric<T>& o,
                                           const T& imag_unit) {
  T one(1), zero(0);
  Mat3<T> S0 = Mat3<T>::identity();
  S0(0, 1) = o.s0t;
  S0(0, 2) = o.s01;
  Mat3<T> St = Mat3<T>::identity();
  St(1, 1) = o.X0;
  St(1, 2) = zero - imag_unit;
  St(2, 1) = zero - imag_unit;
  St(2, 2) = zero;
  Mat3<T> S1 = Mat3<T>::identity();
  S1(1, 0) = o.st0;
  S1(2, 0) = o.s10;
  Mat3<T> N = Mat3<T>::diag(o.e0 * o.e0, o.et * o.e1, o.et * o.e1);
  OuterMonodromy<T> out;
  out.Minf_inv = S1 * St * N * S0;
  out.E = out.Minf_inv.trace();
  out.Eprime = out.Minf_inv.minor_sum();
  return out;
}

// --- the 2x2 linear confluence demonstration --------------------------------
struct LinearConfluenceDemo {
  C lambda0;                  // residue eigenvalue at the merging pair
  std::array<C, 2> Lambda1;   // eigenvalues of the limit formal monodromy
  C eps0;
  Mat2C SL, SR;               // unfolded Stokes matrices (unipotent)
};
struct LinearConfluenceResult {
  Mat2C N0n;          // formal monodromy factor at eps_n (constant in n)
  Mat2C MLn, MRn;     // monodromy pair at eps_n
  Mat2C wildL, wildR; // wild pair E(kappa)^{-1} N(0) S_L, S_R E(kappa)
  C kappa;
};
// Along 1/eps_n = 1/eps_0 + n/lambda0, with eps-independent eigenvalues.
LinearConfluenceResult linear_confluence_demo(const LinearConfluenceDemo& demo,
                                              int n);

// --- serialization ----------------------------------------------------------
std::string stokes_to_json(const StokesDataVI& d);
std::optional<StokesDataVI> stokes_from_json(const std::string& text);

}  // namespace pcv
