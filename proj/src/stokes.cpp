#include "pcv/stokes.hpp"

#include <cmath>
#include <random>

#include "json.hpp"

namespace pcv {

StokesSym stokes_sym() {
  return {RatExpr::var(Sym::s0t), RatExpr::var(Sym::st0),
          RatExpr::var(Sym::st1), RatExpr::var(Sym::s1t),
          RatExpr::var(Sym::s10), RatExpr::var(Sym::s01),
          RatExpr::var(Sym::e0),  RatExpr::var(Sym::et),
          RatExpr::var(Sym::e1)};
}

OuterSym outer_sym() {
  return {RatExpr::var(Sym::so0t), RatExpr::var(Sym::so01),
          RatExpr::var(Sym::sot0), RatExpr::var(Sym::so10),
          RatExpr::var(Sym::X0),   RatExpr::var(Sym::e0),
          RatExpr::var(Sym::et),   RatExpr::var(Sym::e1)};
}

GaussianRational admissibility_residual(const StokesDataVI& d) {
  auto m = monodromy_from_stokes(d);
  GaussianRational P = d.e0 * d.et * d.e1;
  return GaussianRational(1) - m.E + m.Eprime - P * P;
}

GaussianRational ainf_from_stokes(const StokesDataVI& d) {
  auto m = monodromy_from_stokes(d);
  return (m.E - GaussianRational(1)) / (d.e0 * d.et * d.e1);
}

C einf_from_stokes_num(C E, C P, std::optional<C> hint) {
  C ainf = (E - 1.0) / P;
  auto [r1, r2] = solve_monic_quadratic(-ainf, C(1));
  if (hint) {
    return std::abs(r1 - *hint) <= std::abs(r2 - *hint) ? r1 : r2;
  }
  return std::abs(r1) >= 1.0 ? r1 : r2;
}

StokesDataVI make_admissible_stokes(uint64_t seed) {
  auto rng = seeded_rng(seed);
  std::uniform_int_distribution<long> num(1, 20), den(1, 20);
  auto rnd = [&] { return GaussianRational(mpq_class(num(rng), den(rng))); };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    StokesDataVI d;
    d.st0 = rnd();
    d.st1 = rnd();
    d.s1t = rnd();
    d.s10 = rnd();
    d.s01 = rnd();
    d.e0 = rnd();
    d.et = rnd();
    d.e1 = rnd();
    d.s0t = GaussianRational(0);
    GaussianRational c0 = admissibility_residual(d);
    d.s0t = GaussianRational(1);
    GaussianRational c1 = admissibility_residual(d);
    if (c1 == c0) continue;  // constraint degenerate in s0t
    d.s0t = -c0 / (c1 - c0);
    if (d.s0t.is_zero()) continue;
    return d;
  }
  throw DomainError("could not build admissible Stokes data");
}

namespace {

// First nonzero column of M - I, or the i-th unit vector when M = I.
std::array<GaussianRational, 3> left_vector(const Mat3Q& M, int i) {
  Mat3Q A = M - Mat3Q::identity();
  for (int c = 0; c < 3; ++c) {
    if (!A(0, c).is_zero() || !A(1, c).is_zero() || !A(2, c).is_zero())
      return {A(0, c), A(1, c), A(2, c)};
  }
  std::array<GaussianRational, 3> e{};
  e[i] = GaussianRational(1);
  return e;
}

StokesDataVI read_off(const Mat3Q& M0, const Mat3Q& Mt, const Mat3Q& M1,
                      const GaussianRational& e0, const GaussianRational& et,
                      const GaussianRational& e1) {
  const Mat3Q* Ms[3] = {&M0, &Mt, &M1};
  for (int i = 0; i < 3; ++i)
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        if (r == i) continue;
        GaussianRational expect(r == c ? 1 : 0);
        if ((*Ms[i])(r, c) != expect)
          throw DomainError("refactored matrix is not in canonical shape");
      }
  if (M0(0, 0) != e0 * e0 || Mt(1, 1) != et * et || M1(2, 2) != e1 * e1)
    throw DomainError("refactored matrix has wrong formal monodromy");
  StokesDataVI d;
  d.e0 = e0;
  d.et = et;
  d.e1 = e1;
  d.s0t = M0(0, 1) / (e0 * e0);
  d.s01 = M0(0, 2) / (e0 * e0);
  d.st0 = Mt(1, 0);
  d.st1 = Mt(1, 2) / (e1 * e1);
  d.s10 = M1(2, 0);
  d.s1t = M1(2, 1);
  return d;
}

}  // namespace

StokesDataVI braid_on_stokes(StokesBraid which, const StokesDataVI& d) {
  auto m = monodromy_from_stokes(d);
  Mat3Q B0, Bt, B1, P;
  GaussianRational ne0, net, ne1;
  if (which == StokesBraid::b0t) {
    B0 = m.M0.inverse() * m.Mt * m.M0;
    Bt = m.M0;
    B1 = m.M1;
    P = Mat3Q::identity();
    P(0, 0) = P(1, 1) = GaussianRational(0);
    P(0, 1) = P(1, 0) = GaussianRational(1);
    ne0 = d.et;
    net = d.e0;
    ne1 = d.e1;
  } else {
    B0 = m.M0;
    Bt = m.Mt.inverse() * m.M1 * m.Mt;
    B1 = m.Mt;
    P = Mat3Q::identity();
    P(1, 1) = P(2, 2) = GaussianRational(0);
    P(1, 2) = P(2, 1) = GaussianRational(1);
    ne0 = d.e0;
    net = d.e1;
    ne1 = d.et;
  }
  B0 = P * B0 * P;
  Bt = P * Bt * P;
  B1 = P * B1 * P;
  std::array<std::array<GaussianRational, 3>, 3> u = {
      left_vector(B0, 0), left_vector(Bt, 1), left_vector(B1, 2)};
  Mat3Q B;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) B(r, c) = u[c][r];
  if (B.det().is_zero())
    throw DomainError("degenerate Stokes data: refactorization frame singular");
  Mat3Q Binv = B.inverse();
  return read_off(Binv * B0 * B, Binv * Bt * B, Binv * B1 * B, ne0, net, ne1);
}

ConfluentStokesResult confluent_stokes(const StokesDataVI& d) {
  if (d.s1t.is_zero())
    throw DomainError("Stokes data lies on the line L_0 (s_1t = 0)");
  GaussianRational i = GaussianRational::i();
  ConfluentStokesResult out;
  OuterStokesData& o = out.outer;
  o.e0 = d.e0;
  o.et = d.et;
  o.e1 = d.e1;
  o.s0t = d.s0t + d.s01 * d.s1t;
  o.s01 = -i * (d.e1 / d.et) * d.s0t;
  o.st0 = d.st0 + d.s10 / d.s1t;
  o.s10 = -i * (d.et / d.e1) * d.s10 / d.s1t;
  o.X0 = traces_from_stokes(d)[0];
  GaussianRational Wt = i * d.e0 * o.s10 * o.s0t + d.et * d.e1 / d.e0;
  GaussianRational U1 = d.e0 * o.s10 * o.s01 + d.e0;
  out.P = {o.X0, Wt, U1};
  return out;
}

LinearConfluenceResult linear_confluence_demo(const LinearConfluenceDemo& demo,
                                              int n) {
  if (std::abs(demo.lambda0) == 0.0 || std::abs(demo.eps0) == 0.0)
    throw DomainError("linear confluence demo requires lambda0, eps0 nonzero");
  const C twopii(0.0, 2.0 * M_PI);
  C inv_eps_n = 1.0 / demo.eps0 + C(n) / demo.lambda0;
  auto N0_at = [&](C inv_eps) {
    C ph = std::exp(-twopii * demo.lambda0 * inv_eps);
    return Mat2C::diag(ph, 1.0 / ph);
  };
  Mat2C N = Mat2C::diag(std::exp(twopii * demo.Lambda1[0]),
                        std::exp(twopii * demo.Lambda1[1]));
  LinearConfluenceResult out;
  out.N0n = N0_at(inv_eps_n);
  out.MLn = out.N0n * demo.SL;
  out.MRn = demo.SR * N * out.N0n.inverse();
  out.kappa = std::exp(-twopii * demo.lambda0 / demo.eps0);
  Mat2C Ek = Mat2C::diag(out.kappa, 1.0 / out.kappa);
  out.wildL = Ek.inverse() * N * demo.SL;
  out.wildR = demo.SR * Ek;
  return out;
}

std::string stokes_to_json(const StokesDataVI& d) {
  nlohmann::json j;
  j["s"]["0t"] = d.s0t.to_string();
  j["s"]["t0"] = d.st0.to_string();
  j["s"]["t1"] = d.st1.to_string();
  j["s"]["1t"] = d.s1t.to_string();
  j["s"]["10"] = d.s10.to_string();
  j["s"]["01"] = d.s01.to_string();
  j["e"]["0"] = d.e0.to_string();
  j["e"]["t"] = d.et.to_string();
  j["e"]["1"] = d.e1.to_string();
  return j.dump();
}

std::optional<StokesDataVI> stokes_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.contains("s") || !j.contains("e"))
    return std::nullopt;
  auto get = [&](const nlohmann::json& sect,
                 const char* key) -> std::optional<GaussianRational> {
    if (!sect.contains(key) || !sect[key].is_string()) return std::nullopt;
    return GaussianRational::parse(sect[key].get<std::string>());
  };
  StokesDataVI d;
  struct Slot {
    const char* sect;
    const char* key;
    GaussianRational* dst;
  };
  Slot slots[] = {{"s", "0t", &d.s0t}, {"s", "t0", &d.st0},
                  {"s", "t1", &d.st1}, {"s", "1t", &d.s1t},
                  {"s", "10", &d.s10}, {"s", "01", &d.s01},
                  {"e", "0", &d.e0},   {"e", "t", &d.et},
                  {"e", "1", &d.e1}};
  for (const Slot& s : slots) {
    auto v = get(j[s.sect], s.key);
    if (!v) return std::nullopt;
    *s.dst = *v;
  }
  return d;
}

}  // namespace pcv
