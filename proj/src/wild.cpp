#include "pcv/wild.hpp"

#include <cmath>
#include <sstream>

namespace pcv {

const RationalMap& monodromy_v_map(bool inverse) {
  static const RationalMap fwd = [] {
    RatExpr X0 = RatExpr::var(Sym::X0), Wt = RatExpr::var(Sym::Wt),
            U1 = RatExpr::var(Sym::U1);
    RatExpr FWt{fricke_v_partial(1)}, FU1{fricke_v_partial(2)};
    SubstMap r;
    r[Sym::Wt] = Wt - FWt;
    r[Sym::U1] = U1 - FU1 + X0 * FWt;
    return RationalMap(std::move(r));
  }();
  static const RationalMap bwd = [] {
    RatExpr X0 = RatExpr::var(Sym::X0), Wt = RatExpr::var(Sym::Wt),
            U1 = RatExpr::var(Sym::U1);
    RatExpr FWt{fricke_v_partial(1)}, FU1{fricke_v_partial(2)};
    SubstMap r;
    r[Sym::Wt] = Wt - FWt + X0 * FU1;
    r[Sym::U1] = U1 - FU1;
    return RationalMap(std::move(r));
  }();
  return inverse ? bwd : fwd;
}

std::array<C, 3> monodromy_v(const std::array<C, 3>& P,
                             const std::array<C, 4>& theta, bool inverse) {
  FrickeVN f = fricke_v_eval_num(P, theta);
  if (!inverse)
    return {P[0], P[1] - f.FWt, P[2] - f.FU1 + P[0] * f.FWt};
  return {P[0], P[1] - f.FWt + P[0] * f.FU1, P[2] - f.FU1};
}

const RationalMap& wild_g0t_sq_map(bool inverse) {
  static const RationalMap fwd =
      compose(phi_inverse_map(),
              compose(explicit_g2_map(BraidGen::g0t), phi_map()));
  static const RationalMap bwd = [] {
    const RationalMap& gt0 = braid_map(BraidGen::gt0);
    return compose(phi_inverse_map(),
                   compose(compose(gt0, gt0), phi_map()));
  }();
  return inverse ? bwd : fwd;
}

namespace {

constexpr Sym kVSym3[3] = {Sym::X0, Sym::Wt, Sym::U1};

NumPoint v_num_point(const std::array<C, 3>& P, const NumConfluentParams& cp) {
  return {{Sym::X0, P[0]},   {Sym::Wt, P[1]}, {Sym::U1, P[2]},
          {Sym::e0, cp.e0},  {Sym::et, cp.et}, {Sym::e1, cp.e1},
          {Sym::einf, cp.einf}};
}

std::array<C, 3> apply_v_rules_num(const RationalMap& m, const NumPoint& pt) {
  std::array<C, 3> out;
  for (int i = 0; i < 3; ++i) {
    RatExpr r = m.rule(kVSym3[i]);
    C den = RatExpr(r.den()).eval_num(pt);
    if (std::abs(den) < 1e-13)
      throw DomainError("indeterminate point of the wild square");
    out[i] = r.eval_num(pt);
  }
  return out;
}

}  // namespace

std::array<GaussianRational, 3> wild_g0t_sq(
    const std::array<GaussianRational, 3>& P, const ConfluentParams& cp,
    bool inverse) {
  ExactPoint pt = cp.as_point();
  for (int i = 0; i < 3; ++i) pt[kVSym3[i]] = P[i];
  const RationalMap& m = wild_g0t_sq_map(inverse);
  std::array<GaussianRational, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = m.rule(kVSym3[i]).eval_exact(pt);
  return out;
}

std::array<C, 3> wild_g0t_sq_num(const std::array<C, 3>& P,
                                 const NumConfluentParams& cp, bool inverse) {
  // Stepwise composition (coordinate change, squared move, inverse change)
  // is far better conditioned than evaluating the composed symbolic rules,
  // whose huge numerators suffer catastrophic cancellation in doubles.
  std::array<C, 3> X = phi_forward_num(P, cp);
  NumPoint pt{{Sym::X0, X[0]},  {Sym::Xt, X[1]}, {Sym::X1, X[2]},
              {Sym::e0, cp.e0}, {Sym::et, cp.et}, {Sym::e1, cp.e1},
              {Sym::einf, cp.einf}};
  BraidWord w{{inverse ? BraidGen::gt0 : BraidGen::g0t, 2}};
  pt = apply_braid_word_num(w, std::move(pt));
  return phi_inverse_num({pt.at(Sym::X0), pt.at(Sym::Xt), pt.at(Sym::X1)}, cp,
                         1e-12);
}

NumConfluentParams confluent_params_from_nu(const NumParamsV& pv, C nu) {
  if (std::abs(nu) == 0.0) throw DomainError("nu must be nonzero");
  NumConfluentParams cp;
  cp.e0 = pv.e0;
  cp.et1 = pv.et1;
  cp.einf = pv.einf;
  cp.nu = nu;
  cp.et = std::sqrt(nu);
  cp.e1 = -pv.et1 / cp.et;
  return cp;
}

const RationalMap& half_monodromy_map(HalfKind which) {
  static const RationalMap t1 = [] {
    RatExpr X0 = RatExpr::var(Sym::X0), Wt = RatExpr::var(Sym::Wt),
            U1 = RatExpr::var(Sym::U1);
    RatExpr t = RatExpr::var(Sym::et1), nu = RatExpr::var(Sym::nu);
    RatExpr FWt{fricke_v_partial(1)}, FU1{fricke_v_partial(2)};
    RatExpr box = (FU1 - (X0 + t / nu) * FWt) / (X0 + t / nu + nu / t);
    SubstMap r;
    r[Sym::Wt] = Wt - FWt - box;
    r[Sym::U1] = U1 - (nu / t) * box;
    r[Sym::nu] = t * t / nu;
    return RationalMap(std::move(r));
  }();
  static const RationalMap one_t = [] {
    RatExpr X0 = RatExpr::var(Sym::X0), Wt = RatExpr::var(Sym::Wt),
            U1 = RatExpr::var(Sym::U1);
    RatExpr t = RatExpr::var(Sym::et1), nu = RatExpr::var(Sym::nu);
    RatExpr FWt{fricke_v_partial(1)}, FU1{fricke_v_partial(2)};
    RatExpr sq = (FWt - (X0 + nu / t) * FU1) / (X0 + t / nu + nu / t);
    SubstMap r;
    r[Sym::Wt] = Wt - (t / nu) * sq;
    r[Sym::U1] = U1 - FU1 - sq;
    r[Sym::nu] = t * t / nu;
    return RationalMap(std::move(r));
  }();
  return which == HalfKind::t1 ? t1 : one_t;
}

HalfResultNum half_monodromy_wild(const std::array<C, 3>& P,
                                  const NumParamsV& pv, C nu, HalfKind which) {
  NumPoint pt = {{Sym::X0, P[0]},  {Sym::Wt, P[1]},   {Sym::U1, P[2]},
                 {Sym::e0, pv.e0}, {Sym::et1, pv.et1}, {Sym::einf, pv.einf},
                 {Sym::nu, nu}};
  const RationalMap& m = half_monodromy_map(which);
  HalfResultNum out;
  for (int i = 0; i < 3; ++i) {
    RatExpr r = m.rule(kVSym3[i]);
    if (std::abs(RatExpr(r.den()).eval_num(pt)) < 1e-13)
      throw DomainError("indeterminate point of the half-monodromy");
    out.P[i] = r.eval_num(pt);
  }
  out.nu = m.rule(Sym::nu).eval_num(pt);
  return out;
}

const RationalMap& bar_half_monodromy_map() {
  static const RationalMap bar = [] {
    RatExpr Wt = RatExpr::var(Sym::Wt), U1 = RatExpr::var(Sym::U1);
    RatExpr FWt{fricke_v_partial(1)};
    SubstMap r;
    r[Sym::Wt] = U1;
    r[Sym::U1] = Wt - FWt;
    r[Sym::e0] = RatExpr::var(Sym::einf);
    r[Sym::einf] = RatExpr::var(Sym::e0);
    return RationalMap(std::move(r));
  }();
  return bar;
}

std::array<C, 3> bar_half_monodromy(const std::array<C, 3>& P,
                                    const std::array<C, 4>& theta) {
  FrickeVN f = fricke_v_eval_num(P, theta);
  return {P[0], P[2], P[1] - f.FWt};
}

std::array<C, 3> torus_flow(const std::array<C, 3>& P,
                            const std::array<C, 4>& theta,
                            const TorusFlowSpec& spec) {
  if (spec.which != Sym::U1 && spec.which != Sym::Wt)
    throw DomainError("torus_flow: conserved coordinate must be U1 or Wt");
  bool u1flow = spec.which == Sym::U1;
  C total = std::log(spec.nu) + C(0, 2 * M_PI * spec.logBranch);
  auto field = [&](const std::vector<C>& y) {
    std::array<C, 3> Q = {y[0], y[1], y[2]};
    FrickeVN f = fricke_v_eval_num(Q, theta);
    if (u1flow) {
      if (std::abs(Q[2]) < 1e-12)
        throw DomainError("torus_flow: U1 reached zero");
      return std::vector<C>{f.FWt / Q[2], -f.FX0 / Q[2], C(0)};
    }
    if (std::abs(Q[1]) < 1e-12)
      throw DomainError("torus_flow: Wt reached zero");
    return std::vector<C>{-f.FU1 / Q[1], C(0), f.FX0 / Q[1]};
  };
  std::vector<C> y = integrate_rk4(field, {P[0], P[1], P[2]}, total, spec.tol);
  return {y[0], y[1], y[2]};
}

namespace {
double dist3(const std::array<C, 3>& a, const std::array<C, 3>& b) {
  double m = 0;
  for (int i = 0; i < 3; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}
}  // namespace

SigmaReport extract_sigma(const NumParamsV& pv, C nu, C nu_alt,
                          const std::vector<std::array<C, 3>>& points,
                          double flow_tol) {
  auto theta = pv.theta();
  auto sigma_at = [&](C n, const std::array<C, 3>& P) {
    NumConfluentParams cp = confluent_params_from_nu(pv, n);
    std::array<C, 3> Q = wild_g0t_sq_num(P, cp, /*inverse=*/true);
    // tau_{U1}(n)^{-1} is the U1-conserving flow for time +log n.
    TorusFlowSpec back{Sym::U1, n, 0, flow_tol};
    return torus_flow(Q, theta, back);
  };
  auto sigma_prime_at = [&](C n, const std::array<C, 3>& P) {
    NumConfluentParams cp = confluent_params_from_nu(pv, n);
    std::array<C, 3> Q = wild_g0t_sq_num(P, cp, /*inverse=*/false);
    Q = monodromy_v(Q, theta);
    TorusFlowSpec fwdflow{Sym::Wt, n, 0, flow_tol};
    return torus_flow(Q, theta, fwdflow);
  };
  SigmaReport rep;
  for (const auto& P : points) {
    SigmaSample s;
    s.P = P;
    s.sigma = sigma_at(nu, P);
    s.sigma_prime = sigma_prime_at(nu, P);
    rep.max_nu_independence_residual =
        std::max({rep.max_nu_independence_residual,
                  dist3(s.sigma, sigma_at(nu_alt, P)),
                  dist3(s.sigma_prime, sigma_prime_at(nu_alt, P))});
    // sigma' o sigma = monodromy
    rep.max_monodromy_residual =
        std::max(rep.max_monodromy_residual,
                 dist3(sigma_prime_at(nu, s.sigma), monodromy_v(P, theta)));
    // tau_{Wt}(nu)^{-1} o sigma' = sigma' o tau_{U1}(nu)^{-1}.  The two
    // conserved-coordinate flows run with opposite orientation relative to
    // their displayed fields: tau_{U1}^{-1} is time +log nu, tau_{Wt}^{-1}
    // is time -log nu.
    TorusFlowSpec wt_back{Sym::Wt, 1.0 / nu, 0, flow_tol};
    TorusFlowSpec u1_back{Sym::U1, nu, 0, flow_tol};
    std::array<C, 3> lhs = torus_flow(s.sigma_prime, theta, wt_back);
    std::array<C, 3> rhs = sigma_prime_at(nu, torus_flow(P, theta, u1_back));
    rep.max_consistency_residual =
        std::max(rep.max_consistency_residual, dist3(lhs, rhs));
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

double nu_derivative_check(const NumParamsV& pv, C nu,
                           const std::array<C, 3>& P, double h_rel) {
  NumConfluentParams cp = confluent_params_from_nu(pv, nu);
  std::array<C, 3> Q = wild_g0t_sq_num(P, cp, /*inverse=*/false);
  double h = h_rel * std::abs(nu);
  NumConfluentParams cp_p = confluent_params_from_nu(pv, nu + h);
  NumConfluentParams cp_m = confluent_params_from_nu(pv, nu - h);
  std::array<C, 3> up = wild_g0t_sq_num(Q, cp_p, /*inverse=*/true);
  std::array<C, 3> dn = wild_g0t_sq_num(Q, cp_m, /*inverse=*/true);
  auto theta = pv.theta();
  FrickeVN f = fricke_v_eval_num(P, theta);
  // The logarithmic nu-derivative of the inverse wild family, evaluated at
  // the forward image, is minus the U1-conserving field at P.
  std::array<C, 3> field = {-f.FWt / P[2], f.FX0 / P[2], C(0)};
  double resid = 0, scale = 1;
  for (int i = 0; i < 3; ++i) {
    C d = nu * (up[i] - dn[i]) / (2.0 * h);
    resid = std::max(resid, std::abs(d - field[i]));
    scale = std::max(scale, std::abs(field[i]));
  }
  return resid / scale;
}

OrbitRecord orbit_run(const std::string& surface, const std::array<C, 3>& P0,
                      const std::vector<NumMap3>& generators, int max_iter,
                      double escape_radius, double match_tol) {
  OrbitRecord rec;
  rec.surface = surface;
  auto norm3 = [](const std::array<C, 3>& p) {
    return std::max({std::abs(p[0]), std::abs(p[1]), std::abs(p[2])});
  };
  rec.iterates.push_back(P0);
  rec.norms.push_back(norm3(P0));
  // Fixed-point test: every generator individually moves the point < tol.
  bool fixed = true;
  try {
    for (const auto& g : generators)
      if (dist3(g(P0), P0) >= match_tol) {
        fixed = false;
        break;
      }
  } catch (const DomainError&) {
    fixed = false;
  }
  if (fixed && !generators.empty()) {
    rec.classification = "fixed";
    rec.period = 1;
    return rec;
  }
  std::array<C, 3> P = P0;
  for (int it = 1; it <= max_iter; ++it) {
    try {
      for (const auto& g : generators) P = g(P);
    } catch (const DomainError& e) {
      rec.classification = "bounded-unresolved";
      rec.note = std::string("truncated: ") + e.what();
      return rec;
    }
    rec.iterates.push_back(P);
    rec.norms.push_back(norm3(P));
    if (rec.norms.back() > escape_radius) {
      rec.classification = "escaping";
      return rec;
    }
    for (int j = 0; j < it; ++j)
      if (dist3(rec.iterates[j], P) < match_tol) {
        rec.classification = "periodic";
        rec.period = it - j;
        return rec;
      }
  }
  rec.classification = "bounded-unresolved";
  return rec;
}

std::string orbit_csv(const OrbitRecord& rec) {
  std::ostringstream out;
  out << "iter,coord1,coord2,coord3,norm\n";
  out.precision(17);
  for (size_t i = 0; i < rec.iterates.size(); ++i) {
    const auto& p = rec.iterates[i];
    out << i;
    for (int c = 0; c < 3; ++c) {
      out << ",\"" << std::real(p[c]);
      double im = std::imag(p[c]);
      if (im >= 0) out << "+";
      out << im << "i\"";
    }
    out << "," << rec.norms[i] << "\n";
  }
  out << "# classification," << rec.classification;
  if (rec.classification == "periodic") out << "(" << rec.period << ")";
  if (!rec.note.empty()) out << "," << rec.note;
  out << "\n";
  return out.str();
}

}  // namespace pcv
