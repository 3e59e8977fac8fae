#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pcv/braid_vi.hpp"
#include "pcv/confluence.hpp"

namespace pcv {

// --- monodromy on the degenerate surface ------------------------------------
// The explicit polynomial monodromy pair (forward and inverse), in the
// symbols X0, Wt, U1, e0, et1, einf.
const RationalMap& monodromy_v_map(bool inverse = false);
std::array<C, 3> monodromy_v(const std::array<C, 3>& P,
                             const std::array<C, 4>& theta,
                             bool inverse = false);

// --- the nu-family of wild squares ------------------------------------------
// Conjugation of the explicit square through the coordinate change, in the
// symbols X0, Wt, U1, e0, et, e1, einf (nu = et^2 enters via et).
const RationalMap& wild_g0t_sq_map(bool inverse = false);
std::array<GaussianRational, 3> wild_g0t_sq(
    const std::array<GaussianRational, 3>& P, const ConfluentParams& cp,
    bool inverse = false);
std::array<C, 3> wild_g0t_sq_num(const std::array<C, 3>& P,
                                 const NumConfluentParams& cp,
                                 bool inverse = false);

// Builds numeric confluent parameters from nu with et the principal square
// root (the choice is immaterial: the composed maps depend on nu only).
NumConfluentParams confluent_params_from_nu(const NumParamsV& pv, C nu);

// --- half-monodromies -------------------------------------------------------
enum class HalfKind { t1, one_t };
// In symbols X0, Wt, U1, et1, nu; carries the parameter rule nu -> et1^2/nu.
const RationalMap& half_monodromy_map(HalfKind which);
struct HalfResultNum {
  std::array<C, 3> P;
  C nu;  // transformed parameter
};
HalfResultNum half_monodromy_wild(const std::array<C, 3>& P,
                                  const NumParamsV& pv, C nu, HalfKind which);

// Radial-limit half-monodromy (X0, Wt, U1) -> (X0, U1, Wt - F~_{Wt}).  Its
// parameter action exchanges e0 <-> einf (equivalently th~_t <-> th~_1);
// with that exchange its square is the monodromy.
const RationalMap& bar_half_monodromy_map();
std::array<C, 3> bar_half_monodromy(const std::array<C, 3>& P,
                                    const std::array<C, 4>& theta);

// --- torus flows ------------------------------------------------------------
struct TorusFlowSpec {
  Sym which = Sym::U1;  // U1 or Wt: which coordinate the flow conserves
  C nu;
  int logBranch = 0;    // adds 2*pi*i*logBranch to the principal log nu
  double tol = 1e-10;
};
// Integrates the Hamiltonian field for time log(nu); the conserved
// coordinate must stay away from zero along the path.
std::array<C, 3> torus_flow(const std::array<C, 3>& P,
                            const std::array<C, 4>& theta,
                            const TorusFlowSpec& spec);

// --- Stokes-operator extraction ---------------------------------------------
struct SigmaSample {
  std::array<C, 3> P, sigma, sigma_prime;
};
struct SigmaReport {
  std::vector<SigmaSample> samples;
  double max_nu_independence_residual = 0;  // sigma at nu vs at nu_alt
  double max_monodromy_residual = 0;        // sigma' o sigma vs monodromy
  double max_consistency_residual = 0;      // tau_Wt^{-1} o s' vs s' o tau_U1^{-1}
};
// sigma(P)  = tau_{U1}(nu)^{-1}( wild-inverse-square(P) );
// sigma'(P) = tau_{Wt}(nu)( monodromy( wild-forward-square(P) ) ).
// Orientation convention: tau_{U1}(nu)^{-1} is the U1-conserving flow run for
// time +log nu; tau_{Wt}(nu) is the Wt-conserving flow run for time +log nu
// (the two flows are oppositely oriented relative to their displayed fields).
SigmaReport extract_sigma(const NumParamsV& pv, C nu, C nu_alt,
                          const std::vector<std::array<C, 3>>& points,
                          double flow_tol = 1e-10);

// Central-difference check: nu * d/dnu of the inverse wild square family,
// evaluated at the forward image of P, equals minus the U1-conserving field
// at P; returns the relative residual.
double nu_derivative_check(const NumParamsV& pv, C nu,
                           const std::array<C, 3>& P, double h_rel = 1e-5);

// --- orbit dynamics ---------------------------------------------------------
using NumMap3 = std::function<std::array<C, 3>(const std::array<C, 3>&)>;

struct OrbitRecord {
  std::string surface;  // "vi" or "v"
  std::vector<std::array<C, 3>> iterates;  // iterates[0] = initial point
  std::vector<double> norms;
  std::string classification;  // fixed | periodic(p) | bounded-unresolved | escaping
  int period = 0;
  std::string note;  // truncation cause, if any
};

OrbitRecord orbit_run(const std::string& surface, const std::array<C, 3>& P0,
                      const std::vector<NumMap3>& generators, int max_iter,
                      double escape_radius, double match_tol);
// CSV with header iter,coord1,coord2,coord3,norm and a classification footer.
std::string orbit_csv(const OrbitRecord& rec);

}  // namespace pcv
