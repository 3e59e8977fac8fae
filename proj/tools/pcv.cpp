// Command-line front end: verification suites, surface evaluation, line and
// singularity catalogs, orbit runs, and Stokes-data pipelines.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcv/braid_vi.hpp"
#include "pcv/charvar_v.hpp"
#include "pcv/charvar_vi.hpp"
#include "pcv/confluence.hpp"
#include "pcv/stokes.hpp"
#include "pcv/wild.hpp"

using namespace pcv;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitInconclusive = 2,
              kExitUsage = 64, kExitDomain = 65;

uint64_t default_seed() {
  if (const char* env = std::getenv("PCV_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 20260824;
}

GaussianRational parse_scalar_or_die(const std::string& text) {
  auto v = GaussianRational::parse(text);
  if (!v) {
    std::cerr << "malformed scalar '" << text << "' (expected a/b+c/d*i)\n";
    std::exit(kExitUsage);
  }
  return *v;
}

struct Reporter {
  bool all_ok = true;
  bool inconclusive = false;
  void line(const std::string& name, bool ok) {
    std::cout << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
    all_ok = all_ok && ok;
  }
  void verdict(const std::string& name, Verdict v) {
    std::cout << name << ": "
              << (v == Verdict::True
                      ? "PASS"
                      : v == Verdict::False ? "FAIL" : "INCONCLUSIVE")
              << "\n";
    if (v == Verdict::Inconclusive)
      inconclusive = true;
    else
      all_ok = all_ok && v == Verdict::True;
  }
  int exit_code() const {
    if (!all_ok) return kExitFail;
    if (inconclusive) return kExitInconclusive;
    return kExitPass;
  }
};

void suite_fricke_vi(Reporter& rep) {
  RatExpr F{fricke_vi_sym()};
  const char* names[4] = {"g0t", "gt0", "gt1", "g1t"};
  BraidGen gens[4] = {BraidGen::g0t, BraidGen::gt0, BraidGen::gt1,
                      BraidGen::g1t};
  for (int i = 0; i < 4; ++i) {
    RatExpr pulled = subst(fricke_vi_sym(), braid_map(gens[i]).rules());
    rep.line(std::string("surface polynomial preserved by ") + names[i],
             identity_equal_exact(pulled, F));
  }
  for (BraidGen g : {BraidGen::g0t, BraidGen::gt1}) {
    RatExpr pulled = subst(fricke_vi_sym(), explicit_g2_map(g).rules());
    rep.line(std::string("surface polynomial preserved by ") +
                 braid_gen_name(g) + "^2",
             identity_equal_exact(pulled, F));
  }
  rep.line("discriminant: trace form equals eigenvalue form",
           identity_equal_exact(RatExpr(w_vi_a_form_sym()),
                                RatExpr(w_vi_e_form_sym())));
  rep.line("line catalog has 24 entries", lines_vi_sym().size() == 24);
}

void suite_braid(Reporter& rep, bool mutate, uint64_t seed) {
  RelationReport rr = relations_report(mutate, seed);
  for (const auto& [name, ok] : rr.entries) rep.line(name, ok);
}

void suite_confluence(Reporter& rep) {
  RatExpr et = RatExpr::var(Sym::et), e1 = RatExpr::var(Sym::e1),
          X0 = RatExpr::var(Sym::X0);
  RatExpr Ft{fricke_v_sym_et_e1()};
  RatExpr factor = -(X0 - et / e1 - e1 / et) / (et * e1);
  rep.line("F∘Φ factor identity",
           identity_equal_exact(f_vi_pullback(), factor * Ft));
  Poly cubic = fricke_v_sym_et_e1();
  RatExpr FX0t{fricke_v_partial_et_e1(0)}, FWtt{fricke_v_partial_et_e1(1)},
      FU1t{fricke_v_partial_et_e1(2)};
  RatExpr U1 = RatExpr::var(Sym::U1);
  RatExpr rhs_t = FU1t / e1 + FWtt / et - X0 * FWtt / e1;
  RatExpr rhs_1 = FU1t / et - FWtt / e1;
  RatExpr rhs_0 = (U1 / e1) * (FU1t / et - FWtt / e1) -
                  (FX0t / (et * e1)) * (X0 - et / e1 - e1 / et);
  rep.line("transport of the X_t partial",
           identity_equal_exact(f_vi_partial_pullback(1), rhs_t));
  rep.line("transport of the X_1 partial",
           identity_equal_exact(f_vi_partial_pullback(2), rhs_1));
  rep.line("transport of the X_0 partial (on-surface)",
           identity_equal_exact(f_vi_partial_pullback(0), rhs_0, &cubic,
                                Sym::U1));
  RationalMap round = compose(phi_inverse_map(), phi_map());
  bool ok = identity_equal_exact(round.rule(Sym::Wt), RatExpr::var(Sym::Wt),
                                 &cubic, Sym::U1) &&
            identity_equal_exact(round.rule(Sym::U1), RatExpr::var(Sym::U1),
                                 &cubic, Sym::U1);
  rep.line("inverse∘forward = id (on-surface)", ok);
}

void suite_fricke_v(Reporter& rep) {
  RatExpr F{fricke_v_sym()};
  bool decomp_ok = true;
  for (const auto& d : decompositions_v_sym())
    decomp_ok = decomp_ok &&
                identity_equal_exact(d.A * d.B + d.C * d.D, F);
  rep.line("all 11 quadratic decompositions", decomp_ok);
  rep.line("line catalog has 22 entries", lines_v_sym().size() == 22);
  rep.line("degenerate discriminant: trace form equals eigenvalue form",
           identity_equal_exact(w_v_a_form_sym(), w_v_e_form_sym()));
}

ExactPoint random_exact_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  auto rnd = [&] { return GaussianRational(mpq_class(num(rng), den(rng))); };
  auto rnd_nz = [&] {
    GaussianRational v = rnd();
    while (v.is_zero()) v = rnd();
    return v;
  };
  return {{Sym::X0, rnd()},     {Sym::Wt, rnd()},    {Sym::U1, rnd()},
          {Sym::e0, rnd_nz()},  {Sym::et, rnd_nz()}, {Sym::e1, rnd_nz()},
          {Sym::einf, rnd_nz()}, {Sym::et1, rnd_nz()}, {Sym::nu, rnd_nz()}};
}

void suite_wild(Reporter& rep, uint64_t seed) {
  RatExpr Ft{fricke_v_sym()};
  rep.line("surface polynomial preserved by the monodromy",
           identity_equal_exact(subst(fricke_v_sym(),
                                      monodromy_v_map(false).rules()),
                                Ft));
  RationalMap round = compose(monodromy_v_map(false), monodromy_v_map(true));
  rep.line("monodromy ∘ inverse = id", round.is_identity());

  auto rng = seeded_rng(seed);
  // Exact pointwise checks; points where a denominator vanishes are skipped.
  auto pointwise = [&](auto&& check, int want) {
    int done = 0;
    for (int trial = 0; trial < 40 && done < want; ++trial) {
      ExactPoint p = random_exact_point(rng);
      try {
        if (!check(p)) return Verdict::False;
        ++done;
      } catch (const DomainError&) {
      }
    }
    return done == want ? Verdict::True : Verdict::Inconclusive;
  };

  rep.verdict(
      "half-monodromy squared equals the monodromy",
      pointwise(
          [](const ExactPoint& p) {
            const RationalMap& h = half_monodromy_map(HalfKind::t1);
            ExactPoint q = h.apply_exact(h.apply_exact(p));
            ExactPoint m = monodromy_v_map(false).apply_exact(p);
            for (Sym s : {Sym::X0, Sym::Wt, Sym::U1, Sym::nu})
              if (q.at(s) != m.at(s)) return false;
            return true;
          },
          8));
  rep.verdict(
      "square-root choice immaterial for the wild square",
      pointwise(
          [](const ExactPoint& p) {
            ExactPoint flipped = p;
            flipped[Sym::et] = -p.at(Sym::et);
            flipped[Sym::e1] = -p.at(Sym::e1);
            const RationalMap& w = wild_g0t_sq_map(false);
            ExactPoint a = w.apply_exact(p), b = w.apply_exact(flipped);
            for (Sym s : {Sym::X0, Sym::Wt, Sym::U1})
              if (a.at(s) != b.at(s)) return false;
            return true;
          },
          8));
  rep.verdict(
      "factor identity for the wild square",
      pointwise(
          [](const ExactPoint& p) {
            const RationalMap& w = wild_g0t_sq_map(false);
            ExactPoint q = w.apply_exact(p);
            GaussianRational lhs = fricke_v_sym_et_e1().eval_exact(q);
            GaussianRational den =
                p.at(Sym::X0) - p.at(Sym::e1) / p.at(Sym::et) -
                p.at(Sym::et) / p.at(Sym::e1);
            GaussianRational fx0 = f_vi_partial_pullback(0).eval_exact(p);
            GaussianRational Fv = fricke_v_sym_et_e1().eval_exact(p);
            return lhs * (den - fx0) == den * Fv;
          },
          8));
}

void suite_stokes(Reporter& rep, uint64_t seed) {
  StokesSym s = stokes_sym();
  auto m = monodromy_from_stokes(s);
  rep.line("tr(M_0) = e_0^2 + 2",
           identity_equal_exact(m.M0.trace(),
                                s.e0 * s.e0 + RatExpr(2)));
  rep.line("tr(M_t) = e_t^2 + 2",
           identity_equal_exact(m.Mt.trace(), s.et * s.et + RatExpr(2)));
  rep.line("tr(M_1) = e_1^2 + 2",
           identity_equal_exact(m.M1.trace(), s.e1 * s.e1 + RatExpr(2)));
  auto inv = stokes_invariants(s);
  rep.line("triple-product relation of the invariants",
           identity_equal_exact(inv[0] * inv[1] * inv[2], inv[3] * inv[4]));
  bool braid_ok = true;
  for (uint64_t k = 0; k < 3; ++k) {
    StokesDataVI d = make_admissible_stokes(seed + k);
    auto X = traces_from_stokes(d);
    GaussianRational ainf = ainf_from_stokes(d);
    std::array<GaussianRational, 4> a = {d.e0 + d.e0.inverse(),
                                         d.et + d.et.inverse(),
                                         d.e1 + d.e1.inverse(), ainf};
    auto th = theta_from_a(a);
    GaussianRational F0 = X[1] * X[2] + GaussianRational(2) * X[0] - th[0];
    StokesDataVI b = braid_on_stokes(StokesBraid::b0t, d);
    auto Xb = traces_from_stokes(b);
    braid_ok = braid_ok && Xb[0] == X[1] && Xb[1] == X[0] - F0 &&
               Xb[2] == X[2];
  }
  rep.line("braid move on Stokes data matches the surface action", braid_ok);
}

int run_verify(const std::string& suite, bool mutate, uint64_t seed) {
  Reporter rep;
  bool any = false;
  auto want = [&](const char* name) {
    return suite == "all" || suite == name;
  };
  if (want("fricke-vi")) suite_fricke_vi(rep), any = true;
  if (want("braid-relations")) suite_braid(rep, mutate, seed), any = true;
  if (want("confluence")) suite_confluence(rep), any = true;
  if (want("fricke-v")) suite_fricke_v(rep), any = true;
  if (want("wild")) suite_wild(rep, seed), any = true;
  if (want("stokes")) suite_stokes(rep, seed), any = true;
  if (!any) {
    std::cerr << "unknown suite '" << suite << "'\n";
    return kExitUsage;
  }
  return rep.exit_code();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Machine verification of a cubic-surface braid/confluence "
               "calculus and its Stokes-data pipelines"};
  app.require_subcommand(1);
  uint64_t seed = default_seed();
  std::string out_path, format = "json";

  // verify
  auto* verify = app.add_subcommand("verify", "run identity suites");
  std::string suite = "all";
  bool mutate = false;
  std::string mutate_name;
  verify->add_option("--suite", suite,
                     "fricke-vi|braid-relations|confluence|fricke-v|wild|"
                     "stokes|all");
  verify->add_option("--mutate", mutate_name,
                     "deliberately corrupt a generator (g0t-sign)");
  verify->add_option("--seed", seed, "seed for randomized identity checks");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a surface polynomial");
  std::string ev_surface = "vi";
  std::vector<std::string> ev_point;
  std::vector<std::string> ev_params;
  eval->add_option("--surface", ev_surface, "vi|v");
  eval->add_option("--point", ev_point, "three exact scalars")->expected(3);
  eval->add_option("--params", ev_params,
                   "exact eigenvalue scalars: vi: e0 et e1 einf; v: e0 et1 "
                   "einf");
  eval->add_option("--out", out_path, "output file");

  // lines
  auto* lines = app.add_subcommand("lines", "catalog the lines on a surface");
  std::string ln_surface = "vi";
  std::vector<std::string> ln_params;
  std::string ln_format = "csv";
  lines->add_option("--surface", ln_surface, "vi|v");
  lines->add_option("--params", ln_params, "eigenvalue scalars as for eval");
  lines->add_option("--format", ln_format, "csv|json");
  lines->add_option("--out", out_path, "output file");

  // sing
  auto* sing = app.add_subcommand("sing", "list singular points");
  std::string sg_surface = "vi";
  std::vector<std::string> sg_params;
  sing->add_option("--surface", sg_surface, "vi|v");
  sing->add_option("--params", sg_params, "eigenvalue scalars as for eval");
  sing->add_option("--out", out_path, "output file");

  // orbit
  auto* orbit = app.add_subcommand("orbit", "iterate a braid word");
  std::string ob_surface = "vi", ob_word = "g0t^2", ob_start = "sample";
  int ob_maxiter = 100;
  double ob_escape = 1e6, ob_tol = 1e-9;
  std::vector<std::string> ob_params;
  orbit->add_option("--surface", ob_surface, "vi (words act on trace triples)");
  orbit->add_option("--word", ob_word, "comma-separated braid word");
  orbit->add_option("--start", ob_start,
                    "sample | singular | three comma-separated re,im pairs "
                    "like \"1,0;2,0;0,0\"");
  orbit->add_option("--params", ob_params, "exact eigenvalue scalars");
  orbit->add_option("--maxiter", ob_maxiter);
  orbit->add_option("--escape", ob_escape, "escape radius");
  orbit->add_option("--tol", ob_tol, "match tolerance");
  orbit->add_option("--seed", seed);
  orbit->add_option("--out", out_path, "output file");

  // stokes
  auto* stokes = app.add_subcommand("stokes", "Stokes-data pipelines");
  std::string st_action = "traces", st_data;
  uint64_t st_random = 0;
  bool st_use_random = false;
  stokes->add_option("--data", st_data, "JSON file with Stokes data");
  auto* st_random_opt = stokes->add_option(
      "--random", st_random, "build admissible data from this seed");
  stokes->add_option("--action", st_action,
                     "traces|monodromy|braid0t|braidt1|confluent|json");
  stokes->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) {
      if (!mutate_name.empty() && mutate_name != "g0t-sign") {
        std::cerr << "unknown mutation '" << mutate_name << "'\n";
        return kExitUsage;
      }
      mutate = mutate_name == "g0t-sign";
      return run_verify(suite, mutate, seed);
    }

    if (*eval) {
      json j;
      if (ev_surface == "vi") {
        if (ev_params.size() != 4) {
          std::cerr << "--params needs e0 et e1 einf\n";
          return kExitUsage;
        }
        ParamsVI p{parse_scalar_or_die(ev_params[0]),
                   parse_scalar_or_die(ev_params[1]),
                   parse_scalar_or_die(ev_params[2]),
                   parse_scalar_or_die(ev_params[3])};
        std::array<GaussianRational, 3> X{parse_scalar_or_die(ev_point[0]),
                                          parse_scalar_or_die(ev_point[1]),
                                          parse_scalar_or_die(ev_point[2])};
        FrickeVI f = fricke_eval(X, p);
        j = {{"F", f.F.to_string()},
             {"F_X0", f.F0.to_string()},
             {"F_Xt", f.Ft.to_string()},
             {"F_X1", f.F1.to_string()}};
      } else if (ev_surface == "v") {
        if (ev_params.size() != 3) {
          std::cerr << "--params needs e0 et1 einf\n";
          return kExitUsage;
        }
        ParamsV p{parse_scalar_or_die(ev_params[0]),
                  parse_scalar_or_die(ev_params[1]),
                  parse_scalar_or_die(ev_params[2])};
        std::array<GaussianRational, 3> P{parse_scalar_or_die(ev_point[0]),
                                          parse_scalar_or_die(ev_point[1]),
                                          parse_scalar_or_die(ev_point[2])};
        FrickeV f = fricke_v_eval(P, p);
        j = {{"F", f.F.to_string()},
             {"F_X0", f.FX0.to_string()},
             {"F_Wt", f.FWt.to_string()},
             {"F_U1", f.FU1.to_string()}};
      } else {
        std::cerr << "--surface must be vi or v\n";
        return kExitUsage;
      }
      write_output(out_path, j.dump(2) + "\n");
      return kExitPass;
    }

    if (*lines) {
      std::ostringstream text;
      if (ln_surface == "vi") {
        if (ln_params.size() != 4) {
          std::cerr << "--params needs e0 et e1 einf\n";
          return kExitUsage;
        }
        ParamsVI p{parse_scalar_or_die(ln_params[0]),
                   parse_scalar_or_die(ln_params[1]),
                   parse_scalar_or_die(ln_params[2]),
                   parse_scalar_or_die(ln_params[3])};
        auto ls = lines_vi(p);
        if (ln_format == "csv") {
          text << "k,family,xk,ci,cj,rhs\n";
          for (const auto& L : ls)
            text << L.k << "," << L.family << ",\"" << L.xk.to_string()
                 << "\",\"" << L.ci.to_string() << "\",\"" << L.cj.to_string()
                 << "\",\"" << L.rhs.to_string() << "\"\n";
        } else {
          json arr = json::array();
          for (const auto& L : ls)
            arr.push_back({{"k", L.k},
                           {"family", L.family},
                           {"xk", L.xk.to_string()},
                           {"ci", L.ci.to_string()},
                           {"cj", L.cj.to_string()},
                           {"rhs", L.rhs.to_string()}});
          text << arr.dump(2) << "\n";
        }
      } else if (ln_surface == "v") {
        if (ln_params.size() != 3) {
          std::cerr << "--params needs e0 et1 einf\n";
          return kExitUsage;
        }
        ParamsV p{parse_scalar_or_die(ln_params[0]),
                  parse_scalar_or_die(ln_params[1]),
                  parse_scalar_or_die(ln_params[2])};
        auto ls = lines_v(p);
        if (ln_format == "csv") {
          text << "decomposition,branch,fixed_var,fixed_value,c1,c2,c0\n";
          for (const auto& L : ls)
            text << L.decomposition << "," << L.branch << ","
                 << sym_name(L.fixed_var) << ",\""
                 << L.fixed_value.to_string() << "\",\"" << L.c1.to_string()
                 << "\",\"" << L.c2.to_string() << "\",\"" << L.c0.to_string()
                 << "\"\n";
        } else {
          json arr = json::array();
          for (const auto& L : ls)
            arr.push_back({{"decomposition", L.decomposition},
                           {"branch", L.branch},
                           {"fixed_var", sym_name(L.fixed_var)},
                           {"fixed_value", L.fixed_value.to_string()},
                           {"c1", L.c1.to_string()},
                           {"c2", L.c2.to_string()},
                           {"c0", L.c0.to_string()}});
          text << arr.dump(2) << "\n";
        }
      } else {
        std::cerr << "--surface must be vi or v\n";
        return kExitUsage;
      }
      write_output(out_path, text.str());
      return kExitPass;
    }

    if (*sing) {
      json arr = json::array();
      if (sg_surface == "vi") {
        if (sg_params.size() != 4) {
          std::cerr << "--params needs e0 et e1 einf\n";
          return kExitUsage;
        }
        ParamsVI p{parse_scalar_or_die(sg_params[0]),
                   parse_scalar_or_die(sg_params[1]),
                   parse_scalar_or_die(sg_params[2]),
                   parse_scalar_or_die(sg_params[3])};
        for (const auto& s : singularities_vi(p))
          arr.push_back({{"kind", s.kind},
                         {"X", {s.X[0].to_string(), s.X[1].to_string(),
                                s.X[2].to_string()}}});
      } else if (sg_surface == "v") {
        if (sg_params.size() != 3) {
          std::cerr << "--params needs e0 et1 einf\n";
          return kExitUsage;
        }
        ParamsV p{parse_scalar_or_die(sg_params[0]),
                  parse_scalar_or_die(sg_params[1]),
                  parse_scalar_or_die(sg_params[2])};
        for (const auto& s : singularities_v(p))
          arr.push_back({{"kind", s.kind},
                         {"P", {s.P[0].to_string(), s.P[1].to_string(),
                                s.P[2].to_string()}}});
      } else {
        std::cerr << "--surface must be vi or v\n";
        return kExitUsage;
      }
      write_output(out_path, arr.dump(2) + "\n");
      return kExitPass;
    }

    if (*orbit) {
      if (ob_surface != "vi") {
        std::cerr << "orbit words are defined on the trace-triple surface "
                     "(--surface vi)\n";
        return kExitUsage;
      }
      if (ob_params.size() != 4) {
        std::cerr << "--params needs e0 et e1 einf\n";
        return kExitUsage;
      }
      ParamsVI p{parse_scalar_or_die(ob_params[0]),
                 parse_scalar_or_die(ob_params[1]),
                 parse_scalar_or_die(ob_params[2]),
                 parse_scalar_or_die(ob_params[3])};
      auto word = parse_braid_word(ob_word);
      if (!word) {
        std::cerr << "malformed braid word '" << ob_word << "'\n";
        return kExitUsage;
      }
      // Numeric parameter values for the word application.
      NumPoint ep;
      for (const auto& [s, v] : p.as_point()) ep[s] = v.to_complex();
      std::array<C, 3> start;
      if (ob_start == "sample") {
        auto thq = p.theta();
        std::array<C, 4> th;
        for (int i = 0; i < 4; ++i) th[i] = thq[i].to_complex();
        start = sample_point_vi(th, seed);
      } else if (ob_start == "singular") {
        auto ss = singularities_vi(p);
        if (ss.empty()) {
          std::cerr << "surface has no singular point at these parameters\n";
          return kExitDomain;
        }
        for (int i = 0; i < 3; ++i) start[i] = ss[0].X[i].to_complex();
      } else {
        std::stringstream sp(ob_start);
        std::string tok;
        int i = 0;
        while (std::getline(sp, tok, ';') && i < 3) {
          double re = 0, im = 0;
          if (std::sscanf(tok.c_str(), "%lf,%lf", &re, &im) < 1) {
            std::cerr << "malformed start point\n";
            return kExitUsage;
          }
          start[i++] = C(re, im);
        }
        if (i != 3) {
          std::cerr << "start point needs three re,im pairs\n";
          return kExitUsage;
        }
      }
      NumMap3 gen = [word, ep](const std::array<C, 3>& P) {
        NumPoint pt = ep;
        pt[Sym::X0] = P[0];
        pt[Sym::Xt] = P[1];
        pt[Sym::X1] = P[2];
        NumPoint q = apply_braid_word_num(*word, pt);
        return std::array<C, 3>{q[Sym::X0], q[Sym::Xt], q[Sym::X1]};
      };
      OrbitRecord rec = orbit_run("vi", start, {gen}, ob_maxiter, ob_escape,
                                  ob_tol);
      write_output(out_path, orbit_csv(rec));
      return kExitPass;
    }

    if (*stokes) {
      st_use_random = st_random_opt->count() > 0;
      StokesDataVI d;
      if (st_use_random || st_data.empty()) {
        d = make_admissible_stokes(st_use_random ? st_random : seed);
      } else {
        std::ifstream f(st_data);
        if (!f) {
          std::cerr << "cannot open '" << st_data << "'\n";
          return kExitUsage;
        }
        std::stringstream buf;
        buf << f.rdbuf();
        auto parsed = stokes_from_json(buf.str());
        if (!parsed) {
          std::cerr << "malformed Stokes data JSON\n";
          return kExitUsage;
        }
        d = *parsed;
      }
      json j;
      if (st_action == "traces") {
        auto X = traces_from_stokes(d);
        j = {{"X0", X[0].to_string()},
             {"Xt", X[1].to_string()},
             {"X1", X[2].to_string()},
             {"a_inf", ainf_from_stokes(d).to_string()}};
      } else if (st_action == "monodromy") {
        auto m = monodromy_from_stokes(d);
        auto dump = [](const Mat3Q& M) {
          json rows = json::array();
          for (int r = 0; r < 3; ++r) {
            json row = json::array();
            for (int c = 0; c < 3; ++c) row.push_back(M(r, c).to_string());
            rows.push_back(row);
          }
          return rows;
        };
        j = {{"M0", dump(m.M0)},
             {"Mt", dump(m.Mt)},
             {"M1", dump(m.M1)},
             {"Minf_inv", dump(m.Minf_inv)},
             {"E", m.E.to_string()},
             {"Eprime", m.Eprime.to_string()}};
      } else if (st_action == "braid0t" || st_action == "braidt1") {
        StokesDataVI b = braid_on_stokes(
            st_action == "braid0t" ? StokesBraid::b0t : StokesBraid::bt1, d);
        j = json::parse(stokes_to_json(b));
      } else if (st_action == "confluent") {
        auto r = confluent_stokes(d);
        j = {{"outer",
              {{"s0t", r.outer.s0t.to_string()},
               {"s01", r.outer.s01.to_string()},
               {"st0", r.outer.st0.to_string()},
               {"s10", r.outer.s10.to_string()}}},
             {"X0", r.P[0].to_string()},
             {"Wt", r.P[1].to_string()},
             {"U1", r.P[2].to_string()}};
      } else if (st_action == "json") {
        j = json::parse(stokes_to_json(d));
      } else {
        std::cerr << "unknown action '" << st_action << "'\n";
        return kExitUsage;
      }
      write_output(out_path, j.dump(2) + "\n");
      return kExitPass;
    }
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
