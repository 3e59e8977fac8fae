#include "pcv/braid_vi.hpp"

#include <map>
#include <random>
#include <sstream>

namespace pcv {

RationalMap braid_generator(int i, int j) {
  SubstMap rules;
  rules[kXSym[i]] = RatExpr::var(kXSym[j]);
  rules[kXSym[j]] =
      RatExpr::var(kXSym[i]) - RatExpr(fricke_vi_partial(i));
  rules[kESym[i]] = RatExpr::var(kESym[j]);
  rules[kESym[j]] = RatExpr::var(kESym[i]);
  return RationalMap(std::move(rules));
}

RationalMap braid_generator_mutated(int i, int j) {
  SubstMap rules;
  rules[kXSym[i]] = RatExpr::var(kXSym[j]);
  rules[kXSym[j]] =
      RatExpr::var(kXSym[i]) + RatExpr(fricke_vi_partial(i));
  rules[kESym[i]] = RatExpr::var(kESym[j]);
  rules[kESym[j]] = RatExpr::var(kESym[i]);
  return RationalMap(std::move(rules));
}

namespace {
constexpr std::pair<int, int> kGenIdx[6] = {
    {0, 1},  // g0t
    {1, 0},  // gt0
    {1, 2},  // gt1
    {2, 1},  // g1t
    {2, 0},  // g10
    {0, 2},  // g01
};
constexpr const char* kGenNames[6] = {"g0t", "gt0", "gt1",
                                      "g1t", "g10", "g01"};
}  // namespace

std::optional<BraidGen> braid_gen_from_name(const std::string& name) {
  for (int i = 0; i < 6; ++i)
    if (name == kGenNames[i]) return static_cast<BraidGen>(i);
  return std::nullopt;
}

const char* braid_gen_name(BraidGen g) {
  return kGenNames[static_cast<int>(g)];
}

BraidGen braid_gen_inverse(BraidGen g) {
  switch (g) {
    case BraidGen::g0t: return BraidGen::gt0;
    case BraidGen::gt0: return BraidGen::g0t;
    case BraidGen::gt1: return BraidGen::g1t;
    case BraidGen::g1t: return BraidGen::gt1;
    case BraidGen::g10: return BraidGen::g01;
    default: return BraidGen::g10;
  }
}

const RationalMap& braid_map(BraidGen g) {
  static const std::array<RationalMap, 6> maps = [] {
    std::array<RationalMap, 6> out;
    for (int i = 0; i < 6; ++i)
      out[i] = braid_generator(kGenIdx[i].first, kGenIdx[i].second);
    return out;
  }();
  return maps[static_cast<int>(g)];
}

const RationalMap& explicit_g2_map(BraidGen which) {
  static const RationalMap g0t2 = [] {
    RatExpr X0 = RatExpr::var(Sym::X0), Xt = RatExpr::var(Sym::Xt),
            X1 = RatExpr::var(Sym::X1);
    RatExpr F0{fricke_vi_partial(0)}, Ft{fricke_vi_partial(1)};
    SubstMap r;
    r[Sym::X0] = X0 - F0;
    r[Sym::Xt] = Xt - Ft + X1 * F0;
    return RationalMap(std::move(r));
  }();
  static const RationalMap gt12 = [] {
    RatExpr X0 = RatExpr::var(Sym::X0), Xt = RatExpr::var(Sym::Xt),
            X1 = RatExpr::var(Sym::X1);
    RatExpr Ft{fricke_vi_partial(1)}, F1{fricke_vi_partial(2)};
    SubstMap r;
    r[Sym::Xt] = Xt - Ft;
    r[Sym::X1] = X1 - F1 + X0 * Ft;
    return RationalMap(std::move(r));
  }();
  if (which == BraidGen::g0t) return g0t2;
  if (which == BraidGen::gt1) return gt12;
  throw DomainError("explicit square available for g0t and gt1 only");
}

std::optional<BraidWord> parse_braid_word(const std::string& text) {
  BraidWord w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::string t;
    for (char c : tok)
      if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) continue;
    int power = 1;
    auto caret = t.find('^');
    std::string name = t;
    if (caret != std::string::npos) {
      name = t.substr(0, caret);
      try {
        power = std::stoi(t.substr(caret + 1));
      } catch (...) {
        return std::nullopt;
      }
    }
    auto g = braid_gen_from_name(name);
    if (!g) return std::nullopt;
    if (power != 0) w.push_back({*g, power});
  }
  return w;
}

std::string braid_word_to_string(const BraidWord& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ", ";
    out += braid_gen_name(l.gen);
    if (l.power != 1) out += "^" + std::to_string(l.power);
  }
  return out;
}

namespace {
template <typename Point, typename Apply>
Point apply_word_impl(const BraidWord& w, Point p, Apply apply) {
  for (const auto& letter : w) {
    BraidGen g = letter.power >= 0 ? letter.gen : braid_gen_inverse(letter.gen);
    int reps = letter.power >= 0 ? letter.power : -letter.power;
    for (int r = 0; r < reps; ++r) p = apply(braid_map(g), p);
  }
  return p;
}
}  // namespace

ExactPoint apply_braid_word(const BraidWord& w, ExactPoint p) {
  return apply_word_impl(w, std::move(p), [](const RationalMap& m,
                                             const ExactPoint& q) {
    return m.apply_exact(q);
  });
}

NumPoint apply_braid_word_num(const BraidWord& w, NumPoint p) {
  return apply_word_impl(w, std::move(p), [](const RationalMap& m,
                                             const NumPoint& q) {
    return m.apply_num(q);
  });
}

namespace {

bool maps_equal(const RationalMap& m1, const RationalMap& m2) {
  SubstMap all = m1.rules();
  for (const auto& [s, r] : m2.rules()) all.emplace(s, r);
  for (const auto& [s, unused] : all)
    if (!identity_equal_exact(m1.rule(s), m2.rule(s))) return false;
  return true;
}

ExactPoint random_full_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  auto rnd = [&] { return GaussianRational(mpq_class(num(rng), den(rng))); };
  auto rnd_nz = [&] {
    GaussianRational v = rnd();
    while (v.is_zero()) v = rnd();
    return v;
  };
  return {{Sym::X0, rnd()},    {Sym::Xt, rnd()},  {Sym::X1, rnd()},
          {Sym::e0, rnd_nz()}, {Sym::et, rnd_nz()}, {Sym::e1, rnd_nz()},
          {Sym::einf, rnd_nz()}};
}

}  // namespace

RelationReport relations_report(bool mutate_g0t_sign, uint64_t seed) {
  RelationReport rep;
  RationalMap g0t = mutate_g0t_sign ? braid_generator_mutated(0, 1)
                                    : braid_generator(0, 1);
  const RationalMap& gt0 = braid_map(BraidGen::gt0);
  const RationalMap& gt1 = braid_map(BraidGen::gt1);
  const RationalMap& g1t = braid_map(BraidGen::g1t);
  const RationalMap& g10 = braid_map(BraidGen::g10);
  RationalMap id;

  rep.entries.emplace_back("g0t∘gt0=id",
                           maps_equal(compose(g0t, gt0), id));
  rep.entries.emplace_back("gt1∘g1t=id",
                           maps_equal(compose(gt1, g1t), id));
  rep.entries.emplace_back(
      "g0t∘gt1∘g0t=gt1∘g0t∘gt1",
      maps_equal(compose(g0t, compose(gt1, g0t)),
                 compose(gt1, compose(g0t, gt1))));
  rep.entries.emplace_back(
      "g10=gt0∘gt1∘g0t",
      maps_equal(compose(gt0, compose(gt1, g0t)), g10));
  rep.entries.emplace_back(
      "g0t^2 display=g0t∘g0t",
      maps_equal(compose(g0t, g0t), explicit_g2_map(BraidGen::g0t)));
  rep.entries.emplace_back(
      "gt1^2 display=gt1∘gt1",
      maps_equal(compose(gt1, gt1), explicit_g2_map(BraidGen::gt1)));

  // S = gt1∘g0t^2, T = gt0; S^2 and (S∘T)^3 checked by exact evaluation at
  // random rational points (the maps are polynomial; equality on a random
  // sample of full-measure points certifies the identity).
  auto rng = seeded_rng(seed);
  auto apply_S = [&](ExactPoint p) {
    p = g0t.apply_exact(p);
    p = g0t.apply_exact(p);
    return gt1.apply_exact(p);
  };
  bool s2 = true, st3 = true;
  for (int trial = 0; trial < 12; ++trial) {
    ExactPoint p = random_full_point(rng);
    ExactPoint q = apply_S(apply_S(p));
    if (q != p) s2 = false;
    ExactPoint r = p;
    for (int rep3 = 0; rep3 < 3; ++rep3) r = apply_S(gt0.apply_exact(r));
    if (r != p) st3 = false;
  }
  rep.entries.emplace_back("S^2=id", s2);
  rep.entries.emplace_back("(S∘T)^3=id", st3);
  return rep;
}

}  // namespace pcv
