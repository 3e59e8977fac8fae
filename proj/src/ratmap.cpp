#include "pcv/ratmap.hpp"

namespace pcv {

RationalMap::RationalMap(SubstMap rules) : rules_(std::move(rules)) {}

RatExpr RationalMap::rule(Sym s) const {
  auto it = rules_.find(s);
  return it == rules_.end() ? RatExpr::var(s) : it->second;
}

void RationalMap::set_rule(Sym s, RatExpr r) { rules_[s] = std::move(r); }

RationalMap RationalMap::after(const RationalMap& g) const {
  SubstMap out = g.rules_;
  for (const auto& [s, r] : rules_) out[s] = subst(r, g.rules_);
  return RationalMap(std::move(out));
}

RationalMap compose(const RationalMap& f, const RationalMap& g) {
  return f.after(g);
}

ExactPoint RationalMap::apply_exact(const ExactPoint& p) const {
  ExactPoint out;
  for (const auto& [s, v] : p) out[s] = rule(s).eval_exact(p);
  return out;
}

NumPoint RationalMap::apply_num(const NumPoint& p) const {
  NumPoint out;
  for (const auto& [s, v] : p) out[s] = rule(s).eval_num(p);
  return out;
}

bool RationalMap::is_identity(const Poly* modulo, Sym var) const {
  for (const auto& [s, r] : rules_) {
    if (!identity_equal_exact(r, RatExpr::var(s), modulo, var)) return false;
  }
  return true;
}

}  // namespace pcv
