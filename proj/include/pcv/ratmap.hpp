#pragma once

#include "pcv/ratexpr.hpp"

namespace pcv {

// A birational substitution on the global symbol space.  Symbols without a
// rule are fixed.  Surface-coordinate rules and parameter permutations are
// treated uniformly.
class RationalMap {
 public:
  RationalMap() = default;
  explicit RationalMap(SubstMap rules);

  const SubstMap& rules() const { return rules_; }
  // The rule for s (identity when absent).
  RatExpr rule(Sym s) const;
  void set_rule(Sym s, RatExpr r);

  // Composition: (f.after(g))(P) = f(g(P)).
  RationalMap after(const RationalMap& g) const;

  ExactPoint apply_exact(const ExactPoint& p) const;
  NumPoint apply_num(const NumPoint& p) const;

  // Exact identity check (optionally modulo a cubic monic in `var`).
  bool is_identity(const Poly* modulo = nullptr, Sym var = Sym::X1) const;

 private:
  SubstMap rules_;
};

RationalMap compose(const RationalMap& f, const RationalMap& g);  // f ∘ g

}  // namespace pcv
