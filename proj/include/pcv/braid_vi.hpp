#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcv/charvar_vi.hpp"
#include "pcv/ratmap.hpp"

namespace pcv {

// Half-monodromy generator indices follow the 0/t/1 coordinate convention:
// g(i, j) maps X_i -> X_j, X_j -> X_i - F_{X_i}, fixes X_k, and swaps
// e_i <-> e_j.  All maps are polynomial.
RationalMap braid_generator(int i, int j);

enum class BraidGen { g0t, gt0, gt1, g1t, g10, g01 };
std::optional<BraidGen> braid_gen_from_name(const std::string& name);
const char* braid_gen_name(BraidGen g);
BraidGen braid_gen_inverse(BraidGen g);
const RationalMap& braid_map(BraidGen g);

// The explicit squared-generator displays (parameters unchanged).
const RationalMap& explicit_g2_map(BraidGen which);  // g0t or gt1 only

struct BraidLetter {
  BraidGen gen;
  int power = 1;
};
using BraidWord = std::vector<BraidLetter>;

// Comma-separated tokens like "g0t, gt1^-1, g0t^2".
std::optional<BraidWord> parse_braid_word(const std::string& text);
std::string braid_word_to_string(const BraidWord& w);

// Left-to-right application: the first letter acts first.
ExactPoint apply_braid_word(const BraidWord& w, ExactPoint p);
NumPoint apply_braid_word_num(const BraidWord& w, NumPoint p);

struct RelationReport {
  std::vector<std::pair<std::string, bool>> entries;
  bool all_ok() const {
    for (const auto& [n, ok] : entries)
      if (!ok) return false;
    return true;
  }
};

// Verifies the inverse/braid/modular relations.  `mutate_g0t_sign` corrupts
// the g_{0t} rule (sign flip on the F-term) to exercise failure reporting.
RelationReport relations_report(bool mutate_g0t_sign = false,
                                uint64_t seed = 20260824);

// The corrupted generator used by the mutation hook.
RationalMap braid_generator_mutated(int i, int j);

}  // namespace pcv
