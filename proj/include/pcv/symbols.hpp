#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace pcv {

// Global symbol table for the Laurent ring. Surface coordinates carry only
// nonnegative exponents; parameter symbols are genuine Laurent (units).
enum class Sym : int {
  X0 = 0,  // trace coordinate, shared by both surfaces
  Xt,
  X1,
  Wt,
  U1,
  e0,   // eigenvalue parameters
  et,
  e1,
  einf,
  et1,  // the confluent parameter written \tilde e_1 in math sources
  nu,   // = et^2 once the confluence is taken
  s0t,  // Stokes coefficients (3x3 pipeline)
  st0,
  st1,
  s1t,
  s10,
  s01,
  so0t,  // outer Stokes coefficients \tilde s_{ij}
  so01,
  sot0,
  so10,
  d0,   // diagonal gauge symbols
  dt,
  d1,
};

inline constexpr int kSymCount = 24;

using ExpVec = std::array<int16_t, kSymCount>;

inline constexpr bool is_surface_var(Sym s) {
  return static_cast<int>(s) <= static_cast<int>(Sym::U1);
}

const char* sym_name(Sym s);
std::optional<Sym> sym_from_name(const std::string& name);

}  // namespace pcv
