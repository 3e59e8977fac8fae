#include "pcv/symbols.hpp"

#include <unordered_map>

namespace pcv {

namespace {
constexpr const char* kNames[kSymCount] = {
    "X0",  "Xt",  "X1",  "Wt",  "U1",   //
    "e0",  "et",  "e1",  "einf",        //
    "et1", "nu",                        //
    "s0t", "st0", "st1", "s1t", "s10", "s01",
    "so0t", "so01", "sot0", "so10",
    "d0",  "dt",  "d1",
};
}  // namespace

const char* sym_name(Sym s) { return kNames[static_cast<int>(s)]; }

std::optional<Sym> sym_from_name(const std::string& name) {
  static const std::unordered_map<std::string, Sym> table = [] {
    std::unordered_map<std::string, Sym> m;
    for (int i = 0; i < kSymCount; ++i) m.emplace(kNames[i], static_cast<Sym>(i));
    return m;
  }();
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

}  // namespace pcv
