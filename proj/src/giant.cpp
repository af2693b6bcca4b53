#include "catnum/giant.hpp"

namespace catnum {

namespace {

struct KindName {
  PrimeKind kind;
  std::string_view name;
};

constexpr KindName kNames[] = {
    {PrimeKind::Mersenne, "mersenne"},
    {PrimeKind::GeneralizedFermat, "generalized_fermat"},
    {PrimeKind::Cullen, "cullen"},
    {PrimeKind::Woodall, "woodall"},
    {PrimeKind::Proth, "proth"},
    {PrimeKind::SophieGermain, "sophie_germain"},
    {PrimeKind::TwinLow, "twin_low"},
    {PrimeKind::TwinHigh, "twin_high"},
};

}  // namespace

std::string_view to_string(PrimeKind kind) noexcept {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<PrimeKind> prime_kind_from_name(std::string_view name) noexcept {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

}  // namespace catnum
