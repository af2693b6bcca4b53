#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace catnum {

/// Nonnegative arbitrary-precision integer seen as a Catalan instance.
///
///   pair(i, j) = 2^(i+1) * j            if j is odd
///              = 2^(i+1) * (j+1) - 1    if j is even
///
/// unpair inverts it through the dyadic valuation of k + (k mod 2).
/// This is the reference instance the tree arithmetic is checked against.
class NatRef {
 public:
  NatRef() = default;
  NatRef(std::uint64_t v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT: implicit by intent
  explicit NatRef(mpz_class v);

  static NatRef empty() { return NatRef(); }
  /// Throws Error(SizeGuard) when i does not fit a shift count.
  static NatRef pair(const NatRef& i, const NatRef& j);
  /// Throws Error(EmptyDeconstruction) on 0.
  std::pair<NatRef, NatRef> unpair() const;

  bool is_empty() const noexcept { return sgn(v_) == 0; }
  bool is_odd() const noexcept { return mpz_odd_p(v_.get_mpz_t()) != 0; }

  const mpz_class& value() const noexcept { return v_; }
  /// Number of binary digits; 0 for 0.
  std::uint64_t bit_length() const noexcept;
  bool fits_u64() const noexcept;
  std::uint64_t to_u64() const;

  std::string to_string() const { return v_.get_str(); }
  /// Decimal digits only. Throws Error(MalformedWord).
  static NatRef parse(std::string_view text);

  friend bool operator==(const NatRef& a, const NatRef& b) noexcept { return a.v_ == b.v_; }
  friend auto operator<=>(const NatRef& a, const NatRef& b) noexcept {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class v_;
};

/// Largest e with 2^e dividing k; k must be nonzero.
std::uint64_t dyadic_valuation(const mpz_class& k);

}  // namespace catnum
