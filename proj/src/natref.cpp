#include "catnum/natref.hpp"

#include <cctype>
#include <limits>

#include "catnum/error.hpp"

namespace catnum {

NatRef::NatRef(mpz_class v) : v_(std::move(v)) {
  if (sgn(v_) < 0) throw Error(ErrorKind::Underflow, "negative value for NatRef");
}

std::uint64_t dyadic_valuation(const mpz_class& k) { return mpz_scan1(k.get_mpz_t(), 0); }

NatRef NatRef::pair(const NatRef& i, const NatRef& j) {
  if (!mpz_fits_ulong_p(i.v_.get_mpz_t()) ||
      i.v_ >= std::numeric_limits<mp_bitcnt_t>::max() - 1) {
    throw Error(ErrorKind::SizeGuard, "shift count too large for big-integer pair");
  }
  const auto shift = static_cast<mp_bitcnt_t>(i.v_.get_ui()) + 1;
  const unsigned d = j.is_odd() ? 0 : 1;
  mpz_class r = j.v_ + d;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), shift);
  r -= d;
  NatRef out;
  out.v_ = std::move(r);
  return out;
}

std::pair<NatRef, NatRef> NatRef::unpair() const {
  if (is_empty()) throw Error(ErrorKind::EmptyDeconstruction, "unpair of 0");
  const unsigned b = is_odd() ? 1 : 0;
  mpz_class kb = v_ + b;
  const std::uint64_t i = dyadic_valuation(kb);
  mpz_class j;
  mpz_fdiv_q_2exp(j.get_mpz_t(), kb.get_mpz_t(), static_cast<mp_bitcnt_t>(i));
  NatRef x(i == 0 ? 0 : i - 1);
  NatRef y;
  y.v_ = j - b;
  return {std::move(x), std::move(y)};
}

std::uint64_t NatRef::bit_length() const noexcept {
  return is_empty() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
}

bool NatRef::fits_u64() const noexcept { return bit_length() <= 64; }

std::uint64_t NatRef::to_u64() const {
  if (!fits_u64()) throw Error(ErrorKind::SizeGuard, "value exceeds 64 bits");
  mpz_class lo = v_ & mpz_class(std::numeric_limits<unsigned long>::max());
  static_assert(sizeof(unsigned long) == 8, "LP64 expected");
  return lo.get_ui();
}

NatRef NatRef::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::MalformedWord, "empty decimal literal");
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(ErrorKind::MalformedWord, "not a decimal literal: '" + std::string(text) + "'");
    }
  }
  NatRef out;
  out.v_.set_str(std::string(text), 10);
  return out;
}

}  // namespace catnum
