#include "catnum/complexity.hpp"

namespace catnum {

NatRef catalan_number(unsigned k) {
  mpz_class c = 1;
  for (unsigned n = 1; n <= k; ++n) {
    c *= 2 * (2 * static_cast<unsigned long>(n) - 1);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n + 1);
  }
  return NatRef(c);
}

}  // namespace catnum
