#include <superklr/common.hpp>

#include <cstdlib>

namespace superklr {

int max_permutation_degree() {
  static const int cap = [] {
    if (const char* env = std::getenv("SUPERKLR_MAX_N")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v > 0) return static_cast<int>(v);
    }
    return 10;
  }();
  return cap;
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace superklr
