/**
 * @file common.hpp
 * @brief Shared scalar types, the Z/2 parity flag, and desk-scale guards.
 *
 * All arithmetic in this library is exact: big integers and rationals come
 * from GMP.  Nothing here rounds.
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace superklr {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Z/2 grading flag.  `even` is the identity of both operations below.
enum class Parity : unsigned char { even = 0, odd = 1 };

/// Parity of a product of two homogeneous elements (degrees add mod 2).
constexpr Parity parity_sum(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}

/// Product of two parity *values* (odd only when both are odd); this is how
/// the parity of a crossing generator depends on the two strands it crosses.
constexpr Parity parity_and(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<unsigned>(a) & static_cast<unsigned>(b));
}

/// k mod 2 as a Parity, defined for negative k as well.
constexpr Parity parity_of_int(long k) {
  return static_cast<Parity>(((k % 2) + 2) % 2);
}

constexpr bool is_odd(Parity p) { return p == Parity::odd; }

constexpr int parity_bit(Parity p) { return static_cast<int>(p); }

/// p^k for a parity value p (even^k = even, odd^k = k mod 2).
constexpr Parity parity_pow(Parity p, long k) {
  return is_odd(p) ? parity_of_int(k) : Parity::even;
}

/// Thrown when a request exceeds a documented desk-scale cap or an internal
/// step guard trips.  The CLI maps this to its own exit code, distinct from
/// parse and validation failures.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest sequence length for which permutation-set enumeration is allowed.
/// Defaults to 10; override with the SUPERKLR_MAX_N environment variable.
int max_permutation_degree();

/// n! as a big integer (n >= 0).
BigInt factorial(long n);

}  // namespace superklr
