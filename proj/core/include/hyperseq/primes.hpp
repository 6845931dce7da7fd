#pragma once

/**
 * @file primes.hpp
 * @brief Deterministic 64-bit primality, primes in arithmetic progressions,
 *        and small-integer factorization for root-candidate enumeration.
 */

#include <hyperseq/numbers.hpp>

#include <utility>
#include <vector>

namespace hyperseq {

/// Deterministic strong-probable-prime test with a fixed witness set
/// (first twelve primes), valid for all n < 2^64.  Inputs >= 2^63 raise
/// CapabilityError rather than fall back to probabilistic answers.
bool is_prime(const Int& n);

/// Smallest prime q > lower with q == 1 (mod b).  For b == 1 the
/// progression degenerates to all positive integers and every prime
/// qualifies.  Requires lower >= 0, b >= 1.
Int next_prime_in_progression(const Int& lower, const Int& b);

/// Prime factorization of n >= 1 as (prime, exponent) pairs, ascending.
/// Trial division + Brent's rho.  Primality of cofactors above 2^63 is
/// established by GMP's BPSW test; this routine only feeds root-candidate
/// enumeration, where every candidate is re-verified by exact evaluation,
/// so a misclassified cofactor can never produce a wrong root.
std::vector<std::pair<Int, int>> factorize(const Int& n);

/// All positive divisors of n >= 1, ascending.  Throws CapabilityError if
/// the divisor count exceeds an enumeration cap.
std::vector<Int> divisors(const Int& n);

}  // namespace hyperseq
