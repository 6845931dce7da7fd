#pragma once

/**
 * @file numbers.hpp
 * @brief Exact arithmetic base layer: arbitrary-precision integers and
 *        rationals (GMP-backed), p-adic valuation and the residue map
 *        rem_p onto F_p for elements of the local ring Z_(p).
 *
 * Rationals are always kept in canonical form: gcd(|num|, den) = 1,
 * den >= 1, zero is 0/1.  mpq_class arithmetic preserves canonical form
 * as long as operands are canonical; only raw num/den construction needs
 * an explicit canonicalize, which make_rat takes care of.
 */

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hyperseq {

using Int = mpz_class;
using Rat = mpq_class;

/// An operation would need answers beyond the deterministically supported
/// range (e.g. primality above 2^63).
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The coefficient polynomials do not split completely over Q.
class UnsupportedParametersError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// x has v_p(x) < 0, i.e. x lies outside Z_(p) and rem_p(x) is undefined.
class NotInLocalRingError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// num/den reduced to canonical form.  Throws on den == 0.
Rat make_rat(const Int& num, const Int& den);

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline const Int& num(const Rat& x) { return x.get_num(); }
inline const Int& den(const Rat& x) { return x.get_den(); }
inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

/// Ceiling of a/b for b > 0.
Int ceil_div(const Int& a, const Int& b);
/// Floor of a/b for b > 0.
Int floor_div(const Int& a, const Int& b);

/// "a/b" or plain "a" when b == 1.
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

/// Parses "a" or "a/b" (arbitrary precision); throws std::invalid_argument
/// on malformed input or zero denominator.
Rat rat_from_string(const std::string& text);

/// v_p value: an integer or the distinguished Infinity (exactly for input 0).
struct Valuation {
    bool infinite = false;
    long value = 0;

    static Valuation of(long v) { return Valuation{false, v}; }
    static Valuation infinity() { return Valuation{true, 0}; }

    bool operator==(const Valuation&) const = default;
};

/// Image of x in F_p under rem_p(a/b) = a b^{-1} mod p.
struct Residue {
    Int value;    // in {0, ..., p-1}
    Int modulus;  // the prime p

    bool operator==(const Residue&) const = default;
};

/// p-adic valuation of a rational; v_p(0) = Infinity.
/// Throws std::invalid_argument if p is not prime.
Valuation padic_valuation(const Rat& x, const Int& p);

/// Same, without re-checking primality of p (internal hot paths).
Valuation padic_valuation_unchecked(const Rat& x, const Int& p);

/// rem_p(x) for x in Z_(p); throws NotInLocalRingError if v_p(x) < 0 and
/// std::invalid_argument if p is not prime.
Residue residue(const Rat& x, const Int& p);

}  // namespace hyperseq
