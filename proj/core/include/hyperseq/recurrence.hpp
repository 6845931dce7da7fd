#pragma once

/**
 * @file recurrence.hpp
 * @brief The problem-instance model: shift quotient in factored form,
 *        canonical representations c - a/b, the thresholds N_gamma and N_r,
 *        residues of roots, the valuation sum S_p(n), and the exact
 *        sequence oracle.
 */

#include <hyperseq/numbers.hpp>
#include <hyperseq/polynomial.hpp>

#include <vector>

namespace hyperseq {

/// p(n) u_n = q(n) u_{n-1} with initial value u_0.  p must have no
/// nonnegative integer zeros; p, q not identically zero.
struct Recurrence {
    Polynomial p;
    Polynomial q;
    Rat u0;
};

/// Throws std::invalid_argument when the Recurrence invariants fail.
void validate(const Recurrence& rec);

/// r(x) = q(x)/p(x) = sign * scale * prod(x - alpha) / prod(x - beta),
/// common roots of A and B cancelled (recorded), b the least common
/// denominator of the remaining roots (1 when empty or all-integer).
struct ShiftQuotientFactored {
    int sign = 1;              // +1 or -1
    Rat scale;                 // positive
    std::vector<Rat> A;        // roots of q, ascending multiset
    std::vector<Rat> B;        // roots of p, ascending multiset
    Int b;                     // least common denominator of A (+) B
    std::vector<Rat> cancelled;  // roots removed from both sides
};

/// Factors the shift quotient.  Throws UnsupportedParametersError when p
/// or q does not split over Q, std::invalid_argument when p (or, before
/// degenerate screening, q) has a nonnegative integer zero.
ShiftQuotientFactored factor_shift_quotient(const Recurrence& rec);

/// gamma = c - a/b with c integer and a in {1, ..., b}; unique.
struct CanonicalRep {
    Int c;
    Int a;
    Int b;

    bool operator==(const CanonicalRep&) const = default;
    Rat value() const { return Rat(c) - make_rat(a, b); }
};

/// Requires b * gamma integral.
CanonicalRep canonical_rep(const Rat& gamma, const Int& b);

/// N_gamma = max(c, ceil(bc/(b-a))) for c >= 1, max(-c, ceil(-bc/a)) for
/// c <= 0.  Requires gamma not a nonnegative integer (c >= 1 with a = b
/// is rejected).
Int n_gamma(const CanonicalRep& rep);

/// N_r = b * sum of N_gamma over A (+) B, plus 1.  Requires a nonempty
/// root multiset.
Int n_r(const ShiftQuotientFactored& sq);

/// rem_p(gamma) = c + (p-1) a / b, valid for p == 1 (mod b), p > N_gamma.
Residue residue_of_root(const CanonicalRep& rep, const Int& p);

/// S_p(n) = sum_{k=1..n} ( sum_A v_p(k - alpha) - sum_B v_p(k - beta) ),
/// computed with exact valuations.
Int s_p_direct(const ShiftQuotientFactored& sq, long n, const Int& p);

/// Prefix-count criterion: true iff |{alpha : rem_p(alpha) <= n}| differs
/// from |{beta : rem_p(beta) <= n}|; equals s_p_direct != 0 under the
/// validity conditions, which are checked internally (p == 1 mod b,
/// n in {1..p-1}, p > N_gamma for every root, and 0 < |k b' - a'| < p^2
/// for every k <= n and every reduced root a'/b').  Violations raise
/// std::invalid_argument.
bool s_p_nonzero_fast(const ShiftQuotientFactored& sq, long n, const Int& p);

/// Exact values u_0, u_1, ... with an incrementally extended prefix cache.
/// Cache extension is not synchronized: confine each oracle instance to
/// one thread.  Distinct oracles are independent.
class SequenceOracle {
public:
    explicit SequenceOracle(Recurrence rec);

    const Recurrence& recurrence() const { return rec_; }
    Rat eval_u(long n) const;

private:
    Recurrence rec_;
    mutable std::vector<Rat> cache_;
};

}  // namespace hyperseq
