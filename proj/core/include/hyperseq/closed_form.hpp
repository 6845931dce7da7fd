#pragma once

/**
 * @file closed_form.hpp
 * @brief Integer-shift bijection between the root multisets and the
 *        telescoped rational-function form of the partial products.
 */

#include <hyperseq/recurrence.hpp>

#include <optional>

namespace hyperseq {

/// A bijection A -> B with integer differences, pair by pair.
struct ShiftPairing {
    struct Pair {
        Rat alpha;
        Rat beta;
        long shift;  // |alpha - beta|

        bool operator==(const Pair&) const = default;
    };
    std::vector<Pair> pairs;

    bool operator==(const ShiftPairing&) const = default;
};

/// Groups both multisets by fractional class (the canonical-representation
/// a value); a pairing exists iff every class has equal counts, in which
/// case elements are paired in sorted order within each class.  Requires
/// |A| == |B|.
std::optional<ShiftPairing> integer_shift_pairing(const std::vector<Rat>& A,
                                                  const std::vector<Rat>& B);

/// prod_{k=1..n} prod |r(k)|-factors == f_hat(n) / g_hat(n) exactly for all
/// n > L, with L the largest pair shift.
struct TelescopedForm {
    Polynomial f_hat;
    Polynomial g_hat;
    long L = 0;

    bool operator==(const TelescopedForm&) const = default;
};

/// Telescopes the product along the pairing.  The sign unit is carried by
/// the caller (u_n = sign^n * u0 * f_hat(n)/g_hat(n)); requires scale == 1.
TelescopedForm telescope(const ShiftPairing& pairing, int sign, const Rat& scale);

}  // namespace hyperseq
