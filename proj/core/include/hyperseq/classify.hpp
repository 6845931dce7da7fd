#pragma once

/**
 * @file classify.hpp
 * @brief Degenerate screening, limit classification of the shift quotient,
 *        the easy-case bound, and the infinite-product limit diagnostic.
 */

#include <hyperseq/recurrence.hpp>

#include <variant>

namespace hyperseq {

enum class DegenerateKind {
    ZeroInitial,           // u_0 = 0: the sequence is identically zero
    QHasNonnegativeZero,   // q(m) = 0 for some m >= 0: zero tail from m on
    TargetZero,            // t = 0 with u_0 != 0 and q nonvanishing on N
};

struct Degenerate {
    DegenerateKind kind;
    long m = 0;  // smallest nonnegative integer zero of q, when applicable
};

struct ConstantSequence {};

enum class GrowthDirection { ToInfinity, AbsLimitGt1, AbsLimitLt1, ToZero };

struct EasyGrowth {
    GrowthDirection direction;
};

struct HardUnit {
    int sign;  // r(x) -> sign * 1 as x -> infinity
};

using CaseTag = std::variant<Degenerate, ConstantSequence, EasyGrowth, HardUnit>;

/// Total on valid recurrences; the variants are mutually exclusive.
/// Degenerate screening comes first (u_0 = 0, then q with a nonnegative
/// integer zero, then t = 0); only non-degenerate instances are factored.
CaseTag classify(const Recurrence& rec, const Rat& t);

/// N such that |u_n| > |t| for all n > N (growth directions) or
/// |u_n| < |t| for all n > N (decay directions).  Requires t != 0,
/// u_0 != 0 and an EasyGrowth instance; std::invalid_argument otherwise.
long easy_bound(const Recurrence& rec, const Rat& t, const EasyGrowth& tag);

/// The derivation behind easy_bound: |r(n)| is past rho for every n >= n2
/// (rho strictly between 1 and |l|), so |u_n| >= (resp. <=)
/// barrier * rho^(n-n2); catch_up steps push the barrier past |t|.
struct EasyBoundDetail {
    GrowthDirection direction;
    Rat rho;
    long n2;
    Rat barrier;   // |u_{n2}|
    long catch_up;
    long bound;    // n2 + catch_up - 1
};

EasyBoundDetail easy_bound_detailed(const Recurrence& rec, const Rat& t, const EasyGrowth& tag);

/// Prop-3.1-style diagnostic for the hard case; never consulted by the
/// decision procedure.
struct LimitDiagnostic {
    bool converges;  // sum over A equals sum over B
    double lower;    // outward-rounded enclosure of the limit value
    double upper;    // (of the partial product when not converging)
    long terms;
};

/// Partial product of u0 * prod_{k=0..terms-1} r(k) in outward-rounded
/// interval floats; starting at k = 0 makes the convergent value the
/// Gamma-quotient constant of the limit formula.  When the sum criterion
/// holds, the enclosure is widened by a rigorous tail envelope so that
/// [lower, upper] brackets the limit of the infinite product (sign +1
/// instances).
LimitDiagnostic limit_diagnostic(const ShiftQuotientFactored& sq, const Rat& u0, long terms);

}  // namespace hyperseq
