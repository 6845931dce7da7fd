#pragma once

/**
 * @file decide.hpp
 * @brief Orchestration of the decision procedure: classification, the
 *        three solution paths, and independent certificate verification.
 */

#include <hyperseq/certificate.hpp>

namespace hyperseq {

/// Decides whether t occurs in the sequence, with a self-contained
/// certificate.  Deterministic: identical inputs and config produce
/// identical certificates.
MembershipAnswer decide(const Recurrence& rec, const Rat& t,
                        const DensityBoundConfig& cfg = DensityBoundConfig{});

/// Appendix-style zero screening: u0 = 0, q with a nonnegative integer
/// zero, or t = 0 on a nonvanishing sequence.
MembershipAnswer decide_degenerate(const Recurrence& rec, const Rat& t, const Degenerate& deg);

/// Membership through the telescoped rational-function form; sign = -1
/// instances are solved per parity on u0 f - t g and u0 f + t g.
MembershipAnswer decide_closed_form(const TelescopedForm& form, const Rat& u0, const Rat& t,
                                    const SequenceOracle& oracle, int sign,
                                    const ShiftPairing& pairing);

/// Membership through the verified prime chain.
MembershipAnswer decide_hard(const ShiftQuotientFactored& sq, const Rat& u0, const Rat& t,
                             const DensityBoundConfig& cfg, const SequenceOracle& oracle);

/// Independently re-checks a certificate: exact index equalities, case
/// re-derivation, per-case witness consistency (sampled inequalities,
/// telescoped identity, chain primality / residues / contiguity /
/// prefix-unbalance, sampled valuation refutations), and the exhaustive
/// scan.  Returns false on any mismatch; throws std::invalid_argument on
/// structurally malformed certificates.
bool verify_certificate(const Recurrence& rec, const Rat& t, const MembershipAnswer& answer);

}  // namespace hyperseq
