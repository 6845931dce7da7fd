#pragma once

/**
 * @file certificate.hpp
 * @brief Self-contained, independently checkable records justifying a
 *        membership decision, and their serialized document form.
 *
 * The document format (version tag, field names, field order) is specified
 * in docs/certificate-format.md; serialization is deterministic.
 */

#include <hyperseq/classify.hpp>
#include <hyperseq/closed_form.hpp>
#include <hyperseq/prime_engine.hpp>

#include <optional>
#include <string>

namespace hyperseq {

/// Finite indices plus optional symbolic tails: {n >= all_from}, or the
/// one-parity tails {n >= even_from : n even} / {n >= odd_from : n odd}
/// that arise from alternating-constant instances (r -> -1 with t = +-u0).
struct IndexSet {
    std::vector<long> finite;        // sorted, duplicates-free
    std::optional<long> all_from;
    std::optional<long> even_from;
    std::optional<long> odd_from;

    bool empty() const { return finite.empty() && !all_from && !even_from && !odd_from; }
};

/// Exact scan of u_n = t over {0, ..., bound}; bound = -1 means no scan.
struct ExhaustiveScan {
    long bound = -1;
    std::vector<long> hits;
};

struct DegenerateWitness {
    DegenerateKind kind;
    long m = 0;  // smallest nonnegative integer zero of q, when applicable
};

struct EasyWitness {
    GrowthDirection direction;
    Rat rho;        // geometric ratio bound, strictly between 1 and |l|
    long n2;        // |r(n)| is past rho for all n >= n2
    Rat barrier;    // |u_{n2}|
    long catch_up;  // smallest k with barrier * rho^k past |t|
};

struct ClosedFormWitness {
    ShiftPairing pairing;
    TelescopedForm form;
    int sign;
    std::vector<Int> roots_even;  // integer roots of u0 f - t g (all roots when sign=+1)
    std::vector<Int> roots_odd;   // integer roots of u0 f + t g (sign=-1 only)
};

struct ChainWitness {
    CanonicalRep gamma;
    CanonicalRep gamma_prime;
    Rat root_gamma;
    Rat root_gamma_prime;
    Rat C;
    PrimeChain chain;
    Int n_r_value;
};

struct Certificate {
    std::string case_label;
    Int n_prime;   // N' = max(|v|,|v'|,|w|,|w'|, N_r, scale magnitudes)
    long bound;    // N: finite indices can only occur at n <= N (-1: none claimed)
    ExhaustiveScan scan;
    std::optional<DegenerateWitness> degenerate;
    std::optional<EasyWitness> easy;
    std::optional<ClosedFormWitness> closed_form;
    std::optional<ChainWitness> chain;
};

struct MembershipAnswer {
    bool is_member = false;
    IndexSet indices;
    Certificate certificate;
};

/// Case labels used in certificates and structured output.
std::string case_label(const CaseTag& tag);

/// Deterministic structured document (JSON, stable field order, version
/// tag).  instance_text is echoed into the document.
std::string serialize_answer(const MembershipAnswer& answer, const std::string& instance_text);

/// Parses a document produced by serialize_answer; throws
/// std::invalid_argument on malformed or unsupported input.
MembershipAnswer deserialize_answer(const std::string& document);

}  // namespace hyperseq
