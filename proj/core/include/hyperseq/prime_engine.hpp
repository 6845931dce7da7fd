#pragma once

/**
 * @file prime_engine.hpp
 * @brief Hard-case machinery: the stable order on A (+) B, unbalanced
 *        prefixes, expanding-pair and chain-region selection, contiguity
 *        constants, and verified prime-chain construction.
 */

#include <hyperseq/recurrence.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hyperseq {

struct OrderEntry {
    Rat root;
    CanonicalRep rep;
    bool from_a;  // true: root of the numerator (A); false: denominator (B)

    bool operator==(const OrderEntry&) const = default;
};

/// A (+) B sorted by the prime-independent comparator (a < a') or
/// (a = a' and c < c'); agrees with the residue order at every valid
/// large prime.
struct StableOrder {
    std::vector<OrderEntry> entries;
};

StableOrder stable_order(const ShiftQuotientFactored& sq);

/// Prefix indices j (1-based, j < size) where the counts of A- and
/// B-entries among the first j entries differ.
std::vector<std::size_t> unbalanced_prefixes(const StableOrder& order);

/// C = (c' - c) * b / a for gamma = c - a/b preceding gamma' = c' - a'/b.
Rat contiguity_constant(const CanonicalRep& gamma, const CanonicalRep& gamma_prime);

/// A consecutive pair (gamma_j, gamma_{j+1}) with j unbalanced and
/// a_j != a_{j+1}, maximizing a_{j+1} - a_j (ties: smallest j).
struct ExpandingPair {
    OrderEntry gamma;
    OrderEntry gamma_prime;
    std::size_t prefix_index;  // the j above, 1-based
    Rat C;

    bool operator==(const ExpandingPair&) const = default;
};

/// std::nullopt iff no such pair exists, which happens exactly when an
/// integer-shift bijection A -> B exists.
std::optional<ExpandingPair> select_expanding_unbalanced_pair(const StableOrder& order);

/// The maximal consecutive run of unbalanced prefixes around the selected
/// pair, widened to its enclosing region (gamma_s, gamma_{e+1}).  Because
/// the order is sorted by a, the region endpoints always differ in a, so
/// the region is expanding; every residue interval inside it is unbalanced.
struct ChainRegion {
    OrderEntry gamma;
    OrderEntry gamma_prime;
    std::size_t run_begin;  // prefix indices [run_begin, run_end] unbalanced
    std::size_t run_end;
    Rat C;
};

std::optional<ChainRegion> select_chain_region(const StableOrder& order);

/// How the infinite tail of the chain is justified.
struct DensityBoundConfig {
    enum class Strategy {
        Table,            // Nagura-backed stopping bound for b <= 2 (falls
                          // back to VerifiedHorizon for larger b)
        VerifiedHorizon,  // stop after K consecutive gap-free extensions
                          // past the proposition threshold
    };
    Strategy strategy = Strategy::Table;
    int horizon_successes = 64;        // K
    Int max_prime = Int(1) << 62;      // capability cap on chain primes
    long max_gap_span = 1000000;       // largest gap fillable by exact checks
};

struct ChainPrime {
    Int prime;
    Int rem_lo;  // rem_p(gamma)
    Int rem_hi;  // rem_p(gamma')
};

struct GapFill {
    Int lo;  // uncovered indices [lo, hi)
    Int hi;
    std::vector<long> hits;  // n in the gap with u_n == t
};

struct PrimeChain {
    std::vector<ChainPrime> primes;   // ascending, all == 1 (mod b)
    Int covered_lo;                   // rem_{p_0}(gamma)
    Int covered_hi;                   // rem_{p_last}(gamma') - 1
    std::vector<GapFill> gaps;
    Int stop_threshold;               // all validity props proven for p >= this
    std::string tail_justification;   // "nagura-table" | "verified-horizon"
    std::string tail_note;
};

/// Builds a verified chain of primes in bN+1 whose unbalanced intervals
/// for the region are contiguous; window misses are repaired by exact
/// gap checks of u_n = t.  Every chain prime is validated directly:
/// representation bound, residue order agreement, the |kb - a| < p^2 side
/// condition, and non-divisibility of u0, t and the scale.
PrimeChain build_chain(const ChainRegion& region, const ShiftQuotientFactored& sq,
                       const Int& p_min, const DensityBoundConfig& cfg,
                       const SequenceOracle& oracle, const Rat& t);

/// Spot checks: for sampled covered n outside gaps, some chain prime p has
/// s_p_nonzero_fast true and v_p(u_n) != v_p(t).  Throws std::logic_error
/// on any failure.  Sampling is capped at indices small enough to evaluate.
void spot_check_chain(const ShiftQuotientFactored& sq, const PrimeChain& chain,
                      const SequenceOracle& oracle, const Rat& t, int samples,
                      unsigned seed);

/// Smallest M >= 25 such that for all p >= M the contiguity window
/// (p, p + (p-1)/b + C) contains (p, 1.2p], where a prime exists by
/// Nagura's theorem.  Only meaningful for b <= 2, where primes > 2
/// automatically lie in bN+1.
Int nagura_threshold(const Int& b, const Rat& C);

}  // namespace hyperseq
