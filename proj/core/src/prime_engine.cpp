#include <hyperseq/prime_engine.hpp>
#include <hyperseq/primes.hpp>

#include <algorithm>
#include <random>

namespace hyperseq {

StableOrder stable_order(const ShiftQuotientFactored& sq) {
    if (sq.A.empty() && sq.B.empty())
        throw std::invalid_argument("stable_order: empty root multiset");
    StableOrder order;
    for (const Rat& r : sq.A) order.entries.push_back({r, canonical_rep(r, sq.b), true});
    for (const Rat& r : sq.B) order.entries.push_back({r, canonical_rep(r, sq.b), false});
    std::sort(order.entries.begin(), order.entries.end(),
              [](const OrderEntry& x, const OrderEntry& y) {
                  if (x.rep.a != y.rep.a) return x.rep.a < y.rep.a;
                  if (x.rep.c != y.rep.c) return x.rep.c < y.rep.c;
                  return x.from_a && !y.from_a;
              });
    return order;
}

std::vector<std::size_t> unbalanced_prefixes(const StableOrder& order) {
    std::vector<std::size_t> out;
    long balance = 0;
    for (std::size_t j = 1; j < order.entries.size(); ++j) {
        balance += order.entries[j - 1].from_a ? 1 : -1;
        if (balance != 0) out.push_back(j);
    }
    return out;
}

Rat contiguity_constant(const CanonicalRep& gamma, const CanonicalRep& gamma_prime) {
    return make_rat((gamma_prime.c - gamma.c) * gamma.b, gamma.a);
}

std::optional<ExpandingPair> select_expanding_unbalanced_pair(const StableOrder& order) {
    auto unb = unbalanced_prefixes(order);
    std::optional<std::size_t> best;
    Int best_gap = 0;
    for (std::size_t j : unb) {
        const Int& a1 = order.entries[j - 1].rep.a;
        const Int& a2 = order.entries[j].rep.a;
        if (a1 == a2) continue;
        Int gap = a2 - a1;
        if (!best || gap > best_gap) {
            best = j;
            best_gap = gap;
        }
    }
    if (!best) return std::nullopt;
    const OrderEntry& g = order.entries[*best - 1];
    const OrderEntry& gp = order.entries[*best];
    return ExpandingPair{g, gp, *best, contiguity_constant(g.rep, gp.rep)};
}

std::optional<ChainRegion> select_chain_region(const StableOrder& order) {
    auto pair = select_expanding_unbalanced_pair(order);
    if (!pair) return std::nullopt;
    auto unb = unbalanced_prefixes(order);
    auto in_unb = [&](std::size_t j) {
        return std::binary_search(unb.begin(), unb.end(), j);
    };
    std::size_t s = pair->prefix_index, e = pair->prefix_index;
    while (s > 1 && in_unb(s - 1)) --s;
    while (e + 1 < order.entries.size() && in_unb(e + 1)) ++e;
    const OrderEntry& g = order.entries[s - 1];
    const OrderEntry& gp = order.entries[e];
    if (g.rep.a >= gp.rep.a)
        throw std::logic_error("select_chain_region: region endpoints share a fractional class");
    return ChainRegion{g, gp, s, e, contiguity_constant(g.rep, gp.rep)};
}

namespace {

struct ChainContext {
    const ShiftQuotientFactored& sq;
    const StableOrder order;
    Int max_n_gamma;
    Int eq5_threshold;  // p >= this makes |k b' - a'| < p^2 automatic for k < p
    std::vector<Int> forbidden_divisors;  // numerators/denominators of u0, t, scale
};

// Direct per-prime validation; everything a tail prime gets from the
// propositions is checked explicitly for the small primes we actually use.
bool valid_chain_prime(const ChainContext& ctx, const Int& p) {
    if (p <= ctx.max_n_gamma) return false;
    for (const Int& d : ctx.forbidden_divisors)
        if (d != 0 && mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) return false;
    Int p2 = p * p;
    for (const OrderEntry& ent : ctx.order.entries) {
        const Int& bb = den(ent.root);
        const Int& aa = num(ent.root);
        if (abs(bb - aa) >= p2 || abs((p - 1) * bb - aa) >= p2) return false;
    }
    // Residue order must agree with the stable order: nondecreasing, and
    // strictly increasing across distinct representations.
    Int prev(-1);
    const CanonicalRep* prev_rep = nullptr;
    for (const OrderEntry& ent : ctx.order.entries) {
        Int r = residue_of_root(ent.rep, p).value;
        if (prev_rep) {
            if (*prev_rep == ent.rep ? r != prev : r <= prev) return false;
        }
        prev = r;
        prev_rep = &ent.rep;
    }
    return true;
}

Int next_valid_prime(const ChainContext& ctx, const Int& lower, const Int& b,
                     const Int& cap) {
    Int q = lower;
    while (true) {
        q = next_prime_in_progression(q, b);
        if (q > cap)
            throw CapabilityError("build_chain: prime search exceeded the configured cap");
        if (valid_chain_prime(ctx, q)) return q;
    }
}

}  // namespace

Int nagura_threshold(const Int& b, const Rat& C) {
    if (b > 2) throw std::invalid_argument("nagura_threshold: only justified for b <= 2");
    Rat gap = make_rat(1, b) - make_rat(1, 5);  // positive for b <= 2
    Rat x = (make_rat(1, b) - C) / gap;
    Int m = floor_div(num(x), den(x)) + 1;
    return std::max(Int(25), m);
}

PrimeChain build_chain(const ChainRegion& region, const ShiftQuotientFactored& sq,
                       const Int& p_min, const DensityBoundConfig& cfg,
                       const SequenceOracle& oracle, const Rat& t) {
    if (t == 0 || oracle.recurrence().u0 == 0)
        throw std::invalid_argument("build_chain: t and u0 must be nonzero");

    ChainContext ctx{sq, stable_order(sq), 0, 0, {}};
    for (const OrderEntry& ent : ctx.order.entries) {
        ctx.max_n_gamma = std::max(ctx.max_n_gamma, n_gamma(ent.rep));
        ctx.eq5_threshold = std::max(ctx.eq5_threshold, Int(den(ent.root) + abs(num(ent.root))));
    }
    const Rat& u0 = oracle.recurrence().u0;
    ctx.forbidden_divisors = {num(u0), den(u0), num(t), den(t), num(sq.scale), den(sq.scale)};

    PrimeChain chain;
    // Threshold past which every validity check holds by the propositions:
    // order stability (p > N_r), the representation formula (p > N_gamma),
    // the |kb-a| < p^2 side condition, and non-divisibility of u0/t/scale.
    Int threshold = n_r(sq);
    threshold = std::max(threshold, Int(sq.b + 1));
    threshold = std::max(threshold, ctx.eq5_threshold);
    threshold = std::max(threshold, Int(ctx.max_n_gamma + 1));
    for (const Int& d : ctx.forbidden_divisors) threshold = std::max(threshold, Int(abs(d) + 1));
    threshold = std::max(threshold, p_min);

    bool table = cfg.strategy == DensityBoundConfig::Strategy::Table && sq.b <= 2;
    if (table) {
        threshold = std::max(threshold, nagura_threshold(sq.b, region.C));
        chain.tail_justification = "nagura-table";
        chain.tail_note =
            "Nagura (1952): for x >= 25 there is a prime in (x, 1.2x); for b <= 2 and p >= "
            "the stop threshold that prime lies in the contiguity window and in bN+1.";
    } else {
        chain.tail_justification = "verified-horizon";
        chain.tail_note = "prime-in-window existence past the threshold assumed after " +
                          std::to_string(cfg.horizon_successes) +
                          " consecutive verified gap-free extensions";
    }
    chain.stop_threshold = threshold;

    Int p = next_valid_prime(ctx, p_min, sq.b, cfg.max_prime);
    Int rem_lo = residue_of_root(region.gamma.rep, p).value;
    Int rem_hi = residue_of_root(region.gamma_prime.rep, p).value;
    chain.primes.push_back({p, rem_lo, rem_hi});
    chain.covered_lo = rem_lo;

    int clean_run = 0;
    while (true) {
        const ChainPrime& last = chain.primes.back();
        bool done = table ? last.prime >= threshold
                          : last.prime >= threshold && clean_run >= cfg.horizon_successes;
        if (done) break;

        // Window (p, p + (p-1)/b + C) from the contiguity proposition; the
        // scan starts at p + C when C > 0 (the overlap the proposition
        // already grants) and right above p otherwise.
        Rat hi_exact = Rat(last.prime) + make_rat(last.prime - 1, sq.b) + region.C;
        Int window_hi = ceil_div(num(hi_exact), den(hi_exact));  // q valid iff q < hi_exact
        Int anchor = last.prime + std::max(ceil_div(num(region.C), den(region.C)), Int(0));

        std::optional<Int> next;
        auto try_range = [&](Int from, const Int& below) {
            while (!next) {
                Int q = next_prime_in_progression(from, sq.b);
                if (Rat(q) >= hi_exact || q >= below) break;
                if (q > cfg.max_prime)
                    throw CapabilityError("build_chain: prime search exceeded the configured cap");
                if (valid_chain_prime(ctx, q) &&
                    residue_of_root(region.gamma.rep, q).value <= last.rem_hi)
                    next = q;
                from = q;
            }
        };
        try_range(anchor > last.prime ? anchor - 1 : last.prime, window_hi + 1);
        if (!next && anchor > last.prime + 1) try_range(last.prime, anchor);

        bool gap = false;
        if (!next) {
            // No verified prime in the window: take the next valid prime
            // anywhere above and repair the hole by exact checks.
            Int q = next_valid_prime(ctx, last.prime, sq.b, cfg.max_prime);
            Int start = residue_of_root(region.gamma.rep, q).value;
            if (start > last.rem_hi) {
                gap = true;
                GapFill fill{last.rem_hi, start, {}};
                Int span = start - last.rem_hi;
                if (span > cfg.max_gap_span || !start.fits_slong_p())
                    throw CapabilityError("build_chain: gap too large for exact repair");
                for (long n = fill.lo.get_si(); n < fill.hi.get_si(); ++n)
                    if (oracle.eval_u(n) == t) fill.hits.push_back(n);
                chain.gaps.push_back(std::move(fill));
            }
            next = q;
        }

        Int q = *next;
        Int q_lo = residue_of_root(region.gamma.rep, q).value;
        Int q_hi = residue_of_root(region.gamma_prime.rep, q).value;
        bool growing = q_hi - q_lo > last.rem_hi - last.rem_lo;
        clean_run = (!gap && growing) ? clean_run + 1 : 0;
        chain.primes.push_back({q, q_lo, q_hi});
    }

    chain.covered_hi = chain.primes.back().rem_hi - 1;
    return chain;
}

void spot_check_chain(const ShiftQuotientFactored& sq, const PrimeChain& chain,
                      const SequenceOracle& oracle, const Rat& t, int samples,
                      unsigned seed) {
    Int hi = chain.covered_hi;
    if (hi > 4000) hi = 4000;  // keep sampled sequence values evaluable
    if (hi < chain.covered_lo || !chain.covered_lo.fits_slong_p()) return;
    std::mt19937 rng(seed);
    long lo = chain.covered_lo.get_si();
    std::uniform_int_distribution<long> pick(lo, hi.get_si());
    for (int i = 0; i < samples; ++i) {
        long n = pick(rng);
        bool in_gap = false;
        for (const GapFill& g : chain.gaps)
            if (g.lo <= n && Int(n) < g.hi) in_gap = true;
        if (in_gap) continue;
        const ChainPrime* cover = nullptr;
        for (const ChainPrime& cp : chain.primes)
            if (cp.rem_lo <= n && Int(n) < cp.rem_hi) {
                cover = &cp;
                break;
            }
        if (!cover) throw std::logic_error("spot_check_chain: covered index has no chain prime");
        if (!s_p_nonzero_fast(sq, n, cover->prime))
            throw std::logic_error("spot_check_chain: fast S_p criterion failed on covered index");
        Valuation vu = padic_valuation(oracle.eval_u(n), cover->prime);
        Valuation vt = padic_valuation(t, cover->prime);
        if (vu == vt)
            throw std::logic_error("spot_check_chain: valuation refutation failed");
    }
}

}  // namespace hyperseq
