#include <hyperseq/decide.hpp>
#include <hyperseq/primes.hpp>

#include <algorithm>
#include <set>

namespace hyperseq {

namespace {

constexpr long kEvalCap = 1000000;         // largest index we evaluate exactly
constexpr long kRootVerifyCap = 10000;     // closed-form roots re-checked by the oracle
constexpr unsigned kDecideSpotSeed = 0x7a3f19e2;
constexpr unsigned kVerifySpotSeed = 0x51c3a9b7;

// Structural certificate defect, distinct from a failed re-check.
struct Malformed : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<long> scan_hits(const SequenceOracle& oracle, const Rat& t, long bound) {
    if (bound > kEvalCap) throw CapabilityError("exhaustive scan bound too large");
    std::vector<long> hits;
    for (long n = 0; n <= bound; ++n)
        if (oracle.eval_u(n) == t) hits.push_back(n);
    return hits;
}

long smallest_root_at_least(const Polynomial& f, long floor_value) {
    long best = -1;
    for (const Int& r : integer_roots(f)) {
        if (r < floor_value || !r.fits_slong_p()) continue;
        long v = r.get_si();
        if (best < 0 || v < best) best = v;
    }
    return best;
}

std::vector<Int> instance_magnitudes(const ShiftQuotientFactored& sq, const Rat& u0,
                                     const Rat& t) {
    return {Int(abs(num(u0))), den(u0),        Int(abs(num(t))),
            den(t),            Int(abs(num(sq.scale))), den(sq.scale)};
}

Int compute_n_prime(const ShiftQuotientFactored& sq, const Rat& u0, const Rat& t) {
    Int np = 0;
    for (const Int& m : instance_magnitudes(sq, u0, t)) np = std::max(np, m);
    if (!sq.A.empty() || !sq.B.empty()) np = std::max(np, n_r(sq));
    return np;
}

Int chain_p_min(const ShiftQuotientFactored& sq, const Rat& u0, const Rat& t) {
    Int p_min = sq.b;
    for (const Int& m : instance_magnitudes(sq, u0, t)) p_min = std::max(p_min, m);
    for (const Rat& r : sq.A) p_min = std::max(p_min, n_gamma(canonical_rep(r, sq.b)));
    for (const Rat& r : sq.B) p_min = std::max(p_min, n_gamma(canonical_rep(r, sq.b)));
    return p_min;
}

Rat power_sign(int sign, long n) { return (sign < 0 && n % 2 != 0) ? Rat(-1) : Rat(1); }

}  // namespace

MembershipAnswer decide_degenerate(const Recurrence& rec, const Rat& t, const Degenerate& deg) {
    validate(rec);
    MembershipAnswer ans;
    Certificate& cert = ans.certificate;
    cert.n_prime = 0;
    cert.bound = -1;
    switch (deg.kind) {
        case DegenerateKind::ZeroInitial: {
            if (rec.u0 != 0)
                throw std::invalid_argument("decide_degenerate: kind does not match instance");
            cert.case_label = "degenerate-zero-initial";
            cert.degenerate = DegenerateWitness{deg.kind, 0};
            cert.scan.bound = 0;
            if (t == 0) {
                cert.scan.hits = {0};
                ans.is_member = true;
                ans.indices.all_from = 0;
            }
            break;
        }
        case DegenerateKind::QHasNonnegativeZero: {
            long m = smallest_root_at_least(rec.q, 0);
            if (m < 0 || rec.u0 == 0)
                throw std::invalid_argument("decide_degenerate: kind does not match instance");
            cert.case_label = "degenerate-q-nonnegative-zero";
            long tail = smallest_root_at_least(rec.q, 1);
            if (tail < 0) {
                // The only nonnegative zero of q is at 0, which the product
                // u_0 prod q(k)/p(k) never evaluates: no term vanishes, but
                // the root 0 in A keeps the prime machinery out of reach.
                if (t != 0)
                    throw UnsupportedParametersError(
                        "q vanishes at 0 only; membership of a nonzero target is unsupported");
                cert.degenerate = DegenerateWitness{deg.kind, 0};
                break;  // u_n != 0 for every n
            }
            cert.degenerate = DegenerateWitness{deg.kind, tail};
            cert.bound = tail;
            cert.scan.bound = tail;
            SequenceOracle oracle(rec);
            cert.scan.hits = scan_hits(oracle, t, tail);
            if (t == 0) {
                ans.indices.all_from = tail;
                for (long n : cert.scan.hits)
                    if (n < tail) ans.indices.finite.push_back(n);
            } else {
                ans.indices.finite = cert.scan.hits;
            }
            ans.is_member = !ans.indices.empty();
            break;
        }
        case DegenerateKind::TargetZero: {
            if (t != 0 || rec.u0 == 0 || smallest_root_at_least(rec.q, 0) >= 0)
                throw std::invalid_argument("decide_degenerate: kind does not match instance");
            cert.case_label = "degenerate-target-zero";
            cert.degenerate = DegenerateWitness{deg.kind, 0};
            break;  // q nonvanishing on positive integers and u0 != 0: u_n != 0
        }
    }
    return ans;
}

MembershipAnswer decide_closed_form(const TelescopedForm& form, const Rat& u0, const Rat& t,
                                    const SequenceOracle& oracle, int sign,
                                    const ShiftPairing& pairing) {
    if (u0 == 0 || t == 0)
        throw std::invalid_argument("decide_closed_form: u0 and t must be nonzero");
    MembershipAnswer ans;
    Certificate& cert = ans.certificate;
    cert.case_label = "hard-closed-form";
    cert.bound = form.L;
    cert.scan.bound = form.L;
    cert.scan.hits = scan_hits(oracle, t, form.L);

    ClosedFormWitness witness;
    witness.pairing = pairing;
    witness.form = form;
    witness.sign = sign;

    std::set<long> extra;
    Polynomial fm = form.f_hat * u0;
    auto add_roots = [&](const Polynomial& poly, int parity, std::vector<Int>& out) {
        if (poly.is_zero()) {
            // u_n = t identically on the parity class beyond L.
            long from = form.L + 1;
            if (parity >= 0 && from % 2 != parity) ++from;
            if (parity < 0)
                ans.indices.all_from = from;
            else if (parity == 0)
                ans.indices.even_from = from;
            else
                ans.indices.odd_from = from;
            return;
        }
        for (const Int& r : integer_roots(poly)) {
            out.push_back(r);
            if (r <= form.L || !r.fits_slong_p()) continue;
            long n = r.get_si();
            if (parity >= 0 && n % 2 != parity) continue;
            // n > L: the telescoped identity makes u_n = t exact; re-check
            // through the oracle where that stays affordable.
            if (n <= kRootVerifyCap && oracle.eval_u(n) != t)
                throw std::logic_error("decide_closed_form: root failed oracle re-check");
            extra.insert(n);
        }
    };
    if (sign >= 0) {
        add_roots(fm - form.g_hat * t, -1, witness.roots_even);
    } else {
        add_roots(fm - form.g_hat * t, 0, witness.roots_even);
        add_roots(fm + form.g_hat * t, 1, witness.roots_odd);
    }
    cert.closed_form = std::move(witness);

    ans.indices.finite = cert.scan.hits;
    ans.indices.finite.insert(ans.indices.finite.end(), extra.begin(), extra.end());
    std::sort(ans.indices.finite.begin(), ans.indices.finite.end());
    ans.is_member = !ans.indices.empty();
    return ans;
}

MembershipAnswer decide_hard(const ShiftQuotientFactored& sq, const Rat& u0, const Rat& t,
                             const DensityBoundConfig& cfg, const SequenceOracle& oracle) {
    if (u0 == 0 || t == 0)
        throw std::invalid_argument("decide_hard: u0 and t must be nonzero");
    StableOrder order = stable_order(sq);
    auto region = select_chain_region(order);
    if (!region)
        throw std::invalid_argument(
            "decide_hard: an integer-shift bijection exists; use the closed form");

    PrimeChain chain = build_chain(*region, sq, chain_p_min(sq, u0, t), cfg, oracle, t);
    spot_check_chain(sq, chain, oracle, t, 100, kDecideSpotSeed);

    if (!chain.covered_lo.fits_slong_p())
        throw CapabilityError("decide_hard: exhaustive bound out of range");
    long bound = chain.covered_lo.get_si() - 1;

    MembershipAnswer ans;
    Certificate& cert = ans.certificate;
    cert.case_label = "hard-prime-chain";
    cert.bound = bound;
    cert.scan.bound = bound;
    cert.scan.hits = scan_hits(oracle, t, bound);

    std::set<long> finite(cert.scan.hits.begin(), cert.scan.hits.end());
    for (const GapFill& g : chain.gaps) finite.insert(g.hits.begin(), g.hits.end());
    ans.indices.finite.assign(finite.begin(), finite.end());
    ans.is_member = !ans.indices.empty();

    cert.chain = ChainWitness{region->gamma.rep,  region->gamma_prime.rep,
                              region->gamma.root, region->gamma_prime.root,
                              region->C,          std::move(chain),
                              n_r(sq)};
    return ans;
}

MembershipAnswer decide(const Recurrence& rec, const Rat& t, const DensityBoundConfig& cfg) {
    validate(rec);
    CaseTag tag = classify(rec, t);
    if (auto* d = std::get_if<Degenerate>(&tag)) return decide_degenerate(rec, t, *d);

    SequenceOracle oracle(rec);
    ShiftQuotientFactored sq = factor_shift_quotient(rec);
    Int np = compute_n_prime(sq, rec.u0, t);

    MembershipAnswer ans;
    if (std::get_if<ConstantSequence>(&tag)) {
        Certificate& cert = ans.certificate;
        cert.case_label = "constant";
        cert.bound = 0;
        cert.scan.bound = 0;
        cert.scan.hits = scan_hits(oracle, t, 0);
        if (t == rec.u0) {
            ans.is_member = true;
            ans.indices.all_from = 0;
        }
    } else if (auto* e = std::get_if<EasyGrowth>(&tag)) {
        EasyBoundDetail detail = easy_bound_detailed(rec, t, *e);
        Certificate& cert = ans.certificate;
        cert.case_label = case_label(tag);
        cert.bound = detail.bound;
        cert.scan.bound = detail.bound;
        cert.scan.hits = scan_hits(oracle, t, detail.bound);
        cert.easy = EasyWitness{detail.direction, detail.rho, detail.n2, detail.barrier,
                                detail.catch_up};
        ans.indices.finite = cert.scan.hits;
        ans.is_member = !ans.indices.finite.empty();
    } else {
        auto& h = std::get<HardUnit>(tag);
        if (sq.scale != 1) throw std::logic_error("decide: unit case with non-unit scale");
        auto pairing = integer_shift_pairing(sq.A, sq.B);
        if (pairing)
            ans = decide_closed_form(telescope(*pairing, h.sign, sq.scale), rec.u0, t, oracle,
                                     h.sign, *pairing);
        else
            ans = decide_hard(sq, rec.u0, t, cfg, oracle);
    }
    ans.certificate.n_prime = np;
    return ans;
}

namespace {

bool check_finite_indices(const MembershipAnswer& answer, const SequenceOracle& oracle,
                          const Rat& t) {
    long prev = -1;
    for (long n : answer.indices.finite) {
        if (n < 0 || n <= prev || n > kEvalCap) return false;
        if (oracle.eval_u(n) != t) return false;
        prev = n;
    }
    return answer.is_member == !answer.indices.empty();
}

bool same_hits(const std::vector<long>& a, const std::vector<long>& b) { return a == b; }

bool verify_degenerate(const Recurrence& rec, const Rat& t, const MembershipAnswer& answer,
                       const Degenerate& deg) {
    const Certificate& cert = answer.certificate;
    if (!cert.degenerate) throw Malformed("degenerate certificate missing witness");
    if (cert.degenerate->kind != deg.kind) return false;
    SequenceOracle oracle(rec);
    switch (deg.kind) {
        case DegenerateKind::ZeroInitial: {
            if (rec.u0 != 0) return false;
            bool member = t == 0;
            if (answer.is_member != member) return false;
            if (member && answer.indices.all_from != std::optional<long>(0)) return false;
            if (!member && !answer.indices.empty()) return false;
            return answer.indices.finite.empty();
        }
        case DegenerateKind::QHasNonnegativeZero: {
            if (smallest_root_at_least(rec.q, 0) < 0) return false;
            long tail = smallest_root_at_least(rec.q, 1);
            if (cert.degenerate->m != (tail < 0 ? 0 : tail)) return false;
            if (tail < 0) return t == 0 && !answer.is_member && answer.indices.empty();
            if (cert.scan.bound != tail || cert.bound != tail) return false;
            if (!same_hits(cert.scan.hits, scan_hits(oracle, t, tail))) return false;
            std::vector<long> expect_finite;
            if (t == 0) {
                if (answer.indices.all_from != std::optional<long>(tail)) return false;
                for (long n : cert.scan.hits)
                    if (n < tail) expect_finite.push_back(n);
            } else {
                if (answer.indices.all_from) return false;
                expect_finite = cert.scan.hits;
            }
            return answer.indices.finite == expect_finite;
        }
        case DegenerateKind::TargetZero: {
            if (t != 0 || rec.u0 == 0) return false;
            if (smallest_root_at_least(rec.q, 0) >= 0) return false;
            return !answer.is_member && answer.indices.empty();
        }
    }
    return false;
}

bool verify_easy(const Recurrence& rec, const Rat& t, const MembershipAnswer& answer,
                 const EasyGrowth& tag) {
    const Certificate& cert = answer.certificate;
    if (!cert.easy) throw Malformed("easy certificate missing witness");
    if (cert.easy->direction != tag.direction) return false;
    EasyBoundDetail detail = easy_bound_detailed(rec, t, tag);
    if (cert.easy->rho != detail.rho || cert.easy->n2 != detail.n2 ||
        cert.easy->barrier != detail.barrier || cert.easy->catch_up != detail.catch_up ||
        cert.bound != detail.bound)
        return false;
    SequenceOracle oracle(rec);
    const bool growth = tag.direction == GrowthDirection::ToInfinity ||
                        tag.direction == GrowthDirection::AbsLimitGt1;
    Rat target = abs(t);
    for (long n = cert.bound + 1; n <= cert.bound + 50; ++n) {
        Rat v = abs(oracle.eval_u(n));
        if (growth ? v <= target : v >= target) return false;
    }
    if (cert.scan.bound != cert.bound) return false;
    if (!same_hits(cert.scan.hits, scan_hits(oracle, t, cert.bound))) return false;
    if (answer.indices.all_from || answer.indices.even_from || answer.indices.odd_from)
        return false;
    return answer.indices.finite == cert.scan.hits;
}

bool verify_closed_form(const Recurrence& rec, const Rat& t, const MembershipAnswer& answer,
                        const ShiftQuotientFactored& sq, int sign) {
    const Certificate& cert = answer.certificate;
    if (!cert.closed_form) throw Malformed("closed-form certificate missing witness");
    const ClosedFormWitness& w = *cert.closed_form;
    if (w.sign != sign) return false;
    auto pairing = integer_shift_pairing(sq.A, sq.B);
    if (!pairing || !(*pairing == w.pairing)) return false;
    TelescopedForm form = telescope(*pairing, sign, sq.scale);
    if (!(form == w.form)) return false;

    SequenceOracle oracle(rec);
    for (long n = form.L + 1; n <= form.L + 100; ++n) {
        Rat rhs = power_sign(sign, n) * rec.u0 * form.f_hat.eval(Rat(n)) /
                  form.g_hat.eval(Rat(n));
        if (oracle.eval_u(n) != rhs) return false;
    }

    Polynomial fm = form.f_hat * rec.u0;
    Polynomial even = fm - form.g_hat * t;
    std::set<long> extra;
    std::optional<long> expect_all, expect_even, expect_odd;
    auto collect = [&](const Polynomial& poly, int parity, const std::vector<Int>& recorded) {
        if (poly.is_zero()) {
            long from = form.L + 1;
            if (parity >= 0 && from % 2 != parity) ++from;
            (parity < 0 ? expect_all : parity == 0 ? expect_even : expect_odd) = from;
            return recorded.empty();
        }
        if (integer_roots(poly) != recorded) return false;
        for (const Int& r : recorded) {
            if (r <= form.L || !r.fits_slong_p()) continue;
            long n = r.get_si();
            if (parity >= 0 && n % 2 != parity) continue;
            extra.insert(n);
        }
        return true;
    };
    if (sign >= 0) {
        if (!collect(even, -1, w.roots_even)) return false;
        if (!w.roots_odd.empty()) return false;
    } else {
        if (!collect(even, 0, w.roots_even)) return false;
        if (!collect(fm + form.g_hat * t, 1, w.roots_odd)) return false;
    }

    if (cert.scan.bound != form.L || cert.bound != form.L) return false;
    if (!same_hits(cert.scan.hits, scan_hits(oracle, t, form.L))) return false;
    std::set<long> finite(cert.scan.hits.begin(), cert.scan.hits.end());
    finite.insert(extra.begin(), extra.end());
    if (answer.indices.finite != std::vector<long>(finite.begin(), finite.end())) return false;
    return answer.indices.all_from == expect_all && answer.indices.even_from == expect_even &&
           answer.indices.odd_from == expect_odd;
}

bool verify_chain(const Recurrence& rec, const Rat& t, const MembershipAnswer& answer,
                  const ShiftQuotientFactored& sq) {
    const Certificate& cert = answer.certificate;
    if (!cert.chain) throw Malformed("chain certificate missing witness");
    const ChainWitness& w = *cert.chain;
    if (w.chain.primes.empty()) throw Malformed("chain certificate has no primes");

    StableOrder order = stable_order(sq);
    auto region = select_chain_region(order);
    if (!region) return false;
    if (!(region->gamma.rep == w.gamma) || !(region->gamma_prime.rep == w.gamma_prime) ||
        region->gamma.root != w.root_gamma || region->gamma_prime.root != w.root_gamma_prime)
        return false;
    if (contiguity_constant(w.gamma, w.gamma_prime) != w.C) return false;
    if (n_r(sq) != w.n_r_value) return false;
    if (compute_n_prime(sq, rec.u0, t) != cert.n_prime) return false;

    std::vector<Int> magnitudes = instance_magnitudes(sq, rec.u0, t);
    Int prev_prime = 0;
    for (const ChainPrime& cp : w.chain.primes) {
        const Int& p = cp.prime;
        if (p <= prev_prime) return false;
        prev_prime = p;
        if (!is_prime(p)) return false;
        if (p % sq.b != 1) return false;
        for (const Int& m : magnitudes)
            if (m != 0 && mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) return false;
        // Independent residues through the modular-inverse map, then the
        // representation formula; both must agree with the record.
        if (residue(w.root_gamma, p).value != cp.rem_lo) return false;
        if (residue(w.root_gamma_prime, p).value != cp.rem_hi) return false;
        if (residue_of_root(w.gamma, p).value != cp.rem_lo) return false;
        if (residue_of_root(w.gamma_prime, p).value != cp.rem_hi) return false;
        // Residue order at p must realize the stable order.
        Int prev_rem(-1);
        const CanonicalRep* prev_rep = nullptr;
        for (const OrderEntry& ent : order.entries) {
            Int r = residue(ent.root, p).value;
            if (prev_rep && (*prev_rep == ent.rep ? r != prev_rem : r <= prev_rem)) return false;
            prev_rem = r;
            prev_rep = &ent.rep;
        }
        // Eq. (5) side condition at the extreme indices.
        Int p2 = p * p;
        for (const OrderEntry& ent : order.entries) {
            Int lo = abs(den(ent.root) - num(ent.root));
            Int hi = abs((p - 1) * den(ent.root) - num(ent.root));
            if (lo == 0 || hi == 0 || lo >= p2 || hi >= p2) return false;
        }
    }

    // Contiguity, with every hole matched by an exact gap repair.
    SequenceOracle oracle(rec);
    std::size_t gap_idx = 0;
    for (std::size_t i = 0; i + 1 < w.chain.primes.size(); ++i) {
        const ChainPrime& a = w.chain.primes[i];
        const ChainPrime& b = w.chain.primes[i + 1];
        if (b.rem_lo <= a.rem_hi) continue;
        if (gap_idx >= w.chain.gaps.size()) return false;
        const GapFill& g = w.chain.gaps[gap_idx++];
        if (g.lo != a.rem_hi || g.hi != b.rem_lo) return false;
        if (!g.lo.fits_slong_p() || !g.hi.fits_slong_p() ||
            g.hi - g.lo > kEvalCap)
            return false;
        std::vector<long> hits;
        for (long n = g.lo.get_si(); n < g.hi.get_si(); ++n)
            if (oracle.eval_u(n) == t) hits.push_back(n);
        if (hits != g.hits) return false;
    }
    if (gap_idx != w.chain.gaps.size()) return false;

    if (w.chain.covered_lo != w.chain.primes.front().rem_lo) return false;
    if (w.chain.covered_hi != w.chain.primes.back().rem_hi - 1) return false;
    if (!w.chain.covered_lo.fits_slong_p()) return false;
    long bound = w.chain.covered_lo.get_si() - 1;
    if (cert.bound != bound || cert.scan.bound != bound) return false;
    if (!same_hits(cert.scan.hits, scan_hits(oracle, t, bound))) return false;

    // Stop threshold: everything a tail prime needs is proven past it.
    Int threshold = n_r(sq);
    threshold = std::max(threshold, Int(sq.b + 1));
    Int max_ng = 0;
    for (const OrderEntry& ent : order.entries) {
        threshold = std::max(threshold, Int(den(ent.root) + abs(num(ent.root))));
        max_ng = std::max(max_ng, n_gamma(ent.rep));
    }
    threshold = std::max(threshold, Int(max_ng + 1));
    for (const Int& m : magnitudes) threshold = std::max(threshold, Int(abs(m) + 1));
    threshold = std::max(threshold, chain_p_min(sq, rec.u0, t));
    if (w.chain.tail_justification == "nagura-table") {
        if (sq.b > 2) return false;
        threshold = std::max(threshold, nagura_threshold(sq.b, w.C));
    } else if (w.chain.tail_justification != "verified-horizon") {
        throw Malformed("unknown tail justification tag");
    }
    if (w.chain.stop_threshold != threshold) return false;
    if (w.chain.primes.back().prime < threshold) return false;

    std::set<long> finite(cert.scan.hits.begin(), cert.scan.hits.end());
    for (const GapFill& g : w.chain.gaps) finite.insert(g.hits.begin(), g.hits.end());
    if (answer.indices.finite != std::vector<long>(finite.begin(), finite.end())) return false;
    if (answer.indices.all_from || answer.indices.even_from || answer.indices.odd_from)
        return false;

    spot_check_chain(sq, w.chain, oracle, t, 100, kVerifySpotSeed);
    return true;
}

bool verify_impl(const Recurrence& rec, const Rat& t, const MembershipAnswer& answer) {
    validate(rec);
    CaseTag tag = classify(rec, t);
    const Certificate& cert = answer.certificate;

    SequenceOracle oracle(rec);
    if (!check_finite_indices(answer, oracle, t)) return false;

    if (auto* d = std::get_if<Degenerate>(&tag)) {
        if (cert.case_label != case_label(tag)) return false;
        return verify_degenerate(rec, t, answer, *d);
    }
    if (std::get_if<ConstantSequence>(&tag)) {
        if (cert.case_label != "constant") return false;
        bool member = t == rec.u0;
        if (answer.is_member != member) return false;
        if (member && answer.indices.all_from != std::optional<long>(0)) return false;
        return same_hits(cert.scan.hits, scan_hits(oracle, t, std::max(cert.scan.bound, 0L)));
    }
    if (auto* e = std::get_if<EasyGrowth>(&tag)) {
        if (cert.case_label != case_label(tag)) return false;
        return verify_easy(rec, t, answer, *e);
    }

    auto& h = std::get<HardUnit>(tag);
    ShiftQuotientFactored sq = factor_shift_quotient(rec);
    bool bijection = integer_shift_pairing(sq.A, sq.B).has_value();
    if (bijection) {
        if (cert.case_label != "hard-closed-form") return false;
        if (compute_n_prime(sq, rec.u0, t) != cert.n_prime) return false;
        return verify_closed_form(rec, t, answer, sq, h.sign);
    }
    if (cert.case_label != "hard-prime-chain") return false;
    return verify_chain(rec, t, answer, sq);
}

}  // namespace

bool verify_certificate(const Recurrence& rec, const Rat& t, const MembershipAnswer& answer) {
    try {
        return verify_impl(rec, t, answer);
    } catch (const Malformed&) {
        throw std::invalid_argument("malformed certificate");
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace hyperseq
