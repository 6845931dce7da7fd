#include <hyperseq/primes.hpp>
#include <hyperseq/recurrence.hpp>

#include <algorithm>

namespace hyperseq {

void validate(const Recurrence& rec) {
    if (rec.p.is_zero() || rec.q.is_zero())
        throw std::invalid_argument("recurrence: p and q must be nonzero");
    for (const Int& r : integer_roots(rec.p))
        if (r >= 0)
            throw std::invalid_argument("recurrence: p has nonnegative integer zero " +
                                        to_string(r));
}

ShiftQuotientFactored factor_shift_quotient(const Recurrence& rec) {
    validate(rec);
    auto qs = rational_roots(rec.q);
    if (!qs)
        throw UnsupportedParametersError("q(x) does not split completely over Q");
    auto ps = rational_roots(rec.p);
    if (!ps)
        throw UnsupportedParametersError("p(x) does not split completely over Q");
    for (const Rat& r : qs->roots)
        if (r >= 0 && is_integer(r))
            throw std::invalid_argument(
                "factor_shift_quotient: q has nonnegative integer zero (degenerate instance "
                "must be screened first)");

    ShiftQuotientFactored sq;
    sq.A = qs->roots;
    sq.B = ps->roots;

    // Cancel common roots pairwise; both multisets are sorted.
    std::vector<Rat> a2, b2;
    std::size_t i = 0, j = 0;
    while (i < sq.A.size() && j < sq.B.size()) {
        if (sq.A[i] == sq.B[j]) {
            sq.cancelled.push_back(sq.A[i]);
            ++i, ++j;
        } else if (sq.A[i] < sq.B[j]) {
            a2.push_back(sq.A[i++]);
        } else {
            b2.push_back(sq.B[j++]);
        }
    }
    a2.insert(a2.end(), sq.A.begin() + i, sq.A.end());
    b2.insert(b2.end(), sq.B.begin() + j, sq.B.end());
    sq.A = std::move(a2);
    sq.B = std::move(b2);

    Rat ratio = qs->leading / ps->leading;
    sq.sign = ratio < 0 ? -1 : 1;
    sq.scale = abs(ratio);

    sq.b = 1;
    for (const Rat& r : sq.A) sq.b = lcm(sq.b, den(r));
    for (const Rat& r : sq.B) sq.b = lcm(sq.b, den(r));
    return sq;
}

CanonicalRep canonical_rep(const Rat& gamma, const Int& b) {
    if (b < 1) throw std::invalid_argument("canonical_rep: b must be positive");
    Rat gb = gamma * Rat(b);
    if (!is_integer(gb))
        throw std::invalid_argument("canonical_rep: b * gamma is not integral");
    Int g = num(gb);
    // gamma = c - a/b with a = c*b - g in {1, ..., b} forces
    // c = ceil((g+1)/b).
    Int c = ceil_div(g + 1, b);
    Int a = c * b - g;
    return CanonicalRep{c, a, b};
}

Int n_gamma(const CanonicalRep& rep) {
    if (rep.c >= 1) {
        if (rep.a == rep.b)
            throw std::invalid_argument("n_gamma: gamma is a nonnegative integer");
        return std::max(rep.c, Int(ceil_div(rep.b * rep.c, rep.b - rep.a)));
    }
    return std::max(Int(-rep.c), Int(ceil_div(-rep.b * rep.c, rep.a)));
}

Int n_r(const ShiftQuotientFactored& sq) {
    if (sq.A.empty() && sq.B.empty())
        throw std::invalid_argument("n_r: empty root multiset (constant-sequence case)");
    Int sum = 0;
    for (const Rat& r : sq.A) sum += n_gamma(canonical_rep(r, sq.b));
    for (const Rat& r : sq.B) sum += n_gamma(canonical_rep(r, sq.b));
    return sq.b * sum + 1;
}

Residue residue_of_root(const CanonicalRep& rep, const Int& p) {
    if (p % rep.b != 1)
        throw std::invalid_argument("residue_of_root: p != 1 (mod b)");
    if (p <= n_gamma(rep))
        throw std::invalid_argument("residue_of_root: p <= N_gamma");
    Int value = rep.c + (p - 1) / rep.b * rep.a;
    if (value < 0 || value >= p)
        throw std::logic_error("residue_of_root: value out of range");
    return Residue{value, p};
}

Int s_p_direct(const ShiftQuotientFactored& sq, long n, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("s_p_direct: p is not prime");
    Int sum = 0;
    auto term = [&](const Rat& root, long k) {
        Valuation v = padic_valuation_unchecked(Rat(k) - root, p);
        if (v.infinite)
            throw std::invalid_argument("s_p_direct: a root equals a positive integer index");
        return v.value;
    };
    for (long k = 1; k <= n; ++k) {
        for (const Rat& alpha : sq.A) sum += term(alpha, k);
        for (const Rat& beta : sq.B) sum -= term(beta, k);
    }
    return sum;
}

bool s_p_nonzero_fast(const ShiftQuotientFactored& sq, long n, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("s_p_nonzero_fast: p is not prime");
    if (p % sq.b != 1) throw std::invalid_argument("s_p_nonzero_fast: p != 1 (mod b)");
    if (n < 1 || Int(n) >= p)
        throw std::invalid_argument("s_p_nonzero_fast: n must lie in {1, ..., p-1}");
    Int p2 = p * p;
    auto check_root = [&](const Rat& root) {
        CanonicalRep rep = canonical_rep(root, sq.b);
        if (p <= n_gamma(rep))
            throw std::invalid_argument("s_p_nonzero_fast: p <= N_gamma for a root");
        // 0 < |k b' - a'| < p^2 for all k in {1..n}; |k b' - a'| is piecewise
        // linear in k, so the endpoints carry the maximum.  Positivity holds
        // because no root is a nonnegative integer.
        const Int& bb = den(root);
        const Int& aa = num(root);
        Int m1 = abs(bb - aa);
        Int m2 = abs(Int(n) * bb - aa);
        if (m1 == 0 || m2 == 0)
            throw std::logic_error("s_p_nonzero_fast: root collides with an index");
        if (m1 >= p2 || m2 >= p2)
            throw std::invalid_argument("s_p_nonzero_fast: |k b - a| < p^2 violated");
        return rep;
    };
    long count_a = 0, count_b = 0;
    for (const Rat& alpha : sq.A)
        if (residue_of_root(check_root(alpha), p).value <= n) ++count_a;
    for (const Rat& beta : sq.B)
        if (residue_of_root(check_root(beta), p).value <= n) ++count_b;
    return count_a != count_b;
}

SequenceOracle::SequenceOracle(Recurrence rec) : rec_(std::move(rec)) {
    validate(rec_);
    cache_.push_back(rec_.u0);
}

Rat SequenceOracle::eval_u(long n) const {
    if (n < 0) throw std::invalid_argument("eval_u: negative index");
    while (static_cast<long>(cache_.size()) <= n) {
        long k = static_cast<long>(cache_.size());
        Rat pk = rec_.p.eval(Rat(k));
        Rat qk = rec_.q.eval(Rat(k));
        cache_.push_back(cache_.back() * qk / pk);
    }
    return cache_[static_cast<std::size_t>(n)];
}

}  // namespace hyperseq
