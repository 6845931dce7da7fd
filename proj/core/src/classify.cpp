#include <hyperseq/classify.hpp>

#include <cmath>
#include <limits>

namespace hyperseq {

namespace {

long smallest_nonneg_integer_root(const Polynomial& f) {
    long best = -1;
    for (const Int& r : integer_roots(f)) {
        if (r < 0) continue;
        if (!r.fits_slong_p()) continue;
        long v = r.get_si();
        if (best < 0 || v < best) best = v;
    }
    return best;
}

}  // namespace

CaseTag classify(const Recurrence& rec, const Rat& t) {
    validate(rec);
    if (rec.u0 == 0) return Degenerate{DegenerateKind::ZeroInitial};
    long m = smallest_nonneg_integer_root(rec.q);
    if (m >= 0) return Degenerate{DegenerateKind::QHasNonnegativeZero, m};
    if (t == 0) return Degenerate{DegenerateKind::TargetZero};

    ShiftQuotientFactored sq = factor_shift_quotient(rec);
    int dq = rec.q.degree(), dp = rec.p.degree();
    if (dq > dp) return EasyGrowth{GrowthDirection::ToInfinity};
    if (dq < dp) return EasyGrowth{GrowthDirection::ToZero};
    if (sq.scale > 1) return EasyGrowth{GrowthDirection::AbsLimitGt1};
    if (sq.scale < 1) return EasyGrowth{GrowthDirection::AbsLimitLt1};
    if (sq.A.empty() && sq.B.empty() && sq.sign == 1) return ConstantSequence{};
    return HardUnit{sq.sign};
}

namespace {

// 1 + max |h_i / h_d|: every real root of h lies strictly below this.
Int cauchy_root_bound(const Polynomial& h) {
    if (h.degree() <= 0) return 0;
    Rat m(0);
    for (int i = 0; i < h.degree(); ++i) {
        Rat a = abs(h.coeff(i) / h.leading());
        if (a > m) m = a;
    }
    return 1 + ceil_div(num(m), den(m));
}

Polynomial monic_from_roots(const std::vector<Rat>& roots) {
    Polynomial f = Polynomial::constant(Rat(1));
    for (const Rat& r : roots) f = f * Polynomial({-r, Rat(1)});
    return f;
}

}  // namespace

long easy_bound(const Recurrence& rec, const Rat& t, const EasyGrowth& tag) {
    return easy_bound_detailed(rec, t, tag).bound;
}

EasyBoundDetail easy_bound_detailed(const Recurrence& rec, const Rat& t, const EasyGrowth& tag) {
    if (t == 0) throw std::invalid_argument("easy_bound: t must be nonzero");
    if (rec.u0 == 0) throw std::invalid_argument("easy_bound: u0 must be nonzero");
    CaseTag actual = classify(rec, t);
    auto* eg = std::get_if<EasyGrowth>(&actual);
    if (!eg || eg->direction != tag.direction)
        throw std::invalid_argument("easy_bound: tag does not match the instance");

    ShiftQuotientFactored sq = factor_shift_quotient(rec);
    const bool growth = tag.direction == GrowthDirection::ToInfinity ||
                        tag.direction == GrowthDirection::AbsLimitGt1;
    Rat rho;
    switch (tag.direction) {
        case GrowthDirection::ToInfinity: rho = 2; break;
        case GrowthDirection::AbsLimitGt1: rho = (1 + sq.scale) / 2; break;
        case GrowthDirection::AbsLimitLt1: rho = (1 + sq.scale) / 2; break;
        case GrowthDirection::ToZero: rho = make_rat(1, 2); break;
    }

    // Beyond every root the factors of |r| are positive, and beyond the
    // largest real root of h the bound |r(x)| >= rho (growth) resp.
    // |r(x)| <= rho (decay) holds with the correct sign of h's leading
    // coefficient.
    Int n1 = 1;
    for (const Rat& r : sq.A) n1 = std::max(n1, Int(1 + ceil_div(abs(num(r)), den(r))));
    for (const Rat& r : sq.B) n1 = std::max(n1, Int(1 + ceil_div(abs(num(r)), den(r))));
    Polynomial fa = monic_from_roots(sq.A) * sq.scale;
    Polynomial fb = monic_from_roots(sq.B);
    Polynomial h = growth ? fa - fb * rho : fb * rho - fa;
    Int n2i = std::max(n1, Int(cauchy_root_bound(h) + 1));
    if (!n2i.fits_slong_p()) throw CapabilityError("easy_bound: threshold out of range");
    long n2 = n2i.get_si();

    SequenceOracle oracle(rec);
    Rat barrier = abs(oracle.eval_u(n2));
    Rat target = abs(t);
    long k = 0;
    while (growth ? barrier <= target : barrier >= target) {
        barrier *= rho;
        ++k;
        if (k > 1000000) throw std::logic_error("easy_bound: catch-up did not terminate");
    }
    long bound = n2 + k - 1;

    for (long n = bound + 1; n <= bound + 50; ++n) {
        Rat v = abs(oracle.eval_u(n));
        bool ok = growth ? v > target : v < target;
        if (!ok) throw std::logic_error("easy_bound: verification failed");
    }
    return EasyBoundDetail{tag.direction, rho, n2, abs(oracle.eval_u(n2)), k, bound};
}

namespace {

struct Interval {
    double lo, hi;
};

double next_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
double next_down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }

Interval of_rat(const Rat& x) {
    double d = x.get_d();  // truncated toward zero, within one ulp
    if (Rat(d) == x) return Interval{d, d};
    return Interval{next_down(d), next_up(d)};
}

Interval mul(const Interval& a, const Interval& b) {
    double c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    double lo = std::min(std::min(c1, c2), std::min(c3, c4));
    double hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return Interval{next_down(lo), next_up(hi)};
}

}  // namespace

LimitDiagnostic limit_diagnostic(const ShiftQuotientFactored& sq, const Rat& u0, long terms) {
    if (terms < 1) throw std::invalid_argument("limit_diagnostic: terms must be positive");
    Rat sum_a(0), sum_b(0);
    for (const Rat& r : sq.A) sum_a += r;
    for (const Rat& r : sq.B) sum_b += r;
    bool converges = sum_a == sum_b;

    // Factors from k = 0: the k = 0 factor is exactly the reciprocal of the
    // rational prefactor in the Gamma-quotient limit formula, so the
    // convergent value is the Gamma quotient itself.
    Interval prod = of_rat(u0);
    for (long k = 0; k < terms; ++k) {
        Rat numer(sq.sign), denom(1);
        for (const Rat& alpha : sq.A) numer *= Rat(k) - alpha;
        for (const Rat& beta : sq.B) denom *= Rat(k) - beta;
        prod = mul(prod, of_rat(sq.scale * numer / denom));
    }

    // Widen by a rigorous tail envelope so the interval encloses the limit,
    // not just the partial product.  Applies to the convergent sign-(+1)
    // unit case; requires all remaining factors positive and the envelope
    // small enough for the log bounds used.
    if (converges && sq.sign == 1 && sq.scale == 1) {
        std::size_t d = sq.A.size();
        Polynomial h = monic_from_roots(sq.A) - monic_from_roots(sq.B);
        Rat big_h(0);
        for (const Rat& c : h.coefficients()) big_h += abs(c);
        Int ceil_max_root = 0;
        for (const Rat& r : sq.A) ceil_max_root = std::max(ceil_max_root, ceil_div(num(r), den(r)));
        for (const Rat& r : sq.B) ceil_max_root = std::max(ceil_max_root, ceil_div(num(r), den(r)));
        if (ceil_max_root < 0) ceil_max_root = 0;
        bool far_enough = terms >= 2 && Int(terms) >= 2 * ceil_max_root + 2;
        Rat envelope = big_h / Rat(terms - 1);  // sum_{k >= terms} 1/k^2 < 1/(terms-1)
        if (ceil_max_root > 0)
            for (std::size_t i = 0; i < d; ++i) envelope *= 2;
        if (far_enough && envelope <= make_rat(1, 4)) {
            double t_up = next_up(envelope.get_d());
            Interval tail{next_down(1.0 - 2 * t_up), next_up(1.0 + 2 * t_up)};
            prod = mul(prod, tail);
        }
    }
    return LimitDiagnostic{converges, prod.lo, prod.hi, terms};
}

}  // namespace hyperseq
