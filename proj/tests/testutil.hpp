#pragma once

// Shared helpers for the test suites: terse constructors, independent
// oracles (trial sieves, brute scans), and random instance generators.

#include <hyperseq/recurrence.hpp>

#include <random>
#include <vector>

namespace hyperseq::testutil {

inline Rat rat(long a, long b = 1) { return make_rat(a, b); }

inline Polynomial poly(std::initializer_list<Rat> coeffs_low_first) {
    return Polynomial(std::vector<Rat>(coeffs_low_first));
}

inline Polynomial poly_from_roots(const Rat& leading, const std::vector<Rat>& roots) {
    Polynomial f = Polynomial::constant(leading);
    for (const Rat& r : roots) f = f * Polynomial({-r, Rat(1)});
    return f;
}

// The worked example: s(x) = (x+9/2)(x+7/2)(x+5/2) / ((x+11/2)(x+4)(x+1)).
inline Recurrence example_recurrence() {
    Polynomial q = poly_from_roots(Rat(8), {rat(-9, 2), rat(-7, 2), rat(-5, 2)});
    Polynomial p = poly_from_roots(Rat(8), {rat(-11, 2), rat(-4), rat(-1)});
    return Recurrence{p, q, Rat(1)};
}

// Plain trial-division primality, independent of the library's tests.
inline bool trial_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Random nonzero rational with |numerator| <= num_mag and denominator
// <= den_max, avoiding nonnegative integers.
inline Rat random_root(std::mt19937& rng, long num_mag = 12, long den_max = 8) {
    std::uniform_int_distribution<long> den_pick(1, den_max);
    std::uniform_int_distribution<long> num_pick(-num_mag, num_mag);
    while (true) {
        long d = den_pick(rng);
        long n = num_pick(rng);
        Rat r = make_rat(n, d);
        if (r >= 0 && is_integer(r)) continue;
        return r;
    }
}

inline std::vector<Rat> random_roots(std::mt19937& rng, std::size_t count, long num_mag = 12,
                                     long den_max = 8) {
    std::vector<Rat> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_root(rng, num_mag, den_max));
    return out;
}

// Recurrence with the given root multisets (A for q, B for p) and unit
// leading ratio.
inline Recurrence recurrence_from_roots(const std::vector<Rat>& A, const std::vector<Rat>& B,
                                        const Rat& u0, int sign = 1) {
    Int clear = 1;
    for (const Rat& r : A) clear = lcm(clear, den(r));
    for (const Rat& r : B) clear = lcm(clear, den(r));
    Rat lead = Rat(clear) * Rat(sign);
    return Recurrence{poly_from_roots(Rat(clear), B), poly_from_roots(lead, A), u0};
}

// Exact brute-force index scan through the recurrence itself.
inline std::vector<long> brute_indices(const Recurrence& rec, const Rat& t, long horizon) {
    SequenceOracle oracle(rec);
    std::vector<long> out;
    for (long n = 0; n <= horizon; ++n)
        if (oracle.eval_u(n) == t) out.push_back(n);
    return out;
}

}  // namespace hyperseq::testutil
