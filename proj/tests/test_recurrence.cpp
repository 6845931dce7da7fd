#include <doctest.h>

#include <hyperseq/primes.hpp>
#include <hyperseq/recurrence.hpp>

#include "testutil.hpp"

using namespace hyperseq;
using namespace hyperseq::testutil;

TEST_CASE("factor_shift_quotient on the worked example") {
    ShiftQuotientFactored sq = factor_shift_quotient(example_recurrence());
    CHECK(sq.sign == 1);
    CHECK(sq.scale == 1);
    CHECK(sq.A == std::vector<Rat>{rat(-9, 2), rat(-7, 2), rat(-5, 2)});
    CHECK(sq.B == std::vector<Rat>{rat(-11, 2), rat(-4), rat(-1)});
    CHECK(sq.b == 2);
    CHECK(sq.cancelled.empty());
}

TEST_CASE("factor_shift_quotient cancellation and errors") {
    Polynomial xp1 = poly({rat(1), rat(1)});
    ShiftQuotientFactored sq = factor_shift_quotient(Recurrence{xp1, xp1, Rat(1)});
    CHECK(sq.A.empty());
    CHECK(sq.B.empty());
    CHECK(sq.sign == 1);
    CHECK(sq.scale == 1);
    CHECK(sq.b == 1);
    CHECK(sq.cancelled == std::vector<Rat>{rat(-1)});

    Recurrence nonsplit{poly({rat(1), rat(0), rat(1)}), xp1, Rat(1)};
    CHECK_THROWS_AS(factor_shift_quotient(nonsplit), UnsupportedParametersError);

    Recurrence bad_p{poly({rat(-3), rat(1)}), xp1, Rat(1)};  // p(3) = 0
    CHECK_THROWS_AS(factor_shift_quotient(bad_p), std::invalid_argument);

    Recurrence degenerate_q{xp1, poly({rat(-3), rat(1)}), Rat(1)};  // q(3) = 0
    CHECK_THROWS_AS(factor_shift_quotient(degenerate_q), std::invalid_argument);

    // Scale and sign come from the leading-coefficient ratio.
    ShiftQuotientFactored geom =
        factor_shift_quotient(Recurrence{xp1, poly({rat(-2), rat(-2)}), Rat(1)});
    CHECK(geom.sign == -1);
    CHECK(geom.scale == 2);
    CHECK(geom.A.empty());
    CHECK(geom.B.empty());
}

TEST_CASE("canonical representation") {
    CHECK(canonical_rep(rat(-11, 2), Int(2)) == CanonicalRep{-5, 1, 2});
    CHECK(canonical_rep(rat(-1), Int(2)) == CanonicalRep{0, 2, 2});
    CHECK(canonical_rep(rat(-4), Int(2)) == CanonicalRep{-3, 2, 2});
    CHECK_THROWS_AS(canonical_rep(rat(-1, 3), Int(2)), std::invalid_argument);

    std::mt19937 rng(20240906);
    std::uniform_int_distribution<long> num_pick(-60, 60);
    std::uniform_int_distribution<long> den_pick(1, 8);
    std::uniform_int_distribution<long> mult(1, 5);
    for (int i = 0; i < 500; ++i) {
        long d = den_pick(rng);
        Rat gamma = make_rat(num_pick(rng), d);
        Int b = Int(d) * mult(rng);
        CanonicalRep rep = canonical_rep(gamma, b);
        CHECK(rep.b == b);
        CHECK(rep.a >= 1);
        CHECK(rep.a <= b);
        CHECK(rep.value() == gamma);
    }
}

TEST_CASE("n_gamma") {
    CHECK(n_gamma(CanonicalRep{-5, 1, 2}) == 10);
    CHECK(n_gamma(CanonicalRep{0, 2, 2}) == 0);
    CHECK(n_gamma(CanonicalRep{-4, 1, 2}) == 8);
    CHECK_THROWS_AS(n_gamma(CanonicalRep{1, 2, 2}), std::invalid_argument);
    CHECK(n_gamma(CanonicalRep{2, 1, 3}) == 3);  // max(2, ceil(6/2))
}

TEST_CASE("n_r") {
    ShiftQuotientFactored sq = factor_shift_quotient(example_recurrence());
    CHECK(n_r(sq) == 63);  // 2*(8+6+4+10+3+0) + 1

    ShiftQuotientFactored single;
    single.A = {rat(-1, 2)};
    single.b = 2;
    single.scale = 1;
    CHECK(n_r(single) == 1);

    ShiftQuotientFactored duo;
    duo.A = {rat(-1, 2), rat(-3, 2)};
    duo.b = 2;
    duo.scale = 1;
    CHECK(n_r(duo) == 5);

    ShiftQuotientFactored empty;
    empty.b = 1;
    empty.scale = 1;
    CHECK_THROWS_AS(n_r(empty), std::invalid_argument);
}

TEST_CASE("residue_of_root reproduces the example residues") {
    CHECK(residue_of_root(CanonicalRep{-5, 1, 2}, Int(17)).value == 3);
    CHECK(residue_of_root(CanonicalRep{-5, 1, 2}, Int(23)).value == 6);
    CHECK(residue_of_root(CanonicalRep{0, 2, 2}, Int(29)).value == 28);
    CHECK_THROWS_AS(residue_of_root(CanonicalRep{-5, 1, 2}, Int(7)), std::invalid_argument);
    CHECK_THROWS_AS(residue_of_root(CanonicalRep{0, 2, 3}, Int(17)), std::invalid_argument);
}

TEST_CASE("representation formula equals the modular-inverse residue") {
    std::mt19937 rng(20240907);
    std::uniform_int_distribution<long> den_pick(1, 8);
    int checked = 0;
    for (int i = 0; checked < 500; ++i) {
        REQUIRE(i < 20000);
        long d = den_pick(rng);
        Rat gamma = random_root(rng, 40, d);
        Int b = lcm(Int(d), den(gamma));
        CanonicalRep rep = canonical_rep(gamma, b);
        Int p = next_prime_in_progression(Int(n_gamma(rep)), b);
        if (p > 100000) continue;
        ++checked;
        CHECK(residue_of_root(rep, p).value == residue(gamma, p).value);
    }
}

TEST_CASE("s_p_direct matches the example's unbalanced structure") {
    ShiftQuotientFactored sq = factor_shift_quotient(example_recurrence());
    CHECK(s_p_direct(sq, 3, Int(17)) != 0);
    CHECK(s_p_direct(sq, 4, Int(17)) == 0);

    ShiftQuotientFactored empty;
    empty.b = 1;
    empty.scale = 1;
    CHECK(s_p_direct(empty, 25, Int(17)) == 0);
}

TEST_CASE("s_p_nonzero_fast on the example and its guards") {
    ShiftQuotientFactored sq = factor_shift_quotient(example_recurrence());
    CHECK(s_p_nonzero_fast(sq, 10, Int(17)));
    CHECK_FALSE(s_p_nonzero_fast(sq, 16, Int(17)));
    CHECK(s_p_nonzero_fast(sq, 3, Int(17)));
    CHECK_THROWS_AS(s_p_nonzero_fast(sq, 17, Int(17)), std::invalid_argument);
    CHECK_THROWS_AS(s_p_nonzero_fast(sq, 0, Int(17)), std::invalid_argument);
    CHECK_THROWS_AS(s_p_nonzero_fast(sq, 3, Int(5)), std::invalid_argument);  // p <= N_gamma
}

TEST_CASE("fast criterion agrees with the direct sum") {
    std::mt19937 rng(20240908);
    std::uniform_int_distribution<std::size_t> size_pick(1, 2);
    int checked = 0;
    for (int i = 0; checked < 120; ++i) {
        REQUIRE(i < 10000);
        std::vector<Rat> A = random_roots(rng, size_pick(rng), 8, 4);
        std::vector<Rat> B = random_roots(rng, A.size(), 8, 4);
        Recurrence rec = recurrence_from_roots(A, B, Rat(1));
        ShiftQuotientFactored sq;
        try {
            sq = factor_shift_quotient(rec);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (sq.A.empty() && sq.B.empty()) continue;
        Int max_ng = 0;
        for (const Rat& r : sq.A) max_ng = std::max(max_ng, n_gamma(canonical_rep(r, sq.b)));
        for (const Rat& r : sq.B) max_ng = std::max(max_ng, n_gamma(canonical_rep(r, sq.b)));
        Int p = next_prime_in_progression(max_ng, sq.b);
        if (p > 500) continue;
        ++checked;
        std::uniform_int_distribution<long> n_pick(1, p.get_si() - 1);
        for (int k = 0; k < 12; ++k) {
            long n = n_pick(rng);
            CHECK(s_p_nonzero_fast(sq, n, p) == (s_p_direct(sq, n, p) != 0));
        }
    }
}

TEST_CASE("sequence oracle") {
    SequenceOracle oracle(example_recurrence());
    CHECK(oracle.eval_u(0) == 1);
    CHECK(oracle.eval_u(1) == make_rat(693, 520));

    // Telescoped comparison: r = (x+5/2)/(x+1/2) gives u_n = (2n+3)(2n+5)/15.
    Recurrence rec{poly_from_roots(Rat(2), {rat(-1, 2)}), poly_from_roots(Rat(2), {rat(-5, 2)}),
                   Rat(1)};
    SequenceOracle tele(rec);
    CHECK(tele.eval_u(3) == make_rat(33, 5));
}

TEST_CASE("oracle satisfies the recurrence and the valuation identity") {
    std::mt19937 rng(20240909);
    std::uniform_int_distribution<std::size_t> size_pick(1, 2);
    for (int i = 0; i < 25; ++i) {
        std::vector<Rat> A = random_roots(rng, size_pick(rng), 6, 3);
        std::vector<Rat> B = random_roots(rng, size_pick(rng), 6, 3);
        Recurrence rec = recurrence_from_roots(A, B, make_rat(3, 2));
        SequenceOracle oracle(rec);
        for (long n = 1; n <= 200; n += 13)
            CHECK(rec.p.eval(Rat(n)) * oracle.eval_u(n) ==
                  rec.q.eval(Rat(n)) * oracle.eval_u(n - 1));

        ShiftQuotientFactored sq;
        try {
            sq = factor_shift_quotient(rec);
        } catch (const std::invalid_argument&) {
            continue;
        }
        for (const Int& p : {Int(2), Int(3), Int(5), Int(7), Int(11)}) {
            // v_p(u_n) = v_p(u_0) + S_p(n), with the scale's contribution
            // folded in per step.
            for (long n : {1L, 7L, 20L}) {
                Valuation vu = padic_valuation(oracle.eval_u(n), p);
                Valuation v0 = padic_valuation(rec.u0, p);
                Int expected = v0.value + s_p_direct(sq, n, p) +
                               Int(n) * padic_valuation(sq.scale, p).value;
                CHECK(vu == Valuation::of(expected.get_si()));
            }
        }
    }
}
