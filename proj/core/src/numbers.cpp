#include <hyperseq/numbers.hpp>
#include <hyperseq/primes.hpp>

namespace hyperseq {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::string to_string(const Rat& x) { return x.get_str(); }

std::string to_string(const Int& x) { return x.get_str(); }

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + text);
    r.canonicalize();
    return r;
}

Valuation padic_valuation_unchecked(const Rat& x, const Int& p) {
    if (x == 0) return Valuation::infinity();
    Int tmp;
    long vn = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), num(x).get_mpz_t(), p.get_mpz_t()));
    long vd = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), den(x).get_mpz_t(), p.get_mpz_t()));
    return Valuation::of(vn - vd);
}

Valuation padic_valuation(const Rat& x, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("padic_valuation: p is not prime");
    return padic_valuation_unchecked(x, p);
}

Residue residue(const Rat& x, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("residue: p is not prime");
    Valuation v = padic_valuation_unchecked(x, p);
    if (!v.infinite && v.value < 0)
        throw NotInLocalRingError("residue: v_p(x) < 0, x not in Z_(p)");
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), den(x).get_mpz_t(), p.get_mpz_t()) == 0)
        throw NotInLocalRingError("residue: denominator not invertible mod p");
    Int r = (num(x) % p) * inv % p;
    if (r < 0) r += p;
    return Residue{r, p};
}

}  // namespace hyperseq
