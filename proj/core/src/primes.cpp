#include <hyperseq/primes.hpp>

#include <algorithm>

namespace hyperseq {

namespace {

// Witness set proven deterministic for all n < 3.3 * 10^24, in particular
// for the full 64-bit range.
constexpr unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin(const Int& n) {
    Int n1 = n - 1;
    Int d = n1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    for (unsigned long a : kWitnesses) {
        Int base(a);
        if (base >= n) continue;
        Int x;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n1) continue;
        bool composite = true;
        for (unsigned long i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

const Int kDeterministicLimit = Int(1) << 63;

bool is_prime_wide(const Int& n) {
    // Only reachable from factorize() on cofactors of polynomial
    // coefficients; see header note.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int pollard_rho(const Int& n) {
    // Brent's cycle-finding variant.
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xb5ad4eceul);
    while (true) {
        Int y = rng.get_z_range(n - 2) + 1;
        Int c = rng.get_z_range(n - 2) + 1;
        Int x = y, d = 1, q = 1, ys = y;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Int diff = x - y;
                    q = q * (diff < 0 ? -diff : diff) % n;
                }
                d = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            // Backtrack one step at a time.
            do {
                ys = (ys * ys + c) % n;
                Int diff = x - ys;
                d = gcd(diff < 0 ? -diff : diff, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_into(Int n, std::vector<std::pair<Int, int>>& out) {
    if (n == 1) return;
    bool prime = n < kDeterministicLimit ? is_prime(n) : is_prime_wide(n);
    if (prime) {
        for (auto& [p, e] : out) {
            if (p == n) {
                ++e;
                return;
            }
        }
        out.emplace_back(n, 1);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

bool is_prime(const Int& n) {
    if (n >= kDeterministicLimit)
        throw CapabilityError("is_prime: deterministic primality limited to n < 2^63, got " +
                              to_string(n));
    if (n < 2) return false;
    for (unsigned long p : kWitnesses) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    return miller_rabin(n);
}

Int next_prime_in_progression(const Int& lower, const Int& b) {
    if (lower < 0) throw std::invalid_argument("next_prime_in_progression: lower < 0");
    if (b < 1) throw std::invalid_argument("next_prime_in_progression: b < 1");
    if (b == 1) {
        // Every prime is in the degenerate progression.
        Int q = lower + 1;
        if (q < 2) q = 2;
        while (!is_prime(q)) ++q;
        return q;
    }
    Int q = lower + 1;
    Int r = q % b;
    if (r != 1) q += (r <= 1 ? Int(1 - r) : Int(b + 1 - r));
    while (!is_prime(q)) q += b;
    return q;
}

std::vector<std::pair<Int, int>> factorize(const Int& n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<std::pair<Int, int>> out;
    Int m = n;
    for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
        if (m == 1) break;
        if (Int(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            if (!out.empty() && out.back().first == p)
                ++out.back().second;
            else
                out.emplace_back(Int(p), 1);
        }
    }
    if (m > 1) factor_into(m, out);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<Int> divisors(const Int& n) {
    constexpr std::size_t kMaxDivisors = 1u << 20;
    auto factors = factorize(n);
    std::vector<Int> out{1};
    for (const auto& [p, e] : factors) {
        std::size_t base = out.size();
        if (base * (e + 1) > kMaxDivisors)
            throw CapabilityError("divisors: enumeration cap exceeded for " + to_string(n));
        Int pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hyperseq
