#pragma once

/**
 * @file polynomial.hpp
 * @brief Univariate polynomials over Q: exact arithmetic, evaluation, and
 *        rational/integer root extraction with multiplicities.
 */

#include <hyperseq/numbers.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hyperseq {

class Polynomial {
public:
    Polynomial() = default;  // zero polynomial
    explicit Polynomial(std::vector<Rat> coeffs);

    static Polynomial constant(const Rat& c);
    /// c * x^k
    static Polynomial monomial(const Rat& c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of x^k (0 beyond the degree).
    Rat coeff(int k) const;
    const Rat& leading() const;
    const std::vector<Rat>& coefficients() const { return coeffs_; }

    Rat eval(const Rat& x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial&) const = default;

    /// Exact division by (x - root); throws std::invalid_argument if the
    /// remainder is nonzero.
    Polynomial deflate(const Rat& root) const;

    /// Integer-coefficient multiple: this * (lcm of coefficient
    /// denominators), then divided by the content.  Zero polynomial maps
    /// to zero.
    Polynomial primitive_integer_form() const;

    std::string to_string(const std::string& var = "n") const;

private:
    std::vector<Rat> coeffs_;  // lowest degree first; no trailing zeros
    void normalize();
};

/// leading * prod (x - root) == f, coefficient by coefficient.
struct SplitForm {
    Rat leading;
    std::vector<Rat> roots;  // ascending, with multiplicity
};

/// Full multiset of rational roots via rational-root-theorem candidates
/// and repeated deflation; std::nullopt when a nonconstant factor without
/// rational roots remains.  Throws std::invalid_argument on the zero
/// polynomial.
std::optional<SplitForm> rational_roots(const Polynomial& f);

/// All integer roots, found by clearing denominators and testing divisors
/// of the constant term (after stripping x-power factors).  Ascending.
/// Throws std::invalid_argument on the zero polynomial.
std::vector<Int> integer_roots(const Polynomial& f);

}  // namespace hyperseq
