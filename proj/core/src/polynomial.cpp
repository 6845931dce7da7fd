#include <hyperseq/polynomial.hpp>
#include <hyperseq/primes.hpp>

#include <algorithm>
#include <sstream>

namespace hyperseq {

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rat& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rat& c, int k) {
    std::vector<Rat> cs(static_cast<std::size_t>(k) + 1, Rat(0));
    cs.back() = c;
    return Polynomial(std::move(cs));
}

Rat Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rat& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("leading(): zero polynomial");
    return coeffs_.back();
}

Rat Polynomial::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rat> cs(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) cs[i] += o.coeffs_[i];
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<Rat> cs(coeffs_);
    for (auto& c : cs) c = -c;
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return Polynomial();
    std::vector<Rat> cs(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) cs[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::operator*(const Rat& c) const {
    std::vector<Rat> cs(coeffs_);
    for (auto& x : cs) x *= c;
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::deflate(const Rat& root) const {
    if (coeffs_.empty()) throw std::invalid_argument("deflate: zero polynomial");
    // Synthetic division by (x - root), highest coefficient first.
    std::vector<Rat> quot(coeffs_.size() - 1, Rat(0));
    Rat carry(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        Rat cur = coeffs_[i] + carry;
        if (i == 0) {
            if (cur != 0) throw std::invalid_argument("deflate: nonzero remainder");
            break;
        }
        quot[i - 1] = cur;
        carry = cur * root;
    }
    return Polynomial(std::move(quot));
}

Polynomial Polynomial::primitive_integer_form() const {
    if (coeffs_.empty()) return Polynomial();
    Int dlcm = 1;
    for (const auto& c : coeffs_) dlcm = lcm(dlcm, den(c));
    Int content = 0;
    std::vector<Int> ints;
    ints.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        Int v = num(c) * (dlcm / den(c));
        ints.push_back(v);
        content = gcd(content, v);
    }
    std::vector<Rat> cs;
    cs.reserve(ints.size());
    for (const auto& v : ints) cs.emplace_back(v / content);
    return Polynomial(std::move(cs));
}

std::string Polynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rat c = coeff(k);
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Rat ac = abs(c);
        if (k == 0) {
            out << hyperseq::to_string(ac);
        } else {
            if (ac != 1) out << hyperseq::to_string(ac) << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

namespace {

// One rational root of an integer-coefficient polynomial with nonzero
// constant term, or nullopt.
std::optional<Rat> find_rational_root(const Polynomial& f) {
    Int a0 = num(f.coeff(0));
    Int ad = num(f.leading());
    std::vector<Int> ps = divisors(abs(a0));
    std::vector<Int> qs = divisors(abs(ad));
    for (const Int& q : qs) {
        for (const Int& p : ps) {
            if (gcd(p, q) != 1) continue;
            Rat cand = make_rat(p, q);
            if (f.eval(cand) == 0) return cand;
            cand = -cand;
            if (f.eval(cand) == 0) return cand;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<SplitForm> rational_roots(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    SplitForm split;
    split.leading = f.leading();
    Polynomial work = f;
    // Strip x^k factors first: k roots at zero.
    while (work.degree() >= 1 && work.coeff(0) == 0) {
        split.roots.emplace_back(0);
        work = work.deflate(Rat(0));
    }
    while (work.degree() >= 1) {
        auto root = find_rational_root(work.primitive_integer_form());
        if (!root) return std::nullopt;
        // Multiplicity by repeated deflation.
        do {
            split.roots.push_back(*root);
            work = work.deflate(*root);
        } while (work.degree() >= 1 && work.eval(*root) == 0);
    }
    std::sort(split.roots.begin(), split.roots.end());
    return split;
}

std::vector<Int> integer_roots(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("integer_roots: zero polynomial");
    std::vector<Int> out;
    Polynomial work = f;
    bool zero_root = false;
    while (work.degree() >= 1 && work.coeff(0) == 0) {
        zero_root = true;
        work = work.deflate(Rat(0));
    }
    if (zero_root) out.emplace_back(0);
    if (work.degree() >= 1) {
        Polynomial g = work.primitive_integer_form();
        Int a0 = abs(num(g.coeff(0)));
        for (const Int& d : divisors(a0)) {
            if (g.eval(Rat(d)) == 0) out.push_back(d);
            if (g.eval(Rat(-d)) == 0) out.push_back(-d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hyperseq
