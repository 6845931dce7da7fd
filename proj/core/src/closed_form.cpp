#include <hyperseq/closed_form.hpp>

#include <algorithm>
#include <map>

namespace hyperseq {

std::optional<ShiftPairing> integer_shift_pairing(const std::vector<Rat>& A,
                                                  const std::vector<Rat>& B) {
    if (A.size() != B.size())
        throw std::invalid_argument("integer_shift_pairing: |A| != |B|");
    Int b = 1;
    for (const Rat& r : A) b = lcm(b, den(r));
    for (const Rat& r : B) b = lcm(b, den(r));

    // alpha - beta is an integer iff both share the canonical a value.
    std::map<Int, std::pair<std::vector<Rat>, std::vector<Rat>>> classes;
    for (const Rat& r : A) classes[canonical_rep(r, b).a].first.push_back(r);
    for (const Rat& r : B) classes[canonical_rep(r, b).a].second.push_back(r);

    ShiftPairing pairing;
    for (auto& [a, cls] : classes) {
        auto& [as, bs] = cls;
        if (as.size() != bs.size()) return std::nullopt;
        std::sort(as.begin(), as.end());
        std::sort(bs.begin(), bs.end());
        for (std::size_t i = 0; i < as.size(); ++i) {
            Rat diff = abs(as[i] - bs[i]);
            if (!is_integer(diff) || !num(diff).fits_slong_p())
                throw std::logic_error("integer_shift_pairing: non-integer shift in class");
            pairing.pairs.push_back({as[i], bs[i], num(diff).get_si()});
        }
    }
    return pairing;
}

TelescopedForm telescope(const ShiftPairing& pairing, int sign, const Rat& scale) {
    (void)sign;  // carried by the caller as sign^n
    if (scale != 1)
        throw std::invalid_argument("telescope: requires scale == 1 (unit limit)");
    TelescopedForm form;
    form.f_hat = Polynomial::constant(Rat(1));
    form.g_hat = Polynomial::constant(Rat(1));
    for (const auto& pr : pairing.pairs) {
        if (pr.shift == 0) continue;  // identical roots cancel outright
        form.L = std::max(form.L, pr.shift);
        if (pr.beta > pr.alpha) {
            // prod_{k<=n} (k-alpha)/(k-beta)
            //   = (n+1-beta) ... (n+shift-beta) / ((1-beta) ... (shift-beta))
            for (long j = 1; j <= pr.shift; ++j) {
                form.f_hat = form.f_hat * Polynomial({Rat(j) - pr.beta, Rat(1)});
                form.g_hat = form.g_hat * (Rat(j) - pr.beta);
            }
        } else {
            // prod_{k<=n} (k-alpha)/(k-beta)
            //   = ((1-alpha) ... (shift-alpha)) / ((n+1-alpha) ... (n+shift-alpha))
            for (long j = 1; j <= pr.shift; ++j) {
                form.f_hat = form.f_hat * (Rat(j) - pr.alpha);
                form.g_hat = form.g_hat * Polynomial({Rat(j) - pr.alpha, Rat(1)});
            }
        }
    }
    return form;
}

}  // namespace hyperseq
