#include <hyperseq/certificate.hpp>

#include <json.hpp>

namespace hyperseq {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kFormatTag = "hyperseq.answer/1";

const char* direction_label(GrowthDirection d) {
    switch (d) {
        case GrowthDirection::ToInfinity: return "to-infinity";
        case GrowthDirection::AbsLimitGt1: return "abs-limit-gt-1";
        case GrowthDirection::AbsLimitLt1: return "abs-limit-lt-1";
        case GrowthDirection::ToZero: return "to-zero";
    }
    return "?";
}

GrowthDirection direction_from(const std::string& s) {
    if (s == "to-infinity") return GrowthDirection::ToInfinity;
    if (s == "abs-limit-gt-1") return GrowthDirection::AbsLimitGt1;
    if (s == "abs-limit-lt-1") return GrowthDirection::AbsLimitLt1;
    if (s == "to-zero") return GrowthDirection::ToZero;
    throw std::invalid_argument("unknown growth direction: " + s);
}

const char* kind_label(DegenerateKind k) {
    switch (k) {
        case DegenerateKind::ZeroInitial: return "zero-initial";
        case DegenerateKind::QHasNonnegativeZero: return "q-nonnegative-zero";
        case DegenerateKind::TargetZero: return "target-zero";
    }
    return "?";
}

DegenerateKind kind_from(const std::string& s) {
    if (s == "zero-initial") return DegenerateKind::ZeroInitial;
    if (s == "q-nonnegative-zero") return DegenerateKind::QHasNonnegativeZero;
    if (s == "target-zero") return DegenerateKind::TargetZero;
    throw std::invalid_argument("unknown degenerate kind: " + s);
}

json rat_json(const Rat& x) { return to_string(x); }
json int_json(const Int& x) { return to_string(x); }

Rat rat_from(const json& j) { return rat_from_string(j.get<std::string>()); }
Int int_from(const json& j) { return Int(j.get<std::string>()); }

json poly_json(const Polynomial& f) {
    json arr = json::array();
    for (const Rat& c : f.coefficients()) arr.push_back(rat_json(c));
    return arr;
}

Polynomial poly_from(const json& j) {
    std::vector<Rat> cs;
    for (const auto& c : j) cs.push_back(rat_from(c));
    return Polynomial(std::move(cs));
}

json rep_json(const CanonicalRep& r) {
    return json{{"c", int_json(r.c)}, {"a", int_json(r.a)}, {"b", int_json(r.b)}};
}

CanonicalRep rep_from(const json& j) {
    return CanonicalRep{int_from(j.at("c")), int_from(j.at("a")), int_from(j.at("b"))};
}

}  // namespace

std::string case_label(const CaseTag& tag) {
    if (auto* d = std::get_if<Degenerate>(&tag))
        return std::string("degenerate-") + kind_label(d->kind);
    if (std::get_if<ConstantSequence>(&tag)) return "constant";
    if (auto* e = std::get_if<EasyGrowth>(&tag))
        return std::string("easy-") + direction_label(e->direction);
    auto& h = std::get<HardUnit>(tag);
    return h.sign > 0 ? "hard-unit-pos" : "hard-unit-neg";
}

std::string serialize_answer(const MembershipAnswer& answer, const std::string& instance_text) {
    const Certificate& cert = answer.certificate;
    json doc;
    doc["format"] = kFormatTag;
    doc["instance"] = instance_text;

    json ans;
    ans["member"] = answer.is_member;
    ans["indices"] = answer.indices.finite;
    ans["all_indices_from"] =
        answer.indices.all_from ? json(*answer.indices.all_from) : json(nullptr);
    ans["all_even_indices_from"] =
        answer.indices.even_from ? json(*answer.indices.even_from) : json(nullptr);
    ans["all_odd_indices_from"] =
        answer.indices.odd_from ? json(*answer.indices.odd_from) : json(nullptr);
    doc["answer"] = std::move(ans);

    json c;
    c["case"] = cert.case_label;
    c["n_prime"] = int_json(cert.n_prime);
    c["bound"] = cert.bound;
    c["scan"] = json{{"bound", cert.scan.bound}, {"hits", cert.scan.hits}};
    if (cert.degenerate) {
        c["degenerate"] =
            json{{"kind", kind_label(cert.degenerate->kind)}, {"m", cert.degenerate->m}};
    } else {
        c["degenerate"] = nullptr;
    }
    if (cert.easy) {
        c["easy"] = json{{"direction", direction_label(cert.easy->direction)},
                         {"rho", rat_json(cert.easy->rho)},
                         {"n2", cert.easy->n2},
                         {"barrier", rat_json(cert.easy->barrier)},
                         {"catch_up", cert.easy->catch_up}};
    } else {
        c["easy"] = nullptr;
    }
    if (cert.closed_form) {
        json pairs = json::array();
        for (const auto& pr : cert.closed_form->pairing.pairs)
            pairs.push_back(json{{"alpha", rat_json(pr.alpha)},
                                 {"beta", rat_json(pr.beta)},
                                 {"shift", pr.shift}});
        json roots_even = json::array(), roots_odd = json::array();
        for (const Int& r : cert.closed_form->roots_even) roots_even.push_back(int_json(r));
        for (const Int& r : cert.closed_form->roots_odd) roots_odd.push_back(int_json(r));
        c["closed_form"] = json{{"pairs", std::move(pairs)},
                                {"f_hat", poly_json(cert.closed_form->form.f_hat)},
                                {"g_hat", poly_json(cert.closed_form->form.g_hat)},
                                {"L", cert.closed_form->form.L},
                                {"sign", cert.closed_form->sign},
                                {"roots_even", std::move(roots_even)},
                                {"roots_odd", std::move(roots_odd)}};
    } else {
        c["closed_form"] = nullptr;
    }
    if (cert.chain) {
        const ChainWitness& w = *cert.chain;
        json primes = json::array();
        for (const ChainPrime& cp : w.chain.primes)
            primes.push_back(json{{"p", int_json(cp.prime)},
                                  {"rem_lo", int_json(cp.rem_lo)},
                                  {"rem_hi", int_json(cp.rem_hi)}});
        json gaps = json::array();
        for (const GapFill& g : w.chain.gaps)
            gaps.push_back(json{{"lo", int_json(g.lo)}, {"hi", int_json(g.hi)}, {"hits", g.hits}});
        c["chain"] = json{{"gamma", rep_json(w.gamma)},
                          {"gamma_prime", rep_json(w.gamma_prime)},
                          {"root_gamma", rat_json(w.root_gamma)},
                          {"root_gamma_prime", rat_json(w.root_gamma_prime)},
                          {"contiguity_c", rat_json(w.C)},
                          {"n_r", int_json(w.n_r_value)},
                          {"primes", std::move(primes)},
                          {"covered_lo", int_json(w.chain.covered_lo)},
                          {"covered_hi", int_json(w.chain.covered_hi)},
                          {"gaps", std::move(gaps)},
                          {"stop_threshold", int_json(w.chain.stop_threshold)},
                          {"tail", w.chain.tail_justification},
                          {"tail_note", w.chain.tail_note}};
    } else {
        c["chain"] = nullptr;
    }
    doc["certificate"] = std::move(c);
    return doc.dump(2) + "\n";
}

MembershipAnswer deserialize_answer(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate document: ") + e.what());
    }
    try {
        if (doc.at("format").get<std::string>() != kFormatTag)
            throw std::invalid_argument("unsupported certificate format tag");
        MembershipAnswer out;
        const json& ans = doc.at("answer");
        out.is_member = ans.at("member").get<bool>();
        out.indices.finite = ans.at("indices").get<std::vector<long>>();
        if (!ans.at("all_indices_from").is_null())
            out.indices.all_from = ans.at("all_indices_from").get<long>();
        if (!ans.at("all_even_indices_from").is_null())
            out.indices.even_from = ans.at("all_even_indices_from").get<long>();
        if (!ans.at("all_odd_indices_from").is_null())
            out.indices.odd_from = ans.at("all_odd_indices_from").get<long>();

        const json& c = doc.at("certificate");
        Certificate& cert = out.certificate;
        cert.case_label = c.at("case").get<std::string>();
        cert.n_prime = int_from(c.at("n_prime"));
        cert.bound = c.at("bound").get<long>();
        cert.scan.bound = c.at("scan").at("bound").get<long>();
        cert.scan.hits = c.at("scan").at("hits").get<std::vector<long>>();
        if (!c.at("degenerate").is_null()) {
            const json& d = c.at("degenerate");
            cert.degenerate =
                DegenerateWitness{kind_from(d.at("kind").get<std::string>()), d.at("m").get<long>()};
        }
        if (!c.at("easy").is_null()) {
            const json& e = c.at("easy");
            cert.easy = EasyWitness{direction_from(e.at("direction").get<std::string>()),
                                    rat_from(e.at("rho")), e.at("n2").get<long>(),
                                    rat_from(e.at("barrier")), e.at("catch_up").get<long>()};
        }
        if (!c.at("closed_form").is_null()) {
            const json& f = c.at("closed_form");
            ClosedFormWitness w;
            for (const auto& pr : f.at("pairs"))
                w.pairing.pairs.push_back({rat_from(pr.at("alpha")), rat_from(pr.at("beta")),
                                           pr.at("shift").get<long>()});
            w.form.f_hat = poly_from(f.at("f_hat"));
            w.form.g_hat = poly_from(f.at("g_hat"));
            w.form.L = f.at("L").get<long>();
            w.sign = f.at("sign").get<int>();
            for (const auto& r : f.at("roots_even")) w.roots_even.push_back(int_from(r));
            for (const auto& r : f.at("roots_odd")) w.roots_odd.push_back(int_from(r));
            cert.closed_form = std::move(w);
        }
        if (!c.at("chain").is_null()) {
            const json& h = c.at("chain");
            ChainWitness w;
            w.gamma = rep_from(h.at("gamma"));
            w.gamma_prime = rep_from(h.at("gamma_prime"));
            w.root_gamma = rat_from(h.at("root_gamma"));
            w.root_gamma_prime = rat_from(h.at("root_gamma_prime"));
            w.C = rat_from(h.at("contiguity_c"));
            w.n_r_value = int_from(h.at("n_r"));
            for (const auto& cp : h.at("primes"))
                w.chain.primes.push_back({int_from(cp.at("p")), int_from(cp.at("rem_lo")),
                                          int_from(cp.at("rem_hi"))});
            w.chain.covered_lo = int_from(h.at("covered_lo"));
            w.chain.covered_hi = int_from(h.at("covered_hi"));
            for (const auto& g : h.at("gaps"))
                w.chain.gaps.push_back({int_from(g.at("lo")), int_from(g.at("hi")),
                                        g.at("hits").get<std::vector<long>>()});
            w.chain.stop_threshold = int_from(h.at("stop_threshold"));
            w.chain.tail_justification = h.at("tail").get<std::string>();
            w.chain.tail_note = h.at("tail_note").get<std::string>();
            cert.chain = std::move(w);
        }
        return out;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate document: ") + e.what());
    }
}

}  // namespace hyperseq
