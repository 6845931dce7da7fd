// hyperseq: decide whether a rational target occurs in a hypergeometric
// sequence p(n) u_n = q(n) u_{n-1}, with a machine-checkable certificate.
//
// Exit codes: 0 decision made (member or not) / certificate verified;
// 1 certificate verification failed; 2 usage or input error;
// 3 unsupported parameters (coefficients do not split over Q);
// 4 capability limit reached.

#include <hyperseq/decide.hpp>
#include <hyperseq/instance.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace hyperseq;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string describe_indices(const IndexSet& ix) {
    std::ostringstream out;
    bool first = true;
    auto sep = [&]() { out << (first ? "" : ", "); first = false; };
    for (long n : ix.finite) {
        sep();
        out << n;
    }
    if (ix.all_from) {
        sep();
        out << "all n >= " << *ix.all_from;
    }
    if (ix.even_from) {
        sep();
        out << "all even n >= " << *ix.even_from;
    }
    if (ix.odd_from) {
        sep();
        out << "all odd n >= " << *ix.odd_from;
    }
    return out.str();
}

void print_text_answer(const MembershipAnswer& ans, const Rat& t) {
    const Certificate& cert = ans.certificate;
    std::cout << "target " << to_string(t) << ": "
              << (ans.is_member ? "member" : "not a member") << "\n";
    if (ans.is_member) std::cout << "indices: " << describe_indices(ans.indices) << "\n";
    std::cout << "case: " << cert.case_label << "\n";
    if (cert.bound >= 0) std::cout << "bound N: " << cert.bound << "\n";
    if (cert.chain) {
        std::cout << "chain primes:";
        for (const ChainPrime& cp : cert.chain->chain.primes)
            std::cout << " " << to_string(cp.prime);
        std::cout << "\ncovered: {" << to_string(cert.chain->chain.covered_lo) << ", ..., "
                  << to_string(cert.chain->chain.covered_hi) << "} plus the certified tail ("
                  << cert.chain->chain.tail_justification << ")\n";
        if (!cert.chain->chain.gaps.empty())
            std::cout << "gaps repaired by exact checks: " << cert.chain->chain.gaps.size()
                      << "\n";
    }
    if (cert.closed_form)
        std::cout << "closed form: u0 * f(n)/g(n) with f = "
                  << cert.closed_form->form.f_hat.to_string() << ", g = "
                  << cert.closed_form->form.g_hat.to_string()
                  << " (valid for n > " << cert.closed_form->form.L << ")\n";
}

int run(int argc, char** argv) {
    CLI::App app{"membership decisions for hypergeometric sequences with rational parameters"};
    app.require_subcommand(1);

    std::string file, cert_file, output = "text", density_mode = "table";
    long up_to = 10, terms = 100000, horizon = 0;
    int chain_successes = 64;

    auto* cmd_decide = app.add_subcommand("decide", "decide membership and emit a certificate");
    cmd_decide->add_option("FILE", file, "instance file")->required();
    cmd_decide->add_option("--output", output, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd_decide->add_option("--density-mode", density_mode,
                           "table|verified (tail justification of prime chains)")
        ->check(CLI::IsMember({"table", "verified"}));
    cmd_decide->add_option("--chain-successes", chain_successes,
                           "verified-horizon mode: required consecutive clean extensions");
    cmd_decide->add_option("--horizon", horizon,
                           "cap on chain primes (0: default 2^62)");

    auto* cmd_eval = app.add_subcommand("eval", "print exact values u_0 ... u_N");
    cmd_eval->add_option("FILE", file, "instance file")->required();
    cmd_eval->add_option("--up-to", up_to, "largest index to print")->required();

    auto* cmd_limit = app.add_subcommand("limit", "infinite-product limit diagnostic");
    cmd_limit->add_option("FILE", file, "instance file")->required();
    cmd_limit->add_option("--terms", terms, "partial-product length")->required();

    auto* cmd_verify = app.add_subcommand("verify", "re-check a structured certificate");
    cmd_verify->add_option("FILE", file, "instance file")->required();
    cmd_verify->add_option("CERT", cert_file, "certificate document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string text = read_file(file);
        InstanceFile inst = parse_instance(text);

        if (cmd_decide->parsed()) {
            DensityBoundConfig cfg;
            cfg.strategy = density_mode == "table" ? DensityBoundConfig::Strategy::Table
                                                   : DensityBoundConfig::Strategy::VerifiedHorizon;
            cfg.horizon_successes = chain_successes;
            if (horizon > 0) cfg.max_prime = horizon;
            MembershipAnswer ans = decide(inst.recurrence(), inst.t, cfg);
            if (output == "structured")
                std::cout << serialize_answer(ans, serialize_instance(inst));
            else
                print_text_answer(ans, inst.t);
            return 0;
        }
        if (cmd_eval->parsed()) {
            SequenceOracle oracle(inst.recurrence());
            for (long n = 0; n <= up_to; ++n)
                std::cout << "u" << n << " = " << to_string(oracle.eval_u(n)) << "\n";
            return 0;
        }
        if (cmd_limit->parsed()) {
            ShiftQuotientFactored sq = factor_shift_quotient(inst.recurrence());
            LimitDiagnostic diag = limit_diagnostic(sq, inst.u0, terms);
            std::cout << (diag.converges ? "converging" : "diverging")
                      << " (root-sum criterion)\n";
            std::cout.precision(17);
            std::cout << "partial product after " << diag.terms << " terms: ["
                      << diag.lower << ", " << diag.upper << "]\n";
            return 0;
        }
        if (cmd_verify->parsed()) {
            MembershipAnswer ans = deserialize_answer(read_file(cert_file));
            bool ok = verify_certificate(inst.recurrence(), inst.t, ans);
            std::cout << (ok ? "certificate verified" : "certificate REJECTED") << "\n";
            return ok ? 0 : 1;
        }
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error at line " << e.line << ", column " << e.column << ": "
                  << e.what() << "\n";
        return 2;
    } catch (const UnsupportedParametersError& e) {
        std::cerr << "unsupported parameters: " << e.what() << "\n";
        return 3;
    } catch (const CapabilityError& e) {
        std::cerr << "capability limit: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
