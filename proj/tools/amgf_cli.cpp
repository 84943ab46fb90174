// amgf: command-line front end.
//
// Exit codes: 0 = everything checked out, 1 = mathematical mismatch or
// refutation, 2 = usage or input error.

#include "amgf/am.hpp"
#include "amgf/bfile.hpp"
#include "amgf/combinat.hpp"
#include "amgf/drake.hpp"
#include "amgf/fixpoint.hpp"
#include "amgf/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace amgf;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr std::size_t kDrakeCap = 8;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComputeArgs {
    long h = 0;
    long k = 0;
    std::size_t order = 0;
    std::string format = "tsv";
    std::string route = "gf";
    std::optional<std::size_t> inject_fault;
};

int run_compute(const ComputeArgs& a) {
    if (a.k == 0) throw UsageError("--k must be nonzero");
    const char sep = a.format == "csv" ? ',' : '\t';
    std::optional<QSeries> gf;
    std::optional<std::vector<Rational>> direct;
    if (a.route != "direct") {
        gf = m_series_gf(a.h, a.k, a.order);
        if (a.inject_fault) {
            if (*a.inject_fault > a.order) throw UsageError("--inject-fault index beyond --order");
            gf = gf->with_coeff(*a.inject_fault, (*gf)[*a.inject_fault] + 1);
        }
    }
    if (a.route != "gf") direct = m_direct_table(a.h, a.k, a.order);

    int status = kOk;
    for (std::size_t n = 0; n <= a.order; ++n) {
        std::cout << n;
        if (gf) std::cout << sep << (*gf)[n];
        if (direct) std::cout << sep << (*direct)[n];
        std::cout << '\n';
        if (gf && direct && !((*gf)[n] == (*direct)[n]) && status == kOk) {
            std::cerr << "route mismatch at n=" << n << ": gf " << (*gf)[n] << ", direct " << (*direct)[n] << '\n';
            status = kMismatch;
        }
    }
    return status;
}

int run_certify(long h, long k, std::size_t order, const std::string& fault) {
    if (k == 0) throw UsageError("--k must be nonzero");
    CertifyOptions opts;
    if (!fault.empty()) {
        const std::string prefix = "step=";
        if (fault.rfind(prefix, 0) != 0) throw UsageError("--inject-fault expects step=<name>");
        opts.inject_fault = fault.substr(prefix.size());
    }
    const auto cert = am_certify(h, k, order, opts);
    std::cout << cert.str();
    return cert.valid() ? kOk : kMismatch;
}

int run_trees(long k, std::size_t order, bool oracle) {
    if (k < 1) throw UsageError("--k must be a positive integer");
    if (oracle && k != 2) throw UsageError("--oracle is only available for --k 2");
    if (oracle && order + 1 > kDefaultEnumerationCap) {
        throw UsageError("--oracle supports --order <= " + std::to_string(kDefaultEnumerationCap - 1));
    }
    const QSeries a = tree_series(k, order);
    int status = kOk;
    for (std::size_t n = 1; n <= order; ++n) {
        std::cout << n << '\t' << a[n];
        if (oracle) {
            const Integer count = count_alternating_trees(static_cast<unsigned>(n + 1));
            std::cout << '\t' << count;
            if (!(a[n] == Rational(count))) status = kMismatch;
        }
        std::cout << '\n';
    }
    if (status != kOk) std::cerr << "tree series disagrees with enumeration\n";
    return status;
}

int run_drake(std::size_t order, bool check_closed_form, const std::string& specialize_to) {
    if (order > kDrakeCap) {
        throw UsageError("--order is capped at " + std::to_string(kDrakeCap) +
                         " (four-variable expansions grow too quickly beyond that)");
    }
    if (!specialize_to.empty() && specialize_to != "k2") throw UsageError("--specialize accepts only k2");
    const PolySeries g = drake_inverse_series(order);
    if (specialize_to == "k2") {
        const QSeries s = specialize(g, k2_specialization());
        for (std::size_t n = 1; n <= order; ++n) std::cout << n << '\t' << s[n] << '\n';
    } else {
        for (std::size_t n = 1; n <= order; ++n) std::cout << "n=" << n << ": " << g[n] << '\n';
    }
    if (!check_closed_form) return kOk;
    for (std::size_t n = 1; n <= order; ++n) {
        const auto tuples = drake_exponents(static_cast<unsigned>(n - 1));
        bool ok = g[n].size() == tuples.size();
        for (const auto& e : tuples) ok = ok && g[n].coefficient(e.exponent()) == drake_closed_form(e);
        if (!ok) {
            std::cerr << "closed form mismatch at n=" << n << '\n';
            return kMismatch;
        }
    }
    std::cerr << "closed form: OK\n";
    return kOk;
}

int run_verify_all(bool quick, const std::string& fault, bool serial, bool timings) {
    VerifyOptions opts;
    opts.quick = quick;
    opts.parallel = !serial;
    if (!fault.empty()) opts.inject_fault = fault;
    bool all = true;
    for (auto r : run_verification(opts)) {
        all = all && r.passed;
        if (!timings) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.module << '/' << r.id;
            if (!r.detail.empty()) std::cout << ": " << r.detail;
            std::cout << '\n';
        } else {
            std::cout << render(r) << '\n';
        }
    }
    std::cout << (all ? "ALL PASS" : "FAILURES") << '\n';
    return all ? kOk : kMismatch;
}

struct BFileArgs {
    std::string file;
    std::string sequence;
    long h = 1;
    long k = 2;
    std::size_t order = 0;
    long offset_shift = 0;
};

std::vector<Rational> sequence_coeffs(const BFileArgs& a) {
    if (a.sequence == "am") {
        if (a.k == 0) throw UsageError("--k must be nonzero");
        return m_series_gf(a.h, a.k, a.order).coeffs();
    }
    if (a.sequence == "genocchi") return m_series_gf(1, 2, a.order).coeffs();
    if (a.sequence == "trees") {
        // 1 + A: coefficient n counts alternating trees on n+1 vertices.
        return add(QSeries::one(a.order), tree_series(2, a.order)).coeffs();
    }
    if (a.sequence == "inv-a2") return comp_inverse(tree_series(2, a.order)).coeffs();
    throw UsageError("unknown --sequence " + a.sequence);
}

int run_bfile_check(const BFileArgs& a) {
    std::vector<BFileEntry> entries;
    try {
        entries = parse_bfile(std::filesystem::path(a.file));
    } catch (const std::runtime_error& ex) {
        throw UsageError(ex.what());
    }
    const auto coeffs = sequence_coeffs(a);
    const BFileMatch m = compare_bfile(coeffs, entries, a.offset_shift);
    if (!m.matched) {
        std::cout << "mismatch at index " << *m.first_mismatch_index << ": file " << *m.expected << ", computed "
                  << *m.actual << '\n';
        return kMismatch;
    }
    std::cout << "match: " << m.compared << " of " << entries.size() << " entries compared\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generating-function computations for the Almkvist-Meurman numbers"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Print M_n(h,k) for n = 0..order");
    c->add_option("--h", compute.h, "h")->required();
    c->add_option("--k", compute.k, "k (nonzero)")->required();
    c->add_option("--order", compute.order, "Largest n")->required();
    c->add_option("--format", compute.format, "tsv or csv")->check(CLI::IsMember({"tsv", "csv"}));
    c->add_option("--route", compute.route, "gf, direct or both")->check(CLI::IsMember({"gf", "direct", "both"}));
    c->add_option("--inject-fault", compute.inject_fault, "Test hook: add 1 to gf coefficient n");

    long cert_h = 0, cert_k = 0;
    std::size_t cert_order = 0;
    std::string cert_fault;
    auto* cert = app.add_subcommand("certify", "Run the integrality certificate for (h,k)");
    cert->add_option("--h", cert_h)->required();
    cert->add_option("--k", cert_k)->required();
    cert->add_option("--order", cert_order)->required();
    cert->add_option("--inject-fault", cert_fault, "Test hook: step=<name> corrupts that step");

    long trees_k = 2;
    std::size_t trees_order = 0;
    bool trees_oracle = false;
    auto* trees = app.add_subcommand("trees", "Print the tree series a_1..a_order");
    trees->add_option("--k", trees_k)->required();
    trees->add_option("--order", trees_order)->required();
    trees->add_flag("--oracle", trees_oracle, "Also count alternating trees by enumeration (k=2)");

    std::size_t drake_order = 0;
    bool drake_check = false;
    std::string drake_special;
    auto* drake = app.add_subcommand("drake", "Print coefficient polynomials of the four-parameter inverse series");
    drake->add_option("--order", drake_order)->required();
    drake->add_flag("--check-closed-form", drake_check);
    drake->add_option("--specialize", drake_special, "k2: a1=b2=1, a2=b1=0");

    bool verify_quick = false, verify_serial = false, verify_no_timings = false;
    std::string verify_fault;
    auto* verify = app.add_subcommand("verify-all", "Run every self-check");
    verify->add_flag("--quick", verify_quick, "Halved orders");
    verify->add_flag("--serial", verify_serial, "Run checks one at a time");
    verify->add_flag("--no-timings", verify_no_timings, "Omit timings (byte-stable output)");
    verify->add_option("--inject-fault", verify_fault, "Test hook: sabotage the named check");

    BFileArgs bfile;
    auto* bf = app.add_subcommand("bfile-check", "Compare a local b-file with a computed sequence");
    bf->add_option("--file", bfile.file)->required();
    bf->add_option("--sequence", bfile.sequence, "am, genocchi, trees or inv-a2")->required();
    bf->add_option("--h", bfile.h);
    bf->add_option("--k", bfile.k);
    bf->add_option("--order", bfile.order)->required();
    bf->add_option("--offset-shift", bfile.offset_shift, "Entry index i is compared with coefficient i + shift");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*c) return run_compute(compute);
        if (*cert) return run_certify(cert_h, cert_k, cert_order, cert_fault);
        if (*trees) return run_trees(trees_k, trees_order, trees_oracle);
        if (*drake) return run_drake(drake_order, drake_check, drake_special);
        if (*verify) return run_verify_all(verify_quick, verify_fault, verify_serial, !verify_no_timings);
        if (*bf) return run_bfile_check(bfile);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMismatch;
    }
    return kUsage;
}
