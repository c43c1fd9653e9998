// Command-line front end: verification, gains, secrecy-function scans,
// basis fitting, the built-in catalog, and theta identity checks.
//
// Exit codes for `verify`: 0 ConfirmedStrict, 3 ConfirmedWithTies,
// 2 Refuted, 1 any error. Everything else: 0 success, 1 error.

#include "latsec/catalog.hpp"
#include "latsec/descriptor.hpp"
#include "latsec/qseries.hpp"
#include "latsec/secrecy.hpp"
#include "latsec/theta.hpp"
#include "latsec/verifier.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace latsec;

Real default_precision() {
    if (const char* env = std::getenv("SECRECY_PRECISION")) {
        try {
            Real p(env);
            if (p > 0) return p;
        } catch (...) {
            // fall through to the default
        }
        std::cerr << "warning: ignoring invalid SECRECY_PRECISION\n";
    }
    return Real("1e-12");
}

int run_verify(const std::string& path) {
    const LatticeDescriptor desc = load_descriptor(path);
    const PipelineResult pipe = profile_from_descriptor(desc);
    const Verdict verdict = verify_min_at_quarter(pipe.profile.denominator);
    std::cout << "name: " << desc.name << "\n";
    std::cout << "dimension: " << desc.dim << "\n";
    if (pipe.parity)
        std::cout << "parity: " << (*pipe.parity == Parity::Even ? "even" : "odd") << "\n";
    std::cout << verdict.certificate;
    switch (verdict.status) {
    case VerdictStatus::ConfirmedStrict: return 0;
    case VerdictStatus::ConfirmedWithTies: return 3;
    case VerdictStatus::Refuted: return 2;
    }
    return 1;
}

int run_gain(const std::string& path, int digits) {
    const LatticeDescriptor desc = load_descriptor(path);
    const PipelineResult pipe = profile_from_descriptor(desc);
    std::cout << "gain: " << rational_to_string(pipe.profile.gain) << "\n";
    std::cout << "decimal: " << decimal_string(pipe.profile.gain, digits) << "\n";
    return 0;
}

int run_scan(const std::string& path, double from, double to, int steps) {
    if (!(from > 0) || !(to > from)) throw std::invalid_argument("need 0 < from < to");
    if (steps < 2) throw std::invalid_argument("need at least 2 steps");
    const LatticeDescriptor desc = load_descriptor(path);
    const PipelineResult pipe = profile_from_descriptor(desc);
    const Real precision = default_precision();
    const Real y0(from), y1(to);
    const Real ratio_log = log(y1 / y0);
    std::cout << "y,z,xi\n";
    for (int k = 0; k < steps; ++k) {
        // geometric grid; symmetric about 1 whenever from*to == 1
        const Real y = y0 * exp(ratio_log * Real(k) / Real(steps - 1));
        const Real z = z_of_y(y, precision);
        const Real xi = xi_poly(pipe.profile.denominator, y, precision);
        std::cout << decimal_string(y) << "," << decimal_string(z) << "," << decimal_string(xi)
                  << "\n";
    }
    return 0;
}

int run_fit(const std::string& path, const std::string& basis) {
    const LatticeDescriptor desc = load_descriptor(path);
    const PipelineResult pipe = profile_from_descriptor(desc);
    if (pipe.counts.counts.empty())
        throw std::invalid_argument(
            "descriptor does not define an integral theta series; nothing to fit");
    if (basis == "ar") {
        const BasisCoeffsGeneral c = fit_a_basis(pipe.counts.counts, desc.dim);
        for (std::size_t r = 0; r < c.a.size(); ++r)
            std::cout << "a[" << r << "]: " << rational_to_string(c.a[r]) << "\n";
    } else if (basis == "bj") {
        const BasisCoeffsEven c = fit_b_basis(pipe.counts.counts, desc.dim);
        std::cout << "m: " << c.m << "\n";
        for (std::size_t j = 0; j < c.b.size(); ++j)
            std::cout << "b[" << (j + 1) << "]: " << rational_to_string(c.b[j]) << "\n";
    } else {
        throw std::invalid_argument("--basis must be ar or bj");
    }
    return 0;
}

int run_catalog_list() {
    std::cout << "dim\tname\tgain\tdenominator\n";
    for (const auto& e : catalog_entries()) {
        std::cout << e.n << "\t" << e.name << "\t" << rational_to_string(e.expected_gain) << "\t";
        if (!e.table.empty())
            std::cout << factored_string(e.table);
        else
            std::cout << e.expected_D.to_string();
        std::cout << "\n";
    }
    return 0;
}

int run_catalog_show(const std::string& which) {
    CatalogEntry e;
    try {
        const int n = std::stoi(which);
        e = catalog_entry(n);
    } catch (const std::invalid_argument&) {
        e = catalog_entry(which);
    }
    std::cout << "name: " << e.name << "\n";
    std::cout << "dimension: " << e.n << "\n";
    if (!e.table.empty()) std::cout << "factored: " << factored_string(e.table) << "\n";
    std::cout << "monomial: " << e.expected_D.to_string() << "\n";
    std::cout << "gain: " << rational_to_string(e.expected_gain) << "\n";
    std::cout << "decimal: " << decimal_string(e.expected_gain) << "\n";
    std::cout << "lattice: " << (e.genuine_lattice ? "yes" : "no (constructed fixture)") << "\n";
    std::cout << "descriptor: " << descriptor_to_json(to_descriptor(e)).dump() << "\n";
    return 0;
}

int run_identities(double y) {
    const Real precision = default_precision();
    const TransformResiduals r = transform_residuals(Real(y), precision);
    std::cout << "theta2-transform: " << decimal_string(r.theta2_side, 3) << "\n";
    std::cout << "theta3-transform: " << decimal_string(r.theta3_side, 3) << "\n";
    std::cout << "theta4-transform: " << decimal_string(r.theta4_side, 3) << "\n";
    std::cout << "jacobi: " << decimal_string(r.jacobi, 3) << "\n";
    std::cout << "max: " << decimal_string(r.max(), 3) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secrecy functions of unimodular lattices, exactly"};
    app.require_subcommand(1);

    std::string path;
    int digits = 12;
    double from = 0.25, to = 4.0, y_arg = 1.0;
    int steps = 97;
    std::string basis = "ar";
    std::string show_arg;

    auto* verify = app.add_subcommand("verify", "decide whether Xi is maximal at y = 1");
    verify->add_option("descriptor", path, "lattice descriptor JSON file")->required();

    auto* gain = app.add_subcommand("gain", "secrecy gain 1/D(1/4), exact and decimal");
    gain->add_option("descriptor", path, "lattice descriptor JSON file")->required();
    gain->add_option("--digits", digits, "significant digits for the decimal form");

    auto* scan = app.add_subcommand("scan", "CSV of y, z(y), Xi(y) over a geometric grid");
    scan->add_option("descriptor", path, "lattice descriptor JSON file")->required();
    scan->add_option("--from", from, "start of the y range")->required();
    scan->add_option("--to", to, "end of the y range")->required();
    scan->add_option("--steps", steps, "number of rows")->required();

    auto* fit = app.add_subcommand("fit", "fit theta coefficients to a basis");
    fit->add_option("descriptor", path, "lattice descriptor JSON file")->required();
    fit->add_option("--basis", basis, "ar (general) or bj (even)")->required();

    auto* cat = app.add_subcommand("catalog", "built-in lattice fixtures");
    auto* cat_list = cat->add_subcommand("list", "one row per entry");
    auto* cat_show = cat->add_subcommand("show", "full detail for one entry");
    cat_show->add_option("entry", show_arg, "dimension or name")->required();
    cat->require_subcommand(1);

    auto* ident = app.add_subcommand("identities", "theta transformation identity residuals");
    ident->add_option("--y", y_arg, "evaluation point")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return run_verify(path);
        if (*gain) return run_gain(path, digits);
        if (*scan) return run_scan(path, from, to, steps);
        if (*fit) return run_fit(path, basis);
        if (*cat_list) return run_catalog_list();
        if (*cat_show) return run_catalog_show(show_arg);
        if (*ident) return run_identities(y_arg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
