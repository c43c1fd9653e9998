#ifndef LATSEC_DESCRIPTOR_HPP
#define LATSEC_DESCRIPTOR_HPP

// JSON lattice descriptors, the single input format of the CLI:
//
//   {"name": "E8", "dim": 8, "kind": "gram",     "data": [[2,0,...], ...]}
//   {"name": "x",  "dim": 8, "kind": "ar",       "data": [1, -16]}
//   {"name": "L",  "dim": 24, "kind": "bj",      "data": [-720]}
//   {"name": "e48","dim": 48, "kind": "extremal"}
//
// Rational entries are JSON integers or strings "p/q"; floating-point
// numbers are rejected to keep inputs exact. profile_from_descriptor runs
// the full pipeline down to the secrecy denominator plus theta
// coefficients usable by the direct evaluation route.

#include "latsec/catalog.hpp"
#include "latsec/lattice.hpp"
#include "latsec/qseries.hpp"
#include "latsec/secrecy.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace latsec {

enum class DescriptorKind { Gram, Ar, Bj, Extremal };

inline std::string to_string(DescriptorKind k) {
    switch (k) {
    case DescriptorKind::Gram: return "gram";
    case DescriptorKind::Ar: return "ar";
    case DescriptorKind::Bj: return "bj";
    case DescriptorKind::Extremal: return "extremal";
    }
    return "?";
}

struct LatticeDescriptor {
    std::string name;
    int dim = 0;
    DescriptorKind kind = DescriptorKind::Extremal;
    std::vector<std::vector<Int>> gram_data; // kind gram
    std::vector<Rational> coeff_data;        // kinds ar, bj
};

namespace detail {

inline Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(Int(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument(
        "rational values must be JSON integers or \"p/q\" strings, got: " + j.dump());
}

inline nlohmann::json rational_to_json(const Rational& r) {
    if (denominator(r) == 1 && numerator(r) >= -1000000000 && numerator(r) <= 1000000000)
        return numerator(r).convert_to<long long>();
    return rational_to_string(r);
}

} // namespace detail

inline LatticeDescriptor descriptor_from_json(const nlohmann::json& j) {
    LatticeDescriptor d;
    if (!j.is_object()) throw std::invalid_argument("descriptor must be a JSON object");
    if (!j.contains("name") || !j["name"].is_string())
        throw std::invalid_argument("descriptor needs a string \"name\"");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw std::invalid_argument("descriptor needs an integer \"dim\"");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("descriptor needs a string \"kind\"");
    d.name = j["name"].get<std::string>();
    d.dim = j["dim"].get<int>();
    if (d.dim < 1) throw std::invalid_argument("\"dim\" must be positive");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "gram") {
        d.kind = DescriptorKind::Gram;
        if (!j.contains("data") || !j["data"].is_array())
            throw std::invalid_argument("gram descriptor needs a matrix in \"data\"");
        for (const auto& row : j["data"]) {
            if (!row.is_array()) throw std::invalid_argument("gram rows must be arrays");
            std::vector<Int> r;
            for (const auto& x : row) {
                if (!x.is_number_integer())
                    throw std::invalid_argument("gram entries must be integers");
                r.push_back(Int(x.get<long long>()));
            }
            d.gram_data.push_back(std::move(r));
        }
        if (d.gram_data.size() != static_cast<std::size_t>(d.dim))
            throw std::invalid_argument("gram matrix size does not match \"dim\"");
    } else if (kind == "ar" || kind == "bj") {
        d.kind = kind == "ar" ? DescriptorKind::Ar : DescriptorKind::Bj;
        if (!j.contains("data") || !j["data"].is_array())
            throw std::invalid_argument(kind + " descriptor needs a coefficient list in \"data\"");
        for (const auto& x : j["data"]) d.coeff_data.push_back(detail::rational_from_json(x));
    } else if (kind == "extremal") {
        d.kind = DescriptorKind::Extremal;
    } else {
        throw std::invalid_argument("unknown descriptor kind: \"" + kind + "\"");
    }
    return d;
}

inline nlohmann::json descriptor_to_json(const LatticeDescriptor& d) {
    nlohmann::json j;
    j["name"] = d.name;
    j["dim"] = d.dim;
    j["kind"] = to_string(d.kind);
    if (d.kind == DescriptorKind::Gram) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : d.gram_data) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& x : row) r.push_back(x.convert_to<long long>());
            rows.push_back(std::move(r));
        }
        j["data"] = std::move(rows);
    } else if (d.kind == DescriptorKind::Ar || d.kind == DescriptorKind::Bj) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& x : d.coeff_data) coeffs.push_back(detail::rational_to_json(x));
        j["data"] = std::move(coeffs);
    }
    return j;
}

inline LatticeDescriptor load_descriptor(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open descriptor file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return descriptor_from_json(j);
}

// Catalog entries are exportable in the same descriptor format.
inline LatticeDescriptor to_descriptor(const CatalogEntry& e) {
    LatticeDescriptor d;
    d.name = e.name;
    d.dim = e.n;
    switch (e.source) {
    case CatalogSource::ExtremalGenerated:
        d.kind = DescriptorKind::Extremal;
        break;
    case CatalogSource::GramFile:
        d.kind = DescriptorKind::Gram;
        d.gram_data = e.gram->g;
        break;
    case CatalogSource::ExplicitAr:
        d.kind = DescriptorKind::Ar;
        d.coeff_data = e.ar;
        break;
    }
    return d;
}

// Everything the CLI needs from one descriptor: the secrecy profile plus
// theta coefficients (enumerated for gram inputs, expanded from the fitted
// basis otherwise). `counts` stays empty for basis descriptors whose
// expansion is not an integral series, i.e. constructed non-lattices;
// the profile itself is still well-defined for them.
struct PipelineResult {
    SecrecyProfile profile;
    ThetaCoefficients counts;
    std::optional<Parity> parity; // gram inputs only
};

inline PipelineResult profile_from_descriptor(const LatticeDescriptor& d) {
    PipelineResult out;
    const int mu = d.dim / 8;
    // default expansion order: enough for the fit plus a consistency surplus
    const std::size_t default_order = 2 * (static_cast<std::size_t>(mu) + 1) + 4;
    switch (d.kind) {
    case DescriptorKind::Gram: {
        GramMatrix g;
        g.n = d.dim;
        g.g = d.gram_data;
        out.parity = validate_unimodular(g);
        out.counts = enumerate_counts(g, mu + 2);
        out.profile = make_profile(fit_a_basis(out.counts.counts, d.dim));
        break;
    }
    case DescriptorKind::Ar: {
        if (d.coeff_data.size() != static_cast<std::size_t>(mu) + 1)
            throw std::invalid_argument("ar descriptor for dimension " + std::to_string(d.dim) +
                                        " needs exactly " + std::to_string(mu + 1) +
                                        " coefficients a_0..a_mu");
        BasisCoeffsGeneral c;
        c.n = d.dim;
        c.mu = mu;
        c.nu = d.dim - 8 * mu;
        c.a = d.coeff_data;
        out.profile = make_profile(c);
        const QSeries s = expand_general(c, default_order);
        bool integral = true;
        for (const auto& x : s.coefficients())
            if (denominator(x) != 1) integral = false;
        if (integral) {
            out.counts.counts.reserve(s.order());
            for (const auto& x : s.coefficients()) out.counts.counts.push_back(numerator(x));
            out.counts.cut = static_cast<int>(s.order()) - 1;
        }
        break;
    }
    case DescriptorKind::Bj: {
        BasisCoeffsEven c = even_dimension_split(d.dim);
        if (d.coeff_data.size() != static_cast<std::size_t>(c.m))
            throw std::invalid_argument("bj descriptor for dimension " + std::to_string(d.dim) +
                                        " needs exactly " + std::to_string(c.m) +
                                        " coefficients b_1..b_m");
        c.b = d.coeff_data;
        out.profile = make_profile(c);
        const QSeries s = expand_even(c, default_order);
        bool integral = true;
        for (const auto& x : s.coefficients())
            if (denominator(x) != 1) integral = false;
        if (integral) {
            for (const auto& x : s.coefficients()) out.counts.counts.push_back(numerator(x));
            out.counts.cut = static_cast<int>(s.order()) - 1;
        }
        break;
    }
    case DescriptorKind::Extremal: {
        const ExtremalSeries ex = extremal_b_coeffs(d.dim);
        out.profile = make_profile(ex.coeffs, Provenance::Extremal);
        const QSeries s = expand_even(ex.coeffs, default_order);
        for (const auto& x : s.coefficients()) out.counts.counts.push_back(numerator(x));
        out.counts.cut = static_cast<int>(s.order()) - 1;
        break;
    }
    }
    return out;
}

} // namespace latsec

#endif
