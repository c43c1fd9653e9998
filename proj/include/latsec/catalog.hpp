#ifndef LATSEC_CATALOG_HPP
#define LATSEC_CATALOG_HPP

// Ground-truth fixtures: the ten extremal even unimodular dimensions
// (8..80) with their secrecy denominators locked as regression data, the
// cubic lattices Z^1..Z^8, an explicit E8 Gram matrix, and a constructed
// non-lattice profile exercising the refutation path.
//
// The extremal denominators are recorded twice on purpose: once in the
// factored (1-z)/z form and once expanded to monomials. Generation from
// the extremality conditions must reproduce both; double entry catches
// transcription and derivation errors alike.

#include "latsec/lattice.hpp"
#include "latsec/polyq.hpp"
#include "latsec/rational.hpp"
#include "latsec/secrecy.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace latsec {

enum class CatalogSource { ExtremalGenerated, GramFile, ExplicitAr };

// One term  coeff * (1-z)^p * z^q  of the factored denominator.
struct TableTerm {
    Rational coeff;
    int pow_one_minus_z = 0;
    int pow_z = 0;
};

struct CatalogEntry {
    std::string name;
    int n = 0;
    CatalogSource source = CatalogSource::ExtremalGenerated;
    bool genuine_lattice = true;
    std::vector<TableTerm> table; // factored form, when known
    PolyQ expected_D;
    Rational expected_gain;
    std::optional<GramMatrix> gram; // GramFile entries
    std::vector<Rational> ar;       // ExplicitAr entries
};

inline PolyQ expand_table_terms(const std::vector<TableTerm>& terms) {
    const PolyQ one_minus_z{Rational(1), Rational(-1)};
    const PolyQ z{Rational(0), Rational(1)};
    PolyQ acc;
    for (const auto& t : terms) {
        PolyQ term = PolyQ::constant(t.coeff) *
                     one_minus_z.pow(static_cast<unsigned>(t.pow_one_minus_z)) *
                     z.pow(static_cast<unsigned>(t.pow_z));
        acc = acc + term;
    }
    return acc;
}

inline std::string factored_string(const std::vector<TableTerm>& terms) {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        Rational mag = t.coeff < 0 ? Rational(-t.coeff) : t.coeff;
        if (first) {
            if (t.coeff < 0) os << "-";
            first = false;
        } else {
            os << (t.coeff < 0 ? " - " : " + ");
        }
        bool wrote = false;
        if (mag != 1 || (t.pow_one_minus_z == 0 && t.pow_z == 0)) {
            os << rational_to_string(mag);
            wrote = true;
        }
        if (t.pow_one_minus_z > 0) {
            if (wrote) os << "*";
            os << "(1-z)";
            if (t.pow_one_minus_z > 1) os << "^" << t.pow_one_minus_z;
            wrote = true;
        }
        if (t.pow_z > 0) {
            if (wrote) os << "*";
            os << "z";
            if (t.pow_z > 1) os << "^" << t.pow_z;
        }
    }
    return os.str();
}

namespace detail {

inline PolyQ poly_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(parse_rational(s));
    return PolyQ(std::move(c));
}

struct ExtremalRow {
    int n;
    std::vector<TableTerm> table;
    std::vector<std::string> monomials; // low to high degree
    std::string gain;
};

inline const std::vector<ExtremalRow>& extremal_rows() {
    static const std::vector<ExtremalRow> rows = {
        {8, {{Rational(1), 1, 0}}, {"1", "-1"}, "4/3"},
        {16, {{Rational(1), 2, 0}}, {"1", "-2", "1"}, "16/9"},
        {24,
         {{Rational(1), 3, 0}, {Rational(-45, 16), 0, 2}},
         {"1", "-3", "3/16", "-1"},
         "256/63"},
        {32,
         {{Rational(1), 4, 0}, {Rational(-15, 4), 1, 2}},
         {"1", "-4", "9/4", "-1/4", "1"},
         "64/9"},
        {40,
         {{Rational(1), 5, 0}, {Rational(-75, 16), 2, 2}},
         {"1", "-5", "85/16", "-5/8", "5/16", "-1"},
         "4096/297"},
        {48,
         {{Rational(1), 6, 0}, {Rational(-45, 8), 3, 2}, {Rational(3915, 2048), 0, 4}},
         {"1", "-6", "75/8", "-25/8", "75/2048", "-3/8", "1"},
         "524288/19467"},
        {56,
         {{Rational(1), 7, 0}, {Rational(-105, 16), 4, 2}, {Rational(21735, 4096), 1, 4}},
         {"1", "-7", "231/16", "-35/4", "3815/4096", "-231/4096", "7/16", "-1"},
         "4194304/80757"},
        {64,
         {{Rational(1), 8, 0}, {Rational(-15, 2), 5, 2}, {Rational(4905, 512), 2, 4}},
         {"1", "-8", "41/2", "-37/2", "2345/512", "-41/256", "41/512", "-1/2", "1"},
         "2097152/20817"},
        {72,
         {{Rational(1), 9, 0},
          {Rational(-135, 16), 6, 2},
          {Rational(60345, 4096), 3, 4},
          {Rational(-53325, 32768), 0, 6}},
         {"1", "-9", "441/16", "-267/8", "58041/4096", "-5931/4096", "267/32768", "-441/4096",
          "9/16", "-1"},
         "134217728/685881"},
        {80,
         {{Rational(1), 10, 0},
          {Rational(-75, 8), 7, 2},
          {Rational(42525, 2048), 4, 4},
          {Rational(-202125, 32768), 1, 6}},
         {"1", "-10", "285/8", "-435/8", "69405/2048", "-3549/512", "9555/32768", "-435/32768",
          "285/2048", "-5/8", "1"},
         "536870912/1414413"},
    };
    return rows;
}

inline GramMatrix identity_gram(int n) {
    GramMatrix g;
    g.n = n;
    g.g.assign(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
    for (int i = 0; i < n; ++i) g.g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return g;
}

inline GramMatrix e8_gram() {
    // simple-root basis; all roots have norm 2, determinant 1
    static const int rows[8][8] = {
        {2, 0, -1, 0, 0, 0, 0, 0},  {0, 2, 0, -1, 0, 0, 0, 0},  {-1, 0, 2, -1, 0, 0, 0, 0},
        {0, -1, -1, 2, -1, 0, 0, 0}, {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
        {0, 0, 0, 0, 0, -1, 2, -1},  {0, 0, 0, 0, 0, 0, -1, 2}};
    GramMatrix g;
    g.n = 8;
    g.g.assign(8, std::vector<Int>(8));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) g.g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rows[i][j];
    return g;
}

} // namespace detail

inline std::vector<CatalogEntry> catalog_entries() {
    std::vector<CatalogEntry> all;
    for (const auto& row : detail::extremal_rows()) {
        CatalogEntry e;
        e.name = "extremal-" + std::to_string(row.n);
        e.n = row.n;
        e.source = CatalogSource::ExtremalGenerated;
        e.table = row.table;
        e.expected_D = detail::poly_from_strings(row.monomials);
        e.expected_gain = parse_rational(row.gain);
        all.push_back(std::move(e));
    }
    for (int n = 1; n <= 8; ++n) {
        CatalogEntry e;
        e.name = "Z" + std::to_string(n);
        e.n = n;
        e.source = CatalogSource::GramFile;
        e.gram = detail::identity_gram(n);
        e.expected_D = PolyQ::constant(1);
        e.expected_gain = 1;
        all.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "E8-gram";
        e.n = 8;
        e.source = CatalogSource::GramFile;
        e.gram = detail::e8_gram();
        e.expected_D = PolyQ{Rational(1), Rational(-1)};
        e.expected_gain = Rational(4, 3);
        all.push_back(std::move(e));
    }
    {
        // D = (z - 1/8)^2: minimum at z = 1/8, not 1/4; not a lattice
        CatalogEntry e;
        e.name = "refuted-fixture";
        e.n = 16;
        e.source = CatalogSource::ExplicitAr;
        e.genuine_lattice = false;
        e.ar = {Rational(1, 64), Rational(-4), Rational(256)};
        e.expected_D = PolyQ{Rational(1, 64), Rational(-1, 4), Rational(1)};
        e.expected_gain = 64; // 1/D(1/4) = 64; the verdict for it is Refuted
        all.push_back(std::move(e));
    }
    return all;
}

inline CatalogEntry catalog_entry(const std::string& name) {
    for (auto& e : catalog_entries())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown catalog entry: " + name);
}

inline CatalogEntry catalog_entry(int n) {
    for (auto& e : catalog_entries())
        if (e.source == CatalogSource::ExtremalGenerated && e.n == n) return e;
    throw std::invalid_argument("no extremal catalog entry for dimension " + std::to_string(n) +
                                " (known dimensions are 8, 16, ..., 80)");
}

} // namespace latsec

#endif
