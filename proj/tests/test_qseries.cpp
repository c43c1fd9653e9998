#include "latsec/qseries.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace latsec;

namespace {

std::vector<Rational> rats(std::initializer_list<long long> v) {
    std::vector<Rational> out;
    for (auto x : v) out.emplace_back(Int(x));
    return out;
}

std::vector<Int> ints(std::initializer_list<long long> v) {
    std::vector<Int> out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

// test-side product oracle: q^2 prod_{n>=1} (1 - q^{2n})^24
QSeries delta_product_oracle(std::size_t order) {
    QSeries eta(std::vector<Rational>(order, Rational(0)));
    std::vector<Rational> one(order, Rational(0));
    one[0] = 1;
    QSeries acc(std::move(one));
    for (std::size_t n = 1; 2 * n < order; ++n) {
        std::vector<Rational> f(order, Rational(0));
        f[0] = 1;
        f[2 * n] = -1;
        QSeries factor(std::move(f));
        for (int rep = 0; rep < 24; ++rep) acc = (acc * factor).truncated(order);
    }
    std::vector<Rational> shifted(order, Rational(0));
    for (std::size_t i = 0; i + 2 < order; ++i) shifted[i + 2] = acc.coefficients()[i];
    return QSeries(std::move(shifted));
}

} // namespace

TEST_CASE("base series match their defining expansions", "[qseries]") {
    CHECK(base_series(BaseSymbol::Theta3, 5).coefficients() == rats({1, 2, 0, 0, 2}));
    CHECK(base_series(BaseSymbol::Theta4, 5).coefficients() == rats({1, -2, 0, 0, 2}));
    CHECK(base_series(BaseSymbol::Theta2Pow4, 3).coefficients() == rats({0, 16, 0}));
    CHECK(base_series(BaseSymbol::E4, 4).coefficients() == rats({1, 0, 240, 0}));
    CHECK(base_series(BaseSymbol::Delta8, 2).coefficients() == rats({0, 1}));

    CHECK(base_series(BaseSymbol::Theta2Pow4, 12).coefficients() ==
          rats({0, 16, 0, 64, 0, 96, 0, 128, 0, 208, 0, 192}));
    CHECK(base_series(BaseSymbol::E4, 12).coefficients() ==
          rats({1, 0, 240, 0, 2160, 0, 6720, 0, 17520, 0, 30240, 0}));
    CHECK(base_series(BaseSymbol::Delta, 12).coefficients() ==
          rats({0, 0, 1, 0, -24, 0, 252, 0, -1472, 0, 4830, 0}));
    CHECK(base_series(BaseSymbol::Delta8, 12).coefficients() ==
          rats({0, 1, -8, 28, -64, 126, -224, 344, -512, 757, -1008, 1332}));
}

TEST_CASE("base series errors", "[qseries]") {
    CHECK_THROWS_AS(base_series(BaseSymbol::E4, 0), std::invalid_argument);
    CHECK_THROWS_AS(base_symbol_from_string("theta5"), std::invalid_argument);
    CHECK(base_symbol_from_string("Delta8") == BaseSymbol::Delta8);
}

TEST_CASE("series arithmetic", "[qseries]") {
    QSeries a{Rational(1), Rational(2)};
    CHECK((a * a).coefficients() == rats({1, 4}));

    QSeries b{Rational(1), Rational(1), Rational(0)};
    CHECK(b.pow(0).coefficients() == rats({1, 0, 0}));

    // valuation shifts extend the known order of products
    QSeries d8 = base_series(BaseSymbol::Delta8, 4);
    CHECK((d8 * d8).order() == 5);
    CHECK((d8 * d8).valuation() == 2);

    // theta2^4 * theta4^4 = 16 * Delta8
    QSeries t2p4 = base_series(BaseSymbol::Theta2Pow4, 8);
    QSeries t4p4 = base_series(BaseSymbol::Theta4, 8).pow(4);
    QSeries lhs = (t2p4 * t4p4).truncated(8);
    QSeries rhs = Rational(16) * base_series(BaseSymbol::Delta8, 8);
    CHECK(lhs == rhs);
}

TEST_CASE("Jacobi identity holds coefficient-wise", "[qseries]") {
    const std::size_t order = 30;
    QSeries t2p4 = base_series(BaseSymbol::Theta2Pow4, order);
    QSeries t3p4 = base_series(BaseSymbol::Theta3, order).pow(4);
    QSeries t4p4 = base_series(BaseSymbol::Theta4, order).pow(4);
    CHECK((t2p4 + t4p4) == t3p4);
}

TEST_CASE("Delta equals its eta-product form", "[qseries]") {
    const std::size_t order = 30;
    CHECK(base_series(BaseSymbol::Delta, order) == delta_product_oracle(order));
}

TEST_CASE("fit_a_basis on cubic lattices", "[qseries]") {
    for (int n : {1, 2, 3, 5, 8, 11, 16}) {
        QSeries t3n = base_series(BaseSymbol::Theta3, 12).pow(static_cast<unsigned>(n));
        std::vector<Int> counts;
        for (const auto& c : t3n.coefficients()) counts.push_back(numerator(c));
        BasisCoeffsGeneral fit = fit_a_basis(counts, n);
        REQUIRE(fit.a.size() == static_cast<std::size_t>(n / 8) + 1);
        CHECK(fit.a[0] == 1);
        for (std::size_t r = 1; r < fit.a.size(); ++r) CHECK(fit.a[r] == 0);
    }
}

TEST_CASE("fit_a_basis on E8 and the dim-24 extremal series", "[qseries]") {
    BasisCoeffsGeneral e8 = fit_a_basis(ints({1, 0, 240, 0, 2160}), 8);
    REQUIRE(e8.a.size() == 2);
    CHECK(e8.a[0] == 1);
    CHECK(e8.a[1] == -16);

    // counts from the extremality solve, independently reproduced
    std::vector<Int> leech = ints({1, 0, 0, 0, 196560, 0, 16773120, 0, 398034000});
    BasisCoeffsGeneral fit = fit_a_basis(leech, 24);
    REQUIRE(fit.a.size() == 4);
    CHECK(fit.a[0] == 1);
    CHECK(fit.a[1] == -48);
    CHECK(fit.a[2] == 48);
    CHECK(fit.a[3] == -4096);
}

TEST_CASE("fit_a_basis rejects bad input", "[qseries]") {
    CHECK_THROWS_WITH(fit_a_basis(ints({1}), 8), Catch::Matchers::ContainsSubstring("at least 2"));
    // corrupt a surplus coefficient: no unimodular lattice has this series
    CHECK_THROWS_WITH(fit_a_basis(ints({1, 0, 240, 0, 2161}), 8),
                      Catch::Matchers::ContainsSubstring("inconsistent"));
}

TEST_CASE("fit_b_basis matches known even lattices", "[qseries]") {
    BasisCoeffsEven e8 = fit_b_basis(ints({1, 0, 240}), 8);
    CHECK(e8.m == 0);
    CHECK(e8.k == 1);
    CHECK(e8.b.empty());

    BasisCoeffsEven leech = fit_b_basis(ints({1, 0, 0, 0, 196560}), 24);
    REQUIRE(leech.b.size() == 1);
    CHECK(leech.b[0] == -720);

    CHECK_THROWS_WITH(fit_b_basis(ints({1, 2, 240}), 8),
                      Catch::Matchers::ContainsSubstring("odd-norm"));
    CHECK_THROWS_AS(fit_b_basis(ints({1, 0, 240}), 12), std::invalid_argument);
}

TEST_CASE("extremal coefficients reproduce the known table", "[qseries]") {
    struct Row {
        int n;
        std::vector<Int> b;
        const char* shell_count;
    };
    const std::vector<Row> rows = {
        {8, {}, "240"},
        {16, {}, "480"},
        {24, {Int(-720)}, "196560"},
        {32, {Int(-960)}, "146880"},
        {40, {Int(-1200)}, "39600"},
        {48, {Int(-1440), Int(125280)}, "52416000"},
        {56, {Int(-1680), Int(347760)}, "15590400"},
        {64, {Int(-1920), Int(627840)}, "2611200"},
        {72, {Int(-2160), Int(965520), Int(-27302400)}, "6218175600"},
        {80, {Int(-2400), Int(1360800), Int(-103488000)}, "1250172000"},
    };
    for (const auto& row : rows) {
        ExtremalSeries ex = extremal_b_coeffs(row.n);
        REQUIRE(ex.coeffs.b.size() == row.b.size());
        for (std::size_t j = 0; j < row.b.size(); ++j) CHECK(ex.coeffs.b[j] == Rational(row.b[j]));
        CHECK(ex.first_shell_norm == 2 * ex.coeffs.m + 2);
        CHECK(ex.first_shell_count == Int(row.shell_count));
    }
    CHECK_THROWS_AS(extremal_b_coeffs(12), std::invalid_argument);
    CHECK_THROWS_AS(extremal_b_coeffs(0), std::invalid_argument);
}

TEST_CASE("fits round-trip through expansion", "[qseries]") {
    // even route: generate extremal counts, refit, re-expand
    for (int n : {8, 24, 48, 72}) {
        ExtremalSeries ex = extremal_b_coeffs(n);
        const std::size_t order = 2 * (static_cast<std::size_t>(ex.coeffs.m) + 2) + 4;
        QSeries expanded = expand_even(ex.coeffs, order);
        std::vector<Int> counts;
        for (const auto& c : expanded.coefficients()) {
            REQUIRE(denominator(c) == 1);
            REQUIRE(numerator(c) >= 0); // genuine lattice: non-negative integers
            counts.push_back(numerator(c));
        }
        BasisCoeffsEven refit = fit_b_basis(counts, n);
        CHECK(refit.b == ex.coeffs.b);

        // the two bases describe the same series
        BasisCoeffsGeneral general = fit_a_basis(counts, n);
        CHECK(expand_general(general, order) == expanded);
    }
}
