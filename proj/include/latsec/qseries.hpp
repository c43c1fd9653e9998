#ifndef LATSEC_QSERIES_HPP
#define LATSEC_QSERIES_HPP

// Exact rational q-expansions in the nome q = e^{pi i tau}, so the k-th
// coefficient of a lattice theta series counts vectors of squared norm k.
// theta2 carries a q^{1/4} prefactor and is therefore only exposed through
// its fourth power, keeping every exponent an integer.
//
// Truncation is explicit: a QSeries of order N carries coefficients of
// q^0 .. q^{N-1} and arithmetic never pretends to know more. Products gain
// order from leading zeros (valuation shifts), which is what lets Delta^j
// reach q^{2j} targets from low-order inputs.

#include "latsec/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace latsec {

class QSeries {
public:
    QSeries() = default;
    explicit QSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}
    QSeries(std::initializer_list<Rational> coeffs) : c_(coeffs) {}

    static QSeries zero(std::size_t order) { return QSeries(std::vector<Rational>(order, Rational(0))); }

    static QSeries one(std::size_t order) {
        QSeries s = zero(order);
        if (order > 0) s.c_[0] = 1;
        return s;
    }

    std::size_t order() const { return c_.size(); }

    const std::vector<Rational>& coefficients() const { return c_; }

    Rational coeff(std::size_t k) const {
        if (k >= c_.size()) throw std::out_of_range("coefficient beyond truncation order");
        return c_[k];
    }

    // Index of the first nonzero coefficient; equals order() when none.
    std::size_t valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return i;
        return c_.size();
    }

    QSeries truncated(std::size_t new_order) const {
        if (new_order > c_.size())
            throw std::invalid_argument("cannot extend a truncated series");
        return QSeries(std::vector<Rational>(c_.begin(), c_.begin() + new_order));
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        std::vector<Rational> r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = a.c_[i] + b.c_[i];
        return QSeries(std::move(r));
    }

    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        std::vector<Rational> r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = a.c_[i] - b.c_[i];
        return QSeries(std::move(r));
    }

    friend QSeries operator*(const Rational& s, const QSeries& a) {
        std::vector<Rational> r(a.c_);
        for (auto& x : r) x *= s;
        return QSeries(std::move(r));
    }

    // Known order of a product: unknown tails are masked by the other
    // factor's leading zeros.
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        std::size_t n = std::min(a.order() + b.valuation(), b.order() + a.valuation());
        std::vector<Rational> r(n, Rational(0));
        for (std::size_t i = 0; i < a.order() && i < n; ++i) {
            if (a.c_[i] == 0) continue;
            std::size_t jmax = std::min(b.order(), n - i);
            for (std::size_t j = 0; j < jmax; ++j) {
                if (b.c_[j] == 0) continue;
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return QSeries(std::move(r));
    }

    QSeries pow(unsigned e) const {
        if (e == 0) return one(order());
        QSeries base = *this;
        QSeries result = base;
        --e;
        while (e) {
            if (e & 1u) result = result * base;
            e >>= 1u;
            if (e) base = base * base;
        }
        return result;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<Rational> c_;
};

enum class BaseSymbol { Theta3, Theta2Pow4, Theta4, E4, Delta, Delta8 };

inline BaseSymbol base_symbol_from_string(const std::string& s) {
    if (s == "theta3") return BaseSymbol::Theta3;
    if (s == "theta2_pow4") return BaseSymbol::Theta2Pow4;
    if (s == "theta4") return BaseSymbol::Theta4;
    if (s == "E4") return BaseSymbol::E4;
    if (s == "Delta") return BaseSymbol::Delta;
    if (s == "Delta8") return BaseSymbol::Delta8;
    throw std::invalid_argument("unknown base series symbol: " + s);
}

namespace detail {

inline QSeries theta3_series(std::size_t order) {
    std::vector<Rational> c(order, Rational(0));
    if (order > 0) c[0] = 1;
    for (std::size_t n = 1; n * n < order; ++n) c[n * n] = 2;
    return QSeries(std::move(c));
}

inline QSeries theta4_series(std::size_t order) {
    std::vector<Rational> c(order, Rational(0));
    if (order > 0) c[0] = 1;
    for (std::size_t n = 1; n * n < order; ++n) c[n * n] = (n % 2 == 0) ? 2 : -2;
    return QSeries(std::move(c));
}

// theta2 = 2 q^{1/4} sum_{n>=0} q^{n(n+1)}; the 4th power is 16 q (sum)^4.
inline QSeries theta2_pow4_series(std::size_t order) {
    if (order == 0) return QSeries::zero(0);
    std::vector<Rational> inner(order, Rational(0));
    for (std::size_t n = 0; n * (n + 1) < order; ++n) inner[n * (n + 1)] = 1;
    QSeries p = QSeries(std::move(inner)).pow(4);
    std::vector<Rational> out(order, Rational(0));
    for (std::size_t i = 0; i + 1 < order && i < p.order(); ++i) out[i + 1] = 16 * p.coefficients()[i];
    return QSeries(std::move(out));
}

} // namespace detail

// Exact expansion of one of the standard building blocks to the given order.
// E4 = (theta2^8 + theta3^8 + theta4^8)/2, Delta = theta2^8 theta3^8 theta4^8/256,
// Delta8 = theta2^4 theta4^4 / 16.
inline QSeries base_series(BaseSymbol symbol, std::size_t order) {
    if (order < 1) throw std::invalid_argument("series order must be >= 1");
    switch (symbol) {
    case BaseSymbol::Theta3: return detail::theta3_series(order);
    case BaseSymbol::Theta4: return detail::theta4_series(order);
    case BaseSymbol::Theta2Pow4: return detail::theta2_pow4_series(order);
    case BaseSymbol::E4: {
        QSeries t2_8 = detail::theta2_pow4_series(order).pow(2).truncated(order);
        QSeries t3_8 = detail::theta3_series(order).pow(8);
        QSeries t4_8 = detail::theta4_series(order).pow(8);
        return Rational(1, 2) * (t2_8 + t3_8 + t4_8);
    }
    case BaseSymbol::Delta: {
        QSeries t2_8 = detail::theta2_pow4_series(order).pow(2).truncated(order);
        QSeries t3_8 = detail::theta3_series(order).pow(8);
        QSeries t4_8 = detail::theta4_series(order).pow(8);
        return Rational(1, 256) * (t2_8 * t3_8 * t4_8).truncated(order);
    }
    case BaseSymbol::Delta8: {
        QSeries t2_4 = detail::theta2_pow4_series(order);
        QSeries t4_4 = detail::theta4_series(order).pow(4);
        return Rational(1, 16) * (t2_4 * t4_4).truncated(order);
    }
    }
    throw std::invalid_argument("unknown base series symbol");
}

// Coefficients of Theta_Lambda = sum_{r=0}^{mu} a_r theta3^{n-8r} Delta8^r,
// the representation valid for every unimodular lattice; n = 8*mu + nu.
struct BasisCoeffsGeneral {
    int n = 0;
    int mu = 0;
    int nu = 0;
    std::vector<Rational> a; // a_0 .. a_mu
};

// Coefficients of Theta = E4^{3m+k} + sum_{j=1}^{m} b_j E4^{3(m-j)+k} Delta^j
// for an even unimodular lattice; n = 24m + 8k, 0 <= k <= 2.
struct BasisCoeffsEven {
    int n = 0;
    int m = 0;
    int k = 0;
    std::vector<Rational> b; // b_1 .. b_m
};

inline BasisCoeffsEven even_dimension_split(int n) {
    if (n < 8 || n % 8 != 0)
        throw std::invalid_argument("even unimodular dimension must be a positive multiple of 8");
    BasisCoeffsEven c;
    c.n = n;
    int n8 = n / 8;
    c.k = n8 % 3;
    c.m = (n8 - c.k) / 3;
    return c;
}

namespace detail {

// Even-power compression: series in Q = q^2. Throws if an odd coefficient
// is nonzero.
inline QSeries even_part(const QSeries& s) {
    std::vector<Rational> r((s.order() + 1) / 2);
    for (std::size_t i = 0; i < s.order(); ++i) {
        if (i % 2 == 0)
            r[i / 2] = s.coefficients()[i];
        else if (s.coefficients()[i] != 0)
            throw std::invalid_argument("series has a nonzero odd coefficient");
    }
    return QSeries(std::move(r));
}

// terms[r] = theta3^{n-8r} Delta8^r truncated to order, r = 0..rmax.
// Each term starts at q^r with coefficient 1.
inline std::vector<QSeries> general_basis_terms(int n, int rmax, std::size_t order) {
    QSeries t3 = theta3_series(order);
    QSeries d8 = base_series(BaseSymbol::Delta8, order);
    QSeries t3e8 = t3.pow(8);
    std::vector<QSeries> p8(static_cast<std::size_t>(rmax) + 1, QSeries::one(order));
    for (int i = 1; i <= rmax; ++i)
        p8[static_cast<std::size_t>(i)] = (p8[static_cast<std::size_t>(i - 1)] * t3e8).truncated(order);
    QSeries head = t3.pow(static_cast<unsigned>(n - 8 * rmax));
    std::vector<QSeries> terms(static_cast<std::size_t>(rmax) + 1);
    QSeries d8pow = QSeries::one(order);
    for (int r = 0; r <= rmax; ++r) {
        terms[static_cast<std::size_t>(r)] =
            ((head * p8[static_cast<std::size_t>(rmax - r)]).truncated(order) * d8pow).truncated(order);
        if (r < rmax) d8pow = (d8pow * d8).truncated(order);
    }
    return terms;
}

// terms[j] = E4^{3(m-j)+k} Delta^j in the Q = q^2 nome, truncated to qorder.
// Each term starts at Q^j with coefficient 1.
inline std::vector<QSeries> even_basis_terms(int m, int k, std::size_t qorder) {
    std::size_t order = 2 * qorder;
    QSeries e4 = even_part(base_series(BaseSymbol::E4, order));
    QSeries dl = even_part(base_series(BaseSymbol::Delta, order));
    std::vector<QSeries> e4p(static_cast<std::size_t>(3 * m + k) + 1, QSeries::one(qorder));
    for (std::size_t i = 1; i < e4p.size(); ++i) e4p[i] = (e4p[i - 1] * e4).truncated(qorder);
    std::vector<QSeries> terms(static_cast<std::size_t>(m) + 1);
    QSeries dlpow = QSeries::one(qorder);
    for (int j = 0; j <= m; ++j) {
        terms[static_cast<std::size_t>(j)] =
            (e4p[static_cast<std::size_t>(3 * (m - j) + k)] * dlpow).truncated(qorder);
        if (j < m) dlpow = (dlpow * dl).truncated(qorder);
    }
    return terms;
}

} // namespace detail

// Expands the general-basis representation back into a q-series.
inline QSeries expand_general(const BasisCoeffsGeneral& c, std::size_t order) {
    auto terms = detail::general_basis_terms(c.n, static_cast<int>(c.a.size()) - 1, order);
    QSeries acc = QSeries::zero(order);
    for (std::size_t r = 0; r < c.a.size(); ++r) acc = acc + c.a[r] * terms[r];
    return acc;
}

// Expands the even-basis representation, returned in the q-nome (odd
// coefficients zero) to match ThetaCoefficients indexing.
inline QSeries expand_even(const BasisCoeffsEven& c, std::size_t order) {
    std::size_t qorder = (order + 1) / 2;
    auto terms = detail::even_basis_terms(c.m, c.k, qorder);
    QSeries acc = terms[0];
    for (std::size_t j = 1; j <= c.b.size(); ++j) acc = acc + c.b[j - 1] * terms[j];
    std::vector<Rational> q(order, Rational(0));
    for (std::size_t i = 0; i < acc.order() && 2 * i < order; ++i) q[2 * i] = acc.coefficients()[i];
    return QSeries(std::move(q));
}

// Fits theta-series counts N_0..N_cut to the general basis. The system is
// triangular because Delta8^r theta3^{n-8r} starts at q^r with coefficient 1.
// Surplus coefficients beyond r = mu are checked against the fitted
// expansion; a mismatch means the input is not a unimodular theta series.
inline BasisCoeffsGeneral fit_a_basis(const std::vector<Int>& counts, int n) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    BasisCoeffsGeneral c;
    c.n = n;
    c.mu = n / 8;
    c.nu = n - 8 * c.mu;
    std::size_t need = static_cast<std::size_t>(c.mu) + 1;
    if (counts.size() < need)
        throw std::invalid_argument("need at least " + std::to_string(need) +
                                    " theta coefficients (N_0..N_mu) for dimension " +
                                    std::to_string(n) + ", got " + std::to_string(counts.size()));
    std::size_t order = counts.size();
    auto terms = detail::general_basis_terms(n, c.mu, order);
    QSeries acc = QSeries::zero(order);
    c.a.resize(need);
    for (std::size_t r = 0; r < need; ++r) {
        c.a[r] = Rational(counts[r]) - acc.coeff(r); // divisor is exactly 1
        acc = acc + c.a[r] * terms[r];
    }
    for (std::size_t k = need; k < counts.size(); ++k) {
        if (acc.coeff(k) != Rational(counts[k]))
            throw std::invalid_argument(
                "theta coefficients are inconsistent with a unimodular lattice of dimension " +
                std::to_string(n) + " (first mismatch at squared norm " + std::to_string(k) + ")");
    }
    return c;
}

// Fits an even lattice's counts to the E4/Delta basis, working in Q = q^2
// where Delta^j starts at Q^j with coefficient 1.
inline BasisCoeffsEven fit_b_basis(const std::vector<Int>& counts, int n) {
    BasisCoeffsEven c = even_dimension_split(n);
    if (counts.empty() || counts[0] != 1) throw std::invalid_argument("N_0 must be 1");
    for (std::size_t i = 1; i < counts.size(); i += 2)
        if (counts[i] != 0)
            throw std::invalid_argument("odd-norm count N_" + std::to_string(i) +
                                        " is nonzero; not an even lattice");
    std::size_t qorder = (counts.size() + 1) / 2;
    std::size_t need = static_cast<std::size_t>(c.m) + 1;
    if (qorder < need)
        throw std::invalid_argument("need theta coefficients through N_" +
                                    std::to_string(2 * c.m) + " for dimension " + std::to_string(n));
    auto terms = detail::even_basis_terms(c.m, c.k, qorder);
    QSeries acc = terms[0];
    c.b.resize(static_cast<std::size_t>(c.m));
    for (int j = 1; j <= c.m; ++j) {
        Rational target(counts[2 * static_cast<std::size_t>(j)]);
        c.b[static_cast<std::size_t>(j) - 1] = target - acc.coeff(static_cast<std::size_t>(j));
        acc = acc + c.b[static_cast<std::size_t>(j) - 1] * terms[static_cast<std::size_t>(j)];
    }
    for (std::size_t k = need; k < qorder; ++k) {
        if (acc.coeff(k) != Rational(counts[2 * k]))
            throw std::invalid_argument(
                "theta coefficients are inconsistent with an even unimodular lattice of dimension " +
                std::to_string(n) + " (first mismatch at squared norm " + std::to_string(2 * k) + ")");
    }
    return c;
}

// Result of the extremality solve: the basis coefficients together with the
// first nonzero vector count N_{2m+2} implied by them.
struct ExtremalSeries {
    BasisCoeffsEven coeffs;
    Int first_shell_norm = 0;  // 2m + 2
    Int first_shell_count = 0; // N_{2m+2}
};

// Unique b_1..b_m forcing N_2 = N_4 = ... = N_{2m} = 0, i.e. shortest
// nonzero vectors of norm 2m+2. Triangular for the same reason as the fit.
inline ExtremalSeries extremal_b_coeffs(int n) {
    ExtremalSeries out;
    out.coeffs = even_dimension_split(n);
    BasisCoeffsEven& c = out.coeffs;
    std::size_t qorder = static_cast<std::size_t>(c.m) + 2;
    auto terms = detail::even_basis_terms(c.m, c.k, qorder);
    QSeries acc = terms[0];
    c.b.resize(static_cast<std::size_t>(c.m));
    for (int j = 1; j <= c.m; ++j) {
        c.b[static_cast<std::size_t>(j) - 1] = -acc.coeff(static_cast<std::size_t>(j));
        acc = acc + c.b[static_cast<std::size_t>(j) - 1] * terms[static_cast<std::size_t>(j)];
    }
    out.first_shell_norm = 2 * c.m + 2;
    Rational count = acc.coeff(static_cast<std::size_t>(c.m) + 1);
    out.first_shell_count = numerator(count); // exact integer by construction
    return out;
}

} // namespace latsec

#endif
