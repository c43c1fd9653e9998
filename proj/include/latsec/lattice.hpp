#ifndef LATSEC_LATTICE_HPP
#define LATSEC_LATTICE_HPP

// Gram-matrix ingestion and exact theta-coefficient computation. Vector
// counts come from a depth-first bounded coordinate search over the
// quadratic form's rational Cholesky (LDL) decomposition; all pruning
// bounds are exact rational comparisons, so a count is never corrupted by
// rounding. Only the +/- pair symmetry is exploited.

#include "latsec/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latsec {

struct GramMatrix {
    int n = 0;
    std::vector<std::vector<Int>> g; // n x n, symmetric, positive definite, det 1

    const Int& at(int i, int j) const { return g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
};

enum class Parity { Even, Odd };

struct ThetaCoefficients {
    std::vector<Int> counts; // N_0 .. N_cut
    int cut = 0;             // inclusive maximum squared norm
};

class enumeration_budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Leading principal minors by fraction-free Gaussian elimination (Bareiss).
inline std::vector<Int> leading_principal_minors(const GramMatrix& gm) {
    const int n = gm.n;
    std::vector<std::vector<Int>> a(gm.g);
    std::vector<Int> minors(static_cast<std::size_t>(n));
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        if (k > 0) {
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j)
                    a[i][j] = (a[i][j] * a[k - 1][k - 1] - a[i][k - 1] * a[k - 1][j]) / prev;
            prev = a[k - 1][k - 1];
        }
        minors[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        if (minors[static_cast<std::size_t>(k)] == 0) {
            // singular leading block: pivot is zero, report minor 0 and stop
            for (int t = k; t < n; ++t) minors[static_cast<std::size_t>(t)] = 0;
            break;
        }
    }
    return minors;
}

} // namespace detail

// Checks symmetry, positive definiteness (all leading principal minors
// positive) and determinant 1, then classifies parity: even iff every
// diagonal entry is even, which for an integral Gram matrix is equivalent
// to all vector norms being even. An even result with dimension not
// divisible by 8 is rejected as inconsistent input.
inline Parity validate_unimodular(const GramMatrix& gm) {
    const int n = gm.n;
    if (n < 1 || gm.g.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("Gram matrix dimension mismatch");
    for (int i = 0; i < n; ++i) {
        if (gm.g[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("Gram matrix is not square");
        for (int j = 0; j < i; ++j)
            if (gm.at(i, j) != gm.at(j, i))
                throw std::invalid_argument("Gram matrix is not symmetric");
    }
    const auto minors = detail::leading_principal_minors(gm);
    for (int k = 0; k < n; ++k)
        if (minors[static_cast<std::size_t>(k)] <= 0)
            throw std::invalid_argument("Gram matrix is not positive definite (leading minor " +
                                        std::to_string(k + 1) + " is not positive)");
    if (minors[static_cast<std::size_t>(n - 1)] != 1)
        throw std::invalid_argument("Gram matrix determinant is " +
                                    minors[static_cast<std::size_t>(n - 1)].str() +
                                    ", not 1; lattice is not unimodular");
    bool even = true;
    for (int i = 0; i < n; ++i)
        if (gm.at(i, i) % 2 != 0) { even = false; break; }
    if (even && n % 8 != 0)
        throw std::invalid_argument("even unimodular lattice in dimension " + std::to_string(n) +
                                    " is impossible (dimension must be divisible by 8)");
    return even ? Parity::Even : Parity::Odd;
}

namespace detail {

struct LdlForm {
    // Q(x) = sum_i d[i] * (x_i + sum_{j>i} l[i][j] x_j)^2
    std::vector<Rational> d;
    std::vector<std::vector<Rational>> l;
};

inline LdlForm ldl_decompose(const GramMatrix& gm) {
    const int n = gm.n;
    std::vector<std::vector<Rational>> c(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c[i][j] = Rational(gm.at(i, j));
    LdlForm f;
    f.d.resize(static_cast<std::size_t>(n));
    f.l.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i) {
        f.d[i] = c[i][i];
        if (f.d[i] <= 0) throw std::invalid_argument("form is not positive definite");
        for (int j = i + 1; j < n; ++j) f.l[i][j] = c[i][j] / f.d[i];
        for (int r = i + 1; r < n; ++r)
            for (int s = r; s < n; ++s) {
                c[r][s] -= f.d[i] * f.l[i][r] * f.l[i][s];
                c[s][r] = c[r][s];
            }
    }
    return f;
}

// Largest integer x with x <= -c + sqrt(r/d), i.e. floor of the upper
// endpoint of the admissible interval (d > 0, r >= 0). Starts from a
// floating estimate, then fixes up with exact comparisons against the
// downward-closed predicate  x + c <= 0  or  d (x + c)^2 <= r.
inline long hi_bound(const Rational& c, const Rational& d, const Rational& r) {
    const double cd = numerator(c).convert_to<double>() / denominator(c).convert_to<double>();
    const double rd = numerator(r).convert_to<double>() / denominator(r).convert_to<double>();
    const double dd = numerator(d).convert_to<double>() / denominator(d).convert_to<double>();
    long x = static_cast<long>(std::floor(-cd + std::sqrt(std::max(0.0, rd / dd))));
    auto below_upper = [&](long v) {
        Rational off = Rational(v) + c;
        if (off <= 0) return true;
        return d * off * off <= r;
    };
    while (below_upper(x + 1)) ++x;
    while (!below_upper(x)) --x;
    return x;
}

// Smallest integer x with x >= -c - sqrt(r/d).
inline long lo_bound(const Rational& c, const Rational& d, const Rational& r) {
    return -hi_bound(-c, d, r);
}

struct EnumState {
    const LdlForm* f = nullptr;
    int n = 0;
    Int max_norm;
    std::vector<Int> counts;
    std::vector<long> x;
    unsigned long long nodes = 0;
    unsigned long long budget = 0;
};

// Levels are assigned from i = n-1 down to 0; `all_zero` restricts the
// first nonzero coordinate to be positive so each +/- pair is found once.
inline void enumerate_level(EnumState& st, int i, const Rational& remaining, bool all_zero) {
    if (++st.nodes > st.budget)
        throw enumeration_budget_error("enumeration budget exceeded (" +
                                       std::to_string(st.budget) + " nodes)");
    const auto& f = *st.f;
    Rational offset(0);
    for (int j = i + 1; j < st.n; ++j)
        if (st.x[static_cast<std::size_t>(j)] != 0)
            offset += f.l[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                      Rational(st.x[static_cast<std::size_t>(j)]);
    const Rational& d = f.d[static_cast<std::size_t>(i)];
    long lo = lo_bound(offset, d, remaining);
    long hi = hi_bound(offset, d, remaining);
    if (all_zero && lo < 0) lo = 0;
    for (long v = lo; v <= hi; ++v) {
        Rational off = Rational(v) + offset;
        Rational used = d * off * off;
        if (used > remaining) continue;
        st.x[static_cast<std::size_t>(i)] = v;
        const bool zero_so_far = all_zero && v == 0;
        if (i == 0) {
            Rational norm = Rational(st.max_norm) - (remaining - used);
            if (denominator(norm) != 1) throw std::logic_error("non-integral vector norm");
            Int k = numerator(norm);
            if (zero_so_far) {
                // the all-zero vector
                st.counts[0] += 1;
            } else if (k >= 0 && k <= st.max_norm) {
                st.counts[k.convert_to<std::size_t>()] += 2;
            }
        } else {
            enumerate_level(st, i - 1, remaining - used, zero_so_far);
        }
    }
    st.x[static_cast<std::size_t>(i)] = 0;
}

} // namespace detail

// Exact counts of lattice vectors with x^T G x = k for k = 0..max_norm.
// The Gram matrix must already validate. Never truncates silently: if the
// candidate tree exceeds the node budget an enumeration_budget_error is
// thrown.
inline ThetaCoefficients enumerate_counts(const GramMatrix& gm, int max_norm,
                                          unsigned long long node_budget = 1000000000ULL) {
    validate_unimodular(gm);
    if (max_norm < 1) throw std::invalid_argument("max_norm must be >= 1");
    detail::LdlForm f = detail::ldl_decompose(gm);
    // cheap candidate-count estimate to refuse absurd requests up front
    double estimate = 1.0;
    for (const auto& d : f.d) {
        const double dd = numerator(d).convert_to<double>() / denominator(d).convert_to<double>();
        estimate *= 2.0 * std::sqrt(static_cast<double>(max_norm) / dd) + 1.0;
        if (estimate > 1e18) break;
    }
    if (estimate > static_cast<double>(node_budget))
        throw enumeration_budget_error("estimated candidate count exceeds enumeration budget");
    detail::EnumState st;
    st.f = &f;
    st.n = gm.n;
    st.max_norm = max_norm;
    st.counts.assign(static_cast<std::size_t>(max_norm) + 1, Int(0));
    st.x.assign(static_cast<std::size_t>(gm.n), 0);
    st.budget = node_budget;
    detail::enumerate_level(st, gm.n - 1, Rational(max_norm), true);
    ThetaCoefficients out;
    out.counts = std::move(st.counts);
    out.cut = max_norm;
    return out;
}

} // namespace latsec

#endif
