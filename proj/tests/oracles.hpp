#ifndef LATSEC_TESTS_ORACLES_HPP
#define LATSEC_TESTS_ORACLES_HPP

// Test-only oracles, deliberately independent of the library's search and
// counting paths: an unpruned box scan for lattice vector counts and a
// sign-scan root counter for polynomials.

#include "latsec/lattice.hpp"
#include "latsec/polyq.hpp"

#include <cmath>
#include <vector>

namespace latsec::testing {

// exact determinant by rational elimination
inline Rational det_exact(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

// (G^{-1})_{ii} as an exact rational via cofactor / determinant.
inline Rational inverse_diagonal_entry(const GramMatrix& g, int i) {
    std::vector<std::vector<Rational>> full;
    for (int r = 0; r < g.n; ++r) {
        std::vector<Rational> row;
        for (int c = 0; c < g.n; ++c) row.emplace_back(g.at(r, c));
        full.push_back(std::move(row));
    }
    std::vector<std::vector<Rational>> sub;
    for (int r = 0; r < g.n; ++r) {
        if (r == i) continue;
        std::vector<Rational> row;
        for (int c = 0; c < g.n; ++c) {
            if (c == i) continue;
            row.emplace_back(g.at(r, c));
        }
        sub.push_back(std::move(row));
    }
    if (sub.empty()) return Rational(1) / det_exact(full);
    return det_exact(sub) / det_exact(full);
}

// Unpruned box scan. Per-coordinate ranges come from the duality bound
// |x_i| <= sqrt(max_norm * (G^{-1})_{ii}), exact and rigorous, so the box
// provably contains every vector of norm <= max_norm.
inline std::vector<long long> box_counts(const GramMatrix& g, int max_norm) {
    const int n = g.n;
    std::vector<long> bound(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Rational m = Rational(max_norm) * inverse_diagonal_entry(g, i);
        long b = static_cast<long>(std::sqrt(numerator(m).convert_to<double>() /
                                             denominator(m).convert_to<double>())) +
                 2;
        while (Rational(b) * Rational(b) > m) --b;
        bound[static_cast<std::size_t>(i)] = b;
    }
    std::vector<long long> gi(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            gi[static_cast<std::size_t>(i * n + j)] = g.at(i, j).convert_to<long long>();
    std::vector<long long> counts(static_cast<std::size_t>(max_norm) + 1, 0);
    std::vector<long long> x(static_cast<std::size_t>(n), 0);
    // norm accumulated incrementally: assigning x_i adds
    // g_ii x_i^2 + 2 x_i sum_{j<i} g_ij x_j
    auto rec = [&](auto&& self, int i, long long partial) -> void {
        if (i == n) {
            if (partial <= max_norm) counts[static_cast<std::size_t>(partial)] += 1;
            return;
        }
        long long cross = 0;
        for (int j = 0; j < i; ++j)
            cross += gi[static_cast<std::size_t>(i * n + j)] * x[static_cast<std::size_t>(j)];
        const long b = bound[static_cast<std::size_t>(i)];
        for (long v = -b; v <= b; ++v) {
            x[static_cast<std::size_t>(i)] = v;
            const long long add = gi[static_cast<std::size_t>(i * n + i)] * v * v + 2 * v * cross;
            self(self, i + 1, partial + add);
        }
        x[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0, 0);
    return counts;
}

inline PolyQ poly_from_roots(const std::vector<Rational>& roots) {
    PolyQ p = PolyQ::constant(1);
    for (const auto& r : roots) p = p * PolyQ::linear(-r, Rational(1));
    return p;
}

// Sign-change scan (plus exact zero hits) over a uniform grid. Counts
// distinct real roots when they are simple and separated by more than the
// sample spacing.
inline int scan_count(const PolyQ& p, const Rational& lo, const Rational& hi, int samples) {
    int count = 0;
    int last = 0;
    for (int i = 0; i <= samples; ++i) {
        const Rational x = lo + (hi - lo) * Rational(i, samples);
        const int s = p.sign_at(x);
        if (s == 0) {
            ++count;  // exact hit
            last = 0; // the flanking sign change is the same root
            continue;
        }
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

} // namespace latsec::testing

#endif
