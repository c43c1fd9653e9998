#ifndef LATSEC_SECRECY_HPP
#define LATSEC_SECRECY_HPP

// The secrecy function Xi(y) = Theta_{Z^n}(yi) / Theta_Lambda(yi) and its
// exact denominator polynomial D(z) in z = theta2^4 theta4^4 / theta3^8:
//
//   general basis:  D(z) = sum_r (a_r / 16^r) z^r
//   even basis:     D(z) = (1-z)^{3m+k} + sum_j (b_j / 256^j) (1-z)^{3(m-j)+k} z^{2j}
//
// so Xi(y) = 1 / D(z(y)). D is kept expanded in the monomial basis, which
// is what the Sturm machinery consumes; the factored table form is
// regenerable for display. Xi can also be evaluated by summing both theta
// series directly (xi_direct), giving an independent route for
// cross-validation; its truncation carries a certified tail bound.

#include "latsec/lattice.hpp"
#include "latsec/polyq.hpp"
#include "latsec/qseries.hpp"
#include "latsec/theta.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace latsec {

inline PolyQ denom_from_ar(const BasisCoeffsGeneral& c) {
    std::vector<Rational> coeffs(c.a.size());
    Rational pow16(1);
    for (std::size_t r = 0; r < c.a.size(); ++r) {
        coeffs[r] = c.a[r] / pow16;
        pow16 *= 16;
    }
    return PolyQ(std::move(coeffs));
}

inline PolyQ denom_from_bj(const BasisCoeffsEven& c) {
    const PolyQ one_minus_z{Rational(1), Rational(-1)};
    const PolyQ z_sq{Rational(0), Rational(0), Rational(1)};
    PolyQ d = one_minus_z.pow(static_cast<unsigned>(3 * c.m + c.k));
    Rational pow256(1);
    PolyQ zpow = PolyQ::constant(1);
    for (std::size_t j = 1; j <= c.b.size(); ++j) {
        pow256 *= 256;
        zpow = zpow * z_sq;
        PolyQ term = one_minus_z.pow(static_cast<unsigned>(3 * (c.m - static_cast<int>(j)) + c.k)) * zpow;
        d = d + (c.b[j - 1] / pow256) * term;
    }
    return d;
}

// The conjectured secrecy gain 1/D(1/4), exact.
inline Rational gain_at_one(const PolyQ& d) {
    Rational v = d.eval(Rational(1, 4));
    if (v <= 0)
        throw std::invalid_argument("D(1/4) = " + rational_to_string(v) +
                                    " is not positive; not a valid secrecy denominator");
    return 1 / v;
}

enum class Provenance { FromAr, FromBj, Extremal };

struct SecrecyProfile {
    int n = 0;
    PolyQ denominator;
    Rational gain; // 1/D(1/4)
    Provenance provenance = Provenance::FromAr;
};

inline SecrecyProfile make_profile(const BasisCoeffsGeneral& c) {
    SecrecyProfile p;
    p.n = c.n;
    p.denominator = denom_from_ar(c);
    p.gain = gain_at_one(p.denominator);
    p.provenance = Provenance::FromAr;
    return p;
}

inline SecrecyProfile make_profile(const BasisCoeffsEven& c, Provenance prov = Provenance::FromBj) {
    SecrecyProfile p;
    p.n = c.n;
    p.denominator = denom_from_bj(c);
    p.gain = gain_at_one(p.denominator);
    p.provenance = prov;
    return p;
}

// Xi(y) via the polynomial route: 1/D(z(y)). The theta evaluation error is
// propagated through |D'| and checked against the requested precision.
inline Real xi_poly(const PolyQ& d, const Real& y, const Real& precision = Real("1e-12")) {
    if (!(y > 0)) throw std::domain_error("xi evaluation requires y > 0");
    Real eps_z = precision / 1024;
    const Real floor_eps = Real("1e-32");
    if (eps_z > floor_eps) eps_z = floor_eps;
    const Real z = z_of_y(y, eps_z);
    const Real dz = d.eval_real(z);
    // |d(1/D)/dz| <= B / D^2 with B an upper bound for |D'| on [0, 1/4]
    Real deriv_bound = 0;
    const PolyQ dprime = d.derivative();
    for (const auto& cc : dprime.coefficients()) deriv_bound += abs(to_real(cc));
    if (abs(dz) <= 2 * deriv_bound * eps_z)
        throw std::domain_error("denominator too close to zero for certified evaluation");
    const Real propagated = deriv_bound * eps_z / (dz * dz);
    if (!(propagated < precision))
        throw std::domain_error("requested precision unattainable at this y");
    return 1 / dz;
}

namespace detail {

// Crude but certified upper bound for Theta_Lambda(y0 i) from the fitted
// basis: sum |a_r| ub3^{n-8r} ub8^r with one-sided theta bounds.
inline Real theta_value_upper_bound(const BasisCoeffsGeneral& c, const Real& y0) {
    const EvalRequest req{y0, Real("1e-20")};
    const Real ub3 = eval_theta(ThetaKind::Theta3, req) + Real("1e-18");
    const Real t2 = eval_theta(ThetaKind::Theta2, req) + Real("1e-18");
    const Real t4 = eval_theta(ThetaKind::Theta4, req) + Real("1e-18");
    const Real ub8 = t2 * t2 * t2 * t2 * t4 * t4 * t4 * t4 / 16 + Real("1e-18");
    Real bound = 0;
    for (std::size_t r = 0; r < c.a.size(); ++r) {
        bound += abs(to_real(c.a[r])) * pow(ub3, c.n - 8 * static_cast<int>(r)) *
                 pow(ub8, static_cast<int>(r));
    }
    return bound;
}

} // namespace detail

// Xi(y) by direct summation of both theta series. The supplied counts are
// validated and extended through the fitted basis to an order M chosen so
// the discarded tail is certifiably below the requested precision: for
// 0 < q < q0, tail(q) <= (q/q0)^{M+1} Theta(q0), here with q0 = e^{-pi y/2}.
inline Real xi_direct(const ThetaCoefficients& theta, int n, const Real& y,
                      const Real& precision = Real("1e-12")) {
    if (!(y > 0)) throw std::domain_error("xi evaluation requires y > 0");
    if (!(precision > 0)) throw std::domain_error("precision must be positive");
    BasisCoeffsGeneral fitted = fit_a_basis(theta.counts, n); // throws, naming the required cut
    const Real y0 = y / 2;
    const Real big = detail::theta_value_upper_bound(fitted, y0) + 1;
    // (q/q0)^{M+1} = e^{-pi y (M+1)/2} < precision / (1024 big); the wide
    // margin absorbs the quotient scale (Xi(1) runs to ~380 at dimension 80)
    const Real pi = detail::pi_real();
    const Real m_real = 2 * log(1024 * big / precision) / (pi * y);
    if (!(m_real < Real(100000)))
        throw std::invalid_argument("requested precision needs series order beyond supported range");
    std::size_t M = m_real < 1 ? 1 : static_cast<std::size_t>(m_real.convert_to<double>()) + 2;
    if (M + 1 < theta.counts.size()) M = theta.counts.size() - 1;
    const QSeries expanded = expand_general(fitted, M + 1);
    const Real q = exp(-pi * y);
    Real denom_sum = 0;
    Real qk = 1;
    for (std::size_t k = 0; k <= M; ++k) {
        const Rational& ck = expanded.coefficients()[k];
        if (ck != 0) denom_sum += to_real(ck) * qk;
        qk *= q;
    }
    // theta3 >= 1, so an absolute theta error e gives numerator relative
    // error <= n e; budget it alongside the denominator tail
    const EvalRequest req{y, precision / (1024 * Real(n + 1))};
    const Real t3 = eval_theta(ThetaKind::Theta3, req);
    const Real numer = pow(t3, n);
    return numer / denom_sum;
}

} // namespace latsec

#endif
