#ifndef LATSEC_THETA_HPP
#define LATSEC_THETA_HPP

// High-precision evaluation of the theta constants theta2(yi), theta3(yi),
// theta4(yi) on the imaginary axis, through two independent formulas (the
// defining sums and the infinite products) for cross-validation, plus the
// derived quantity z(y) = theta2^4 theta4^4 / theta3^8.
//
// The nome is q = e^{-pi y}. All series and product truncations carry
// explicit geometric tail bounds, so a result is within the requested
// absolute precision. Internals run in ~50 significant decimal digits;
// requested precisions below 1e-38 are rejected rather than silently
// unmet. For y < 0.1 the modular transformation
//     theta2(yi) = theta4(i/y)/sqrt(y)   (and 3<->3, 4<->2)
// maps the evaluation to 1/y > 10 where the series is short.

#include "latsec/rational.hpp"

#include <stdexcept>

namespace latsec {

enum class ThetaKind { Theta2, Theta3, Theta4 };

struct EvalRequest {
    Real y;
    Real precision;
};

namespace detail {

inline const Real& pi_real() {
    static const Real pi = acos(Real(-1));
    return pi;
}

inline void validate(const EvalRequest& req) {
    if (!(req.y > 0)) throw std::domain_error("theta evaluation requires y > 0");
    if (!(req.precision > 0)) throw std::domain_error("theta evaluation requires precision > 0");
    if (req.precision < Real("1e-38"))
        throw std::domain_error("requested precision is below the supported internal precision");
}

// Defining sums, no transformation. Valid for any q in (0,1); the tail of
// sum q^{m^2} past m = n is at most q^{(n+1)^2}/(1 - q^{2n+3}).
inline Real theta_sum_raw(ThetaKind kind, const Real& y, const Real& eps) {
    const Real q = exp(-pi_real() * y);
    if (kind == ThetaKind::Theta2) {
        // 2 sum_{n>=0} q^{(n+1/2)^2}
        Real sum = 0;
        Real term = pow(q, Real(0.25)); // q^{1/4}, then multiply up by q^{2n}
        unsigned n = 0;
        while (true) {
            sum += term;
            // term for n+1 is term * q^{2(n+1)}
            term *= pow(q, 2 * static_cast<int>(n) + 2);
            const Real tail = 2 * term / (1 - pow(q, 2 * static_cast<int>(n) + 4));
            ++n;
            if (tail < eps / 2 && 2 * term < eps / (4 * Real(n + 1))) break;
            if (n > 100000) throw std::runtime_error("theta series failed to converge");
        }
        return 2 * sum;
    }
    const bool alternating = (kind == ThetaKind::Theta4);
    Real sum = 1;
    Real qpow = 1; // q^{n^2}
    unsigned n = 0;
    while (true) {
        ++n;
        qpow *= pow(q, 2 * static_cast<int>(n) - 1); // q^{n^2} from q^{(n-1)^2}
        Real term = 2 * qpow;
        sum += (alternating && (n % 2 == 1)) ? -term : term;
        const Real tail = 2 * qpow * pow(q, 2 * static_cast<int>(n) + 1) /
                          (1 - pow(q, 2 * static_cast<int>(n) + 3));
        if (tail < eps / 2 && qpow < eps / (4 * Real(n + 1))) break;
        if (n > 100000) throw std::runtime_error("theta series failed to converge");
    }
    return sum;
}

// Product representations, no transformation:
//   theta2 = 2 q^{1/4} prod (1-q^{2n})(1+q^{2n})^2
//   theta3 =           prod (1-q^{2n})(1+q^{2n-1})^2
//   theta4 =           prod (1-q^{2n})(1-q^{2n-1})^2
// Remaining factors past n = N multiply the value by exp(t) with
// |t| <= 6 q^{2N+1}/(1-q^2) once q^{2N+1} < 1/2.
inline Real theta_product_raw(ThetaKind kind, const Real& y, const Real& eps) {
    const Real q = exp(-pi_real() * y);
    const Real q2 = q * q;
    Real value = 1;
    Real q2n = 1;      // q^{2n}
    Real qodd = 1 / q; // becomes q^{2n-1} after the first multiply
    unsigned n = 0;
    while (true) {
        ++n;
        q2n *= q2;
        qodd *= q2;
        Real factor = 1 - q2n;
        switch (kind) {
        case ThetaKind::Theta2: factor *= (1 + q2n) * (1 + q2n); break;
        case ThetaKind::Theta3: factor *= (1 + qodd) * (1 + qodd); break;
        case ThetaKind::Theta4: factor *= (1 - qodd) * (1 - qodd); break;
        }
        value *= factor;
        // remaining factors multiply the value by exp(t) with
        // |t| <= 6 q^{2n+1}/(1-q^2) once q^{2n+1} < 1/2
        const Real q_next = q2n * q;
        if (q_next < Real(0.5)) {
            const Real log_tail = 6 * q_next / (1 - q2);
            if (log_tail < Real(0.5) && 4 * abs(value) * log_tail < eps / 2 &&
                abs(1 - factor) < eps / 10)
                break;
        }
        if (n > 200000) throw std::runtime_error("theta product failed to converge");
    }
    if (kind == ThetaKind::Theta2) value *= 2 * pow(q, Real(0.25));
    return value;
}

inline ThetaKind transform_swap(ThetaKind kind) {
    switch (kind) {
    case ThetaKind::Theta2: return ThetaKind::Theta4;
    case ThetaKind::Theta4: return ThetaKind::Theta2;
    default: return ThetaKind::Theta3;
    }
}

template <typename RawEval>
inline Real eval_with_transform(ThetaKind kind, const EvalRequest& req, RawEval raw) {
    validate(req);
    if (req.y < Real("0.1")) {
        const Real root_y = sqrt(req.y);
        const Real inner_eps = req.precision * root_y / 2;
        return raw(transform_swap(kind), 1 / req.y, inner_eps) / root_y;
    }
    return raw(kind, req.y, req.precision / 2);
}

} // namespace detail

// Sum-form evaluation of theta2/theta3/theta4 at tau = yi, within
// req.precision in absolute error. Result is positive.
inline Real eval_theta(ThetaKind kind, const EvalRequest& req) {
    return detail::eval_with_transform(kind, req, [](ThetaKind k, const Real& y, const Real& e) {
        return detail::theta_sum_raw(k, y, e);
    });
}

// Product-form evaluation; same contract, independent formula.
inline Real eval_theta_product(ThetaKind kind, const EvalRequest& req) {
    return detail::eval_with_transform(kind, req, [](ThetaKind k, const Real& y, const Real& e) {
        return detail::theta_product_raw(k, y, e);
    });
}

// z(y) = theta2^4 theta4^4 / theta3^8, the variable the secrecy denominator
// is a polynomial in. Lies in (0, 1/4] with the maximum 1/4 at y = 1.
inline Real z_of_y(const Real& y, const Real& precision = Real("1e-12")) {
    detail::validate({y, precision});
    Real eps_t = precision / 16;
    const Real floor_eps = Real("1e-34");
    if (eps_t > floor_eps) eps_t = floor_eps;
    const EvalRequest inner{y, eps_t};
    const Real t2 = eval_theta(ThetaKind::Theta2, inner);
    const Real t3 = eval_theta(ThetaKind::Theta3, inner);
    const Real t4 = eval_theta(ThetaKind::Theta4, inner);
    const Real t2_4 = t2 * t2 * t2 * t2;
    const Real t4_4 = t4 * t4 * t4 * t4;
    const Real t3_4 = t3 * t3 * t3 * t3;
    return (t2_4 * t4_4) / (t3_4 * t3_4);
}

// The ratio theta2 theta4 / theta3^2 computed by the closed product form
// 2 (g^{1/24} prod (1+(-g)^n))^6 with g = e^{-pi y}; used to cross-check
// the theta quotients through an unrelated formula.
inline Real theta_ratio_proof_form(const Real& y, const Real& precision = Real("1e-12")) {
    detail::validate({y, precision});
    const Real g = exp(-detail::pi_real() * y);
    Real prod = 1;
    Real gn = 1;
    unsigned n = 0;
    while (true) {
        ++n;
        gn *= g;
        prod *= (n % 2 == 1) ? (1 - gn) : (1 + gn);
        if (gn < Real(0.5)) {
            const Real log_tail = 2 * gn * g / (1 - g);
            if (24 * log_tail < precision / 8) break;
        }
        if (n > 500000) throw std::runtime_error("eta-like product failed to converge");
    }
    const Real core = pow(g, Real(1) / 24) * prod;
    return 2 * pow(core, 6);
}

// z(y) through the proof-form ratio: the 4th power of the ratio above,
// i.e. 16 g prod (1+(-g)^n)^24.
inline Real z_of_y_proof_form(const Real& y, const Real& precision = Real("1e-12")) {
    const Real r = theta_ratio_proof_form(y, precision);
    const Real r2 = r * r;
    return r2 * r2;
}

// Residuals of the three modular transformation identities
//   theta2(i/y) = sqrt(y) theta4(yi)
//   theta3(i/y) = sqrt(y) theta3(yi)
//   theta4(i/y) = sqrt(y) theta2(yi)
// and of the Jacobi identity theta2^4 + theta4^4 = theta3^4 at y. Both
// sides are evaluated by the raw defining sums (no internal use of the
// transformation, so the check is not circular).
struct TransformResiduals {
    Real theta2_side;
    Real theta3_side;
    Real theta4_side;
    Real jacobi;

    Real max() const {
        return std::max(std::max(theta2_side, theta3_side), std::max(theta4_side, jacobi));
    }
};

inline TransformResiduals transform_residuals(const Real& y, const Real& precision = Real("1e-12")) {
    detail::validate({y, precision});
    Real eps = precision / 64;
    const Real floor_eps = Real("1e-32");
    if (eps > floor_eps) eps = floor_eps;
    const Real inv_y = 1 / y;
    const Real root_y = sqrt(y);
    const Real a2 = detail::theta_sum_raw(ThetaKind::Theta2, y, eps);
    const Real a3 = detail::theta_sum_raw(ThetaKind::Theta3, y, eps);
    const Real a4 = detail::theta_sum_raw(ThetaKind::Theta4, y, eps);
    const Real b2 = detail::theta_sum_raw(ThetaKind::Theta2, inv_y, eps);
    const Real b3 = detail::theta_sum_raw(ThetaKind::Theta3, inv_y, eps);
    const Real b4 = detail::theta_sum_raw(ThetaKind::Theta4, inv_y, eps);
    TransformResiduals r;
    r.theta2_side = abs(b2 - root_y * a4);
    r.theta3_side = abs(b3 - root_y * a3);
    r.theta4_side = abs(b4 - root_y * a2);
    r.jacobi = abs(a2 * a2 * a2 * a2 + a4 * a4 * a4 * a4 - a3 * a3 * a3 * a3);
    return r;
}

// Maximum absolute residual over the four identities above.
inline Real check_transform_identities(const Real& y, const Real& precision = Real("1e-12")) {
    return transform_residuals(y, precision).max();
}

} // namespace latsec

#endif
