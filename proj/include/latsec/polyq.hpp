#ifndef LATSEC_POLYQ_HPP
#define LATSEC_POLYQ_HPP

// Univariate polynomials over the exact rationals. This is the carrier of the
// secrecy denominator D(z) and everything the certified decision procedure
// touches, so every operation here is exact; no floating point.

#include "latsec/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latsec {

class PolyQ {
public:
    PolyQ() = default;
    PolyQ(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }
    explicit PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static PolyQ zero() { return PolyQ{}; }
    static PolyQ constant(const Rational& a) { return PolyQ{a}; }
    // c0 + c1*z
    static PolyQ linear(const Rational& c0, const Rational& c1) { return PolyQ{c0, c1}; }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Rational>& coefficients() const { return c_; }

    Rational coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : Rational(0);
    }

    Rational leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Real eval_real(const Real& x) const {
        Real acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_real(*it);
        return acc;
    }

    int sign_at(const Rational& x) const {
        Rational v = eval(x);
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    }

    PolyQ derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return PolyQ(std::move(d));
    }

    PolyQ operator-() const {
        std::vector<Rational> r(c_);
        for (auto& x : r) x = -x;
        return PolyQ(std::move(r));
    }

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return PolyQ(std::move(r));
    }

    friend PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + (-b); }

    friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return PolyQ(std::move(r));
    }

    friend PolyQ operator*(const Rational& s, const PolyQ& p) {
        std::vector<Rational> r(p.c_);
        for (auto& x : r) x *= s;
        return PolyQ(std::move(r));
    }

    PolyQ pow(unsigned e) const {
        PolyQ result = constant(1);
        PolyQ base = *this;
        while (e) {
            if (e & 1u) result = result * base;
            base = base * base;
            e >>= 1u;
        }
        return result;
    }

    // Exact quotient and remainder; divisor must be nonzero.
    friend std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Rational> rem(a.c_);
        std::vector<Rational> quot;
        int db = b.degree();
        if (static_cast<int>(rem.size()) - 1 >= db)
            quot.assign(rem.size() - db, Rational(0));
        while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (static_cast<int>(rem.size()) - 1 < db) break;
            Rational f = rem.back() / b.c_.back();
            std::size_t shift = rem.size() - 1 - static_cast<std::size_t>(db);
            quot[shift] = f;
            for (std::size_t i = 0; i < b.c_.size(); ++i) rem[shift + i] -= f * b.c_[i];
            rem.pop_back();
        }
        return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
    }

    // Divides exactly, throwing if a remainder is left.
    PolyQ divide_exact(const PolyQ& b) const {
        auto [q, r] = divmod(*this, b);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }

    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

    // Rescales so the coefficients are coprime integers with positive leading
    // coefficient carried over from the sign of the input. The scaling factor
    // is positive, so sign sequences (Sturm) are unaffected.
    PolyQ primitive_part() const {
        if (is_zero()) return zero();
        Int den_lcm = 1;
        for (const auto& x : c_) den_lcm = lcm(den_lcm, denominator(x));
        Int num_gcd = 0;
        for (const auto& x : c_) num_gcd = gcd(num_gcd, numerator(x) * (den_lcm / denominator(x)));
        Rational scale(den_lcm, num_gcd);
        std::vector<Rational> r(c_);
        for (auto& x : r) x *= scale;
        return PolyQ(std::move(r));
    }

    // Monomial-basis rendering, e.g. "1 - 3*z + 3/16*z^2 - z^3".
    std::string to_string(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const Rational& a = c_[i];
            if (a == 0) continue;
            Rational mag = a < 0 ? Rational(-a) : a;
            if (first) {
                if (a < 0) os << "-";
                first = false;
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            bool unit = (mag == 1);
            if (i == 0 || !unit) os << rational_to_string(mag);
            if (i > 0) {
                if (!unit) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// gcd by the Euclidean algorithm, returned as a primitive polynomial.
inline PolyQ poly_gcd(PolyQ a, PolyQ b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = r.is_zero() ? PolyQ::zero() : r.primitive_part();
    }
    return a;
}

// P with all repeated factors collapsed to multiplicity one.
inline PolyQ squarefree_part(const PolyQ& p) {
    if (p.degree() <= 0) return p;
    PolyQ g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return p.divide_exact(g);
}

} // namespace latsec

#endif
