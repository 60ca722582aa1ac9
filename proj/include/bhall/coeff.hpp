#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "bhall/errors.hpp"

namespace bhall {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Element rat + rad*sqrt(q) of Q(sqrt q), q a non-square positive integer.
// The representation is unique, so equality is componentwise. Addition is
// q-independent; multiplication and inversion take q explicitly.
struct Coefficient {
    Rational rat;
    Rational rad;

    Coefficient() = default;
    explicit Coefficient(Rational a, Rational b = 0) : rat(std::move(a)), rad(std::move(b)) {}
    static Coefficient zero() { return Coefficient{}; }
    static Coefficient one() { return Coefficient{Rational(1)}; }

    bool is_zero() const { return rat == 0 && rad == 0; }
    bool is_rational() const { return rad == 0; }

    friend bool operator==(const Coefficient&, const Coefficient&) = default;

    Coefficient& operator+=(const Coefficient& o) {
        rat += o.rat;
        rad += o.rad;
        return *this;
    }
    Coefficient& operator-=(const Coefficient& o) {
        rat -= o.rat;
        rad -= o.rad;
        return *this;
    }
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator-(const Coefficient& a) { return Coefficient{-a.rat, -a.rad}; }

    std::string str() const {
        std::string s = rat.str();
        if (rad != 0) s += (rad > 0 ? "+" : "") + rad.str() + "*v";
        return s;
    }
};

inline Coefficient coeff_mul(const Coefficient& a, const Coefficient& b, int q) {
    return Coefficient{a.rat * b.rat + a.rad * b.rad * q, a.rat * b.rad + a.rad * b.rat};
}

// (a + b v)^{-1} = (a - b v) / (a^2 - b^2 q); the norm vanishes only at 0
// because q is not a rational square.
inline Coefficient coeff_inv(const Coefficient& c, int q) {
    Rational n = c.rat * c.rat - c.rad * c.rad * q;
    check_internal(n != 0, "coeff_inv: zero element");
    return Coefficient{c.rat / n, -c.rad / n};
}

inline Coefficient coeff_div(const Coefficient& a, const Coefficient& b, int q) {
    return coeff_mul(a, coeff_inv(b, q), q);
}

// v^n with v = sqrt(q): rational for even n, rational multiple of v for odd n.
inline Coefficient v_power(long long n, int q) {
    long long k = n >= 0 ? n / 2 : -((-n + 1) / 2);  // floor(n/2)
    bool odd = (n % 2) != 0;
    Rational qp;
    if (k >= 0) {
        qp = Rational(boost::multiprecision::pow(Integer(q), static_cast<unsigned>(k)));
    } else {
        qp = Rational(Integer(1), boost::multiprecision::pow(Integer(q), static_cast<unsigned>(-k)));
    }
    // n odd: v^n = q^{(n-1)/2} * v, and (n-1)/2 == floor(n/2) for odd n.
    return odd ? Coefficient{Rational(0), qp} : Coefficient{qp};
}

inline Coefficient operator*(const Rational& r, Coefficient c) {
    c.rat *= r;
    c.rad *= r;
    return c;
}

}  // namespace bhall
