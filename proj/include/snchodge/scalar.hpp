#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace snchodge {

using Rational = mpq_class;

// Gaussian rational a + b*i with arbitrary-precision rational parts.
// All arithmetic is exact; equality is exact.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() : re(0), im(0) {}
    Scalar(long v) : re(v), im(0) {}
    Scalar(const Rational& r) : re(r), im(0) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar unit_i() { return Scalar(Rational(0), Rational(1)); }
    static Scalar of(long num, long den) {
        Rational r(num, den);
        r.canonicalize();
        return Scalar(r);
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }
    Rational norm() const { return re * re + im * im; }

    Scalar operator-() const { return Scalar(-re, -im); }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::domain_error("scalar division by zero");
        Rational n = o.norm();
        Rational r = (re * o.re + im * o.im) / n;
        Rational i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Sign of the real part; only meaningful for real scalars.
    int sign() const {
        if (!is_real()) throw std::domain_error("sign of non-real scalar");
        return sgn(re);
    }

    // Canonical form "a/b+c/d*i": lowest terms, explicit denominators and
    // explicit sign on the imaginary term.
    std::string str() const;

    // Accepts the canonical form as well as bare rationals ("3", "-1/2"),
    // bare imaginary terms ("i", "-2/3*i") and sums thereof.
    static Scalar parse(const std::string& text);
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace snchodge
