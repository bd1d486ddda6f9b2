#ifndef HYPERCONE_RATIONAL_HPP
#define HYPERCONE_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace hypercone {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

// "p/q" (or "p" when q == 1), always with positive denominator
std::string rat_str(const Rational& q);

// accepts "p", "p/q", optional sign, optional decimal point ("1.5" -> 3/2)
Rational parse_rat(const std::string& s);

Rational rat_abs(const Rational& q);

// Complex number with exact rational real and imaginary parts.
struct CRational {
    Rational re, im;

    CRational() : re(0), im(0) {}
    CRational(Rational r) : re(std::move(r)), im(0) {}
    CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    CRational(long r) : re(r), im(0) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    CRational conj() const { return {re, -im}; }

    friend CRational operator+(const CRational& a, const CRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend CRational operator-(const CRational& a, const CRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend CRational operator-(const CRational& a) { return {-a.re, -a.im}; }
    friend CRational operator*(const CRational& a, const CRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CRational operator/(const CRational& a, const CRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (sgn(n) == 0) throw std::domain_error("complex division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    CRational& operator+=(const CRational& b) { re += b.re; im += b.im; return *this; }
    CRational& operator-=(const CRational& b) { re -= b.re; im -= b.im; return *this; }
    CRational& operator*=(const CRational& b) { *this = *this * b; return *this; }
    friend bool operator==(const CRational& a, const CRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const CRational& a, const CRational& b) { return !(a == b); }

    double re_d() const { return re.get_d(); }
    double im_d() const { return im.get_d(); }
};

// "a", "bi", "(a+bi)" forms, parseable back by the polynomial grammar
std::string crat_str(const CRational& c);

} // namespace hypercone

#endif
