#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace htower {

using Q = mpq_class;

inline Q make_q(long num, long den = 1) {
    Q q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Q& q) { return q.get_str(); }

// Gaussian rationals.
struct CQ {
    Q re, im;
    CQ() = default;
    CQ(Q r) : re(std::move(r)) {}
    CQ(long r) : re(r) {}
    CQ(Q r, Q i) : re(std::move(r)), im(std::move(i)) {}

    friend CQ operator+(const CQ& a, const CQ& b) { return {a.re + b.re, a.im + b.im}; }
    friend CQ operator-(const CQ& a, const CQ& b) { return {a.re - b.re, a.im - b.im}; }
    friend CQ operator-(const CQ& a) { return {-a.re, -a.im}; }
    friend CQ operator*(const CQ& a, const CQ& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    CQ& operator+=(const CQ& o) { return *this = *this + o; }
    CQ& operator-=(const CQ& o) { return *this = *this - o; }
    friend bool operator==(const CQ& a, const CQ& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CQ& a, const CQ& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const CQ& a) {
        return os << "(" << a.re << (a.im < 0 ? "-" : "+") << abs(a.im) << "i)";
    }
};

// Rational quaternions a + b i + c j + d k.
struct HQ {
    Q a, b, c, d;
    HQ() = default;
    HQ(Q r) : a(std::move(r)) {}
    HQ(long r) : a(r) {}
    HQ(Q a_, Q b_, Q c_, Q d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    friend HQ operator+(const HQ& x, const HQ& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
    friend HQ operator-(const HQ& x, const HQ& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
    friend HQ operator-(const HQ& x) { return {-x.a, -x.b, -x.c, -x.d}; }
    friend HQ operator*(const HQ& x, const HQ& y) {
        return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
                x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
                x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
                x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
    }
    HQ& operator+=(const HQ& o) { return *this = *this + o; }
    HQ& operator-=(const HQ& o) { return *this = *this - o; }
    friend bool operator==(const HQ& x, const HQ& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const HQ& x, const HQ& y) { return !(x == y); }
    friend std::ostream& operator<<(std::ostream& os, const HQ& x) {
        return os << "(" << x.a << "," << x.b << "," << x.c << "," << x.d << ")";
    }
};

// Per-scalar operations used by the generic matrix code.
template <class T> struct scalar_traits;

template <> struct scalar_traits<Q> {
    static constexpr const char* name = "R";
    static Q conj(const Q& x) { return x; }
    static bool is_zero(const Q& x) { return sgn(x) == 0; }
    static Q inv(const Q& x) { return Q(1) / x; }
    static Q norm(const Q& x) { return x * x; }
    static Q real(const Q& x) { return x; }
};

template <> struct scalar_traits<CQ> {
    static constexpr const char* name = "C";
    static CQ conj(const CQ& x) { return {x.re, -x.im}; }
    static bool is_zero(const CQ& x) { return sgn(x.re) == 0 && sgn(x.im) == 0; }
    static Q norm(const CQ& x) { return x.re * x.re + x.im * x.im; }
    static CQ inv(const CQ& x) {
        Q n = norm(x);
        return {x.re / n, -x.im / n};
    }
    static Q real(const CQ& x) { return x.re; }
};

template <> struct scalar_traits<HQ> {
    static constexpr const char* name = "H";
    static HQ conj(const HQ& x) { return {x.a, -x.b, -x.c, -x.d}; }
    static bool is_zero(const HQ& x) {
        return sgn(x.a) == 0 && sgn(x.b) == 0 && sgn(x.c) == 0 && sgn(x.d) == 0;
    }
    static Q norm(const HQ& x) { return x.a * x.a + x.b * x.b + x.c * x.c + x.d * x.d; }
    static HQ inv(const HQ& x) {
        Q n = norm(x);
        return {x.a / n, -x.b / n, -x.c / n, -x.d / n};
    }
    static Q real(const HQ& x) { return x.a; }
};

template <class T> T conj(const T& x) { return scalar_traits<T>::conj(x); }
template <class T> bool is_zero(const T& x) { return scalar_traits<T>::is_zero(x); }
template <class T> T inverse(const T& x) {
    if (is_zero(x)) throw std::domain_error("inverse of zero");
    return scalar_traits<T>::inv(x);
}

} // namespace htower
