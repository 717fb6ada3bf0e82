#pragma once

#include "qcramer/errors.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

namespace qcramer {

using Rational = mpq_class;

/// The two coefficient rings a quaternion can be built over. Mixing them is
/// rejected at compile time: Quaternion<Rational> and Quaternion<double> are
/// unrelated types.
template <class T>
concept Coefficient = std::same_as<T, Rational> || std::same_as<T, double>;

enum class Backend { rational, float64 };

template <Coefficient T>
constexpr Backend backend_of() {
    if constexpr (std::same_as<T, Rational>) {
        return Backend::rational;
    } else {
        return Backend::float64;
    }
}

template <Coefficient T>
constexpr bool is_exact_v = std::same_as<T, Rational>;

inline constexpr double kDefaultRelTol = 1e-9;

inline double to_double(const Rational& v) { return v.get_d(); }
inline double to_double(double v) { return v; }

inline Rational canonical(Rational v) {
    v.canonicalize();
    return v;
}

/// Coefficient equality: exact on rationals, relative tolerance on doubles.
inline bool coeff_equal(const Rational& a, const Rational& b, double = kDefaultRelTol) { return a == b; }
inline bool coeff_equal(double a, double b, double rel_tol = kDefaultRelTol) {
    if (a == b) {
        return true;
    }
    return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

template <Coefficient T>
struct Quaternion {
    T w{0};
    T x{0};
    T y{0};
    T z{0};

    Quaternion() = default;
    explicit Quaternion(T real) : w(std::move(real)) {}
    Quaternion(T w_, T x_, T y_, T z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    static Quaternion zero() { return Quaternion{}; }
    static Quaternion one() { return Quaternion(T(1)); }
    static Quaternion i() { return {T(0), T(1), T(0), T(0)}; }
    static Quaternion j() { return {T(0), T(0), T(1), T(0)}; }
    static Quaternion k() { return {T(0), T(0), T(0), T(1)}; }

    bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
    bool is_real() const { return x == 0 && y == 0 && z == 0; }

    Quaternion& operator+=(const Quaternion& o) {
        w += o.w;
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& o) {
        w -= o.w;
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

    friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend Quaternion operator-(const Quaternion& a) { return {T(-a.w), T(-a.x), T(-a.y), T(-a.z)}; }

    // Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {T(p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z),
                T(p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y),
                T(p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x),
                T(p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w)};
    }
    friend Quaternion operator*(const T& s, const Quaternion& q) {
        return {T(s * q.w), T(s * q.x), T(s * q.y), T(s * q.z)};
    }
    friend Quaternion operator*(const Quaternion& q, const T& s) { return s * q; }
    friend Quaternion operator/(const Quaternion& q, const T& s) {
        return {T(q.w / s), T(q.x / s), T(q.y / s), T(q.z / s)};
    }

    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

template <Coefficient T>
Quaternion<T> multiply(const Quaternion<T>& p, const Quaternion<T>& q) {
    return p * q;
}

template <Coefficient T>
Quaternion<T> conjugate(const Quaternion<T>& q) {
    return {q.w, T(-q.x), T(-q.y), T(-q.z)};
}

template <Coefficient T>
T norm_sq(const Quaternion<T>& q) {
    return T(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
}

/// Multiplicative inverse conj(q)/|q|^2. The caller guarantees q != 0.
template <Coefficient T>
Quaternion<T> reciprocal(const Quaternion<T>& q) {
    if (q.is_zero()) {
        throw Error(ErrorKind::domain, "reciprocal of zero quaternion");
    }
    return conjugate(q) / norm_sq(q);
}

template <Coefficient T>
bool approx_equal(const Quaternion<T>& a, const Quaternion<T>& b, double rel_tol = kDefaultRelTol) {
    if constexpr (is_exact_v<T>) {
        return a == b;
    } else {
        if (a == b) {
            return true;
        }
        const double scale = std::max(norm_sq(a), norm_sq(b));
        return norm_sq(a - b) <= rel_tol * rel_tol * scale;
    }
}

template <Coefficient T>
Quaternion<double> to_float(const Quaternion<T>& q) {
    return {to_double(q.w), to_double(q.x), to_double(q.y), to_double(q.z)};
}

/// Formats a coefficient: rationals as `p` or `p/q`, doubles in shortest
/// round-trip form.
std::string format_coefficient(const Rational& v);
std::string format_coefficient(double v);

template <Coefficient T>
T parse_coefficient(std::string_view text);

/// Text form `a+bi+cj+dk`, zero terms omitted, unit coefficients written as
/// bare `i`/`-j`, and `0` for the zero quaternion.
template <Coefficient T>
std::string format(const Quaternion<T>& q);

/// Inverse of format(). Accepts any term order and decimal coefficients; a
/// repeated unit is a parse error.
template <Coefficient T>
Quaternion<T> parse_quaternion(std::string_view text);

extern template Rational parse_coefficient<Rational>(std::string_view);
extern template double parse_coefficient<double>(std::string_view);
extern template std::string format<Rational>(const Quaternion<Rational>&);
extern template std::string format<double>(const Quaternion<double>&);
extern template Quaternion<Rational> parse_quaternion<Rational>(std::string_view);
extern template Quaternion<double> parse_quaternion<double>(std::string_view);

}  // namespace qcramer
