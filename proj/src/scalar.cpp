#include "qcramer/scalar.hpp"

#include "qcramer/errors.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <string>
#include <system_error>

namespace qcramer {

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::string_view why) {
    throw Error(ErrorKind::parse, "cannot parse '" + std::string(text) + "': " + std::string(why));
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Length of the unsigned numeric literal at the start of `s`: digits with an
// optional fraction, optional exponent and optional `/denominator`.
std::size_t scan_number(std::string_view s) {
    std::size_t pos = 0;
    auto digits = [&] {
        while (pos < s.size() && (is_digit(s[pos]) || s[pos] == '.')) {
            ++pos;
        }
    };
    auto exponent = [&] {
        if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
            std::size_t look = pos + 1;
            if (look < s.size() && (s[look] == '+' || s[look] == '-')) {
                ++look;
            }
            if (look < s.size() && is_digit(s[look])) {
                pos = look;
                while (pos < s.size() && is_digit(s[pos])) {
                    ++pos;
                }
            }
        }
    };
    digits();
    if (pos == 0) {
        return 0;
    }
    exponent();
    if (pos < s.size() && s[pos] == '/') {
        const std::size_t slash = pos++;
        const std::size_t start = pos;
        digits();
        if (pos == start) {
            return slash;
        }
        exponent();
    }
    return pos;
}

// Exact value of an unsigned decimal literal such as `12.5e-3`.
Rational exact_decimal(std::string_view full, std::string_view s) {
    mpz_class mantissa = 0;
    long scale = 0;
    bool seen_dot = false;
    bool any_digit = false;
    std::size_t pos = 0;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (is_digit(c)) {
            mantissa = mantissa * 10 + (c - '0');
            any_digit = true;
            if (seen_dot) {
                --scale;
            }
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    if (!any_digit) {
        parse_fail(full, "expected digits");
    }
    if (pos < s.size()) {
        if (s[pos] != 'e' && s[pos] != 'E') {
            parse_fail(full, "unexpected character in number");
        }
        long e = 0;
        std::string_view rest = s.substr(pos + 1);
        if (!rest.empty() && rest.front() == '+') {
            rest.remove_prefix(1);
        }
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), e);
        if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
            parse_fail(full, "bad exponent");
        }
        scale += e;
    }
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rational out = scale < 0 ? Rational(mantissa, ten_pow) : Rational(mantissa * ten_pow);
    out.canonicalize();
    return out;
}

double float_literal(std::string_view full, std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        parse_fail(full, "bad floating-point literal");
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

std::string format_coefficient(const Rational& v) { return v.get_str(); }

std::string format_coefficient(double v) {
    if (v == 0.0) {
        return "0";
    }
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), ptr);
}

template <Coefficient T>
T parse_coefficient(std::string_view text) {
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty() || scan_number(s) != s.size()) {
        parse_fail(text, "not a number");
    }
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    if constexpr (is_exact_v<T>) {
        Rational v = exact_decimal(text, num);
        if (slash != std::string_view::npos) {
            const Rational den = exact_decimal(text, s.substr(slash + 1));
            if (den == 0) {
                parse_fail(text, "zero denominator");
            }
            v /= den;
        }
        return negative ? Rational(-v) : v;
    } else {
        double v = float_literal(text, num);
        if (slash != std::string_view::npos) {
            const double den = float_literal(text, s.substr(slash + 1));
            if (den == 0.0) {
                parse_fail(text, "zero denominator");
            }
            v /= den;
        }
        return negative ? -v : v;
    }
}

template <Coefficient T>
std::string format(const Quaternion<T>& q) {
    std::string out;
    auto append = [&out](std::string term) {
        if (!out.empty() && term.front() != '-') {
            out += '+';
        }
        out += term;
    };
    if (q.w != 0) {
        append(format_coefficient(q.w));
    }
    const std::array<std::pair<const T*, char>, 3> parts{{{&q.x, 'i'}, {&q.y, 'j'}, {&q.z, 'k'}}};
    for (const auto& [coeff, unit] : parts) {
        if (*coeff == 0) {
            continue;
        }
        std::string c;
        if (*coeff == 1) {
            c.clear();
        } else if (*coeff == -1) {
            c = "-";
        } else {
            c = format_coefficient(*coeff);
        }
        append(c + unit);
    }
    return out.empty() ? std::string("0") : out;
}

template <Coefficient T>
Quaternion<T> parse_quaternion(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) {
        parse_fail(text, "empty quaternion");
    }
    std::array<T, 4> coeffs{T(0), T(0), T(0), T(0)};
    std::array<bool, 4> seen{};
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (!first) {
            parse_fail(text, "terms must be joined by + or -");
        }
        const std::size_t len = scan_number(s.substr(pos));
        std::string_view number = s.substr(pos, len);
        pos += len;
        int slot = 0;
        if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k')) {
            slot = 1 + (s[pos] - 'i');
            ++pos;
        }
        if (number.empty() && slot == 0) {
            parse_fail(text, "empty term");
        }
        if (seen[slot]) {
            parse_fail(text, "repeated component");
        }
        seen[slot] = true;
        T value = number.empty() ? T(1) : parse_coefficient<T>(number);
        coeffs[slot] = negative ? T(-value) : value;
        first = false;
    }
    return {coeffs[0], coeffs[1], coeffs[2], coeffs[3]};
}

template Rational parse_coefficient<Rational>(std::string_view);
template double parse_coefficient<double>(std::string_view);
template std::string format<Rational>(const Quaternion<Rational>&);
template std::string format<double>(const Quaternion<double>&);
template Quaternion<Rational> parse_quaternion<Rational>(std::string_view);
template Quaternion<double> parse_quaternion<double>(std::string_view);

}  // namespace qcramer
