#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include <gmpxx.h>

#include "dirichlet/errors.hpp"

namespace dirichlet {

using Rational = mpq_class;

enum class ScalarMode { exact, floating };

inline std::string_view to_string(ScalarMode mode) {
    return mode == ScalarMode::exact ? "exact" : "float";
}

inline ScalarMode parse_mode(std::string_view s) {
    if (s == "exact") return ScalarMode::exact;
    if (s == "float") return ScalarMode::floating;
    throw DomainError("unknown scalar mode '" + std::string(s) + "'");
}

// Absolute tolerance for equality tests in float mode.
inline constexpr double float_tolerance = 1e-12;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "a" or "a/b" (decimal, arbitrary precision) into a canonical rational.
inline Rational parse_rational(std::string_view num, std::string_view den = "1") {
    Rational q;
    mpz_class n, d;
    if (n.set_str(std::string(num), 10) != 0 || d.set_str(std::string(den), 10) != 0)
        throw DomainError("malformed rational '" + std::string(num) + "/" + std::string(den) + "'");
    if (d == 0) throw DomainError("zero denominator");
    q = Rational(n, d);
    q.canonicalize();
    return q;
}

inline Rational parse_rational_text(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_rational(text);
    return parse_rational(text.substr(0, slash), text.substr(slash + 1));
}

// One value of an arithmetical function: an exact rational or a double.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(Rational q) : value_(std::move(q)) { std::get<Rational>(value_).canonicalize(); }
    Scalar(double x) : value_(x) {}
    Scalar(int x) : value_(Rational(x)) {}
    Scalar(long x) : value_(Rational(x)) {}

    static Scalar exact(long num, long den = 1) { return Scalar(make_rational(num, den)); }

    ScalarMode mode() const noexcept {
        return std::holds_alternative<Rational>(value_) ? ScalarMode::exact : ScalarMode::floating;
    }
    bool is_exact() const noexcept { return mode() == ScalarMode::exact; }

    const Rational& rational() const {
        if (auto* q = std::get_if<Rational>(&value_)) return *q;
        throw ModeMismatch("scalar is in float mode");
    }
    double real() const {
        if (auto* x = std::get_if<double>(&value_)) return *x;
        throw ModeMismatch("scalar is in exact mode");
    }
    double to_double() const {
        if (auto* q = std::get_if<Rational>(&value_)) return q->get_d();
        return std::get<double>(value_);
    }

    bool is_zero() const {
        if (auto* q = std::get_if<Rational>(&value_)) return sgn(*q) == 0;
        return std::get<double>(value_) == 0.0;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return combine(a, b, [](auto& x, auto& y) { return x + y; }); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return combine(a, b, [](auto& x, auto& y) { return x - y; }); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { return combine(a, b, [](auto& x, auto& y) { return x * y; }); }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw DomainError("division by zero scalar");
        return combine(a, b, [](auto& x, auto& y) { return x / y; });
    }
    Scalar operator-() const {
        if (is_exact()) return Scalar(Rational(-std::get<Rational>(value_)));
        return Scalar(-std::get<double>(value_));
    }

    // Exact comparison; mismatched modes are never equal.
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

    // Exact equality in exact mode, |a - b| <= tolerance in float mode.
    bool approx_equal(const Scalar& other, double tol = float_tolerance) const {
        if (mode() != other.mode()) throw ModeMismatch();
        if (is_exact()) return rational() == other.rational();
        return std::abs(real() - other.real()) <= tol;
    }

    std::string to_string() const {
        if (auto* q = std::get_if<Rational>(&value_)) return q->get_str();
        std::ostringstream os;
        os.precision(17);
        os << std::get<double>(value_);
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    template <class Op>
    static Scalar combine(const Scalar& a, const Scalar& b, Op op) {
        if (a.mode() != b.mode()) throw ModeMismatch();
        if (a.is_exact()) return Scalar(Rational(op(std::get<Rational>(a.value_), std::get<Rational>(b.value_))));
        return Scalar(static_cast<double>(op(std::get<double>(a.value_), std::get<double>(b.value_))));
    }

    std::variant<Rational, double> value_;
};

} // namespace dirichlet
