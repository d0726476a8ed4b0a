#pragma once

// Truncated arithmetical functions and the ring operations on them:
// pointwise addition, Dirichlet convolution, inversion, the norm
// (least index of a nonzero value), powers and exact trial division.
//
// An ArithFunc of length N stores f(1), ..., f(N). Every operation is
// prefix-correct: (f * g)(n) only reads f and g at divisors of n, so results
// over the window 1..min(N_f, N_g) agree with the untruncated ring.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dirichlet/errors.hpp"
#include "dirichlet/scalar.hpp"

namespace dirichlet {

namespace detail {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

template <class T>
std::vector<T> pointwise_add(std::span<const T> f, std::span<const T> g) {
    const std::size_t n = std::min(f.size(), g.size());
    std::vector<T> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = f[i] + g[i];
    return out;
}

// Scatter form of sum_{ij = n} f(i) g(j); zero entries of f are skipped.
template <class T>
std::vector<T> dirichlet_convolve(std::span<const T> f, std::span<const T> g) {
    const std::size_t n = std::min(f.size(), g.size());
    std::vector<T> out(n, T(0));
    for (std::size_t i = 1; i <= n; ++i) {
        if (is_zero(f[i - 1])) continue;
        for (std::size_t j = 1; i * j <= n; ++j) {
            if (is_zero(g[j - 1])) continue;
            out[i * j - 1] += f[i - 1] * g[j - 1];
        }
    }
    return out;
}

// g(1) = 1/f(1), g(n) = -(1/f(1)) sum_{d | n, d < n} g(d) f(n/d).
// acc[n] collects the divisor sum as soon as each g(d) is final.
template <class T>
std::vector<T> dirichlet_inverse(std::span<const T> f) {
    const std::size_t n = f.size();
    const T inv_head = T(1) / f[0];
    std::vector<T> g(n, T(0));
    std::vector<T> acc(n, T(0));
    for (std::size_t d = 1; d <= n; ++d) {
        g[d - 1] = (d == 1) ? inv_head : T(-acc[d - 1] * inv_head);
        if (is_zero(g[d - 1])) continue;
        for (std::size_t k = 2; d * k <= n; ++k) {
            if (is_zero(f[k - 1])) continue;
            acc[d * k - 1] += g[d - 1] * f[k - 1];
        }
    }
    return g;
}

} // namespace detail

// Least index with a nonzero value, or the zero-function marker.
class Norm {
public:
    Norm() = default;
    explicit Norm(std::size_t index) : index_(index) {}
    static Norm zero() { return Norm(); }

    bool is_zero() const noexcept { return !index_.has_value(); }
    std::size_t value() const {
        if (!index_) throw DomainError("norm of the zero function has no index");
        return *index_;
    }
    std::string to_string() const { return index_ ? std::to_string(*index_) : std::string("zero"); }

    friend bool operator==(const Norm&, const Norm&) = default;

private:
    std::optional<std::size_t> index_;
};

class ArithFunc {
public:
    using ExactValues = std::vector<Rational>;
    using FloatValues = std::vector<double>;

    explicit ArithFunc(ExactValues values) : values_(std::move(values)) { check_length(); canonicalize(); }
    explicit ArithFunc(FloatValues values) : values_(std::move(values)) { check_length(); }

    // Builds a function from a uniform-mode scalar list; rejects empty and mixed lists.
    static ArithFunc make(const std::vector<Scalar>& values) {
        if (values.empty()) throw DomainError("an arithmetical function needs at least one value");
        const ScalarMode mode = values.front().mode();
        for (const auto& v : values)
            if (v.mode() != mode) throw ModeMismatch("mixed scalar modes in value list");
        if (mode == ScalarMode::exact) {
            ExactValues out;
            out.reserve(values.size());
            for (const auto& v : values) out.push_back(v.rational());
            return ArithFunc(std::move(out));
        }
        FloatValues out;
        out.reserve(values.size());
        for (const auto& v : values) out.push_back(v.real());
        return ArithFunc(std::move(out));
    }

    static ArithFunc from_ints(const std::vector<long>& values) {
        ExactValues out;
        out.reserve(values.size());
        for (long v : values) out.emplace_back(v);
        return ArithFunc(std::move(out));
    }

    static ArithFunc zero(std::size_t n, ScalarMode mode = ScalarMode::exact) {
        if (mode == ScalarMode::exact) return ArithFunc(ExactValues(n, Rational(0)));
        return ArithFunc(FloatValues(n, 0.0));
    }

    // The indicator of m (value 1 at m, 0 elsewhere); zero on the window when m > n.
    static ArithFunc indicator(std::size_t m, std::size_t n, ScalarMode mode = ScalarMode::exact) {
        if (m == 0) throw DomainError("indicator index must be >= 1");
        ArithFunc f = zero(n, mode);
        if (m <= n) {
            std::visit([m](auto& v) { v[m - 1] = 1; }, f.values_);
        }
        return f;
    }

    // The ring identity e.
    static ArithFunc identity(std::size_t n, ScalarMode mode = ScalarMode::exact) { return indicator(1, n, mode); }

    std::size_t size() const noexcept {
        return std::visit([](const auto& v) { return v.size(); }, values_);
    }
    ScalarMode mode() const noexcept {
        return std::holds_alternative<ExactValues>(values_) ? ScalarMode::exact : ScalarMode::floating;
    }
    bool is_exact() const noexcept { return mode() == ScalarMode::exact; }

    // f(n), 1-indexed.
    Scalar operator()(std::size_t n) const {
        check_index(n);
        return std::visit([n](const auto& v) { return Scalar(v[n - 1]); }, values_);
    }
    Scalar at(std::size_t n) const { return (*this)(n); }

    bool is_zero_at(std::size_t n) const {
        check_index(n);
        return std::visit([n](const auto& v) { return detail::is_zero(v[n - 1]); }, values_);
    }
    bool is_zero() const { return norm_index() == 0; }

    const ExactValues& exact() const {
        if (auto* v = std::get_if<ExactValues>(&values_)) return *v;
        throw ModeMismatch("function is in float mode");
    }
    const FloatValues& floating() const {
        if (auto* v = std::get_if<FloatValues>(&values_)) return *v;
        throw ModeMismatch("function is in exact mode");
    }

    std::vector<Scalar> scalars() const {
        std::vector<Scalar> out;
        out.reserve(size());
        std::visit([&out](const auto& v) { for (const auto& x : v) out.emplace_back(x); }, values_);
        return out;
    }

    // Prefix of length n (n <= size()).
    ArithFunc truncated(std::size_t n) const {
        if (n == 0 || n > size()) throw DomainError("invalid truncation length " + std::to_string(n));
        return std::visit([n](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            return ArithFunc(V(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)));
        }, values_);
    }

    // Zero-extension to length n (n >= size()).
    ArithFunc extended(std::size_t n) const {
        if (n < size()) throw DomainError("extension shorter than the function");
        return std::visit([n](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            V out(v);
            out.resize(n, typename V::value_type(0));
            return ArithFunc(std::move(out));
        }, values_);
    }

    // Same scalar values with a different length: truncation or zero-extension.
    ArithFunc resized(std::size_t n) const { return n <= size() ? truncated(n) : extended(n); }

    // 0 when all entries vanish, else the least nonzero index.
    std::size_t norm_index() const {
        return std::visit([](const auto& v) -> std::size_t {
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!detail::is_zero(v[i])) return i + 1;
            return 0;
        }, values_);
    }

    // Exact comparison; lengths and modes must agree.
    friend bool operator==(const ArithFunc& a, const ArithFunc& b) { return a.values_ == b.values_; }

    // Entrywise agreement on 1..min(N_a, N_b) (float mode within tolerance).
    bool agrees_with(const ArithFunc& other, double tol = float_tolerance) const {
        if (mode() != other.mode()) throw ModeMismatch();
        const std::size_t n = std::min(size(), other.size());
        if (is_exact()) {
            const auto& a = exact();
            const auto& b = other.exact();
            return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n), b.begin());
        }
        const auto& a = floating();
        const auto& b = other.floating();
        for (std::size_t i = 0; i < n; ++i)
            if (std::abs(a[i] - b[i]) > tol) return false;
        return true;
    }

    // First index in 1..min(N_a, N_b) where the functions differ, or 0.
    std::size_t first_difference(const ArithFunc& other) const {
        if (mode() != other.mode()) throw ModeMismatch();
        const std::size_t n = std::min(size(), other.size());
        for (std::size_t i = 1; i <= n; ++i)
            if (!at(i).approx_equal(other.at(i))) return i;
        return 0;
    }

    template <class Visitor>
    decltype(auto) visit(Visitor&& vis) const { return std::visit(std::forward<Visitor>(vis), values_); }

private:
    void check_length() const {
        if (size() == 0) throw DomainError("an arithmetical function needs at least one value");
    }
    void canonicalize() {
        for (auto& q : std::get<ExactValues>(values_)) q.canonicalize();
    }
    void check_index(std::size_t n) const {
        if (n == 0 || n > size())
            throw DomainError("index " + std::to_string(n) + " outside window 1.." + std::to_string(size()));
    }

    std::variant<ExactValues, FloatValues> values_;
};

namespace detail {

template <class Kernel>
ArithFunc binary(const ArithFunc& f, const ArithFunc& g, Kernel kernel) {
    if (f.mode() != g.mode()) throw ModeMismatch();
    if (f.is_exact())
        return ArithFunc(kernel(std::span<const Rational>(f.exact()), std::span<const Rational>(g.exact())));
    return ArithFunc(kernel(std::span<const double>(f.floating()), std::span<const double>(g.floating())));
}

} // namespace detail

inline ArithFunc add(const ArithFunc& f, const ArithFunc& g) {
    return detail::binary(f, g, [](auto a, auto b) { return detail::pointwise_add(a, b); });
}

inline ArithFunc negate(const ArithFunc& f) {
    return f.visit([](const auto& v) {
        std::decay_t<decltype(v)> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
        return ArithFunc(std::move(out));
    });
}

inline ArithFunc subtract(const ArithFunc& f, const ArithFunc& g) { return add(f, negate(g)); }

inline ArithFunc scale(const Scalar& c, const ArithFunc& f) {
    if (c.mode() != f.mode()) throw ModeMismatch();
    if (f.is_exact()) {
        ArithFunc::ExactValues out(f.exact());
        for (auto& q : out) q *= c.rational();
        return ArithFunc(std::move(out));
    }
    ArithFunc::FloatValues out(f.floating());
    for (auto& x : out) x *= c.real();
    return ArithFunc(std::move(out));
}

// Dirichlet convolution on 1..min(N_f, N_g).
inline ArithFunc convolve(const ArithFunc& f, const ArithFunc& g) {
    return detail::binary(f, g, [](auto a, auto b) { return detail::dirichlet_convolve(a, b); });
}

// The convolution inverse; throws NonUnit when f(1) = 0. Float mode rounds
// at every step of the recursion.
inline ArithFunc invert(const ArithFunc& f) {
    if (f.is_zero_at(1)) throw NonUnit();
    if (f.is_exact()) return ArithFunc(detail::dirichlet_inverse(std::span<const Rational>(f.exact())));
    return ArithFunc(detail::dirichlet_inverse(std::span<const double>(f.floating())));
}

inline Norm norm(const ArithFunc& f) {
    const std::size_t i = f.norm_index();
    return i == 0 ? Norm::zero() : Norm(i);
}

// f^r under convolution; f^0 = e.
inline ArithFunc power(const ArithFunc& f, unsigned r) {
    ArithFunc result = ArithFunc::identity(f.size(), f.mode());
    ArithFunc base = f;
    while (r > 0) {
        if (r & 1u) result = convolve(result, base);
        r >>= 1u;
        if (r > 0) base = convolve(base, base);
    }
    return result;
}

// Outcome of trial division. `quotient` is set on success; otherwise
// `failing_index` is the least n <= N with (f * g)(n) != h(n).
struct DivisionResult {
    std::optional<ArithFunc> quotient;
    std::size_t failing_index = 0;

    explicit operator bool() const noexcept { return quotient.has_value(); }
};

// Solves f * g = h on the window 1..N, N = min(N_h, N_f). With a = norm(f),
// g(m) is determined for am <= N by
//   g(m) = (h(am) - sum_{i | am, i > a} f(i) g(am / i)) / f(a);
// entries m > N / a never reach the window and are left zero. The candidate
// is then checked at every index. Divisibility is certified at truncation only.
inline DivisionResult try_divide(const ArithFunc& h, const ArithFunc& f) {
    if (h.mode() != f.mode()) throw ModeMismatch();
    if (!h.is_exact()) throw ModeMismatch("trial division requires exact mode");
    const std::size_t n = std::min(h.size(), f.size());
    const auto& hv = h.exact();
    const auto& fv = f.exact();

    std::size_t a = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (sgn(fv[i - 1]) != 0) { a = i; break; }
    if (a == 0) throw ZeroDivisor();

    const Rational& lead = fv[a - 1];
    std::vector<Rational> g(n, Rational(0));
    for (std::size_t m = 1; a * m <= n; ++m) {
        const std::size_t target = a * m;
        Rational rest = hv[target - 1];
        for (std::size_t i = a + 1; i <= target; ++i)
            if (target % i == 0 && sgn(fv[i - 1]) != 0) rest -= fv[i - 1] * g[target / i - 1];
        g[m - 1] = rest / lead;
    }

    const auto product = detail::dirichlet_convolve(std::span<const Rational>(fv).first(n), std::span<const Rational>(g));
    for (std::size_t i = 1; i <= n; ++i)
        if (product[i - 1] != hv[i - 1]) return {std::nullopt, i};
    return {ArithFunc(std::move(g)), 0};
}

} // namespace dirichlet
