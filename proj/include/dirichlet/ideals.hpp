#pragma once

// Ideal families of the ring of arithmetical functions, each described as
// "all f vanishing on a set S of indices":
//
//   I(n)      S = {i : i < n}                        norm threshold
//   m         S = {1}                                the maximal ideal
//   P(m)      S = {i : gcd(m, i) = 1}
//   J(Q)      S = Pi_Q, products of primes from Q (1 included)
//   K(n)      S = {1} u {pi_k : k >= n}
//   P(m, k)   S = {i : distinct primes of gcd(m, i) <= k}, m square-free
//
// Membership is decided on the truncation window 1..N.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dirichlet/arith_func.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/factorize.hpp"
#include "dirichlet/sampling.hpp"
#include "dirichlet/witness.hpp"

namespace dirichlet {

enum class IdealFamily { norm_threshold, maximal, coprime, prime_products, prime_tail, gcd_count };

// allow: Q is the listed set. complement: Q is every prime except the listed ones.
enum class PrimeSetMode { allow, complement };

class IdealSpec {
public:
    // I(n) = {f : norm(f) >= n} u {0}.
    static IdealSpec norm_threshold(std::size_t n) {
        if (n < 1) throw DomainError("I(n) needs n >= 1");
        IdealSpec s(IdealFamily::norm_threshold);
        s.n_ = n;
        return s;
    }

    static IdealSpec maximal() { return IdealSpec(IdealFamily::maximal); }

    // P(m) = {f : f(i) = 0 whenever gcd(m, i) = 1}.
    static IdealSpec coprime(std::uint64_t m) {
        if (m < 1) throw DomainError("P(m) needs m >= 1");
        IdealSpec s(IdealFamily::coprime);
        s.m_ = m;
        return s;
    }

    // J(Q) = {f : f vanishes on Pi_Q}.
    static IdealSpec prime_products(std::vector<std::uint64_t> primes, PrimeSetMode mode = PrimeSetMode::allow) {
        if (primes.empty()) throw DomainError("J(Q) needs a nonempty prime set");
        for (auto p : primes)
            if (!is_prime(p)) throw DomainError("J(Q): " + std::to_string(p) + " is not prime");
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        IdealSpec s(IdealFamily::prime_products);
        s.primes_ = std::move(primes);
        s.prime_mode_ = mode;
        return s;
    }

    // K(n) = {f : f(1) = 0 and f(pi_k) = 0 for all k >= n}, pi_1 = 2.
    static IdealSpec prime_tail(std::size_t n) {
        if (n < 1) throw DomainError("K(n) needs n >= 1");
        IdealSpec s(IdealFamily::prime_tail);
        s.n_ = n;
        s.tail_start_ = nth_prime(n);
        return s;
    }

    // P(m, k) for square-free m.
    static IdealSpec gcd_count(std::uint64_t m, std::size_t k) {
        if (m < 1) throw DomainError("P(m,k) needs m >= 1");
        if (!factorize(m).square_free()) throw DomainError("P(m,k) needs square-free m, got " + std::to_string(m));
        IdealSpec s(IdealFamily::gcd_count);
        s.m_ = m;
        s.k_ = k;
        return s;
    }

    IdealFamily family() const noexcept { return family_; }
    std::size_t n() const noexcept { return n_; }
    std::uint64_t m() const noexcept { return m_; }
    std::size_t k() const noexcept { return k_; }
    const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
    PrimeSetMode prime_mode() const noexcept { return prime_mode_; }

    // True when members must vanish at `index`.
    bool requires_zero_at(std::uint64_t index) const {
        switch (family_) {
        case IdealFamily::norm_threshold: return index < n_;
        case IdealFamily::maximal: return index == 1;
        case IdealFamily::coprime: return gcd(m_, index) == 1;
        case IdealFamily::prime_products: return in_prime_products(index);
        case IdealFamily::prime_tail: return index == 1 || (index >= tail_start_ && is_prime(index));
        case IdealFamily::gcd_count: return distinct_prime_count(gcd(m_, index)) <= k_;
        }
        return false;
    }

    // Whether n lies in Pi_Q (only meaningful for J).
    bool in_prime_products(std::uint64_t index) const {
        const auto ps = factorize(index).primes();
        const auto listed = [this](std::uint64_t p) { return std::binary_search(primes_.begin(), primes_.end(), p); };
        if (prime_mode_ == PrimeSetMode::allow) return std::all_of(ps.begin(), ps.end(), listed);
        return std::none_of(ps.begin(), ps.end(), listed);
    }

    std::string to_string() const {
        switch (family_) {
        case IdealFamily::norm_threshold: return "I(" + std::to_string(n_) + ")";
        case IdealFamily::maximal: return "m";
        case IdealFamily::coprime: return "P(" + std::to_string(m_) + ")";
        case IdealFamily::prime_tail: return "K(" + std::to_string(n_) + ")";
        case IdealFamily::gcd_count: return "P(" + std::to_string(m_) + "," + std::to_string(k_) + ")";
        case IdealFamily::prime_products: {
            std::string out = prime_mode_ == PrimeSetMode::allow ? "J(" : "Jc(";
            for (std::size_t i = 0; i < primes_.size(); ++i) out += (i ? "," : "") + std::to_string(primes_[i]);
            return out + ")";
        }
        }
        return "?";
    }

    // Accepts the to_string() forms: I(5), m, P(6), P(6,1), J(2,3), Jc(2,3), K(3).
    static IdealSpec parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s == "m") return maximal();
        const auto open = s.find('(');
        if (open == std::string::npos || s.back() != ')') throw DomainError("malformed ideal spec '" + s + "'");
        const std::string head = s.substr(0, open);
        std::vector<std::uint64_t> args;
        std::string_view body(s);
        body = body.substr(open + 1, s.size() - open - 2);
        while (!body.empty()) {
            const auto comma = body.find(',');
            const auto tok = body.substr(0, comma);
            std::uint64_t v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
                throw DomainError("malformed ideal argument '" + std::string(tok) + "'");
            args.push_back(v);
            if (comma == std::string_view::npos) break;
            body = body.substr(comma + 1);
        }
        auto expect = [&](std::size_t count) {
            if (args.size() != count) throw DomainError("wrong argument count in '" + s + "'");
        };
        if (head == "I") { expect(1); return norm_threshold(args[0]); }
        if (head == "K") { expect(1); return prime_tail(args[0]); }
        if (head == "P") {
            if (args.size() == 1) return coprime(args[0]);
            expect(2);
            return gcd_count(args[0], args[1]);
        }
        if (head == "J" || head == "Jc") {
            if (args.empty()) throw DomainError("J needs at least one prime");
            return prime_products(args, head == "J" ? PrimeSetMode::allow : PrimeSetMode::complement);
        }
        throw DomainError("unknown ideal family '" + head + "'");
    }

    friend bool operator==(const IdealSpec&, const IdealSpec&) = default;

private:
    explicit IdealSpec(IdealFamily f) : family_(f) {}

    IdealFamily family_;
    std::size_t n_ = 0;
    std::uint64_t m_ = 0;
    std::size_t k_ = 0;
    std::vector<std::uint64_t> primes_;
    PrimeSetMode prime_mode_ = PrimeSetMode::allow;
    std::uint64_t tail_start_ = 0;
};

// Evaluates the defining predicate of `spec` on 1..N. A non_member verdict
// carries the least violating index.
inline Witness member(const IdealSpec& spec, const ArithFunc& f) {
    const std::size_t n = f.size();
    if (spec.family() == IdealFamily::norm_threshold && spec.n() > n + 1)
        throw WindowTooSmall(spec.to_string() + " inspects indices beyond the window 1.." + std::to_string(n));
    for (std::size_t i = 1; i <= n; ++i)
        if (spec.requires_zero_at(i) && !f.is_zero_at(i))
            return Witness::non_member_at(i, "f(" + std::to_string(i) + ") != 0");
    return Witness::member("on window 1.." + std::to_string(n));
}

inline bool is_member(const IdealSpec& spec, const ArithFunc& f) { return member(spec, f).is_member(); }

// A random member: a dense sample with the vanishing set zeroed out.
inline ArithFunc random_member(const IdealSpec& spec, std::size_t n, Sampler& sampler) {
    ArithFunc::ExactValues v(n);
    for (std::size_t i = 1; i <= n; ++i) v[i - 1] = spec.requires_zero_at(i) ? Rational(0) : sampler.small_rational();
    return ArithFunc(std::move(v));
}

// For f in P(p): g(n) = f(np) on 1..floor(N/p), so that delta_p * g = f.
inline ArithFunc principal_quotient(std::uint64_t p, const ArithFunc& f) {
    if (!is_prime(p)) throw DomainError("principal_quotient needs a prime, got " + std::to_string(p));
    const auto w = member(IdealSpec::coprime(p), f);
    if (!w.is_member())
        throw NotMember("function is not in P(" + std::to_string(p) + ")", *w.index);
    if (f.size() < p) throw WindowTooSmall("window shorter than p = " + std::to_string(p));
    const std::size_t len = f.size() / p;
    return f.visit([len, p](const auto& v) {
        std::decay_t<decltype(v)> g(len);
        for (std::size_t i = 1; i <= len; ++i) g[i - 1] = v[i * p - 1];
        return ArithFunc(std::move(g));
    });
}

// f = sum_i generators[i] * cofactors[i] on the window; generators are the
// indicators of the distinct primes of m in ascending order.
struct Decomposition {
    std::vector<std::uint64_t> primes;
    std::vector<ArithFunc> generators;
    std::vector<ArithFunc> cofactors;
    ArithFunc target;
};

inline ArithFunc reconstruct(const Decomposition& d) {
    ArithFunc sum = ArithFunc::zero(d.target.size(), d.target.mode());
    for (std::size_t i = 0; i < d.generators.size(); ++i) sum = add(sum, convolve(d.generators[i], d.cofactors[i]));
    return sum;
}

// Splits f in P(m) by peeling the largest prime q: the multiples-of-q part
// lies in P(q) = <delta_q>, the remainder in P(m / q^a). Cofactors are
// zero-extended to the full window.
inline Decomposition decompose_P_m(std::uint64_t m, const ArithFunc& f) {
    const auto spec = IdealSpec::coprime(m);
    const auto w = member(spec, f);
    if (!w.is_member()) throw NotMember("function is not in " + spec.to_string(), *w.index);

    const std::size_t n = f.size();
    Decomposition d{factorize(m).primes(), {}, {}, f};
    d.cofactors.assign(d.primes.size(), ArithFunc::zero(n, f.mode()));
    ArithFunc rest = f;
    for (std::size_t idx = d.primes.size(); idx-- > 0;) {
        const std::uint64_t q = d.primes[idx];
        if (q > n) continue;
        auto part = rest.visit([q](const auto& v) {
            std::decay_t<decltype(v)> out(v.size());
            for (std::size_t i = q; i <= v.size(); i += q) out[i - 1] = v[i - 1];
            return ArithFunc(std::move(out));
        });
        d.cofactors[idx] = principal_quotient(q, part).extended(n);
        rest = subtract(rest, part);
    }
    if (!rest.is_zero()) throw Error("decomposition left a nonzero remainder");
    for (auto q : d.primes) d.generators.push_back(ArithFunc::indicator(q, n, f.mode()));
    return d;
}

// Rows: generators delta_{q_i}; columns: evaluation at q_1..q_k.
inline std::vector<std::vector<Rational>> generator_evaluations(std::uint64_t m, std::size_t n) {
    const auto qs = factorize(m).primes();
    std::vector<std::vector<Rational>> rows;
    for (auto qi : qs) {
        const auto g = ArithFunc::indicator(qi, n);
        std::vector<Rational> row;
        for (auto qr : qs) {
            if (qr > n) throw WindowTooSmall("window does not reach prime " + std::to_string(qr));
            row.push_back(g(qr).rational());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

enum class ChainFamily { P_ascending, J_descending, I_descending, K_ascending };

inline std::string_view to_string(ChainFamily f) {
    switch (f) {
    case ChainFamily::P_ascending: return "P_ascending";
    case ChainFamily::J_descending: return "J_descending";
    case ChainFamily::I_descending: return "I_descending";
    case ChainFamily::K_ascending: return "K_ascending";
    }
    return "?";
}

inline ChainFamily parse_chain_family(std::string_view s) {
    for (auto f : {ChainFamily::P_ascending, ChainFamily::J_descending, ChainFamily::I_descending, ChainFamily::K_ascending})
        if (s == to_string(f)) return f;
    throw DomainError("unknown chain family '" + std::string(s) + "'");
}

// One strict inclusion: `separator` lies in ideals[larger] but not ideals[smaller].
struct ChainLink {
    std::size_t smaller;
    std::size_t larger;
    std::size_t separator_index;
    ArithFunc separator;
    Witness in_larger;
    Witness in_smaller;

    std::string separator_label() const { return "delta(" + std::to_string(separator_index) + ")"; }
    bool verified() const { return in_larger.is_member() && in_smaller.is_non_member(); }
};

struct ChainReport {
    ChainFamily family;
    std::size_t window;
    std::vector<IdealSpec> ideals;
    std::vector<ChainLink> links;

    bool ascending() const { return family == ChainFamily::P_ascending || family == ChainFamily::K_ascending; }
    bool verified() const {
        return std::all_of(links.begin(), links.end(), [](const ChainLink& l) { return l.verified(); });
    }
};

// A strict chain of `length` ideals with an indicator separating each
// adjacent pair, each separator checked by the membership oracle on 1..n.
inline ChainReport chain(ChainFamily family, std::size_t length, std::size_t n) {
    if (length < 2) throw DomainError("a chain needs at least two ideals");
    ChainReport report{family, n, {}, {}};
    std::vector<std::size_t> separators;
    auto need = [n](std::uint64_t index) {
        if (index > n)
            throw WindowTooSmall("window 1.." + std::to_string(n) + " cannot hold separator index " + std::to_string(index));
    };

    switch (family) {
    case ChainFamily::P_ascending: {
        if (length > 15) throw DomainError("P chains are limited to 15 primes (64-bit moduli)");
        std::uint64_t m = 1;
        for (std::size_t i = 1; i <= length; ++i) {
            m *= nth_prime(i);
            report.ideals.push_back(IdealSpec::coprime(m));
            if (i > 1) separators.push_back(nth_prime(i));
        }
        break;
    }
    case ChainFamily::J_descending: {
        std::vector<std::uint64_t> q;
        for (std::size_t i = 1; i <= length; ++i) {
            q.push_back(nth_prime(i));
            report.ideals.push_back(IdealSpec::prime_products(q));
            if (i > 1) separators.push_back(nth_prime(i));
        }
        break;
    }
    case ChainFamily::I_descending:
        for (std::size_t i = 1; i <= length; ++i) {
            report.ideals.push_back(IdealSpec::norm_threshold(i));
            if (i > 1) separators.push_back(i - 1);
        }
        break;
    case ChainFamily::K_ascending:
        for (std::size_t i = 1; i <= length; ++i) {
            report.ideals.push_back(IdealSpec::prime_tail(i));
            if (i > 1) separators.push_back(nth_prime(i - 1));
        }
        break;
    }
    for (auto s : separators) need(s);
    if (family == ChainFamily::I_descending && length > n + 1) throw WindowTooSmall("I chain longer than window + 1");

    for (std::size_t i = 0; i + 1 < report.ideals.size(); ++i) {
        const std::size_t smaller = report.ascending() ? i : i + 1;
        const std::size_t larger = report.ascending() ? i + 1 : i;
        auto sep = ArithFunc::indicator(separators[i], n);
        auto in_larger = member(report.ideals[larger], sep);
        auto in_smaller = member(report.ideals[smaller], sep);
        report.links.push_back({smaller, larger, separators[i], std::move(sep), std::move(in_larger), std::move(in_smaller)});
    }
    return report;
}

// Nodes are ideals; an edge smaller -> larger is a strict inclusion labelled by its separator.
inline std::string to_dot(const ChainReport& report) {
    std::ostringstream os;
    os << "digraph " << to_string(report.family) << " {\n";
    for (std::size_t i = 0; i < report.ideals.size(); ++i)
        os << "  n" << i << " [label=\"" << report.ideals[i].to_string() << "\"];\n";
    for (const auto& l : report.links)
        os << "  n" << l.smaller << " -> n" << l.larger << " [label=\"" << l.separator_label() << "\"];\n";
    os << "}\n";
    return os.str();
}

struct PrimeProbe {
    Witness witness;
    std::optional<ArithFunc> left;
    std::optional<ArithFunc> right;
};

// Refutation search for primality of `spec` on 1..n: a pair f, g outside the
// ideal whose product lands inside. Never certifies primality; the best
// positive outcome is undecided_at_truncation.
inline PrimeProbe probe_prime(const IdealSpec& spec, std::size_t trials, std::uint64_t seed, std::size_t n) {
    // Closed-form witnesses hold in the full ring; search hits are gated on
    // their violating indices so that the product's own violation would be visible.
    auto refute = [&](ArithFunc f, ArithFunc g, std::string note, bool gated = true) -> std::optional<PrimeProbe> {
        const auto wf = member(spec, f);
        const auto wg = member(spec, g);
        if (!wf.is_non_member() || !wg.is_non_member()) return std::nullopt;
        if (gated && *wf.index * *wg.index > n) return std::nullopt;
        if (!member(spec, convolve(f, g)).is_member()) return std::nullopt;
        return PrimeProbe{Witness::non_member_pair(*wf.index, *wg.index, std::move(note)), std::move(f), std::move(g)};
    };

    if (spec.family() == IdealFamily::prime_tail) {
        std::vector<long> ones(n, 1);
        ones[0] = 0;
        const auto f = ArithFunc::from_ints(ones);
        if (auto r = refute(f, f, "f = g = (0, 1, 1, 1, ...)", false)) return *r;
        return {Witness::undecided("window holds no prime >= pi_" + std::to_string(spec.n())), {}, {}};
    }

    if (spec.family() == IdealFamily::gcd_count) {
        const auto qs = factorize(spec.m()).primes();
        if (spec.k() >= 1 && spec.k() < qs.size()) {
            std::uint64_t alpha = 1;
            for (std::size_t i = 0; i < spec.k(); ++i) alpha *= qs[i];
            const std::uint64_t beta = qs[spec.k()];
            if (alpha * beta <= n) {
                if (auto r = refute(ArithFunc::indicator(alpha, n), ArithFunc::indicator(beta, n),
                                    "a = delta(" + std::to_string(alpha) + "), b = delta(" + std::to_string(beta) + ")", false))
                    return *r;
            }
        }
    }

    // Indicator pairs: delta_i * delta_j = delta_ij.
    for (std::size_t i = 1; i <= n; ++i) {
        if (!spec.requires_zero_at(i)) continue;
        for (std::size_t j = i; i * j <= n; ++j) {
            if (spec.requires_zero_at(j) && !spec.requires_zero_at(i * j)) {
                return {Witness::non_member_pair(i, j, "indicator pair"), ArithFunc::indicator(i, n), ArithFunc::indicator(j, n)};
            }
        }
    }

    Sampler sampler(seed);
    const auto max_norm = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    for (std::size_t t = 0; t < trials; ++t) {
        auto f = sampler.nonzero(n, std::max<std::size_t>(max_norm, 1));
        auto g = sampler.nonzero(n, std::max<std::size_t>(max_norm, 1));
        if (auto r = refute(std::move(f), std::move(g), "random pair, trial " + std::to_string(t))) return *r;
    }
    return {Witness::undecided("no counterexample in " + std::to_string(trials) + " random trials"), {}, {}};
}

struct SemiprimeReport {
    bool vacuous = false;
    std::size_t base_index = 0;
    // least_failing[r - 1]: least index where f^r violates the predicate.
    std::vector<std::size_t> least_failing;
    bool holds = false;
};

// For f outside P(m, k), with n its least violating index, checks that f^r
// stays outside for r = 1..rmax and that n^r is the least violating index of f^r.
inline SemiprimeReport probe_semiprime(std::uint64_t m, std::size_t k, const ArithFunc& f, unsigned rmax, std::size_t n) {
    const auto spec = IdealSpec::gcd_count(m, k);
    if (f.size() < n) throw DomainError("function shorter than the requested window");
    const ArithFunc window_f = f.truncated(n);
    SemiprimeReport report;
    const auto w = member(spec, window_f);
    if (w.is_member()) {
        report.vacuous = true;
        report.holds = true;
        return report;
    }
    report.base_index = *w.index;
    std::uint64_t top = 1;
    for (unsigned r = 0; r < rmax; ++r) {
        top *= report.base_index;
        if (top > n)
            throw WindowTooSmall(std::to_string(report.base_index) + "^" + std::to_string(rmax) + " exceeds window " +
                                 std::to_string(n));
    }
    report.holds = true;
    ArithFunc fr = window_f;
    std::uint64_t expected = report.base_index;
    for (unsigned r = 1; r <= rmax; ++r) {
        if (r > 1) {
            fr = convolve(fr, window_f);
            expected *= report.base_index;
        }
        const auto wr = member(spec, fr);
        report.least_failing.push_back(wr.index.value_or(0));
        if (!wr.is_non_member() || *wr.index != expected) report.holds = false;
    }
    return report;
}

// Largest r with f^r dividing h on the window. norm(f) >= 2 bounds r by
// log_{norm f}(norm h).
inline unsigned divisibility_depth(const ArithFunc& h, const ArithFunc& f) {
    const Norm nh = norm(h);
    const Norm nf = norm(f);
    if (nh.is_zero() || nf.is_zero()) throw DomainError("divisibility_depth needs nonzero functions");
    if (nf.value() == 1) throw DomainError("divisor is a unit; depth is unbounded");
    unsigned depth = 0;
    std::uint64_t bound = nf.value();
    ArithFunc fr = f;
    while (!fr.is_zero()) {
        if (!try_divide(h, fr)) break;
        ++depth;
        if (bound > nh.value()) throw Error("descent bound violated: norm(f)^r exceeds norm(h)");
        fr = convolve(fr, f);
        bound *= nf.value();
    }
    return depth;
}

} // namespace dirichlet
