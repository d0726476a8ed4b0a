#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace dirichlet {

enum class Verdict { member, non_member, undecided_at_truncation };

inline std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::member: return "member";
    case Verdict::non_member: return "non_member";
    case Verdict::undecided_at_truncation: return "undecided_at_truncation";
    }
    return "?";
}

// Result of a window-bounded predicate. A non_member verdict always carries
// the index (or index pair) that refutes membership.
struct Witness {
    Verdict verdict = Verdict::undecided_at_truncation;
    std::optional<std::size_t> index;
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    std::string note;

    static Witness member(std::string note = {}) { return {Verdict::member, std::nullopt, std::nullopt, std::move(note)}; }
    static Witness non_member_at(std::size_t index, std::string note = {}) {
        return {Verdict::non_member, index, std::nullopt, std::move(note)};
    }
    static Witness non_member_pair(std::size_t a, std::size_t b, std::string note = {}) {
        return {Verdict::non_member, std::nullopt, std::pair{a, b}, std::move(note)};
    }
    static Witness undecided(std::string note = {}) {
        return {Verdict::undecided_at_truncation, std::nullopt, std::nullopt, std::move(note)};
    }

    bool is_member() const noexcept { return verdict == Verdict::member; }
    bool is_non_member() const noexcept { return verdict == Verdict::non_member; }
    bool is_undecided() const noexcept { return verdict == Verdict::undecided_at_truncation; }
};

} // namespace dirichlet
