#pragma once

// Sequence files.
//
// JSON: {"name": string, "mode": "exact"|"float", "n": N, "values": [...]}
// with exact values as ["numerator", "denominator"] decimal-string pairs and
// float values as JSON numbers; values[i] holds f(i + 1).
//
// CSV: one line, values comma-separated in index order, exact values as
// "num/den" (or "num" when the denominator is 1).

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dirichlet/arith_func.hpp"
#include "dirichlet/errors.hpp"

namespace dirichlet {

struct NamedSequence {
    std::string name;
    ArithFunc values;
};

inline nlohmann::ordered_json to_json(const ArithFunc& f, const std::string& name) {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["mode"] = std::string(to_string(f.mode()));
    j["n"] = f.size();
    auto values = nlohmann::ordered_json::array();
    if (f.is_exact()) {
        for (const auto& q : f.exact()) values.push_back({q.get_num().get_str(), q.get_den().get_str()});
    } else {
        for (double x : f.floating()) values.push_back(x);
    }
    j["values"] = std::move(values);
    return j;
}

inline NamedSequence from_json(const nlohmann::json& j) {
    try {
        const auto mode = parse_mode(j.at("mode").get<std::string>());
        const auto n = j.at("n").get<std::size_t>();
        const auto& values = j.at("values");
        if (!values.is_array() || values.size() != n)
            throw DomainError("sequence file: 'values' must be an array of length n");
        if (n == 0) throw DomainError("sequence file: n must be >= 1");
        std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string();
        if (mode == ScalarMode::exact) {
            ArithFunc::ExactValues v;
            v.reserve(n);
            for (const auto& item : values) {
                if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
                    throw DomainError("sequence file: exact values must be [numerator, denominator] strings");
                v.push_back(parse_rational(item[0].get<std::string>(), item[1].get<std::string>()));
            }
            return {std::move(name), ArithFunc(std::move(v))};
        }
        ArithFunc::FloatValues v;
        v.reserve(n);
        for (const auto& item : values) {
            if (!item.is_number()) throw DomainError("sequence file: float values must be numbers");
            v.push_back(item.get<double>());
        }
        return {std::move(name), ArithFunc(std::move(v))};
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("sequence file: ") + e.what());
    }
}

inline std::string to_csv(const ArithFunc& f) {
    std::string out;
    for (std::size_t i = 1; i <= f.size(); ++i) {
        if (i > 1) out += ',';
        out += f(i).to_string();
    }
    return out;
}

inline ArithFunc from_csv(std::string_view text, ScalarMode mode = ScalarMode::exact) {
    std::vector<Scalar> values;
    std::string cell;
    auto flush = [&] {
        std::string t;
        for (char c : cell)
            if (c != ' ' && c != '\t' && c != '\r') t += c;
        cell.clear();
        if (t.empty()) return;
        if (mode == ScalarMode::exact)
            values.emplace_back(parse_rational_text(t));
        else
            values.emplace_back(std::stod(t));
    };
    for (char c : text) {
        if (c == ',' || c == '\n') flush();
        else cell += c;
    }
    flush();
    return ArithFunc::make(values);
}

inline std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Reads a sequence file; ".csv" files are parsed as CSV, anything else as JSON.
inline NamedSequence read_sequence_file(const std::string& path) {
    const std::string text = read_text(path);
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return {path, from_csv(text)};
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("'" + path + "' is not valid JSON: " + e.what());
    }
    return from_json(j);
}

} // namespace dirichlet
