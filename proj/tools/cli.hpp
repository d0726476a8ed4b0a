#pragma once

// Command-line front end. Exit codes: 0 success, 1 computation error,
// 2 usage error, 3 verification failure.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirichlet/dirichlet.hpp"

namespace dirichlet::cli {

enum class OutputFormat { json, csv, table };

struct Config {
    std::size_t default_n = 256;
    std::uint64_t seed = 7;
    std::optional<ScalarMode> scalar_mode;
    OutputFormat output = OutputFormat::json;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_computation = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_verification = 3;

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson witness_json(const Witness& w) {
    ojson j;
    j["verdict"] = std::string(to_string(w.verdict));
    if (w.index) j["index"] = *w.index;
    if (w.pair) j["pair"] = {w.pair->first, w.pair->second};
    j["note"] = w.note;
    return j;
}

inline ojson report_json(const ElementReport& r) {
    ojson j;
    j["is_unit"] = r.is_unit;
    j["in_maximal"] = r.in_maximal;
    if (r.norm.is_zero()) j["norm"] = "zero";
    else j["norm"] = r.norm.value();
    j["atom_certificate"] = std::string(to_string(r.atom_certificate));
    j["additive_class"] = std::string(to_string(r.additive_class));
    return j;
}

inline ojson chain_json(const ChainReport& c) {
    ojson j;
    j["family"] = std::string(to_string(c.family));
    j["n"] = c.window;
    auto ideals = ojson::array();
    for (const auto& s : c.ideals) ideals.push_back(s.to_string());
    j["ideals"] = ideals;
    auto links = ojson::array();
    for (const auto& l : c.links) {
        ojson lj;
        lj["smaller"] = c.ideals[l.smaller].to_string();
        lj["larger"] = c.ideals[l.larger].to_string();
        lj["separator"] = l.separator_label();
        lj["in_larger"] = witness_json(l.in_larger);
        lj["in_smaller"] = witness_json(l.in_smaller);
        links.push_back(lj);
    }
    j["links"] = links;
    j["verified"] = c.verified();
    return j;
}

// Flat "key: value" rendering of a JSON report for --format table.
inline void print_table(std::ostream& os, const ojson& j, const std::string& prefix = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) print_table(os, *it, key);
        else if (it->is_string()) os << key << ": " << it->get<std::string>() << '\n';
        else os << key << ": " << it->dump() << '\n';
    }
}

} // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    if (const char* env = std::getenv("DIRICHLET_N")) {
        try {
            cfg.default_n = std::stoul(env);
        } catch (const std::exception&) {
            err << "DIRICHLET_N must be a positive integer\n";
            return exit_usage;
        }
    }

    CLI::App app{"Exact arithmetic in the ring of arithmetical functions under Dirichlet convolution", "dirichlet"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::size_t> n_flag;
    std::string mode_flag, format_flag = "json", out_path;
    app.add_option("--n", n_flag, "Truncation length N")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--mode", mode_flag, "Scalar mode")->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--format", format_flag, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--out", out_path, "Write output to PATH instead of stdout");

    auto* gen = app.add_subcommand("gen", "Generate a named arithmetical function");
    std::string gen_id;
    std::optional<std::uint64_t> gen_param;
    gen->add_option("function-id", gen_id, "mobius, euler_phi, mangoldt, liouville, ramanujan_tau, dedekind_psi, big_omega, "
                                           "distinct_prime_count, p_adic_valuation, log, identity_e, delta, unit_u, natural_N")
        ->required();
    gen->add_option("--param", gen_param, "p for p_adic_valuation, m for delta");

    std::vector<std::string> files;
    auto* conv = app.add_subcommand("conv", "Dirichlet convolution of two sequence files");
    conv->add_option("files", files)->required()->expected(2);
    auto* inv = app.add_subcommand("inv", "Dirichlet inverse");
    inv->add_option("file", files)->required()->expected(1);
    auto* nrm = app.add_subcommand("norm", "Least index with a nonzero value");
    nrm->add_option("file", files)->required()->expected(1);
    auto* divide = app.add_subcommand("divide", "Trial division h / f on the window");
    divide->add_option("files", files, "h f")->required()->expected(2);
    auto* classify_cmd = app.add_subcommand("classify", "Unit / maximal ideal / atom certificate report");
    classify_cmd->add_option("file", files)->required()->expected(1);

    auto* ideal = app.add_subcommand("ideal", "Ideal membership, quotients, decompositions, chains and probes");
    ideal->require_subcommand(1);
    std::string ideal_text;
    auto* member_cmd = ideal->add_subcommand("member", "Membership oracle");
    member_cmd->add_option("--ideal", ideal_text, "I(n), m, P(m), P(m,k), J(q,...), Jc(q,...), K(n)")->required();
    member_cmd->add_option("file", files)->required()->expected(1);
    std::uint64_t prime_p = 0;
    auto* quotient_cmd = ideal->add_subcommand("quotient", "g with delta_p * g = f for f in P(p)");
    quotient_cmd->add_option("--p", prime_p)->required();
    quotient_cmd->add_option("file", files)->required()->expected(1);
    std::uint64_t modulus = 0;
    auto* decompose_cmd = ideal->add_subcommand("decompose", "Cofactors of f in P(m) over delta generators");
    decompose_cmd->add_option("--m", modulus)->required();
    decompose_cmd->add_option("file", files)->required()->expected(1);
    std::string chain_family;
    std::size_t chain_length = 0;
    bool dot = false;
    auto add_chain_options = [&](CLI::App* sub) {
        sub->add_option("--family", chain_family)->required()->check(
            CLI::IsMember({"P_ascending", "J_descending", "I_descending", "K_ascending"}));
        sub->add_option("--length", chain_length)->required();
        sub->add_flag("--dot", dot, "Emit a DOT digraph");
    };
    auto* ideal_chain = ideal->add_subcommand("chain", "Strict chain of ideals with separators");
    add_chain_options(ideal_chain);
    std::size_t trials = 500;
    auto* probe_cmd = ideal->add_subcommand("probe", "Refutation search for primality");
    probe_cmd->add_option("--ideal", ideal_text)->required();
    probe_cmd->add_option("--trials", trials);
    auto* chain_cmd = app.add_subcommand("chain", "Strict chain of ideals with separators");
    add_chain_options(chain_cmd);

    auto* verify = app.add_subcommand("verify-paper", "Run every structural check and print a pass/fail table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    if (format_flag == "csv") cfg.output = OutputFormat::csv;
    if (format_flag == "table") cfg.output = OutputFormat::table;
    if (!mode_flag.empty()) cfg.scalar_mode = parse_mode(mode_flag);
    const std::size_t n = n_flag.value_or(cfg.default_n);
    if (n < 1) {
        err << "N must be >= 1\n";
        return exit_usage;
    }

    std::ofstream file_out;
    if (!out_path.empty()) {
        file_out.open(out_path);
        if (!file_out) {
            err << "cannot write '" << out_path << "'\n";
            return exit_computation;
        }
    }
    std::ostream& os = out_path.empty() ? out : file_out;

    auto emit_sequence = [&](const ArithFunc& f, const std::string& name) {
        switch (cfg.output) {
        case OutputFormat::json: os << to_json(f, name).dump(2) << '\n'; break;
        case OutputFormat::csv: os << to_csv(f) << '\n'; break;
        case OutputFormat::table:
            for (std::size_t i = 1; i <= f.size(); ++i) os << i << ' ' << f(i) << '\n';
            break;
        }
    };
    auto emit_report = [&](const detail::ojson& j) {
        if (cfg.output == OutputFormat::table) detail::print_table(os, j);
        else os << j.dump(2) << '\n';
    };
    auto load = [&](const std::string& path) {
        if (cfg.scalar_mode && path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0)
            return NamedSequence{path, from_csv(read_text(path), *cfg.scalar_mode)};
        return read_sequence_file(path);
    };
    auto run_chain = [&] {
        const auto report = chain(parse_chain_family(chain_family), chain_length, n);
        if (dot) os << to_dot(report);
        else emit_report(detail::chain_json(report));
        return report.verified() ? exit_ok : exit_verification;
    };

    try {
        if (*gen) {
            const auto id = FunctionId::parse(gen_id, gen_param);
            ArithFunc f = generate(id, n);
            if (cfg.scalar_mode && *cfg.scalar_mode != f.mode()) {
                if (*cfg.scalar_mode == ScalarMode::exact) throw DomainError(id.name() + " has irrational values; exact mode unavailable");
                ArithFunc::FloatValues v;
                for (const auto& q : f.exact()) v.push_back(q.get_d());
                f = ArithFunc(std::move(v));
            }
            emit_sequence(f, id.name());
        } else if (*conv) {
            const auto a = load(files[0]), b = load(files[1]);
            emit_sequence(convolve(a.values, b.values), a.name + "*" + b.name);
        } else if (*inv) {
            const auto a = load(files[0]);
            emit_sequence(invert(a.values), "inverse(" + a.name + ")");
        } else if (*nrm) {
            const auto a = load(files[0]);
            const Norm v = norm(a.values);
            detail::ojson j;
            if (v.is_zero()) j["norm"] = "zero";
            else j["norm"] = v.value();
            j["n"] = a.values.size();
            emit_report(j);
        } else if (*divide) {
            const auto h = load(files[0]), f = load(files[1]);
            const auto r = try_divide(h.values, f.values);
            if (r) {
                emit_sequence(*r.quotient, h.name + "/" + f.name);
            } else {
                detail::ojson j;
                j["divisible"] = false;
                j["failing_index"] = r.failing_index;
                emit_report(j);
            }
        } else if (*classify_cmd) {
            emit_report(detail::report_json(classify(load(files[0]).values)));
        } else if (*ideal) {
            if (*member_cmd) {
                const auto spec = IdealSpec::parse(ideal_text);
                auto j = detail::witness_json(member(spec, load(files[0]).values));
                j["ideal"] = spec.to_string();
                emit_report(j);
            } else if (*quotient_cmd) {
                const auto a = load(files[0]);
                emit_sequence(principal_quotient(prime_p, a.values), a.name + "/delta(" + std::to_string(prime_p) + ")");
            } else if (*decompose_cmd) {
                const auto a = load(files[0]);
                const auto d = decompose_P_m(modulus, a.values);
                detail::ojson j;
                j["m"] = modulus;
                j["primes"] = d.primes;
                auto cof = detail::ojson::array();
                for (std::size_t i = 0; i < d.primes.size(); ++i)
                    cof.push_back(to_json(d.cofactors[i], "cofactor(delta(" + std::to_string(d.primes[i]) + "))"));
                j["cofactors"] = cof;
                j["reconstructed"] = reconstruct(d) == a.values;
                os << j.dump(2) << '\n';
            } else if (*ideal_chain) {
                return run_chain();
            } else if (*probe_cmd) {
                const auto spec = IdealSpec::parse(ideal_text);
                const auto p = probe_prime(spec, trials, cfg.seed, n);
                auto j = detail::witness_json(p.witness);
                j["ideal"] = spec.to_string();
                if (p.left) j["left"] = to_json(*p.left, "f");
                if (p.right) j["right"] = to_json(*p.right, "g");
                emit_report(j);
            }
        } else if (*chain_cmd) {
            return run_chain();
        } else if (*verify) {
            VerifyConfig vc;
            vc.n = n;
            vc.seed = cfg.seed;
            const auto results = verify_statements(vc);
            std::size_t passed = 0;
            os << "verify-paper N=" << n << " seed=" << cfg.seed << '\n';
            for (std::size_t i = 0; i < results.size(); ++i) {
                const auto& r = results[i];
                passed += r.passed ? 1 : 0;
                os << std::setw(3) << (i + 1) << "  " << (r.passed ? "PASS" : "FAIL") << "  " << r.statement << "  [" << r.detail
                   << "]\n";
            }
            os << "summary: " << passed << "/" << results.size() << " passed\n";
            return passed == results.size() ? exit_ok : exit_verification;
        }
    } catch (const NotMember& e) {
        err << "error: " << e.what() << " (witness index " << e.index() << ")\n";
        return exit_computation;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_computation;
    }
    return exit_ok;
}

} // namespace dirichlet::cli
