#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "ribbon/ribbon.hpp"

namespace ribbon::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RibbonShape parse_rows(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw UsageError("expected at least one row length");
    std::vector<int> rows;
    for (const auto& t : tokens) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t, &used);
        } catch (const std::exception&) {
            throw UsageError("row length '" + t + "' is not an integer");
        }
        if (used != t.size()) throw UsageError("row length '" + t + "' is not an integer");
        if (v < 1) throw UsageError("row lengths must be positive, got " + t);
        rows.push_back(v);
    }
    return RibbonShape(std::move(rows));
}

std::size_t parse_index(const std::string& t) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(t, &used);
    } catch (const std::exception&) {
        throw UsageError("row index '" + t + "' is not an integer");
    }
    if (used != t.size() || v < 1) throw UsageError("row index must be a positive integer, got " + t);
    return static_cast<std::size_t>(v);
}

int cmd_support(const std::vector<std::string>& rows, bool use_oracle, std::ostream& out) {
    const auto r = parse_rows(rows);
    const auto s = use_oracle ? support_oracle(ribbon_to_skew(r)) : support(r);
    out << to_json(s).dump() << '\n';
    return kOk;
}

int cmd_equal(const std::vector<std::string>& raw, std::ostream& out) {
    auto sep = std::find(raw.begin(), raw.end(), "--");
    if (sep == raw.end()) throw UsageError("equal: separate the two ribbons with --");
    const auto a = parse_rows({raw.begin(), sep});
    const auto b = parse_rows({sep + 1, raw.end()});
    nlohmann::json j;
    if (a.box_count() != b.box_count()) {
        j["equal"] = false;
        j["reason"] = "different box counts";
    } else {
        const auto sa = support(a), sb = support(b);
        const auto diff = separating_content(sa, sb);
        j["equal"] = !diff.has_value();
        if (diff) {
            j["separating"] = diff->nu.parts();
            j["separatingIn"] = diff->in_first ? "first" : "second";
        }
    }
    out << j.dump() << '\n';
    return kOk;
}

int cmd_full_class(const std::vector<std::string>& rows, std::ostream& out) {
    const auto r = parse_rows(rows);
    const auto all = permutation_supports(r);
    const auto& base = all.at(r);
    nlohmann::json perms = nlohmann::json::array();
    bool full = true;
    for (const auto& [p, s] : all) {
        const bool same = s == base;
        full = full && same;
        perms.push_back({{"rows", p.rows()}, {"supportSize", s.size()}, {"sameAsBase", same}});
    }
    out << nlohmann::json{{"ribbon", r.rows()}, {"fullClass", full}, {"permutations", perms}}.dump() << '\n';
    return kOk;
}

int cmd_rmatrix(const std::string& path, const std::string& j, std::ostream& out) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read tableau file " + path);
    Tableau t;
    try {
        t = read_tableau(in);
    } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
    }
    write_tableau(out, rmatrix_swap(t, parse_index(j)));
    return kOk;
}

int cmd_conditions(const std::vector<std::string>& rows, std::ostream& out) {
    const auto r = parse_rows(rows);
    auto j = to_json(satisfies_necessary(r));
    j["sufficient"] = satisfies_sufficient(r);
    j["weakNecessary"] = weak_necessary(r);
    out << j.dump() << '\n';
    return kOk;
}

int cmd_witness(const std::vector<std::string>& args, std::ostream& out) {
    if (args.size() < 2) throw UsageError("witness: expected row lengths followed by j");
    const auto r = parse_rows({args.begin(), args.end() - 1}).sorted_decreasing();
    const auto j = parse_index(args.back());
    const auto cert = build_witness(r, j, false);
    const auto nu = cert.witness_content.as_partition();
    auto doc = to_json(cert);
    doc["verification"] = {{"witnessIsLR", is_lr(cert.witness_tableau)},
                           {"inSwappedSupport", contains_content(cert.swapped_shape, nu)},
                           {"inBaseSupport", contains_content(cert.base_ribbon, nu)}};
    out << doc.dump() << '\n';
    return kOk;
}

/// Cuts an unterminated last line left by an interrupted run, so that new
/// records start on a line of their own.
void drop_torn_tail(const std::string& path) {
    std::string text;
    {
        std::ifstream in(path, std::ios::binary);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    if (text.empty() || text.back() == '\n') return;
    const auto keep = text.find_last_of('\n');
    std::filesystem::resize_file(path, keep == std::string::npos ? 0 : keep + 1);
}

struct SweepArgs {
    int rows = 3;
    int min_n = 0;
    int max_n = 0;
    double budget_secs = 60;
    std::string out_path;
    unsigned jobs = 0;
    bool predict_only = false;
    bool no_timing = false;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
    if (!(a.budget_secs > 0)) throw UsageError("--budget must be positive");
    if (a.rows < 1) throw UsageError("--rows must be positive");
    if (a.max_n < a.min_n) throw UsageError("--max-n must be at least --min-n");

    SweepSummary summary;
    std::set<Composition> finished;
    if (!a.out_path.empty() && std::filesystem::exists(a.out_path)) {
        drop_torn_tail(a.out_path);
        std::ifstream in(a.out_path);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            SweepRecord rec;
            try {
                rec = sweep_record_from_json(nlohmann::json::parse(line));
            } catch (const std::exception& e) {
                err << a.out_path << ":" << lineno << ": ignoring unreadable record (" << e.what() << ")\n";
                continue;
            }
            if (finished.insert(rec.ribbon).second) {
                summary.add(rec);
                ++summary.resumed;
            }
        }
    }

    std::vector<RibbonShape> todo;
    for (auto& r : sweep_ribbons(a.rows, a.min_n, a.max_n))
        if (!finished.contains(r.composition())) todo.push_back(std::move(r));

    std::ofstream file;
    if (!a.out_path.empty()) {
        file.open(a.out_path, std::ios::app);
        if (!file) throw UsageError("cannot open " + a.out_path + " for writing");
    }

    SweepOptions opts;
    opts.budget = std::chrono::milliseconds(static_cast<long>(std::ceil(a.budget_secs * 1000)));
    opts.jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
    opts.predict_only = a.predict_only;

    run_sweep(todo, opts, [&](const SweepRecord& rec) {
        summary.add(rec);
        auto shown = rec;
        if (a.no_timing) shown.elapsed_ms = 0;
        const auto line = to_json(shown).dump();
        out << line << '\n';
        if (file) file << line << '\n' << std::flush;
    });
    out << summary.to_json().dump() << '\n';

    if (!summary.disagreements.empty()) return kDisagreement;
    if (summary.timeout > 0) return kTimeoutOnly;
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schur supports of ribbons, R-matrix swaps and full equivalence class conditions", "ribbon"};
    app.require_subcommand(1);

    std::vector<std::string> rows;
    bool use_oracle = false;
    auto* support_cmd = app.add_subcommand("support", "Schur support of a ribbon as JSON");
    support_cmd->add_option("rows", rows, "row lengths, top row first")->required();
    support_cmd->add_flag("--oracle", use_oracle, "use the brute-force monomial/Kostka oracle");

    auto* equal_cmd = app.add_subcommand("equal", "compare supports: equal <rowsA...> -- <rowsB...>");
    equal_cmd->prefix_command();

    auto* full_cmd = app.add_subcommand("full-class", "whether every row permutation has the same support");
    full_cmd->add_option("rows", rows, "row lengths, top row first")->required();

    std::string tableau_path, index;
    auto* rmatrix_cmd = app.add_subcommand("rmatrix", "swap rows j and j+1 of a ribbon tableau");
    rmatrix_cmd->add_option("tableau", tableau_path, "tableau text file")->required();
    rmatrix_cmd->add_option("j", index, "upper row of the pair (1-based)")->required();

    auto* cond_cmd = app.add_subcommand("conditions", "sufficient, necessary and weak necessary conditions");
    cond_cmd->add_option("rows", rows, "row lengths")->required();

    std::vector<std::string> witness_args;
    auto* witness_cmd = app.add_subcommand("witness", "separating LR tableau: witness <rows...> <j>");
    witness_cmd->add_option("args", witness_args, "row lengths then j (rows are sorted first)")->required();

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "compare the necessary condition with brute force");
    sweep_cmd->add_option("--rows", sweep.rows, "number of rows")->required();
    sweep_cmd->add_option("--min-n", sweep.min_n, "smallest box count")->required();
    sweep_cmd->add_option("--max-n", sweep.max_n, "largest box count")->required();
    sweep_cmd->add_option("--budget", sweep.budget_secs, "seconds per ribbon")->capture_default_str();
    sweep_cmd->add_option("--out", sweep.out_path, "JSON-lines file; resumed if it exists");
    sweep_cmd->add_option("--jobs", sweep.jobs, "worker threads (default: hardware threads)");
    sweep_cmd->add_flag("--predict-only", sweep.predict_only, "evaluate the condition only");
    sweep_cmd->add_flag("--no-timing", sweep.no_timing, "write elapsedMs as 0 for byte-stable output");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*support_cmd) return cmd_support(rows, use_oracle, out);
        if (*equal_cmd) return cmd_equal(equal_cmd->remaining(), out);
        if (*full_cmd) return cmd_full_class(rows, out);
        if (*rmatrix_cmd) return cmd_rmatrix(tableau_path, index, out);
        if (*cond_cmd) return cmd_conditions(rows, out);
        if (*witness_cmd) return cmd_witness(witness_args, out);
        if (*sweep_cmd) return cmd_sweep(sweep, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const OracleLimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace ribbon::cli
