// Acceptance suite: one PASS/FAIL line per criterion, each with its time limit.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "brute.hpp"
#include "cli.hpp"
#include "ribbon/ribbon.hpp"

using namespace ribbon;
using Clock = std::chrono::steady_clock;
using Seconds = std::chrono::duration<double>;

namespace {

/// Outcome of one criterion: `ok` is the correctness verdict, `detail` a
/// short explanation; the harness adds the time limit check.
struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    Seconds limit;
    std::function<Verdict()> body;
};

std::string seconds_str(Seconds s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s.count());
    return buf;
}

template <class F>
Seconds timed(F&& f) {
    const auto t0 = Clock::now();
    f();
    return Clock::now() - t0;
}

const SupportSet kSupport432{{7, 2}, {7, 1, 1}, {6, 3}, {6, 2, 1}, {5, 4}, {5, 3, 1}, {5, 2, 2}, {4, 4, 1}, {4, 3, 2}};

Verdict support_golden() {
    Verdict v;
    for (const auto& p : distinct_permutations({4, 3, 2})) {
        SupportSet s;
        const auto t = timed([&] { s = support(p); });
        v.require(s == kSupport432, "support of " + p.str() + " differs");
        v.require(t < Seconds(1), "support of " + p.str() + " took " + seconds_str(t));
    }
    std::ostringstream out, err;
    const auto t = timed([&] { cli::run({"support", "4", "3", "2"}, out, err); });
    v.require(nlohmann::json::parse(out.str()) == to_json(kSupport432), "CLI support 4 3 2 output differs");
    v.require(t < Seconds(1), "CLI support took " + seconds_str(t));
    v.detail = v.ok ? "9 partitions for all 6 permutations" : v.detail;
    return v;
}

Verdict nj_golden() {
    Verdict v;
    ConditionReport pass, fail;
    const auto t = timed([&] {
        pass = satisfies_necessary({10, 8, 6, 5, 4});
        fail = satisfies_necessary({13, 10, 5, 4, 3});
    });
    v.require(pass.per_j.size() == 3 && pass.per_j[0].nj == 12 && pass.per_j[1].nj == 9 && pass.per_j[2].nj == 6,
              "N_j of (10,8,6,5,4) differ from (12,9,6)");
    v.require(pass.overall, "(10,8,6,5,4) should pass");
    v.require(fail.per_j.size() == 3 && fail.per_j[1].nj == 11 && !fail.per_j[1].holds,
              "(13,10,5,4,3) should fail at j=2 with N_2 = 11");
    v.require(!fail.overall, "(13,10,5,4,3) should fail overall");
    v.require(t < std::chrono::milliseconds(10), "took " + seconds_str(t));
    if (v.ok) v.detail = "(12,9,6) pass; N_2 = 11 fail";
    return v;
}

Verdict witness_separation() {
    Verdict v;
    const RibbonShape base{13, 10, 5, 4, 3};
    const auto cert = build_witness(base, 2, false);
    const Partition nu{13, 11, 11};
    v.require(cert.witness_content == WeightVector{13, 11, 11}, "content " + cert.witness_content.str());
    v.require(cert.swapped_shape == RibbonShape{13, 5, 10, 4, 3}, "swapped shape " + cert.swapped_shape.str());
    v.require(is_lr(cert.witness_tableau), "witness is not LR");
    v.require(ribbon_of(cert.witness_tableau.shape()) == cert.swapped_shape, "witness has the wrong shape");
    bool in_swapped = false, in_base = true;
    const auto t1 = timed([&] { in_swapped = contains_content(cert.swapped_shape, nu); });
    const auto t2 = timed([&] { in_base = contains_content(base, nu); });
    v.require(in_swapped, "(13,11,11) missing from the swapped support");
    v.require(!in_base, "(13,11,11) found in the support of (13,10,5,4,3)");
    v.require(t1 + t2 < Seconds(30), "membership checks took " + seconds_str(t1 + t2));
    if (v.ok) v.detail = "(13,11,11) separates; membership " + seconds_str(t1 + t2);
    return v;
}

Verdict rmatrix_golden() {
    Verdict v;
    const auto before = Tableau::of_ribbon({5, 3}, {{1, 3, 3, 4, 7}, {1, 3, 5}});
    const auto expected = Tableau::of_ribbon({3, 5}, {{1, 4, 7}, {1, 3, 3, 3, 5}});
    Tableau after, back;
    const auto t = timed([&] {
        after = rmatrix_swap(before, 1);
        back = rmatrix_swap(after, 1);
    });
    v.require(after == expected, "forward swap gave " + to_text(after));
    v.require(back == before, "antipodal route gave " + to_text(back));
    v.require(t < std::chrono::milliseconds(1), "took " + seconds_str(t));
    if (v.ok) v.detail = "(1,3,3,4,7)/(1,3,5) <-> (1,4,7)/(1,3,3,3,5)";
    return v;
}

RibbonShape random_ribbon_upto(std::mt19937& rng, int max_n) {
    std::uniform_int_distribution<int> n_d(2, max_n);
    const int n = n_d(rng);
    std::vector<int> rows;
    // A uniformly random composition of n: cut after each box with probability 1/2.
    std::bernoulli_distribution cut(0.5);
    int cur = 1;
    for (int k = 1; k < n; ++k) {
        if (cut(rng)) {
            rows.push_back(cur);
            cur = 1;
        } else {
            ++cur;
        }
    }
    rows.push_back(cur);
    return RibbonShape(rows);
}

Verdict swap_properties() {
    Verdict v;
    std::mt19937 rng(2024);
    int tableaux = 0, checks = 0;
    while (tableaux < 1500 && v.ok) {
        const auto r = random_ribbon_upto(rng, 20);
        if (r.row_count() < 2) continue;
        // Reservoir-sample up to 8 LR tableaux from the first 20000 in the stream.
        std::vector<Tableau> sample;
        int seen = 0;
        for_each_lr_tableau(ribbon_to_skew(r), [&](const Tableau& t) {
            ++seen;
            if (sample.size() < 8) {
                sample.push_back(t);
            } else if (std::uniform_int_distribution<int>(0, seen - 1)(rng) < 8) {
                sample[std::uniform_int_distribution<int>(0, 7)(rng)] = t;
            }
            return seen < 20000;
        });
        for (const auto& t : sample) {
            ++tableaux;
            for (std::size_t j = 1; j < r.row_count(); ++j) {
                const auto out = rmatrix_swap(t, j);
                ++checks;
                v.require(is_yamanouchi(rrw(out)), "not Yamanouchi: " + to_text(t) + " j=" + std::to_string(j));
                v.require(content(out) == content(t), "content changed: " + to_text(t));
                if (r.row(j - 1) > r.row(j))
                    v.require(out.row(j).front() <= t.row(j).front(),
                              "leftmost of row j+1 grew: " + to_text(t) + " j=" + std::to_string(j));
            }
        }
    }
    if (v.ok) v.detail = std::to_string(tableaux) + " tableaux, " + std::to_string(checks) + " swaps";
    return v;
}

bool swap_qualifies(const RibbonShape& r, std::size_t i) {
    const int ai = r.row(i - 1), next = r.row(i);
    return ai > next && (i == 1 || ai < r.row(i - 2) + next);
}

std::vector<RibbonShape> ribbons_in_box(int m, int lo, int hi) {
    std::vector<RibbonShape> out;
    std::vector<int> rows(m, lo);
    while (true) {
        out.emplace_back(rows);
        int k = m - 1;
        while (k >= 0 && rows[k] == hi) rows[k--] = lo;
        if (k < 0) return out;
        ++rows[k];
    }
}

Verdict repair_containment() {
    Verdict v;
    long swaps = 0, pairs = 0;
    std::map<RepairStep, long> steps;
    for (int m = 3; m <= 4 && v.ok; ++m)
        for (const auto& r : ribbons_in_box(m, 2, 6)) {
            const auto sup = support(r);
            const auto tableaux = enumerate_lr_tableaux(ribbon_to_skew(r));
            for (std::size_t i = 1; i < r.row_count(); ++i) {
                if (!swap_qualifies(r, i)) continue;
                ++pairs;
                const auto swapped = transpose_rows(r, i);
                const auto other = support(swapped);
                v.require(std::includes(other.begin(), other.end(), sup.begin(), sup.end(), std::greater<>()),
                          "support of " + r.str() + " not inside support of " + swapped.str());
                for (const auto& t : tableaux) {
                    try {
                        const auto res = swap_to_lr_traced(t, i);
                        ++steps[res.step];
                        v.require(is_lr(res.tableau) && content(res.tableau) == content(t) &&
                                      ribbon_of(res.tableau.shape()) == swapped,
                                  "bad repair output for " + to_text(t));
                    } catch (const RepairExhausted& e) {
                        v.require(false, e.what());
                    }
                    ++swaps;
                }
            }
        }
    if (v.ok) {
        v.detail = std::to_string(pairs) + " ribbon/row pairs, " + std::to_string(swaps) + " repairs (";
        bool first = true;
        for (const auto& [s, c] : steps) {
            v.detail += std::string(first ? "" : " ") + to_string(s) + "=" + std::to_string(c);
            first = false;
        }
        v.detail += ")";
    }
    return v;
}

Verdict sufficient_implies_full() {
    Verdict v;
    int checked = 0;
    for (const auto& r : ribbons_in_box(3, 2, 8)) {
        if (!satisfies_sufficient(r)) continue;
        ++checked;
        v.require(has_full_equivalence_class(r), r.str() + " lacks full equivalence class");
    }
    if (v.ok) v.detail = std::to_string(checked) + " ribbons satisfy the triangle condition, all full";
    return v;
}

Verdict three_row_sweep() {
    Verdict v;
    SweepOptions opts;
    opts.jobs = std::max(1u, std::thread::hardware_concurrency());
    SweepSummary summary;
    run_sweep(sweep_ribbons(3, 6, 18), opts, [&](const SweepRecord& rec) {
        summary.add(rec);
        v.require(rec.status == CheckStatus::ok, "timeout on " + RibbonShape(rec.ribbon).str());
        v.require(rec.agree.value_or(false), "disagreement on " + RibbonShape(rec.ribbon).str());
    });
    if (v.ok) v.detail = std::to_string(summary.total) + " ribbons, all agree";
    return v;
}

Verdict oracle_equivalence() {
    Verdict v;
    int ribbons = 0;
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; m <= n; ++m)
            for (const auto& c : compositions_of(n, m)) {
                const auto s = ribbon_to_skew(RibbonShape(c));
                ++ribbons;
                v.require(support(s) == support_oracle(s, 8), "mismatch on ribbon " + s.str());
            }
    std::mt19937 rng(8);
    std::vector<SkewShape> shapes;
    std::set<std::string> seen;
    while (shapes.size() < 100) {
        auto s = brute::random_skew(rng, 8);
        if (seen.insert(s.str()).second) shapes.push_back(std::move(s));
    }
    for (const auto& s : shapes) v.require(support(s) == support_oracle(s, 8), "mismatch on " + s.str());
    if (v.ok) v.detail = std::to_string(ribbons) + " ribbons and 100 skew shapes";
    return v;
}

Verdict antipodal_and_multisets() {
    Verdict v;
    int ribbons = 0;
    for (int n = 1; n <= 12; ++n)
        for (int m = 1; m <= n; ++m)
            for (const auto& c : compositions_of(n, m)) {
                const RibbonShape r(c);
                const auto a = antipodal(r);
                if (a < r) continue;  // each pair once
                ++ribbons;
                v.require(support(r) == support(a), "support changes under rotation for " + r.str());
            }
    int classes = 0;
    for (int n = 1; n <= 10; ++n) {
        std::map<SupportSet, std::set<RibbonShape>> by_support;
        for (int m = 1; m <= n; ++m)
            for (const auto& c : compositions_of(n, m)) by_support[support(RibbonShape(c))].insert(RibbonShape(c));
        for (const auto& [sup, members] : by_support) {
            ++classes;
            const auto sorted = members.begin()->sorted_decreasing();
            for (const auto& r : members)
                v.require(r.sorted_decreasing() == sorted,
                          members.begin()->str() + " and " + r.str() + " share a support");
        }
    }
    if (v.ok)
        v.detail = std::to_string(ribbons) + " rotation pairs; " + std::to_string(classes) + " support classes for n <= 10";
    return v;
}

}  // namespace

int main() {
    using std::chrono::milliseconds;
    using std::chrono::minutes;
    const std::vector<Criterion> criteria{
        {1, "support of (4,3,2) and its permutations", Seconds(7), support_golden},
        {2, "N_j of (10,8,6,5,4) and (13,10,5,4,3)", milliseconds(10), nj_golden},
        {3, "witness separates (13,10,5,4,3) at j=2", Seconds(30), witness_separation},
        {4, "R-matrix example and its inverse", milliseconds(1), rmatrix_golden},
        {5, "R-matrix swap keeps LR tableaux Yamanouchi", Seconds(60), swap_properties},
        {6, "support containment and repair for m in {3,4}", minutes(10), repair_containment},
        {7, "triangle condition implies full class, m=3", minutes(10), sufficient_implies_full},
        {8, "necessary condition sweep, m=3, 6<=n<=18", minutes(30), three_row_sweep},
        {9, "LR support equals monomial/Kostka support", minutes(5), oracle_equivalence},
        {10, "rotation invariance and row multisets", minutes(10), antipodal_and_multisets},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Verdict v;
        const auto t = timed([&] {
            try {
                v = c.body();
            } catch (const std::exception& e) {
                v.ok = false;
                v.detail = std::string("exception: ") + e.what();
            }
        });
        const bool in_time = t <= c.limit;
        const bool pass = v.ok && in_time;
        if (!pass) ++failures;
        std::cout << (pass ? "PASS" : "FAIL") << " AC" << c.id << " " << c.title << " [" << seconds_str(t)
                  << " <= " << seconds_str(c.limit) << "] " << (in_time ? v.detail : "over time limit; " + v.detail)
                  << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
