#pragma once

// Exhaustive comparison of the necessary condition against brute force over
// every sorted ribbon with a fixed number of rows, in a range of sizes.
// Ribbons are checked by a bounded pool of workers; results are handed back
// in canonical ribbon order regardless of completion order.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "ribbon/conditions.hpp"
#include "ribbon/shape.hpp"
#include "ribbon/types.hpp"

namespace ribbon {

struct SweepRecord {
    Composition ribbon;
    bool predicted = false;
    std::optional<bool> actual;
    std::optional<bool> agree;
    long elapsed_ms = 0;
    CheckStatus status = CheckStatus::ok;
};

struct SweepOptions {
    std::chrono::milliseconds budget = kDefaultCheckBudget;
    unsigned jobs = 1;
    /// Only evaluate the condition; records get status `skipped`.
    bool predict_only = false;
};

/// Weakly decreasing ribbons with `rows` rows, all rows >= 2 and
/// min_n <= n <= max_n; ordered by n, then descending lexicographically.
inline std::vector<RibbonShape> sweep_ribbons(int rows, int min_n, int max_n) {
    std::vector<RibbonShape> out;
    for (int n = std::max(min_n, 0); n <= max_n; ++n)
        for (const auto& p : partitions_of(n))
            if (p.length() == static_cast<std::size_t>(rows) && p.parts().back() >= 2) out.emplace_back(p.parts());
    return out;
}

inline SweepRecord check_for_sweep(const RibbonShape& r, const SweepOptions& opts) {
    SweepRecord rec{r.composition(), false, {}, {}, 0, CheckStatus::ok};
    if (opts.predict_only) {
        rec.predicted = satisfies_necessary(r).overall;
        rec.status = CheckStatus::skipped;
        return rec;
    }
    const auto chk = check_conjecture(r, opts.budget);
    rec.predicted = chk.predicted;
    rec.actual = chk.actual;
    rec.agree = chk.agree;
    rec.elapsed_ms = chk.elapsed_ms;
    rec.status = chk.status;
    return rec;
}

/// Checks every ribbon and passes the records to `emit` in input order.
/// `emit` is only ever called from the calling thread.
inline void run_sweep(const std::vector<RibbonShape>& ribbons, const SweepOptions& opts,
                      const std::function<void(const SweepRecord&)>& emit) {
    if (opts.budget.count() <= 0) throw std::invalid_argument("budget must be positive");
    const unsigned workers =
        std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(std::max<std::size_t>(ribbons.size(), 1))));
    if (workers == 1) {
        for (const auto& r : ribbons) emit(check_for_sweep(r, opts));
        return;
    }

    std::vector<std::optional<SweepRecord>> done(ribbons.size());
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;

    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t k; (k = next.fetch_add(1)) < ribbons.size();) {
                std::optional<SweepRecord> rec;
                try {
                    rec = check_for_sweep(ribbons[k], opts);
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!failure) failure = std::current_exception();
                    next = ribbons.size();
                }
                {
                    std::lock_guard lock(mu);
                    done[k] = std::move(rec);
                    if (!done[k]) done[k] = SweepRecord{};  // placeholder so the writer can move on
                }
                cv.notify_one();
            }
        });

    for (std::size_t k = 0; k < ribbons.size(); ++k) {
        SweepRecord rec;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return done[k].has_value() || failure; });
            if (failure) break;
            rec = std::move(*done[k]);
        }
        emit(rec);
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

inline nlohmann::json to_json(const SweepRecord& r) {
    nlohmann::json out{{"ribbon", r.ribbon.parts()}, {"predicted", r.predicted}};
    if (r.actual) {
        out["actual"] = *r.actual;
        out["agree"] = *r.agree;
    }
    out["elapsedMs"] = r.elapsed_ms;
    out["status"] = to_string(r.status);
    return out;
}

inline SweepRecord sweep_record_from_json(const nlohmann::json& j) {
    SweepRecord r;
    r.ribbon = Composition(j.at("ribbon").get<std::vector<int>>());
    r.predicted = j.at("predicted").get<bool>();
    if (j.contains("actual")) {
        r.actual = j.at("actual").get<bool>();
        r.agree = j.at("agree").get<bool>();
    }
    r.elapsed_ms = j.value("elapsedMs", 0L);
    const auto status = j.at("status").get<std::string>();
    if (status == "ok")
        r.status = CheckStatus::ok;
    else if (status == "timeout")
        r.status = CheckStatus::timeout;
    else if (status == "skipped")
        r.status = CheckStatus::skipped;
    else
        throw std::invalid_argument("unknown sweep status '" + status + "'");
    if (r.agree.has_value() != r.actual.has_value()) throw std::invalid_argument("agree present without actual");
    return r;
}

struct SweepSummary {
    std::size_t total = 0;
    std::size_t ok = 0;
    std::size_t timeout = 0;
    std::size_t skipped = 0;
    std::size_t resumed = 0;
    std::vector<Composition> disagreements;

    void add(const SweepRecord& r) {
        ++total;
        switch (r.status) {
            case CheckStatus::ok: ++ok; break;
            case CheckStatus::timeout: ++timeout; break;
            case CheckStatus::skipped: ++skipped; break;
        }
        if (r.agree && !*r.agree) disagreements.push_back(r.ribbon);
    }

    nlohmann::json to_json() const {
        auto dis = nlohmann::json::array();
        for (const auto& c : disagreements) dis.push_back(c.parts());
        return {{"summary",
                 {{"total", total},
                  {"ok", ok},
                  {"timeout", timeout},
                  {"skipped", skipped},
                  {"resumed", resumed},
                  {"disagreements", dis}}}};
    }
};

}  // namespace ribbon
