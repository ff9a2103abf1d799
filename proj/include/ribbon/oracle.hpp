#pragma once

// Brute-force Schur support, independent of the LR search.
//
// Counts all semistandard fillings with entries <= n (the box count) whose
// content is a partition; that gives the coefficients of the monomial
// symmetric functions m_nu in s_{lambda/mu}. Since s_kappa = sum_nu
// K_{kappa,nu} m_nu with the Kostka matrix unitriangular in dominance order,
// the Schur coefficients come out of a triangular solve, processing partitions
// in descending lexicographic order (a linear extension of dominance).
//
// Exponential in n with only mild pruning, so it refuses shapes above a size
// gate (default 10 boxes, overridable through RIBBON_ORACLE_LIMIT).

#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/shape.hpp"
#include "ribbon/types.hpp"

namespace ribbon {

class OracleLimitExceeded : public std::runtime_error {
public:
    OracleLimitExceeded(int boxes, int limit)
        : std::runtime_error("oracle refuses shape with " + std::to_string(boxes) + " boxes (limit " +
                             std::to_string(limit) + ")") {}
};

inline constexpr int kDefaultOracleLimit = 10;

inline int oracle_limit_from_env() {
    if (const char* s = std::getenv("RIBBON_ORACLE_LIMIT")) {
        try {
            const int v = std::stoi(s);
            if (v >= 0) return v;
        } catch (const std::exception&) {
        }
    }
    return kDefaultOracleLimit;
}

namespace detail {

/// Row-major semistandard filler over entries 1..max_entry. With `target`
/// set, only fillings of exactly that content are counted.
class SsytCounter {
public:
    SsytCounter(const SkewShape& shape, int max_entry) : shape_(shape), max_entry_(max_entry) {
        for (std::size_t r = 0; r < shape.row_count(); ++r)
            for (int c = shape.row_start(r); c < shape.row_end(r); ++c) cells_.push_back({static_cast<int>(r), c});
        fill_.assign(cells_.size(), 0);
        counts_.assign(static_cast<std::size_t>(max_entry) + 2, 0);
    }

    /// Monomial coefficients: for each partition content, the number of
    /// semistandard fillings having it.
    std::map<Partition, std::int64_t> monomial_coefficients() {
        tally_.clear();
        target_.clear();
        run(0);
        return tally_;
    }

    /// Number of semistandard fillings with content exactly `nu`.
    std::int64_t count_with_content(const Partition& nu) {
        tally_.clear();
        target_ = nu.parts();
        target_.resize(static_cast<std::size_t>(max_entry_), 0);
        run(0);
        std::int64_t total = 0;
        for (const auto& [k, v] : tally_) total += v;
        return total;
    }

private:
    struct Cell {
        int row;
        int col;
    };

    int value_at(int r, int c) const {
        // Cells are stored row-major, so search the row's slice.
        int pos = 0;
        for (int k = 0; k < r; ++k) pos += shape_.row_length(k);
        return fill_[pos + (c - shape_.row_start(r))];
    }

    bool can_end_as_partition(std::size_t remaining) const {
        std::int64_t needed = 0;
        int req = 0;
        for (int v = max_entry_; v >= 1; --v) {
            req = std::max(req, counts_[v]);
            needed += req - counts_[v];
        }
        return needed <= static_cast<std::int64_t>(remaining);
    }

    void run(std::size_t pos) {
        if (pos == cells_.size()) {
            std::vector<int> parts;
            for (int v = 1; v <= max_entry_; ++v) {
                if (counts_[v] == 0) {
                    for (int u = v + 1; u <= max_entry_; ++u)
                        if (counts_[u] != 0) return;
                    break;
                }
                if (v > 1 && counts_[v] > counts_[v - 1]) return;
                parts.push_back(counts_[v]);
            }
            ++tally_[Partition(std::move(parts))];
            return;
        }
        const auto [r, c] = cells_[pos];
        int lo = 1;
        if (c > shape_.row_start(r)) lo = fill_[pos - 1];
        if (r > 0 && shape_.contains(r - 1, c)) lo = std::max(lo, value_at(r - 1, c) + 1);
        for (int v = lo; v <= max_entry_; ++v) {
            if (!target_.empty() && counts_[v] >= target_[v - 1]) continue;
            fill_[pos] = v;
            ++counts_[v];
            if (target_.empty() ? can_end_as_partition(cells_.size() - pos - 1) : true) run(pos + 1);
            --counts_[v];
        }
    }

    SkewShape shape_;
    int max_entry_;
    std::vector<Cell> cells_;
    std::vector<int> fill_, counts_, target_;
    std::map<Partition, std::int64_t> tally_;
};

}  // namespace detail

/// Kostka number K_{kappa,nu}: semistandard tableaux of straight shape kappa
/// and content nu.
inline std::int64_t kostka_number(const Partition& kappa, const Partition& nu) {
    if (kappa.size() != nu.size()) return 0;
    detail::SsytCounter counter(SkewShape(kappa), static_cast<int>(std::max<std::size_t>(nu.length(), 1)));
    return counter.count_with_content(nu);
}

/// Schur expansion coefficients of s_{shape}, computed through the monomial
/// basis. Keys are the partitions with nonzero coefficient.
inline std::map<Partition, std::int64_t, std::greater<>> schur_coefficients_oracle(const SkewShape& shape,
                                                                                 std::optional<int> limit = {}) {
    const int gate = limit.value_or(oracle_limit_from_env());
    const int n = shape.box_count();
    if (n > gate) throw OracleLimitExceeded(n, gate);

    detail::SsytCounter counter(shape, std::max(n, 1));
    const auto monomial = counter.monomial_coefficients();

    std::map<Partition, std::int64_t, std::greater<>> schur;
    std::map<std::pair<Partition, Partition>, std::int64_t> kostka;
    for (const auto& nu : partitions_of(n)) {  // descending lex
        auto it = monomial.find(nu);
        std::int64_t coeff = it == monomial.end() ? 0 : it->second;
        for (const auto& [kappa, c] : schur) {
            if (!kappa.dominates(nu)) continue;
            auto key = std::make_pair(kappa, nu);
            auto k = kostka.find(key);
            if (k == kostka.end()) k = kostka.emplace(key, kostka_number(kappa, nu)).first;
            coeff -= c * k->second;
        }
        if (coeff < 0) throw std::logic_error("negative Schur coefficient for (" + nu.str() + ") in " + shape.str());
        if (coeff != 0) schur.emplace(nu, coeff);
    }
    return schur;
}

inline SupportSet support_oracle(const SkewShape& shape, std::optional<int> limit = {}) {
    SupportSet out;
    for (const auto& [nu, c] : schur_coefficients_oracle(shape, limit)) out.insert(nu);
    return out;
}

}  // namespace ribbon
