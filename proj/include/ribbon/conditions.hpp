#pragma once

// Conditions on the row lengths of a ribbon for it to have full equivalence
// class (the same Schur support under every row permutation), the explicit
// witnesses that separate supports when the necessary condition fails, and a
// brute-force checker comparing the necessary condition with the truth.
//
// Throughout, a ribbon here has at least three rows, each of length >= 2.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/deadline.hpp"
#include "ribbon/lr.hpp"
#include "ribbon/shape.hpp"
#include "ribbon/tableau.hpp"
#include "ribbon/types.hpp"

namespace ribbon {

namespace detail {

inline void require_classifiable(const RibbonShape& r) {
    if (r.row_count() < 3) throw std::invalid_argument("ribbon " + r.str() + " needs at least 3 rows");
    for (int a : r.rows())
        if (a < 2) throw std::invalid_argument("ribbon " + r.str() + " has a row shorter than 2");
}

/// sum of rows j+1..m minus (m - j - 2); j is 1-based.
inline int necessary_rhs(const RibbonShape& sorted, std::size_t j) {
    const auto& a = sorted.rows();
    const int m = static_cast<int>(a.size());
    return std::accumulate(a.begin() + static_cast<long>(j), a.end(), 0) - (m - static_cast<int>(j) - 2);
}

}  // namespace detail

/// Every 3-element sub-multiset {x <= y <= z} of the rows (indexed by row, so
/// repeated lengths count separately) has z < x + y. It is enough to test the
/// largest row against the two smallest: any triple's z is at most the
/// largest and its x + y at least the sum of the two smallest.
inline bool satisfies_sufficient(const RibbonShape& r) {
    detail::require_classifiable(r);
    auto a = r.rows();
    std::sort(a.begin(), a.end());
    return a.back() < a[0] + a[1];
}

/// The same test done over all index triples; used to check the reduction.
inline bool satisfies_sufficient_all_triples(const RibbonShape& r) {
    detail::require_classifiable(r);
    const auto& a = r.rows();
    for (std::size_t p = 0; p < a.size(); ++p)
        for (std::size_t q = p + 1; q < a.size(); ++q)
            for (std::size_t s = q + 1; s < a.size(); ++s) {
                int t[3] = {a[p], a[q], a[s]};
                std::sort(t, t + 3);
                if (t[2] >= t[0] + t[1]) return false;
            }
    return true;
}

/// N_j = max{k : sum over i <= j with alpha_i < k of (k - alpha_i) <= m-j-2},
/// by raising k from alpha_j until the deficit exceeds the allowance. Rows
/// must weakly decrease; j is 1-based in [1, m-2].
inline int compute_nj(const RibbonShape& sorted, std::size_t j) {
    if (!sorted.is_sorted_decreasing()) throw std::invalid_argument("compute_nj needs weakly decreasing rows");
    const std::size_t m = sorted.row_count();
    if (m < 3 || j < 1 || j > m - 2)
        throw std::out_of_range("j = " + std::to_string(j) + " out of range for " + sorted.str());
    const int allowance = static_cast<int>(m - j) - 2;
    const auto& a = sorted.rows();
    for (int k = a[j - 1];; ++k) {
        int deficit = 0;
        for (std::size_t i = 0; i < j; ++i)
            if (a[i] < k) deficit += k - a[i];
        if (deficit > allowance) return k - 1;
    }
}

struct NecessaryTerm {
    std::size_t j = 0;
    int nj = 0;
    int rhs = 0;
    bool holds = false;
};

struct ConditionReport {
    RibbonShape ribbon_sorted;
    std::vector<NecessaryTerm> per_j;
    bool overall = true;
};

/// Sorts the rows, then checks N_j < sum_{i>j} alpha_i - (m-j-2) for
/// j = 1..m-2.
inline ConditionReport satisfies_necessary(const RibbonShape& r) {
    detail::require_classifiable(r);
    ConditionReport out{r.sorted_decreasing(), {}, true};
    for (std::size_t j = 1; j + 2 <= r.row_count(); ++j) {
        NecessaryTerm term{j, compute_nj(out.ribbon_sorted, j), detail::necessary_rhs(out.ribbon_sorted, j), false};
        term.holds = term.nj < term.rhs;
        out.overall = out.overall && term.holds;
        out.per_j.push_back(term);
    }
    return out;
}

/// alpha_i < sum_{k>i} alpha_k for i = 1..m-2, after sorting.
inline bool weak_necessary(const RibbonShape& r) {
    const auto a = r.sorted_decreasing().rows();
    for (std::size_t i = 0; i + 2 < a.size(); ++i)
        if (a[i] >= std::accumulate(a.begin() + static_cast<long>(i) + 1, a.end(), 0)) return false;
    return true;
}

struct WitnessCertificate {
    RibbonShape base_ribbon;
    std::size_t j = 0;
    RibbonShape swapped_shape;
    Tableau witness_tableau;
    WeightVector witness_content;
    /// Values placed in the critical boxes, top to bottom.
    std::vector<int> critical_values;
};

/// Builds an LR tableau of shape alpha with rows j, j+1 exchanged whose
/// content is not in the support of alpha, for a sorted ribbon failing the
/// necessary inequality at j.
///
/// Rows 1..j hold their own index; row j+1 holds alpha_{j+1} copies of j+1 at
/// the right and j elsewhere; rows j+2..m-1 hold j+1 except in their leftmost
/// ("critical") box and row m is all j+1. Critical boxes are filled top-down
/// with the largest value <= j keeping the reading-word prefix Yamanouchi.
///
/// With `verify_separation` the certificate also proves by search that the
/// content is missing from the support of alpha; that search can take a while
/// on large ribbons.
inline WitnessCertificate build_witness(const RibbonShape& sorted, std::size_t j, bool verify_separation = true,
                                        Deadline deadline = Deadline::none()) {
    detail::require_classifiable(sorted);
    const int nj = compute_nj(sorted, j);
    const int rhs = detail::necessary_rhs(sorted, j);
    if (nj < rhs)
        throw std::invalid_argument("necessary inequality holds at j = " + std::to_string(j) + " for " + sorted.str() +
                                    "; no witness exists");
    const auto& a = sorted.rows();
    const std::size_t m = a.size();
    if (!(a[j - 1] > a[j])) throw std::logic_error("witness hypothesis without alpha_j > alpha_{j+1}");

    const RibbonShape swapped = transpose_rows(sorted, j);
    const int jv = static_cast<int>(j);
    Tableau::Rows rows(m);
    for (std::size_t k = 1; k <= j; ++k) rows[k - 1].assign(swapped.row(k - 1), static_cast<int>(k));
    rows[j].assign(a[j - 1] - a[j], jv);
    rows[j].insert(rows[j].end(), a[j], jv + 1);

    // Letter counts of the reading word so far; rows up to j+1 are complete.
    std::vector<int> seen(j + 2, 0);
    for (std::size_t k = 0; k <= j; ++k)
        for (int x : rows[k]) ++seen[x];

    std::vector<int> critical;
    for (std::size_t k = j + 2; k <= m - 1; ++k) {
        auto& rw = rows[k - 1];
        const int len = swapped.row(k - 1);
        seen[j + 1] += len - 1;
        int pick = 0;
        for (int v = jv; v >= 1; --v)
            if (v == 1 || seen[v] + 1 <= seen[v - 1]) {
                pick = v;
                break;
            }
        ++seen[pick];
        critical.push_back(pick);
        rw.assign(1, pick);
        rw.insert(rw.end(), len - 1, jv + 1);
    }
    rows[m - 1].assign(swapped.row(m - 1), jv + 1);

    Tableau witness = Tableau::of_ribbon(swapped, std::move(rows));
    WitnessCertificate cert{sorted, j, swapped, witness, content(witness), std::move(critical)};

    if (!is_lr(cert.witness_tableau)) throw std::logic_error("witness tableau is not LR for " + sorted.str());
    if (cert.witness_content.count(jv) != nj || cert.witness_content.count(jv + 1) != rhs)
        throw std::logic_error("witness content " + cert.witness_content.str() + " does not match N_j / rhs");
    if (verify_separation && contains_content(sorted, cert.witness_content.as_partition(), deadline))
        throw std::logic_error("witness content " + cert.witness_content.str() + " lies in the support of " +
                               sorted.str());
    return cert;
}

enum class CheckStatus { ok, timeout, skipped };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::ok: return "ok";
        case CheckStatus::timeout: return "timeout";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

struct ConjectureCheck {
    bool predicted = false;
    std::optional<bool> actual;
    std::optional<bool> agree;
    CheckStatus status = CheckStatus::ok;
    long elapsed_ms = 0;
};

inline constexpr std::chrono::seconds kDefaultCheckBudget{60};

/// Compares the necessary condition with a brute-force full equivalence class
/// test. On timeout `actual` and `agree` are left empty.
inline ConjectureCheck check_conjecture(const RibbonShape& r,
                                        std::chrono::milliseconds budget = kDefaultCheckBudget) {
    if (budget.count() <= 0) throw std::invalid_argument("budget must be positive");
    const auto start = Deadline::Clock::now();
    ConjectureCheck out;
    out.predicted = satisfies_necessary(r).overall;
    try {
        out.actual = has_full_equivalence_class(r, Deadline::after(budget));
        out.agree = *out.actual == out.predicted;
    } catch (const BudgetExceeded&) {
        out.status = CheckStatus::timeout;
    }
    out.elapsed_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Deadline::Clock::now() - start).count());
    return out;
}

}  // namespace ribbon
