#pragma once

// Littlewood-Richardson tableau enumeration and Schur supports.
//
// A filling is an LR tableau when it is semistandard and its reverse reading
// word is Yamanouchi; the number of LR tableaux of shape lambda/mu and content
// nu is the coefficient of s_nu in s_{lambda/mu}, so the Schur support of a
// shape is the set of contents of its LR tableaux.
//
// The search fills boxes in reverse-reading order. In that order the right
// neighbour and the box above are always already filled, and the Yamanouchi
// condition only needs running letter counts, so every constraint is checked
// in O(1) per box. Entries of row r are also bounded by the number of
// nonempty rows among the first r.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ribbon/deadline.hpp"
#include "ribbon/shape.hpp"
#include "ribbon/tableau.hpp"
#include "ribbon/types.hpp"

namespace ribbon {

struct LRCount {
    SkewShape shape;
    Partition nu;
    std::uint64_t count = 0;
};

namespace detail {

class LrSearch {
public:
    LrSearch(const SkewShape& shape, std::optional<Partition> filter, Deadline deadline)
        : shape_(shape), deadline_(deadline) {
        int nonempty = 0;
        for (std::size_t r = 0; r < shape.row_count(); ++r) {
            if (shape.row_length(r) > 0) ++nonempty;
            for (int c = shape.row_end(r) - 1; c >= shape.row_start(r); --c) {
                const int pos = static_cast<int>(row_of_.size());
                row_of_.push_back(static_cast<int>(r));
                right_.push_back(c == shape.row_end(r) - 1 ? -1 : pos - 1);
                above_.push_back(-1);
                bound_.push_back(nonempty);
                if (r > 0 && shape.contains(r - 1, c)) above_.back() = index_of(r - 1, c);
            }
        }
        n_ = static_cast<int>(row_of_.size());
        max_value_ = nonempty;
        if (filter) {
            if (filter->size() != n_) {
                impossible_ = true;
            } else {
                target_ = filter->parts();
                max_value_ = std::min<int>(max_value_, static_cast<int>(target_.size()));
                if (static_cast<int>(target_.size()) > nonempty) impossible_ = true;
                first_pos_.assign(target_.size() + 1, n_);
                for (int v = 1; v <= static_cast<int>(target_.size()); ++v) {
                    auto it = std::find_if(bound_.begin(), bound_.end(), [v](int b) { return b >= v; });
                    first_pos_[v] = static_cast<int>(it - bound_.begin());
                }
            }
        }
        fill_.assign(n_, 0);
        counts_.assign(static_cast<std::size_t>(max_value_) + 2, 0);
    }

    /// Calls visit(fill, counts) for each LR filling, in lexicographic order of
    /// reading words. `fill` lists entries in reverse-reading order; counts[v]
    /// is the multiplicity of v (index 0 unused). Stops when visit returns false.
    template <class Visit>
    void run(Visit&& visit) {
        if (impossible_) return;
        stop_ = false;
        dfs(0, visit);
    }

    Tableau to_tableau(std::span<const int> fill) const {
        Tableau::Rows rows(shape_.row_count());
        for (std::size_t r = 0; r < rows.size(); ++r) rows[r].reserve(shape_.row_length(r));
        for (int pos = 0; pos < n_; ++pos) rows[row_of_[pos]].push_back(fill[pos]);
        for (auto& row : rows) std::reverse(row.begin(), row.end());
        return Tableau(shape_, std::move(rows));
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    int index_of(std::size_t r, int c) const {
        int pos = 0;
        for (std::size_t k = 0; k < r; ++k) pos += shape_.row_length(k);
        return pos + (shape_.row_end(r) - 1 - c);
    }

    bool feasible(int next) const {
        for (std::size_t v = 1; v < target_.size() + 1; ++v) {
            const int need = target_[v - 1] - counts_[v];
            if (need > n_ - std::max(next, first_pos_[v])) return false;
        }
        return true;
    }

    template <class Visit>
    void dfs(int pos, Visit& visit) {
        if ((++nodes_ & 0xFFF) == 0) deadline_.check();
        if (pos == n_) {
            if (!visit(std::span<const int>(fill_), std::span<const int>(counts_))) stop_ = true;
            return;
        }
        const int lo = above_[pos] >= 0 ? fill_[above_[pos]] + 1 : 1;
        int hi = std::min(bound_[pos], max_value_);
        if (right_[pos] >= 0) hi = std::min(hi, fill_[right_[pos]]);
        const bool filtered = !target_.empty();
        for (int v = lo; v <= hi; ++v) {
            if (v > 1 && counts_[v] >= counts_[v - 1]) {
                if (counts_[v - 1] == 0) break;  // nothing larger can be placed either
                continue;
            }
            if (filtered && counts_[v] >= target_[v - 1]) continue;
            fill_[pos] = v;
            ++counts_[v];
            if (!filtered || feasible(pos + 1)) dfs(pos + 1, visit);
            --counts_[v];
            if (stop_) return;
        }
    }

    SkewShape shape_;
    Deadline deadline_;
    std::vector<int> row_of_, right_, above_, bound_;
    std::vector<int> target_, first_pos_;
    std::vector<int> fill_, counts_;
    int n_ = 0;
    int max_value_ = 0;
    bool impossible_ = false;
    bool stop_ = false;
    std::uint64_t nodes_ = 0;
};

inline Partition partition_of_counts(std::span<const int> counts) {
    std::vector<int> parts;
    for (std::size_t v = 1; v < counts.size() && counts[v] > 0; ++v) parts.push_back(counts[v]);
    return Partition(std::move(parts));
}

}  // namespace detail

/// Streams every LR tableau of `shape` (optionally only those of content
/// `filter`) to `visit`, in lexicographic order of reverse reading words.
/// `visit` returns false to stop early.
inline void for_each_lr_tableau(const SkewShape& shape, const std::function<bool(const Tableau&)>& visit,
                                const std::optional<Partition>& filter = std::nullopt,
                                Deadline deadline = Deadline::none()) {
    detail::LrSearch search(shape, filter, deadline);
    search.run([&](std::span<const int> fill, std::span<const int>) { return visit(search.to_tableau(fill)); });
}

inline std::vector<Tableau> enumerate_lr_tableaux(const SkewShape& shape,
                                                  const std::optional<Partition>& filter = std::nullopt,
                                                  Deadline deadline = Deadline::none()) {
    std::vector<Tableau> out;
    for_each_lr_tableau(
        shape,
        [&](const Tableau& t) {
            out.push_back(t);
            return true;
        },
        filter, deadline);
    return out;
}

/// Total number of LR tableaux of the shape.
inline std::uint64_t count_lr_tableaux(const SkewShape& shape, Deadline deadline = Deadline::none()) {
    std::uint64_t total = 0;
    detail::LrSearch search(shape, std::nullopt, deadline);
    search.run([&](std::span<const int>, std::span<const int>) {
        ++total;
        return true;
    });
    return total;
}

inline LRCount lr_coefficient(const SkewShape& shape, const Partition& nu, Deadline deadline = Deadline::none()) {
    LRCount out{shape, nu, 0};
    detail::LrSearch search(shape, nu, deadline);
    search.run([&](std::span<const int>, std::span<const int>) {
        ++out.count;
        return true;
    });
    return out;
}

/// All contents of LR tableaux of the shape, with multiplicities.
inline std::map<Partition, std::uint64_t, std::greater<>> lr_coefficients(const SkewShape& shape,
                                                                        Deadline deadline = Deadline::none()) {
    std::map<Partition, std::uint64_t, std::greater<>> out;
    detail::LrSearch search(shape, std::nullopt, deadline);
    search.run([&](std::span<const int>, std::span<const int> counts) {
        ++out[detail::partition_of_counts(counts)];
        return true;
    });
    return out;
}

inline SupportSet support(const SkewShape& shape, Deadline deadline = Deadline::none()) {
    SupportSet out;
    detail::LrSearch search(shape, std::nullopt, deadline);
    std::vector<int> last;
    search.run([&](std::span<const int>, std::span<const int> counts) {
        // Consecutive leaves often share their content.
        if (!std::equal(counts.begin(), counts.end(), last.begin(), last.end())) {
            last.assign(counts.begin(), counts.end());
            out.insert(detail::partition_of_counts(counts));
        }
        return true;
    });
    return out;
}

inline SupportSet support(const RibbonShape& r, Deadline deadline = Deadline::none()) {
    return support(ribbon_to_skew(r), deadline);
}

/// Whether nu is in the support; stops at the first witness.
inline bool contains_content(const SkewShape& shape, const Partition& nu, Deadline deadline = Deadline::none()) {
    if (nu.size() != shape.box_count())
        throw std::invalid_argument("content (" + nu.str() + ") has " + std::to_string(nu.size()) +
                                    " boxes, shape " + shape.str() + " has " + std::to_string(shape.box_count()));
    bool found = false;
    detail::LrSearch search(shape, nu, deadline);
    search.run([&](std::span<const int>, std::span<const int>) {
        found = true;
        return false;
    });
    return found;
}

inline bool contains_content(const RibbonShape& r, const Partition& nu, Deadline deadline = Deadline::none()) {
    return contains_content(ribbon_to_skew(r), nu, deadline);
}

/// One LR tableau of the given content, if any.
inline std::optional<Tableau> find_lr_tableau(const SkewShape& shape, const Partition& nu,
                                              Deadline deadline = Deadline::none()) {
    std::optional<Tableau> out;
    detail::LrSearch search(shape, nu, deadline);
    search.run([&](std::span<const int> fill, std::span<const int>) {
        out = search.to_tableau(fill);
        return false;
    });
    return out;
}

inline bool supports_equal(const SkewShape& a, const SkewShape& b, Deadline deadline = Deadline::none()) {
    if (a.box_count() != b.box_count()) return false;
    return support(a, deadline) == support(b, deadline);
}

inline bool supports_equal(const RibbonShape& a, const RibbonShape& b, Deadline deadline = Deadline::none()) {
    return supports_equal(ribbon_to_skew(a), ribbon_to_skew(b), deadline);
}

/// A partition in exactly one of the two supports, with a flag telling whether
/// it belongs to the first. nullopt when the supports agree.
struct Separation {
    Partition nu;
    bool in_first = false;
};

inline std::optional<Separation> separating_content(const SupportSet& a, const SupportSet& b) {
    for (const auto& nu : a)
        if (!b.contains(nu)) return Separation{nu, true};
    for (const auto& nu : b)
        if (!a.contains(nu)) return Separation{nu, false};
    return std::nullopt;
}

/// Support of every distinct row permutation. Antipodal pairs share one
/// computation since a ribbon and its rotation have the same support.
inline std::map<RibbonShape, SupportSet> permutation_supports(const RibbonShape& r,
                                                              Deadline deadline = Deadline::none()) {
    std::map<RibbonShape, SupportSet> out;
    for (const auto& p : distinct_permutations(r)) {
        if (auto it = out.find(antipodal(p)); it != out.end()) {
            out.emplace(p, it->second);
            continue;
        }
        out.emplace(p, support(p, deadline));
    }
    return out;
}

/// Whether every row permutation of r has the same support as r. Only one
/// ribbon of each antipodal pair is computed; stops at the first mismatch.
inline bool has_full_equivalence_class(const RibbonShape& r, Deadline deadline = Deadline::none()) {
    const SupportSet base = support(r, deadline);
    std::set<RibbonShape> done{r, antipodal(r)};
    for (const auto& p : distinct_permutations(r)) {
        if (done.contains(p)) continue;
        done.insert(p);
        done.insert(antipodal(p));
        if (support(p, deadline) != base) return false;
    }
    return true;
}

}  // namespace ribbon
