#pragma once

// Test-only brute force: every filling of a shape with entries in 1..k,
// filtered by the tableau predicates. Shares nothing with the LR search.

#include <algorithm>
#include <functional>
#include <ostream>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "ribbon/shape.hpp"
#include "ribbon/tableau.hpp"

namespace ribbon {

inline void PrintTo(const Tableau& t, std::ostream* os) { *os << "\n" << to_text(t); }

}  // namespace ribbon

namespace ribbon::brute {

inline void for_each_filling(const SkewShape& shape, int max_entry, const std::function<void(const Tableau&)>& f) {
    const int n = shape.box_count();
    std::vector<int> flat(n, 1);
    while (true) {
        Tableau::Rows rows(shape.row_count());
        int k = 0;
        for (std::size_t r = 0; r < shape.row_count(); ++r)
            for (int c = 0; c < shape.row_length(r); ++c) rows[r].push_back(flat[k++]);
        f(Tableau(shape, std::move(rows)));
        int pos = n - 1;
        while (pos >= 0 && flat[pos] == max_entry) flat[pos--] = 1;
        if (pos < 0) break;
        ++flat[pos];
    }
}

/// LR tableaux by exhaustive filling with entries up to the row count,
/// ordered by reverse reading word.
inline std::vector<Tableau> brute_lr_tableaux(const SkewShape& shape) {
    std::vector<Tableau> out;
    for_each_filling(shape, std::max<int>(1, static_cast<int>(shape.row_count())), [&](const Tableau& t) {
        if (is_lr(t)) out.push_back(t);
    });
    std::sort(out.begin(), out.end(),
              [](const Tableau& a, const Tableau& b) { return rrw(a).letters() < rrw(b).letters(); });
    return out;
}

/// Occupancy grid scan for k x l rectangles of a ribbon.
inline long brute_rectangles(const RibbonShape& r, int k, int l) {
    const auto s = ribbon_to_skew(r);
    const int width = s.outer().at(0);
    long total = 0;
    for (std::size_t top = 0; top + k <= s.row_count(); ++top)
        for (int left = 0; left + l <= width; ++left) {
            bool all = true;
            for (int dr = 0; dr < k && all; ++dr)
                for (int dc = 0; dc < l && all; ++dc) all = s.contains(top + dr, left + dc);
            if (all) ++total;
        }
    return total;
}

inline RibbonShape random_ribbon(std::mt19937& rng, int min_rows, int max_rows, int min_len, int max_len) {
    std::uniform_int_distribution<int> rows(min_rows, max_rows), len(min_len, max_len);
    std::vector<int> a(rows(rng));
    for (int& x : a) x = len(rng);
    return RibbonShape(std::move(a));
}

/// A random skew shape with at most max_boxes boxes (possibly disconnected).
inline SkewShape random_skew(std::mt19937& rng, int max_boxes) {
    std::uniform_int_distribution<int> rows_d(1, 4), part_d(1, 5);
    while (true) {
        std::vector<int> outer(rows_d(rng));
        for (int& x : outer) x = part_d(rng);
        std::sort(outer.begin(), outer.end(), std::greater<>());
        std::vector<int> inner;
        for (std::size_t i = 0; i < outer.size(); ++i) {
            const int cap = i == 0 ? outer[i] : std::min(outer[i], inner[i - 1]);
            inner.push_back(std::uniform_int_distribution<int>(0, cap)(rng));
        }
        while (!inner.empty() && inner.back() == 0) inner.pop_back();
        const SkewShape s{Partition(outer), Partition(inner)};
        if (s.box_count() >= 1 && s.box_count() <= max_boxes) return s;
    }
}

}  // namespace ribbon::brute
