#pragma once

// Box-ball R-matrix on two adjacent ribbon rows, and the swap-then-repair
// procedure that turns an LR tableau of shape alpha into one of shape
// alpha with rows i and i+1 exchanged.
//
// Pairing rule, for a longer upper row ("left" balls) and a shorter lower row
// ("right" balls): each right ball of value v is tied to an untied left ball of
// the largest value strictly below v; when there is none it takes the untied
// left ball of the largest value overall. Untied left balls then move to the
// lower row. When the upper row is the shorter one the same rule is applied
// to the 180 degree rotation, whose entries are complemented (v -> M + 1 - v)
// so that it stays semistandard, and the result is rotated back. This makes
// the swap an involution.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/shape.hpp"
#include "ribbon/tableau.hpp"
#include "ribbon/types.hpp"

namespace ribbon {

enum class PairingOrder { descending, ascending };

struct BoxBallState {
    WeightVector left;
    WeightVector right;
    /// (left value, right value), one entry per right ball, in processing order.
    std::vector<std::pair<int, int>> matching;
    WeightVector unmatched_left;
};

inline BoxBallState box_ball_pairing(const WeightVector& left, const WeightVector& right,
                                     PairingOrder order = PairingOrder::descending) {
    if (left.total() < right.total())
        throw std::invalid_argument("box-ball pairing needs at least as many left balls as right balls");
    std::vector<int> avail = left.counts();
    auto rights = right.values();
    if (order == PairingOrder::descending) std::reverse(rights.begin(), rights.end());

    BoxBallState out{left, right, {}, {}};
    for (int v : rights) {
        int pick = 0;
        for (int u = std::min<int>(v - 1, static_cast<int>(avail.size())); u >= 1; --u)
            if (avail[u - 1] > 0) {
                pick = u;
                break;
            }
        if (pick == 0)
            for (int u = static_cast<int>(avail.size()); u >= 1; --u)
                if (avail[u - 1] > 0) {
                    pick = u;
                    break;
                }
        --avail[pick - 1];
        out.matching.emplace_back(pick, v);
    }
    out.unmatched_left = WeightVector(std::move(avail));
    return out;
}

namespace detail {

using RowPair = std::pair<std::vector<int>, std::vector<int>>;

/// Upper row at least as long as the lower one.
inline RowPair swap_longer_upper(const std::vector<int>& upper, const std::vector<int>& lower, PairingOrder order) {
    const auto state = box_ball_pairing(WeightVector::of_values(upper), WeightVector::of_values(lower), order);
    std::vector<int> new_upper, new_lower = state.right.values();
    for (const auto& [l, r] : state.matching) new_upper.push_back(l);
    auto moved = state.unmatched_left.values();
    new_lower.insert(new_lower.end(), moved.begin(), moved.end());
    std::sort(new_upper.begin(), new_upper.end());
    std::sort(new_lower.begin(), new_lower.end());
    return {std::move(new_upper), std::move(new_lower)};
}

inline std::vector<int> complement(const std::vector<int>& row, int top) {
    std::vector<int> out(row.rbegin(), row.rend());
    for (int& x : out) x = top + 1 - x;
    return out;
}

inline RowPair swap_row_pair(const std::vector<int>& upper, const std::vector<int>& lower,
                             PairingOrder order = PairingOrder::descending) {
    if (upper.size() == lower.size()) return {upper, lower};
    if (upper.size() > lower.size()) return swap_longer_upper(upper, lower, order);
    int top = 0;
    for (int x : upper) top = std::max(top, x);
    for (int x : lower) top = std::max(top, x);
    auto [u, l] = swap_longer_upper(complement(lower, top), complement(upper, top), order);
    return {complement(l, top), complement(u, top)};
}

}  // namespace detail

/// Exchanges the lengths of rows j and j+1 (1-based) of a ribbon tableau.
/// Content is preserved, and so is semistandardness within the two rows;
/// the rest of the tableau is untouched.
inline Tableau rmatrix_swap(const Tableau& t, std::size_t j, PairingOrder order = PairingOrder::descending) {
    const RibbonShape shape = ribbon_of(t.shape());
    if (j < 1 || j >= shape.row_count())
        throw std::out_of_range("row index " + std::to_string(j) + " out of range for ribbon " + shape.str());
    const auto& upper = t.row(j - 1);
    const auto& lower = t.row(j);
    if (!std::is_sorted(upper.begin(), upper.end()) || !std::is_sorted(lower.begin(), lower.end()) ||
        upper.front() >= lower.back())
        throw std::invalid_argument("rows " + std::to_string(j) + " and " + std::to_string(j + 1) +
                                    " are not semistandard");
    auto rows = t.rows();
    std::tie(rows[j - 1], rows[j]) = detail::swap_row_pair(upper, lower, order);
    return Tableau::of_ribbon(transpose_rows(shape, j), std::move(rows));
}

/// The swap-and-repair procedure could not produce an LR tableau.
class RepairExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Which repair produced the result of swap_to_lr. The names follow the
/// entries being exchanged; `r` is the rightmost entry of row i after the
/// R-matrix step and `l` the leftmost entry of row i-1.
enum class RepairStep {
    none,           ///< R-matrix output was already LR
    swap_l_r,       ///< l > r: exchange them
    swap_w,         ///< first entry of row i-1 above r, not at the row end
    swap_x,         ///< last entry of row i below r, not at the row start
    swap_y,         ///< leftmost entry of row i below r
    swap_z,         ///< first entry of row i+1 above r
    scan_t,         ///< rightmost of row i-1, leftmost of row i-2 below r
    scan_t_s,       ///< rightmost of row i-1, then leftmost of row i-2
    scan_u,         ///< end of the row below the last nontrivial row
    scan_v,         ///< second entry of the last nontrivial row (length > 2)
    scan_v_q,       ///< second entry of a length-2 nontrivial row, then q above
};

struct RepairResult {
    Tableau tableau;
    RepairStep step = RepairStep::none;
};

inline const char* to_string(RepairStep s) {
    switch (s) {
        case RepairStep::none: return "none";
        case RepairStep::swap_l_r: return "swap_l_r";
        case RepairStep::swap_w: return "swap_w";
        case RepairStep::swap_x: return "swap_x";
        case RepairStep::swap_y: return "swap_y";
        case RepairStep::swap_z: return "swap_z";
        case RepairStep::scan_t: return "scan_t";
        case RepairStep::scan_t_s: return "scan_t_s";
        case RepairStep::scan_u: return "scan_u";
        case RepairStep::scan_v: return "scan_v";
        case RepairStep::scan_v_q: return "scan_v_q";
    }
    return "?";
}

/// swap_to_lr, also reporting which repair was applied.
inline RepairResult swap_to_lr_traced(const Tableau& a, std::size_t i) {
    const RibbonShape alpha = ribbon_of(a.shape());
    const std::size_t m = alpha.row_count();
    if (i < 1 || i >= m) throw std::out_of_range("row index " + std::to_string(i) + " out of range");
    for (int len : alpha.rows())
        if (len < 2) throw std::invalid_argument("swap_to_lr needs every row of length at least 2");
    const int ai = alpha.row(i - 1), below = alpha.row(i);
    if (ai <= below) throw std::invalid_argument("swap_to_lr needs row i longer than row i+1");
    if (i > 1 && ai >= alpha.row(i - 2) + below)
        throw std::invalid_argument("swap_to_lr needs row i shorter than rows i-1 and i+1 combined");
    if (!is_lr(a)) throw std::invalid_argument("swap_to_lr needs an LR tableau");

    const Tableau swapped = rmatrix_swap(a, i);
    if (is_lr(swapped)) return {swapped, RepairStep::none};

    const SkewShape& shape = swapped.shape();
    const auto wc = content(a);
    auto finish = [&](Tableau::Rows rows, RepairStep step) -> RepairResult {
        Tableau t(shape, std::move(rows));
        assert(content(t) == wc);
        if (!is_lr(t))
            throw RepairExhausted(std::string("repair step ") + to_string(step) + " did not give an LR tableau");
        return {std::move(t), step};
    };
    auto fail = [&](const std::string& why) -> RepairExhausted {
        return RepairExhausted("swap_to_lr at row " + std::to_string(i) + " of " + alpha.str() + ": " + why);
    };

    // Rows are addressed 1-based below to match the case analysis.
    Tableau::Rows b = swapped.rows();
    auto row = [&b](std::size_t k) -> std::vector<int>& { return b[k - 1]; };

    // Only the seam between rows i-1 and i can be broken.
    if (i == 1) throw fail("R-matrix output not LR at the top row");
    int& l = row(i - 1).front();
    int& r = row(i).back();
    if (l > r) {
        std::swap(l, r);
        return finish(b, RepairStep::swap_l_r);
    }
    if (l < r) throw fail("R-matrix output broken away from the row i-1 / row i seam");
    const int c = r;

    {
        auto& up = row(i - 1);
        auto w = std::find_if(up.begin(), up.end(), [c](int x) { return x > c; });
        if (w != up.end() && w != up.end() - 1) {
            std::swap(*w, row(i).back());
            return finish(b, RepairStep::swap_w);
        }
    }
    {
        auto& mid = row(i);
        auto x = std::find_if(mid.rbegin(), mid.rend(), [c](int v) { return v < c; });
        if (x != mid.rend() && x != mid.rend() - 1) {
            std::swap(*x, row(i - 1).front());
            return finish(b, RepairStep::swap_x);
        }
    }
    if (row(i).front() != c) {
        std::swap(row(i).front(), row(i - 1).front());
        return finish(b, RepairStep::swap_y);
    }
    {
        auto& low = row(i + 1);
        auto z = std::find_if(low.begin(), low.end(), [c](int v) { return v > c; });
        if (z == low.end() || z == low.end() - 1) throw fail("no usable entry above r in row i+1");
        Tableau::Rows bz = b;
        std::swap(bz[i][z - low.begin()], bz[i - 1].back());
        Tableau tz(shape, bz);
        if (is_lr(tz)) return {std::move(tz), RepairStep::swap_z};
    }

    // Upward scan. Row i-1 cannot be the top row here.
    if (i < 3) throw fail("upward scan reached the top row");
    const int s = row(i - 2).front();
    if (s < c) {
        std::swap(row(i).back(), row(i - 1).back());
        return finish(b, RepairStep::scan_t);
    }
    if (s > c) {
        std::swap(row(i).back(), row(i - 1).back());
        std::swap(row(i - 1).back(), row(i - 2).front());
        return finish(b, RepairStep::scan_t_s);
    }
    const int z = c + 1;
    auto trivial = [&](std::size_t k) { return row(k).size() == 2 && row(k)[0] == c && row(k)[1] == z; };
    std::size_t jj = i - 2;
    while (jj >= 1 && trivial(jj)) --jj;
    if (jj == 0) throw fail("no nontrivial row above row i-1");
    if (row(jj).front() < c) {
        std::swap(row(jj + 1).back(), row(i).back());
        return finish(b, RepairStep::scan_u);
    }
    if (row(jj).front() > c) throw fail("leftmost entry of the last nontrivial row exceeds r");
    if (row(jj).size() > 2) {
        std::swap(row(jj)[1], row(i).back());
        return finish(b, RepairStep::scan_v);
    }
    std::swap(row(jj)[1], row(i).back());
    if (jj == 1 || row(jj - 1).front() < c) return finish(b, RepairStep::scan_v);
    if (row(jj - 1).front() > c) {
        std::swap(row(jj - 1).front(), row(jj)[1]);
        return finish(b, RepairStep::scan_v_q);
    }
    throw fail("q equals r after the v swap");
}

/// From an LR tableau of shape alpha, an LR tableau of shape alpha with rows i
/// and i+1 (1-based) exchanged and the same content. Requires every row of
/// length >= 2, alpha_i > alpha_{i+1}, and alpha_i < alpha_{i-1} + alpha_{i+1}
/// when i > 1. Throws RepairExhausted if no repair applies.
inline Tableau swap_to_lr(const Tableau& a, std::size_t i) { return swap_to_lr_traced(a, i).tableau; }

}  // namespace ribbon
