#pragma once

// Skew shapes, ribbons and row permutations.
//
// Rows are stored top to bottom, 0-based in containers. Operations that take
// a row index as an argument (rmatrix_swap, compute_nj, ...) use the 1-based
// convention of the combinatorics literature instead.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/types.hpp"

namespace ribbon {

/// lambda / mu: the boxes of `outer` with the boxes of `inner` removed from
/// the top-left corner.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner = {}) : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (inner_.length() > outer_.length())
            throw std::invalid_argument("inner partition has more rows than outer");
        for (std::size_t i = 0; i < inner_.length(); ++i)
            if (inner_.at(i) > outer_.at(i))
                throw std::invalid_argument("inner partition does not fit inside outer: (" + outer_.str() + ")/(" +
                                            inner_.str() + ")");
    }

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }

    std::size_t row_count() const noexcept { return outer_.length(); }
    /// First occupied column of row r (0-based).
    int row_start(std::size_t r) const noexcept { return inner_.at(r); }
    /// One past the last occupied column of row r.
    int row_end(std::size_t r) const noexcept { return outer_.at(r); }
    int row_length(std::size_t r) const noexcept { return outer_.at(r) - inner_.at(r); }
    int box_count() const noexcept { return outer_.size() - inner_.size(); }

    bool contains(std::size_t r, int c) const noexcept {
        return r < row_count() && c >= row_start(r) && c < row_end(r);
    }

    std::vector<int> row_lengths() const {
        std::vector<int> out(row_count());
        for (std::size_t r = 0; r < row_count(); ++r) out[r] = row_length(r);
        return out;
    }

    std::string str() const { return "(" + outer_.str() + ")/(" + inner_.str() + ")"; }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

/// A ribbon given by its row lengths, top row first.
class RibbonShape {
public:
    RibbonShape() = default;
    explicit RibbonShape(Composition rows) : rows_(std::move(rows)) {
        if (rows_.length() == 0) throw std::invalid_argument("a ribbon needs at least one row");
    }
    explicit RibbonShape(std::vector<int> rows) : RibbonShape(Composition(std::move(rows))) {}
    RibbonShape(std::initializer_list<int> rows) : RibbonShape(Composition(rows)) {}

    const Composition& composition() const noexcept { return rows_; }
    const std::vector<int>& rows() const noexcept { return rows_.parts(); }
    /// Row r, 0-based.
    int row(std::size_t r) const { return rows_[r]; }
    std::size_t row_count() const noexcept { return rows_.length(); }
    int box_count() const noexcept { return rows_.size(); }

    bool is_sorted_decreasing() const {
        return std::is_sorted(rows().begin(), rows().end(), std::greater<>());
    }
    RibbonShape sorted_decreasing() const {
        auto r = rows();
        std::sort(r.begin(), r.end(), std::greater<>());
        return RibbonShape(std::move(r));
    }

    std::string str() const { return "(" + rows_.str() + ")"; }

    friend bool operator==(const RibbonShape&, const RibbonShape&) = default;
    friend auto operator<=>(const RibbonShape&, const RibbonShape&) = default;

private:
    Composition rows_;
};

/// Canonical embedding: the bottom row starts in the first column and each
/// row above starts in the last column of the row beneath it.
inline SkewShape ribbon_to_skew(const RibbonShape& r) {
    const std::size_t m = r.row_count();
    std::vector<int> outer(m), inner(m);
    int start = 0;  // 0-based first column of the current row
    for (std::size_t k = m; k-- > 0;) {
        inner[k] = start;
        outer[k] = start + r.row(k);
        start = outer[k] - 1;
    }
    std::erase(inner, 0);
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

/// Recovers the row lengths of a skew shape that is the canonical embedding of
/// a ribbon; throws otherwise.
inline RibbonShape ribbon_of(const SkewShape& s) {
    if (s.row_count() == 0) throw std::invalid_argument("empty shape is not a ribbon");
    auto lengths = s.row_lengths();
    if (std::any_of(lengths.begin(), lengths.end(), [](int x) { return x < 1; }))
        throw std::invalid_argument("shape " + s.str() + " is not a ribbon");
    RibbonShape r(std::move(lengths));
    if (!(ribbon_to_skew(r) == s)) throw std::invalid_argument("shape " + s.str() + " is not a ribbon");
    return r;
}

/// 180 degree rotation.
inline RibbonShape antipodal(const RibbonShape& r) {
    auto rows = r.rows();
    std::reverse(rows.begin(), rows.end());
    return RibbonShape(std::move(rows));
}

/// A permutation of {1..m} in one-line notation: image[k - 1] = pi(k).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
        std::vector<bool> seen(image_.size(), false);
        for (int x : image_) {
            if (x < 1 || static_cast<std::size_t>(x) > image_.size() || seen[x - 1])
                throw std::invalid_argument("not a permutation: (" + detail::join(image_) + ")");
            seen[x - 1] = true;
        }
    }

    static Permutation identity(std::size_t m) {
        std::vector<int> img(m);
        for (std::size_t k = 0; k < m; ++k) img[k] = static_cast<int>(k + 1);
        return Permutation(std::move(img));
    }

    /// Builds a permutation of {1..m} from disjoint cycles, e.g. {{2, 3}}.
    static Permutation from_cycles(std::size_t m, const std::vector<std::vector<int>>& cycles) {
        auto img = identity(m).image_;
        for (const auto& cyc : cycles) {
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
                if (from < 1 || static_cast<std::size_t>(from) > m) throw std::invalid_argument("cycle entry out of range");
                img[from - 1] = to;
            }
        }
        return Permutation(std::move(img));
    }

    /// The order-reversing permutation k -> m + 1 - k.
    static Permutation reversal(std::size_t m) {
        std::vector<int> img(m);
        for (std::size_t k = 0; k < m; ++k) img[k] = static_cast<int>(m - k);
        return Permutation(std::move(img));
    }

    std::size_t size() const noexcept { return image_.size(); }
    int operator()(int k) const { return image_.at(k - 1); }
    const std::vector<int>& image() const noexcept { return image_; }

    Permutation inverse() const {
        std::vector<int> inv(image_.size());
        for (std::size_t k = 0; k < image_.size(); ++k) inv[image_[k] - 1] = static_cast<int>(k + 1);
        return Permutation(std::move(inv));
    }

    /// (this o other)(k) = this(other(k)).
    Permutation compose(const Permutation& other) const {
        if (other.size() != size()) throw std::invalid_argument("permutation sizes differ");
        std::vector<int> img(size());
        for (std::size_t k = 0; k < size(); ++k) img[k] = image_[other.image_[k] - 1];
        return Permutation(std::move(img));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

/// alpha_pi: row pi(k) of the result is row k of r.
inline RibbonShape permute_rows(const RibbonShape& r, const Permutation& pi) {
    if (pi.size() != r.row_count())
        throw std::invalid_argument("permutation of size " + std::to_string(pi.size()) + " applied to ribbon with " +
                                    std::to_string(r.row_count()) + " rows");
    std::vector<int> rows(r.row_count());
    for (std::size_t k = 0; k < r.row_count(); ++k) rows[pi(static_cast<int>(k + 1)) - 1] = r.row(k);
    return RibbonShape(std::move(rows));
}

/// Swaps rows j and j + 1 (1-based).
inline RibbonShape transpose_rows(const RibbonShape& r, std::size_t j) {
    if (j < 1 || j >= r.row_count()) throw std::out_of_range("row index out of range");
    auto rows = r.rows();
    std::swap(rows[j - 1], rows[j]);
    return RibbonShape(std::move(rows));
}

/// Every distinct rearrangement of the rows, in lexicographic order.
inline std::vector<RibbonShape> distinct_permutations(const RibbonShape& r) {
    auto rows = r.rows();
    std::sort(rows.begin(), rows.end());
    std::vector<RibbonShape> out;
    do {
        out.emplace_back(rows);
    } while (std::next_permutation(rows.begin(), rows.end()));
    return out;
}

/// Number of k x l all-box rectangles inside the ribbon diagram.
inline long count_rectangles(const RibbonShape& r, int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("rectangle dimensions must be positive");
    if (k >= 2 && l >= 2) return 0;
    if (k == 1) {
        long total = 0;
        for (int a : r.rows()) total += std::max(0, a - l + 1);
        return total;
    }
    // l == 1, k >= 2: a column keeps growing downward through rows of length one.
    const auto& a = r.rows();
    long total = 0;
    int h = 1;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        ++h;
        if (a[i + 1] != 1 || i + 2 == a.size()) {
            total += std::max(0, h - k + 1);
            h = 1;
        }
    }
    return total;
}

}  // namespace ribbon
