#pragma once

// Fillings of skew shapes, reading words and the semistandard / Yamanouchi
// predicates, plus the plain-text tableau format.
//
// Text format: one line per row. A row with inner offset k > 0 starts with a
// single token of k dots; the entries follow, separated by single spaces.
//
//     ..... 1 1
//     ... 1 2 2
//     1 2 3 3

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/shape.hpp"
#include "ribbon/types.hpp"

namespace ribbon {

class Tableau {
public:
    using Rows = std::vector<std::vector<int>>;

    Tableau() = default;
    Tableau(SkewShape shape, Rows rows) : shape_(std::move(shape)), rows_(std::move(rows)) {
        if (rows_.size() != shape_.row_count())
            throw std::invalid_argument("tableau has " + std::to_string(rows_.size()) + " rows, shape " +
                                        shape_.str() + " has " + std::to_string(shape_.row_count()));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (static_cast<int>(rows_[r].size()) != shape_.row_length(r))
                throw std::invalid_argument("row " + std::to_string(r + 1) + " of tableau has wrong length for shape " +
                                            shape_.str());
            for (int x : rows_[r])
                if (x < 1) throw std::invalid_argument("tableau entries must be positive");
        }
    }

    /// A filling of the canonical ribbon diagram.
    static Tableau of_ribbon(const RibbonShape& r, Rows rows) { return Tableau(ribbon_to_skew(r), std::move(rows)); }

    const SkewShape& shape() const noexcept { return shape_; }
    const Rows& rows() const noexcept { return rows_; }
    const std::vector<int>& row(std::size_t r) const { return rows_.at(r); }
    std::size_t row_count() const noexcept { return rows_.size(); }
    int box_count() const noexcept { return shape_.box_count(); }

    /// Entry at row r, absolute column c (both 0-based); c must lie in the row.
    int at(std::size_t r, int c) const { return rows_.at(r).at(c - shape_.row_start(r)); }

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    SkewShape shape_;
    Rows rows_;
};

/// Reverse reading word: each row right to left, rows top to bottom.
inline Word rrw(const Tableau& t) {
    std::vector<int> w;
    w.reserve(t.box_count());
    for (const auto& row : t.rows()) w.insert(w.end(), row.rbegin(), row.rend());
    return Word(std::move(w));
}

/// Every prefix has at least as many i's as (i+1)'s.
inline bool is_yamanouchi(const Word& w) {
    std::vector<int> seen;
    for (int x : w) {
        if (static_cast<std::size_t>(x) > seen.size()) seen.resize(x, 0);
        ++seen[x - 1];
        if (x > 1 && seen[x - 1] > seen[x - 2]) return false;
    }
    return true;
}

/// Rows weakly increase, columns strictly increase.
inline bool is_semistandard(const Tableau& t) {
    const auto& shape = t.shape();
    for (std::size_t r = 0; r < t.row_count(); ++r) {
        const auto& row = t.row(r);
        for (std::size_t k = 1; k < row.size(); ++k)
            if (row[k - 1] > row[k]) return false;
        if (r == 0) continue;
        for (int c = shape.row_start(r); c < shape.row_end(r); ++c)
            if (shape.contains(r - 1, c) && t.at(r - 1, c) >= t.at(r, c)) return false;
    }
    return true;
}

inline bool is_lr(const Tableau& t) { return is_semistandard(t) && is_yamanouchi(rrw(t)); }

inline WeightVector content(const Tableau& t) {
    std::vector<int> counts;
    for (const auto& row : t.rows())
        for (int x : row) {
            if (static_cast<std::size_t>(x) > counts.size()) counts.resize(x, 0);
            ++counts[x - 1];
        }
    return WeightVector(std::move(counts));
}

inline void write_tableau(std::ostream& os, const Tableau& t) {
    for (std::size_t r = 0; r < t.row_count(); ++r) {
        const int offset = t.shape().row_start(r);
        std::string line(offset, '.');
        for (int x : t.row(r)) {
            if (!line.empty()) line += ' ';
            line += std::to_string(x);
        }
        os << line << '\n';
    }
}

inline std::string to_text(const Tableau& t) {
    std::ostringstream os;
    write_tableau(os, t);
    return os.str();
}

inline Tableau read_tableau(std::istream& is) {
    std::vector<int> outer, inner;
    Tableau::Rows rows;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string tok;
        int offset = 0;
        std::vector<int> entries;
        bool first = true;
        while (ls >> tok) {
            if (first && tok.find_first_not_of('.') == std::string::npos) {
                offset = static_cast<int>(tok.size());
            } else {
                std::size_t used = 0;
                int v = 0;
                try {
                    v = std::stoi(tok, &used);
                } catch (const std::exception&) {
                    throw std::invalid_argument("bad tableau entry '" + tok + "'");
                }
                if (used != tok.size() || v < 1) throw std::invalid_argument("bad tableau entry '" + tok + "'");
                entries.push_back(v);
            }
            first = false;
        }
        inner.push_back(offset);
        outer.push_back(offset + static_cast<int>(entries.size()));
        rows.push_back(std::move(entries));
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return Tableau(SkewShape(Partition(std::move(outer)), Partition(std::move(inner))), std::move(rows));
}

inline Tableau from_text(const std::string& text) {
    std::istringstream is(text);
    return read_tableau(is);
}

}  // namespace ribbon
