#pragma once

// Basic value types: partitions, compositions, words and weight vectors.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ribbon {

namespace detail {

inline std::string join(std::span<const int> xs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace detail

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the empty partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive: (" + str() + ")");
            if (i && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must weakly decrease: (" + str() + ")");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Drops zeros and sorts; for building a partition out of raw counts.
    static Partition from_unsorted(std::vector<int> xs) {
        std::erase(xs, 0);
        std::sort(xs.begin(), xs.end(), std::greater<>());
        return Partition(std::move(xs));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Part i (0-based); 0 past the end.
    int at(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    /// True when this dominates `other` (both partitions of the same n).
    bool dominates(const Partition& other) const noexcept {
        int a = 0, b = 0;
        for (std::size_t i = 0; i < std::max(length(), other.length()); ++i) {
            a += at(i);
            b += other.at(i);
            if (a < b) return false;
        }
        return true;
    }

    std::string str() const { return detail::join(parts_); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// A set of partitions ordered descending lexicographically: (7,2) before
/// (7,1,1).
using SupportSet = std::set<Partition, std::greater<>>;

/// All partitions of n, in descending lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// A finite sequence of positive integers.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1)
                throw std::invalid_argument("composition parts must be positive: (" + detail::join(parts_) + ")");
    }
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    std::string str() const { return detail::join(parts_); }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

/// All compositions of n with `parts` parts, each at least `min_part`,
/// in lexicographic order.
inline std::vector<Composition> compositions_of(int n, int parts, int min_part = 1) {
    std::vector<Composition> out;
    if (parts <= 0 || min_part < 1) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int left) -> void {
        if (left == 1) {
            if (remaining >= min_part) {
                cur.push_back(remaining);
                out.emplace_back(cur);
                cur.pop_back();
            }
            return;
        }
        for (int p = min_part; p <= remaining - min_part * (left - 1); ++p) {
            cur.push_back(p);
            self(self, remaining - p, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, n, parts);
    return out;
}

/// A word over the positive integers.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {
        for (int x : letters_)
            if (x < 1) throw std::invalid_argument("word letters must be positive");
    }
    Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

    /// Parses a run of single digits such as "112213321".
    static Word from_digits(const std::string& s) {
        std::vector<int> xs;
        for (char c : s) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad digit in word: " + s);
            xs.push_back(c - '0');
        }
        return Word(std::move(xs));
    }

    const std::vector<int>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    std::string str() const { return detail::join(letters_, ""); }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
};

/// Multiplicity vector: counts()[i] is the number of occurrences of letter
/// i + 1. Stored with trailing zeros trimmed, so (4,3,2) == (4,3,2,0).
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<int> counts) : counts_(std::move(counts)) {
        for (int c : counts_)
            if (c < 0) throw std::invalid_argument("weight counts must be nonnegative");
        while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
    }
    WeightVector(std::initializer_list<int> counts) : WeightVector(std::vector<int>(counts)) {}

    /// Multiplicities of a multiset of positive values.
    static WeightVector of_values(std::span<const int> values) {
        std::vector<int> counts;
        for (int v : values) {
            if (v < 1) throw std::invalid_argument("values must be positive");
            if (static_cast<std::size_t>(v) > counts.size()) counts.resize(v, 0);
            ++counts[v - 1];
        }
        return WeightVector(std::move(counts));
    }

    const std::vector<int>& counts() const noexcept { return counts_; }
    std::size_t length() const noexcept { return counts_.size(); }
    bool empty() const noexcept { return counts_.empty(); }

    /// Multiplicity of the letter `value` (1-based); 0 when absent.
    int count(int value) const noexcept {
        return value >= 1 && static_cast<std::size_t>(value) <= counts_.size() ? counts_[value - 1] : 0;
    }
    int total() const noexcept { return std::accumulate(counts_.begin(), counts_.end(), 0); }

    bool is_partition() const noexcept { return std::is_sorted(counts_.begin(), counts_.end(), std::greater<>()); }
    Partition as_partition() const { return Partition(counts_); }

    /// The multiset as a sorted list of values.
    std::vector<int> values() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < counts_.size(); ++i) out.insert(out.end(), counts_[i], static_cast<int>(i + 1));
        return out;
    }

    std::string str() const { return detail::join(counts_); }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
    friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<int> counts_;
};

}  // namespace ribbon
