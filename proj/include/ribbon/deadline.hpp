#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace ribbon {

/// Thrown by long-running searches when their deadline passes.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded() : std::runtime_error("time budget exceeded") {}
};

/// A point in time after which searches give up. Default-constructed
/// deadlines never expire.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;
    explicit Deadline(Clock::time_point until) : until_(until) {}

    static Deadline none() { return {}; }
    template <class Rep, class Period>
    static Deadline after(std::chrono::duration<Rep, Period> budget) {
        return Deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget));
    }

    bool expired() const { return until_ && Clock::now() >= *until_; }
    void check() const {
        if (expired()) throw BudgetExceeded();
    }

private:
    std::optional<Clock::time_point> until_;
};

}  // namespace ribbon
