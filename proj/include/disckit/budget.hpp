#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>

namespace disckit {

// Wall-clock and iteration caps shared by the enumeration-heavy routines.
class Budget {
public:
    using Clock = std::chrono::steady_clock;

    Budget() = default;
    static Budget unlimited() { return {}; }
    static Budget millis(std::int64_t ms) {
        Budget b;
        b.deadline_ = Clock::now() + std::chrono::milliseconds(ms);
        return b;
    }
    // DISC_KIT_BUDGET_MS, if set, caps the wall clock.
    static Budget from_env() {
        if (const char* s = std::getenv("DISC_KIT_BUDGET_MS")) {
            try {
                return millis(std::stoll(s));
            } catch (...) {
            }
        }
        return {};
    }

    Budget& with_iterations(std::uint64_t n) {
        max_iterations_ = n;
        return *this;
    }

    // Counts one unit of work; returns false once any cap is hit.
    bool tick() {
        if (++iterations_ > max_iterations_) exhausted_ = true;
        if (deadline_ && (iterations_ & 0xff) == 0 && Clock::now() > *deadline_) exhausted_ = true;
        return !exhausted_;
    }
    bool exhausted() {
        if (!exhausted_ && deadline_ && Clock::now() > *deadline_) exhausted_ = true;
        return exhausted_;
    }
    std::uint64_t iterations() const { return iterations_; }

private:
    std::optional<Clock::time_point> deadline_;
    std::uint64_t max_iterations_ = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t iterations_ = 0;
    bool exhausted_ = false;
};

}  // namespace disckit
