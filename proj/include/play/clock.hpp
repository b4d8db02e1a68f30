#pragma once

#include <chrono>
#include <cstdint>

namespace play {

/// Time source for sessions. Virtual sessions run on a logical clock so
/// trajectories and reports replay bit-exactly; native sessions use the
/// steady clock.
class Clock {
public:
    virtual ~Clock() = default;
    virtual int64_t now_ns() = 0;
};

class SteadyClock final : public Clock {
public:
    int64_t now_ns() override {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(
                   std::chrono::steady_clock::now().time_since_epoch())
            .count();
    }
};

/// One logical tick == one second. advance() is driven by the session
/// (post-action capture delay, Wait commands).
class LogicalClock final : public Clock {
public:
    static constexpr int64_t kTickNs = 1'000'000'000;

    int64_t now_ns() override { return ticks_ * kTickNs; }
    void advance(int64_t ticks = 1) { ticks_ += ticks; }
    int64_t ticks() const { return ticks_; }

private:
    int64_t ticks_ = 0;
};

} // namespace play
