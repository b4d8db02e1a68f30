#pragma once

#include <cstdint>

namespace play {

/// xorshift64* (shifts 12/25/27, multiplier 0x2545F4914F6CDD1D).
/// Fixed algorithm so that seeded runs replay bit-exactly on any platform;
/// the standard library engines are not guaranteed stable across
/// implementations.
class Xorshift64Star {
public:
    explicit Xorshift64Star(uint64_t seed)
        // state must be nonzero; seed 0 maps to a fixed odd constant
        : state_(seed != 0 ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dull;
    }

    /// Uniform in [0, 1), 53 bits.
    double next_unit() { return (next() >> 11) * (1.0 / 9007199254740992.0); }

    /// Uniform in [0, bound). bound must be > 0.
    uint64_t next_below(uint64_t bound) { return next() % bound; }

    uint64_t state() const { return state_; }

private:
    uint64_t state_;
};

} // namespace play
