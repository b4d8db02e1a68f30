#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

namespace play {

struct Rect {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;
    bool operator==(const Rect&) const = default;
};

/// A captured pixel buffer: row-major RGBA, 4 bytes per pixel.
struct Frame {
    uint32_t width = 0;
    uint32_t height = 0;
    std::vector<uint8_t> pixels;
    int64_t captured_at_ns = 0;
    uint64_t seq = 0;

    size_t expected_bytes() const { return size_t(width) * height * 4; }
    bool operator==(const Frame& o) const {
        return width == o.width && height == o.height && pixels == o.pixels;
    }
};

struct DiffReport {
    double changed_fraction = 0.0;
    std::optional<Rect> changed_bbox;
    uint64_t pixel_count = 0;  // changed pixels
};

/// Pixel-wise comparison. A pixel counts as changed when any channel
/// differs by more than channel_tolerance. Dimension mismatch is a domain
/// error.
DiffReport diff(const Frame& a, const Frame& b, uint8_t channel_tolerance = 0);

/// Same comparison restricted to a clipped sub-rectangle.
DiffReport diff_region(const Frame& a, const Frame& b, const Rect& region,
                       uint8_t channel_tolerance = 0);

/// Holds the last three captures, most recent last. seq must be strictly
/// increasing across pushes.
class FrameCache {
public:
    static constexpr size_t kCapacity = 3;

    void push(Frame frame);
    size_t size() const { return frames_.size(); }
    const Frame& at(size_t i) const { return frames_.at(i); }
    const std::deque<Frame>& frames() const { return frames_; }

private:
    std::deque<Frame> frames_;
};

enum class Motion { Static, Animating, Indeterminate };

/// Animating iff any consecutive-pair diff over the full cache exceeds the
/// changed-fraction threshold. Indeterminate with fewer than three frames.
Motion animation_state(const FrameCache& cache, double threshold = 0.005,
                       uint8_t channel_tolerance = 0);

} // namespace play
