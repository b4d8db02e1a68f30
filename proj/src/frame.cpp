#include "play/frame.hpp"

#include <algorithm>
#include <cstdlib>

#include "play/error.hpp"

namespace play {

namespace {

DiffReport diff_clipped(const Frame& a, const Frame& b, int rx, int ry, int rw,
                        int rh, uint8_t tol, uint64_t denom) {
    DiffReport report;
    int min_x = rw, min_y = rh, max_x = -1, max_y = -1;
    for (int y = ry; y < ry + rh; ++y) {
        const uint8_t* pa = a.pixels.data() + (size_t(y) * a.width + rx) * 4;
        const uint8_t* pb = b.pixels.data() + (size_t(y) * b.width + rx) * 4;
        for (int x = 0; x < rw; ++x, pa += 4, pb += 4) {
            bool changed = false;
            for (int c = 0; c < 4; ++c) {
                if (std::abs(int(pa[c]) - int(pb[c])) > int(tol)) {
                    changed = true;
                    break;
                }
            }
            if (!changed) continue;
            ++report.pixel_count;
            min_x = std::min(min_x, rx + x);
            max_x = std::max(max_x, rx + x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    }
    if (report.pixel_count > 0) {
        report.changed_bbox =
            Rect{min_x, min_y, max_x - min_x + 1, max_y - min_y + 1};
        report.changed_fraction = double(report.pixel_count) / double(denom);
    }
    return report;
}

} // namespace

DiffReport diff(const Frame& a, const Frame& b, uint8_t channel_tolerance) {
    if (a.width != b.width || a.height != b.height)
        throw DomainError("diff: frame dimensions differ");
    if (a.pixels.size() != a.expected_bytes() ||
        b.pixels.size() != b.expected_bytes())
        throw DomainError("diff: pixel buffer size mismatch");
    return diff_clipped(a, b, 0, 0, int(a.width), int(a.height),
                        channel_tolerance, uint64_t(a.width) * a.height);
}

DiffReport diff_region(const Frame& a, const Frame& b, const Rect& region,
                       uint8_t channel_tolerance) {
    if (a.width != b.width || a.height != b.height)
        throw DomainError("diff_region: frame dimensions differ");
    int rx = std::clamp(region.x, 0, int(a.width));
    int ry = std::clamp(region.y, 0, int(a.height));
    int rx2 = std::clamp(region.x + region.width, 0, int(a.width));
    int ry2 = std::clamp(region.y + region.height, 0, int(a.height));
    int rw = std::max(0, rx2 - rx), rh = std::max(0, ry2 - ry);
    uint64_t denom = uint64_t(rw) * rh;
    if (denom == 0) return {};
    return diff_clipped(a, b, rx, ry, rw, rh, channel_tolerance, denom);
}

void FrameCache::push(Frame frame) {
    if (!frames_.empty() && frame.seq <= frames_.back().seq)
        throw DomainError("FrameCache: non-monotonic seq");
    frames_.push_back(std::move(frame));
    while (frames_.size() > kCapacity) frames_.pop_front();
}

Motion animation_state(const FrameCache& cache, double threshold,
                       uint8_t channel_tolerance) {
    if (cache.size() < FrameCache::kCapacity) return Motion::Indeterminate;
    for (size_t i = 0; i + 1 < cache.size(); ++i) {
        DiffReport d = diff(cache.at(i), cache.at(i + 1), channel_tolerance);
        if (d.changed_fraction > threshold) return Motion::Animating;
    }
    return Motion::Static;
}

} // namespace play
