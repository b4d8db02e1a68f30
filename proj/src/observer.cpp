#include "play/observer.hpp"

#include <cstdlib>
#include <cstring>

namespace play::observer {

Frame ObserverSession::capture(std::optional<WindowRect> region) {
    Frame full = backend_.capture_screen();
    Frame out;
    if (region) {
        if (region->x < 0 || region->y < 0 || region->width <= 0 ||
            region->height <= 0 ||
            region->x + region->width > int(full.width) ||
            region->y + region->height > int(full.height))
            throw RegionOutOfBoundsError("capture region outside screen");
        out.width = uint32_t(region->width);
        out.height = uint32_t(region->height);
        out.pixels.resize(out.expected_bytes());
        for (int y = 0; y < region->height; ++y) {
            const uint8_t* src =
                full.pixels.data() +
                (size_t(region->y + y) * full.width + region->x) * 4;
            std::memcpy(out.pixels.data() + size_t(y) * region->width * 4, src,
                        size_t(region->width) * 4);
        }
    } else {
        out = std::move(full);
    }
    out.captured_at_ns = clock_.now_ns();
    out.seq = ++seq_;
    return out;
}

std::string NativeObserverBackend::detect_display_platform() {
    const char* wayland = std::getenv("WAYLAND_DISPLAY");
    if (wayland && *wayland) return "wayland";
    const char* x11 = std::getenv("DISPLAY");
    if (x11 && *x11) return "x11";
    return "none";
}

NativeObserverBackend::NativeObserverBackend() = default;

Frame NativeObserverBackend::capture_screen() {
    std::string platform = detect_display_platform();
    if (platform == "wayland")
        throw UnsupportedPlatformError(
            "Wayland prevents cross-window screenshot capture");
    throw UnsupportedPlatformError(
        "native display capture not available in this build (platform: " +
        platform + ")");
}

} // namespace play::observer
