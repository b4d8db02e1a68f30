#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "play/clock.hpp"
#include "play/frame.hpp"

namespace play::observer {

struct WindowRect {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;
    std::string title;
};

class UnsupportedPlatformError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RegionOutOfBoundsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Capture source: a virtual target canvas or a native display.
class ObserverBackend {
public:
    virtual ~ObserverBackend() = default;
    virtual int screen_width() const = 0;
    virtual int screen_height() const = 0;
    /// Full-screen pixels. Throws UnsupportedPlatformError when the
    /// platform cannot be captured.
    virtual Frame capture_screen() = 0;
    /// Window lookup by title substring; nullopt when not found.
    virtual std::optional<WindowRect> find_window(const std::string& title) {
        (void)title;
        return std::nullopt;
    }
};

/// One capture session: owns the seq counter and timestamps frames.
class ObserverSession {
public:
    ObserverSession(ObserverBackend& backend, Clock& clock)
        : backend_(backend), clock_(clock) {}

    /// Captures the region (or full screen), assigns the next seq.
    /// RegionOutOfBoundsError when the region exceeds the screen.
    Frame capture(std::optional<WindowRect> region = std::nullopt);

    uint64_t captures_taken() const { return seq_; }

private:
    ObserverBackend& backend_;
    Clock& clock_;
    uint64_t seq_ = 0;
};

/// Native displays are not captured in this build; the backend reports the
/// platform situation instead. Wayland is rejected outright (its security
/// model blocks cross-window capture and input injection).
class NativeObserverBackend final : public ObserverBackend {
public:
    NativeObserverBackend();
    int screen_width() const override { return 0; }
    int screen_height() const override { return 0; }
    Frame capture_screen() override;

    /// "wayland", "x11", or "none", from the session environment.
    static std::string detect_display_platform();
};

} // namespace play::observer
