#pragma once

#include <memory>

#include "play/clock.hpp"
#include "play/executor.hpp"
#include "play/observer.hpp"
#include "play/targets.hpp"

namespace play::targets {

/// Observer view over an in-process target canvas.
class VirtualObserverBackend final : public observer::ObserverBackend {
public:
    explicit VirtualObserverBackend(VirtualTarget& target) : target_(target) {}
    int screen_width() const override { return target_.canvas_width(); }
    int screen_height() const override { return target_.canvas_height(); }
    Frame capture_screen() override { return target_.render(); }

private:
    VirtualTarget& target_;
};

/// Actuation over an in-process target. Wait advances logical ticks; a
/// tick moves both the target and the session clock.
class VirtualExecutorBackend final : public exec::ExecutorBackend {
public:
    VirtualExecutorBackend(VirtualTarget& target, LogicalClock& clock)
        : target_(target), clock_(clock) {}

    actions::ScreenBounds bounds() const override {
        return {target_.canvas_width(), target_.canvas_height()};
    }
    void click(int x, int y) override {
        target_.apply(actions::Click{x, y});
    }
    void type_text(const std::string& text) override {
        target_.apply(actions::TypeText{text});
    }
    void key_chord(const std::vector<std::string>& keys) override {
        target_.apply(actions::Hotkey{keys});
    }
    void press(const std::string& key) override {
        target_.apply(actions::Press{key});
    }
    void scroll(int x, int y, actions::ScrollDirection dir) override {
        target_.apply(actions::Scroll{x, y, dir});
    }
    void wait(double seconds, const std::atomic<bool>& abort) override {
        auto ticks = int64_t(seconds + 0.5);
        if (ticks < 1) ticks = 1;
        for (int64_t i = 0; i < ticks && !abort.load(); ++i) tick();
    }

    void tick() {
        target_.tick();
        clock_.advance();
    }

private:
    VirtualTarget& target_;
    LogicalClock& clock_;
};

/// One virtual target wired to the observer/executor seams and a logical
/// clock. Deterministic: (variant, seed, command sequence) fixes the whole
/// state and frame trace.
class VirtualSession {
public:
    VirtualSession(VariantId variant, uint64_t seed)
        : target_(variant, seed),
          observer_backend_(target_),
          executor_backend_(target_, clock_) {}

    VirtualTarget& target() { return target_; }
    LogicalClock& clock() { return clock_; }
    VirtualObserverBackend& observer_backend() { return observer_backend_; }
    VirtualExecutorBackend& executor_backend() { return executor_backend_; }

    /// Post-action capture delay: one logical tick.
    void tick(int64_t n = 1) {
        for (int64_t i = 0; i < n; ++i) executor_backend_.tick();
    }

private:
    LogicalClock clock_;
    VirtualTarget target_;
    VirtualObserverBackend observer_backend_;
    VirtualExecutorBackend executor_backend_;
};

} // namespace play::targets
