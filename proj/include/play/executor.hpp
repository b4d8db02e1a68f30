#pragma once

#include <atomic>
#include <string>
#include <vector>

#include "play/actions.hpp"
#include "play/clock.hpp"

namespace play::exec {

enum class ExecStatus { Ok, Aborted, BackendError };

struct ActionResult {
    actions::ActionCommand command;
    int64_t started_at_ns = 0;
    int64_t ended_at_ns = 0;
    ExecStatus status = ExecStatus::Ok;
    std::string note;
};

/// Actuation seam shared by native and virtual targets. Bounds are stable
/// for a session.
class ExecutorBackend {
public:
    virtual ~ExecutorBackend() = default;
    virtual actions::ScreenBounds bounds() const = 0;
    virtual void click(int x, int y) = 0;
    virtual void type_text(const std::string& text) = 0;
    virtual void key_chord(const std::vector<std::string>& keys) = 0;
    virtual void press(const std::string& key) = 0;
    virtual void scroll(int x, int y, actions::ScrollDirection dir) = 0;
    /// Native backends sleep; virtual backends advance logical ticks.
    /// Implementations should poll abort() between slices.
    virtual void wait(double seconds, const std::atomic<bool>& abort) = 0;
};

/// Executes validated commands against one backend and keeps the
/// append-only history. The abort flag is the only cross-context signal
/// (failsafe): it is polled before each command; a mid-command abort only
/// interrupts Wait.
class ExecutorSession {
public:
    ExecutorSession(ExecutorBackend& backend, Clock& clock)
        : backend_(backend), clock_(clock) {}

    ActionResult execute(const actions::ActionCommand& cmd);
    const std::vector<ActionResult>& history() const { return history_; }
    void request_abort() { abort_.store(true); }
    bool abort_requested() const { return abort_.load(); }

private:
    ExecutorBackend& backend_;
    Clock& clock_;
    std::vector<ActionResult> history_;
    std::atomic<bool> abort_{false};
};

} // namespace play::exec
