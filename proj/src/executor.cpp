#include "play/executor.hpp"

namespace play::exec {

ActionResult ExecutorSession::execute(const actions::ActionCommand& cmd) {
    using namespace actions;
    ActionResult result;
    result.command = cmd;
    result.started_at_ns = clock_.now_ns();

    if (abort_.load()) {
        result.status = ExecStatus::Aborted;
        result.note = "abort flag set before execution";
        result.ended_at_ns = clock_.now_ns();
        history_.push_back(result);
        return result;
    }

    try {
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, Click>) {
                    backend_.click(c.x, c.y);
                } else if constexpr (std::is_same_v<T, TypeText>) {
                    backend_.type_text(c.text);
                } else if constexpr (std::is_same_v<T, Hotkey>) {
                    backend_.key_chord(c.keys);
                } else if constexpr (std::is_same_v<T, Press>) {
                    backend_.press(c.key);
                } else if constexpr (std::is_same_v<T, Scroll>) {
                    backend_.scroll(c.x, c.y, c.direction);
                } else if constexpr (std::is_same_v<T, Wait>) {
                    backend_.wait(c.seconds, abort_);
                } else if constexpr (std::is_same_v<T, Finish>) {
                    // records only; no actuation
                }
            },
            cmd);
        result.status = abort_.load() && std::holds_alternative<Wait>(cmd)
                            ? ExecStatus::Aborted
                            : ExecStatus::Ok;
    } catch (const std::exception& e) {
        result.status = ExecStatus::BackendError;
        result.note = e.what();
    }

    result.ended_at_ns = clock_.now_ns();
    history_.push_back(result);
    return result;
}

} // namespace play::exec
