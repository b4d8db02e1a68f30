#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace play::actions {

enum class ScrollDirection { Up, Down, Left, Right };
enum class FinishOutcome { Success, Failure };

struct Click {
    int x = 0;
    int y = 0;
    bool operator==(const Click&) const = default;
};

struct TypeText {
    std::string text;
    bool operator==(const TypeText&) const = default;
};

struct Hotkey {
    std::vector<std::string> keys;  // >= 2, whitelisted
    bool operator==(const Hotkey&) const = default;
};

struct Press {
    std::string key;
    bool operator==(const Press&) const = default;
};

struct Scroll {
    int x = 0;
    int y = 0;
    ScrollDirection direction = ScrollDirection::Down;
    bool operator==(const Scroll&) const = default;
};

struct Wait {
    double seconds = 1.0;  // (0, 60]
    bool operator==(const Wait&) const = default;
};

struct Finish {
    FinishOutcome outcome = FinishOutcome::Success;
    bool operator==(const Finish&) const = default;
};

using ActionCommand =
    std::variant<Click, TypeText, Hotkey, Press, Scroll, Wait, Finish>;

struct ScreenBounds {
    int width = 0;
    int height = 0;
};

enum class ParseErrorKind { NoAction, MalformedArguments };

struct ParseError {
    ParseErrorKind kind = ParseErrorKind::NoAction;
    std::string call_name;  // set for MalformedArguments
    std::string detail;
};

using ParseResult = std::variant<ActionCommand, ParseError>;

/// Scan free-form model output for the first call-form whose name is one of
/// the seven actions (case-insensitive); surrounding prose is ignored.
/// Total: any input yields a command or a classified error.
ParseResult parse_action(std::string_view text);

/// Canonical lowercase call-form. parse_action(render_action(a)) == a.
std::string render_action(const ActionCommand& cmd);

struct OutOfBounds {
    int x = 0;
    int y = 0;
    ScreenBounds bounds;
};

/// Coordinate boundary check: Click/Scroll must satisfy 0 <= x < width and
/// 0 <= y < height. Non-spatial actions always pass.
std::optional<OutOfBounds> validate_action(const ActionCommand& cmd,
                                           ScreenBounds bounds);

/// Fixed key-name whitelist: single alphanumerics, f1..f12,
/// ctrl/alt/shift/meta, arrows, enter, esc, space, tab, backspace.
bool is_valid_key(std::string_view key);

const char* scroll_direction_name(ScrollDirection d);
std::optional<ScrollDirection> parse_scroll_direction(std::string_view s);

} // namespace play::actions
