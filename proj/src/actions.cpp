#include "play/actions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

namespace play::actions {

namespace {

constexpr std::array<std::string_view, 7> kNames = {
    "click", "type", "hotkey", "press", "scroll", "wait", "finish"};

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    return out;
}

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

struct Arg {
    std::string value;
    bool quoted = false;
};

// Splits the argument list of a call-form starting right after '('.
// Returns the args and the position one past the closing ')', or nullopt
// when the call is unterminated.
std::optional<std::pair<std::vector<Arg>, size_t>> split_args(
    std::string_view text, size_t pos) {
    std::vector<Arg> args;
    std::string current;
    bool current_quoted = false;
    bool any_content = false;

    while (pos < text.size()) {
        char c = text[pos];
        if (c == '"' || c == '\'') {
            char quote = c;
            ++pos;
            std::string s;
            bool closed = false;
            while (pos < text.size()) {
                char q = text[pos];
                if (q == '\\' && pos + 1 < text.size()) {
                    s.push_back(text[pos + 1]);
                    pos += 2;
                    continue;
                }
                if (q == quote) {
                    closed = true;
                    ++pos;
                    break;
                }
                s.push_back(q);
                ++pos;
            }
            if (!closed) return std::nullopt;
            current += s;
            current_quoted = true;
            any_content = true;
        } else if (c == ',') {
            args.push_back({std::string(trim(current)), current_quoted});
            current.clear();
            current_quoted = false;
            any_content = true;
            ++pos;
        } else if (c == ')') {
            if (any_content || !trim(current).empty())
                args.push_back({std::string(trim(current)), current_quoted});
            return std::make_pair(std::move(args), pos + 1);
        } else {
            current.push_back(c);
            if (!std::isspace(static_cast<unsigned char>(c))) any_content = true;
            ++pos;
        }
    }
    return std::nullopt;
}

std::optional<int> parse_int(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

std::optional<double> parse_real(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    double value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

ParseError malformed(std::string_view name, std::string detail) {
    return {ParseErrorKind::MalformedArguments, std::string(name),
            std::move(detail)};
}

ParseResult build_command(std::string_view name, const std::vector<Arg>& args) {
    if (name == "click") {
        if (args.size() != 2) return malformed(name, "expected 2 arguments");
        auto x = parse_int(args[0].value), y = parse_int(args[1].value);
        if (!x || !y) return malformed(name, "coordinates must be integers");
        return ActionCommand(Click{*x, *y});
    }
    if (name == "type") {
        if (args.size() != 1) return malformed(name, "expected 1 argument");
        return ActionCommand(TypeText{args[0].value});
    }
    if (name == "hotkey") {
        if (args.size() < 2) return malformed(name, "needs at least 2 keys");
        std::vector<std::string> keys;
        for (const auto& a : args) {
            std::string k = lower(a.value);
            if (!is_valid_key(k)) return malformed(name, "unknown key: " + k);
            keys.push_back(std::move(k));
        }
        return ActionCommand(Hotkey{std::move(keys)});
    }
    if (name == "press") {
        if (args.size() != 1) return malformed(name, "expected 1 key");
        std::string k = lower(args[0].value);
        if (!is_valid_key(k)) return malformed(name, "unknown key: " + k);
        return ActionCommand(Press{std::move(k)});
    }
    if (name == "scroll") {
        if (args.size() != 3) return malformed(name, "expected x, y, direction");
        auto x = parse_int(args[0].value), y = parse_int(args[1].value);
        if (!x || !y) return malformed(name, "coordinates must be integers");
        auto dir = parse_scroll_direction(lower(args[2].value));
        if (!dir) return malformed(name, "bad direction: " + args[2].value);
        return ActionCommand(Scroll{*x, *y, *dir});
    }
    if (name == "wait") {
        if (args.size() != 1) return malformed(name, "expected 1 duration");
        auto d = parse_real(args[0].value);
        if (!d || !(*d > 0.0) || *d > 60.0)
            return malformed(name, "duration must be in (0, 60]");
        return ActionCommand(Wait{*d});
    }
    if (name == "finish") {
        if (args.size() != 1) return malformed(name, "expected success|failure");
        std::string o = lower(args[0].value);
        if (o == "success") return ActionCommand(Finish{FinishOutcome::Success});
        if (o == "failure") return ActionCommand(Finish{FinishOutcome::Failure});
        return malformed(name, "bad outcome: " + args[0].value);
    }
    return ParseError{ParseErrorKind::NoAction, "", "unreachable"};
}

} // namespace

bool is_valid_key(std::string_view key) {
    if (key.size() == 1) {
        unsigned char c = static_cast<unsigned char>(key[0]);
        return std::islower(c) != 0 || std::isdigit(c) != 0;
    }
    static const std::array<std::string_view, 21> kNamed = {
        "f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8", "f9", "f10", "f11",
        "f12", "ctrl", "alt", "shift", "meta", "up", "down", "left", "right",
        "enter"};
    if (std::find(kNamed.begin(), kNamed.end(), key) != kNamed.end())
        return true;
    return key == "esc" || key == "space" || key == "tab" ||
           key == "backspace";
}

std::optional<ScrollDirection> parse_scroll_direction(std::string_view s) {
    if (s == "up") return ScrollDirection::Up;
    if (s == "down") return ScrollDirection::Down;
    if (s == "left") return ScrollDirection::Left;
    if (s == "right") return ScrollDirection::Right;
    return std::nullopt;
}

const char* scroll_direction_name(ScrollDirection d) {
    switch (d) {
        case ScrollDirection::Up: return "up";
        case ScrollDirection::Down: return "down";
        case ScrollDirection::Left: return "left";
        case ScrollDirection::Right: return "right";
    }
    return "?";
}

ParseResult parse_action(std::string_view text) {
    std::string low = lower(text);
    for (size_t pos = 0; pos < low.size(); ++pos) {
        for (std::string_view name : kNames) {
            if (low.compare(pos, name.size(), name) != 0) continue;
            if (pos > 0 && is_word_char(low[pos - 1])) continue;
            size_t after = pos + name.size();
            while (after < low.size() &&
                   (low[after] == ' ' || low[after] == '\t'))
                ++after;
            if (after >= low.size() || low[after] != '(') continue;
            auto parsed = split_args(text, after + 1);
            if (!parsed)
                return malformed(name, "unterminated argument list");
            return build_command(name, parsed->first);
        }
    }
    return ParseError{ParseErrorKind::NoAction, "", "no call-form found"};
}

std::string render_action(const ActionCommand& cmd) {
    std::ostringstream out;
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Click>) {
                out << "click(" << c.x << ", " << c.y << ")";
            } else if constexpr (std::is_same_v<T, TypeText>) {
                out << "type(\"";
                for (char ch : c.text) {
                    if (ch == '"' || ch == '\\') out << '\\';
                    out << ch;
                }
                out << "\")";
            } else if constexpr (std::is_same_v<T, Hotkey>) {
                out << "hotkey(";
                for (size_t i = 0; i < c.keys.size(); ++i) {
                    if (i) out << ", ";
                    out << c.keys[i];
                }
                out << ")";
            } else if constexpr (std::is_same_v<T, Press>) {
                out << "press(" << c.key << ")";
            } else if constexpr (std::is_same_v<T, Scroll>) {
                out << "scroll(" << c.x << ", " << c.y << ", "
                    << scroll_direction_name(c.direction) << ")";
            } else if constexpr (std::is_same_v<T, Wait>) {
                char buf[32];
                auto [ptr, ec] =
                    std::to_chars(buf, buf + sizeof(buf), c.seconds);
                out << "wait(" << std::string_view(buf, ptr - buf) << ")";
            } else if constexpr (std::is_same_v<T, Finish>) {
                out << "finish("
                    << (c.outcome == FinishOutcome::Success ? "success"
                                                            : "failure")
                    << ")";
            }
        },
        cmd);
    return out.str();
}

std::optional<OutOfBounds> validate_action(const ActionCommand& cmd,
                                           ScreenBounds bounds) {
    const int* x = nullptr;
    const int* y = nullptr;
    if (const auto* c = std::get_if<Click>(&cmd)) {
        x = &c->x;
        y = &c->y;
    } else if (const auto* s = std::get_if<Scroll>(&cmd)) {
        x = &s->x;
        y = &s->y;
    }
    if (!x) return std::nullopt;
    if (*x < 0 || *x >= bounds.width || *y < 0 || *y >= bounds.height)
        return OutOfBounds{*x, *y, bounds};
    return std::nullopt;
}

} // namespace play::actions
