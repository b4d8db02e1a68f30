#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "play/actions.hpp"
#include "play/rng.hpp"

using namespace play;
using namespace play::actions;

namespace {

bool is_error(const ParseResult& r, ParseErrorKind kind) {
    const auto* e = std::get_if<ParseError>(&r);
    return e && e->kind == kind;
}

const ActionCommand& cmd_of(const ParseResult& r) {
    return std::get<ActionCommand>(r);
}

ActionCommand random_command(Xorshift64Star& rng) {
    static const std::vector<std::string> keys = {
        "a", "z", "0", "9", "f1", "f12", "ctrl", "alt", "shift",  "meta",
        "up", "down", "left", "right", "enter", "esc", "space", "tab",
        "backspace"};
    auto rand_int = [&] { return int(rng.next_below(2000)) - 500; };
    auto rand_text = [&] {
        static const std::string pool =
            "abcXYZ 0189 _-.,;:!?()[]{}'\"\\/\n\t<>=+*#%&|~";
        std::string s;
        size_t len = rng.next_below(24);
        for (size_t i = 0; i < len; ++i)
            s.push_back(pool[rng.next_below(pool.size())]);
        return s;
    };
    switch (rng.next_below(7)) {
        case 0: return Click{rand_int(), rand_int()};
        case 1: return TypeText{rand_text()};
        case 2: {
            Hotkey h;
            size_t count = 2 + rng.next_below(3);
            for (size_t i = 0; i < count; ++i)
                h.keys.push_back(keys[rng.next_below(keys.size())]);
            return h;
        }
        case 3: return Press{keys[rng.next_below(keys.size())]};
        case 4:
            return Scroll{rand_int(), rand_int(),
                          ScrollDirection(rng.next_below(4))};
        case 5: {
            double d = rng.next_unit() * 59.999 + 0.001;
            return Wait{d};
        }
        default:
            return Finish{rng.next_below(2) ? FinishOutcome::Success
                                            : FinishOutcome::Failure};
    }
}

} // namespace

TEST_CASE("parse: direct grammar cases") {
    CHECK(cmd_of(parse_action("click(100, 200)")) ==
          ActionCommand(Click{100, 200}));
    CHECK(cmd_of(parse_action("I will end the test now: finish(success)")) ==
          ActionCommand(Finish{FinishOutcome::Success}));
    CHECK(cmd_of(parse_action("press(right)")) ==
          ActionCommand(Press{"right"}));
    CHECK(cmd_of(parse_action("scroll(5, 6, down)")) ==
          ActionCommand(Scroll{5, 6, ScrollDirection::Down}));
    CHECK(cmd_of(parse_action("wait(2.5)")) == ActionCommand(Wait{2.5}));
    CHECK(cmd_of(parse_action("type(\"hello world\")")) ==
          ActionCommand(TypeText{"hello world"}));
    CHECK(cmd_of(parse_action("type('single')")) ==
          ActionCommand(TypeText{"single"}));
    CHECK(cmd_of(parse_action("hotkey(ctrl, s)")) ==
          ActionCommand(Hotkey{{"ctrl", "s"}}));
}

TEST_CASE("parse: prose skipping and first-match-wins") {
    auto r = parse_action(
        "The board looks sparse. Best plan: press(up) to merge, then maybe "
        "press(left).");
    CHECK(cmd_of(r) == ActionCommand(Press{"up"}));

    CHECK(cmd_of(parse_action("CLICK(1,2)")) == ActionCommand(Click{1, 2}));
    CHECK(cmd_of(parse_action("click (3, 4)")) == ActionCommand(Click{3, 4}));
}

TEST_CASE("parse: classified errors") {
    CHECK(is_error(parse_action("fly(1)"), ParseErrorKind::NoAction));
    CHECK(is_error(parse_action(""), ParseErrorKind::NoAction));
    CHECK(is_error(parse_action("no calls here"), ParseErrorKind::NoAction));
    // word-boundary: "clicking" is prose, not click(
    CHECK(is_error(parse_action("clicking along"), ParseErrorKind::NoAction));

    CHECK(is_error(parse_action("hotkey(ctrl)"),
                   ParseErrorKind::MalformedArguments));
    CHECK(is_error(parse_action("click(1)"),
                   ParseErrorKind::MalformedArguments));
    CHECK(is_error(parse_action("click(a, b)"),
                   ParseErrorKind::MalformedArguments));
    CHECK(is_error(parse_action("click(1, 2"),
                   ParseErrorKind::MalformedArguments));
    CHECK(is_error(parse_action("wait(0)"),
                   ParseErrorKind::MalformedArguments));
    CHECK(is_error(parse_action("wait(61)"),
                   ParseErrorKind::MalformedArguments));
    CHECK(is_error(parse_action("finish(done)"),
                   ParseErrorKind::MalformedArguments));
    CHECK(is_error(parse_action("press(bogus_key)"),
                   ParseErrorKind::MalformedArguments));
    const auto* e = std::get_if<ParseError>(&parse_action("hotkey(ctrl)"));
    REQUIRE(e != nullptr);
    CHECK(e->call_name == "hotkey");
}

TEST_CASE("parse: negative coordinates parse, validation rejects them") {
    auto r = parse_action("click(-3, 10)");
    CHECK(cmd_of(r) == ActionCommand(Click{-3, 10}));
    auto oob = validate_action(cmd_of(r), {800, 600});
    REQUIRE(oob.has_value());
    CHECK(oob->x == -3);
}

TEST_CASE("validate: boundary semantics") {
    ScreenBounds b{800, 600};
    CHECK(!validate_action(Click{100, 200}, b).has_value());
    CHECK(validate_action(Click{800, 10}, b).has_value());  // x == width
    CHECK(validate_action(Click{10, 600}, b).has_value());
    CHECK(!validate_action(Click{799, 599}, b).has_value());
    CHECK(!validate_action(Wait{5}, b).has_value());
    CHECK(!validate_action(Finish{FinishOutcome::Failure}, b).has_value());
    CHECK(validate_action(Scroll{900, 10, ScrollDirection::Up}, b).has_value());
}

TEST_CASE("render: canonical forms") {
    CHECK(render_action(Click{5, 9}) == "click(5, 9)");
    CHECK(render_action(Finish{FinishOutcome::Failure}) == "finish(failure)");
    CHECK(render_action(Hotkey{{"ctrl", "s"}}) == "hotkey(ctrl, s)");
    CHECK(render_action(Wait{5}) == "wait(5)");
    CHECK(render_action(TypeText{"a\"b\\c"}) == "type(\"a\\\"b\\\\c\")");
}

TEST_CASE("property: parse(render(a)) == a") {
    Xorshift64Star rng(2024);
    for (int i = 0; i < 2000; ++i) {
        ActionCommand a = random_command(rng);
        ParseResult r = parse_action(render_action(a));
        REQUIRE(std::holds_alternative<ActionCommand>(r));
        CHECK(cmd_of(r) == a);
    }
}

TEST_CASE("property: parser is total over random byte strings") {
    Xorshift64Star rng(99);
    for (int i = 0; i < 2000; ++i) {
        std::string s;
        size_t len = rng.next_below(120);
        for (size_t j = 0; j < len; ++j)
            s.push_back(char(uint8_t(rng.next_below(256))));
        ParseResult r = parse_action(s);  // must classify, never crash
        CHECK((std::holds_alternative<ActionCommand>(r) ||
               std::holds_alternative<ParseError>(r)));
    }
}
