#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "play/executor.hpp"
#include "play/virtual_session.hpp"

using namespace play;
using namespace play::exec;
using namespace play::targets;
using namespace play::actions;

TEST_CASE("history is append-only and gap-free") {
    VirtualSession vs(VariantId::Game2048Ok, 7);
    ExecutorSession session(vs.executor_backend(), vs.clock());
    CHECK(session.history().empty());

    std::vector<ActionCommand> cmds = {Press{"right"}, Press{"up"},
                                       Wait{2.0}};
    for (const auto& c : cmds) session.execute(c);
    REQUIRE(session.history().size() == 3);
    for (size_t i = 0; i < cmds.size(); ++i)
        CHECK(session.history()[i].command == cmds[i]);
    for (const auto& r : session.history())
        CHECK(r.ended_at_ns >= r.started_at_ns);
}

TEST_CASE("press(right) advances the 2048 board one move") {
    VirtualSession vs(VariantId::Game2048Ok, 7);
    ExecutorSession session(vs.executor_backend(), vs.clock());
    auto before = vs.target().probe();
    auto result = session.execute(Press{"right"});
    CHECK(result.status == ExecStatus::Ok);
    auto after = vs.target().probe();
    CHECK(*before.get("board") != *after.get("board"));
    CHECK(session.history().size() == 1);
}

TEST_CASE("abort flag: no actuation, aborted entry recorded") {
    VirtualSession vs(VariantId::Game2048Ok, 7);
    ExecutorSession session(vs.executor_backend(), vs.clock());
    auto before_hash = vs.target().state_hash();
    session.request_abort();
    auto result = session.execute(Press{"right"});
    CHECK(result.status == ExecStatus::Aborted);
    CHECK(vs.target().state_hash() == before_hash);
    REQUIRE(session.history().size() == 1);
    CHECK(session.history()[0].status == ExecStatus::Aborted);
}

TEST_CASE("finish never mutates target state") {
    for (VariantId v : {VariantId::Game2048Ok, VariantId::FlappyOk}) {
        VirtualSession vs(v, 11);
        ExecutorSession session(vs.executor_backend(), vs.clock());
        auto before = vs.target().state_hash();
        session.execute(Finish{FinishOutcome::Success});
        CHECK(vs.target().state_hash() == before);
    }
}

TEST_CASE("wait advances logical ticks on the virtual backend") {
    VirtualSession vs(VariantId::FlappyOk, 7);
    ExecutorSession session(vs.executor_backend(), vs.clock());
    auto t0 = vs.target().ticks();
    session.execute(Wait{3.0});
    CHECK(vs.target().ticks() == t0 + 3);
    CHECK(vs.clock().ticks() == int64_t(t0 + 3));
}

TEST_CASE("replay determinism: same seed and commands, same end state") {
    auto run = [] {
        VirtualSession vs(VariantId::Game2048Ok, 21);
        ExecutorSession session(vs.executor_backend(), vs.clock());
        for (const char* key : {"left", "up", "right", "down", "left"}) {
            session.execute(Press{key});
            vs.tick();
        }
        return std::make_pair(vs.target().state_hash(),
                              session.history().size());
    };
    auto [h1, n1] = run();
    auto [h2, n2] = run();
    CHECK(h1 == h2);
    CHECK(n1 == n2);
}
