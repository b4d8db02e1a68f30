#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "play/error.hpp"
#include "play/frame.hpp"
#include "play/rng.hpp"
#include "play/targets.hpp"

using namespace play;
using namespace play::targets;

namespace {

// Reference 2048 rules, written the pedestrian way: pull each line out into
// a vector ordered away from the wall, compress, merge left-to-right, pad.
// Kept independent of slide_2048 on purpose.
struct OracleResult {
    std::array<uint32_t, 16> grid;
    uint64_t score_delta = 0;
};

OracleResult oracle_move(const std::array<uint32_t, 16>& grid, MoveDir dir) {
    OracleResult out{grid, 0};
    for (int lane = 0; lane < 4; ++lane) {
        std::vector<size_t> cells;
        switch (dir) {
            case MoveDir::Left:
                for (int c = 0; c < 4; ++c) cells.push_back(size_t(lane) * 4 + c);
                break;
            case MoveDir::Right:
                for (int c = 3; c >= 0; --c) cells.push_back(size_t(lane) * 4 + c);
                break;
            case MoveDir::Up:
                for (int r = 0; r < 4; ++r) cells.push_back(size_t(r) * 4 + lane);
                break;
            case MoveDir::Down:
                for (int r = 3; r >= 0; --r) cells.push_back(size_t(r) * 4 + lane);
                break;
        }
        std::vector<uint32_t> compact;
        for (size_t idx : cells)
            if (grid[idx]) compact.push_back(grid[idx]);
        std::vector<uint32_t> result;
        for (size_t i = 0; i < compact.size();) {
            if (i + 1 < compact.size() && compact[i] == compact[i + 1]) {
                result.push_back(compact[i] * 2);
                out.score_delta += compact[i] * 2;
                i += 2;
            } else {
                result.push_back(compact[i]);
                ++i;
            }
        }
        result.resize(4, 0);
        for (size_t j = 0; j < 4; ++j) out.grid[cells[j]] = result[j];
    }
    return out;
}

std::array<uint32_t, 16> random_grid(Xorshift64Star& rng) {
    std::array<uint32_t, 16> g{};
    for (auto& cell : g) {
        if (rng.next_unit() < 0.45) continue;  // empty
        cell = 1u << (1 + rng.next_below(10));
    }
    return g;
}

} // namespace

TEST_CASE("2048 slide matches the reference rules on random positions") {
    Xorshift64Star rng(77);
    for (int i = 0; i < 1000; ++i) {
        auto grid = random_grid(rng);
        for (MoveDir dir : {MoveDir::Up, MoveDir::Down, MoveDir::Left,
                            MoveDir::Right}) {
            auto expected = oracle_move(grid, dir);
            auto got = slide_2048(grid, dir);
            CHECK(got.grid == expected.grid);
            CHECK(got.score_delta == expected.score_delta);
            CHECK(got.changed == (expected.grid != grid));
        }
    }
}

TEST_CASE("2048: the published early-game move") {
    // tiles at r3c1, r3c4 (both 2) and r4c4 (4); a right swipe merges the
    // two 2-tiles into a 4 at r3c4 and leaves the 4 at r4c4
    Board2048 b;
    b.rng = Xorshift64Star(1);
    b.at(2, 0) = 2;
    b.at(2, 3) = 2;
    b.at(3, 3) = 4;

    auto slid = slide_2048(b.grid, MoveDir::Right);
    std::array<uint32_t, 16> expected{};
    expected[2 * 4 + 3] = 4;
    expected[3 * 4 + 3] = 4;
    CHECK(slid.grid == expected);
    CHECK(slid.score_delta == 4);

    Board2048 next = step_2048(b, MoveDir::Right);
    CHECK(next.at(2, 3) == 4);
    CHECK(next.at(3, 3) == 4);
    CHECK(next.score == b.score + 4);
}

TEST_CASE("2048 single-merge rule") {
    std::array<uint32_t, 16> g{};
    g[0] = g[1] = g[2] = g[3] = 2;  // top row [2,2,2,2]
    auto slid = slide_2048(g, MoveDir::Left);
    CHECK(slid.grid[0] == 4);
    CHECK(slid.grid[1] == 4);
    CHECK(slid.grid[2] == 0);
    CHECK(slid.grid[3] == 0);
    CHECK(slid.score_delta == 8);

    // [4,2,2,0] right: the pair merges, the 4 slides
    std::array<uint32_t, 16> h{};
    h[0] = 4; h[1] = 2; h[2] = 2;
    auto r = slide_2048(h, MoveDir::Right);
    CHECK(r.grid[3] == 4);
    CHECK(r.grid[2] == 4);
    CHECK(r.grid[1] == 0);
}

TEST_CASE("2048 spawn and lifecycle") {
    Board2048 b = new_board_2048(7);
    int nonzero = int(std::count_if(b.grid.begin(), b.grid.end(),
                                    [](uint32_t v) { return v != 0; }));
    CHECK(nonzero == 2);
    for (uint32_t v : b.grid) CHECK((v == 0 || v == 2 || v == 4));

    // a changing move spawns exactly one tile
    for (MoveDir dir : {MoveDir::Left, MoveDir::Right, MoveDir::Up,
                        MoveDir::Down}) {
        auto slid = slide_2048(b.grid, dir);
        Board2048 next = step_2048(b, dir);
        int next_count = int(std::count_if(next.grid.begin(), next.grid.end(),
                                           [](uint32_t v) { return v != 0; }));
        int slid_count = int(std::count_if(slid.grid.begin(), slid.grid.end(),
                                           [](uint32_t v) { return v != 0; }));
        if (slid.changed)
            CHECK(next_count == slid_count + 1);
        else
            CHECK(next.grid == b.grid);
    }

    Board2048 finished;
    finished.over = true;
    CHECK_THROWS_AS(step_2048(finished, MoveDir::Left), DomainError);
}

TEST_CASE("2048 score never decreases over random play") {
    Xorshift64Star dice(13);
    Board2048 b = new_board_2048(99);
    uint64_t score = b.score;
    for (int i = 0; i < 300 && !b.over; ++i) {
        MoveDir dir = MoveDir(dice.next_below(4));
        b = step_2048(b, dir);
        CHECK(b.score >= score);
        score = b.score;
    }
}

TEST_CASE("2048 determinism: seed + moves fix state and frames") {
    auto play_out = [](uint64_t seed) {
        Board2048 b = new_board_2048(seed);
        for (MoveDir dir : {MoveDir::Left, MoveDir::Up, MoveDir::Right,
                            MoveDir::Down, MoveDir::Left})
            if (!b.over) b = step_2048(b, dir);
        return b;
    };
    Board2048 a = play_out(7), c = play_out(7);
    CHECK(a.grid == c.grid);
    CHECK(a.score == c.score);
    CHECK(render_2048(a, VariantId::Game2048Ok).pixels ==
          render_2048(c, VariantId::Game2048Ok).pixels);
}

TEST_CASE("flappy free fall gains one unit of velocity per tick") {
    FlappyState s = new_flappy(3);
    for (int i = 0; i < 5; ++i) {
        double before = s.bird_vy;
        s = step_flappy(s, false, VariantId::FlappyOk);
        if (s.alive) CHECK(s.bird_vy == before + 1.0);
    }
    FlappyState f = new_flappy(3);
    f = step_flappy(f, true, VariantId::FlappyOk);
    CHECK(f.bird_vy == -8.0);
}

TEST_CASE("flappy collision semantics differ between variants") {
    // force an overlap: place a pipe right on the bird
    FlappyState s = new_flappy(5);
    s.pipes.clear();
    Pipe p;
    p.x = FlappyWorld::kBirdX - 2;
    p.gap_top = 0;       // no gap at the bird: gap is above the ceiling
    p.gap_bottom = 10;   // bird at y=240 is far below the gap
    s.pipes.push_back(p);

    FlappyState ok = step_flappy(s, false, VariantId::FlappyOk);
    CHECK(flappy_overlaps_pipe(ok));
    CHECK(!ok.alive);

    FlappyState through = step_flappy(s, false, VariantId::FlappyPassthrough);
    CHECK(flappy_overlaps_pipe(through));
    CHECK(through.alive);
}

TEST_CASE("flappy randomized episodes: overlap implies death only in ok") {
    for (uint64_t seed : {1ull, 7ull, 42ull, 1234ull}) {
        for (VariantId variant :
             {VariantId::FlappyOk, VariantId::FlappyPassthrough}) {
            FlappyState s = new_flappy(seed);
            Xorshift64Star dice(seed * 31 + 1);
            bool saw_overlap_alive = false;
            for (int t = 0; t < 400 && s.alive; ++t) {
                s = step_flappy(s, dice.next_unit() < 0.22, variant);
                if (flappy_overlaps_pipe(s)) {
                    if (variant == VariantId::FlappyOk)
                        CHECK(!s.alive);
                    else if (s.alive)
                        saw_overlap_alive = true;
                }
            }
            if (variant == VariantId::FlappyPassthrough)
                CHECK(saw_overlap_alive);  // the flaw is observable
        }
    }
}

TEST_CASE("flappy ground kills in both variants") {
    for (VariantId variant :
         {VariantId::FlappyOk, VariantId::FlappyPassthrough}) {
        FlappyState s = new_flappy(9);
        s.pipes.clear();
        int guard = 0;
        while (s.alive && guard++ < 100)
            s = step_flappy(s, false, variant);
        CHECK(!s.alive);
        CHECK(s.bird_y + FlappyWorld::kBirdH >=
              double(FlappyWorld::kGroundTop));
    }
}

TEST_CASE("white-on-white renders no glyph change across a merge") {
    Board2048 pre;
    pre.rng = Xorshift64Star(1);
    pre.at(2, 0) = 2;
    pre.at(2, 3) = 2;
    pre.at(3, 3) = 4;
    auto slid = slide_2048(pre.grid, MoveDir::Right);
    Board2048 post = pre;
    post.grid = slid.grid;
    post.score += slid.score_delta;

    auto glyphs = glyph_rects_2048(pre);
    auto post_glyphs = glyph_rects_2048(post);
    glyphs.insert(glyphs.end(), post_glyphs.begin(), post_glyphs.end());

    // ok variant: the merged tile's digits change pixels
    Frame ok_pre = render_2048(pre, VariantId::Game2048Ok);
    Frame ok_post = render_2048(post, VariantId::Game2048Ok);
    uint64_t ok_changed = 0;
    for (const Rect& r : glyphs)
        ok_changed += diff_region(ok_pre, ok_post, r).pixel_count;
    CHECK(ok_changed > 0);

    // white-on-white: tile rectangles change, glyph regions do not
    Frame wow_pre = render_2048(pre, VariantId::Game2048WhiteOnWhite);
    Frame wow_post = render_2048(post, VariantId::Game2048WhiteOnWhite);
    CHECK(diff(wow_pre, wow_post).pixel_count > 0);
    uint64_t wow_changed = 0;
    for (const Rect& r : glyphs)
        wow_changed += diff_region(wow_pre, wow_post, r).pixel_count;
    CHECK(wow_changed == 0);
}

TEST_CASE("virtual target: probes are side-effect-free and consistent") {
    VirtualTarget t(VariantId::Game2048Ok, 7);
    auto h1 = t.state_hash();
    ProbeSnapshot p = t.probe();
    CHECK(t.state_hash() == h1);
    CHECK(*p.get("target") == "game2048");
    CHECK(p.get_num("score").has_value());

    VirtualTarget f(VariantId::FlappyOk, 7);
    ProbeSnapshot fp = f.probe();
    CHECK(fp.get_bool("alive").value());
    // death overlay iff not alive: render reflects the probe
    Frame alive_frame = f.render();
    VirtualTarget dead(VariantId::FlappyOk, 7);
    while (!dead.game_over()) dead.tick();  // free fall to the ground
    CHECK(!dead.probe().get_bool("alive").value());
    Frame dead_frame = dead.render();
    CHECK(diff(alive_frame, dead_frame).pixel_count > 0);
}

TEST_CASE("virtual target determinism across instances") {
    auto run = [] {
        VirtualTarget t(VariantId::FlappyOk, 7);
        for (int i = 0; i < 30; ++i) {
            if (i % 3 == 0) t.apply(actions::Press{"space"});
            t.tick();
        }
        return std::make_pair(t.state_hash(), t.render().pixels);
    };
    auto [h1, px1] = run();
    auto [h2, px2] = run();
    CHECK(h1 == h2);
    CHECK(px1 == px2);
}
