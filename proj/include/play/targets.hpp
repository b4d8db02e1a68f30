#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "play/actions.hpp"
#include "play/frame.hpp"
#include "play/probe.hpp"
#include "play/rng.hpp"

namespace play::targets {

enum class VariantId {
    Game2048Ok,
    Game2048WhiteOnWhite,
    FlappyOk,
    FlappyPassthrough,
};

std::optional<VariantId> parse_variant(std::string_view id);
const char* variant_name(VariantId id);
/// All variant ids, for CLI listings.
std::vector<std::string> variant_names();

// ---------------------------------------------------------------- 2048 --

enum class MoveDir { Up, Down, Left, Right };

struct Board2048 {
    std::array<uint32_t, 16> grid{};  // row-major, r*4+c, r0 = top
    uint64_t score = 0;
    Xorshift64Star rng{0};
    bool over = false;

    uint32_t at(int r, int c) const { return grid[size_t(r) * 4 + c]; }
    uint32_t& at(int r, int c) { return grid[size_t(r) * 4 + c]; }
};

/// Fresh board: two spawned tiles (2 with probability 0.9, else 4, uniform
/// empty cell), per the canonical rules.
Board2048 new_board_2048(uint64_t seed);

struct SlideResult {
    std::array<uint32_t, 16> grid{};
    uint64_t score_delta = 0;
    bool changed = false;
};

/// Pure slide-and-merge toward the direction; each tile merges at most once
/// per move. No spawn, no rng. This is the piece the rules oracle checks.
SlideResult slide_2048(const std::array<uint32_t, 16>& grid, MoveDir dir);

/// Full move: slide, add merge values to score, spawn one tile if the board
/// changed, then recompute game-over. Moving a finished board is a domain
/// error.
Board2048 step_2048(const Board2048& board, MoveDir dir);

// -------------------------------------------------------------- flappy --

struct Pipe {
    double x = 0;         // left edge
    double gap_top = 0;   // gap upper y
    double gap_bottom = 0;
};

struct FlappyState {
    double bird_y = 0;   // top of bird rect
    double bird_vy = 0;
    std::vector<Pipe> pipes;
    uint64_t score = 0;
    bool alive = true;
    uint64_t tick = 0;
    Xorshift64Star rng{0};
};

struct FlappyWorld {
    static constexpr int kCanvasW = 288;
    static constexpr int kCanvasH = 512;
    static constexpr int kGroundTop = 472;
    static constexpr int kBirdX = 60;
    static constexpr int kBirdW = 20;
    static constexpr int kBirdH = 16;
    static constexpr int kPipeW = 40;
    static constexpr int kGapH = 120;
    static constexpr double kGravity = 1.0;
    static constexpr double kFlapVy = -8.0;
    static constexpr double kPipeSpeed = 2.0;
    static constexpr int kPipeSpacing = 110;  // ticks between spawns
};

FlappyState new_flappy(uint64_t seed);

/// One physics tick. flap overrides gravity for this tick. In FlappyOk any
/// bird/pipe rectangle overlap or ground contact kills; FlappyPassthrough
/// omits the pipe branch (ground still kills). Dead states are inert.
FlappyState step_flappy(const FlappyState& s, bool flap, VariantId variant);

/// Bird/pipe overlap at this instant (geometry only, no variant logic).
bool flappy_overlaps_pipe(const FlappyState& s);

// ----------------------------------------------------------- rendering --

Frame render_2048(const Board2048& b, VariantId variant);
Frame render_flappy(const FlappyState& s, VariantId variant);

/// Pixel areas where tile digits are drawn (nonzero cells only). The
/// visible-feedback check diffs exactly these regions.
std::vector<Rect> glyph_rects_2048(const Board2048& b);

ProbeSnapshot probe_2048(const Board2048& b, uint64_t tick);
ProbeSnapshot probe_flappy(const FlappyState& s);

// ------------------------------------------------------ session target --

/// An in-process deterministic GUI application instance. Owns the state of
/// one variant, maps GUI actions onto game inputs, advances logical ticks,
/// and keeps the per-tick probe history.
class VirtualTarget {
public:
    VirtualTarget(VariantId variant, uint64_t seed);

    VariantId variant() const { return variant_; }
    int canvas_width() const;
    int canvas_height() const;

    /// Game-semantic action mapping: arrow presses move 2048 boards;
    /// space/up presses and clicks flap the bird. Finish performs nothing.
    void apply(const actions::ActionCommand& cmd);

    /// One logical tick (flappy physics step; 2048 idles).
    void tick();

    Frame render() const;
    ProbeSnapshot probe() const;
    const std::vector<ProbeSnapshot>& probe_trace() const { return trace_; }
    /// Standardized-log lines the target emitted so far (PLAYLOG format).
    const std::vector<std::string>& log_lines() const { return logs_; }
    std::vector<Rect> glyph_rects() const;
    bool game_over() const;
    uint64_t ticks() const { return tick_count_; }
    /// Digest over the full game state; Finish must not change it.
    std::string state_hash() const;

private:
    void record_probe();
    void log_event(const std::string& level, const std::string& event,
                   const std::string& fields);

    VariantId variant_;
    std::optional<Board2048> board_;
    std::optional<FlappyState> flappy_;
    bool pending_flap_ = false;
    uint64_t tick_count_ = 0;
    std::vector<ProbeSnapshot> trace_;
    std::vector<std::string> logs_;
};

} // namespace play::targets
