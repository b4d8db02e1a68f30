#include "play/targets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "play/digest.hpp"
#include "play/error.hpp"

namespace play::targets {

namespace {

// ------------------------------------------------------------- drawing --

struct Color {
    uint8_t r, g, b;
};

void fill_rect(Frame& f, int x, int y, int w, int h, Color c) {
    int x0 = std::max(0, x), y0 = std::max(0, y);
    int x1 = std::min(int(f.width), x + w), y1 = std::min(int(f.height), y + h);
    for (int yy = y0; yy < y1; ++yy) {
        uint8_t* p = f.pixels.data() + (size_t(yy) * f.width + x0) * 4;
        for (int xx = x0; xx < x1; ++xx, p += 4) {
            p[0] = c.r;
            p[1] = c.g;
            p[2] = c.b;
            p[3] = 255;
        }
    }
}

// 5x7 bitmap digits, row bitmasks, bit 4 = leftmost column
constexpr uint8_t kDigitRows[10][7] = {
    {0x0e, 0x11, 0x13, 0x15, 0x19, 0x11, 0x0e},  // 0
    {0x04, 0x0c, 0x04, 0x04, 0x04, 0x04, 0x0e},  // 1
    {0x0e, 0x11, 0x01, 0x02, 0x04, 0x08, 0x1f},  // 2
    {0x1f, 0x02, 0x04, 0x02, 0x01, 0x11, 0x0e},  // 3
    {0x02, 0x06, 0x0a, 0x12, 0x1f, 0x02, 0x02},  // 4
    {0x1f, 0x10, 0x1e, 0x01, 0x01, 0x11, 0x0e},  // 5
    {0x06, 0x08, 0x10, 0x1e, 0x11, 0x11, 0x0e},  // 6
    {0x1f, 0x01, 0x02, 0x04, 0x08, 0x08, 0x08},  // 7
    {0x0e, 0x11, 0x11, 0x0e, 0x11, 0x11, 0x0e},  // 8
    {0x0e, 0x11, 0x11, 0x0f, 0x01, 0x02, 0x0c},  // 9
};

constexpr int kGlyphScale = 3;
constexpr int kGlyphW = 5 * kGlyphScale;   // 15
constexpr int kGlyphH = 7 * kGlyphScale;   // 21
constexpr int kGlyphSpacing = 3;

int text_width(size_t digits) {
    return int(digits) * kGlyphW + (int(digits) - 1) * kGlyphSpacing;
}

void draw_digit(Frame& f, int x, int y, int digit, Color c) {
    for (int row = 0; row < 7; ++row) {
        uint8_t bits = kDigitRows[digit][row];
        for (int col = 0; col < 5; ++col) {
            if (!(bits & (1 << (4 - col)))) continue;
            fill_rect(f, x + col * kGlyphScale, y + row * kGlyphScale,
                      kGlyphScale, kGlyphScale, c);
        }
    }
}

void draw_number(Frame& f, int x, int y, uint64_t value, Color c) {
    std::string s = std::to_string(value);
    for (size_t i = 0; i < s.size(); ++i)
        draw_digit(f, x + int(i) * (kGlyphW + kGlyphSpacing), y, s[i] - '0', c);
}

std::string fmt_num(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

// --------------------------------------------------------- 2048 layout --

constexpr int kMargin = 10;
constexpr int kHeader = 60;
constexpr int kCell = 100;
constexpr int kCellGap = 8;
constexpr int kBoardW = 2 * kMargin + 4 * kCell + 3 * kCellGap;  // 444

constexpr Color kPageBg{250, 248, 239};
constexpr Color kBoardBg{187, 173, 160};
constexpr Color kEmptyCell{205, 193, 180};
constexpr Color kDarkText{119, 110, 101};
constexpr Color kLightText{249, 246, 242};
constexpr Color kWhite{255, 255, 255};

Color tile_fill(uint32_t v) {
    switch (v) {
        case 2: return {238, 228, 218};
        case 4: return {237, 224, 200};
        case 8: return {242, 177, 121};
        case 16: return {245, 149, 99};
        case 32: return {246, 124, 95};
        case 64: return {246, 94, 59};
        case 128: return {237, 207, 114};
        case 256: return {237, 204, 97};
        case 512: return {237, 200, 80};
        case 1024: return {237, 197, 63};
        case 2048: return {237, 194, 46};
        default: return {60, 58, 50};
    }
}

int cell_x(int c) { return kMargin + c * (kCell + kCellGap); }
int cell_y(int r) { return kHeader + kMargin + r * (kCell + kCellGap); }

Rect glyph_rect(int r, int c, uint32_t value) {
    size_t digits = std::to_string(value).size();
    int w = text_width(digits);
    return Rect{cell_x(c) + (kCell - w) / 2, cell_y(r) + (kCell - kGlyphH) / 2,
                w, kGlyphH};
}

// --------------------------------------------------------- 2048 moves --

// line_order[i] = grid index, wall side first
using LineOrder = std::array<size_t, 4>;

std::array<LineOrder, 4> line_orders(MoveDir dir) {
    std::array<LineOrder, 4> lines{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            size_t idx = 0;
            switch (dir) {
                case MoveDir::Right: idx = size_t(i) * 4 + (3 - j); break;
                case MoveDir::Left: idx = size_t(i) * 4 + j; break;
                case MoveDir::Up: idx = size_t(j) * 4 + i; break;
                case MoveDir::Down: idx = size_t(3 - j) * 4 + i; break;
            }
            lines[i][j] = idx;
        }
    }
    return lines;
}

void spawn_tile(Board2048& b) {
    std::vector<size_t> empties;
    for (size_t i = 0; i < 16; ++i)
        if (b.grid[i] == 0) empties.push_back(i);
    if (empties.empty()) return;
    size_t cell = empties[b.rng.next_below(empties.size())];
    b.grid[cell] = b.rng.next_unit() < 0.9 ? 2 : 4;
}

bool any_move_changes(const std::array<uint32_t, 16>& grid) {
    for (MoveDir d : {MoveDir::Up, MoveDir::Down, MoveDir::Left,
                      MoveDir::Right})
        if (slide_2048(grid, d).changed) return true;
    return false;
}

} // namespace

std::optional<VariantId> parse_variant(std::string_view id) {
    if (id == "game2048_ok") return VariantId::Game2048Ok;
    if (id == "game2048_white_on_white") return VariantId::Game2048WhiteOnWhite;
    if (id == "flappy_ok") return VariantId::FlappyOk;
    if (id == "flappy_passthrough") return VariantId::FlappyPassthrough;
    return std::nullopt;
}

const char* variant_name(VariantId id) {
    switch (id) {
        case VariantId::Game2048Ok: return "game2048_ok";
        case VariantId::Game2048WhiteOnWhite: return "game2048_white_on_white";
        case VariantId::FlappyOk: return "flappy_ok";
        case VariantId::FlappyPassthrough: return "flappy_passthrough";
    }
    return "?";
}

std::vector<std::string> variant_names() {
    return {"game2048_ok", "game2048_white_on_white", "flappy_ok",
            "flappy_passthrough"};
}

Board2048 new_board_2048(uint64_t seed) {
    Board2048 b;
    b.rng = Xorshift64Star(seed);
    spawn_tile(b);
    spawn_tile(b);
    return b;
}

SlideResult slide_2048(const std::array<uint32_t, 16>& grid, MoveDir dir) {
    SlideResult result;
    result.grid = grid;
    for (const LineOrder& line : line_orders(dir)) {
        // gather nonzero values wall-first, merge adjacent equal pairs once
        std::array<uint32_t, 4> vals{};
        size_t count = 0;
        for (size_t idx : line)
            if (grid[idx] != 0) vals[count++] = grid[idx];

        std::array<uint32_t, 4> merged{};
        size_t out = 0;
        for (size_t i = 0; i < count;) {
            if (i + 1 < count && vals[i] == vals[i + 1]) {
                merged[out++] = vals[i] * 2;
                result.score_delta += vals[i] * 2;
                i += 2;
            } else {
                merged[out++] = vals[i];
                i += 1;
            }
        }
        for (size_t j = 0; j < 4; ++j)
            result.grid[line[j]] = j < out ? merged[j] : 0;
    }
    result.changed = result.grid != grid;
    return result;
}

Board2048 step_2048(const Board2048& board, MoveDir dir) {
    if (board.over) throw DomainError("step_2048: board is finished");
    Board2048 next = board;
    SlideResult slid = slide_2048(board.grid, dir);
    if (slid.changed) {
        next.grid = slid.grid;
        next.score += slid.score_delta;
        spawn_tile(next);
    }
    next.over = !any_move_changes(next.grid);
    return next;
}

FlappyState new_flappy(uint64_t seed) {
    FlappyState s;
    s.rng = Xorshift64Star(seed);
    s.bird_y = 240;
    s.bird_vy = 0;
    Pipe first;
    first.x = 240;
    first.gap_top = 40 + double(s.rng.next_below(
                             uint64_t(FlappyWorld::kGroundTop -
                                      FlappyWorld::kGapH - 80)));
    first.gap_bottom = first.gap_top + FlappyWorld::kGapH;
    s.pipes.push_back(first);
    return s;
}

bool flappy_overlaps_pipe(const FlappyState& s) {
    const double bx0 = FlappyWorld::kBirdX;
    const double bx1 = bx0 + FlappyWorld::kBirdW;
    const double by0 = s.bird_y;
    const double by1 = s.bird_y + FlappyWorld::kBirdH;
    for (const Pipe& p : s.pipes) {
        if (p.x >= bx1 || p.x + FlappyWorld::kPipeW <= bx0) continue;
        if (by0 < p.gap_top || by1 > p.gap_bottom) return true;
    }
    return false;
}

FlappyState step_flappy(const FlappyState& s, bool flap, VariantId variant) {
    if (!s.alive) return s;  // dead states are inert

    FlappyState n = s;
    n.tick = s.tick + 1;
    n.bird_vy = flap ? FlappyWorld::kFlapVy
                     : s.bird_vy + FlappyWorld::kGravity;
    n.bird_y = s.bird_y + n.bird_vy;
    if (n.bird_y < 0) {
        n.bird_y = 0;
        n.bird_vy = 0;
    }

    for (Pipe& p : n.pipes) {
        double old_trailing = p.x + FlappyWorld::kPipeW;
        p.x -= FlappyWorld::kPipeSpeed;
        if (old_trailing >= FlappyWorld::kBirdX &&
            p.x + FlappyWorld::kPipeW < FlappyWorld::kBirdX)
            n.score += 1;
    }
    std::erase_if(n.pipes,
                  [](const Pipe& p) { return p.x + FlappyWorld::kPipeW < 0; });
    if (n.tick % FlappyWorld::kPipeSpacing == 0) {
        Pipe p;
        p.x = FlappyWorld::kCanvasW;
        p.gap_top = 40 + double(n.rng.next_below(
                             uint64_t(FlappyWorld::kGroundTop -
                                      FlappyWorld::kGapH - 80)));
        p.gap_bottom = p.gap_top + FlappyWorld::kGapH;
        n.pipes.push_back(p);
    }

    // ground kills in every variant
    if (n.bird_y + FlappyWorld::kBirdH >= FlappyWorld::kGroundTop) {
        n.bird_y = FlappyWorld::kGroundTop - FlappyWorld::kBirdH;
        n.alive = false;
    }
    // the pipe-collision branch is the one the passthrough variant omits
    if (variant == VariantId::FlappyOk && n.alive && flappy_overlaps_pipe(n))
        n.alive = false;
    return n;
}

Frame render_2048(const Board2048& b, VariantId variant) {
    bool wow = variant == VariantId::Game2048WhiteOnWhite;
    Frame f;
    f.width = kBoardW;
    f.height = kHeader + kBoardW;
    f.pixels.assign(f.expected_bytes(), 0);
    fill_rect(f, 0, 0, int(f.width), kHeader, kPageBg);
    fill_rect(f, 0, kHeader, int(f.width), kBoardW, kBoardBg);
    draw_number(f, kMargin, (kHeader - kGlyphH) / 2, b.score, kDarkText);

    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            uint32_t v = b.at(r, c);
            Color fill = v == 0 ? kEmptyCell : (wow ? kWhite : tile_fill(v));
            fill_rect(f, cell_x(c), cell_y(r), kCell, kCell, fill);
            if (v == 0) continue;
            Color text = wow ? kWhite : (v <= 4 ? kDarkText : kLightText);
            Rect g = glyph_rect(r, c, v);
            std::string digits = std::to_string(v);
            for (size_t i = 0; i < digits.size(); ++i)
                draw_digit(f, g.x + int(i) * (kGlyphW + kGlyphSpacing), g.y,
                           digits[i] - '0', text);
        }
    }
    if (b.over) {
        // game-over border
        Color border{180, 60, 60};
        fill_rect(f, 0, kHeader, int(f.width), 6, border);
        fill_rect(f, 0, int(f.height) - 6, int(f.width), 6, border);
        fill_rect(f, 0, kHeader, 6, kBoardW, border);
        fill_rect(f, int(f.width) - 6, kHeader, 6, kBoardW, border);
    }
    return f;
}

std::vector<Rect> glyph_rects_2048(const Board2048& b) {
    std::vector<Rect> rects;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (uint32_t v = b.at(r, c); v != 0)
                rects.push_back(glyph_rect(r, c, v));
    return rects;
}

Frame render_flappy(const FlappyState& s, VariantId variant) {
    (void)variant;  // both variants render identically
    Frame f;
    f.width = FlappyWorld::kCanvasW;
    f.height = FlappyWorld::kCanvasH;
    f.pixels.assign(f.expected_bytes(), 0);
    fill_rect(f, 0, 0, FlappyWorld::kCanvasW, FlappyWorld::kCanvasH,
              {135, 206, 235});
    for (const Pipe& p : s.pipes) {
        int px = int(std::lround(p.x));
        int top = int(std::lround(p.gap_top));
        int bottom = int(std::lround(p.gap_bottom));
        fill_rect(f, px, 0, FlappyWorld::kPipeW, top, {60, 179, 75});
        fill_rect(f, px, bottom, FlappyWorld::kPipeW,
                  FlappyWorld::kGroundTop - bottom, {60, 179, 75});
    }
    fill_rect(f, 0, FlappyWorld::kGroundTop, FlappyWorld::kCanvasW,
              FlappyWorld::kCanvasH - FlappyWorld::kGroundTop,
              {222, 184, 135});
    Color bird = s.alive ? Color{255, 220, 60} : Color{120, 120, 120};
    fill_rect(f, FlappyWorld::kBirdX, int(std::lround(s.bird_y)),
              FlappyWorld::kBirdW, FlappyWorld::kBirdH, bird);
    draw_number(f, 8, 8, s.score, {40, 40, 40});
    if (!s.alive) {
        Color border{200, 40, 40};
        fill_rect(f, 0, 0, FlappyWorld::kCanvasW, 8, border);
        fill_rect(f, 0, FlappyWorld::kCanvasH - 8, FlappyWorld::kCanvasW, 8,
                  border);
        fill_rect(f, 0, 0, 8, FlappyWorld::kCanvasH, border);
        fill_rect(f, FlappyWorld::kCanvasW - 8, 0, 8, FlappyWorld::kCanvasH,
                  border);
    }
    return f;
}

ProbeSnapshot probe_2048(const Board2048& b, uint64_t tick) {
    ProbeSnapshot p;
    p.tick = tick;
    p.values["target"] = "game2048";
    std::ostringstream board;
    for (size_t i = 0; i < 16; ++i) {
        if (i) board << ",";
        board << b.grid[i];
    }
    p.values["board"] = board.str();
    p.values["score"] = std::to_string(b.score);
    p.values["over"] = b.over ? "true" : "false";
    return p;
}

ProbeSnapshot probe_flappy(const FlappyState& s) {
    ProbeSnapshot p;
    p.tick = s.tick;
    p.values["target"] = "flappy";
    p.values["y"] = fmt_num(s.bird_y);
    p.values["vy"] = fmt_num(s.bird_vy);
    p.values["alive"] = s.alive ? "true" : "false";
    p.values["score"] = std::to_string(s.score);
    p.values["overlap"] = flappy_overlaps_pipe(s) ? "true" : "false";
    std::ostringstream pipes;
    for (size_t i = 0; i < s.pipes.size(); ++i) {
        if (i) pipes << ";";
        pipes << fmt_num(s.pipes[i].x) << ":" << fmt_num(s.pipes[i].gap_top)
              << ":" << fmt_num(s.pipes[i].gap_bottom);
    }
    p.values["pipes"] = pipes.str();
    return p;
}

VirtualTarget::VirtualTarget(VariantId variant, uint64_t seed)
    : variant_(variant) {
    switch (variant) {
        case VariantId::Game2048Ok:
        case VariantId::Game2048WhiteOnWhite:
            board_ = new_board_2048(seed);
            break;
        case VariantId::FlappyOk:
        case VariantId::FlappyPassthrough:
            flappy_ = new_flappy(seed);
            break;
    }
    log_event("info", "start",
              std::string("target=") + variant_name(variant) +
                  " seed=" + std::to_string(seed));
    record_probe();
}

int VirtualTarget::canvas_width() const {
    return board_ ? kBoardW : FlappyWorld::kCanvasW;
}

int VirtualTarget::canvas_height() const {
    return board_ ? kHeader + kBoardW : FlappyWorld::kCanvasH;
}

void VirtualTarget::apply(const actions::ActionCommand& cmd) {
    using namespace actions;
    if (board_) {
        const Press* press = std::get_if<Press>(&cmd);
        if (!press) return;
        MoveDir dir;
        if (press->key == "up") dir = MoveDir::Up;
        else if (press->key == "down") dir = MoveDir::Down;
        else if (press->key == "left") dir = MoveDir::Left;
        else if (press->key == "right") dir = MoveDir::Right;
        else return;
        if (board_->over) {
            log_event("info", "input_ignored", "reason=game_over");
            return;
        }
        uint64_t before = board_->score;
        *board_ = step_2048(*board_, dir);
        log_event("info", "move",
                  "dir=" + std::string(press->key) +
                      " score_delta=" + std::to_string(board_->score - before));
        if (board_->over) log_event("info", "game_over",
                                    "score=" + std::to_string(board_->score));
        record_probe();
        return;
    }
    if (flappy_) {
        if (std::holds_alternative<Click>(cmd)) {
            pending_flap_ = true;
        } else if (const Press* press = std::get_if<Press>(&cmd)) {
            if (press->key == "space" || press->key == "up")
                pending_flap_ = true;
        }
    }
}

void VirtualTarget::tick() {
    ++tick_count_;
    if (flappy_ && flappy_->alive) {
        bool was_alive = flappy_->alive;
        uint64_t old_score = flappy_->score;
        *flappy_ = step_flappy(*flappy_, pending_flap_, variant_);
        pending_flap_ = false;
        if (was_alive && !flappy_->alive)
            log_event("info", "game_over",
                      "score=" + std::to_string(flappy_->score));
        if (flappy_->score != old_score)
            log_event("info", "pipe_passed",
                      "score=" + std::to_string(flappy_->score));
    }
    record_probe();
}

Frame VirtualTarget::render() const {
    return board_ ? render_2048(*board_, variant_)
                  : render_flappy(*flappy_, variant_);
}

ProbeSnapshot VirtualTarget::probe() const {
    ProbeSnapshot p = board_ ? probe_2048(*board_, tick_count_)
                             : probe_flappy(*flappy_);
    p.tick = tick_count_;
    return p;
}

std::vector<Rect> VirtualTarget::glyph_rects() const {
    return board_ ? glyph_rects_2048(*board_) : std::vector<Rect>{};
}

bool VirtualTarget::game_over() const {
    return board_ ? board_->over : !flappy_->alive;
}

std::string VirtualTarget::state_hash() const {
    ProbeSnapshot p = probe();
    std::ostringstream s;
    for (const auto& [k, v] : p.values) s << k << "=" << v << "\n";
    if (board_) s << "rng=" << board_->rng.state();
    if (flappy_) s << "rng=" << flappy_->rng.state();
    return sha256_hex(s.str());
}

void VirtualTarget::record_probe() { trace_.push_back(probe()); }

void VirtualTarget::log_event(const std::string& level,
                              const std::string& event,
                              const std::string& fields) {
    logs_.push_back("PLAYLOG " + level + " " + event +
                    (fields.empty() ? "" : " " + fields));
}

} // namespace play::targets
