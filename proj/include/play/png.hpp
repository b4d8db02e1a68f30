#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace play::png {

/// Encode 8-bit RGBA pixels (row-major, width*height*4 bytes) as a standard
/// PNG. Deterministic: fixed filter (none) and fixed zlib settings, so the
/// same pixels always produce the same bytes.
std::vector<uint8_t> encode_rgba(uint32_t width, uint32_t height,
                                 std::span<const uint8_t> rgba);

struct Decoded {
    uint32_t width = 0;
    uint32_t height = 0;
    std::vector<uint8_t> rgba;
};

/// Decode a PNG produced by encode_rgba (8-bit RGBA, non-interlaced; all
/// five scanline filters accepted). Throws IoError on anything else.
Decoded decode_rgba(std::span<const uint8_t> bytes);

void write_file(const std::filesystem::path& path, uint32_t width,
                uint32_t height, std::span<const uint8_t> rgba);
Decoded read_file(const std::filesystem::path& path);

} // namespace play::png
