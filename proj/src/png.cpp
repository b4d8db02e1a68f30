#include "play/png.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>

#include "play/error.hpp"

namespace play::png {

namespace {

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(uint8_t(v >> 24));
    out.push_back(uint8_t(v >> 16));
    out.push_back(uint8_t(v >> 8));
    out.push_back(uint8_t(v));
}

uint32_t get_u32(const uint8_t* p) {
    return uint32_t(p[0]) << 24 | uint32_t(p[1]) << 16 | uint32_t(p[2]) << 8 |
           uint32_t(p[3]);
}

void put_chunk(std::vector<uint8_t>& out, const char type[4],
               std::span<const uint8_t> data) {
    put_u32(out, uint32_t(data.size()));
    size_t start = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), data.begin(), data.end());
    uint32_t crc = uint32_t(
        ::crc32(0, out.data() + start, uInt(out.size() - start)));
    put_u32(out, crc);
}

constexpr uint8_t kSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

int paeth(int a, int b, int c) {
    int p = a + b - c;
    int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    if (pb <= pc) return b;
    return c;
}

} // namespace

std::vector<uint8_t> encode_rgba(uint32_t width, uint32_t height,
                                 std::span<const uint8_t> rgba) {
    if (width == 0 || height == 0)
        throw DomainError("png: zero dimension");
    if (rgba.size() != size_t(width) * height * 4)
        throw DomainError("png: pixel buffer size mismatch");

    // filter byte 0 (None) per scanline
    std::vector<uint8_t> raw;
    raw.reserve((size_t(width) * 4 + 1) * height);
    for (uint32_t y = 0; y < height; ++y) {
        raw.push_back(0);
        const uint8_t* row = rgba.data() + size_t(y) * width * 4;
        raw.insert(raw.end(), row, row + size_t(width) * 4);
    }

    uLongf bound = ::compressBound(uLong(raw.size()));
    std::vector<uint8_t> z(bound);
    if (::compress2(z.data(), &bound, raw.data(), uLong(raw.size()), 6) != Z_OK)
        throw IoError("png: zlib compression failed");
    z.resize(bound);

    std::vector<uint8_t> out;
    out.insert(out.end(), kSignature, kSignature + 8);

    std::vector<uint8_t> ihdr;
    put_u32(ihdr, width);
    put_u32(ihdr, height);
    ihdr.push_back(8);  // bit depth
    ihdr.push_back(6);  // color type RGBA
    ihdr.push_back(0);  // compression
    ihdr.push_back(0);  // filter method
    ihdr.push_back(0);  // no interlace
    put_chunk(out, "IHDR", ihdr);
    put_chunk(out, "IDAT", z);
    put_chunk(out, "IEND", {});
    return out;
}

Decoded decode_rgba(std::span<const uint8_t> bytes) {
    if (bytes.size() < 8 || std::memcmp(bytes.data(), kSignature, 8) != 0)
        throw IoError("png: bad signature");

    Decoded d;
    std::vector<uint8_t> idat;
    size_t pos = 8;
    bool saw_ihdr = false, saw_iend = false;
    while (pos + 12 <= bytes.size() && !saw_iend) {
        uint32_t len = get_u32(bytes.data() + pos);
        if (pos + 12 + len > bytes.size()) throw IoError("png: truncated chunk");
        const char* type = reinterpret_cast<const char*>(bytes.data() + pos + 4);
        const uint8_t* data = bytes.data() + pos + 8;
        if (std::memcmp(type, "IHDR", 4) == 0) {
            if (len != 13) throw IoError("png: bad IHDR");
            d.width = get_u32(data);
            d.height = get_u32(data + 4);
            if (data[8] != 8 || data[9] != 6 || data[12] != 0)
                throw IoError("png: only 8-bit RGBA non-interlaced supported");
            saw_ihdr = true;
        } else if (std::memcmp(type, "IDAT", 4) == 0) {
            idat.insert(idat.end(), data, data + len);
        } else if (std::memcmp(type, "IEND", 4) == 0) {
            saw_iend = true;
        }
        pos += 12 + len;
    }
    if (!saw_ihdr || !saw_iend) throw IoError("png: missing chunks");

    size_t stride = size_t(d.width) * 4;
    size_t raw_size = (stride + 1) * d.height;
    std::vector<uint8_t> raw(raw_size);
    uLongf out_len = uLongf(raw_size);
    if (::uncompress(raw.data(), &out_len, idat.data(), uLong(idat.size())) !=
            Z_OK ||
        out_len != raw_size)
        throw IoError("png: zlib decompression failed");

    d.rgba.assign(size_t(d.width) * d.height * 4, 0);
    std::vector<uint8_t> prev(stride, 0);
    for (uint32_t y = 0; y < d.height; ++y) {
        uint8_t filter = raw[(stride + 1) * y];
        const uint8_t* src = raw.data() + (stride + 1) * y + 1;
        uint8_t* dst = d.rgba.data() + stride * y;
        for (size_t x = 0; x < stride; ++x) {
            int a = x >= 4 ? dst[x - 4] : 0;
            int b = prev[x];
            int c = x >= 4 ? prev[x - 4] : 0;
            int v = src[x];
            switch (filter) {
                case 0: break;
                case 1: v += a; break;
                case 2: v += b; break;
                case 3: v += (a + b) / 2; break;
                case 4: v += paeth(a, b, c); break;
                default: throw IoError("png: unknown filter");
            }
            dst[x] = uint8_t(v);
        }
        std::memcpy(prev.data(), dst, stride);
    }
    return d;
}

void write_file(const std::filesystem::path& path, uint32_t width,
                uint32_t height, std::span<const uint8_t> rgba) {
    auto bytes = encode_rgba(width, height, rgba);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("png: cannot open for write: " + path.string());
    f.write(reinterpret_cast<const char*>(bytes.data()),
            std::streamsize(bytes.size()));
    if (!f) throw IoError("png: write failed: " + path.string());
}

Decoded read_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("png: cannot open: " + path.string());
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                               std::istreambuf_iterator<char>());
    return decode_rgba(bytes);
}

} // namespace play::png
