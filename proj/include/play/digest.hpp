#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace play {

/// Incremental SHA-256. Self-contained so content digests in trajectories
/// and patch hashes do not pull in a crypto library.
class Sha256 {
public:
    Sha256();
    void update(const void* data, size_t len);
    void update(std::string_view s) { update(s.data(), s.size()); }
    std::array<uint8_t, 32> finish();

private:
    void process_block(const uint8_t* block);

    std::array<uint32_t, 8> h_;
    uint64_t total_len_ = 0;
    std::array<uint8_t, 64> buf_{};
    size_t buf_len_ = 0;
};

std::string sha256_hex(std::string_view data);
std::string sha256_hex(const void* data, size_t len);

} // namespace play
