#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace play {

/// Structured snapshot of a target's internal state. Test-only oracle data:
/// checks read it, the LLM never sees it. Keys and values are space-free
/// tokens so snapshots round-trip through the PLAYLOG line protocol.
struct ProbeSnapshot {
    uint64_t tick = 0;
    std::map<std::string, std::string> values;

    std::optional<double> get_num(const std::string& key) const;
    std::optional<bool> get_bool(const std::string& key) const;
    const std::string* get(const std::string& key) const;
};

} // namespace play
