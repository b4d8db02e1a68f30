#include "play/probe.hpp"

#include <cstdlib>

namespace play {

const std::string* ProbeSnapshot::get(const std::string& key) const {
    auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
}

std::optional<double> ProbeSnapshot::get_num(const std::string& key) const {
    const std::string* v = get(key);
    if (!v) return std::nullopt;
    char* end = nullptr;
    double d = std::strtod(v->c_str(), &end);
    if (end == v->c_str() || *end != '\0') return std::nullopt;
    return d;
}

std::optional<bool> ProbeSnapshot::get_bool(const std::string& key) const {
    const std::string* v = get(key);
    if (!v) return std::nullopt;
    if (*v == "true" || *v == "1") return true;
    if (*v == "false" || *v == "0") return false;
    return std::nullopt;
}

} // namespace play
