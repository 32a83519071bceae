#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(THETADET_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    if (!in) throw std::runtime_error("missing fixture: " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Fixture files carry their expected value in a leading comment, e.g.
// "# ...; determinant 27, ...".  Returns -1 when no such note exists.
inline long long noted_determinant(const std::string& text) {
    const std::string key = "determinant ";
    auto at = text.find(key);
    if (at == std::string::npos) return -1;
    return std::stoll(text.substr(at + key.size()));
}

} // namespace testutil
