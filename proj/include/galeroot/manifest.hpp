// Run manifests: everything needed to reproduce an output file bit for bit.

#pragma once

#include <cstdint>
#include <string>

namespace galeroot {

inline constexpr const char* kToolVersion = "0.1.0";

struct Window {
    double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
};

struct RunManifest {
    std::string command;
    std::string basis;
    int d = 0;
    std::uint64_t seed = 0;
    Window window;
    int nx = 0, ny = 0;
    int count = 0;
    double bound = 0.0;
    std::string constraint;  // empty when unconstrained
    std::string field;
    std::string version = kToolVersion;

    std::string to_json() const;
    static RunManifest from_json(const std::string& text);
};

}  // namespace galeroot
