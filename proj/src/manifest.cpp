#include <galeroot/manifest.hpp>

#include <json.hpp>

namespace galeroot {

std::string RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["basis"] = basis;
    j["d"] = d;
    j["seed"] = seed;
    j["window"] = {window.x_min, window.x_max, window.y_min, window.y_max};
    j["nx"] = nx;
    j["ny"] = ny;
    j["count"] = count;
    j["bound"] = bound;
    j["constraint"] = constraint;
    j["field"] = field;
    j["version"] = version;
    return j.dump();
}

RunManifest RunManifest::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    RunManifest m;
    m.command = j.value("command", "");
    m.basis = j.value("basis", "");
    m.d = j.value("d", 0);
    m.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("window")) {
        auto w = j["window"];
        m.window = {w[0], w[1], w[2], w[3]};
    }
    m.nx = j.value("nx", 0);
    m.ny = j.value("ny", 0);
    m.count = j.value("count", 0);
    m.bound = j.value("bound", 0.0);
    m.constraint = j.value("constraint", "");
    m.field = j.value("field", "");
    m.version = j.value("version", "");
    return m;
}

}  // namespace galeroot
