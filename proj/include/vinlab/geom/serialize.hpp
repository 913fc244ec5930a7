#pragma once

#include <json.hpp>

#include "vinlab/geom/box.hpp"

namespace vinlab::geom {

inline nlohmann::json to_json(const Vec3& v) { return nlohmann::json::array({v.x, v.y, v.z}); }

inline nlohmann::json to_json(const OrientedBox& b) {
    nlohmann::json j;
    j["center"] = to_json(b.center());
    const auto a = b.axes();
    j["axes"] = nlohmann::json::array({to_json(a[0]), to_json(a[1]), to_json(a[2])});
    const Vec3 l = b.lengths();
    j["lengths"] = nlohmann::json::array({l.x, l.y, l.z});
    j["role"] = role_name(b.role());
    if (b.interval()) {
        j["interval"] = nlohmann::json::array({b.interval()->lo, b.interval()->hi});
    } else {
        j["interval"] = nullptr;
    }
    return j;
}

}  // namespace vinlab::geom
