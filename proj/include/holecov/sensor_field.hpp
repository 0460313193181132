#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "holecov/error.hpp"
#include "holecov/geometry.hpp"

namespace holecov {

struct SensorId {
    std::uint64_t value = 0;

    friend constexpr auto operator<=>(const SensorId&, const SensorId&) = default;
};

inline std::string to_string(SensorId id) { return std::to_string(id.value); }

struct StationaryNode {
    SensorId id;
    Point position;

    friend bool operator==(const StationaryNode&, const StationaryNode&) = default;
};

struct MobileNode {
    SensorId id;
    Point position;
    double sensing_radius = 0.0;

    friend bool operator==(const MobileNode&, const MobileNode&) = default;
};

/// Rectangular deployment area [0, width] × [0, height] with its sensors.
struct SensorField {
    double width = 0.0;
    double height = 0.0;
    double sensing_radius = 0.0;
    std::vector<StationaryNode> stationary;
    std::vector<MobileNode> mobile;

    friend bool operator==(const SensorField&, const SensorField&) = default;

    bool contains(Point p) const noexcept
    {
        return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
    }

    const StationaryNode* find_stationary(SensorId id) const noexcept
    {
        for (const auto& node : stationary) {
            if (node.id == id) {
                return &node;
            }
        }
        return nullptr;
    }

    /// Every sensing disk, stationary first then mobile, in list order.
    std::vector<Disk> disks() const
    {
        std::vector<Disk> out;
        out.reserve(stationary.size() + mobile.size());
        for (const auto& node : stationary) {
            out.push_back({node.position, sensing_radius});
        }
        for (const auto& node : mobile) {
            out.push_back({node.position, node.sensing_radius});
        }
        return out;
    }
};

inline void validate(const SensorField& field)
{
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(field.width) || !positive(field.height)) {
        fail(ErrorCode::InvalidInput, "field width and height must be positive");
    }
    if (!positive(field.sensing_radius)) {
        fail(ErrorCode::InvalidInput, "sensing radius must be positive");
    }
    std::unordered_set<std::uint64_t> seen;
    auto check = [&](SensorId id, Point p) {
        if (!seen.insert(id.value).second) {
            fail(ErrorCode::InvalidInput, "sensor id " + to_string(id) + " is not unique");
        }
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !field.contains(p)) {
            fail(ErrorCode::InvalidInput, "sensor " + to_string(id) + " lies outside the field");
        }
    };
    for (const auto& node : field.stationary) {
        check(node.id, node.position);
    }
    for (const auto& node : field.mobile) {
        check(node.id, node.position);
        if (!positive(node.sensing_radius)) {
            fail(ErrorCode::InvalidInput, "mobile sensor " + to_string(node.id) + " needs a positive radius");
        }
    }
}

} // namespace holecov
