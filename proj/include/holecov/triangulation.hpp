#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "holecov/error.hpp"
#include "holecov/geometry.hpp"
#include "holecov/predicates.hpp"
#include "holecov/sensor_field.hpp"

namespace holecov {

struct CellId {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(const CellId&, const CellId&) = default;
};

inline std::string to_string(CellId id) { return std::to_string(id.value); }

/// One triangle of the mesh. `sites` is counter-clockwise and starts at the
/// lowest sensor id; `geom.vertices` follows the same order.
struct TriangleCell {
    CellId id;
    std::array<SensorId, 3> sites{};
    TriangleGeom geom;

    friend bool operator==(const TriangleCell& lhs, const TriangleCell& rhs)
    {
        return lhs.id == rhs.id && lhs.sites == rhs.sites && lhs.geom.vertices == rhs.geom.vertices;
    }
};

/// Delaunay triangulation of the stationary sensors. Cells are ordered by
/// their site triples and `cells[k].id.value == k`.
struct TriMesh {
    std::vector<TriangleCell> cells;
    std::vector<std::vector<CellId>> adjacency;
    std::vector<SensorId> hull;

    friend bool operator==(const TriMesh&, const TriMesh&) = default;

    bool contains(CellId id) const noexcept { return id.value < cells.size(); }

    const TriangleCell& cell(CellId id) const
    {
        if (!contains(id)) {
            fail(ErrorCode::NotFound, "unknown cell id " + to_string(id));
        }
        return cells[id.value];
    }
};

namespace detail {

struct Site {
    Point position;
    SensorId id;
};

// Sweep over lexicographically sorted sites: every new site lies outside the
// current hull, so it is fanned to the visible hull edges and the new edges
// are legalised by flipping. Halfedge h belongs to triangle h / 3 and runs
// from corner_[h] to corner_[next(h)].
class SweepTriangulator {
public:
    explicit SweepTriangulator(std::vector<Site> sites) : sites_(std::move(sites)) {}

    std::vector<std::array<int, 3>> run()
    {
        const int n = static_cast<int>(sites_.size());
        next_.assign(n, -1);
        prev_.assign(n, -1);
        hull_edge_.assign(n, -1);

        int apex = 2;
        while (apex < n && orient(0, 1, apex) == 0) {
            ++apex;
        }
        if (apex == n) {
            fail(ErrorCode::InsufficientSites, "all stationary sensors are collinear");
        }
        seed_fan(apex);
        for (int i = apex + 1; i < n; ++i) {
            insert(i);
        }

        std::vector<std::array<int, 3>> out;
        out.reserve(corner_.size() / 3);
        for (std::size_t t = 0; t < corner_.size(); t += 3) {
            out.push_back({corner_[t], corner_[t + 1], corner_[t + 2]});
        }
        return out;
    }

    std::vector<int> hull_cycle() const
    {
        std::vector<int> cycle;
        const int start = hull_start_;
        int v = start;
        do {
            cycle.push_back(v);
            v = next_[v];
        } while (v != start);
        return cycle;
    }

private:
    int orient(int a, int b, int c) const
    {
        return predicates::orient2d(sites_[a].position, sites_[b].position, sites_[c].position);
    }

    int add_triangle(int i0, int i1, int i2)
    {
        const int t = static_cast<int>(corner_.size());
        corner_.insert(corner_.end(), {i0, i1, i2});
        twin_.insert(twin_.end(), {-1, -1, -1});
        return t;
    }

    void link(int a, int b)
    {
        twin_[a] = b;
        if (b != -1) {
            twin_[b] = a;
        } else {
            hull_edge_[corner_[a]] = a;
        }
    }

    void seed_fan(int apex)
    {
        const bool ccw = orient(0, 1, apex) > 0;
        int previous = -1;
        for (int j = 0; j + 1 < apex; ++j) {
            if (ccw) {
                const int t = add_triangle(j, j + 1, apex);
                link(t, -1);
                if (previous >= 0) {
                    link(t + 2, previous + 1);
                } else {
                    link(t + 2, -1);
                }
                previous = t;
                next_[j] = j + 1;
                prev_[j + 1] = j;
            } else {
                const int t = add_triangle(j + 1, j, apex);
                link(t, -1);
                if (previous >= 0) {
                    link(t + 1, previous + 2);
                } else {
                    link(t + 1, -1);
                }
                previous = t;
                next_[j + 1] = j;
                prev_[j] = j + 1;
            }
        }
        const int last = apex - 1;
        if (ccw) {
            link(previous + 1, -1);
            next_[last] = apex;
            prev_[apex] = last;
            next_[apex] = 0;
            prev_[0] = apex;
        } else {
            link(previous + 2, -1);
            next_[0] = apex;
            prev_[apex] = 0;
            next_[apex] = last;
            prev_[last] = apex;
        }
        hull_start_ = 0;
    }

    void insert(int i)
    {
        const int start = i - 1;
        int last = start;
        int first = start;
        const int n = static_cast<int>(sites_.size());
        for (int guard = 0; guard < n && orient(last, next_[last], i) < 0; ++guard) {
            last = next_[last];
        }
        for (int guard = 0; guard < n && orient(prev_[first], first, i) < 0; ++guard) {
            first = prev_[first];
        }
        if (first == last) {
            fail(ErrorCode::DegenerateGeometry, "no visible hull edge while inserting a site");
        }

        std::vector<int> created;
        int previous = -1;
        for (int v = first; v != last; v = next_[v]) {
            const int w = next_[v];
            const int t = add_triangle(w, v, i);
            link(t, hull_edge_[v]);
            if (previous >= 0) {
                link(t + 1, previous + 2);
            }
            previous = t;
            created.push_back(t);
        }
        link(created.front() + 1, -1);
        link(previous + 2, -1);

        for (int v = next_[first]; v != last;) {
            const int after = next_[v];
            next_[v] = prev_[v] = -1;
            v = after;
        }
        next_[first] = i;
        prev_[i] = first;
        next_[i] = last;
        prev_[last] = i;
        hull_start_ = i;

        for (int t : created) {
            legalize(t);
        }
    }

    bool should_flip(int p0, int pr, int pl, int p1) const
    {
        const int side = predicates::incircle(sites_[p0].position, sites_[pr].position, sites_[pl].position,
                                              sites_[p1].position);
        if (side != 0) {
            return side > 0;
        }
        // Cocircular: keep the diagonal touching the lowest sensor id.
        const SensorId lowest = std::min({sites_[p0].id, sites_[pr].id, sites_[pl].id, sites_[p1].id});
        return lowest == sites_[p0].id || lowest == sites_[p1].id;
    }

    void legalize(int start)
    {
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int a = stack.back();
            stack.pop_back();
            const int b = twin_[a];
            if (b == -1) {
                continue;
            }
            const int a0 = a - a % 3;
            const int b0 = b - b % 3;
            const int al = a0 + (a + 1) % 3;
            const int ar = a0 + (a + 2) % 3;
            const int bl = b0 + (b + 2) % 3;
            const int br = b0 + (b + 1) % 3;
            const int p0 = corner_[ar];
            const int pr = corner_[a];
            const int pl = corner_[al];
            const int p1 = corner_[bl];
            if (!should_flip(p0, pr, pl, p1)) {
                continue;
            }
            corner_[a] = p1;
            corner_[b] = p0;
            const int twin_bl = twin_[bl];
            const int twin_ar = twin_[ar];
            link(a, twin_bl);
            link(b, twin_ar);
            link(ar, bl);
            stack.push_back(br);
            stack.push_back(a);
        }
    }

    std::vector<Site> sites_;
    std::vector<int> corner_;
    std::vector<int> twin_;
    std::vector<int> next_;
    std::vector<int> prev_;
    std::vector<int> hull_edge_;
    int hull_start_ = 0;
};

inline std::array<SensorId, 3> canonical_rotation(std::array<SensorId, 3> ids)
{
    const auto lowest = std::min_element(ids.begin(), ids.end());
    std::rotate(ids.begin(), lowest, ids.end());
    return ids;
}

} // namespace detail

/// Delaunay triangulation of the field's stationary sensors. Deterministic:
/// cocircular ties keep the diagonal incident to the lowest sensor id.
inline TriMesh triangulate(const SensorField& field)
{
    validate(field);
    if (field.stationary.size() < 3) {
        fail(ErrorCode::InsufficientSites, "at least 3 stationary sensors are required");
    }
    std::vector<detail::Site> sites;
    sites.reserve(field.stationary.size());
    for (const auto& node : field.stationary) {
        sites.push_back({node.position, node.id});
    }
    std::sort(sites.begin(), sites.end(), [](const detail::Site& l, const detail::Site& r) {
        if (l.position.x != r.position.x) {
            return l.position.x < r.position.x;
        }
        if (l.position.y != r.position.y) {
            return l.position.y < r.position.y;
        }
        return l.id < r.id;
    });
    for (std::size_t k = 1; k < sites.size(); ++k) {
        if (sites[k].position == sites[k - 1].position) {
            fail(ErrorCode::DuplicateSite, "sensors " + to_string(sites[k - 1].id) + " and " +
                                               to_string(sites[k].id) + " share coordinates");
        }
    }

    detail::SweepTriangulator sweep(sites);
    const auto raw = sweep.run();

    std::map<SensorId, Point> position;
    for (const auto& site : sites) {
        position.emplace(site.id, site.position);
    }

    std::vector<std::array<SensorId, 3>> triples;
    triples.reserve(raw.size());
    for (const auto& t : raw) {
        triples.push_back(detail::canonical_rotation({sites[t[0]].id, sites[t[1]].id, sites[t[2]].id}));
    }
    std::sort(triples.begin(), triples.end());

    TriMesh mesh;
    mesh.cells.reserve(triples.size());
    std::map<std::pair<SensorId, SensorId>, std::vector<CellId>> edge_cells;
    for (std::size_t k = 0; k < triples.size(); ++k) {
        const auto& ids = triples[k];
        TriangleCell cell;
        cell.id = CellId{static_cast<std::uint32_t>(k)};
        cell.sites = ids;
        cell.geom = triangle_from_vertices(position.at(ids[0]), position.at(ids[1]), position.at(ids[2]));
        for (int e = 0; e < 3; ++e) {
            edge_cells[std::minmax(ids[e], ids[(e + 1) % 3])].push_back(cell.id);
        }
        mesh.cells.push_back(std::move(cell));
    }
    mesh.adjacency.assign(mesh.cells.size(), {});
    for (const auto& [edge, owners] : edge_cells) {
        if (owners.size() == 2) {
            mesh.adjacency[owners[0].value].push_back(owners[1]);
            mesh.adjacency[owners[1].value].push_back(owners[0]);
        }
    }
    for (auto& list : mesh.adjacency) {
        std::sort(list.begin(), list.end());
    }

    auto cycle = sweep.hull_cycle();
    const auto lowest = std::min_element(cycle.begin(), cycle.end(),
                                         [&](int l, int r) { return sites[l].id < sites[r].id; });
    std::rotate(cycle.begin(), lowest, cycle.end());
    for (int v : cycle) {
        mesh.hull.push_back(sites[v].id);
    }
    return mesh;
}

/// Cells sharing an edge with `id`, in ascending order.
inline std::vector<CellId> neighbors(const TriMesh& mesh, CellId id)
{
    if (!mesh.contains(id)) {
        fail(ErrorCode::NotFound, "unknown cell id " + to_string(id));
    }
    return mesh.adjacency[id.value];
}

} // namespace holecov
