#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "holecov/triangulation.hpp"
#include "oracles.hpp"

using namespace holecov;

namespace {

SensorField field_of(const std::vector<Point>& points, double side = 100.0)
{
    SensorField field;
    field.width = side;
    field.height = side;
    field.sensing_radius = 1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        field.stationary.push_back({SensorId{i + 1}, points[i]});
    }
    return field;
}

std::vector<Point> random_points(std::size_t n, std::uint64_t seed, double side = 100.0)
{
    SeededStream stream(seed);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
        pts.push_back({stream.uniform(0.0, side), stream.uniform(0.0, side)});
    }
    return pts;
}

std::vector<Point> grid_points(int rows, int cols)
{
    std::vector<Point> pts;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            pts.push_back({static_cast<double>(c), static_cast<double>(r)});
        }
    }
    return pts;
}

ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorCode::IoError;
}

void expect_delaunay(const TriMesh& mesh, const std::vector<Point>& pts)
{
    for (const auto& cell : mesh.cells) {
        const auto [center, radius] = circumcenter(cell.geom);
        for (const Point& p : pts) {
            EXPECT_GE(distance(center, p), radius * (1.0 - 1e-9)) << "cell " << cell.id.value;
        }
    }
}

} // namespace

TEST(Triangulate, UnitSquareSplitsAtLowestId)
{
    const auto mesh = triangulate(field_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    ASSERT_EQ(mesh.cells.size(), 2u);
    // the four corners are cocircular; the diagonal keeps sensor 1
    for (const auto& cell : mesh.cells) {
        EXPECT_EQ(cell.sites[0], SensorId{1});
        EXPECT_TRUE(cell.geom.counter_clockwise());
    }
    EXPECT_EQ(neighbors(mesh, CellId{0}), std::vector<CellId>{CellId{1}});
    EXPECT_EQ(neighbors(mesh, CellId{1}), std::vector<CellId>{CellId{0}});
}

TEST(Triangulate, CocircularTieFollowsIds)
{
    // same square, lowest id now on the other diagonal
    SensorField field = field_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    field.stationary[0].id = SensorId{10};
    field.stationary[2].id = SensorId{30};
    field.stationary[1].id = SensorId{2};
    field.stationary[3].id = SensorId{4};
    const auto mesh = triangulate(field);
    ASSERT_EQ(mesh.cells.size(), 2u);
    for (const auto& cell : mesh.cells) {
        EXPECT_TRUE(std::find(cell.sites.begin(), cell.sites.end(), SensorId{2}) != cell.sites.end());
        EXPECT_TRUE(std::find(cell.sites.begin(), cell.sites.end(), SensorId{4}) != cell.sites.end());
    }
}

TEST(Triangulate, SingleTriangle)
{
    const auto mesh = triangulate(field_of({{0, 0}, {4, 0}, {0, 3}}));
    ASSERT_EQ(mesh.cells.size(), 1u);
    EXPECT_TRUE(neighbors(mesh, CellId{0}).empty());
    EXPECT_EQ(mesh.hull.size(), 3u);
    EXPECT_DOUBLE_EQ(mesh.cells[0].geom.area, 6.0);
}

TEST(Triangulate, Errors)
{
    EXPECT_EQ(code_of([] { triangulate(field_of({{0, 0}, {1, 1}})); }), ErrorCode::InsufficientSites);
    EXPECT_EQ(code_of([] { triangulate(field_of({{0, 0}, {1, 1}, {2, 2}, {3, 3}})); }),
              ErrorCode::InsufficientSites);
    try {
        triangulate(field_of({{0, 0}, {1, 0}, {0, 1}, {1, 0}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DuplicateSite);
        EXPECT_NE(std::string(e.what()).find("sensors 2 and 4"), std::string::npos) << e.what();
    }
    EXPECT_EQ(code_of([] { neighbors(triangulate(field_of({{0, 0}, {1, 0}, {0, 1}})), CellId{5}); }),
              ErrorCode::NotFound);
}

TEST(Triangulate, CollinearPrefixThenApex)
{
    // several collinear sites sorted first, then off-line sites on both sides
    const std::vector<Point> pts{{0, 1}, {1, 1}, {2, 1}, {3, 1}, {1.5, 2}, {4, 0}, {5, 1.5}};
    const auto mesh = triangulate(field_of(pts));
    const auto hull = oracle::brute_force_hull_points(pts);
    EXPECT_EQ(mesh.cells.size(), 2 * pts.size() - 2 - hull.size());
    expect_delaunay(mesh, pts);
    double total = 0.0;
    for (const auto& cell : mesh.cells) {
        EXPECT_FALSE(cell.geom.degenerate);
        total += cell.geom.area;
    }
    EXPECT_NEAR(total, oracle::hull_area(pts), 1e-9);
}

TEST(Triangulate, GridNeighborsMatchBruteForceScan)
{
    const auto pts = grid_points(5, 5);
    const auto mesh = triangulate(field_of(pts));
    EXPECT_EQ(mesh.cells.size(), 2u * 4u * 4u);
    expect_delaunay(mesh, pts);
    for (const auto& cell : mesh.cells) {
        std::vector<CellId> brute;
        for (const auto& other : mesh.cells) {
            if (other.id == cell.id) {
                continue;
            }
            int shared = 0;
            for (auto s : cell.sites) {
                shared += std::count(other.sites.begin(), other.sites.end(), s) ? 1 : 0;
            }
            if (shared == 2) {
                brute.push_back(other.id);
            }
        }
        EXPECT_EQ(neighbors(mesh, cell.id), brute);
    }
    // a triangle none of whose vertices lies on the boundary of the grid
    int interior_checked = 0;
    for (const auto& cell : mesh.cells) {
        const bool interior = std::all_of(cell.geom.vertices.begin(), cell.geom.vertices.end(), [](Point p) {
            return p.x > 0 && p.x < 4 && p.y > 0 && p.y < 4;
        });
        if (interior) {
            EXPECT_EQ(neighbors(mesh, cell.id).size(), 3u);
            ++interior_checked;
        }
    }
    EXPECT_GT(interior_checked, 0);
}

TEST(Triangulate, RandomSitesDelaunayCountAndArea)
{
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto pts = random_points(300, seed);
        const auto mesh = triangulate(field_of(pts));
        const auto hull = oracle::brute_force_hull_points(pts);
        EXPECT_EQ(mesh.cells.size(), 2 * pts.size() - 2 - hull.size());
        EXPECT_EQ(mesh.hull.size(), hull.size());
        expect_delaunay(mesh, pts);
        double total = 0.0;
        std::set<std::array<SensorId, 3>> distinct;
        for (const auto& cell : mesh.cells) {
            EXPECT_FALSE(cell.geom.degenerate);
            EXPECT_TRUE(cell.geom.counter_clockwise());
            EXPECT_LT(cell.sites[0], cell.sites[1]);
            EXPECT_LT(cell.sites[0], cell.sites[2]);
            distinct.insert(cell.sites);
            total += cell.geom.area;
        }
        EXPECT_EQ(distinct.size(), mesh.cells.size());
        const double hull_area = oracle::hull_area(pts);
        EXPECT_NEAR(total, hull_area, 1e-6 * hull_area);
    }
}

TEST(Triangulate, DeterministicAndIndependentOfInputOrder)
{
    const auto pts = random_points(200, 9);
    SensorField field = field_of(pts);
    const auto first = triangulate(field);
    EXPECT_EQ(first, triangulate(field));
    std::reverse(field.stationary.begin(), field.stationary.end());
    EXPECT_EQ(first, triangulate(field));
}

TEST(Triangulate, HandlesCocircularLattice)
{
    // every unit cell of a lattice is a cocircular quad
    const auto pts = grid_points(12, 9);
    const auto mesh = triangulate(field_of(pts));
    EXPECT_EQ(mesh.cells.size(), 2u * 11u * 8u);
    expect_delaunay(mesh, pts);
    for (const auto& cell : mesh.cells) {
        EXPECT_NEAR(cell.geom.area, 0.5, 1e-12);
    }
}
