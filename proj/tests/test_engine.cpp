#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "socsim/engine/grid.hpp"
#include "socsim/engine/grid_io.hpp"
#include "socsim/engine/neighborhood.hpp"
#include "socsim/engine/rng.hpp"
#include "socsim/engine/trace.hpp"

using namespace socsim;

TEST_CASE("moore r1 neighborhood counts: interior, corner, edge") {
    GridWorld bounded(10, 10, Boundary::bounded);
    CHECK(neighborhood(bounded, {5, 5}, moore1).size() == 8);
    CHECK(neighborhood(bounded, {0, 0}, moore1).size() == 3);
    CHECK(neighborhood(bounded, {5, 0}, moore1).size() == 5);

    GridWorld torus(10, 10, Boundary::toroidal);
    const auto nbrs = neighborhood(torus, {0, 0}, moore1);
    CHECK(nbrs.size() == 8);
    CHECK(std::find(nbrs.begin(), nbrs.end(), Position{9, 9}) != nbrs.end());
}

TEST_CASE("von neumann r1 yields at most 4 positions") {
    GridWorld torus(10, 10, Boundary::toroidal);
    CHECK(neighborhood(torus, {5, 5}, von_neumann1).size() == 4);
    GridWorld bounded(10, 10, Boundary::bounded);
    CHECK(neighborhood(bounded, {0, 0}, von_neumann1).size() == 2);
}

TEST_CASE("toroidal neighborhoods have (2r+1)^2-1 members when dims exceed 2r") {
    for (const int r : {1, 2, 3}) {
        const int dim = 2 * r + 1;
        GridWorld torus(dim + 1, dim + 2, Boundary::toroidal);
        const NeighborhoodSpec spec{NeighborhoodSpec::Kind::moore, r};
        const std::size_t expected = static_cast<std::size_t>(dim) * dim - 1;
        CHECK(neighborhood(torus, {0, 0}, spec).size() == expected);
        CHECK(neighborhood(torus, {1, 1}, spec).size() == expected);
    }
}

TEST_CASE("small toroidal grids deduplicate wrapped neighbors") {
    GridWorld tiny(2, 2, Boundary::toroidal);
    const auto nbrs = neighborhood(tiny, {0, 0}, moore1);
    CHECK(nbrs.size() == 3);  // wrapped duplicates collapse
    GridWorld line(1, 5, Boundary::toroidal);
    CHECK(neighborhood(line, {0, 2}, moore1).size() == 2);  // column wraps onto itself
}

TEST_CASE("neighborhood order is row-major by resolved coordinates") {
    GridWorld torus(10, 10, Boundary::toroidal);
    const auto nbrs = neighborhood(torus, {0, 0}, moore1);
    const std::vector<Position> expected = {{1, 0}, {9, 0}, {0, 1}, {1, 1},
                                            {9, 1}, {0, 9}, {1, 9}, {9, 9}};
    CHECK(nbrs == expected);
}

TEST_CASE("record_snapshot deep-copies the world") {
    GridWorld world(4, 3, Boundary::toroidal);
    world.set({1, 1}, CellContent::item(0));
    world.set({2, 2}, CellContent::agent(1));

    Trace trace;
    record_snapshot(world, 0, {{"x", 1.0}}, trace);

    // snapshot agrees with a cell-by-cell read-back
    const CellCoder coder;
    for (int y = 0; y < 3; ++y) {
        for (int x = 0; x < 4; ++x) {
            CHECK(trace.back().snapshot.at(x, y) == coder.code(world.at({x, y})));
        }
    }

    const GridSnapshot before = trace.back().snapshot;
    world.set({1, 1}, CellContent::none());
    CHECK(trace.back().snapshot == before);
}

TEST_CASE("trace enforces strictly increasing ticks and constant dimensions") {
    GridWorld world(4, 3, Boundary::toroidal);
    Trace trace;
    record_snapshot(world, 0, {}, trace);
    record_snapshot(world, 5, {}, trace);
    CHECK(trace.size() == 2);
    CHECK(trace.front().tick == 0);
    CHECK(trace.back().tick == 5);

    CHECK_THROWS_WITH(record_snapshot(world, 5, {}, trace), "trace order violation");
    CHECK_THROWS_WITH(record_snapshot(world, 3, {}, trace), "trace order violation");

    GridWorld other(5, 3, Boundary::toroidal);
    CHECK_THROWS(record_snapshot(other, 9, {}, trace));
}

TEST_CASE("grid file format round-trips and is byte-exact") {
    GridWorld world(3, 2, Boundary::bounded);
    world.set({0, 0}, CellContent::item(0));
    world.set({2, 1}, CellContent::agent(0));
    const GridSnapshot snap = snapshot_of(world);

    std::ostringstream os;
    write_grid(os, snap, 7);
    CHECK(os.str() == "P-GRID 3 2 7\nA..\n..a\n");

    std::istringstream is(os.str());
    const ParsedGrid parsed = read_grid(is);
    CHECK(parsed.tick == 7);
    CHECK(parsed.snapshot == snap);
}

TEST_CASE("read_grid rejects malformed input") {
    std::istringstream bad_header("X-GRID 3 2 0\n...\n...\n");
    CHECK_THROWS(read_grid(bad_header));
    std::istringstream short_row("P-GRID 3 2 0\n..\n...\n");
    CHECK_THROWS(read_grid(short_row));
}

TEST_CASE("grid world basics") {
    GridWorld world(4, 3, Boundary::toroidal);
    CHECK(world.cell_count() == 12);
    CHECK(world.contains({3, 2}));
    CHECK_FALSE(world.contains({4, 0}));
    CHECK(world.wrap({-1, -1}) == Position{3, 2});
    CHECK(world.position_of(world.index_of({2, 1})) == Position{2, 1});
    CHECK_THROWS(GridWorld(0, 3, Boundary::bounded));
}
