#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "socsim/emergence/clusters.hpp"
#include "socsim/emergence/hyperstructure.hpp"
#include "socsim/emergence/metrics.hpp"
#include "socsim/emergence/predicate.hpp"
#include "socsim/engine/rng.hpp"
#include "socsim/schelling/model.hpp"

using namespace socsim;
using namespace socsim::emergence;

namespace {

const CellSelector is_item = [](const CellContent& c) { return c.is_item(); };
const CellSelector is_agent = [](const CellContent& c) { return c.is_agent(); };

GridWorld random_item_world(int w, int h, int n_items, std::uint64_t seed) {
    GridWorld world(w, h, Boundary::toroidal);
    RngStream rng(seed);
    const auto order = rng.permutation(world.cell_count());
    for (int i = 0; i < n_items; ++i) {
        world.set(world.position_of(order[static_cast<std::size_t>(i)]), CellContent::item(0));
    }
    return world;
}

}  // namespace

TEST_CASE("cluster detection basics") {
    GridWorld empty(6, 6, Boundary::toroidal);
    CHECK(detect_clusters(empty, is_item, moore1).empty());

    GridWorld one(6, 6, Boundary::toroidal);
    one.set({3, 3}, CellContent::item(0));
    const auto single = detect_clusters(one, is_item, moore1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].size() == 1);
    CHECK(single[0].centroid == std::pair{3.0, 3.0});
}

TEST_CASE("diagonal items: one moore cluster, two von neumann clusters") {
    GridWorld world(6, 6, Boundary::bounded);
    world.set({2, 2}, CellContent::item(0));
    world.set({3, 3}, CellContent::item(0));
    CHECK(detect_clusters(world, is_item, moore1).size() == 1);
    CHECK(detect_clusters(world, is_item, von_neumann1).size() == 2);
}

TEST_CASE("adjacent items of different types stay in separate clusters") {
    GridWorld world(6, 6, Boundary::bounded);
    world.set({2, 2}, CellContent::item(0));
    world.set({2, 3}, CellContent::item(1));
    world.set({2, 4}, CellContent::item(1));
    const auto clusters = detect_clusters(world, is_item, moore1);
    REQUIRE(clusters.size() == 2);
    CHECK(clusters[0].type == 0);
    CHECK(clusters[0].size() == 1);
    CHECK(clusters[1].type == 1);
    CHECK(clusters[1].size() == 2);
}

TEST_CASE("clusters partition the selected cells") {
    for (const std::uint64_t seed : {1, 2, 3, 4, 5}) {
        const GridWorld world = random_item_world(16, 16, 70, seed);
        for (const auto& spec : {moore1, von_neumann1}) {
            const auto clusters = detect_clusters(world, is_item, spec);
            std::vector<char> seen(world.cell_count(), 0);
            std::size_t total = 0;
            for (const auto& c : clusters) {
                REQUIRE(!c.members.empty());
                for (const Position& p : c.members) {
                    REQUIRE(world.at(p).is_item());
                    REQUIRE(!seen[world.index_of(p)]);
                    seen[world.index_of(p)] = 1;
                }
                total += c.size();
            }
            CHECK(total == 70);
        }
        // coarser adjacency merges clusters, never splits them
        CHECK(detect_clusters(world, is_item, moore1).size() <=
              detect_clusters(world, is_item, von_neumann1).size());
    }
}

TEST_CASE("cluster output order is deterministic and row-major") {
    const GridWorld world = random_item_world(12, 12, 40, 9);
    const auto clusters = detect_clusters(world, is_item, moore1);
    for (std::size_t i = 1; i < clusters.size(); ++i) {
        CHECK(row_major_less(clusters[i - 1].members.front(), clusters[i].members.front()));
    }
    for (const auto& c : clusters) {
        CHECK(std::is_sorted(c.members.begin(), c.members.end(), row_major_less));
    }
}

TEST_CASE("mean like fraction on uniform and checkerboard worlds") {
    GridWorld uniform(8, 8, Boundary::toroidal);
    for (std::size_t i = 0; i < uniform.cell_count(); ++i) {
        uniform.set(uniform.position_of(i), CellContent::agent(0));
    }
    CHECK(mean_like_neighbor_fraction(uniform) == doctest::Approx(1.0));

    GridWorld checker(10, 10, Boundary::toroidal);
    for (std::size_t i = 0; i < checker.cell_count(); ++i) {
        const Position p = checker.position_of(i);
        checker.set(p, CellContent::agent((p.x + p.y) % 2));
    }
    CHECK(mean_like_neighbor_fraction(checker) == doctest::Approx(0.5));

    GridWorld lonely(5, 5, Boundary::bounded);
    lonely.set({2, 2}, CellContent::agent(0));
    CHECK_THROWS_WITH(mean_like_neighbor_fraction(lonely), "metric undefined");
}

TEST_CASE("mean like fraction of two vertical stripes matches the hand count") {
    // width-5 monochrome stripes on a 10x10 torus: interior columns score 1,
    // the two boundary columns of each stripe score 5/8
    GridWorld world(10, 10, Boundary::toroidal);
    for (std::size_t i = 0; i < world.cell_count(); ++i) {
        const Position p = world.position_of(i);
        world.set(p, CellContent::agent(p.x < 5 ? 0 : 1));
    }
    const double expected = (30.0 * 1.0 + 20.0 * 0.625) / 50.0;  // 0.85
    CHECK(mean_like_neighbor_fraction(world) == doctest::Approx(expected));

    // exhaustive per-cell oracle
    double sum = 0.0;
    for (std::size_t i = 0; i < world.cell_count(); ++i) {
        const auto lf = schelling::like_fraction(world, world.position_of(i));
        sum += *lf.fraction;
    }
    CHECK(mean_like_neighbor_fraction(world) == doctest::Approx(sum / 100.0));
}

TEST_CASE("spatial entropy extremes") {
    // all items in one block of a 2x2 block grid
    GridWorld packed(8, 8, Boundary::toroidal);
    packed.set({0, 0}, CellContent::item(0));
    packed.set({1, 1}, CellContent::item(0));
    packed.set({2, 3}, CellContent::item(0));
    CHECK(spatial_entropy(packed, 4) == doctest::Approx(0.0));

    // one item per block
    GridWorld spread(8, 8, Boundary::toroidal);
    for (const int bx : {0, 1}) {
        for (const int by : {0, 1}) {
            spread.set({bx * 4 + 1, by * 4 + 2}, CellContent::item(0));
        }
    }
    CHECK(spatial_entropy(spread, 4) == doctest::Approx(1.0));
}

TEST_CASE("spatial entropy of items split over half the blocks is 0.5") {
    // 4 blocks, two of them holding half the items each: -2(q log q)/log 4
    GridWorld world(8, 8, Boundary::toroidal);
    world.set({0, 0}, CellContent::item(0));
    world.set({1, 0}, CellContent::item(0));
    world.set({4, 0}, CellContent::item(0));
    world.set({5, 0}, CellContent::item(0));
    CHECK(spatial_entropy(world, 4) == doctest::Approx(0.5));
}

TEST_CASE("spatial entropy rejects bad blocks and empty worlds") {
    GridWorld world(8, 8, Boundary::toroidal);
    CHECK_THROWS(spatial_entropy(world, 3));  // does not divide 8
    CHECK_THROWS(spatial_entropy(world, 4));  // zero items
    world.set({0, 0}, CellContent::item(0));
    CHECK(spatial_entropy(world, 8) == 0.0);  // single block
}

TEST_CASE("spatial entropy is invariant under block-multiple torus shifts") {
    const GridWorld world = random_item_world(12, 12, 30, 13);
    const double base = spatial_entropy(world, 4);
    for (const auto [sx, sy] : {std::pair{4, 0}, {0, 8}, {8, 4}}) {
        GridWorld shifted(12, 12, Boundary::toroidal);
        for (std::size_t i = 0; i < world.cell_count(); ++i) {
            const Position p = world.position_of(i);
            if (world.at(p).is_item()) {
                shifted.set(shifted.wrap({p.x + sx, p.y + sy}), world.at(p));
            }
        }
        CHECK(spatial_entropy(shifted, 4) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("emergence verdicts for collection- and component-level properties") {
    // two monochrome blobs of size >= 5
    GridWorld world(12, 6, Boundary::bounded);
    for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 2; ++y) {
            world.set({x, y}, CellContent::agent(schelling::kBlack));
            world.set({x + 8, y + 3}, CellContent::agent(schelling::kWhite));
        }
    }
    const auto clusters = detect_clusters(world, is_agent, moore1);
    REQUIRE(clusters.size() == 2);

    const auto segregated = monochrome_clusters_property(2, 5);
    const EmergenceVerdict verdict = emergence_test(segregated, world, clusters);
    CHECK(verdict.holds_on_aggregate);
    CHECK_FALSE(verdict.defined_on_any_component);  // undefined on single cells
    CHECK(verdict.emergent);

    const auto is_black = cell_content_property(
        "cell is black", CellContent::agent(schelling::kBlack));
    const EmergenceVerdict component = emergence_test(is_black, world, clusters);
    CHECK_FALSE(component.holds_on_aggregate);
    CHECK(component.defined_on_any_component);
    CHECK_FALSE(component.emergent);  // true on some component

    // internal consistency: emergent implies holds_on_aggregate
    for (const auto& v : {verdict, component}) {
        if (v.emergent) CHECK(v.holds_on_aggregate);
    }
}

TEST_CASE("emergence test on an empty world is not emergent") {
    GridWorld world(4, 4, Boundary::bounded);
    const auto clusters = detect_clusters(world, is_agent, moore1);
    const auto prop = monochrome_clusters_property(2, 5);
    const EmergenceVerdict v = emergence_test(prop, world, clusters);
    CHECK_FALSE(v.holds_on_aggregate);
    CHECK_FALSE(v.emergent);
}

TEST_CASE("verdict does not depend on cluster enumeration order") {
    const GridWorld world = random_item_world(10, 10, 35, 21);
    auto clusters = detect_clusters(world, is_item, moore1);
    const auto prop = monochrome_clusters_property(2, 3);
    const EmergenceVerdict forward = emergence_test(prop, world, clusters);
    std::reverse(clusters.begin(), clusters.end());
    const EmergenceVerdict backward = emergence_test(prop, world, clusters);
    CHECK(forward.holds_on_aggregate == backward.holds_on_aggregate);
    CHECK(forward.emergent == backward.emergent);
}

TEST_CASE("hyperstructure levels") {
    SUBCASE("no clusters: every level is empty") {
        const auto levels = build_hyperstructure({}, 2.0, 4);
        REQUIRE(levels.size() == 3);  // levels 2, 3, 4
        for (const auto& level : levels) CHECK(level.structures.empty());
    }

    SUBCASE("one cluster collapses immediately") {
        Cluster c;
        c.members = {{1, 1}};
        c.centroid = {1.0, 1.0};
        const auto levels = build_hyperstructure({c}, 2.0, 5);
        REQUIRE(levels.size() == 2);  // level 3 already has a single structure
        CHECK(levels[0].level == 2);
        CHECK(levels[1].level == 3);
        REQUIRE(levels[1].structures.size() == 1);
        CHECK(levels[1].structures[0].members == std::vector<std::size_t>{0});
    }

    SUBCASE("two close clusters merge at level 3") {
        Cluster a, b;
        a.members = {{0, 0}};
        a.centroid = {0.0, 0.0};
        b.members = {{3, 0}};
        b.centroid = {3.0, 0.0};
        const auto merged = build_hyperstructure({a, b}, 3.5, 4);
        REQUIRE(merged.size() == 2);
        REQUIRE(merged[1].structures.size() == 1);
        CHECK(merged[1].structures[0].members == std::vector<std::size_t>{0, 1});
        CHECK(merged[1].structures[0].centroid == std::pair{1.5, 0.0});

        // below the threshold they stay apart at level 3, then join at level
        // 4 where the linking distance doubles
        const auto apart = build_hyperstructure({a, b}, 2.0, 4);
        REQUIRE(apart.size() == 3);
        CHECK(apart[1].structures.size() == 2);
        CHECK(apart[2].structures.size() == 1);
    }

    CHECK_THROWS(build_hyperstructure({}, 2.0, 1));
    CHECK_THROWS(build_hyperstructure({}, 0.0, 3));
}
