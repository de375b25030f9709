#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "socsim/ant/model.hpp"
#include "socsim/engine/neighborhood.hpp"

using namespace socsim;
using namespace socsim::ant;

TEST_CASE("pickup probability matches the threshold formula") {
    CHECK(pickup_probability(0.0, 0.1) == 1.0);
    CHECK(pickup_probability(0.1, 0.1) == doctest::Approx(0.25).epsilon(1e-12));
    // (0.1 / 0.4)^2
    CHECK(pickup_probability(0.3, 0.1) == doctest::Approx(0.0625).epsilon(1e-12));
    CHECK_THROWS(pickup_probability(0.5, 0.0));
    CHECK_THROWS(pickup_probability(0.5, -1.0));
}

TEST_CASE("drop probability matches the threshold formula") {
    CHECK(drop_probability(0.0, 0.3) == 0.0);
    CHECK(drop_probability(0.15, 0.15) == doctest::Approx(0.25).epsilon(1e-12));
    // (0.45 / 0.6)^2
    CHECK(drop_probability(0.45, 0.15) == doctest::Approx(0.5625).epsilon(1e-12));
    CHECK_THROWS(drop_probability(0.5, 0.0));
}

TEST_CASE("probabilities are monotone and bounded over the f grid") {
    for (const double k : {0.02, 0.1, 0.3, 1.0, 2.0}) {
        double prev_pickup = 2.0;
        double prev_drop = -1.0;
        for (int i = 0; i <= 100; ++i) {
            const double f = i / 100.0;
            const double pp = pickup_probability(f, k);
            const double pd = drop_probability(f, k);
            CHECK(pp > 0.0);
            CHECK(pp <= 1.0);
            CHECK(pd >= 0.0);
            CHECK(pd < 1.0);
            CHECK(pp < prev_pickup);  // strictly decreasing in f
            CHECK(pd > prev_drop);    // strictly increasing in f
            prev_pickup = pp;
            prev_drop = pd;
        }
    }
}

TEST_CASE("perceived fraction counts sightings over the window") {
    PerceptionMemory memory(2, 10);
    CHECK(memory.fraction(0) == 0.0);

    for (int i = 0; i < 3; ++i) memory.observe(0);
    CHECK(memory.fraction(0) == doctest::Approx(0.3));  // 3 sightings in T=10
    CHECK(memory.fraction(1) == 0.0);

    PerceptionMemory full(1, 10);
    for (int i = 0; i < 10; ++i) full.observe(0);
    CHECK(full.fraction(0) == 1.0);

    // ring semantics: the oldest entries fall out of the window
    for (int i = 0; i < 10; ++i) full.observe(std::nullopt);
    CHECK(full.fraction(0) == 0.0);
}

TEST_CASE("fresh unladen ant always lifts the first item it meets") {
    AntParams params;
    params.width = 3;
    params.height = 3;
    params.items_per_type = 1;

    // every cell but the center holds an item, so the moved ant lands on one
    GridWorld world(3, 3, Boundary::toroidal);
    for (std::size_t i = 0; i < world.cell_count(); ++i) {
        if (world.position_of(i) == Position{1, 1}) continue;
        world.set(world.position_of(i), CellContent::item(0));
    }
    RngStream rng(3);
    AntState antst{{1, 1}, std::nullopt, PerceptionMemory(1, 50)};
    ant_tick(world, antst, params, rng);
    CHECK(antst.carrying.has_value());  // f = 0 so pickup probability is 1
    CHECK(world.at(antst.pos).is_empty());
}

TEST_CASE("laden ant cannot drop onto an occupied cell") {
    AntParams params;
    GridWorld full(3, 3, Boundary::toroidal);
    for (std::size_t i = 0; i < full.cell_count(); ++i) {
        full.set(full.position_of(i), CellContent::item(0));
    }
    RngStream rng(5);
    for (int i = 0; i < 20; ++i) {
        AntState carrier{{1, 1}, 0, PerceptionMemory(1, 50)};
        // saturate memory so a drop would be certain if it were allowed
        for (int j = 0; j < 50; ++j) carrier.memory.observe(0);
        GridWorld w = full;
        ant_tick(w, carrier, params, rng);
        CHECK(carrier.carrying.has_value());
        CHECK(w.cells() == full.cells());
    }
}

TEST_CASE("items are conserved through every tick") {
    AntParams params;
    params.width = 12;
    params.height = 12;
    params.item_types = 2;
    params.items_per_type = 20;
    params.n_ants = 6;
    params.memory_length = 10;
    params.entropy_block = 4;

    AntSim sim(params, 99);
    for (int t = 0; t < 300; ++t) {
        sim.tick();
        for (int type = 0; type < params.item_types; ++type) {
            REQUIRE(sim.on_grid_count(type) + sim.carried_count(type) ==
                    params.items_per_type);
        }
        for (const AntState& a : sim.ants()) {
            REQUIRE(sim.world().contains(a.pos));
        }
    }
}

TEST_CASE("render overlays ants on the item field") {
    AntParams params;
    params.width = 4;
    params.height = 1;
    params.items_per_type = 1;
    params.n_ants = 1;

    GridWorld world(4, 1, Boundary::toroidal);
    world.set({0, 0}, CellContent::item(0));
    world.set({2, 0}, CellContent::item(1));
    std::vector<AntState> ants;
    ants.push_back({{2, 0}, std::nullopt, PerceptionMemory(2, 5)});
    ants.push_back({{3, 0}, std::nullopt, PerceptionMemory(2, 5)});
    const GridSnapshot snap = render_ants(world, ants);
    CHECK(snap.at(0, 0) == 'A');
    CHECK(snap.at(1, 0) == '.');
    CHECK(snap.at(2, 0) == '*');  // ant on item
    CHECK(snap.at(3, 0) == 'a');  // ant on empty cell
}

TEST_CASE("run_ant_model records the initial snapshot and respects cadence") {
    AntParams params;
    params.width = 10;
    params.height = 10;
    params.items_per_type = 10;
    params.n_ants = 3;
    params.entropy_block = 5;

    const Trace none = run_ant_model(params, 1, 0, 1);
    CHECK(none.size() == 1);
    CHECK(none.front().tick == 0);

    const Trace trace = run_ant_model(params, 1, 100, 25);
    CHECK(trace.size() == 5);  // ticks 0, 25, 50, 75, 100
    CHECK(trace.back().tick == 100);
    CHECK(trace.front().metrics.count("cluster_count") == 1);
    CHECK(trace.front().metrics.count("spatial_entropy") == 1);
    CHECK(trace.front().metrics.count("largest_cluster_fraction") == 1);
}

TEST_CASE("same seed gives bit-identical traces") {
    AntParams params;
    params.width = 10;
    params.height = 10;
    params.items_per_type = 15;
    params.n_ants = 4;
    params.entropy_block = 5;

    const Trace a = run_ant_model(params, 31, 200, 50);
    const Trace b = run_ant_model(params, 31, 200, 50);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.entries()[i].tick == b.entries()[i].tick);
        CHECK(a.entries()[i].snapshot == b.entries()[i].snapshot);
        CHECK(a.entries()[i].metrics == b.entries()[i].metrics);
    }
}

TEST_CASE("oversubscribed grids are rejected") {
    AntParams params;
    params.width = 4;
    params.height = 4;
    params.items_per_type = 17;
    CHECK_THROWS(AntSim(params, 1));
}
