#include "socsim/impact/model.hpp"

#include <cmath>
#include <stdexcept>

#include "socsim/emergence/metrics.hpp"

namespace socsim::impact {

namespace {

// strength / distance^e with min-image distances; e == 2 needs no pow.
double distance_weight(const GridWorld& grid, Position a, Position b, double exponent) {
    int dx = std::abs(a.x - b.x);
    int dy = std::abs(a.y - b.y);
    dx = std::min(dx, grid.width() - dx);
    dy = std::min(dy, grid.height() - dy);
    const double d2 = static_cast<double>(dx) * dx + static_cast<double>(dy) * dy;
    if (exponent == 2.0) return 1.0 / d2;
    return 1.0 / std::pow(d2, exponent * 0.5);
}

}  // namespace

ImpactWorld initial_world(const ImpactParams& params, RngStream& rng) {
    if (params.initial_minority < 0.0 || params.initial_minority > 0.5) {
        throw std::invalid_argument("initial_minority must lie in [0, 0.5]");
    }
    if (params.p_max <= 0.0 || params.s_max <= 0.0) {
        throw std::invalid_argument("strength bounds must be positive");
    }
    if (params.distance_exponent < 0.0) {
        throw std::invalid_argument("distance_exponent must be non-negative");
    }
    ImpactWorld world{GridWorld(params.width, params.height, Boundary::toroidal), {}, {}};
    for (std::size_t i = 0; i < world.grid.cell_count(); ++i) {
        world.grid.set(world.grid.position_of(i), CellContent::agent(kPositive));
    }
    const auto n_minority = static_cast<std::size_t>(std::llround(
        params.initial_minority * static_cast<double>(world.grid.cell_count())));
    const std::vector<std::size_t> order = rng.permutation(world.grid.cell_count());
    for (std::size_t i = 0; i < n_minority; ++i) {
        world.grid.set(world.grid.position_of(order[i]), CellContent::agent(kNegative));
    }
    world.persuasiveness.reserve(world.grid.cell_count());
    world.supportiveness.reserve(world.grid.cell_count());
    for (std::size_t i = 0; i < world.grid.cell_count(); ++i) {
        world.persuasiveness.push_back(params.p_max * rng.uniform_double_open_closed());
        world.supportiveness.push_back(params.s_max * rng.uniform_double_open_closed());
    }
    return world;
}

double net_impact(const ImpactWorld& world, Position pos, const ImpactParams& params) {
    const GridWorld& grid = world.grid;
    const CellContent& self = grid.at(pos);
    if (!self.is_agent()) throw std::invalid_argument("no agent at position");
    const std::size_t self_idx = grid.index_of(pos);

    double persuasive = 0.0;
    double supportive = world.supportiveness[self_idx];  // self anchors at distance 1
    for (std::size_t i = 0; i < grid.cell_count(); ++i) {
        if (i == self_idx) continue;
        const CellContent& c = grid.cells()[i];
        const double w = distance_weight(grid, pos, grid.position_of(i),
                                         params.distance_exponent);
        if (c.type == self.type) {
            supportive += world.supportiveness[i] * w;
        } else {
            persuasive += world.persuasiveness[i] * w;
        }
    }
    return persuasive - supportive;
}

int impact_sweep(ImpactWorld& world, const ImpactParams& params) {
    const std::size_t n = world.grid.cell_count();
    std::vector<char> flips(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        flips[i] = net_impact(world, world.grid.position_of(i), params) > 0.0;
    }
    int count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!flips[i]) continue;
        const Position p = world.grid.position_of(i);
        world.grid.set(p, CellContent::agent(world.grid.at(p).type == kPositive ? kNegative
                                                                                : kPositive));
        ++count;
    }
    return count;
}

double minority_fraction(const GridWorld& world) {
    std::size_t positive = 0, negative = 0;
    for (const CellContent& c : world.cells()) {
        if (!c.is_agent()) continue;
        (c.type == kPositive ? positive : negative) += 1;
    }
    const std::size_t total = positive + negative;
    if (total == 0) throw std::invalid_argument("empty world");
    return static_cast<double>(std::min(positive, negative)) / static_cast<double>(total);
}

MetricMap metrics(const GridWorld& world, int flips) {
    MetricMap m;
    m["minority_fraction"] = minority_fraction(world);
    m["mean_like_fraction"] = emergence::mean_like_neighbor_fraction(world);
    m["flips"] = static_cast<double>(flips);
    return m;
}

Trace run_impact_model(const ImpactParams& params, std::uint64_t seed, std::int64_t sweeps,
                       std::int64_t snapshot_every) {
    if (sweeps < 0) throw std::invalid_argument("sweeps must be non-negative");
    if (snapshot_every < 1) throw std::invalid_argument("snapshot_every must be at least 1");
    RngStream rng(seed);
    ImpactWorld world = initial_world(params, rng);

    Trace trace;
    record_snapshot(world.grid, 0, metrics(world.grid, 0), trace, coder());
    for (std::int64_t s = 1; s <= sweeps; ++s) {
        const int flips = impact_sweep(world, params);
        const bool due = (s % snapshot_every == 0);
        if (due) record_snapshot(world.grid, s, metrics(world.grid, flips), trace, coder());
        if (flips == 0) {
            if (!due) record_snapshot(world.grid, s, metrics(world.grid, flips), trace, coder());
            break;
        }
    }
    return trace;
}

}  // namespace socsim::impact
