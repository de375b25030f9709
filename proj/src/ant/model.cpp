#include "socsim/ant/model.hpp"

#include <stdexcept>
#include <utility>

#include "socsim/emergence/clusters.hpp"
#include "socsim/emergence/metrics.hpp"
#include "socsim/engine/neighborhood.hpp"

namespace socsim::ant {

PerceptionMemory::PerceptionMemory(int item_types, int window)
    : types_(item_types), window_(window) {
    if (item_types < 1) throw std::invalid_argument("item_types must be at least 1");
    if (window < 1) throw std::invalid_argument("memory window must be at least 1");
    bits_.assign(static_cast<std::size_t>(types_) * window_, 0);
    counts_.assign(types_, 0);
}

void PerceptionMemory::observe(std::optional<int> item_type) {
    for (int t = 0; t < types_; ++t) {
        std::uint8_t& slot = bits_[static_cast<std::size_t>(t) * window_ + cursor_];
        counts_[t] -= slot;
        slot = (item_type && *item_type == t) ? 1 : 0;
        counts_[t] += slot;
    }
    cursor_ = (cursor_ + 1) % window_;
}

double PerceptionMemory::fraction(int item_type) const {
    return static_cast<double>(counts_[item_type]) / window_;
}

double pickup_probability(double f, double k1) {
    if (k1 <= 0.0) throw std::invalid_argument("k1 must be positive");
    const double r = k1 / (k1 + f);
    return r * r;
}

double drop_probability(double f, double k2) {
    if (k2 <= 0.0) throw std::invalid_argument("k2 must be positive");
    const double r = f / (k2 + f);
    return r * r;
}

void ant_tick(GridWorld& world, AntState& ant, const AntParams& params, RngStream& rng) {
    const std::vector<Position> nbrs = neighborhood(world, ant.pos, moore1);
    if (!nbrs.empty()) {
        ant.pos = nbrs[static_cast<std::size_t>(rng.uniform_index(nbrs.size()))];
    }

    const CellContent cell = world.at(ant.pos);
    std::optional<int> underfoot;
    if (cell.is_item()) underfoot = cell.type;

    // Decision fraction comes from the window before this tick's perception.
    double f = 0.0;
    const bool can_pickup = !ant.carrying && underfoot.has_value();
    const bool can_drop = ant.carrying && !underfoot.has_value() && cell.is_empty();
    if (can_pickup) f = ant.memory.fraction(*underfoot);
    if (can_drop) f = ant.memory.fraction(*ant.carrying);

    ant.memory.observe(underfoot);

    if (can_pickup) {
        if (rng.uniform_double() < pickup_probability(f, params.k1)) {
            world.set(ant.pos, CellContent::none());
            ant.carrying = underfoot;
        }
    } else if (can_drop) {
        if (rng.uniform_double() < drop_probability(f, params.k2)) {
            world.set(ant.pos, CellContent::item(*ant.carrying));
            ant.carrying.reset();
        }
    }
}

GridSnapshot render_ants(const GridWorld& world, const std::vector<AntState>& ants) {
    GridSnapshot snap = snapshot_of(world);
    for (const AntState& ant : ants) {
        char& c = snap.at(ant.pos.x, ant.pos.y);
        c = world.at(ant.pos).is_item() ? '*' : 'a';
    }
    return snap;
}

AntSim::AntSim(const AntParams& params, std::uint64_t seed)
    : params_(params), world_(params.width, params.height, params.boundary), rng_(seed) {
    if (params.item_types < 1 || params.items_per_type < 1) {
        throw std::invalid_argument("item counts must be at least 1");
    }
    const std::size_t total_items =
        static_cast<std::size_t>(params.item_types) * params.items_per_type;
    if (total_items > world_.cell_count()) {
        throw std::invalid_argument("more items than grid cells");
    }
    if (params.n_ants < 1) throw std::invalid_argument("n_ants must be at least 1");

    // Items land on distinct cells; the first items_per_type slots of the
    // permutation hold type 0, the next block type 1, and so on.
    const std::vector<std::size_t> order = rng_.permutation(world_.cell_count());
    for (std::size_t i = 0; i < total_items; ++i) {
        const int type = static_cast<int>(i / params.items_per_type);
        world_.set(world_.position_of(order[i]), CellContent::item(type));
    }

    ants_.reserve(params.n_ants);
    for (int i = 0; i < params.n_ants; ++i) {
        const int x = static_cast<int>(rng_.uniform_index(params.width));
        const int y = static_cast<int>(rng_.uniform_index(params.height));
        ants_.push_back({{x, y}, std::nullopt,
                         PerceptionMemory(params.item_types, params.memory_length)});
    }
}

void AntSim::tick() {
    const std::vector<std::size_t> order = rng_.permutation(ants_.size());
    for (const std::size_t i : order) {
        ant_tick(world_, ants_[i], params_, rng_);
    }
    ++tick_;
}

int AntSim::on_grid_count(int item_type) const {
    int n = 0;
    for (const CellContent& c : world_.cells()) {
        if (c.is_item() && c.type == item_type) ++n;
    }
    return n;
}

int AntSim::carried_count(int item_type) const {
    int n = 0;
    for (const AntState& ant : ants_) {
        if (ant.carrying && *ant.carrying == item_type) ++n;
    }
    return n;
}

MetricMap AntSim::metrics() const {
    const auto clusters = emergence::detect_clusters(
        world_, [](const CellContent& c) { return c.is_item(); }, moore1);
    std::size_t on_grid = 0;
    std::size_t largest = 0;
    for (const auto& cluster : clusters) {
        on_grid += cluster.size();
        largest = std::max(largest, cluster.size());
    }
    MetricMap m;
    m["cluster_count"] = static_cast<double>(clusters.size());
    m["largest_cluster_fraction"] =
        on_grid ? static_cast<double>(largest) / static_cast<double>(on_grid) : 0.0;
    m["spatial_entropy"] =
        on_grid ? emergence::spatial_entropy(world_, params_.entropy_block) : 0.0;
    return m;
}

Trace run_ant_model(const AntParams& params, std::uint64_t seed, std::int64_t ticks,
                    std::int64_t snapshot_every) {
    if (ticks < 0) throw std::invalid_argument("ticks must be non-negative");
    if (snapshot_every < 1) throw std::invalid_argument("snapshot_every must be at least 1");
    AntSim sim(params, seed);
    Trace trace;
    trace.record(0, sim.render(), sim.metrics());
    for (std::int64_t t = 1; t <= ticks; ++t) {
        sim.tick();
        if (t % snapshot_every == 0) {
            trace.record(t, sim.render(), sim.metrics());
        }
    }
    return trace;
}

}  // namespace socsim::ant
