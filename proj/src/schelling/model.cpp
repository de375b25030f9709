#include "socsim/schelling/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "socsim/emergence/clusters.hpp"
#include "socsim/emergence/metrics.hpp"
#include "socsim/engine/neighborhood.hpp"

namespace socsim::schelling {

namespace {

int required_same(int occupied_neighbors) {
    if (occupied_neighbors <= 1) return 0;
    if (occupied_neighbors == 2) return 1;
    if (occupied_neighbors <= 5) return 2;
    return 3;
}

// Distance used for nearest-vacancy search; min-image on the torus.
int chebyshev(const GridWorld& world, Position a, Position b) {
    int dx = std::abs(a.x - b.x);
    int dy = std::abs(a.y - b.y);
    if (world.boundary() == Boundary::toroidal) {
        dx = std::min(dx, world.width() - dx);
        dy = std::min(dy, world.height() - dy);
    }
    return std::max(dx, dy);
}

}  // namespace

LikeFraction like_fraction(const GridWorld& world, Position pos) {
    const CellContent& cell = world.at(pos);
    if (!cell.is_agent()) throw std::invalid_argument("no resident");
    LikeFraction out;
    for (const Position& n : neighborhood(world, pos, moore1)) {
        const CellContent& c = world.at(n);
        if (!c.is_agent()) continue;
        ++out.total;
        if (c.type == cell.type) ++out.same;
    }
    if (out.total > 0) out.fraction = static_cast<double>(out.same) / out.total;
    return out;
}

bool satisfies(int same, int total, const RuleVariant& rule) {
    if (rule.kind == RuleVariant::Kind::threshold_table) {
        return same >= required_same(total);
    }
    if (total == 0) return true;
    return static_cast<double>(same) / total >= rule.preference;
}

bool is_satisfied(const GridWorld& world, Position pos, const RuleVariant& rule) {
    const LikeFraction lf = like_fraction(world, pos);
    return satisfies(lf.same, lf.total, rule);
}

std::optional<Position> find_relocation(const GridWorld& world, Position pos,
                                        const RuleVariant& rule, RngStream& rng,
                                        RelocationPolicy policy) {
    const CellContent& cell = world.at(pos);
    if (!cell.is_agent()) throw std::invalid_argument("no resident");
    const int color = cell.type;

    std::vector<Position> candidates;  // satisfying vacancies, row-major
    std::vector<Position> nbrs;
    for (std::size_t i = 0; i < world.cell_count(); ++i) {
        if (!world.cells()[i].is_empty()) continue;
        const Position v = world.position_of(i);
        int same = 0, total = 0;
        neighborhood(world, v, moore1, nbrs);
        for (const Position& n : nbrs) {
            if (n == pos) continue;  // origin counts as vacant during evaluation
            const CellContent& c = world.at(n);
            if (!c.is_agent()) continue;
            ++total;
            if (c.type == color) ++same;
        }
        if (satisfies(same, total, rule)) candidates.push_back(v);
    }
    if (candidates.empty()) return std::nullopt;

    if (policy == RelocationPolicy::random) {
        return candidates[static_cast<std::size_t>(rng.uniform_index(candidates.size()))];
    }

    int best = chebyshev(world, pos, candidates.front());
    for (const Position& v : candidates) best = std::min(best, chebyshev(world, pos, v));
    std::vector<Position> ties;
    for (const Position& v : candidates) {
        if (chebyshev(world, pos, v) == best) ties.push_back(v);
    }
    return ties[static_cast<std::size_t>(rng.uniform_index(ties.size()))];
}

int schelling_sweep(GridWorld& world, const SchellingParams& params, RngStream& rng) {
    std::vector<Position> residents;
    for (std::size_t i = 0; i < world.cell_count(); ++i) {
        if (world.cells()[i].is_agent()) residents.push_back(world.position_of(i));
    }
    const std::vector<std::size_t> order = rng.permutation(residents.size());
    int moves = 0;
    for (const std::size_t idx : order) {
        const Position pos = residents[idx];
        if (is_satisfied(world, pos, params.rule)) continue;
        const auto dest = find_relocation(world, pos, params.rule, rng, params.relocation);
        if (!dest) continue;
        world.set(*dest, world.at(pos));
        world.set(pos, CellContent::none());
        ++moves;
    }
    return moves;
}

GridWorld integrated_initial(const SchellingParams& params, RngStream& rng) {
    if (params.width % 2 != 0 || params.height % 2 != 0) {
        throw std::invalid_argument("checkerboard start needs even grid dimensions");
    }
    if (params.vacancy_fraction < 0.0 || params.vacancy_fraction >= 1.0) {
        throw std::invalid_argument("vacancy_fraction must lie in [0, 1)");
    }
    GridWorld world(params.width, params.height, params.boundary);
    for (std::size_t i = 0; i < world.cell_count(); ++i) {
        const Position p = world.position_of(i);
        world.set(p, CellContent::agent((p.x + p.y) % 2 == 0 ? kBlack : kWhite));
    }
    const auto n_vacant = static_cast<std::size_t>(
        std::llround(params.vacancy_fraction * static_cast<double>(world.cell_count())));
    const std::vector<std::size_t> order = rng.permutation(world.cell_count());
    for (std::size_t i = 0; i < n_vacant; ++i) {
        world.set(world.position_of(order[i]), CellContent::none());
    }
    return world;
}

void perturb(GridWorld& world, int k, RngStream& rng) {
    std::vector<Position> residents;
    for (std::size_t i = 0; i < world.cell_count(); ++i) {
        if (world.cells()[i].is_agent()) residents.push_back(world.position_of(i));
    }
    if (k < 0 || static_cast<std::size_t>(k) > residents.size()) {
        throw std::invalid_argument("perturbation exceeds resident count");
    }
    const std::vector<std::size_t> order = rng.permutation(residents.size());
    for (int i = 0; i < k; ++i) {
        world.set(residents[order[static_cast<std::size_t>(i)]], CellContent::none());
    }
}

MetricMap metrics(const GridWorld& world, int moves) {
    const auto clusters = emergence::detect_clusters(
        world, [](const CellContent& c) { return c.is_agent(); }, moore1);
    std::size_t residents = 0;
    std::size_t largest = 0;
    for (const auto& cluster : clusters) {
        residents += cluster.size();
        largest = std::max(largest, cluster.size());
    }
    MetricMap m;
    m["mean_like_fraction"] = emergence::mean_like_neighbor_fraction(world);
    m["cluster_count"] = static_cast<double>(clusters.size());
    m["largest_cluster_fraction"] =
        residents ? static_cast<double>(largest) / static_cast<double>(residents) : 0.0;
    m["moves"] = static_cast<double>(moves);
    return m;
}

Trace run_schelling_model(const SchellingParams& params, std::uint64_t seed,
                          std::int64_t sweeps, std::int64_t snapshot_every) {
    if (sweeps < 0) throw std::invalid_argument("sweeps must be non-negative");
    if (snapshot_every < 1) throw std::invalid_argument("snapshot_every must be at least 1");
    RngStream rng(seed);
    GridWorld world = integrated_initial(params, rng);
    std::size_t residents = 0;
    for (const CellContent& c : world.cells()) residents += c.is_agent();
    const int k = static_cast<int>(
        std::llround(params.perturb_fraction * static_cast<double>(residents)));
    perturb(world, k, rng);

    Trace trace;
    record_snapshot(world, 0, metrics(world, 0), trace, coder());
    for (std::int64_t s = 1; s <= sweeps; ++s) {
        const int moves = schelling_sweep(world, params, rng);
        const bool due = (s % snapshot_every == 0);
        if (due) record_snapshot(world, s, metrics(world, moves), trace, coder());
        if (moves == 0) {
            if (!due) record_snapshot(world, s, metrics(world, moves), trace, coder());
            break;
        }
    }
    return trace;
}

}  // namespace socsim::schelling
