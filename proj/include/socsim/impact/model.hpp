#pragma once

#include <cstdint>
#include <vector>

#include "socsim/engine/grid.hpp"
#include "socsim/engine/rng.hpp"
#include "socsim/engine/trace.hpp"

namespace socsim::impact {

// Attitudes, stored as the agent type of a cell.
inline constexpr int kPositive = 0;
inline constexpr int kNegative = 1;

// Snapshot coding: '+' and '-' (no vacancies).
inline const CellCoder& coder() {
    static const CellCoder c{'.', "ABCDEFGHIJKLMNOPQRSTUVWXYZ", "+-"};
    return c;
}

struct ImpactParams {
    int width = 20;
    int height = 20;
    double distance_exponent = 2.0;  // >= 0
    double p_max = 1.0;  // persuasiveness drawn uniformly from (0, p_max]
    double s_max = 1.0;  // supportiveness drawn uniformly from (0, s_max]
    double initial_minority = 0.3;  // in [0, 0.5]

    friend bool operator==(const ImpactParams&, const ImpactParams&) = default;
};

// Fully occupied lattice. Attitudes flip; positions and strengths never
// change. Strengths are indexed by cell index.
struct ImpactWorld {
    GridWorld grid;
    std::vector<double> persuasiveness;
    std::vector<double> supportiveness;
};

// Fully occupied grid with round(initial_minority * cells) negative-attitude
// agents chosen by seeded sampling; strengths drawn uniformly from (0, max].
ImpactWorld initial_world(const ImpactParams& params, RngStream& rng);

// Persuasive pull of the opposing camp minus supportive anchoring of the own
// camp, each strength divided by torus Euclidean distance (min-image per
// axis) raised to the distance exponent. Self-support enters at distance 1.
// Positive net means the agent flips.
double net_impact(const ImpactWorld& world, Position pos, const ImpactParams& params);

// Synchronous update: every net impact is computed on the pre-sweep state,
// then all agents with net > 0 (strictly) flip. Returns the flip count.
int impact_sweep(ImpactWorld& world, const ImpactParams& params);

// min(count(+), count(-)) / total over agent cells.
double minority_fraction(const GridWorld& world);

// minority_fraction, mean_like_fraction, flips
MetricMap metrics(const GridWorld& world, int flips);

// Sweeps until flips reach 0 or the sweep cap; records at every multiple of
// snapshot_every plus the final sweep of an early stop.
Trace run_impact_model(const ImpactParams& params, std::uint64_t seed, std::int64_t sweeps,
                       std::int64_t snapshot_every);

}  // namespace socsim::impact
