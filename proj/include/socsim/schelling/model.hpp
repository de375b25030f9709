#pragma once

#include <cstdint>
#include <optional>

#include "socsim/engine/grid.hpp"
#include "socsim/engine/rng.hpp"
#include "socsim/engine/trace.hpp"

namespace socsim::schelling {

// Resident colors, stored as the agent type of a cell.
inline constexpr int kBlack = 0;
inline constexpr int kWhite = 1;

// Snapshot coding: '.' vacant, 'B' black, 'W' white.
inline const CellCoder& coder() {
    static const CellCoder c{'.', "ABCDEFGHIJKLMNOPQRSTUVWXYZ", "BW"};
    return c;
}

struct RuleVariant {
    enum class Kind { threshold_table, fraction };

    Kind kind = Kind::threshold_table;
    double preference = 0.5;  // fraction variant only, in [0, 1]

    friend bool operator==(const RuleVariant&, const RuleVariant&) = default;
};

enum class RelocationPolicy { nearest, random };

struct SchellingParams {
    int width = 20;
    int height = 20;
    Boundary boundary = Boundary::toroidal;
    double vacancy_fraction = 0.1;  // in [0, 1)
    RuleVariant rule;
    RelocationPolicy relocation = RelocationPolicy::nearest;
    double perturb_fraction = 0.05;  // residents removed before the run starts

    friend bool operator==(const SchellingParams&, const SchellingParams&) = default;
};

struct LikeFraction {
    int same = 0;
    int total = 0;  // occupied moore-r1 neighbors; vacancies excluded
    std::optional<double> fraction;  // absent when total == 0
};

LikeFraction like_fraction(const GridWorld& world, Position pos);

// Threshold table: required same-color count by occupied-neighbor total.
// 0-1 neighbors -> 0 (isolated residents are content), 2 -> 1, 3-5 -> 2,
// 6-8 -> 3. The fraction variant requires fraction >= preference, and is
// satisfied outright with no occupied neighbors.
bool satisfies(int same, int total, const RuleVariant& rule);
bool is_satisfied(const GridWorld& world, Position pos, const RuleVariant& rule);

// Evaluates every vacancy as if the resident stood there (its origin cell
// counted as vacant). Nearest policy returns the closest satisfying vacancy
// by Chebyshev distance, ties broken uniformly over the row-major tie set;
// random policy picks uniformly over all satisfying vacancies.
std::optional<Position> find_relocation(const GridWorld& world, Position pos,
                                        const RuleVariant& rule, RngStream& rng,
                                        RelocationPolicy policy = RelocationPolicy::nearest);

// Activates each resident once in a fresh random permutation; unsatisfied
// residents relocate when a satisfying vacancy exists. Returns moves made.
int schelling_sweep(GridWorld& world, const SchellingParams& params, RngStream& rng);

// Checkerboard coloring with vacancy_fraction of cells cleared by seeded
// sampling. Needs even dimensions. With zero vacancies on a torus the
// checkerboard satisfies every resident under the threshold table.
GridWorld integrated_initial(const SchellingParams& params, RngStream& rng);

// Removes k uniformly chosen residents.
void perturb(GridWorld& world, int k, RngStream& rng);

// mean_like_fraction, cluster_count, largest_cluster_fraction, moves
MetricMap metrics(const GridWorld& world, int moves);

// Builds the perturbed integrated start, then sweeps until moves reach 0 or
// the sweep cap. Records at every multiple of snapshot_every plus the final
// sweep of an early stop.
Trace run_schelling_model(const SchellingParams& params, std::uint64_t seed,
                          std::int64_t sweeps, std::int64_t snapshot_every);

}  // namespace socsim::schelling
