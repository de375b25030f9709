#include "socsim/emergence/hyperstructure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace socsim::emergence {

namespace {

double centroid_distance(const std::pair<double, double>& a, const std::pair<double, double>& b) {
    const double dx = a.first - b.first;
    const double dy = a.second - b.second;
    return std::sqrt(dx * dx + dy * dy);
}

StructureLevel link_level(const StructureLevel& prev, double threshold) {
    StructureLevel next;
    next.level = prev.level + 1;
    const std::size_t n = prev.structures.size();
    std::vector<char> visited(n, 0);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start]) continue;
        StructureLevel::Structure group;
        stack.assign(1, start);
        visited[start] = 1;
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            group.members.push_back(i);
            for (std::size_t j = 0; j < n; ++j) {
                if (visited[j]) continue;
                if (centroid_distance(prev.structures[i].centroid,
                                      prev.structures[j].centroid) <= threshold) {
                    visited[j] = 1;
                    stack.push_back(j);
                }
            }
        }
        std::sort(group.members.begin(), group.members.end());
        double sx = 0.0, sy = 0.0;
        for (const std::size_t i : group.members) {
            sx += prev.structures[i].centroid.first;
            sy += prev.structures[i].centroid.second;
        }
        group.centroid = {sx / static_cast<double>(group.members.size()),
                          sy / static_cast<double>(group.members.size())};
        next.structures.push_back(std::move(group));
    }
    return next;
}

}  // namespace

std::vector<StructureLevel> build_hyperstructure(const std::vector<Cluster>& clusters,
                                                 double linking_distance, int max_level) {
    if (max_level < 2) throw std::invalid_argument("max_level must be at least 2");
    if (linking_distance <= 0.0) throw std::invalid_argument("linking_distance must be positive");

    std::vector<StructureLevel> levels;
    StructureLevel base;
    base.level = 2;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        base.structures.push_back({{i}, clusters[i].centroid});
    }
    levels.push_back(std::move(base));

    while (levels.back().level < max_level) {
        const double threshold = linking_distance * (levels.back().level - 1);
        levels.push_back(link_level(levels.back(), threshold));
        if (levels.back().structures.size() == 1) break;
    }
    return levels;
}

}  // namespace socsim::emergence
