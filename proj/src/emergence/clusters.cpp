#include "socsim/emergence/clusters.hpp"

#include <algorithm>

namespace socsim::emergence {

std::vector<Cluster> detect_clusters(const GridWorld& world, const CellSelector& selector,
                                     const NeighborhoodSpec& adjacency) {
    const std::size_t n = world.cell_count();
    std::vector<char> selected(n, 0);
    for (std::size_t i = 0; i < n; ++i) selected[i] = selector(world.cells()[i]) ? 1 : 0;

    std::vector<char> visited(n, 0);
    std::vector<Cluster> out;
    std::vector<Position> nbrs;
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (!selected[start] || visited[start]) continue;
        const CellContent seed_content = world.cells()[start];
        Cluster cluster;
        cluster.type = seed_content.type;
        stack.assign(1, start);
        visited[start] = 1;
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            cluster.members.push_back(world.position_of(i));
            neighborhood(world, world.position_of(i), adjacency, nbrs);
            for (const Position& q : nbrs) {
                const std::size_t j = world.index_of(q);
                if (!selected[j] || visited[j]) continue;
                if (!(world.cells()[j] == seed_content)) continue;
                visited[j] = 1;
                stack.push_back(j);
            }
        }
        std::sort(cluster.members.begin(), cluster.members.end(), row_major_less);
        double sx = 0.0, sy = 0.0;
        for (const Position& p : cluster.members) {
            sx += p.x;
            sy += p.y;
        }
        cluster.centroid = {sx / static_cast<double>(cluster.members.size()),
                            sy / static_cast<double>(cluster.members.size())};
        out.push_back(std::move(cluster));
    }
    return out;
}

}  // namespace socsim::emergence
