#include "dcoc/scc.hpp"

#include <algorithm>

namespace dcoc {

SccPartition scc_partition(const Digraph& d, const VertexSet* removed) {
    const int n = d.n();
    SccPartition out;
    out.comp.assign(static_cast<size_t>(n), -1);

    std::vector<int> index(static_cast<size_t>(n), -1);
    std::vector<int> lowlink(static_cast<size_t>(n), 0);
    std::vector<char> on_stack(static_cast<size_t>(n), 0);
    std::vector<int> stack;
    stack.reserve(static_cast<size_t>(n));
    int next_index = 0;
    int raw_components = 0;

    // explicit DFS frames: (vertex, position in its out-list)
    std::vector<std::pair<int, size_t>> frames;

    auto skip = [&](int v) { return removed != nullptr && removed->test(v); };

    for (int root = 0; root < n; ++root) {
        if (index[static_cast<size_t>(root)] != -1 || skip(root)) continue;
        frames.emplace_back(root, 0);
        index[static_cast<size_t>(root)] = lowlink[static_cast<size_t>(root)] = next_index++;
        on_stack[static_cast<size_t>(root)] = 1;
        stack.push_back(root);

        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            const auto& succ = d.out_neighbors(v);
            bool descended = false;
            while (pos < succ.size()) {
                int w = succ[pos++];
                if (skip(w)) continue;
                if (index[static_cast<size_t>(w)] == -1) {
                    index[static_cast<size_t>(w)] = lowlink[static_cast<size_t>(w)] = next_index++;
                    on_stack[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                    frames.emplace_back(w, 0);
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<size_t>(w)])
                    lowlink[static_cast<size_t>(v)] =
                        std::min(lowlink[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
            }
            if (descended) continue;

            if (lowlink[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
                int size = 0;
                for (;;) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<size_t>(w)] = 0;
                    out.comp[static_cast<size_t>(w)] = raw_components;
                    ++size;
                    if (w == v) break;
                }
                out.sizes.push_back(size);
                ++raw_components;
            }
            int finished = v;
            frames.pop_back();
            if (!frames.empty()) {
                int parent = frames.back().first;
                lowlink[static_cast<size_t>(parent)] =
                    std::min(lowlink[static_cast<size_t>(parent)], lowlink[static_cast<size_t>(finished)]);
            }
        }
    }

    // Tarjan pops components in reverse topological order; flip to the
    // acyclic ordering (arcs only from lower to higher component index).
    out.count = raw_components;
    for (auto& c : out.comp)
        if (c != -1) c = raw_components - 1 - c;
    std::reverse(out.sizes.begin(), out.sizes.end());
    return out;
}

static std::vector<VertexSet> components_from(const Digraph& d, const SccPartition& p) {
    std::vector<VertexSet> out(static_cast<size_t>(p.count), VertexSet(d.n()));
    for (int v = 0; v < d.n(); ++v)
        if (p.comp[static_cast<size_t>(v)] != -1)
            out[static_cast<size_t>(p.comp[static_cast<size_t>(v)])].set(v);
    return out;
}

std::vector<VertexSet> strong_components(const Digraph& d) {
    return components_from(d, scc_partition(d));
}

std::vector<VertexSet> strong_components_excluding(const Digraph& d, const VertexSet& removed) {
    return components_from(d, scc_partition(d, &removed));
}

int mco(const Digraph& d, const VertexSet& removed) {
    SccPartition p = scc_partition(d, &removed);
    int best = 0;
    for (int s : p.sizes) best = std::max(best, s);
    return best;
}

int mco(const Digraph& d) {
    SccPartition p = scc_partition(d);
    int best = 0;
    for (int s : p.sizes) best = std::max(best, s);
    return best;
}

} // namespace dcoc
