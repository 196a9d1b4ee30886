#ifndef DCOC_DIGRAPH_HPP
#define DCOC_DIGRAPH_HPP

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dcoc/vertex_set.hpp"

namespace dcoc {

// Loop-free simple digraph on vertices 0..n-1. Digons (both uv and vu) are
// permitted, parallel arcs are not. Immutable after construction, so
// instances can be shared across threads freely.
//
// Adjacency is kept two ways: sorted neighbor lists for iteration, and for
// n <= kMatrixLimit one bitset row per vertex giving O(1) has_arc and
// word-parallel row intersections. Larger (necessarily sparse) graphs fall
// back to a hash set for membership.
class Digraph {
public:
    static constexpr int kMatrixLimit = 8192;

    class Builder {
    public:
        explicit Builder(int n);
        // throws Error("bad_digraph") on out-of-range, loop or duplicate
        Builder& add_arc(int u, int v);
        bool has(int u, int v) const;
        Digraph build();

    private:
        int n_;
        std::vector<std::pair<int, int>> arcs_;
        std::vector<VertexSet> rows_;             // n <= kMatrixLimit
        std::unordered_set<uint64_t> seen_;       // otherwise
    };

    Digraph() = default;
    static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

    int n() const { return n_; }
    long long arc_count() const { return m_; }

    bool has_arc(int u, int v) const;

    const std::vector<int>& out_neighbors(int v) const { return out_adj_[static_cast<size_t>(v)]; }
    const std::vector<int>& in_neighbors(int v) const { return in_adj_[static_cast<size_t>(v)]; }

    int out_deg(int v) const { return static_cast<int>(out_adj_[static_cast<size_t>(v)].size()); }
    int in_deg(int v) const { return static_cast<int>(in_adj_[static_cast<size_t>(v)].size()); }

    bool has_matrix() const { return !out_rows_.empty() || n_ == 0; }
    const VertexSet& out_row(int v) const { return out_rows_[static_cast<size_t>(v)]; }
    const VertexSet& in_row(int v) const { return in_rows_[static_cast<size_t>(v)]; }

    // arcs sorted by (u, v); canonical order used by the writer
    std::vector<std::pair<int, int>> arcs_sorted() const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.out_adj_ == b.out_adj_;
    }

private:
    friend class Builder;

    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> out_adj_;
    std::vector<std::vector<int>> in_adj_;
    std::vector<VertexSet> out_rows_;
    std::vector<VertexSet> in_rows_;
    std::unordered_set<uint64_t> arc_hash_;
};

// first unordered pair {u, v} with no arc either way, or nullopt
std::optional<std::pair<int, int>> missing_adjacent_pair(const Digraph& d);

bool is_semicomplete(const Digraph& d);
bool is_tournament(const Digraph& d);

// throws Error("not_semicomplete") naming a witness pair
void require_semicomplete(const Digraph& d);

} // namespace dcoc

#endif
