#include "dcoc/digraph.hpp"

#include <algorithm>
#include <string>

#include "dcoc/errors.hpp"

namespace dcoc {

namespace {
uint64_t arc_key(int n, int u, int v) {
    return static_cast<uint64_t>(u) * static_cast<uint64_t>(n) + static_cast<uint64_t>(v);
}
} // namespace

Digraph::Builder::Builder(int n) : n_(n) {
    if (n < 0) fail("bad_digraph", "vertex count must be non-negative");
    if (n <= kMatrixLimit) rows_.assign(static_cast<size_t>(n), VertexSet(n));
}

bool Digraph::Builder::has(int u, int v) const {
    if (!rows_.empty()) return rows_[static_cast<size_t>(u)].test(v);
    return seen_.count(arc_key(n_, u, v)) > 0;
}

Digraph::Builder& Digraph::Builder::add_arc(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        fail("bad_digraph", "arc endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v)
        fail("bad_digraph", "self-loop at vertex " + std::to_string(u));
    if (has(u, v))
        fail("bad_digraph", "duplicate arc " + std::to_string(u) + " -> " + std::to_string(v));
    if (!rows_.empty())
        rows_[static_cast<size_t>(u)].set(v);
    else
        seen_.insert(arc_key(n_, u, v));
    arcs_.emplace_back(u, v);
    return *this;
}

Digraph Digraph::Builder::build() {
    Digraph d;
    d.n_ = n_;
    d.m_ = static_cast<long long>(arcs_.size());
    d.out_adj_.assign(static_cast<size_t>(n_), {});
    d.in_adj_.assign(static_cast<size_t>(n_), {});
    for (auto [u, v] : arcs_) {
        d.out_adj_[static_cast<size_t>(u)].push_back(v);
        d.in_adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& a : d.out_adj_) std::sort(a.begin(), a.end());
    for (auto& a : d.in_adj_) std::sort(a.begin(), a.end());
    if (!rows_.empty()) {
        d.out_rows_ = std::move(rows_);
        d.in_rows_.assign(static_cast<size_t>(n_), VertexSet(n_));
        for (auto [u, v] : arcs_) d.in_rows_[static_cast<size_t>(v)].set(u);
    } else {
        d.arc_hash_ = std::move(seen_);
    }
    return d;
}

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    Builder b(n);
    for (auto [u, v] : arcs) b.add_arc(u, v);
    return b.build();
}

bool Digraph::has_arc(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    if (!out_rows_.empty()) return out_rows_[static_cast<size_t>(u)].test(v);
    return arc_hash_.count(arc_key(n_, u, v)) > 0;
}

std::vector<std::pair<int, int>> Digraph::arcs_sorted() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : out_adj_[static_cast<size_t>(u)]) out.emplace_back(u, v);
    return out;
}

std::optional<std::pair<int, int>> missing_adjacent_pair(const Digraph& d) {
    const int n = d.n();
    if (d.has_matrix()) {
        for (int u = 0; u < n; ++u) {
            VertexSet adj = d.out_row(u) | d.in_row(u);
            adj.set(u);
            VertexSet miss = ~adj;
            int v = miss.first();
            if (v >= 0) return std::make_pair(std::min(u, v), std::max(u, v));
        }
        return std::nullopt;
    }
    // sparse fallback: mark-and-scan per vertex, early exit on first gap
    std::vector<char> mark(static_cast<size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        for (int w : d.out_neighbors(u)) mark[static_cast<size_t>(w)] = 1;
        for (int w : d.in_neighbors(u)) mark[static_cast<size_t>(w)] = 1;
        for (int v = 0; v < n; ++v)
            if (v != u && !mark[static_cast<size_t>(v)]) return std::make_pair(std::min(u, v), std::max(u, v));
        for (int w : d.out_neighbors(u)) mark[static_cast<size_t>(w)] = 0;
        for (int w : d.in_neighbors(u)) mark[static_cast<size_t>(w)] = 0;
    }
    return std::nullopt;
}

bool is_semicomplete(const Digraph& d) { return !missing_adjacent_pair(d).has_value(); }

bool is_tournament(const Digraph& d) {
    long long pairs = static_cast<long long>(d.n()) * (d.n() - 1) / 2;
    return d.arc_count() == pairs && is_semicomplete(d);
}

void require_semicomplete(const Digraph& d) {
    if (auto p = missing_adjacent_pair(d)) {
        fail("not_semicomplete", "digraph is not semicomplete: no arc between " +
                                     std::to_string(p->first) + " and " + std::to_string(p->second));
    }
}

} // namespace dcoc
