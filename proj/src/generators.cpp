#include "dcoc/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <utility>

#include "dcoc/errors.hpp"
#include "dcoc/rng.hpp"
#include "dcoc/scc.hpp"

namespace dcoc::gen {

namespace {

void check_block_size(int s) {
    if (s != 1 && s < 3)
        fail("bad_generator", "block size must be 1 or >= 3, got " + std::to_string(s));
}

void add_strong_block(Digraph::Builder& b, int offset, int size) {
    // transitive block with the long forward arc reversed
    for (int u = 0; u < size; ++u)
        for (int v = u + 1; v < size; ++v) {
            if (u == 0 && v == size - 1 && size >= 3) continue;
            b.add_arc(offset + u, offset + v);
        }
    if (size >= 3) b.add_arc(offset + size - 1, offset);
}

void assert_blocks(const Digraph& d, const std::vector<int>& sizes) {
    SccPartition p = scc_partition(d);
    if (p.count != static_cast<int>(sizes.size()))
        fail("internal", "generator produced wrong component count");
    for (size_t i = 0; i < sizes.size(); ++i)
        if (p.sizes[i] != sizes[i]) fail("internal", "generator produced wrong component sizes");
}

} // namespace

Digraph strong_tournament(int i) {
    if (i == 0 || i == 2)
        fail("bad_generator", "no strong tournament on " + std::to_string(i) + " vertices");
    if (i < 0) fail("bad_generator", "size must be positive");
    Digraph::Builder b(i);
    add_strong_block(b, 0, i);
    Digraph d = b.build();
    assert_blocks(d, {i});
    return d;
}

Digraph layered_tournament(const std::vector<int>& sizes) {
    if (sizes.empty()) fail("bad_generator", "need at least one block");
    int n = 0;
    for (int s : sizes) {
        check_block_size(s);
        n += s;
    }
    Digraph::Builder b(n);
    int offset = 0;
    for (int s : sizes) {
        add_strong_block(b, offset, s);
        for (int u = offset; u < offset + s; ++u)
            for (int v = offset + s; v < n; ++v) b.add_arc(u, v);
        offset += s;
    }
    Digraph d = b.build();
    assert_blocks(d, sizes);
    return d;
}

Digraph transitive_tournament(int n) {
    if (n < 0) fail("bad_generator", "size must be non-negative");
    Digraph::Builder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_arc(u, v);
    return b.build();
}

Digraph flip_one_arc(const Digraph& d, int u, int v) {
    if (u < 0 || u >= d.n() || v < 0 || v >= d.n() || u == v)
        fail("bad_arc_flip", "invalid vertex pair");
    if (!d.has_arc(u, v))
        fail("bad_arc_flip", "no arc " + std::to_string(u) + " -> " + std::to_string(v));
    if (d.has_arc(v, u))
        fail("bad_arc_flip", "pair " + std::to_string(u) + ", " + std::to_string(v) +
                                 " is a digon; flipping is ambiguous");
    Digraph::Builder b(d.n());
    for (auto [a, c] : d.arcs_sorted()) {
        if (a == u && c == v)
            b.add_arc(v, u);
        else
            b.add_arc(a, c);
    }
    return b.build();
}

Digraph random_tournament(int n, uint64_t seed) {
    if (n < 1) fail("bad_generator", "need n >= 1");
    SplitMix64 rng(seed);
    Digraph::Builder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng.chance(1, 2))
                b.add_arc(u, v);
            else
                b.add_arc(v, u);
        }
    return b.build();
}

Digraph random_semicomplete(int n, double digon_prob, uint64_t seed) {
    if (n < 1) fail("bad_generator", "need n >= 1");
    if (digon_prob < 0.0 || digon_prob > 1.0) fail("bad_generator", "digon probability outside [0, 1]");
    SplitMix64 rng(seed);
    Digraph::Builder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng.real() < digon_prob) {
                b.add_arc(u, v);
                b.add_arc(v, u);
            } else if (rng.chance(1, 2)) {
                b.add_arc(u, v);
            } else {
                b.add_arc(v, u);
            }
        }
    return b.build();
}

PlantedInstance planted_instance(const std::vector<int>& sizes, int extra_k, uint64_t seed) {
    if (extra_k < 0) fail("bad_generator", "extra_k must be non-negative");
    Digraph base = layered_tournament(sizes);
    const int n0 = base.n();
    const int n = n0 + extra_k;

    SplitMix64 rng(seed);
    Digraph::Builder b(n);
    for (auto [u, v] : base.arcs_sorted()) b.add_arc(u, v);
    for (int w = n0; w < n; ++w)
        for (int u = 0; u < w; ++u) {
            if (rng.chance(1, 2))
                b.add_arc(u, w);
            else
                b.add_arc(w, u);
        }

    PlantedInstance out;
    out.digraph = b.build();
    out.ell = *std::max_element(sizes.begin(), sizes.end());
    out.k = extra_k;
    out.planted = VertexSet(n);
    for (int w = n0; w < n; ++w) out.planted.set(w);
    return out;
}

namespace {

struct SpecParams {
    std::string family;
    std::vector<std::pair<std::string, std::string>> kv;

    const std::string* find(const std::string& key) const {
        for (const auto& [k, v] : kv)
            if (k == key) return &v;
        return nullptr;
    }
};

SpecParams parse_spec(const std::string& spec) {
    SpecParams p;
    size_t colon = spec.find(':');
    p.family = spec.substr(0, colon);
    if (p.family.empty()) fail("bad_generator", "empty generator family in spec '" + spec + "'");
    if (colon == std::string::npos) return p;
    std::string rest = spec.substr(colon + 1);
    std::istringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            fail("bad_generator", "expected key=value, got '" + item + "'");
        p.kv.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return p;
}

long long to_int(const std::string& s, const std::string& key) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail("bad_generator", "bad integer for '" + key + "': " + s);
    }
}

double to_double(const std::string& s, const std::string& key) {
    try {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail("bad_generator", "bad number for '" + key + "': " + s);
    }
}

std::vector<int> to_sizes(const std::string& s) {
    std::vector<int> out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, '+')) out.push_back(static_cast<int>(to_int(item, "sizes")));
    if (out.empty()) fail("bad_generator", "empty sizes list");
    return out;
}

} // namespace

Digraph generate(const std::string& spec, uint64_t default_seed) {
    SpecParams p = parse_spec(spec);
    uint64_t seed = default_seed;
    if (const std::string* s = p.find("seed")) seed = static_cast<uint64_t>(to_int(*s, "seed"));

    auto need = [&](const char* key) -> const std::string& {
        const std::string* v = p.find(key);
        if (!v) fail("bad_generator", "family '" + p.family + "' needs parameter '" + key + "'");
        return *v;
    };

    if (p.family == "strong") return strong_tournament(static_cast<int>(to_int(need("n"), "n")));
    if (p.family == "layered") return layered_tournament(to_sizes(need("sizes")));
    if (p.family == "transitive") return transitive_tournament(static_cast<int>(to_int(need("n"), "n")));
    if (p.family == "tournament") return random_tournament(static_cast<int>(to_int(need("n"), "n")), seed);
    if (p.family == "semicomplete") {
        double digon = 0.0;
        if (const std::string* v = p.find("digon")) digon = to_double(*v, "digon");
        return random_semicomplete(static_cast<int>(to_int(need("n"), "n")), digon, seed);
    }
    if (p.family == "planted") {
        int extra = 0;
        if (const std::string* v = p.find("extra")) extra = static_cast<int>(to_int(*v, "extra"));
        return planted_instance(to_sizes(need("sizes")), extra, seed).digraph;
    }
    fail("bad_generator", "unknown generator family '" + p.family + "'");
}

} // namespace dcoc::gen
