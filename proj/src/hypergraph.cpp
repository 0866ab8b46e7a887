#include "relturan/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relturan/rng.hpp"

namespace relturan {

Hypergraph::Hypergraph(int r, int n, std::vector<Edge> edges,
                       std::optional<Partition> partition)
    : r_(r), n_(n), edges_(std::move(edges)), partition_(std::move(partition)) {
    if (r_ < 2) throw std::invalid_argument("Hypergraph: uniformity must be >= 2");
    if (n_ < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != r_)
            throw std::invalid_argument("Hypergraph: edge size != r");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n_)
                throw std::invalid_argument("Hypergraph: vertex index out of range");
            if (i > 0 && e[i] == e[i - 1])
                throw std::invalid_argument("Hypergraph: repeated vertex in edge");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i] == edges_[i - 1])
            throw std::invalid_argument("Hypergraph: duplicate edge");
    }
    for (const auto& e : edges_) edge_set_.insert(e);

    if (partition_) {
        if (static_cast<int>(partition_->size()) != r_)
            throw std::invalid_argument("Hypergraph: partition must have r parts");
        std::vector<int> owner(n_, -1);
        for (std::size_t p = 0; p < partition_->size(); ++p) {
            for (int v : (*partition_)[p]) {
                if (v < 0 || v >= n_)
                    throw std::invalid_argument("Hypergraph: partition index out of range");
                if (owner[v] != -1)
                    throw std::invalid_argument("Hypergraph: partition parts overlap");
                owner[v] = static_cast<int>(p);
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (owner[v] == -1)
                throw std::invalid_argument("Hypergraph: partition does not cover all vertices");
        }
        for (const auto& e : edges_) {
            std::vector<bool> seen(r_, false);
            for (int v : e) {
                if (seen[owner[v]])
                    throw std::invalid_argument("Hypergraph: edge not rainbow under partition");
                seen[owner[v]] = true;
            }
        }
        for (auto& part : *partition_) std::sort(part.begin(), part.end());
    }
}

std::vector<int> Hypergraph::part_of() const {
    std::vector<int> owner(n_, -1);
    if (partition_) {
        for (std::size_t p = 0; p < partition_->size(); ++p)
            for (int v : (*partition_)[p]) owner[v] = static_cast<int>(p);
    }
    return owner;
}

std::vector<long long> Hypergraph::vertex_degrees() const {
    std::vector<long long> deg(n_, 0);
    for (const auto& e : edges_)
        for (int v : e) ++deg[v];
    return deg;
}

long long degree(const Hypergraph& h, const std::vector<int>& s) {
    if (s.empty() || static_cast<int>(s.size()) >= h.uniformity())
        throw std::invalid_argument("degree: need 1 <= |S| <= r-1");
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= h.vertex_count())
            throw std::invalid_argument("degree: vertex index out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("degree: repeated vertex in S");
    }
    long long count = 0;
    for (const auto& e : h.edges()) {
        if (std::includes(e.begin(), e.end(), sorted.begin(), sorted.end())) ++count;
    }
    return count;
}

namespace {

// visit all k-subsets of a sorted edge
void for_each_subset(const Edge& e, int k, const std::function<void(const Edge&)>& fn) {
    const int r = static_cast<int>(e.size());
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    Edge sub(k);
    while (true) {
        for (int i = 0; i < k; ++i) sub[i] = e[idx[i]];
        fn(sub);
        int i = k - 1;
        while (i >= 0 && idx[i] == r - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

long long max_codegree(const Hypergraph& h) {
    std::map<Edge, long long> counts;
    const int k = h.uniformity() - 1;
    for (const auto& e : h.edges())
        for_each_subset(e, k, [&](const Edge& sub) { ++counts[sub]; });
    long long best = 0;
    for (const auto& [_, c] : counts) best = std::max(best, c);
    return best;
}

DegreeProfile degree_profile(const Hypergraph& h, int k) {
    if (k < 1 || k > h.uniformity() - 1)
        throw std::invalid_argument("degree_profile: need 1 <= k <= r-1");
    DegreeProfile prof;
    prof.k = k;
    for (const auto& e : h.edges())
        for_each_subset(e, k, [&](const Edge& sub) { ++prof.degrees[sub]; });
    for (const auto& [_, d] : prof.degrees) {
        prof.max = std::max(prof.max, d);
        int bucket = 0;
        while ((1LL << (bucket + 1)) <= d) ++bucket;
        if (static_cast<int>(prof.histogram.size()) <= bucket)
            prof.histogram.resize(bucket + 1, 0);
        ++prof.histogram[bucket];
    }
    return prof;
}

RPartiteResult random_r_partite_subgraph(const Hypergraph& h, std::uint64_t seed,
                                         int max_retries) {
    if (h.edge_count() < 1)
        throw std::invalid_argument("random_r_partite_subgraph: empty hypergraph");
    const int r = h.uniformity();
    const int n = h.vertex_count();
    long long rr = 1;
    for (int i = 0; i < r; ++i) rr *= r;
    const long long target = (h.edge_count() + rr - 1) / rr;  // ceil(r^-r e(H))

    std::vector<Edge> best_edges;
    std::optional<Partition> best_partition;
    long long best_count = -1;
    int attempts = 0;

    for (int t = 0; t < max_retries; ++t) {
        ++attempts;
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        std::vector<int> color(n);
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(r)));

        std::vector<Edge> kept;
        for (const auto& e : h.edges()) {
            std::vector<bool> seen(r, false);
            bool rainbow = true;
            for (int v : e) {
                if (seen[color[v]]) { rainbow = false; break; }
                seen[color[v]] = true;
            }
            if (rainbow) kept.push_back(e);
        }
        if (static_cast<long long>(kept.size()) > best_count) {
            best_count = static_cast<long long>(kept.size());
            best_edges = kept;
            Partition parts(r);
            for (int v = 0; v < n; ++v) parts[color[v]].push_back(v);
            best_partition = std::move(parts);
        }
        if (best_count >= target) break;
    }

    RPartiteResult res{Hypergraph(r, n, std::move(best_edges), std::move(best_partition)),
                       best_count >= target, attempts};
    return res;
}

Hypergraph sample_random_hypergraph(int n, int r, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("sample_random_hypergraph: p outside [0,1]");
    if (r > n) throw std::invalid_argument("sample_random_hypergraph: r > n");
    std::vector<Edge> edges;
    if (p > 0.0) {
        SplitMix64 rng(seed);
        for_each_combination(n, r, [&](const std::vector<int>& e) {
            if (p >= 1.0 || rng.next_double() < p) edges.push_back(e);
        });
    }
    return Hypergraph(r, n, std::move(edges));
}

Hypergraph induced_subgraph(const Hypergraph& h, const std::vector<int>& keep_edge_indices) {
    std::vector<Edge> edges;
    edges.reserve(keep_edge_indices.size());
    for (int idx : keep_edge_indices) {
        if (idx < 0 || idx >= static_cast<int>(h.edges().size()))
            throw std::invalid_argument("induced_subgraph: edge index out of range");
        edges.push_back(h.edges()[idx]);
    }
    return Hypergraph(h.uniformity(), h.vertex_count(), std::move(edges), h.partition());
}

Hypergraph restrict_to_parts(const Hypergraph& h, const std::vector<int>& part_indices) {
    if (!h.partition())
        throw std::invalid_argument("restrict_to_parts: hypergraph has no partition");
    const int k = static_cast<int>(part_indices.size());
    if (k < 2 || k >= h.uniformity())
        throw std::invalid_argument("restrict_to_parts: need 2 <= |parts| < r");
    std::vector<bool> chosen(h.uniformity(), false);
    for (int p : part_indices) {
        if (p < 0 || p >= h.uniformity())
            throw std::invalid_argument("restrict_to_parts: part index out of range");
        chosen[p] = true;
    }

    const auto owner = h.part_of();
    std::vector<int> old_to_new(h.vertex_count(), -1);
    Partition new_parts(k);
    int next = 0;
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (chosen[owner[v]]) old_to_new[v] = next++;
    }
    std::vector<int> part_rank(h.uniformity(), -1);
    {
        int rank = 0;
        std::vector<int> sorted_parts = part_indices;
        std::sort(sorted_parts.begin(), sorted_parts.end());
        for (int p : sorted_parts) part_rank[p] = rank++;
    }
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (old_to_new[v] != -1) new_parts[part_rank[owner[v]]].push_back(old_to_new[v]);
    }

    EdgeSet traces;
    for (const auto& e : h.edges()) {
        Edge tr;
        for (int v : e)
            if (old_to_new[v] != -1) tr.push_back(old_to_new[v]);
        std::sort(tr.begin(), tr.end());
        traces.insert(std::move(tr));
    }
    std::vector<Edge> edges(traces.begin(), traces.end());
    return Hypergraph(k, next, std::move(edges), std::move(new_parts));
}

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k > n || k < 0) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace relturan
