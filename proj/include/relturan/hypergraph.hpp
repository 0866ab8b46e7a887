#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

namespace relturan {

using Edge = std::vector<int>;                 // sorted vertex indices
using Partition = std::vector<std::vector<int>>;  // r disjoint parts covering V

struct EdgeHash {
    std::size_t operator()(const Edge& e) const {
        std::size_t h = 0x811c9dc5u;
        for (int v : e) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b9u + (h << 6) + (h >> 2);
        }
        return h;
    }
};

using EdgeSet = std::unordered_set<Edge, EdgeHash>;

/// r-uniform hypergraph on dense vertex indices 0..n-1, immutable after
/// construction. Edges are stored sorted, the edge list lexicographically
/// sorted; an optional r-partition marks every edge as rainbow.
class Hypergraph {
public:
    Hypergraph(int r, int n, std::vector<Edge> edges,
               std::optional<Partition> partition = std::nullopt);

    int uniformity() const { return r_; }
    int vertex_count() const { return n_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::optional<Partition>& partition() const { return partition_; }

    bool has_edge(const Edge& sorted_edge) const { return edge_set_.count(sorted_edge) > 0; }

    /// part index of each vertex, or -1 when no partition is set
    std::vector<int> part_of() const;

    /// 1-degrees of all vertices
    std::vector<long long> vertex_degrees() const;

    bool operator==(const Hypergraph& o) const {
        return r_ == o.r_ && n_ == o.n_ && edges_ == o.edges_ && partition_ == o.partition_;
    }

private:
    int r_;
    int n_;
    std::vector<Edge> edges_;
    std::optional<Partition> partition_;
    EdgeSet edge_set_;
};

/// k-degree table of a hypergraph, keyed by the k-sets that occur inside
/// at least one edge.
struct DegreeProfile {
    int k = 0;
    std::map<Edge, long long> degrees;
    long long max = 0;
    std::vector<long long> histogram;  // histogram[j] = #k-sets with degree in [2^j, 2^{j+1})
};

/// number of edges containing S, with 1 <= |S| <= r-1
long long degree(const Hypergraph& h, const std::vector<int>& s);

/// maximum (r-1)-degree; iterates (r-1)-subsets of existing edges only
long long max_codegree(const Hypergraph& h);

DegreeProfile degree_profile(const Hypergraph& h, int k);

struct RPartiteResult {
    Hypergraph subgraph;    // best rainbow subgraph found, partition set
    bool met_bound = false; // kept >= ceil(r^-r * e(H))
    int attempts = 0;
};

/// Erdos-Kleitman r-partition: random r-colorings until the rainbow
/// subgraph has at least ceil(r^-r * e(H)) edges.
RPartiteResult random_r_partite_subgraph(const Hypergraph& h, std::uint64_t seed,
                                         int max_retries = 1000);

/// H^r_{n,p}: every r-set kept independently with probability p
Hypergraph sample_random_hypergraph(int n, int r, double p, std::uint64_t seed);

Hypergraph induced_subgraph(const Hypergraph& h, const std::vector<int>& keep_edge_indices);

/// trace onto a subset of parts: |part_indices|-uniform hypergraph on the
/// union of the chosen parts (vertices reindexed densely), traces deduplicated
Hypergraph restrict_to_parts(const Hypergraph& h, const std::vector<int>& part_indices);

/// all k-subsets of {0..n-1} in lexicographic order, visited via callback
void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

long long binomial(long long n, long long k);

}  // namespace relturan
