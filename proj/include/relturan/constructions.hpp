#pragma once

#include <vector>

#include "relturan/hypergraph.hpp"

namespace relturan {

/// size vector (s_1 <= ... <= s_r) with the derived products
/// a_i = prod_{j<i} s_j for i = 1..r+1 (a_1 = 1)
struct SizeVector {
    std::vector<int> s;
    std::vector<long long> a;  // a[i-1] = a_i, length r+1

    explicit SizeVector(std::vector<int> sizes);
    int r() const { return static_cast<int>(s.size()); }
    long long a_i(int i) const { return a.at(i - 1); }  // 1-based, i in [1, r+1]
};

/// K_n^r
Hypergraph complete_host(int n, int r);

/// layered Delta-regular host C_n(a_2,...,a_r): base level is the complete
/// bipartite graph with parts of size n^{a_2}; each level takes
/// n^{a_r - a_{r-1}} disjoint copies of the previous one plus a fresh part
/// of n^{a_r} vertices joined to every edge.
Hypergraph layered_host(int n, const SizeVector& s);

/// complete r-partite host with part sizes n_1 = n^{a_2}, n_i = n^{a_i}
Hypergraph unbalanced_partite_host(int n, const SizeVector& s);

/// point-line incidence graph of PG(2,q), q prime: parts of size q^2+q+1,
/// (q+1)-regular, girth 6
Hypergraph projective_plane_incidence(int q);

/// incidence graph of the symplectic generalized quadrangle W(3,q), q prime
/// (q <= 5): (q+1)-regular on both sides, girth 8
Hypergraph generalized_quadrangle_incidence(int q);

/// lift of a bipartite graph G to an r-partite host: r-2 extra parts of size
/// m; edges are {e, one vertex per extra part} for e in E(G). If G is
/// {C_3,...,C_{2l}}-free the lift contains no local-isomorphism image of a
/// tight cycle TC_k^r with k <= l*r.
Hypergraph tight_cycle_free_host(const Hypergraph& g, int r, int extra_part_size);

/// shortest cycle length via BFS from every vertex; -1 for acyclic (r=2 only)
int girth(const Hypergraph& g);

}  // namespace relturan
