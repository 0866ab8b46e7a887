#include "relturan/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "relturan/pattern.hpp"

namespace relturan {

namespace {

constexpr long long kMaxVertices = 5'000'000;
constexpr long long kMaxEdges = 50'000'000;

long long checked_pow(long long base, long long exp, long long limit, const char* what) {
    __int128 v = 1;
    for (long long i = 0; i < exp; ++i) {
        v *= base;
        if (v > limit)
            throw BudgetError(std::string(what) + ": magnitude " + std::to_string(base) + "^" +
                              std::to_string(exp) + " exceeds limit " + std::to_string(limit));
    }
    return static_cast<long long>(v);
}

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

SizeVector::SizeVector(std::vector<int> sizes) : s(std::move(sizes)) {
    if (s.size() < 2) throw std::invalid_argument("SizeVector: need r >= 2");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 2) throw std::invalid_argument("SizeVector: sizes must be >= 2");
        if (i > 0 && s[i] < s[i - 1])
            throw std::invalid_argument("SizeVector: sizes must be nondecreasing");
    }
    a.assign(s.size() + 1, 1);
    for (std::size_t i = 1; i <= s.size(); ++i) {
        __int128 v = static_cast<__int128>(a[i - 1]) * s[i - 1];
        if (v > INT64_MAX / 4) throw BudgetError("SizeVector: a_i overflow");
        a[i] = static_cast<long long>(v);
    }
}

Hypergraph complete_host(int n, int r) {
    if (n < r) throw std::invalid_argument("complete_host: need n >= r");
    std::vector<Edge> edges;
    for_each_combination(n, r, [&](const std::vector<int>& e) { edges.push_back(e); });
    return Hypergraph(r, n, std::move(edges));
}

Hypergraph layered_host(int n, const SizeVector& s) {
    if (n < 2) throw std::invalid_argument("layered_host: need n >= 2");
    const int r = s.r();

    // base level: complete bipartite with parts of size n^{a_2}
    long long part = checked_pow(n, s.a_i(2), kMaxVertices, "layered_host");
    long long base_edges = part * part;
    if (base_edges > kMaxEdges)
        throw BudgetError("layered_host: base edge count " + std::to_string(base_edges) +
                          " exceeds limit");
    std::vector<Edge> edges;
    edges.reserve(base_edges);
    for (long long u = 0; u < part; ++u)
        for (long long v = 0; v < part; ++v)
            edges.push_back({static_cast<int>(u), static_cast<int>(part + v)});
    long long nverts = 2 * part;
    Partition parts(2);
    for (long long u = 0; u < part; ++u) parts[0].push_back(static_cast<int>(u));
    for (long long v = 0; v < part; ++v) parts[1].push_back(static_cast<int>(part + v));

    for (int level = 3; level <= r; ++level) {
        long long copies =
            checked_pow(n, s.a_i(level) - s.a_i(level - 1), kMaxVertices, "layered_host");
        long long fresh = checked_pow(n, s.a_i(level), kMaxVertices, "layered_host");
        __int128 total_edges = static_cast<__int128>(copies) *
                               static_cast<__int128>(edges.size()) * fresh;
        __int128 total_verts = static_cast<__int128>(copies) * nverts + fresh;
        if (total_edges > kMaxEdges || total_verts > kMaxVertices)
            throw BudgetError("layered_host: level " + std::to_string(level) + " needs " +
                              std::to_string(static_cast<long long>(total_edges)) + " edges");

        std::vector<Edge> next;
        next.reserve(static_cast<std::size_t>(total_edges));
        const long long fresh_base = copies * nverts;
        for (long long c = 0; c < copies; ++c) {
            const long long off = c * nverts;
            for (const auto& e : edges) {
                Edge shifted;
                shifted.reserve(e.size() + 1);
                for (int v : e) shifted.push_back(static_cast<int>(v + off));
                for (long long w = 0; w < fresh; ++w) {
                    Edge full = shifted;
                    full.push_back(static_cast<int>(fresh_base + w));
                    next.push_back(std::move(full));
                }
            }
        }

        Partition next_parts(level);
        for (int p = 0; p < level - 1; ++p) {
            for (long long c = 0; c < copies; ++c) {
                const long long off = c * nverts;
                for (int v : parts[p]) next_parts[p].push_back(static_cast<int>(v + off));
            }
        }
        for (long long w = 0; w < fresh; ++w)
            next_parts[level - 1].push_back(static_cast<int>(fresh_base + w));

        edges = std::move(next);
        parts = std::move(next_parts);
        nverts = fresh_base + fresh;
    }

    return Hypergraph(r, static_cast<int>(nverts), std::move(edges), std::move(parts));
}

Hypergraph unbalanced_partite_host(int n, const SizeVector& s) {
    if (n < 2) throw std::invalid_argument("unbalanced_partite_host: need n >= 2");
    const int r = s.r();
    std::vector<long long> sizes(r);
    sizes[0] = checked_pow(n, s.a_i(2), kMaxVertices, "unbalanced_partite_host");
    for (int i = 2; i <= r; ++i)
        sizes[i - 1] = checked_pow(n, s.a_i(i), kMaxVertices, "unbalanced_partite_host");

    __int128 total_edges = 1, total_verts = 0;
    for (long long sz : sizes) {
        total_edges *= sz;
        total_verts += sz;
    }
    if (total_edges > kMaxEdges || total_verts > kMaxVertices)
        throw BudgetError("unbalanced_partite_host: " +
                          std::to_string(static_cast<long long>(total_edges)) +
                          " edges exceeds limit");

    Partition parts(r);
    int next = 0;
    for (int i = 0; i < r; ++i)
        for (long long j = 0; j < sizes[i]; ++j) parts[i].push_back(next++);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(total_edges));
    Edge cur(r);
    std::function<void(int)> rec = [&](int i) {
        if (i == r) {
            edges.push_back(cur);
            return;
        }
        for (int v : parts[i]) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return Hypergraph(r, next, std::move(edges), std::move(parts));
}

// ---------------------------------------------------------------------------
// incidence geometries over prime fields

namespace {

// normalized homogeneous coordinates (first nonzero = 1), lexicographic order
std::vector<std::vector<int>> projective_points(int q, int dim) {
    std::vector<std::vector<int>> pts;
    std::vector<int> cur(dim, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == dim) {
            int lead = 0;
            while (lead < dim && cur[lead] == 0) ++lead;
            if (lead < dim && cur[lead] == 1) pts.push_back(cur);
            return;
        }
        for (int x = 0; x < q; ++x) {
            cur[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return pts;
}

std::vector<int> normalize_point(std::vector<int> p, int q) {
    int lead = 0;
    while (lead < static_cast<int>(p.size()) && p[lead] == 0) ++lead;
    // modular inverse by Fermat (q prime)
    long long inv = 1, base = p[lead], e = q - 2;
    while (e > 0) {
        if (e & 1) inv = inv * base % q;
        base = base * base % q;
        e >>= 1;
    }
    for (auto& x : p) x = static_cast<int>(x * inv % q);
    return p;
}

}  // namespace

Hypergraph projective_plane_incidence(int q) {
    if (!is_prime(q))
        throw std::invalid_argument("projective_plane_incidence: q must be prime, got " +
                                    std::to_string(q));
    auto pts = projective_points(q, 3);
    const int N = static_cast<int>(pts.size());  // q^2+q+1
    std::vector<Edge> edges;
    for (int p = 0; p < N; ++p) {
        for (int l = 0; l < N; ++l) {
            long long dot = 0;
            for (int i = 0; i < 3; ++i) dot += static_cast<long long>(pts[p][i]) * pts[l][i];
            if (dot % q == 0) edges.push_back({p, N + l});
        }
    }
    Partition parts(2);
    for (int p = 0; p < N; ++p) parts[0].push_back(p);
    for (int l = 0; l < N; ++l) parts[1].push_back(N + l);
    return Hypergraph(2, 2 * N, std::move(edges), std::move(parts));
}

Hypergraph generalized_quadrangle_incidence(int q) {
    if (!is_prime(q) || q > 5)
        throw std::invalid_argument("generalized_quadrangle_incidence: supported q are primes <= 5");
    auto pts = projective_points(q, 4);
    const int N = static_cast<int>(pts.size());  // q^3+q^2+q+1
    std::map<std::vector<int>, int> point_index;
    for (int i = 0; i < N; ++i) point_index[pts[i]] = i;

    // fixed symplectic form x1*y2 - x2*y1 + x3*y4 - x4*y3
    auto form = [&](const std::vector<int>& x, const std::vector<int>& y) {
        long long v = static_cast<long long>(x[0]) * y[1] - static_cast<long long>(x[1]) * y[0] +
                      static_cast<long long>(x[2]) * y[3] - static_cast<long long>(x[3]) * y[2];
        return ((v % q) + q) % q;
    };

    // totally isotropic lines = spans of orthogonal point pairs
    std::set<std::vector<int>> lines;
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            if (form(pts[i], pts[j]) != 0) continue;
            std::vector<int> line = {i};
            for (int t = 0; t < q; ++t) {
                std::vector<int> comb(4);
                for (int c = 0; c < 4; ++c)
                    comb[c] = static_cast<int>((pts[j][c] + static_cast<long long>(t) * pts[i][c]) % q);
                line.push_back(point_index.at(normalize_point(comb, q)));
            }
            std::sort(line.begin(), line.end());
            lines.insert(std::move(line));
        }
    }

    std::vector<Edge> edges;
    int lidx = 0;
    for (const auto& line : lines) {
        for (int p : line) edges.push_back({p, N + lidx});
        ++lidx;
    }
    Partition parts(2);
    for (int p = 0; p < N; ++p) parts[0].push_back(p);
    for (int l = 0; l < lidx; ++l) parts[1].push_back(N + l);
    return Hypergraph(2, N + lidx, std::move(edges), std::move(parts));
}

Hypergraph tight_cycle_free_host(const Hypergraph& g, int r, int extra_part_size) {
    if (g.uniformity() != 2 || !g.partition())
        throw std::invalid_argument("tight_cycle_free_host: base must be bipartite with partition");
    if (r < 3) throw std::invalid_argument("tight_cycle_free_host: need r >= 3");
    if (extra_part_size < 1)
        throw std::invalid_argument("tight_cycle_free_host: extra part size must be >= 1");
    const int m = extra_part_size;
    const int ng = g.vertex_count();
    __int128 total = g.edge_count();
    for (int i = 0; i < r - 2; ++i) total *= m;
    if (total > kMaxEdges)
        throw BudgetError("tight_cycle_free_host: " +
                          std::to_string(static_cast<long long>(total)) + " edges exceeds limit");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(total));
    std::vector<int> choice(r - 2, 0);
    for (const auto& e : g.edges()) {
        std::fill(choice.begin(), choice.end(), 0);
        while (true) {
            Edge full = e;
            for (int i = 0; i < r - 2; ++i) full.push_back(ng + i * m + choice[i]);
            edges.push_back(std::move(full));
            int i = r - 3;
            while (i >= 0 && choice[i] == m - 1) { choice[i] = 0; --i; }
            if (i < 0) break;
            ++choice[i];
        }
    }

    Partition parts = *g.partition();
    parts.resize(r);
    for (int i = 0; i < r - 2; ++i)
        for (int j = 0; j < m; ++j) parts[2 + i].push_back(ng + i * m + j);
    return Hypergraph(r, ng + (r - 2) * m, std::move(edges), std::move(parts));
}

int girth(const Hypergraph& g) {
    if (g.uniformity() != 2) throw std::invalid_argument("girth: defined for graphs (r=2)");
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges()) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue = {root};
        dist[root] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

}  // namespace relturan
