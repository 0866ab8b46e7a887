#include "relturan/pattern.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace relturan {

Pattern Pattern::general(Hypergraph h) {
    return Pattern(Kind::General, std::move(h));
}

Pattern Pattern::complete_partite(std::vector<int> sizes) {
    const int r = static_cast<int>(sizes.size());
    if (r < 2) throw std::invalid_argument("complete_partite: need at least 2 parts");
    std::sort(sizes.begin(), sizes.end());
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("complete_partite: part sizes must be >= 1");

    int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    Partition parts(r);
    int next = 0;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < sizes[i]; ++j) parts[i].push_back(next++);

    std::vector<Edge> edges;
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
    Pattern p(Kind::CompletePartite, Hypergraph(r, n, std::move(edges), parts));
    p.sizes_ = std::move(sizes);
    return p;
}

Pattern Pattern::tight_cycle(int k, int r) {
    if (k <= r) throw std::invalid_argument("tight_cycle: need k > r");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        Edge e(r);
        for (int j = 0; j < r; ++j) e[j] = (i + j) % k;
        edges.push_back(std::move(e));
    }
    std::optional<Partition> parts;
    if (k % r == 0) {
        Partition p(r);
        for (int j = 0; j < k; ++j) p[j % r].push_back(j);
        parts = std::move(p);
    }
    Pattern p(Kind::TightCycle, Hypergraph(r, k, std::move(edges), std::move(parts)));
    p.cycle_k_ = k;
    return p;
}

std::string Pattern::describe() const {
    switch (kind_) {
        case Kind::CompletePartite: {
            std::string s = "K:";
            for (std::size_t i = 0; i < sizes_.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(sizes_[i]);
            }
            return s;
        }
        case Kind::TightCycle:
            return "TC:" + std::to_string(cycle_k_) + "/" + std::to_string(uniformity());
        default:
            return "general(r=" + std::to_string(uniformity()) +
                   ",n=" + std::to_string(realized_.vertex_count()) +
                   ",e=" + std::to_string(realized_.edge_count()) + ")";
    }
}

PatternFamily::PatternFamily(std::vector<Pattern> members, std::string origin)
    : origin_(std::move(origin)) {
    for (auto& m : members) add(std::move(m));
}

bool PatternFamily::add(Pattern p) {
    for (const auto& m : members_)
        if (are_isomorphic(m.realized(), p.realized())) return false;
    members_.push_back(std::move(p));
    return true;
}

PatternFamily PatternFamily::tight_cycle_range(int r, int l) {
    if (l < 2) throw std::invalid_argument("tight_cycle_range: need l >= 2");
    PatternFamily fam;
    for (int k = r + 1; k <= l * r; ++k) fam.add(Pattern::tight_cycle(k, r));
    fam.origin_ = "tight-cycle-range(" + std::to_string(r) + "," + std::to_string(l) + ")";
    return fam;
}

// ---------------------------------------------------------------------------
// isomorphism

namespace {

bool iso_backtrack(const Hypergraph& a, const Hypergraph& b,
                   const std::vector<int>& order, std::size_t pos,
                   std::vector<int>& map, std::vector<bool>& used,
                   const std::vector<long long>& deg_a, const std::vector<long long>& deg_b,
                   const std::vector<std::vector<int>>& edges_closed_at) {
    if (pos == order.size()) return true;
    const int v = order[pos];
    for (int w = 0; w < b.vertex_count(); ++w) {
        if (used[w] || deg_a[v] != deg_b[w]) continue;
        map[v] = w;
        used[w] = true;
        bool ok = true;
        for (int ei : edges_closed_at[pos]) {
            Edge img;
            for (int u : a.edges()[ei]) img.push_back(map[u]);
            std::sort(img.begin(), img.end());
            if (!b.has_edge(img)) { ok = false; break; }
        }
        if (ok && iso_backtrack(a, b, order, pos + 1, map, used, deg_a, deg_b, edges_closed_at))
            return true;
        used[w] = false;
        map[v] = -1;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.uniformity() != b.uniformity() || a.vertex_count() != b.vertex_count() ||
        a.edge_count() != b.edge_count())
        return false;
    auto deg_a = a.vertex_degrees();
    auto deg_b = b.vertex_degrees();
    {
        auto sa = deg_a, sb = deg_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    // order: degree-descending, connectivity-first
    const int n = a.vertex_count();
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    while (static_cast<int>(order.size()) < n) {
        int best = -1;
        bool best_conn = false;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            bool conn = false;
            for (const auto& e : a.edges()) {
                if (std::find(e.begin(), e.end(), v) == e.end()) continue;
                for (int u : e)
                    if (placed[u]) { conn = true; break; }
                if (conn) break;
            }
            if (best == -1 || (conn && !best_conn) ||
                (conn == best_conn && deg_a[v] > deg_a[best])) {
                best = v;
                best_conn = conn;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }

    // edges fully assigned once position p is placed
    std::vector<int> pos_of(n);
    for (int p = 0; p < n; ++p) pos_of[order[p]] = p;
    std::vector<std::vector<int>> edges_closed_at(n);
    for (std::size_t ei = 0; ei < a.edges().size(); ++ei) {
        int last = 0;
        for (int v : a.edges()[ei]) last = std::max(last, pos_of[v]);
        edges_closed_at[last].push_back(static_cast<int>(ei));
    }

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    return iso_backtrack(a, b, order, 0, map, used, deg_a, deg_b, edges_closed_at);
}

// ---------------------------------------------------------------------------
// r-partitions

std::vector<Partition> enumerate_r_partitions(const Pattern& f) {
    const Hypergraph& g = f.realized();
    if (g.edge_count() == 0) throw std::invalid_argument("enumerate_r_partitions: empty pattern");
    const int n = g.vertex_count();
    const int r = g.uniformity();
    if (n > 16) throw BudgetError("enumerate_r_partitions: guarded at |V(F)| <= 16");

    std::vector<std::vector<int>> incident(n);
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei)
        for (int v : g.edges()[ei]) incident[v].push_back(static_cast<int>(ei));

    std::vector<Partition> out;
    std::vector<int> color(n, -1);
    // restricted-growth coloring collapses part relabelings to one representative
    std::function<void(int, int)> rec = [&](int v, int max_used) {
        if (v == n) {
            if (max_used + 1 != r) return;
            Partition parts(r);
            for (int u = 0; u < n; ++u) parts[color[u]].push_back(u);
            out.push_back(std::move(parts));
            return;
        }
        const int limit = std::min(r - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            for (int ei : incident[v]) {
                for (int u : g.edges()[ei]) {
                    if (u != v && color[u] == c) { ok = false; break; }
                }
                if (!ok) break;
            }
            if (!ok) continue;
            color[v] = c;
            rec(v + 1, std::max(max_used, c));
            color[v] = -1;
        }
    };
    rec(0, -1);
    return out;
}

TightConnectivityResult is_tightly_connected(const Pattern& f) {
    const Hypergraph& g = f.realized();
    auto partitions = enumerate_r_partitions(f);
    if (partitions.empty())
        throw std::invalid_argument("is_tightly_connected: pattern is not r-partite");

    const int n = g.vertex_count();
    std::vector<std::vector<int>> incident(n);
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei)
        for (int v : g.edges()[ei]) incident[v].push_back(static_cast<int>(ei));

    auto intersect_size = [&](int e1, int e2) {
        const auto& a = g.edges()[e1];
        const auto& b = g.edges()[e2];
        int cnt = 0;
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) { ++cnt; ++i; ++j; }
            else if (a[i] < b[j]) ++i;
            else ++j;
        }
        return cnt;
    };

    const int r = g.uniformity();
    for (const auto& parts : partitions) {
        bool good = true;
        for (const auto& part : parts) {
            for (std::size_t i = 0; i + 1 < part.size() && good; ++i) {
                for (std::size_t j = i + 1; j < part.size() && good; ++j) {
                    bool found = false;
                    for (int e1 : incident[part[i]]) {
                        for (int e2 : incident[part[j]]) {
                            if (intersect_size(e1, e2) == r - 1) { found = true; break; }
                        }
                        if (found) break;
                    }
                    if (!found) good = false;
                }
            }
            if (!good) break;
        }
        if (good) return {true, parts};
    }
    return {false, std::nullopt};
}

// ---------------------------------------------------------------------------
// projection family

PatternFamily projection_family(const Pattern& f) {
    const Hypergraph& g = f.realized();
    const int r = g.uniformity();
    if (r < 3) throw std::invalid_argument("projection_family: requires r >= 3");
    auto partitions = enumerate_r_partitions(f);
    if (partitions.empty())
        throw std::invalid_argument("projection_family: pattern is not r-partite");

    PatternFamily out({}, "projection-of " + f.describe());
    for (const auto& parts : partitions) {
        for (int drop = 0; drop < r; ++drop) {
            std::vector<bool> dropped(g.vertex_count(), false);
            for (int v : parts[drop]) dropped[v] = true;
            std::vector<int> old_to_new(g.vertex_count(), -1);
            int next = 0;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (!dropped[v]) old_to_new[v] = next++;

            EdgeSet traces;
            for (const auto& e : g.edges()) {
                Edge tr;
                for (int v : e)
                    if (!dropped[v]) tr.push_back(old_to_new[v]);
                std::sort(tr.begin(), tr.end());
                traces.insert(std::move(tr));
            }
            std::vector<Edge> edges(traces.begin(), traces.end());
            out.add(Pattern::general(Hypergraph(r - 1, next, std::move(edges))));
        }
    }
    return out;
}

PatternFamily projection_family(const PatternFamily& fam) {
    PatternFamily out({}, "projection-of " + fam.origin());
    for (const auto& f : fam.members()) {
        auto sub = projection_family(f);
        for (const auto& p : sub.members()) out.add(p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// local isomorphism images

PatternFamily local_isomorphism_images(const Pattern& f) {
    const Hypergraph& g = f.realized();
    const int n = g.vertex_count();
    const int r = g.uniformity();
    if (n > 10)
        throw BudgetError("local_isomorphism_images: guarded at |V(F)| <= 10, got " +
                          std::to_string(n));

    // pairs of edges meeting in exactly r-1 vertices
    std::vector<std::pair<int, int>> tight_pairs;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        for (std::size_t j = i + 1; j < g.edges().size(); ++j) {
            const auto& a = g.edges()[i];
            const auto& b = g.edges()[j];
            Edge inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(inter));
            if (static_cast<int>(inter.size()) == r - 1)
                tight_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }

    PatternFamily out({}, "local-iso-of " + f.describe());
    std::vector<int> block(n, 0);
    std::function<void(int, int)> rec = [&](int v, int max_used) {
        if (v == n) {
            const int b = max_used + 1;
            std::vector<Edge> images(g.edges().size());
            for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
                Edge img;
                for (int u : g.edges()[ei]) img.push_back(block[u]);
                std::sort(img.begin(), img.end());
                img.erase(std::unique(img.begin(), img.end()), img.end());
                if (static_cast<int>(img.size()) != r) return;  // edge collapsed
                images[ei] = std::move(img);
            }
            for (auto [i, j] : tight_pairs)
                if (images[i] == images[j]) return;  // not a local isomorphism
            EdgeSet dedup(images.begin(), images.end());
            std::vector<Edge> edges(dedup.begin(), dedup.end());
            out.add(Pattern::general(Hypergraph(r, b, std::move(edges))));
            return;
        }
        for (int c = 0; c <= max_used + 1; ++c) {
            block[v] = c;
            rec(v + 1, std::max(max_used, c));
        }
    };
    rec(0, -1);
    return out;
}

PatternFamily local_isomorphism_images(const PatternFamily& fam) {
    PatternFamily out({}, "local-iso-of " + fam.origin());
    for (const auto& f : fam.members()) {
        auto sub = local_isomorphism_images(f);
        for (const auto& p : sub.members()) out.add(p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// copy detection and counting

namespace {

struct EmbeddingSearch {
    const Hypergraph& host;
    const Hypergraph& pat;
    std::vector<int> order;                     // pattern vertices, search order
    std::vector<std::vector<int>> closed_at;    // pattern edge indices completed at position
    std::vector<std::vector<int>> pat_incident; // pattern vertex -> incident edges
    std::vector<long long> host_deg, pat_deg;
    std::vector<std::vector<int>> host_nbrs;    // co-occurrence adjacency
    std::map<Edge, int> host_edge_index;

    std::vector<int> map;       // pattern vertex -> host vertex
    std::vector<bool> used;     // host vertex used
    std::function<bool(const CopyWitness&)> visit;  // return false to stop

    explicit EmbeddingSearch(const Hypergraph& h, const Hypergraph& p) : host(h), pat(p) {
        const int pn = pat.vertex_count();
        pat_deg = pat.vertex_degrees();
        host_deg = host.vertex_degrees();
        pat_incident.resize(pn);
        for (std::size_t ei = 0; ei < pat.edges().size(); ++ei)
            for (int v : pat.edges()[ei]) pat_incident[v].push_back(static_cast<int>(ei));

        std::vector<bool> placed(pn, false);
        while (static_cast<int>(order.size()) < pn) {
            int best = -1;
            bool best_conn = false;
            for (int v = 0; v < pn; ++v) {
                if (placed[v]) continue;
                bool conn = false;
                for (int ei : pat_incident[v]) {
                    for (int u : pat.edges()[ei])
                        if (placed[u]) { conn = true; break; }
                    if (conn) break;
                }
                if (best == -1 || (conn && !best_conn) ||
                    (conn == best_conn && pat_deg[v] > pat_deg[best])) {
                    best = v;
                    best_conn = conn;
                }
            }
            placed[best] = true;
            order.push_back(best);
        }

        std::vector<int> pos_of(pn);
        for (int p = 0; p < pn; ++p) pos_of[order[p]] = p;
        closed_at.resize(pn);
        for (std::size_t ei = 0; ei < pat.edges().size(); ++ei) {
            int last = 0;
            for (int v : pat.edges()[ei]) last = std::max(last, pos_of[v]);
            closed_at[last].push_back(static_cast<int>(ei));
        }

        host_nbrs.resize(host.vertex_count());
        {
            std::vector<std::unordered_set<int>> nb(host.vertex_count());
            for (const auto& e : host.edges())
                for (int a : e)
                    for (int b : e)
                        if (a != b) nb[a].insert(b);
            for (int v = 0; v < host.vertex_count(); ++v)
                host_nbrs[v].assign(nb[v].begin(), nb[v].end());
        }
        for (std::size_t i = 0; i < host.edges().size(); ++i)
            host_edge_index[host.edges()[i]] = static_cast<int>(i);

        map.assign(pn, -1);
        used.assign(host.vertex_count(), false);
    }

    bool run() { return rec(0); }

    bool rec(std::size_t pos) {
        if (pos == order.size()) {
            CopyWitness w;
            w.vertex_map = map;
            for (const auto& e : pat.edges()) {
                Edge img;
                for (int v : e) img.push_back(map[v]);
                std::sort(img.begin(), img.end());
                w.edge_indices.push_back(host_edge_index.at(img));
            }
            std::sort(w.edge_indices.begin(), w.edge_indices.end());
            return visit(w);
        }
        const int v = order[pos];
        // candidates: co-occurrence neighbors of an assigned pattern neighbor
        const std::vector<int>* cands = nullptr;
        for (int ei : pat_incident[v]) {
            for (int u : pat.edges()[ei]) {
                if (u != v && map[u] != -1) { cands = &host_nbrs[map[u]]; break; }
            }
            if (cands) break;
        }
        std::vector<int> all;
        if (!cands) {
            all.resize(host.vertex_count());
            std::iota(all.begin(), all.end(), 0);
            cands = &all;
        }
        for (int w : *cands) {
            if (used[w] || host_deg[w] < pat_deg[v]) continue;
            map[v] = w;
            used[w] = true;
            bool ok = true;
            for (int ei : closed_at[pos]) {
                Edge img;
                for (int u : pat.edges()[ei]) img.push_back(map[u]);
                std::sort(img.begin(), img.end());
                if (!host.has_edge(img)) { ok = false; break; }
            }
            if (ok && !rec(pos + 1)) return false;
            used[w] = false;
            map[v] = -1;
        }
        return true;
    }
};

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const { return EdgeHash{}(v); }
};

}  // namespace

std::optional<CopyWitness> contains_copy(const Hypergraph& h, const Pattern& f) {
    if (f.realized().edge_count() == 0) return std::nullopt;
    if (h.uniformity() != f.uniformity()) return std::nullopt;
    EmbeddingSearch search(h, f.realized());
    std::optional<CopyWitness> found;
    search.visit = [&](const CopyWitness& w) {
        found = w;
        return false;  // stop at first
    };
    search.run();
    return found;
}

std::optional<CopyWitness> contains_copy(const Hypergraph& h, const PatternFamily& fam) {
    for (const auto& f : fam.members())
        if (auto w = contains_copy(h, f)) return w;
    return std::nullopt;
}

std::vector<std::vector<int>> list_copies(const Hypergraph& h, const Pattern& f,
                                          long long copy_budget) {
    std::unordered_set<std::vector<int>, VecHash> seen;
    if (f.realized().edge_count() == 0 || h.uniformity() != f.uniformity()) return {};
    EmbeddingSearch search(h, f.realized());
    search.visit = [&](const CopyWitness& w) {
        seen.insert(w.edge_indices);
        if (static_cast<long long>(seen.size()) > copy_budget)
            throw BudgetError("list_copies: copy budget exceeded (" +
                              std::to_string(copy_budget) + ")");
        return true;
    };
    search.run();
    std::vector<std::vector<int>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

long long count_copies(const Hypergraph& h, const Pattern& f, long long copy_budget) {
    return static_cast<long long>(list_copies(h, f, copy_budget).size());
}

bool is_family_free(const Hypergraph& h, const PatternFamily& fam) {
    return !contains_copy(h, fam).has_value();
}

}  // namespace relturan
