#include "relturan/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "relturan/rng.hpp"

namespace relturan {

namespace {

// edges sharing exactly r-1 vertices, via their common (r-1)-subset
std::vector<std::vector<int>> codegree_neighbors(const Hypergraph& h) {
    const int r = h.uniformity();
    std::map<Edge, std::vector<int>> buckets;
    for (std::size_t ei = 0; ei < h.edges().size(); ++ei) {
        const auto& e = h.edges()[ei];
        for (int skip = 0; skip < r; ++skip) {
            Edge sub;
            for (int j = 0; j < r; ++j)
                if (j != skip) sub.push_back(e[j]);
            buckets[sub].push_back(static_cast<int>(ei));
        }
    }
    std::vector<std::vector<int>> nbrs(h.edges().size());
    for (const auto& [_, ids] : buckets) {
        for (int a : ids)
            for (int b : ids)
                if (a != b) nbrs[a].push_back(b);
    }
    for (auto& v : nbrs) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return nbrs;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

ExtractionReport random_hom_extract(const Hypergraph& host, const Hypergraph& target,
                                    const PatternFamily& family, int trials,
                                    std::uint64_t seed) {
    if (host.uniformity() != target.uniformity())
        throw std::invalid_argument("random_hom_extract: uniformity mismatch");
    if (trials <= 0) throw std::invalid_argument("random_hom_extract: trials must be >= 1");
    const int r = host.uniformity();
    const int tn = target.vertex_count();
    const auto nbrs = codegree_neighbors(host);
    const long long ne = host.edge_count();

    std::vector<long long> yields;
    std::vector<int> best_kept;
    long long best_yield = -1;

    for (int trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        long long yield = 0;
        std::vector<int> kept;
        if (tn > 0 && target.edge_count() > 0) {
            std::vector<int> chi(host.vertex_count());
            for (auto& c : chi)
                c = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(tn)));

            // image vertex set of each edge (sorted, deduplicated)
            std::vector<Edge> images(ne);
            std::vector<bool> in_target(ne, false);
            for (long long ei = 0; ei < ne; ++ei) {
                Edge img;
                for (int v : host.edges()[ei]) img.push_back(chi[v]);
                std::sort(img.begin(), img.end());
                img.erase(std::unique(img.begin(), img.end()), img.end());
                in_target[ei] =
                    static_cast<int>(img.size()) == r && target.has_edge(img);
                images[ei] = std::move(img);
            }
            for (long long ei = 0; ei < ne; ++ei) {
                if (!in_target[ei]) continue;
                bool clash = false;
                for (int f : nbrs[ei]) {
                    if (images[f] == images[ei]) { clash = true; break; }
                }
                if (!clash) kept.push_back(static_cast<int>(ei));
            }
            yield = static_cast<long long>(kept.size());
        }
        yields.push_back(yield);
        if (yield > best_yield) {
            best_yield = yield;
            best_kept = std::move(kept);
        }
    }

    ExtractionReport rep{induced_subgraph(host, best_kept), "rhom", seed, trials,
                         std::move(yields)};
    const long long D = max_codegree(host);
    rep.stats["max_codegree"] = D;
    rep.stats["target_vertices"] = tn;
    rep.stats["target_edges"] = target.edge_count();
    if (tn >= 2LL * r * r * std::max<long long>(D, 1)) {
        long long tr = 1;
        bool overflow = false;
        for (int i = 0; i < r; ++i) {
            if (tr > (INT64_MAX / 4) / std::max(tn, 1)) { overflow = true; break; }
            tr *= tn;
        }
        if (!overflow)
            rep.guarantee = Rational(factorial(r) * target.edge_count(), 2 * tr) *
                            Rational(host.edge_count());
    }
    (void)family;
    return rep;
}

// ---------------------------------------------------------------------------
// target construction

namespace {

// min-degree peeling down to `t` vertices, ties toward the lowest index
Hypergraph peel_to(const Hypergraph& g, int t) {
    const int n = g.vertex_count();
    if (n <= t) return g;
    std::vector<bool> removed(n, false);
    std::vector<std::vector<int>> incident(n);
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei)
        for (int v : g.edges()[ei]) incident[v].push_back(static_cast<int>(ei));
    std::vector<bool> edge_alive(g.edges().size(), true);
    std::vector<int> deg(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(incident[v].size());

    int alive = n;
    while (alive > t) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        removed[best] = true;
        --alive;
        for (int ei : incident[best]) {
            if (!edge_alive[ei]) continue;
            edge_alive[ei] = false;
            for (int u : g.edges()[ei])
                if (!removed[u]) --deg[u];
        }
    }

    std::vector<int> old_to_new(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) old_to_new[v] = next++;
    std::vector<Edge> edges;
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        if (!edge_alive[ei]) continue;
        Edge e;
        for (int v : g.edges()[ei]) e.push_back(old_to_new[v]);
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    std::optional<Partition> parts;
    if (g.partition()) {
        Partition p(g.partition()->size());
        for (std::size_t i = 0; i < p.size(); ++i)
            for (int v : (*g.partition())[i])
                if (old_to_new[v] != -1) p[i].push_back(old_to_new[v]);
        parts = std::move(p);
    }
    return Hypergraph(g.uniformity(), next, std::move(edges), std::move(parts));
}

// shortest cycle contained in a pattern, or -1 for forests
int member_girth(const Hypergraph& g) { return girth(g); }

const int kPGPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                         59, 61, 67, 71, 73, 79, 83, 89, 97, 101};

std::optional<Hypergraph> girth_base(int required_girth, long long t) {
    if (required_girth <= 6) {
        // smallest prime whose incidence graph reaches t vertices, else the largest
        for (int q : kPGPrimes) {
            long long verts = 2LL * (1LL * q * q + q + 1);
            if (verts >= t) return projective_plane_incidence(q);
        }
        return projective_plane_incidence(101);
    }
    if (required_girth <= 8) {
        for (int q : {2, 3, 5}) {
            long long pts = 1LL * q * q * q + q * q + q + 1;
            if (2 * pts >= t) return generalized_quadrangle_incidence(q);
        }
        return generalized_quadrangle_incidence(5);
    }
    return std::nullopt;
}

bool verify_free(const Hypergraph& j, const PatternFamily& closure) {
    return is_family_free(j, closure);
}

}  // namespace

TargetResult build_target_J(const PatternFamily& family, long long D,
                            const TargetOptions& opts) {
    if (D < 1) throw std::invalid_argument("build_target_J: D must be >= 1");
    // construction is deterministic in (family, D, opts); cache across runs
    std::string cache_key = std::to_string(D) + "|" + std::to_string(opts.max_vertices) +
                            "|" + std::to_string(opts.seed) + "|" +
                            std::to_string(opts.budget.max_edges) + "|" +
                            std::to_string(opts.budget.max_copies);
    for (const auto& m : family.members()) {
        cache_key += "|" + std::to_string(m.realized().vertex_count()) + ":";
        for (const auto& e : m.realized().edges())
            for (int v : e) cache_key += std::to_string(v) + ",";
    }
    static std::map<std::string, TargetResult> cache;
    if (auto it = cache.find(cache_key); it != cache.end()) return it->second;
    auto cached_return = [&](TargetResult res) {
        cache.emplace(cache_key, res);
        return res;
    };
    if (family.empty())
        throw std::invalid_argument("build_target_J: empty family");
    const int r = family.members().front().uniformity();
    for (const auto& m : family.members())
        if (m.uniformity() != r)
            throw std::invalid_argument("build_target_J: mixed uniformities in family");
    const long long t = 2LL * r * r * D;

    // the avoidance requirement is the local-isomorphism closure
    PatternFamily closure;
    bool closure_exact = true;
    try {
        closure = local_isomorphism_images(family);
    } catch (const BudgetError&) {
        closure = family;
        closure_exact = false;
    }

    auto finish = [&](Hypergraph j, const std::string& strategy,
                      bool construction_trusted) -> std::optional<TargetResult> {
        bool verified = false;
        if (j.edge_count() <= 100000) {
            try {
                verified = verify_free(j, closure);
            } catch (const BudgetError&) {
                verified = false;
            }
            if (!verified && !construction_trusted) return std::nullopt;
            if (!verified && construction_trusted) {
                // a found copy disqualifies even a trusted construction
                if (!is_family_free(j, family)) return std::nullopt;
            }
        } else {
            verified = false;
            if (!construction_trusted) return std::nullopt;
        }
        return TargetResult{std::move(j), verified && closure_exact, strategy};
    };

    // 1. girth-based incidence constructions for graph families
    if (r == 2) {
        int required = 0;
        bool applicable = true;
        for (const auto& m : family.members()) {
            int g = member_girth(m.realized());
            if (g == -1) { applicable = false; break; }  // forests embed everywhere
            required = std::max(required, g + 1);
        }
        if (applicable) {
            if (auto base = girth_base(required, t)) {
                auto j = peel_to(*base, static_cast<int>(std::min<long long>(t, base->vertex_count())));
                if (auto res = finish(std::move(j), "incidence-peel", true)) return cached_return(*res);
            }
        }
    }

    // 2. tight-cycle-free lift for tight-cycle families with r >= 3
    if (r >= 3) {
        bool all_tc = true;
        int max_k = 0;
        for (const auto& m : family.members()) {
            if (m.kind() != Pattern::Kind::TightCycle) { all_tc = false; break; }
            max_k = std::max(max_k, m.cycle_length());
        }
        if (all_tc) {
            const int l = (max_k + r - 1) / r;
            if (l <= 3) {
                const int required = 2 * l + 1;
                if (auto base = girth_base(required, std::max<long long>(1, t / (r - 1)))) {
                    long long m = std::max<long long>(
                        1, (t - base->vertex_count()) / (r - 2));
                    auto j = tight_cycle_free_host(*base, r, static_cast<int>(m));
                    if (auto res = finish(std::move(j), "tight-cycle-lift", true)) return cached_return(*res);
                }
            }
        }
    }

    // 3. exact extremal search at tiny scale
    {
        const long long tcap = std::min<long long>(t, opts.max_vertices);
        if (tcap >= r && binomial(tcap, r) <= opts.budget.max_edges) {
            try {
                auto exact = exact_relative_turan(complete_host(static_cast<int>(tcap), r),
                                                  closure, opts.budget);
                if (auto res = finish(exact.witness, "exact-extremal", false)) return cached_return(*res);
            } catch (const BudgetError&) {
            }
        }
    }

    // 4. probabilistic fallback; copy search cost grows steeply with n for r >= 3
    {
        long long cap = opts.max_vertices;
        if (r >= 3) cap = std::min<long long>(cap, 24);
        const long long n = std::max<long long>(r + 1, std::min<long long>(t, cap));
        try {
            auto j = probabilistic_extremal(static_cast<int>(n), r, closure, opts.seed,
                                            opts.budget);
            if (auto res = finish(std::move(j), "probabilistic", false)) return cached_return(*res);
        } catch (const BudgetError&) {
        }
    }

    throw BudgetError("build_target_J: no strategy produced a verified target for family " +
                      family.members().front().describe() + " at D=" + std::to_string(D));
}

// ---------------------------------------------------------------------------
// codegree splitting

ExtractionReport codegree_split_extract(const Hypergraph& host, long long D,
                                        const PatternFamily& family,
                                        const RecurseFn& recurse) {
    if (!host.partition())
        throw std::invalid_argument("codegree_split_extract: host must be r-partite");
    const int r = host.uniformity();
    if (r < 3) throw std::invalid_argument("codegree_split_extract: requires r >= 3");
    const auto owner = host.part_of();
    const long long ne = host.edge_count();

    // trace (drop part i) -> codegree, per dropped part
    std::vector<std::map<Edge, long long>> trace_deg(r);
    auto trace_of = [&](const Edge& e, int drop_part) {
        Edge tr;
        for (int v : e)
            if (owner[v] != drop_part) tr.push_back(v);
        return tr;
    };
    for (const auto& e : host.edges())
        for (int i = 0; i < r; ++i) ++trace_deg[i][trace_of(e, i)];

    // E_i: edges whose drop-part-i trace has codegree >= D
    std::vector<long long> class_size(r, 0);
    for (const auto& e : host.edges())
        for (int i = 0; i < r; ++i)
            if (trace_deg[i][trace_of(e, i)] >= D) ++class_size[i];
    int drop = 0;
    for (int i = 1; i < r; ++i)
        if (class_size[i] > class_size[drop]) drop = i;

    ExtractionReport rep{induced_subgraph(host, {}), "split", 0, 1, {0}};
    rep.stats["D"] = D;
    rep.stats["dropped_part"] = drop;
    rep.stats["class_size"] = class_size[drop];
    if (class_size[drop] == 0) {
        rep.note = "degenerate: no edge reaches codegree D; use the low-codegree branch";
        return rep;
    }

    // dyadic buckets [2^k D, 2^{k+1} D) over the high-codegree traces
    std::map<int, long long> bucket_edges;
    for (const auto& e : host.edges()) {
        long long d = trace_deg[drop][trace_of(e, drop)];
        if (d < D) continue;
        int k = 0;
        while ((D << (k + 1)) <= d) ++k;
        bucket_edges[k] += 1;
    }
    int K = bucket_edges.begin()->first;
    for (const auto& [k, cnt] : bucket_edges)
        if (cnt > bucket_edges[K]) K = k;

    // G_K on the remaining parts, reindexed densely
    std::vector<int> old_to_new(host.vertex_count(), -1);
    std::vector<int> new_to_old;
    for (int v = 0; v < host.vertex_count(); ++v) {
        if (owner[v] != drop) {
            old_to_new[v] = static_cast<int>(new_to_old.size());
            new_to_old.push_back(v);
        }
    }
    Partition sub_parts(r - 1);
    {
        int pi = 0;
        for (int p = 0; p < r; ++p) {
            if (p == drop) continue;
            for (int v : (*host.partition())[p]) sub_parts[pi].push_back(old_to_new[v]);
            ++pi;
        }
    }
    std::set<Edge> gk_edges;
    for (const auto& [tr, d] : trace_deg[drop]) {
        if (d < (D << K) || d >= (D << (K + 1))) continue;
        Edge e;
        for (int v : tr) e.push_back(old_to_new[v]);
        std::sort(e.begin(), e.end());
        gk_edges.insert(std::move(e));
    }
    Hypergraph gk(r - 1, static_cast<int>(new_to_old.size()),
                  {gk_edges.begin(), gk_edges.end()}, sub_parts);

    auto pi_family = projection_family(family);
    auto sub_report = recurse(gk, pi_family);

    // lift: all edges of H whose trace is an edge of the extracted G
    EdgeSet g_edges;
    for (const auto& e : sub_report.result.edges()) g_edges.insert(e);
    std::vector<int> lift;
    for (std::size_t ei = 0; ei < host.edges().size(); ++ei) {
        Edge tr = trace_of(host.edges()[ei], drop);
        for (auto& v : tr) v = old_to_new[v];
        std::sort(tr.begin(), tr.end());
        if (g_edges.count(tr)) lift.push_back(static_cast<int>(ei));
    }

    rep.result = induced_subgraph(host, lift);
    rep.seed = sub_report.seed;
    rep.trials = sub_report.trials;
    rep.yields = {static_cast<long long>(lift.size())};
    rep.stats["K"] = K;
    rep.stats["e_G"] = sub_report.result.edge_count();
    rep.stats["lift_bound"] = (D << K) * sub_report.result.edge_count();
    rep.stats["host_edges"] = ne;
    rep.note = "recurse: " + sub_report.algorithm +
               (sub_report.note.empty() ? "" : (" / " + sub_report.note));
    return rep;
}

// ---------------------------------------------------------------------------
// recursive pipeline for complete r-partite patterns

namespace {

long long ceil_pow(long long base, double exponent) {
    if (base <= 1) return 1;
    double x = std::pow(static_cast<double>(base), exponent);
    auto d = static_cast<long long>(std::ceil(x - 1e-9));
    return std::max<long long>(d, 1);
}

// indices of edges all of whose (r-1)-subsets have codegree < D
std::vector<int> low_codegree_edges(const Hypergraph& h, long long D) {
    const int r = h.uniformity();
    std::map<Edge, long long> deg;
    for (const auto& e : h.edges()) {
        for (int skip = 0; skip < r; ++skip) {
            Edge sub;
            for (int j = 0; j < r; ++j)
                if (j != skip) sub.push_back(e[j]);
            ++deg[sub];
        }
    }
    std::vector<int> low;
    for (std::size_t ei = 0; ei < h.edges().size(); ++ei) {
        const auto& e = h.edges()[ei];
        bool ok = true;
        for (int skip = 0; skip < r && ok; ++skip) {
            Edge sub;
            for (int j = 0; j < r; ++j)
                if (j != skip) sub.push_back(e[j]);
            if (deg[sub] >= D) ok = false;
        }
        if (ok) low.push_back(static_cast<int>(ei));
    }
    return low;
}

}  // namespace

ExtractionReport recursive_extract(const Hypergraph& host, const SizeVector& s,
                                   std::uint64_t seed, int trials) {
    const int r = s.r();
    if (host.uniformity() != r)
        throw std::invalid_argument("recursive_extract: host uniformity != |s|");
    PatternFamily family({Pattern::complete_partite(s.s)});

    if (host.edge_count() == 0) {
        ExtractionReport rep{host, "recursive", seed, 1, {0}};
        rep.note = "empty host";
        return rep;
    }

    if (r == 2) {
        const long long D = std::max<long long>(1, max_codegree(host));
        TargetOptions opts;
        opts.seed = 101;
        auto target = build_target_J(family, D, opts);
        auto rep = random_hom_extract(host, target.graph, family, trials,
                                      derive_seed(seed, 102));
        rep.algorithm = "recursive";
        rep.target_verified = target.verified;
        rep.note = "base r=2 via " + target.strategy;
        return rep;
    }

    auto rp = random_r_partite_subgraph(host, derive_seed(seed, 103));
    const Hypergraph& hp = rp.subgraph;
    if (hp.edge_count() == 0) {
        ExtractionReport rep{hp, "recursive", seed, 1, {0}};
        rep.note = "partite subsample empty";
        return rep;
    }

    long long delta = 0;
    for (long long d : hp.vertex_degrees()) delta = std::max(delta, d);
    long long sum_a = 0;
    for (int i = 2; i <= r; ++i) sum_a += s.a_i(i);
    const long long D = ceil_pow(delta, static_cast<double>(s.a_i(r)) / sum_a);

    auto low = low_codegree_edges(hp, D);
    ExtractionReport rep = [&] {
        if (2 * static_cast<long long>(low.size()) >= hp.edge_count()) {
            auto low_host = induced_subgraph(hp, low);
            TargetOptions opts;
            opts.seed = 104;
            auto target = build_target_J(family, D, opts);
            auto out = random_hom_extract(low_host, target.graph, family, trials,
                                          derive_seed(seed, 105));
            out.target_verified = target.verified;
            out.note = "low-codegree branch via " + target.strategy +
                       "; discarded " + std::to_string(hp.edge_count() - low.size()) +
                       " high-codegree edges";
            return out;
        }
        SizeVector sub(std::vector<int>(s.s.begin(), s.s.end() - 1));
        RecurseFn recurse = [&](const Hypergraph& g, const PatternFamily&) {
            return recursive_extract(g, sub, derive_seed(seed, 106), trials);
        };
        auto out = codegree_split_extract(hp, D, family, recurse);
        out.note = "high-codegree branch; " + out.note;
        return out;
    }();
    rep.algorithm = "recursive";
    rep.seed = seed;
    rep.stats["Delta"] = delta;
    rep.stats["D"] = D;
    rep.stats["partite_edges"] = hp.edge_count();
    return rep;
}

// ---------------------------------------------------------------------------
// tight cycles

ExtractionReport tight_cycle_extract(const Hypergraph& host, int l, std::uint64_t seed,
                                     int trials,
                                     const std::optional<Hypergraph>& base_graph) {
    if (l != 2 && l != 3 && l != 5)
        throw std::invalid_argument("tight_cycle_extract: l must be in {2,3,5}");
    if (l == 5 && !base_graph)
        throw std::invalid_argument(
            "tight_cycle_extract: l=5 requires a user-supplied {C_3,...,C_10}-free base graph");
    const int r = host.uniformity();
    PatternFamily family = PatternFamily::tight_cycle_range(r, l);

    if (host.edge_count() == 0) {
        ExtractionReport rep{host, "tc", seed, 1, {0}};
        rep.note = "empty host";
        return rep;
    }

    if (r == 2) {
        const long long D = std::max<long long>(1, max_codegree(host));
        const long long t = 8 * D;
        Hypergraph target = [&]() -> Hypergraph {
            if (base_graph)
                return peel_to(*base_graph,
                               static_cast<int>(std::min<long long>(t, base_graph->vertex_count())));
            TargetOptions opts;
            opts.seed = 201;
            return build_target_J(family, D, opts).graph;
        }();
        auto rep = random_hom_extract(host, target, family, trials, derive_seed(seed, 202));
        rep.algorithm = "tc";
        return rep;
    }

    auto rp = random_r_partite_subgraph(host, derive_seed(seed, 203));
    const Hypergraph& hp = rp.subgraph;
    if (hp.edge_count() == 0) {
        ExtractionReport rep{hp, "tc", seed, 1, {0}};
        rep.note = "partite subsample empty";
        return rep;
    }

    long long delta = 0;
    for (long long d : hp.vertex_degrees()) delta = std::max(delta, d);
    const long long D = ceil_pow(delta, 1.0 / (r - 1));

    auto low = low_codegree_edges(hp, D);
    ExtractionReport rep = [&] {
        if (2 * static_cast<long long>(low.size()) >= hp.edge_count()) {
            auto low_host = induced_subgraph(hp, low);
            Hypergraph target = [&]() -> Hypergraph {
                const long long t = 2LL * r * r * D;
                if (base_graph) {
                    long long m =
                        std::max<long long>(1, (t - base_graph->vertex_count()) / (r - 2));
                    return tight_cycle_free_host(*base_graph, r, static_cast<int>(m));
                }
                TargetOptions opts;
                opts.seed = 204;
                return build_target_J(family, D, opts).graph;
            }();
            auto out = random_hom_extract(low_host, target, family, trials,
                                          derive_seed(seed, 205));
            out.note = "low-codegree branch";
            return out;
        }
        // only the r-partite members (k divisible by r) can occur in hp
        PatternFamily partite;
        for (const auto& m : family.members())
            if (m.cycle_length() % r == 0) partite.add(m);
        RecurseFn recurse = [&](const Hypergraph& g, const PatternFamily&) {
            return tight_cycle_extract(g, l, derive_seed(seed, 206), trials, base_graph);
        };
        auto out = codegree_split_extract(hp, D, partite, recurse);
        out.note = "high-codegree branch; " + out.note;
        return out;
    }();
    rep.algorithm = "tc";
    rep.seed = seed;
    rep.stats["Delta"] = delta;
    rep.stats["D"] = D;
    return rep;
}

// ---------------------------------------------------------------------------
// first-moment baseline

ExtractionReport first_moment_deletion(const Hypergraph& host, const PatternFamily& family,
                                       std::uint64_t seed, const Budget& budget) {
    Hypergraph cur = host;
    std::vector<long long> yields;
    int iteration = 0;
    while (true) {
        std::set<std::vector<int>> copies;
        for (const auto& f : family.members())
            for (auto& c : list_copies(cur, f, budget.max_copies)) copies.insert(std::move(c));
        if (copies.empty()) break;

        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(iteration)));
        std::vector<bool> alive(cur.edges().size(), true);
        for (const auto& copy : copies) {
            bool surviving = true;
            for (int e : copy)
                if (!alive[e]) { surviving = false; break; }
            if (!surviving) continue;
            int victim = copy[rng.next_below(copy.size())];
            alive[victim] = false;
        }
        std::vector<int> keep;
        for (std::size_t e = 0; e < alive.size(); ++e)
            if (alive[e]) keep.push_back(static_cast<int>(e));
        cur = induced_subgraph(cur, keep);
        yields.push_back(cur.edge_count());
        ++iteration;
    }
    if (yields.empty()) yields.push_back(host.edge_count());
    ExtractionReport rep{cur, "del", seed, static_cast<int>(yields.size()), yields};
    rep.stats["iterations"] = iteration;
    return rep;
}

Hypergraph probabilistic_extremal(int n, int r, const PatternFamily& family,
                                  std::uint64_t seed, const Budget& budget) {
    if (n < r) throw std::invalid_argument("probabilistic_extremal: need n >= r");

    // copies of each member in K_n^r, via the member's own vertex count
    double expected_edges_coeff = static_cast<double>(binomial(n, r));
    std::vector<std::pair<double, long long>> terms;  // (count in K_n^r, e(F))
    for (const auto& f : family.members()) {
        const int v = f.realized().vertex_count();
        if (v > n) continue;
        long long in_small = count_copies(complete_host(v, r), f, budget.max_copies);
        terms.emplace_back(static_cast<double>(binomial(n, v)) * in_small,
                           f.realized().edge_count());
    }

    // largest p with expected copies <= half the expected edges
    auto surplus = [&](double p) {
        double copies = 0;
        for (const auto& [cnt, ef] : terms) copies += cnt * std::pow(p, static_cast<double>(ef));
        return copies - 0.5 * p * expected_edges_coeff;
    };
    double p = 1.0;
    if (surplus(1.0) > 0) {
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 60; ++it) {
            double mid = 0.5 * (lo + hi);
            if (surplus(mid) <= 0) lo = mid;
            else hi = mid;
        }
        p = lo;
    }

    auto sample = sample_random_hypergraph(n, r, p, derive_seed(seed, 301));
    return first_moment_deletion(sample, family, derive_seed(seed, 302), budget).result;
}

// ---------------------------------------------------------------------------
// dispatch

ExtractionReport run_algorithm(const std::string& algo, const Hypergraph& host,
                               const PatternFamily& family, std::uint64_t seed,
                               int trials, const Budget& budget) {
    if (family.empty()) throw std::invalid_argument("run_algorithm: empty family");
    const int r = host.uniformity();
    for (const auto& m : family.members())
        if (m.uniformity() != r)
            throw std::invalid_argument("run_algorithm: family uniformity != host uniformity");

    if (algo == "rhom") {
        const long long D = std::max<long long>(1, max_codegree(host));
        TargetOptions opts;
        opts.seed = 401;
        opts.budget = budget;
        auto target = build_target_J(family, D, opts);
        auto rep = random_hom_extract(host, target.graph, family, trials,
                                      derive_seed(seed, 402));
        rep.target_verified = target.verified;
        rep.note = "target via " + target.strategy;
        return rep;
    }
    if (algo == "del") return first_moment_deletion(host, family, seed, budget);
    if (algo == "recursive") {
        if (family.size() != 1 ||
            family.members()[0].kind() != Pattern::Kind::CompletePartite)
            throw std::invalid_argument(
                "run_algorithm: recursive needs a single complete r-partite pattern");
        return recursive_extract(host, SizeVector(family.members()[0].partite_sizes()),
                                 seed, trials);
    }
    if (algo == "tc") {
        int max_k = 0;
        for (const auto& m : family.members()) {
            if (m.kind() != Pattern::Kind::TightCycle)
                throw std::invalid_argument("run_algorithm: tc needs tight-cycle patterns");
            max_k = std::max(max_k, m.cycle_length());
        }
        const int l = std::max(2, (max_k + r - 1) / r);
        if (l != 2 && l != 3)
            throw std::invalid_argument("run_algorithm: tc supports l in {2,3} without a base graph");
        return tight_cycle_extract(host, l, seed, trials);
    }
    if (algo == "split") {
        if (r < 3) throw std::invalid_argument("run_algorithm: split needs r >= 3");
        Hypergraph hp = host.partition()
                            ? host
                            : random_r_partite_subgraph(host, derive_seed(seed, 403)).subgraph;

        // only r-partite members can occur in an r-partite host
        PatternFamily partite;
        for (const auto& m : family.members())
            if (!enumerate_r_partitions(m).empty()) partite.add(m);
        if (partite.empty()) {
            ExtractionReport rep{hp, "split", seed, 1,
                                 {hp.edge_count()}};
            rep.note = "no family member is r-partite; the r-partite subsample is free";
            return rep;
        }
        long long delta = 0;
        for (long long d : hp.vertex_degrees()) delta = std::max(delta, d);
        const long long D = ceil_pow(delta, 1.0 / (r - 1));
        RecurseFn recurse = [&](const Hypergraph& g, const PatternFamily& pi_fam) {
            if (pi_fam.empty() || g.edge_count() == 0) {
                return ExtractionReport{g, "identity", seed, 1, {g.edge_count()}};
            }
            const long long d2 = std::max<long long>(1, max_codegree(g));
            TargetOptions opts;
            opts.seed = 404;
            opts.budget = budget;
            auto target = build_target_J(pi_fam, d2, opts);
            return random_hom_extract(g, target.graph, pi_fam, trials,
                                      derive_seed(seed, 405));
        };
        auto rep = codegree_split_extract(hp, D, partite, recurse);
        rep.seed = seed;
        return rep;
    }
    throw std::invalid_argument("run_algorithm: unknown algorithm tag " + algo);
}

}  // namespace relturan
