#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relturan/constructions.hpp"
#include "relturan/hypergraph.hpp"
#include "relturan/oracle.hpp"
#include "relturan/pattern.hpp"
#include "relturan/rational.hpp"

namespace relturan {

/// Output of every extraction algorithm: the subgraph plus provenance.
struct ExtractionReport {
    Hypergraph result;
    std::string algorithm;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<long long> yields;            // kept-edge count per trial
    std::optional<Rational> guarantee;        // certified expectation bound, when valid
    bool target_verified = false;             // J freeness re-verified by copy search
    std::string note;
    std::map<std::string, long long> stats;   // algorithm internals (D, K, e_G, ...)
};

/// Random-homomorphism extraction: sample chi : V(H) -> V(J) per trial, keep
/// an edge iff its image is an edge of J and no edge sharing r-1 vertices has
/// the same image. The output is family-free whenever J avoids the
/// local-isomorphism closure of the family.
ExtractionReport random_hom_extract(const Hypergraph& host, const Hypergraph& target,
                                    const PatternFamily& family, int trials,
                                    std::uint64_t seed);

struct TargetOptions {
    long long max_vertices = 64;    // cap for probabilistic / exact strategies
    Budget budget;                  // verification budget
    std::uint64_t seed = 1;
};

struct TargetResult {
    Hypergraph graph;
    bool verified = false;   // freeness re-checked by copy search
    std::string strategy;
};

/// An H(family)-free target graph on (ideally) t = 2 r^2 D vertices, by
/// priority: algebraic construction (incidence graphs, tight-cycle-free
/// lifts), exact extremal search at tiny scale, probabilistic fallback.
TargetResult build_target_J(const PatternFamily& family, long long D,
                            const TargetOptions& opts = {});

using RecurseFn =
    std::function<ExtractionReport(const Hypergraph&, const PatternFamily&)>;

/// Codegree splitting: pick the part whose removal classifies the most edges
/// as high-codegree, bucket the (r-1)-set traces dyadically by codegree,
/// extract a projection-free trace subgraph via `recurse`, and lift.
ExtractionReport codegree_split_extract(const Hypergraph& host, long long D,
                                        const PatternFamily& family,
                                        const RecurseFn& recurse);

/// Full lower-bound pipeline for K_{s_1,...,s_r}: r-partite subsample,
/// low/high codegree split at D = ceil(Delta^{a_r / sum a_i}), then either
/// random homomorphisms or codegree splitting with recursion on r-1.
ExtractionReport recursive_extract(const Hypergraph& host, const SizeVector& s,
                                   std::uint64_t seed, int trials);

/// Same skeleton for tight-cycle families {TC_{r+1}^r,...,TC_{lr}^r} with
/// D = ceil(Delta^{1/(r-1)}). l in {2,3} built in; l = 5 needs a
/// caller-supplied {C_3,...,C_10}-free bipartite base graph.
ExtractionReport tight_cycle_extract(const Hypergraph& host, int l, std::uint64_t seed,
                                     int trials,
                                     const std::optional<Hypergraph>& base_graph = std::nullopt);

/// First-moment baseline: delete one seed-chosen edge from every surviving
/// copy, repeating until family-free.
ExtractionReport first_moment_deletion(const Hypergraph& host, const PatternFamily& family,
                                       std::uint64_t seed, const Budget& budget = {});

/// Sample H^r_{n,p} at the p where expected edges = 2 x expected copies,
/// then run first-moment deletion.
Hypergraph probabilistic_extremal(int n, int r, const PatternFamily& family,
                                  std::uint64_t seed, const Budget& budget = {});

/// Dispatch by algorithm tag: rhom, split, recursive, tc, del. Algorithms
/// with pattern-shape requirements (recursive wants one complete r-partite
/// member, tc wants tight cycles) reject other families as input errors.
ExtractionReport run_algorithm(const std::string& algo, const Hypergraph& host,
                               const PatternFamily& family, std::uint64_t seed,
                               int trials, const Budget& budget = {});

}  // namespace relturan
