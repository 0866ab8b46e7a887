#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "relturan/hypergraph.hpp"

namespace relturan {

/// Thrown when an operation would exceed a resource guard (enumeration
/// size, copy budget, ...). Distinct from input errors.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Forbidden pattern: a concrete r-graph, possibly with symbolic structure
/// (complete r-partite or tight cycle) remembered for fast dispatch.
class Pattern {
public:
    enum class Kind { General, CompletePartite, TightCycle };

    static Pattern general(Hypergraph h);
    /// K_{s_1,...,s_r}; sizes need not be presorted
    static Pattern complete_partite(std::vector<int> sizes);
    /// TC_k^r: k cyclically ordered vertices, edges = windows of r consecutive
    static Pattern tight_cycle(int k, int r);

    Kind kind() const { return kind_; }
    const Hypergraph& realized() const { return realized_; }
    int uniformity() const { return realized_.uniformity(); }
    const std::vector<int>& partite_sizes() const { return sizes_; }  // CompletePartite only
    int cycle_length() const { return cycle_k_; }                     // TightCycle only

    std::string describe() const;

private:
    Pattern(Kind kind, Hypergraph h) : kind_(kind), realized_(std::move(h)) {}
    Kind kind_;
    Hypergraph realized_;
    std::vector<int> sizes_;
    int cycle_k_ = 0;
};

/// Finite set of patterns, deduplicated up to isomorphism.
class PatternFamily {
public:
    PatternFamily() = default;
    explicit PatternFamily(std::vector<Pattern> members, std::string origin = "explicit");

    const std::vector<Pattern>& members() const { return members_; }
    const std::string& origin() const { return origin_; }
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }

    /// add with isomorphism dedup; returns true if actually inserted
    bool add(Pattern p);

    /// all TC_k^r with r+1 <= k <= l*r
    static PatternFamily tight_cycle_range(int r, int l);

private:
    std::vector<Pattern> members_;
    std::string origin_ = "explicit";
};

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b);

/// all r-partitions of V(F) with every edge rainbow, up to relabeling of
/// parts; empty iff F is not r-partite. Guarded at |V(F)| <= 16.
std::vector<Partition> enumerate_r_partitions(const Pattern& f);

struct TightConnectivityResult {
    bool tightly_connected = false;
    std::optional<Partition> witness;
};

/// existential over r-partitions: some partition has, for every part and
/// every two of its vertices, edges through them meeting in r-1 vertices.
/// Input error (not "false") when F is not r-partite.
TightConnectivityResult is_tightly_connected(const Pattern& f);

/// pi(F): traces after deleting one part, over all r-partitions and parts,
/// up to isomorphism. Requires r >= 3.
PatternFamily projection_family(const Pattern& f);
PatternFamily projection_family(const PatternFamily& fam);

/// H(F): surjective local-isomorphism images, enumerated over vertex-set
/// partitions. Guarded at |V(F)| <= 10.
PatternFamily local_isomorphism_images(const Pattern& f);
PatternFamily local_isomorphism_images(const PatternFamily& fam);

/// A copy of F in H is a set of e(F) edges of H spanning a subgraph
/// isomorphic to F. Witness maps V(F) into V(H).
struct CopyWitness {
    std::vector<int> vertex_map;       // image of each F vertex
    std::vector<int> edge_indices;     // sorted indices into H.edges()
};

std::optional<CopyWitness> contains_copy(const Hypergraph& h, const Pattern& f);
std::optional<CopyWitness> contains_copy(const Hypergraph& h, const PatternFamily& fam);

/// distinct edge-subsets of H isomorphic to F (unordered convention)
long long count_copies(const Hypergraph& h, const Pattern& f,
                       long long copy_budget = 1000000);

/// all copies as sorted edge-index sets
std::vector<std::vector<int>> list_copies(const Hypergraph& h, const Pattern& f,
                                          long long copy_budget = 1000000);

bool is_family_free(const Hypergraph& h, const PatternFamily& fam);

}  // namespace relturan
