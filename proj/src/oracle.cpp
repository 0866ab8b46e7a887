#include "relturan/oracle.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <set>

namespace relturan {

namespace {

class HittingSetSolver {
public:
    HittingSetSolver(long long edge_count, std::vector<std::vector<int>> copies)
        : copies_(std::move(copies)), edge_copies_(edge_count) {
        for (std::size_t c = 0; c < copies_.size(); ++c)
            for (int e : copies_[c]) edge_copies_[e].push_back(static_cast<int>(c));
        cover_count_.assign(copies_.size(), 0);
        in_hit_.assign(edge_count, false);
        excluded_.assign(edge_count, false);
    }

    std::vector<int> solve() {
        best_size_ = greedy_upper_bound();
        best_set_ = greedy_set_;
        std::vector<int> hit;
        branch(hit);
        return best_set_;
    }

private:
    // greedy: repeatedly take the edge hitting the most uncovered copies
    int greedy_upper_bound() {
        std::vector<int> cover(copies_.size(), 0);
        std::vector<bool> taken(edge_copies_.size(), false);
        int uncovered = static_cast<int>(copies_.size());
        greedy_set_.clear();
        while (uncovered > 0) {
            int best_e = -1, best_gain = -1;
            for (std::size_t e = 0; e < edge_copies_.size(); ++e) {
                if (taken[e]) continue;
                int gain = 0;
                for (int c : edge_copies_[e])
                    if (cover[c] == 0) ++gain;
                if (gain > best_gain) { best_gain = gain; best_e = static_cast<int>(e); }
            }
            taken[best_e] = true;
            greedy_set_.push_back(best_e);
            for (int c : edge_copies_[best_e]) {
                if (cover[c] == 0) --uncovered;
                ++cover[c];
            }
        }
        return static_cast<int>(greedy_set_.size());
    }

    // greedy maximal set of uncovered copies without a common allowed edge
    int disjoint_packing_bound() const {
        std::vector<bool> edge_used(edge_copies_.size(), false);
        int packed = 0;
        for (std::size_t c = 0; c < copies_.size(); ++c) {
            if (cover_count_[c] > 0) continue;
            bool free = true;
            for (int e : copies_[c])
                if (edge_used[e] && !excluded_[e]) { free = false; break; }
            if (!free) continue;
            for (int e : copies_[c]) edge_used[e] = true;
            ++packed;
        }
        return packed;
    }

    void branch(std::vector<int>& hit) {
        // uncovered copy with the fewest allowed edges; excluded edges can
        // never be chosen below this node
        int pick = -1;
        int pick_allowed = INT_MAX;
        for (std::size_t c = 0; c < copies_.size(); ++c) {
            if (cover_count_[c] > 0) continue;
            int allowed = 0;
            for (int e : copies_[c])
                if (!excluded_[e]) ++allowed;
            if (allowed < pick_allowed) {
                pick = static_cast<int>(c);
                pick_allowed = allowed;
                if (allowed <= 1) break;
            }
        }
        if (pick == -1) {
            if (static_cast<int>(hit.size()) < best_size_) {
                best_size_ = static_cast<int>(hit.size());
                best_set_ = hit;
            }
            return;
        }
        if (pick_allowed == 0) return;  // copy can no longer be covered
        if (static_cast<int>(hit.size()) + disjoint_packing_bound() >= best_size_) return;

        // each hitting set visited once: branch i excludes the edges tried
        // by branches 0..i-1
        std::vector<int> tried;
        for (int e : copies_[pick]) {
            if (excluded_[e]) continue;
            in_hit_[e] = true;
            for (int c : edge_copies_[e]) ++cover_count_[c];
            hit.push_back(e);
            branch(hit);
            hit.pop_back();
            for (int c : edge_copies_[e]) --cover_count_[c];
            in_hit_[e] = false;
            excluded_[e] = true;
            tried.push_back(e);
        }
        for (int e : tried) excluded_[e] = false;
    }

    std::vector<std::vector<int>> copies_;
    std::vector<std::vector<int>> edge_copies_;
    std::vector<int> cover_count_;
    std::vector<bool> in_hit_;
    std::vector<bool> excluded_;
    std::vector<int> greedy_set_;
    std::vector<int> best_set_;
    int best_size_ = 0;
};

}  // namespace

ExactResult exact_relative_turan(const Hypergraph& h, const PatternFamily& family,
                                 const Budget& budget) {
    if (h.edge_count() > budget.max_edges)
        throw BudgetError("exact_relative_turan: e(H)=" + std::to_string(h.edge_count()) +
                          " exceeds edge budget " + std::to_string(budget.max_edges));

    std::set<std::vector<int>> copy_sets;
    for (const auto& f : family.members()) {
        for (auto& c : list_copies(h, f, budget.max_copies)) copy_sets.insert(std::move(c));
        if (static_cast<long long>(copy_sets.size()) > budget.max_copies)
            throw BudgetError("exact_relative_turan: copy budget exceeded");
    }

    if (copy_sets.empty()) return {h.edge_count(), h, 0};

    std::vector<std::vector<int>> copies(copy_sets.begin(), copy_sets.end());
    HittingSetSolver solver(h.edge_count(), copies);
    auto hit = solver.solve();

    std::vector<bool> removed(h.edges().size(), false);
    for (int e : hit) removed[e] = true;
    std::vector<int> keep;
    for (std::size_t e = 0; e < h.edges().size(); ++e)
        if (!removed[e]) keep.push_back(static_cast<int>(e));

    ExactResult res{h.edge_count() - static_cast<long long>(hit.size()),
                    induced_subgraph(h, keep), static_cast<long long>(copies.size())};
    return res;
}

ExponentProfile exponents(const SizeVector& s) {
    const int r = s.r();
    long long sum_a = 0;
    for (int i = 2; i <= r; ++i) sum_a += s.a_i(i);
    long long sum_s = 0, sum_s_head = 0;
    for (int i = 0; i < r; ++i) {
        sum_s += s.s[i];
        if (i < r - 1) sum_s_head += s.s[i];
    }
    const long long ar = s.a_i(r), ar1 = s.a_i(r + 1);
    return ExponentProfile{
        s,
        Rational(1, (r - 1) * ar),
        Rational(1, sum_a),
        Rational(sum_s - r, ar1 - 1),
        Rational(ar * (sum_s_head - r) + 1, (ar - 1) * (ar1 - 1)),
    };
}

Rational alpha_recursion(const SizeVector& s, const Rational& alpha2) {
    if (alpha2 < Rational(1))
        throw std::invalid_argument("alpha_recursion: alpha2 must be >= 1");
    Rational alpha = alpha2;
    for (int i = 3; i <= s.r(); ++i) {
        const int si = s.s[i - 1];
        Rational factorial(1);
        for (int k = 2; k <= si; ++k) factorial = factorial * Rational(k);
        alpha = Rational(4).pow(si) * alpha.pow(si) * factorial;
    }
    return alpha;
}

SupersaturationReport supersaturation_check(const Hypergraph& host,
                                            const Hypergraph& subgraph, const SizeVector& s,
                                            const Rational& alpha2, const Budget& budget) {
    if (!host.partition() || static_cast<int>(host.partition()->size()) != s.r())
        throw std::invalid_argument("supersaturation_check: host must be the r-partite host");
    const int r = s.r();
    const auto& parts = *host.partition();

    // recover n from |V_1| = n^{a_2}
    const double n1 = static_cast<double>(parts[0].size());
    const double n = std::round(std::pow(n1, 1.0 / static_cast<double>(s.a_i(2))));
    std::vector<double> part_sizes(r);
    for (int i = 0; i < r; ++i) part_sizes[i] = static_cast<double>(parts[i].size());
    for (int i = 2; i <= r; ++i) {
        if (std::llround(std::pow(n, static_cast<double>(s.a_i(i)))) !=
            static_cast<long long>(parts[i - 1].size()))
            throw std::invalid_argument("supersaturation_check: part sizes do not match n^{a_i}");
    }

    const Rational alpha_r = alpha_recursion(s, alpha2);
    double prod_n = 1.0;
    for (double sz : part_sizes) prod_n *= sz;
    const double m = static_cast<double>(subgraph.edge_count());
    const double ar1 = static_cast<double>(s.a_i(r + 1));

    SupersaturationReport rep;
    rep.threshold_bound = alpha_r.to_double() * prod_n / n;
    double predicted = std::pow(m, ar1) / alpha_r.to_double();
    for (int i = 0; i < r; ++i)
        predicted *= std::pow(part_sizes[i], static_cast<double>(s.s[i]) - ar1);
    rep.predicted_count = predicted;
    rep.above_threshold = m >= rep.threshold_bound;
    rep.copy_count = count_copies(subgraph, Pattern::complete_partite(s.s), budget.max_copies);
    return rep;
}

FitResult exponent_fit(const std::vector<FitPoint>& points) {
    if (points.size() < 3) throw std::invalid_argument("exponent_fit: need at least 3 points");
    std::vector<double> xs, ys;
    for (const auto& p : points) {
        if (p.delta <= 0 || p.host_edges <= 0 || p.extracted_edges <= 0)
            throw std::invalid_argument("exponent_fit: nonpositive point");
        xs.push_back(std::log(p.delta));
        ys.push_back(std::log(p.host_edges / p.extracted_edges));
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j])
                throw std::invalid_argument("exponent_fit: duplicate delta values");

    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) { mx += xs[i]; my += ys[i]; }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    FitResult res;
    res.slope = sxy / sxx;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double pred = my + res.slope * (xs[i] - mx);
        res.max_residual = std::max(res.max_residual, std::abs(ys[i] - pred));
    }
    return res;
}

}  // namespace relturan
