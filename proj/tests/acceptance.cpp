// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria mix exact small-instance checks with randomized
// property checks over a fixed suite of hosts, patterns, and algorithms.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "relturan/extraction.hpp"
#include "relturan/oracle.hpp"
#include "relturan/pattern_spec.hpp"

using namespace relturan;

namespace {

int g_failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)),
          start_(std::chrono::steady_clock::now()) {}

    void require(bool ok, const std::string& detail) {
        if (!ok) {
            failed_ = true;
            details_.push_back(detail);
        }
    }

    ~Criterion() {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        char line[256];
        std::snprintf(line, sizeof(line), "[%s] criterion %2d: %s (%.1fs)",
                      failed_ ? "FAIL" : "PASS", number_, title_.c_str(), secs);
        std::cout << line << "\n";
        for (const auto& d : details_) std::cout << "       " << d << "\n";
        if (failed_) ++g_failures;
    }

private:
    int number_;
    std::string title_;
    bool failed_ = false;
    std::vector<std::string> details_;
    std::chrono::steady_clock::time_point start_;
};

// the shared randomized suite: every run feeds criterion 1 (freeness),
// criterion 4 reuses the hosts, criterion 12 compares against the exact
// oracle whenever it fits in budget
struct SuiteStats {
    long long runs = 0;
    long long free_failures = 0;
    long long exact_comparisons = 0;
    long long exact_violations = 0;
};

bool subgraph_of(const Hypergraph& sub, const Hypergraph& host) {
    if (sub.uniformity() != host.uniformity()) return false;
    for (const auto& e : sub.edges())
        if (!host.has_edge(e)) return false;
    return true;
}

void suite_run(SuiteStats& st, const std::string& algo, const Hypergraph& host,
               const PatternFamily& family, std::uint64_t seed, int trials,
               long long exact_value) {
    auto rep = run_algorithm(algo, host, family, seed, trials);
    ++st.runs;
    if (!subgraph_of(rep.result, host) || !is_family_free(rep.result, family))
        ++st.free_failures;
    if (exact_value >= 0) {
        ++st.exact_comparisons;
        if (rep.result.edge_count() > exact_value) ++st.exact_violations;
    }
}

// exact value when the oracle fits the default budget, else -1
long long try_exact(const Hypergraph& host, const PatternFamily& family) {
    try {
        return exact_relative_turan(host, family).value;
    } catch (const BudgetError&) {
        return -1;
    }
}

// reference oracle: largest k such that some k-subset of edges is family-free
long long naive_relative_turan(const Hypergraph& h, const PatternFamily& family) {
    const long long m = h.edge_count();
    for (long long k = m; k >= 0; --k) {
        std::vector<int> idx(k);
        for (long long i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
        while (true) {
            if (is_family_free(induced_subgraph(h, idx), family)) return k;
            long long i = k - 1;
            while (i >= 0 && idx[i] == m - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (long long j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return 0;
}

int shell(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

int main() {
    SuiteStats st;

    const auto k22 = PatternFamily({Pattern::complete_partite({2, 2})});
    const auto k222 = PatternFamily({Pattern::complete_partite({2, 2, 2})});
    const auto tc32 = PatternFamily::tight_cycle_range(3, 2);
    const auto tc22 = PatternFamily::tight_cycle_range(2, 2);

    const auto k9 = complete_host(9, 2);
    const auto k10 = complete_host(10, 2);
    const auto k12 = complete_host(12, 2);
    const auto k8_3 = complete_host(8, 3);
    const auto layered = layered_host(2, SizeVector({2, 2, 2}));
    const auto tcfree = tight_cycle_free_host(projective_plane_incidence(2), 3, 7);

    {
        Criterion c(1, "freeness invariant over the randomized extraction suite");

        const long long ex_k9 = try_exact(k9, k22);
        c.require(ex_k9 == 13, "ex(K_9, C_4) should be 13");

        for (std::uint64_t seed = 1; seed <= 60; ++seed) {
            for (const char* algo : {"rhom", "recursive", "del"}) {
                suite_run(st, algo, k9, k22, seed, 3, ex_k9);
                suite_run(st, algo, k12, k22, seed, 3, -1);
            }
            auto rnd2 = sample_random_hypergraph(16, 2, 0.4, 9000 + seed);
            const long long ex_rnd2 =
                rnd2.edge_count() <= 40 ? try_exact(rnd2, k22) : -1;
            for (const char* algo : {"rhom", "recursive", "del"})
                suite_run(st, algo, rnd2, k22, seed, 3, ex_rnd2);
            suite_run(st, "tc", k10, tc22, seed, 3, -1);
        }

        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            for (const char* algo : {"rhom", "split", "recursive", "del"})
                suite_run(st, algo, k8_3, k222, seed, 2, -1);
            suite_run(st, "tc", k8_3, tc32, seed, 2, -1);

            for (const char* algo : {"rhom", "split", "recursive"})
                suite_run(st, algo, layered, k222, seed, 2, -1);
            suite_run(st, "tc", layered, tc32, seed, 2, -1);

            suite_run(st, "rhom", tcfree, k222, seed, 2, -1);
            suite_run(st, "tc", tcfree, tc32, seed, 2, -1);
            suite_run(st, "del", tcfree, tc32, seed, 2, -1);

            auto rnd3 = sample_random_hypergraph(10, 3, 0.15, 9500 + seed);
            const long long ex_rnd3 =
                rnd3.edge_count() <= 40 ? try_exact(rnd3, tc32) : -1;
            suite_run(st, "rhom", rnd3, k222, seed, 2, -1);
            suite_run(st, "del", rnd3, tc32, seed, 2, ex_rnd3);
            suite_run(st, "tc", rnd3, tc32, seed, 2, ex_rnd3);
        }

        c.require(st.runs >= 1000,
                  "suite has only " + std::to_string(st.runs) + " runs");
        c.require(st.free_failures == 0,
                  std::to_string(st.free_failures) + " runs produced a non-free subgraph");

        // one extraction verified through the external checker as well
        const char* cli = std::getenv("RELTURAN_CLI");
        c.require(cli != nullptr, "RELTURAN_CLI not set");
        if (cli) {
            const std::string rep = "/tmp/acceptance_rep.json";
            const std::string base = std::string(cli);
            c.require(shell(base + " extract --host complete:9,2 --pattern K:2,2"
                                   " --algo recursive --seed 3 --trials 4 --out " +
                            rep + " >/dev/null") == 0,
                      "CLI extract failed");
            c.require(shell(base + " check --host complete:9,2 --subgraph " + rep +
                            " --pattern K:2,2 >/dev/null") == 0,
                      "CLI check rejected an extraction report");
            std::remove(rep.c_str());
        }
    }

    {
        Criterion c(2, "exact oracle agrees with subset enumeration");
        long long checked = 0;
        std::vector<PatternFamily> fams2 = {
            k22, PatternFamily({Pattern::tight_cycle(3, 2)}),
            PatternFamily({Pattern::tight_cycle(3, 2), Pattern::tight_cycle(4, 2)})};
        PatternFamily tc43({Pattern::tight_cycle(4, 3)});
        for (int seed = 0; seed < 70 && checked < 170; ++seed) {
            auto h = sample_random_hypergraph(6, 2, 0.55, 2000 + seed);
            if (h.edge_count() > 12) continue;
            for (const auto& fam : fams2) {
                const long long exact = exact_relative_turan(h, fam).value;
                c.require(exact == naive_relative_turan(h, fam),
                          "mismatch at 2-uniform seed " + std::to_string(seed));
                // extraction never beats exact on the same instance
                auto rep = first_moment_deletion(h, fam, 3000 + seed);
                if (rep.result.edge_count() > exact) ++st.exact_violations;
                ++st.exact_comparisons;
                ++checked;
            }
        }
        for (int seed = 0; seed < 70 && checked < 220; ++seed) {
            auto h = sample_random_hypergraph(6, 3, 0.45, 2500 + seed);
            if (h.edge_count() > 12) continue;
            const long long exact = exact_relative_turan(h, tc43).value;
            c.require(exact == naive_relative_turan(h, tc43),
                      "mismatch at 3-uniform seed " + std::to_string(seed));
            ++checked;
        }
        c.require(checked >= 200, "only " + std::to_string(checked) + " instances checked");
    }

    {
        Criterion c(3, "known small exact values");
        c.require(exact_relative_turan(parse_host_spec("kpartite:3,3"), k22).value == 6,
                  "ex(K_{3,3}, K_{2,2}) != 6");
        c.require(exact_relative_turan(parse_host_spec("kpartite:4,4"), k22).value == 9,
                  "ex(K_{4,4}, K_{2,2}) != 9");
        PatternFamily c3({Pattern::tight_cycle(3, 2)});
        c.require(exact_relative_turan(complete_host(4, 2), c3).value == 4,
                  "ex(K_4, C_3) != 4");
    }

    {
        Criterion c(4, "r-partite subsample meets the ceil(r^-r e(H)) bound");
        int idx = 0;
        for (const Hypergraph* h : {&k9, &k10, &k12, &k8_3, &layered, &tcfree}) {
            auto res = random_r_partite_subgraph(*h, 50 + idx, 1000);
            c.require(res.met_bound, "host " + std::to_string(idx) + " missed the bound");
            ++idx;
        }
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            auto h2 = sample_random_hypergraph(16, 2, 0.4, 9000 + seed);
            auto h3 = sample_random_hypergraph(10, 3, 0.15, 9500 + seed);
            c.require(random_r_partite_subgraph(h2, seed, 1000).met_bound,
                      "random 2-uniform host missed the bound");
            c.require(random_r_partite_subgraph(h3, seed, 1000).met_bound,
                      "random 3-uniform host missed the bound");
        }
    }

    {
        Criterion c(5, "random homomorphism Monte-Carlo mean meets the expectation bound");
        auto host = parse_host_spec("cycle:100");  // max codegree 2
        auto target = build_target_J(k22, 2);
        c.require(target.graph.vertex_count() == 16, "target should sit on 2 r^2 D vertices");
        auto rep = random_hom_extract(host, target.graph, k22, 500, 77);
        c.require(rep.guarantee.has_value(), "no certified bound emitted");
        if (rep.guarantee) {
            const double mean =
                std::accumulate(rep.yields.begin(), rep.yields.end(), 0.0) / 500.0;
            const double bound = rep.guarantee->to_double();
            c.require(mean >= 0.9 * bound,
                      "mean " + std::to_string(mean) + " below 0.9 x " + std::to_string(bound));
        }
    }

    {
        Criterion c(6, "layered and unbalanced-partite construction exactness");
        for (long long n : {2, 3}) {
            auto h = layered_host(static_cast<int>(n), SizeVector({2, 2, 2}));
            long long n6 = 1, n10 = 1;
            for (int i = 0; i < 6; ++i) n6 *= n;
            for (int i = 0; i < 10; ++i) n10 *= n;
            c.require(h.edge_count() == n10, "layered edge count != n^10");
            for (long long d : h.vertex_degrees())
                if (d != n6) c.require(false, "layered host not n^6-regular");
        }
        for (long long n : {2, 3}) {
            SizeVector s({2, 2, 2});
            auto h = unbalanced_partite_host(static_cast<int>(n), s);
            const auto& parts = *h.partition();
            // part sizes (n^{a_2}, n^{a_2}, ..., n^{a_r})
            for (int i = 1; i <= 3; ++i) {
                long long expect = 1;
                for (int j = 0; j < s.a_i(std::max(i, 2)); ++j) expect *= n;
                c.require(static_cast<long long>(parts[i - 1].size()) == expect,
                          "part size mismatch at n=" + std::to_string(n));
            }
        }
    }

    {
        Criterion c(7, "incidence geometry bases");
        auto pg2 = projective_plane_incidence(2);
        c.require(pg2.vertex_count() == 14 && pg2.edge_count() == 21, "PG(2) size wrong");
        for (long long d : pg2.vertex_degrees())
            if (d != 3) c.require(false, "PG(2) not 3-regular");
        c.require(girth(pg2) == 6, "PG(2) girth != 6");

        auto gq2 = generalized_quadrangle_incidence(2);
        c.require(gq2.vertex_count() == 30 && gq2.edge_count() == 45, "GQ(2) size wrong");
        for (long long d : gq2.vertex_degrees())
            if (d != 3) c.require(false, "GQ(2) not 3-regular");
        c.require(girth(gq2) == 8, "GQ(2) girth != 8");

        auto c4 = Pattern::complete_partite({2, 2});
        auto c6 = Pattern::tight_cycle(6, 2);
        for (int q : {2, 3, 5, 7})
            c.require(count_copies(projective_plane_incidence(q), c4) == 0,
                      "PG(" + std::to_string(q) + ") contains a C_4");
        for (int q : {2, 3, 5}) {
            auto gq = generalized_quadrangle_incidence(q);
            c.require(count_copies(gq, c4) == 0, "GQ(" + std::to_string(q) + ") contains a C_4");
            c.require(count_copies(gq, c6) == 0, "GQ(" + std::to_string(q) + ") contains a C_6");
        }
    }

    {
        Criterion c(8, "tight-cycle-free lift has no short tight cycle");
        for (int k : {4, 5, 6})
            c.require(count_copies(tcfree, Pattern::tight_cycle(k, 3)) == 0,
                      "lift contains TC_" + std::to_string(k) + "^3");
    }

    {
        Criterion c(9, "pattern theory identities");
        auto closure = local_isomorphism_images(Pattern::complete_partite({2, 2}));
        c.require(closure.size() == 1 &&
                      are_isomorphic(closure.members()[0].realized(),
                                     Pattern::complete_partite({2, 2}).realized()),
                  "closure of K_{2,2} should be itself");

        auto pi222 = projection_family(Pattern::complete_partite({2, 2, 2}));
        c.require(pi222.size() == 1 &&
                      are_isomorphic(pi222.members()[0].realized(),
                                     Pattern::complete_partite({2, 2}).realized()),
                  "projection of K_{2,2,2} should be {K_{2,2}}");

        auto pi_tc63 = projection_family(Pattern::tight_cycle(6, 3));
        c.require(pi_tc63.size() == 1 &&
                      are_isomorphic(pi_tc63.members()[0].realized(),
                                     Pattern::tight_cycle(4, 2).realized()),
                  "projection of TC_6^3 should be {C_4}");

        std::vector<Pattern> tight_suite = {
            Pattern::complete_partite({2, 2}), Pattern::complete_partite({2, 2, 2}),
            Pattern::complete_partite({2, 2, 3}), Pattern::tight_cycle(6, 3),
            Pattern::tight_cycle(4, 2)};
        for (const auto& f : tight_suite) {
            auto tc = is_tightly_connected(f);
            c.require(tc.tightly_connected, "suite pattern not tightly connected");
            c.require(enumerate_r_partitions(f).size() == 1,
                      "tightly connected pattern lacks a unique r-partition");
        }
    }

    {
        Criterion c(10, "exponent formulas");
        auto p2 = exponents(SizeVector({2, 2}));
        c.require(p2.alpha == Rational(1, 2) && p2.beta == Rational(1, 2) &&
                      p2.beta1 == Rational(2, 3) && p2.beta2 == Rational(1, 3),
                  "exponents((2,2)) wrong");
        auto p3 = exponents(SizeVector({2, 2, 2}));
        c.require(p3.alpha == Rational(1, 8) && p3.beta == Rational(1, 6) &&
                      p3.beta1 == Rational(3, 7) && p3.beta2 == Rational(5, 21),
                  "exponents((2,2,2)) wrong");
        for (int s1 = 2; s1 <= 4; ++s1)
            for (int s2 = s1; s2 <= 4; ++s2) {
                c.require(exponents(SizeVector({s1, s2})).alpha ==
                              exponents(SizeVector({s1, s2})).beta,
                          "alpha != beta at r=2");
                for (int s3 = s2; s3 <= 4; ++s3) {
                    auto p = exponents(SizeVector({s1, s2, s3}));
                    c.require(p.alpha < p.beta, "alpha !< beta at r=3");
                }
            }
    }

    {
        Criterion c(11, "empirical exponent of the recursive pipeline");
        std::vector<FitPoint> pts;
        for (int delta : {16, 32, 64, 128, 256}) {
            auto host = complete_host(delta + 1, 2);
            auto rep = recursive_extract(host, SizeVector({2, 2}), 9, 32);
            // mean yield, not the per-run maximum: the max of 32 trials is
            // biased upward on small hosts, which distorts the slope
            const double mean =
                std::accumulate(rep.yields.begin(), rep.yields.end(), 0.0) /
                static_cast<double>(rep.yields.size());
            pts.push_back({static_cast<double>(delta),
                           static_cast<double>(host.edge_count()), mean});
        }
        auto fit = exponent_fit(pts);
        std::ostringstream msg;
        msg << "slope " << fit.slope << " outside [0.35, 0.65]";
        c.require(fit.slope >= 0.35 && fit.slope <= 0.65, msg.str());
    }

    {
        Criterion c(12, "extraction never beats the exact oracle");
        c.require(st.exact_comparisons >= 200,
                  "only " + std::to_string(st.exact_comparisons) + " comparisons ran");
        c.require(st.exact_violations == 0,
                  std::to_string(st.exact_violations) + " extraction runs exceeded exact");
    }

    std::cout << (g_failures == 0 ? "all criteria passed"
                                  : std::to_string(g_failures) + " criteria failed")
              << "\n";
    return g_failures == 0 ? 0 : 1;
}
