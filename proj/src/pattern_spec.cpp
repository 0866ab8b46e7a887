#include "relturan/pattern_spec.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "relturan/constructions.hpp"
#include "relturan/json_io.hpp"

namespace relturan {

namespace {

std::vector<long long> parse_int_list(const std::string& s) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        const std::string tok = s.substr(pos, next - pos);
        if (tok.empty()) throw std::invalid_argument("empty number in list: " + s);
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad number: " + tok);
        out.push_back(v);
        pos = next + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty list: " + s);
    return out;
}

}  // namespace

PatternFamily parse_pattern_spec(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("empty pattern spec");

    if (spec.size() > 4 && spec.substr(0, 3) == "pi(" && spec.back() == ')')
        return projection_family(parse_pattern_spec(spec.substr(3, spec.size() - 4)));
    if (spec.size() > 6 && spec.substr(0, 5) == "hiso(" && spec.back() == ')')
        return local_isomorphism_images(parse_pattern_spec(spec.substr(5, spec.size() - 6)));

    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("unrecognized pattern spec: " + spec);
    const std::string head = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);

    if (head == "K") {
        auto sizes = parse_int_list(rest);
        std::vector<int> s(sizes.begin(), sizes.end());
        return PatternFamily({Pattern::complete_partite(s)});
    }
    if (head == "TC") {
        const std::size_t slash = rest.find('/');
        if (slash == std::string::npos)
            throw std::invalid_argument("tight cycle spec needs k/r: " + spec);
        const int k = std::stoi(rest.substr(0, slash));
        const int r = std::stoi(rest.substr(slash + 1));
        return PatternFamily({Pattern::tight_cycle(k, r)});
    }
    if (head == "file")
        return PatternFamily({Pattern::general(load_hypergraph(rest))});
    if (head == "tcrange") {
        auto nums = parse_int_list(rest);
        if (nums.size() != 2)
            throw std::invalid_argument("tcrange spec needs r,l: " + spec);
        return PatternFamily::tight_cycle_range(static_cast<int>(nums[0]),
                                                static_cast<int>(nums[1]));
    }
    throw std::invalid_argument("unrecognized pattern spec: " + spec);
}

Hypergraph parse_host_spec(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("empty host spec");
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("unrecognized host spec: " + spec);
    const std::string head = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);

    if (head == "file") return load_hypergraph(rest);

    if (head == "random") {
        // random:n,r,p,seed
        std::vector<std::string> toks;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t next = rest.find(',', pos);
            if (next == std::string::npos) next = rest.size();
            toks.push_back(rest.substr(pos, next - pos));
            pos = next + 1;
        }
        if (toks.size() != 4) throw std::invalid_argument("host spec usage: random:n,r,p,seed");
        return sample_random_hypergraph(std::stoi(toks[0]), std::stoi(toks[1]),
                                        std::stod(toks[2]),
                                        static_cast<std::uint64_t>(std::stoull(toks[3])));
    }

    auto nums = parse_int_list(rest);
    auto need = [&](std::size_t k, const char* usage) {
        if (nums.size() != k)
            throw std::invalid_argument(std::string("host spec usage: ") + usage);
    };
    auto tail_sizes = [&] {
        return SizeVector(std::vector<int>(nums.begin() + 1, nums.end()));
    };

    if (head == "complete") {
        need(2, "complete:n,r");
        return complete_host(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
    }
    if (head == "layered") {
        if (nums.size() < 3) throw std::invalid_argument("host spec usage: layered:n,s1,...,sr");
        return layered_host(static_cast<int>(nums[0]), tail_sizes());
    }
    if (head == "partite") {
        if (nums.size() < 3) throw std::invalid_argument("host spec usage: partite:n,s1,...,sr");
        return unbalanced_partite_host(static_cast<int>(nums[0]), tail_sizes());
    }
    if (head == "pg") {
        need(1, "pg:q");
        return projective_plane_incidence(static_cast<int>(nums[0]));
    }
    if (head == "gq") {
        need(1, "gq:q");
        return generalized_quadrangle_incidence(static_cast<int>(nums[0]));
    }
    if (head == "tcfree") {
        need(3, "tcfree:q,r,m");
        return tight_cycle_free_host(projective_plane_incidence(static_cast<int>(nums[0])),
                                     static_cast<int>(nums[1]), static_cast<int>(nums[2]));
    }
    if (head == "kpartite") {
        const int r = static_cast<int>(nums.size());
        if (r < 2) throw std::invalid_argument("host spec usage: kpartite:s1,...,sr");
        Partition parts(r);
        int n = 0;
        for (int i = 0; i < r; ++i) {
            if (nums[i] < 1) throw std::invalid_argument("kpartite: part sizes must be >= 1");
            for (long long j = 0; j < nums[i]; ++j) parts[i].push_back(n++);
        }
        std::vector<Edge> edges;
        std::function<void(int, Edge&)> rec = [&](int i, Edge& cur) {
            if (i == r) {
                Edge e = cur;
                std::sort(e.begin(), e.end());
                edges.push_back(std::move(e));
                return;
            }
            for (int v : parts[i]) {
                cur.push_back(v);
                rec(i + 1, cur);
                cur.pop_back();
            }
        };
        Edge cur;
        rec(0, cur);
        return Hypergraph(r, n, std::move(edges), parts);
    }
    if (head == "cycle") {
        need(1, "cycle:n");
        const int n = static_cast<int>(nums[0]);
        if (n < 3) throw std::invalid_argument("cycle:n needs n >= 3");
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i) {
            Edge e{i, (i + 1) % n};
            std::sort(e.begin(), e.end());
            edges.push_back(std::move(e));
        }
        return Hypergraph(2, n, std::move(edges));
    }
    throw std::invalid_argument("unrecognized host spec: " + spec);
}

}  // namespace relturan
