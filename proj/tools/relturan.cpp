#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "relturan/extraction.hpp"
#include "relturan/json_io.hpp"
#include "relturan/oracle.hpp"
#include "relturan/pattern_spec.hpp"
#include "relturan/rng.hpp"

using nlohmann::json;
using namespace relturan;

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitCertificate = 4;

struct Options {
    std::string host;
    std::string pattern;
    std::string algo = "rhom";
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 1;
    int trials = 8;
    long long budget_edges = 40;
    long long budget_copies = 1000000;
    bool deterministic = false;

    Budget budget() const { return Budget{budget_edges, budget_copies}; }

    json to_config() const {
        json c;
        c["host"] = host;
        c["pattern"] = pattern;
        c["algo"] = algo;
        c["seed"] = seed;
        c["trials"] = trials;
        c["budget_edges"] = budget_edges;
        c["budget_copies"] = budget_copies;
        c["deterministic"] = deterministic;
        if (const char* t = std::getenv("RELTURAN_THREADS")) c["threads"] = t;
        c["version"] = kVersion;
        return c;
    }
};

void add_common_flags(CLI::App* sub, Options& o) {
    sub->add_option("--host", o.host, "host spec or file:path");
    sub->add_option("--pattern", o.pattern, "pattern spec (K:..., TC:k/r, tcrange:r,l, ...)");
    sub->add_option("--algo", o.algo, "rhom|split|recursive|tc|del");
    sub->add_option("--seed", o.seed, "master seed");
    sub->add_option("--trials", o.trials, "trials per extraction");
    sub->add_option("--out", o.out, "output path (stdout when empty)");
    sub->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--budget-edges", o.budget_edges, "exact-oracle edge budget");
    sub->add_option("--budget-copies", o.budget_copies, "copy enumeration budget");
    sub->add_flag("--deterministic", o.deterministic, "single-worker deterministic mode");
}

json hyper_json(const Hypergraph& h) { return json::parse(to_json(h)); }

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::invalid_argument("cannot write output file: " + out);
    f << text << "\n";
}

json report_json(const ExtractionReport& rep) {
    json j;
    j["algorithm"] = rep.algorithm;
    j["seed"] = rep.seed;
    j["trials"] = rep.trials;
    j["yields"] = rep.yields;
    j["result"] = hyper_json(rep.result);
    j["guarantee"] = rep.guarantee ? json(rep.guarantee->str()) : json(nullptr);
    j["target_verified"] = rep.target_verified;
    j["note"] = rep.note;
    j["stats"] = rep.stats;
    return j;
}

// accepts either a bare hypergraph file or an extraction report with "result"
Hypergraph load_subgraph_flexible(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    json j = json::parse(text, nullptr, false);
    if (!j.is_discarded() && j.is_object() && j.contains("result"))
        return hypergraph_from_json(j["result"].dump());
    return hypergraph_from_json(text);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

int cmd_gen(const Options& o) {
    auto h = parse_host_spec(o.host);
    json j = hyper_json(h);
    j["config"] = o.to_config();
    emit(j.dump(), o.out);
    return kExitOk;
}

int cmd_extract(const Options& o) {
    auto host = parse_host_spec(o.host);
    auto family = parse_pattern_spec(o.pattern);
    auto rep = run_algorithm(o.algo, host, family, o.seed, o.trials, o.budget());
    json j = report_json(rep);
    j["config"] = o.to_config();
    j["host_edges"] = host.edge_count();
    emit(j.dump(), o.out);
    return kExitOk;
}

int cmd_exact(const Options& o) {
    auto host = parse_host_spec(o.host);
    auto family = parse_pattern_spec(o.pattern);
    auto res = exact_relative_turan(host, family, o.budget());
    json j;
    j["value"] = res.value;
    j["copies"] = res.copies;
    j["witness"] = hyper_json(res.witness);
    j["config"] = o.to_config();
    emit(j.dump(), o.out);
    return kExitOk;
}

int cmd_count(const Options& o) {
    auto host = parse_host_spec(o.host);
    auto family = parse_pattern_spec(o.pattern);
    json per = json::object();
    long long total = 0;
    for (const auto& m : family.members()) {
        long long c = count_copies(host, m, o.budget().max_copies);
        per[m.describe()] = c;
        total += c;
    }
    json j;
    j["counts"] = per;
    j["total"] = total;
    j["config"] = o.to_config();
    emit(j.dump(), o.out);
    return kExitOk;
}

int cmd_check(const Options& o, const std::string& subgraph_path) {
    auto host = parse_host_spec(o.host);
    auto sub = load_subgraph_flexible(subgraph_path);
    auto family = parse_pattern_spec(o.pattern);

    std::string violation;
    if (sub.uniformity() != host.uniformity()) {
        violation = "uniformity mismatch";
    } else if (sub.vertex_count() > host.vertex_count()) {
        violation = "subgraph has more vertices than host";
    } else {
        for (const auto& e : sub.edges()) {
            if (!host.has_edge(e)) {
                violation = "edge not present in host";
                break;
            }
        }
    }
    std::optional<CopyWitness> copy;
    if (violation.empty()) {
        copy = contains_copy(sub, family);
        if (copy) violation = "subgraph contains a forbidden pattern";
    }

    json j;
    j["ok"] = violation.empty();
    j["violation"] = violation;
    if (copy) j["copy_edges"] = copy->edge_indices;
    j["subgraph_edges"] = sub.edge_count();
    j["config"] = o.to_config();
    emit(j.dump(), o.out);
    return violation.empty() ? kExitOk : kExitCertificate;
}

int cmd_sweep(const Options& o, const std::string& delta_grid, const std::string& p_grid,
              int sweep_n, int sweep_r, int seeds_per_point, bool do_fit) {
    auto family = parse_pattern_spec(o.pattern);
    const int r = family.members().front().uniformity();
    const bool use_p = !p_grid.empty();
    if (use_p == !delta_grid.empty())
        throw std::invalid_argument("sweep needs exactly one of --delta-grid / --p-grid");

    struct Row {
        std::string x;
        long long host_edges;
        long long extracted;
        std::string exact_or_bound;
        std::uint64_t seed;
        double delta;
    };
    std::vector<Row> rows;
    const auto xs = split_list(use_p ? p_grid : delta_grid);
    for (std::size_t gi = 0; gi < xs.size(); ++gi) {
        for (int si = 0; si < seeds_per_point; ++si) {
            const std::uint64_t seed = derive_seed(o.seed, gi * 1000 + si);
            Hypergraph host = [&] {
                if (use_p)
                    return sample_random_hypergraph(sweep_n, sweep_r, std::stod(xs[gi]),
                                                    derive_seed(seed, 1));
                const int delta = std::stoi(xs[gi]);
                return complete_host(delta + 1, r);
            }();
            auto rep = run_algorithm(o.algo, host, family, seed, o.trials, o.budget());
            std::string bound;
            if (host.edge_count() <= o.budget().max_edges) {
                try {
                    bound = std::to_string(exact_relative_turan(host, family, o.budget()).value);
                } catch (const BudgetError&) {
                }
            } else if (rep.guarantee) {
                bound = rep.guarantee->str();
            }
            double delta_val = use_p ? std::stod(xs[gi]) : std::stod(xs[gi]);
            rows.push_back({xs[gi], host.edge_count(), rep.result.edge_count(), bound, seed,
                            delta_val});
        }
    }

    std::ostringstream csv;
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    csv << "# timestamp " << now << "\n";
    csv << "# config " << o.to_config().dump() << "\n";
    csv << "delta,host_edges,extracted,exact_or_bound,seed\n";
    for (const auto& row : rows)
        csv << row.x << "," << row.host_edges << "," << row.extracted << ","
            << row.exact_or_bound << "," << row.seed << "\n";

    if (do_fit) {
        // one point per grid value: mean yield over seeds
        std::vector<FitPoint> pts;
        for (std::size_t gi = 0; gi < xs.size(); ++gi) {
            double he = 0, ex = 0;
            int cnt = 0;
            for (const auto& row : rows) {
                if (row.x != xs[gi]) continue;
                he += static_cast<double>(row.host_edges);
                ex += static_cast<double>(row.extracted);
                ++cnt;
            }
            if (cnt > 0 && ex > 0)
                pts.push_back({std::stod(xs[gi]), he / cnt, ex / cnt});
        }
        auto fit = exponent_fit(pts);
        csv << "# slope " << fit.slope << " max_residual " << fit.max_residual << "\n";
    }
    emit(csv.str(), o.out);
    return kExitOk;
}

int cmd_exponents(const Options& o, const std::string& sizes) {
    auto nums = split_list(sizes);
    std::vector<int> s;
    for (const auto& t : nums) s.push_back(std::stoi(t));
    auto prof = exponents(SizeVector(s));
    json j;
    j["s"] = s;
    j["alpha"] = prof.alpha.str();
    j["beta"] = prof.beta.str();
    j["beta1"] = prof.beta1.str();
    j["beta2"] = prof.beta2.str();
    j["config"] = o.to_config();
    emit(j.dump(), o.out);
    return kExitOk;
}

int cmd_fit(const Options& o, const std::string& in_path) {
    std::ifstream in(in_path);
    if (!in) throw std::invalid_argument("cannot open CSV file: " + in_path);
    // rows sharing a delta (several seeds) are averaged into one point
    std::vector<double> order;
    std::map<double, std::pair<std::pair<double, double>, int>> acc;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("delta", 0) == 0) continue;
        auto cols = split_list(line);
        if (cols.size() < 3) throw std::invalid_argument("bad CSV row: " + line);
        const double d = std::stod(cols[0]);
        if (!acc.count(d)) order.push_back(d);
        auto& slot = acc[d];
        slot.first.first += std::stod(cols[1]);
        slot.first.second += std::stod(cols[2]);
        slot.second += 1;
    }
    std::vector<FitPoint> pts;
    for (double d : order) {
        const auto& slot = acc[d];
        if (slot.first.second > 0)
            pts.push_back({d, slot.first.first / slot.second, slot.first.second / slot.second});
    }
    auto fit = exponent_fit(pts);
    json j;
    j["slope"] = fit.slope;
    j["max_residual"] = fit.max_residual;
    j["points"] = pts.size();
    j["config"] = o.to_config();
    emit(j.dump(), o.out);
    return kExitOk;
}

int cmd_supersat(const Options& o, int n, const std::string& sizes,
                 const std::string& subgraph_path) {
    auto nums = split_list(sizes);
    std::vector<int> sv;
    for (const auto& t : nums) sv.push_back(std::stoi(t));
    SizeVector s(sv);
    auto host = unbalanced_partite_host(n, s);
    auto sub = subgraph_path.empty() ? host : load_subgraph_flexible(subgraph_path);
    auto rep = supersaturation_check(host, sub, s, Rational(1), o.budget());
    json j;
    j["copy_count"] = rep.copy_count;
    j["threshold_bound"] = rep.threshold_bound;
    j["predicted_count"] = rep.predicted_count;
    j["above_threshold"] = rep.above_threshold;
    j["illustrative_constant"] = rep.illustrative_constant;
    j["config"] = o.to_config();
    emit(j.dump(), o.out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relative Turan experiment driver"};
    app.require_subcommand(1);
    // keys live in a [subcommand] section, e.g. [exact] host="..."
    app.set_config("--config");

    Options o;
    std::string subgraph_path, delta_grid, p_grid, sizes, in_path;
    int sweep_n = 64, sweep_r = 2, seeds_per_point = 1, supersat_n = 2;
    bool do_fit = false;

    auto* gen = app.add_subcommand("gen", "generate a host hypergraph");
    add_common_flags(gen, o);
    auto* extract = app.add_subcommand("extract", "extract a pattern-free subgraph");
    add_common_flags(extract, o);
    auto* exact = app.add_subcommand("exact", "exact relative Turan number");
    add_common_flags(exact, o);
    auto* count = app.add_subcommand("count", "count pattern copies in a host");
    add_common_flags(count, o);
    auto* check = app.add_subcommand("check", "verify a pattern-free subgraph certificate");
    add_common_flags(check, o);
    check->add_option("--subgraph", subgraph_path, "subgraph or report file")->required();
    auto* sweep = app.add_subcommand("sweep", "run a parameter grid, write CSV");
    add_common_flags(sweep, o);
    sweep->add_option("--delta-grid", delta_grid, "comma list of Delta; hosts K_{Delta+1}");
    sweep->add_option("--p-grid", p_grid, "comma list of p; hosts H^r_{n,p}");
    sweep->add_option("--n", sweep_n, "vertex count for --p-grid hosts");
    sweep->add_option("--r", sweep_r, "uniformity for --p-grid hosts");
    sweep->add_option("--seeds", seeds_per_point, "seeds per grid point");
    sweep->add_flag("--fit", do_fit, "append fitted slope");
    auto* expn = app.add_subcommand("exponents", "derived exponents of a size vector");
    add_common_flags(expn, o);
    expn->add_option("--sizes", sizes, "comma list s_1,...,s_r")->required();
    auto* fit = app.add_subcommand("fit", "least-squares exponent fit from CSV");
    add_common_flags(fit, o);
    fit->add_option("--in", in_path, "sweep CSV path")->required();
    auto* supersat = app.add_subcommand("supersat", "supersaturation comparison");
    add_common_flags(supersat, o);
    supersat->add_option("--n", supersat_n, "host scale n");
    supersat->add_option("--sizes", sizes, "comma list s_1,...,s_r")->required();
    supersat->add_option("--subgraph", subgraph_path, "subgraph file (defaults to the host)");

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return cmd_gen(o);
        if (extract->parsed()) return cmd_extract(o);
        if (exact->parsed()) return cmd_exact(o);
        if (count->parsed()) return cmd_count(o);
        if (check->parsed()) return cmd_check(o, subgraph_path);
        if (sweep->parsed())
            return cmd_sweep(o, delta_grid, p_grid, sweep_n, sweep_r, seeds_per_point, do_fit);
        if (expn->parsed()) return cmd_exponents(o, sizes);
        if (fit->parsed()) return cmd_fit(o, in_path);
        if (supersat->parsed()) return cmd_supersat(o, supersat_n, sizes, subgraph_path);
        return kExitInput;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    } catch (const BudgetError& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
