#include "gmod/tuner.hpp"

#include <sstream>

#include <json.hpp>

namespace gmod {

ConfigGrid ConfigGrid::full() {
    return ConfigGrid{
        {CeLowerBound::none, CeLowerBound::p3_packing},
        {CeReduction::none, CeReduction::critical_clique},
        {1, 2, 4},
        {CeBranchOrder::min_id, CeBranchOrder::max_conflict},
    };
}

std::vector<CeConfig> enumerate_configs(const ConfigGrid& grid, std::uint64_t seed) {
    if (grid.lower_bounds.empty() || grid.reductions.empty() || grid.reduction_periods.empty() ||
        grid.branch_orders.empty())
        throw std::invalid_argument("config grid has an empty dimension");
    std::vector<CeConfig> out;
    for (CeLowerBound lb : grid.lower_bounds)
        for (CeReduction red : grid.reductions)
            for (int period : grid.reduction_periods) {
                if (period < 1)
                    throw std::invalid_argument("reduction period must be positive");
                for (CeBranchOrder order : grid.branch_orders)
                    out.push_back(CeConfig{lb, red, period, order, seed});
            }
    return out;
}

const char* to_string(CeLowerBound b) {
    return b == CeLowerBound::none ? "none" : "p3_packing";
}
const char* to_string(CeReduction r) {
    return r == CeReduction::none ? "none" : "critical_clique";
}
const char* to_string(CeBranchOrder o) {
    return o == CeBranchOrder::min_id ? "min_id" : "max_conflict";
}

std::string corpus_fingerprint(const std::vector<TuneInstance>& corpus) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001B3ULL;
        }
    };
    for (const TuneInstance& inst : corpus) {
        std::ostringstream os;
        os << inst.id << '\n' << inst.graph.num_vertices() << ' ' << inst.graph.num_edges() << '\n';
        for (const Edge& e : inst.graph.edges())
            os << e.u << ' ' << e.v << '\n';
        feed(os.str());
    }
    std::ostringstream out;
    out << "fnv1a:" << std::hex << h;
    return out.str();
}

TuneReport tune(const std::vector<TuneInstance>& corpus, const ConfigGrid& grid,
                std::chrono::milliseconds budget_per_run, std::uint64_t seed) {
    if (corpus.empty())
        throw std::invalid_argument("corpus must not be empty");
    TuneReport report;
    report.seed = seed;
    report.corpus_fingerprint = corpus_fingerprint(corpus);
    report.configs = enumerate_configs(grid, seed);
    report.total_nodes.assign(report.configs.size(), 0);

    std::vector<int> reference_cost(corpus.size(), -1);
    for (int ci = 0; ci < static_cast<int>(report.configs.size()); ++ci) {
        for (int ii = 0; ii < static_cast<int>(corpus.size()); ++ii) {
            const Graph& g = corpus[ii].graph;
            int kmax = g.num_vertices() * (g.num_vertices() - 1) / 2;
            CeSolveStats stats;
            auto start = std::chrono::steady_clock::now();
            auto edits = ce_solve(g, kmax, report.configs[ci], &stats, start + budget_per_run);
            auto stop = std::chrono::steady_clock::now();

            TuneRun run;
            run.config_index = ci;
            run.instance_id = corpus[ii].id;
            run.timed_out = stats.timed_out;
            run.nodes = stats.timed_out ? kTimeoutPenaltyNodes : stats.nodes;
            run.opt_cost = stats.timed_out || !edits ? -1 : edits->size();
            run.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
            report.total_nodes[ci] += run.nodes;
            report.runs.push_back(run);

            // configurations must never change the answer
            if (!stats.timed_out && edits) {
                if (reference_cost[ii] == -1)
                    reference_cost[ii] = edits->size();
                else if (reference_cost[ii] != edits->size())
                    throw std::logic_error("configurations disagree on instance " +
                                           corpus[ii].id);
            }
        }
    }
    report.winner = 0;
    for (int ci = 1; ci < static_cast<int>(report.configs.size()); ++ci)
        if (report.total_nodes[ci] < report.total_nodes[report.winner])
            report.winner = ci;
    return report;
}

std::string TuneReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["seed"] = seed;
    j["corpus_fingerprint"] = corpus_fingerprint;
    j["grid"] = nlohmann::ordered_json::array();
    for (const CeConfig& c : configs) {
        j["grid"].push_back({{"lower_bound", to_string(c.lower_bound)},
                             {"reduction", to_string(c.reduction)},
                             {"reduction_period", c.reduction_period},
                             {"branch_order", to_string(c.branch_order)},
                             {"seed", c.seed}});
    }
    j["runs"] = nlohmann::ordered_json::array();
    for (const TuneRun& r : runs) {
        j["runs"].push_back({{"config", r.config_index},
                             {"instance", r.instance_id},
                             {"nodes", r.nodes},
                             {"timeout", r.timed_out},
                             {"opt", r.opt_cost}});
    }
    j["total_nodes"] = total_nodes;
    j["winner"] = winner;
    return j.dump(2) + "\n";
}

} // namespace gmod
