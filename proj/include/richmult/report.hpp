#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "attach.hpp"
#include "core.hpp"
#include "grid.hpp"
#include "index_tuple.hpp"
#include "paths.hpp"
#include "starsets.hpp"

namespace richmult {

struct ComputeRequest {
    IndexTuple alpha;
    IndexTuple beta;
    IndexTuple gamma;
    bool run_paths = true;
    bool run_starsets = false;
    bool list_families = false;
    int orbit_budget = 24;
    bool measure_timings = false;
};

struct MultiplicityReport {
    IndexTuple alpha;
    IndexTuple beta;
    IndexTuple gamma;
    bool member = false; // the fixed point lies on the variety
    std::string reason;  // set when member is false
    std::optional<AttachedChains> chains;
    std::vector<Cell> anchors; // sorted union of both chains
    std::vector<PathEndpoints> endpoints; // parallel to anchors
    std::optional<unsigned long long> paths_multiplicity;
    std::optional<StarSetCount> starsets;
    std::optional<std::vector<PathFamily>> families;
    double paths_ms = 0.0;
    double starsets_ms = 0.0;
    bool show_timings = false;

    unsigned long long multiplicity() const {
        if (paths_multiplicity) return *paths_multiplicity;
        if (starsets) return starsets->count;
        return 0;
    }

    // false only when both methods ran and disagree (an implementation bug)
    bool methods_agree() const {
        if (!paths_multiplicity || !starsets) return true;
        return *paths_multiplicity == starsets->count;
    }
};

inline MultiplicityReport compute_report(const ComputeRequest& req) {
    require_same_shape(req.alpha, req.beta);
    require_same_shape(req.beta, req.gamma);
    MultiplicityReport rep;
    rep.alpha = req.alpha;
    rep.beta = req.beta;
    rep.gamma = req.gamma;
    rep.show_timings = req.measure_timings;
    rep.member = bruhat_leq(req.alpha, req.beta) && bruhat_leq(req.beta, req.gamma);
    if (!rep.member) {
        rep.reason = "fixed point not on variety";
        if (req.run_paths) rep.paths_multiplicity = 0;
        if (req.run_starsets) rep.starsets = StarSetCount{};
        return rep;
    }
    rep.chains = attach(req.alpha, req.beta, req.gamma);
    rep.anchors = rep.chains->t_alpha.cells;
    rep.anchors.insert(rep.anchors.end(), rep.chains->w_gamma.cells.begin(),
                       rep.chains->w_gamma.cells.end());
    std::sort(rep.anchors.begin(), rep.anchors.end());
    for (const Cell& r : rep.anchors)
        rep.endpoints.push_back(path_endpoints(r, rep.chains->grid));

    using clock = std::chrono::steady_clock;
    if (req.run_paths) {
        const auto t0 = clock::now();
        FamilyCount fc = count_path_families(*rep.chains, req.list_families);
        rep.paths_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        rep.paths_multiplicity = fc.count;
        if (req.list_families) rep.families = std::move(fc.families);
    }
    if (req.run_starsets) {
        const auto t0 = clock::now();
        rep.starsets = count_max_bounded_star_sets(*rep.chains, false, req.orbit_budget);
        rep.starsets_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    }
    return rep;
}

namespace detail {

inline nlohmann::ordered_json cell_json(const Cell& x) {
    return nlohmann::ordered_json::array({x.row, x.col});
}

inline nlohmann::ordered_json cells_json(const std::vector<Cell>& xs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Cell& x : xs) arr.push_back(cell_json(x));
    return arr;
}

} // namespace detail

inline nlohmann::ordered_json to_json(const MultiplicityReport& rep) {
    nlohmann::ordered_json j;
    j["d"] = rep.beta.d();
    j["mode"] = rep.beta.mode() == Mode::symplectic ? "symplectic" : "ordinary";
    j["alpha"] = rep.alpha.entries();
    j["beta"] = rep.beta.entries();
    j["gamma"] = rep.gamma.entries();
    if (!rep.member) j["reason"] = rep.reason;
    if (rep.chains) {
        j["t_alpha"] = detail::cells_json(rep.chains->t_alpha.cells);
        j["w_gamma"] = detail::cells_json(rep.chains->w_gamma.cells);
        nlohmann::ordered_json eps;
        for (size_t i = 0; i < rep.anchors.size(); ++i) {
            const Cell& r = rep.anchors[i];
            nlohmann::ordered_json ep;
            ep["floor"] = detail::cell_json(rep.endpoints[i].floor);
            ep["ceil"] = detail::cell_json(rep.endpoints[i].ceil);
            eps[std::to_string(r.row) + "," + std::to_string(r.col)] = std::move(ep);
        }
        j["endpoints"] = std::move(eps);
    }
    nlohmann::ordered_json results;
    if (rep.paths_multiplicity)
        results["paths"] = {{"multiplicity", *rep.paths_multiplicity}};
    if (rep.starsets)
        results["starsets"] = {{"multiplicity", rep.starsets->count},
                               {"max_degree", rep.starsets->max_degree}};
    j["results"] = std::move(results);
    if (rep.families) {
        nlohmann::ordered_json fams = nlohmann::ordered_json::array();
        for (const PathFamily& fam : *rep.families)
            fams.push_back(detail::cells_json(fam.union_cells()));
        j["families"] = std::move(fams);
    }
    nlohmann::ordered_json timings = nlohmann::ordered_json::object();
    if (rep.show_timings) {
        if (rep.paths_multiplicity) timings["paths"] = rep.paths_ms;
        if (rep.starsets) timings["starsets"] = rep.starsets_ms;
    }
    j["timings_ms"] = std::move(timings);
    return j;
}

inline std::string render_json(const MultiplicityReport& rep) {
    return to_json(rep).dump(2) + "\n";
}

inline std::string render_text(const MultiplicityReport& rep) {
    std::string out;
    auto line = [&out](const std::string& s) {
        out += s;
        out += '\n';
    };
    auto join = [](const std::vector<int>& xs) {
        std::string s;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(xs[i]);
        }
        return s;
    };
    auto cell_list = [](const std::vector<Cell>& xs) {
        std::string s;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ' ';
            s += to_string(xs[i]);
        }
        return s.empty() ? std::string("(none)") : s;
    };
    line("multiplicity: " + std::to_string(rep.multiplicity()));
    if (!rep.member) line("reason: " + rep.reason);
    line("d: " + std::to_string(rep.beta.d()));
    line(std::string("mode: ") +
         (rep.beta.mode() == Mode::symplectic ? "symplectic" : "ordinary"));
    if (rep.beta.mode() == Mode::ordinary)
        line("n: " + std::to_string(rep.beta.ambient()));
    line("alpha: " + join(rep.alpha.entries()));
    line("beta: " + join(rep.beta.entries()));
    line("gamma: " + join(rep.gamma.entries()));
    if (rep.chains) {
        line("lower chain: " + cell_list(rep.chains->t_alpha.cells));
        line("upper chain: " + cell_list(rep.chains->w_gamma.cells));
        line("endpoints:");
        for (size_t i = 0; i < rep.anchors.size(); ++i)
            line("  " + to_string(rep.anchors[i]) + ": floor " +
                 to_string(rep.endpoints[i].floor) + ", ceil " +
                 to_string(rep.endpoints[i].ceil));
    }
    if (rep.paths_multiplicity)
        line("method paths: multiplicity " + std::to_string(*rep.paths_multiplicity));
    if (rep.starsets)
        line("method starsets: multiplicity " + std::to_string(rep.starsets->count) +
             ", max degree " + std::to_string(rep.starsets->max_degree));
    if (rep.families) {
        line("families (" + std::to_string(rep.families->size()) + "):");
        for (size_t i = 0; i < rep.families->size(); ++i)
            line("  " + std::to_string(i + 1) + ": " +
                 cell_list((*rep.families)[i].union_cells()));
    }
    if (rep.show_timings) {
        std::string t = "timings:";
        if (rep.paths_multiplicity)
            t += " paths " + std::to_string(rep.paths_ms) + " ms";
        if (rep.starsets) {
            if (rep.paths_multiplicity) t += ",";
            t += " starsets " + std::to_string(rep.starsets_ms) + " ms";
        }
        line(t);
    }
    return out;
}

} // namespace richmult
