#pragma once

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "core.hpp"
#include "index_tuple.hpp"
#include "report.hpp"
#include "svg.hpp"

namespace richmult {

namespace detail {

inline std::vector<int> parse_tuple_arg(const std::string& name, const std::string& s) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t comma = std::min(s.find(',', pos), s.size());
        const std::string piece = s.substr(pos, comma - pos);
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(piece, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (piece.empty() || used != piece.size())
            throw domain_error(errc::bad_request,
                               "--" + name + " expects comma separated integers, got '" +
                                   s + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

} // namespace detail

// Exit codes: 0 success (including multiplicity zero when the fixed point is
// not on the variety), 2 malformed input or usage error, 3 enumeration budget
// exceeded, 4 the two counting methods disagreed (an implementation bug).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"multiplicity of a Richardson variety at a torus fixed point"};
    app.name("richmult");
    int d = 0;
    int n = 0;
    int orbit_budget = 24;
    std::string alpha_s, beta_s, gamma_s;
    std::string mode_s = "symplectic";
    std::string method = "paths";
    std::string format = "text";
    std::string svg_path;
    std::string svg_content = "chains";
    bool list_families = false;
    bool timings = false;

    app.add_option("--d", d, "number of entries in each tuple")->required();
    app.add_option("--alpha", alpha_s, "lower bound tuple, comma separated")->required();
    app.add_option("--beta", beta_s, "fixed point tuple, comma separated")->required();
    app.add_option("--gamma", gamma_s, "upper bound tuple, comma separated")->required();
    app.add_option("--mode", mode_s, "symplectic (default) or ordinary")
        ->check(CLI::IsMember({"symplectic", "ordinary"}));
    app.add_option("--n", n, "ambient size in ordinary mode; defaults to 2d");
    app.add_option("--method", method, "paths (default), starsets, or both")
        ->check(CLI::IsMember({"paths", "starsets", "both"}));
    app.add_option("--format", format, "text (default) or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--list-families", list_families, "include the path family unions");
    app.add_option("--emit-svg", svg_path, "write a diagram to this file");
    app.add_option("--svg-content", svg_content, "chains (default), families, or all")
        ->check(CLI::IsMember({"chains", "families", "all"}));
    app.add_option("--orbit-budget", orbit_budget,
                   "largest reflection-orbit count the starsets method accepts");
    app.add_flag("--timings", timings, "include wall-clock timings in the output");

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("richmult");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& a : full) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const Mode mode = mode_s == "ordinary" ? Mode::ordinary : Mode::symplectic;
        ComputeRequest req;
        req.alpha = validate_tuple(detail::parse_tuple_arg("alpha", alpha_s), d, mode, n);
        req.beta = validate_tuple(detail::parse_tuple_arg("beta", beta_s), d, mode, n);
        req.gamma = validate_tuple(detail::parse_tuple_arg("gamma", gamma_s), d, mode, n);
        req.run_paths = method != "starsets";
        req.run_starsets = method != "paths";
        req.list_families = list_families;
        req.orbit_budget = orbit_budget;
        req.measure_timings = timings;

        const MultiplicityReport rep = compute_report(req);
        if (!rep.methods_agree()) {
            err << "internal error: counting methods disagree (paths="
                << *rep.paths_multiplicity << ", starsets=" << rep.starsets->count
                << "); this is a bug, please report the full command line\n";
            return 4;
        }
        std::string svg_doc;
        if (!svg_path.empty()) {
            SvgContent which = SvgContent::chains;
            if (svg_content == "families") which = SvgContent::families;
            if (svg_content == "all") which = SvgContent::all;
            svg_doc = render_svg(rep, which); // may reject the request; nothing printed yet
        }
        out << (format == "json" ? render_json(rep) : render_text(rep));
        if (!svg_path.empty()) {
            std::ofstream f(svg_path, std::ios::binary);
            f << svg_doc;
            f.flush();
            if (!f) {
                err << "error: cannot write " << svg_path << "\n";
                return 2;
            }
        }
        return 0;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace richmult
