#pragma once

#include <string>
#include <vector>

#include "core.hpp"
#include "grid.hpp"
#include "report.hpp"

namespace richmult {

enum class SvgContent { chains, families, all };

namespace detail {

// centers: column j (1-based) at x = 40j, row i (1-based, rows ascending
// top-down) at y = 40i
inline int svg_x(const Grid& g, int col_value) { return 40 * (g.col_index(col_value) + 1); }
inline int svg_y(const Grid& g, int row_value) { return 40 * (g.row_index(row_value) + 1); }

inline std::string svg_points(const Grid& g, const std::vector<Cell>& cells) {
    std::string s;
    for (const Cell& x : cells) {
        if (!s.empty()) s += ' ';
        s += std::to_string(svg_x(g, x.col)) + "," + std::to_string(svg_y(g, x.row));
    }
    if (cells.size() == 1) s += " " + s; // zero-length segment, shown by the round cap
    return s;
}

inline const char* family_color(size_t i) {
    static const char* palette[6] = {"#1f77b4", "#d62728", "#2ca02c",
                                     "#9467bd", "#ff7f0e", "#8c564b"};
    return palette[i % 6];
}

} // namespace detail

// Deterministic standalone diagram of the grid: dots with (r,c) labels, the
// dashed boundary between the sign regions, optionally the attached chain
// cells and the path families.  Integer coordinates only, so repeated runs
// are byte-identical.
inline std::string render_svg(const MultiplicityReport& rep, SvgContent which) {
    if (which != SvgContent::chains && !rep.families)
        throw domain_error(errc::bad_request,
                           "family diagram requested but no families were listed");
    const Grid grid = rep.chains ? rep.chains->grid : build_grid(rep.beta);
    const int nrows = static_cast<int>(grid.rows.size());
    const int ncols = static_cast<int>(grid.cols.size());
    const int width = 40 * (ncols + 1);
    const int height = 40 * (nrows + 1);

    std::string s;
    auto line = [&s](const std::string& t) {
        s += t;
        s += '\n';
    };
    line("<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    line("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) +
         "\">");

    for (int j = 0; j < ncols; ++j)
        line("  <text class=\"col-label\" x=\"" + std::to_string(40 * (j + 1)) +
             "\" y=\"14\" text-anchor=\"middle\" font-size=\"12\">" +
             std::to_string(grid.cols[j]) + "</text>");
    for (int i = 0; i < nrows; ++i)
        line("  <text class=\"row-label\" x=\"14\" y=\"" +
             std::to_string(40 * (i + 1) + 4) +
             "\" text-anchor=\"middle\" font-size=\"12\">" +
             std::to_string(grid.rows[i]) + "</text>");

    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) {
            const int cx = 40 * (j + 1), cy = 40 * (i + 1);
            line("  <circle class=\"grid-dot\" cx=\"" + std::to_string(cx) +
                 "\" cy=\"" + std::to_string(cy) + "\" r=\"2\"/>");
            line("  <text class=\"cell-label\" x=\"" + std::to_string(cx + 4) +
                 "\" y=\"" + std::to_string(cy - 4) + "\" font-size=\"8\">(" +
                 std::to_string(grid.rows[i]) + "," + std::to_string(grid.cols[j]) +
                 ")</text>");
        }

    // boundary between the sign regions: in each row band the first k columns
    // are positive, where k counts the columns below the row value
    {
        std::string pts;
        int last_x = -1, last_y = -1;
        auto add = [&](int x, int y) {
            if (x == last_x && y == last_y) return;
            if (!pts.empty()) pts += ' ';
            pts += std::to_string(x) + "," + std::to_string(y);
            last_x = x;
            last_y = y;
        };
        auto boundary_x = [&](int i) {
            int k = 0;
            while (k < ncols && grid.cols[k] < grid.rows[i]) ++k;
            return 40 * k + 20;
        };
        add(boundary_x(0), 20);
        for (int i = 0; i < nrows; ++i) {
            add(boundary_x(i), 40 * (i + 1) + 20);
            if (i + 1 < nrows) add(boundary_x(i + 1), 40 * (i + 1) + 20);
        }
        line("  <polyline class=\"staircase\" points=\"" + pts +
             "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"4 3\"/>");
    }

    if (which != SvgContent::families && rep.chains) {
        auto markers = [&](const std::vector<Cell>& cells, const char* color) {
            for (const Cell& x : cells)
                line("  <circle class=\"chain-point\" cx=\"" +
                     std::to_string(detail::svg_x(grid, x.col)) + "\" cy=\"" +
                     std::to_string(detail::svg_y(grid, x.row)) +
                     "\" r=\"5\" fill=\"none\" stroke=\"" + color +
                     "\" stroke-width=\"2\"/>");
        };
        markers(rep.chains->t_alpha.cells, "#1f77b4");
        markers(rep.chains->w_gamma.cells, "#d62728");
    }

    if (which != SvgContent::chains) {
        for (size_t fi = 0; fi < rep.families->size(); ++fi) {
            const PathFamily& fam = (*rep.families)[fi];
            const int off = 2 * static_cast<int>(fi); // keep overlapping families visible
            line("  <g class=\"family\" transform=\"translate(" + std::to_string(off) +
                 "," + std::to_string(off) + ")\">");
            for (const auto& p : fam.paths)
                line("    <polyline class=\"path\" points=\"" +
                     detail::svg_points(grid, p) + "\" fill=\"none\" stroke=\"" +
                     detail::family_color(fi) +
                     "\" stroke-width=\"3\" stroke-linecap=\"round\" opacity=\"0.75\"/>");
            line("  </g>");
        }
    }

    line("</svg>");
    return s;
}

} // namespace richmult
