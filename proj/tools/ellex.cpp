// Copyright 2026 The ellex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ellex/oracles.hpp"
#include "ellex/pencil.hpp"
#include "ellex/perimeter.hpp"
#include "ellex/steiner.hpp"
#include "report.hpp"
#include "svg.hpp"

namespace {

constexpr const char* kVersion = "ellex 0.1.0";

using json = nlohmann::ordered_json;
using Vec2 = ellex::Point2<double>;

struct CommonOpts {
    int order = 24;
    double tol = 1e-10;
    std::string format;
    std::string out;
    std::string in;
    std::string from_report;
};

void add_common(CLI::App* cmd, CommonOpts& o, const std::string& default_format) {
    o.format = default_format;
    cmd->add_option("--order", o.order, "series truncation order (number of terms)");
    cmd->add_option("--tol", o.tol, "numeric tolerance for iterative solves");
    cmd->add_option("--format", o.format, "output format");
    cmd->add_option("--out", o.out, "output path (default: stdout)");
    cmd->add_option("--in", o.in, "read inputs from a JSON file");
    cmd->add_option("--from-report", o.from_report, "rebuild the report from a previous one");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ellex::InvalidArgument("cannot open output file: " + path);
    f << content;
}

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ellex::InvalidArgument("cannot open input file: " + path);
    json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw ellex::InvalidArgument(std::string("bad JSON input: ") + e.what());
    }
    return j;
}

std::vector<Vec2> points_from_json(const json& j, size_t count) {
    if (!j.contains("points")) throw ellex::InvalidArgument("JSON input needs a 'points' array");
    const auto& arr = j.at("points");
    if (arr.size() != count)
        throw ellex::InvalidArgument("expected " + std::to_string(count) + " points");
    std::vector<Vec2> pts;
    for (const auto& e : arr) pts.push_back(ellex::report::point_from(e));
    return pts;
}

std::vector<Vec2> collect_points(const std::vector<double>& coords, const CommonOpts& o,
                                 size_t count) {
    if (!o.in.empty()) return points_from_json(load_json(o.in), count);
    if (coords.size() != 2 * count)
        throw ellex::InvalidArgument("expected " + std::to_string(2 * count) +
                                     " coordinates (" + std::to_string(count) + " points)");
    std::vector<Vec2> pts;
    for (size_t k = 0; k < count; ++k) pts.emplace_back(coords[2 * k], coords[2 * k + 1]);
    return pts;
}

/// Flat key: value rendering for --format text.
void render_text(const json& j, const std::string& prefix, std::string& out) {
    if (j.is_object()) {
        for (const auto& [key, val] : j.items())
            render_text(val, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array()) {
        bool scalars = true;
        for (const auto& e : j)
            if (e.is_object() || e.is_array()) scalars = false;
        if (scalars) {
            out += prefix + " =";
            for (const auto& e : j) out += " " + e.dump();
            out += "\n";
        } else {
            int idx = 0;
            for (const auto& e : j) render_text(e, prefix + "[" + std::to_string(idx++) + "]", out);
        }
    } else {
        out += prefix + " = " + j.dump() + "\n";
    }
}

std::string emit_report(const json& j, const std::string& format) {
    if (format == "json") return j.dump(2) + "\n";
    if (format == "text") {
        std::string out;
        render_text(j, "", out);
        return out;
    }
    throw ellex::InvalidArgument("unsupported format for this command: " + format);
}

int run_min_area4(const std::vector<double>& coords, const CommonOpts& o) {
    json rep;
    if (!o.from_report.empty()) {
        rep = load_json(o.from_report);
        const auto conic =
            ellex::report::conic_from(rep.at("minimal_ellipse").at("coefficients"),
                                      rep.at("frame"));
        rep["minimal_ellipse"]["geometric"] =
            ellex::report::geometry_json(ellex::geometric_form(conic));
        rep["minimal_ellipse"]["area"] = ellex::ellipse_area(conic);
    } else {
        const auto pts = collect_points(coords, o, 4);
        ellex::Quad4<double> q{{pts[0], pts[1], pts[2], pts[3]}};
        if (!ellex::conelliptic_check(q))
            throw ellex::NotConelliptic("points not conelliptic");
        rep = ellex::report::min_area4_report(q);
    }
    write_output(o.out, emit_report(rep, o.format));
    return 0;
}

int run_steiner(const std::vector<double>& coords, const CommonOpts& o) {
    json rep;
    if (!o.from_report.empty()) {
        rep = load_json(o.from_report);
        const auto conic = ellex::report::conic_from(rep.at("conic"), rep.at("frame"));
        const auto g = ellex::geometric_form(conic);
        rep["geometric"] = ellex::report::geometry_json(g);
        rep["center"] = ellex::report::point_json(g.center);
        rep["area"] = ellex::ellipse_area(conic);
    } else {
        const auto pts = collect_points(coords, o, 3);
        const auto t = ellex::Triangle<double>::from_points(pts[0], pts[1], pts[2]);
        rep = ellex::report::steiner_report(t);
    }
    write_output(o.out, emit_report(rep, o.format));
    return 0;
}

json rect_report(double f, double g, const std::string& goal, int order, double tol) {
    const auto rect = ellex::RectSpec<double>::make(f, g);
    json j;
    j["command"] = "rect";
    j["goal"] = goal;
    j["f"] = rect.f;
    j["g"] = rect.g;
    j["order"] = order;
    j["i"] = rect.i();
    if (goal == "area") {
        const auto e = ellex::min_area_rect(rect);
        j["a"] = e.a;
        j["b"] = e.b;
        j["area"] = M_PI * e.a * e.b;
    } else if (goal == "perimeter") {
        const auto [e, quarter] = ellex::min_perimeter_rect(rect, order, tol);
        j["n"] = e.n();
        j["a"] = e.a;
        j["b"] = e.b;
        j["quarter_perimeter_series"] = quarter;
        j["quarter_perimeter_quadrature"] =
            ellex::perimeter_quadrature(e.a, e.b, {1e-12, 30});
        json approx;
        approx["linear"] = ellex::approx_n_of_i(rect.i(), ellex::ApproxScheme::Linear);
        approx["cubic"] = ellex::approx_n_of_i(rect.i(), ellex::ApproxScheme::Cubic);
        approx["compromise"] = ellex::approx_n_of_i(rect.i(), ellex::ApproxScheme::Compromise);
        j["approximations"] = approx;
    } else {
        throw ellex::InvalidArgument("rect goal must be 'area' or 'perimeter'");
    }
    return j;
}

int run_rect(std::vector<double>& sides, std::string& goal, const CommonOpts& o) {
    json rep;
    if (!o.from_report.empty()) {
        const json prev = load_json(o.from_report);
        rep = rect_report(prev.at("f").get<double>(), prev.at("g").get<double>(),
                          prev.at("goal").get<std::string>(), prev.at("order").get<int>(),
                          o.tol);
    } else {
        if (!o.in.empty()) {
            const json in = load_json(o.in);
            sides = {in.at("f").get<double>(), in.at("g").get<double>()};
            if (in.contains("goal")) goal = in.at("goal").get<std::string>();
        }
        if (sides.size() != 2) throw ellex::InvalidArgument("rect needs two side lengths");
        rep = rect_report(sides[0], sides[1], goal, o.order, o.tol);
    }
    write_output(o.out, emit_report(rep, o.format));
    return 0;
}

int run_tabulate(double n_min, double n_max, int rows, const CommonOpts& o) {
    if (!(n_min > 0) || !(n_max < 1) || !(n_min <= n_max))
        throw ellex::InvalidArgument("tabulate needs 0 < min <= max < 1");
    if (rows < 1) throw ellex::InvalidArgument("tabulate needs at least one row");
    if (rows > 1 && !(n_min < n_max))
        throw ellex::InvalidArgument("tabulate: empty range for more than one row");
    std::vector<double> grid;
    for (int k = 0; k < rows; ++k)
        grid.push_back(rows == 1 ? n_min : n_min + (n_max - n_min) * k / (rows - 1));
    const auto table = ellex::tabulate(grid, o.order);
    if (!table.monotone_i)
        std::fprintf(stderr, "warning: i column is not monotone on this grid\n");

    if (o.format == "csv") {
        std::string out = "n,s,t,z,i\n";
        char buf[160];
        for (const auto& r : table.rows) {
            std::snprintf(buf, sizeof buf, "%.7f,%.7f,%.7f,%.7f,%.7f\n", r.n, r.s, r.t, r.z,
                          r.i);
            out += buf;
        }
        write_output(o.out, out);
        return 0;
    }
    if (o.format == "json") {
        json j;
        j["command"] = "tabulate";
        j["order"] = o.order;
        j["monotone_i"] = table.monotone_i;
        j["rows"] = json::array();
        for (const auto& r : table.rows) {
            json row;
            row["n"] = r.n;
            row["s"] = r.s;
            row["t"] = r.t;
            row["z"] = r.z;
            row["i"] = r.i;
            j["rows"].push_back(row);
        }
        write_output(o.out, j.dump(2) + "\n");
        return 0;
    }
    throw ellex::InvalidArgument("unsupported format for tabulate: " + o.format);
}

int run_plot(const std::string& kind, const std::vector<double>& coords, const CommonOpts& o) {
    if (o.format != "svg") throw ellex::InvalidArgument("plot only supports --format svg");
    std::string out;
    if (kind == "pencil" || kind == "area_curve") {
        const auto pts = collect_points(coords, o, 4);
        ellex::Quad4<double> q{{pts[0], pts[1], pts[2], pts[3]}};
        if (!ellex::conelliptic_check(q))
            throw ellex::NotConelliptic("points not conelliptic");
        out = kind == "pencil" ? ellex::svg::plot_pencil(q, 24, kVersion)
                               : ellex::svg::plot_area_curve(q, kVersion);
    } else if (kind == "in_curves") {
        out = ellex::svg::plot_in_curves(o.order, kVersion);
    } else {
        throw ellex::InvalidArgument("plot kind must be pencil, area_curve or in_curves");
    }
    write_output(o.out, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal ellipses through fixed point sets"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CommonOpts o_min, o_st, o_rect, o_tab, o_plot;
    std::vector<double> coords_min, coords_plot, sides;
    std::vector<double> coords_st;
    std::string goal = "perimeter", plot_kind;
    double tab_min = 0.01, tab_max = 0.99;
    int tab_rows = 99;

    auto* c_min = app.add_subcommand("min-area4", "minimal-area ellipse through four points");
    c_min->add_option("coords", coords_min, "x1 y1 x2 y2 x3 y3 x4 y4")->expected(0, 8);
    add_common(c_min, o_min, "json");

    auto* c_st = app.add_subcommand("steiner", "minimal-area circumellipse of a triangle");
    c_st->add_option("coords", coords_st, "x1 y1 x2 y2 x3 y3")->expected(0, 6);
    add_common(c_st, o_st, "json");

    auto* c_rect = app.add_subcommand("rect", "extremal ellipses circumscribing a rectangle");
    c_rect->add_option("sides", sides, "half-sides f g")->expected(0, 2);
    c_rect->add_option("--goal", goal, "area or perimeter");
    add_common(c_rect, o_rect, "json");

    auto* c_tab = app.add_subcommand("tabulate", "tabulate n, s, t, z, i over a grid");
    c_tab->add_option("--min", tab_min, "first n value");
    c_tab->add_option("--max", tab_max, "last n value");
    c_tab->add_option("--rows", tab_rows, "number of rows");
    add_common(c_tab, o_tab, "csv");

    auto* c_plot = app.add_subcommand("plot", "emit an SVG figure");
    c_plot->add_option("--kind", plot_kind, "pencil, area_curve or in_curves")->required();
    c_plot->add_option("coords", coords_plot, "x1 y1 ... x4 y4 (pencil, area_curve)")
        ->expected(0, 8);
    add_common(c_plot, o_plot, "svg");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_min->parsed()) return run_min_area4(coords_min, o_min);
        if (c_st->parsed()) return run_steiner(coords_st, o_st);
        if (c_rect->parsed()) return run_rect(sides, goal, o_rect);
        if (c_tab->parsed()) return run_tabulate(tab_min, tab_max, tab_rows, o_tab);
        if (c_plot->parsed()) return run_plot(plot_kind, coords_plot, o_plot);
    } catch (const ellex::NumericError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const ellex::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
