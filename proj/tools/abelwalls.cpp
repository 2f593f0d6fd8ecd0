// Command-line front end: character operations, wall tables, phi reports,
// verification sweeps, bounds, and SVG wall diagrams.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 precondition violation.

#include "abelwalls/ampleness.hpp"
#include "abelwalls/lattice.hpp"
#include "abelwalls/render.hpp"
#include "abelwalls/walls.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace abelwalls;
using nlohmann::json;

struct Output {
    Format format = Format::human;
    std::string path;  // empty: stdout
    int precision = 12;

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << "\n";
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
        f << text;
        if (!text.empty() && text.back() != '\n') f << "\n";
    }
};

Surface require_surface(const std::string& d_str) {
    if (d_str.empty()) throw parse_error("missing required option --d");
    return Surface(parse_int(d_str));
}

void reject_svg(const Output& out) {
    if (out.format == Format::svg)
        throw precondition_error("svg output is only valid for the walls command");
}

std::string scalar_tsv(const std::string& name, const std::string& value) {
    return name + "\n" + value + "\n";
}

int run_ch(const std::string& d_str, const std::string& op,
           const std::vector<std::string>& operands, const Output& out) {
    reject_svg(out);
    Surface S = require_surface(d_str);

    auto need = [&](std::size_t k) {
        if (operands.size() != k)
            throw parse_error("ch " + op + ": expected " + std::to_string(k) + " operand(s), got " +
                              std::to_string(operands.size()));
    };

    std::optional<Character> ch_result;
    std::optional<Int> int_result;
    std::optional<bool> bool_result;

    if (op == "twist") {
        need(2);
        ch_result = twist(S, parse_character(operands[0]), parse_int(operands[1]));
    } else if (op == "fm") {
        need(1);
        ch_result = fm(parse_character(operands[0]));
    } else if (op == "dual") {
        need(1);
        ch_result = dual(parse_character(operands[0]));
    } else if (op == "euler") {
        need(2);
        int_result = euler_pairing(S, parse_character(operands[0]), parse_character(operands[1]));
    } else if (op == "bogomolov") {
        need(1);
        bool_result = bogomolov_holds(S, parse_character(operands[0]));
    } else if (op == "vdim") {
        need(1);
        int_result = virtual_dim(S, parse_character(operands[0]));
    } else {
        throw parse_error("ch: unknown operation '" + op + "'");
    }

    std::ostringstream text;
    if (ch_result) {
        if (out.format == Format::json)
            text << character_json(*ch_result).dump();
        else if (out.format == Format::tsv)
            text << "r\tc\tchi\n"
                 << ch_result->r << "\t" << ch_result->c << "\t" << ch_result->chi << "\n";
        else
            text << *ch_result;
    } else if (int_result) {
        if (out.format == Format::tsv)
            text << scalar_tsv(op, int_result->get_str());
        else
            text << *int_result;
    } else {
        const char* v = *bool_result ? "true" : "false";
        if (out.format == Format::tsv)
            text << scalar_tsv(op, v);
        else
            text << v;
    }
    out.write(text.str());
    return 0;
}

int run_walls(const std::string& d_str, const std::string& target_str, const std::string& svg_path,
              const Output& out) {
    Surface S = require_surface(d_str);
    Character target = parse_character(target_str);
    std::vector<Wall> walls = enumerate_walls_s0(S, target);

    std::string text;
    switch (out.format) {
        case Format::json: text = wall_list_json(S, target, walls, out.precision).dump(); break;
        case Format::tsv: text = wall_list_tsv(S, target, walls, out.precision); break;
        case Format::svg: text = wall_diagram_svg(S, target, walls, out.precision); break;
        case Format::human: text = wall_list_human(S, target, walls, out.precision); break;
    }
    out.write(text);

    if (!svg_path.empty()) {
        std::ofstream f(svg_path);
        if (!f) throw std::runtime_error("cannot open svg file '" + svg_path + "'");
        f << wall_diagram_svg(S, target, walls, out.precision);
    }
    return 0;
}

int run_phi(const std::string& d_str, const std::string& n_str, const std::string& method,
            const Output& out) {
    reject_svg(out);
    Surface S = require_surface(d_str);
    Int n = parse_int(n_str);

    if (method == "formula") {
        Int phi = phi_formula(S, n);
        std::ostringstream text;
        if (out.format == Format::json)
            text << json{{"d", int_json(S.d)}, {"n", int_json(n)}, {"phi", int_json(phi)}}.dump();
        else if (out.format == Format::tsv)
            text << scalar_tsv("phi", phi.get_str());
        else
            text << "phi = " << phi;
        out.write(text.str());
        return 0;
    }

    PhiReport rep = phi_pipeline(S, n);
    std::string text;
    if (out.format == Format::json)
        text = phi_report_json(rep, out.precision).dump();
    else if (out.format == Format::tsv)
        text = scalar_tsv("phi\tphi_pipeline\tok",
                          rep.phi_formula.get_str() + "\t" + rep.phi_pipeline.get_str() + "\t" +
                              (rep.ok() ? "true" : "false"));
    else
        text = phi_report_human(rep, out.precision);
    out.write(text);

    if (method == "both" && !rep.ok()) {
        std::cerr << "verification mismatch: formula " << rep.phi_formula << " vs pipeline "
                  << rep.phi_pipeline << "\n";
        return 1;
    }
    return 0;
}

int run_verify(const std::string& dmax_str, const std::string& nmax_str, const Output& out) {
    reject_svg(out);
    Int dmax = parse_int(dmax_str);
    Int nmax = parse_int(nmax_str);
    if (dmax < 1 || nmax < 1) throw precondition_error("verify: dmax and nmax must be >= 1");

    struct Cell {
        Int d, n, phi, pipeline;
        bool ok;
    };
    std::vector<Cell> cells;
    bool all_ok = true;
    for (Int d = 1; d <= dmax; ++d) {
        Surface S{d};
        for (Int n = 1; n <= nmax; ++n) {
            PhiReport rep = phi_pipeline(S, n);
            bool ok = rep.ok();
            all_ok = all_ok && ok;
            cells.push_back({d, n, rep.phi_formula, rep.phi_pipeline, ok});
        }
    }

    std::ostringstream text;
    if (out.format == Format::json) {
        json arr = json::array();
        for (const Cell& c : cells)
            arr.push_back({{"d", int_json(c.d)},
                           {"n", int_json(c.n)},
                           {"phi", int_json(c.phi)},
                           {"phi_pipeline", int_json(c.pipeline)},
                           {"ok", c.ok}});
        text << json{{"dmax", int_json(dmax)},
                     {"nmax", int_json(nmax)},
                     {"cells", arr},
                     {"all_ok", all_ok}}
                    .dump();
    } else if (out.format == Format::tsv) {
        text << "d\tn\tphi\tphi_pipeline\tok\n";
        for (const Cell& c : cells)
            text << c.d << "\t" << c.n << "\t" << c.phi << "\t" << c.pipeline << "\t"
                 << (c.ok ? "true" : "false") << "\n";
    } else {
        for (const Cell& c : cells)
            text << "d=" << c.d << " n=" << c.n << " phi=" << c.phi << " pipeline=" << c.pipeline
                 << " " << (c.ok ? "pass" : "FAIL") << "\n";
        text << cells.size() << " cells, " << (all_ok ? "all pass" : "FAILURES present") << "\n";
    }
    out.write(text.str());
    return all_ok ? 0 : 1;
}

int run_bounds(const std::string& d_str, const std::string& n_str, const Output& out) {
    reject_svg(out);
    Surface S = require_surface(d_str);
    Int n = parse_int(n_str);
    BoundsRecord b = bounds(S, n);
    std::string text;
    if (out.format == Format::json)
        text = bounds_json(S, n, b).dump();
    else if (out.format == Format::tsv)
        text = "trivial\tterakawa\treider\n" + b.trivial_upper.get_str() + "\t" +
               rat_str(b.terakawa) + "\t" + b.reider_lower.get_str() + "\n";
    else
        text = bounds_human(S, n, b);
    out.write(text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Bridgeland-wall and k-very-ampleness calculator for polarized abelian "
                 "surfaces of Picard rank one"};
    app.name("abelwalls");
    app.require_subcommand(1);

    std::string d_str;
    const char* env_format = std::getenv("ABELWALLS_FORMAT");
    std::string format_str = env_format ? env_format : "human";
    std::string out_path;
    int precision = 12;
    app.add_option("--d", d_str, "surface parameter d (polarization self-intersection 2d)");
    app.add_option("--format", format_str, "output format: json|tsv|svg|human");
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--precision", precision, "significant digits for decimal approximations")
        ->check(CLI::PositiveNumber);

    auto* ch_cmd = app.add_subcommand("ch", "character operations on the lattice");
    std::string ch_op;
    std::vector<std::string> ch_operands;
    ch_cmd->fallthrough();
    ch_cmd->add_option("op", ch_op, "twist|fm|dual|euler|bogomolov|vdim")->required();
    ch_cmd->add_option("operands", ch_operands, "character literals 'r,c,chi' and integers");

    auto* walls_cmd = app.add_subcommand("walls", "wall table for a target character");
    std::string target_str, svg_path;
    walls_cmd->fallthrough();
    walls_cmd->add_option("target", target_str, "target character 'r,c,chi'")->required();
    walls_cmd->add_option("--svg", svg_path, "also write an SVG wall diagram to this path");

    auto* phi_cmd = app.add_subcommand("phi", "k-very-ampleness threshold phi(L^n)");
    std::string phi_n, phi_method = "both";
    phi_cmd->fallthrough();
    phi_cmd->add_option("--n", phi_n, "power of the polarization")->required();
    phi_cmd->add_option("--method", phi_method, "formula|pipeline|both")
        ->check(CLI::IsMember({"formula", "pipeline", "both"}));

    auto* verify_cmd = app.add_subcommand("verify", "pipeline-vs-formula sweep over a (d, n) grid");
    std::string dmax_str, nmax_str;
    verify_cmd->fallthrough();
    verify_cmd->add_option("--dmax", dmax_str, "largest d")->required();
    verify_cmd->add_option("--nmax", nmax_str, "largest n")->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "comparison bounds for phi(L^n)");
    std::string bounds_n;
    bounds_cmd->fallthrough();
    bounds_cmd->add_option("--n", bounds_n, "power of the polarization")->required();

    // everything after a bare "--" is operand data (lets negative integers
    // through); CLI11 ends the subcommand scope at "--", so split it off first
    std::vector<std::string> head(argv + 1, argv + argc);
    std::vector<std::string> tail;
    if (auto sep = std::find(head.begin(), head.end(), "--"); sep != head.end()) {
        tail.assign(sep + 1, head.end());
        head.erase(sep, head.end());
    }

    try {
        app.parse(std::vector<std::string>(head.rbegin(), head.rend()));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Output out;
        out.format = parse_format(format_str);
        out.path = out_path;
        out.precision = precision;

        if (!tail.empty() && !app.got_subcommand(ch_cmd))
            throw parse_error("unexpected arguments after '--'");
        for (std::string& t : tail) ch_operands.push_back(std::move(t));

        if (app.got_subcommand(ch_cmd)) return run_ch(d_str, ch_op, ch_operands, out);
        if (app.got_subcommand(walls_cmd)) return run_walls(d_str, target_str, svg_path, out);
        if (app.got_subcommand(phi_cmd)) return run_phi(d_str, phi_n, phi_method, out);
        if (app.got_subcommand(verify_cmd)) return run_verify(dmax_str, nmax_str, out);
        if (app.got_subcommand(bounds_cmd)) return run_bounds(d_str, bounds_n, out);
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
