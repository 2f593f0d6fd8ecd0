#include "abelwalls/render.hpp"

#include <sstream>

namespace abelwalls {

using nlohmann::json;

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "tsv") return Format::tsv;
    if (name == "svg") return Format::svg;
    if (name == "human") return Format::human;
    throw parse_error("unknown format '" + name + "' (expected json|tsv|svg|human)");
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

}  // namespace

Character parse_character(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw parse_error("character literal must be 'r,c,chi': '" + text + "'");
    return {parse_int(trim(parts[0])), parse_int(trim(parts[1])), parse_int(trim(parts[2]))};
}

nlohmann::json int_json(const Int& x) {
    if (x.fits_slong_p()) return static_cast<long>(x.get_si());
    return x.get_str();  // out of int64 range: decimal string
}

nlohmann::json character_json(const Character& u) {
    return json::array({int_json(u.r), int_json(u.c), int_json(u.chi)});
}

nlohmann::json surface_json(const Surface& S) { return json{{"d", int_json(S.d)}}; }

nlohmann::json stability_point_json(const StabilityPoint& p) {
    return json{{"s", rat_str(p.s)}, {"q", rat_str(p.q)}};
}

nlohmann::json wall_json(const Wall& w, int precision) {
    json destab = json::array();
    for (const Character& u : w.destabilizers) destab.push_back(character_json(u));
    return json{{"q0", rat_str(w.q0)},
                {"t_approx", sqrt_decimal(w.q0, precision)},
                {"destabilizers", destab},
                {"f_positive_side", to_string(w.f_positive_side)}};
}

nlohmann::json wall_list_json(const Surface& S, const Character& target,
                              const std::vector<Wall>& walls, int precision) {
    json arr = json::array();
    for (const Wall& w : walls) arr.push_back(wall_json(w, precision));
    return json{{"d", int_json(S.d)}, {"target", character_json(target)}, {"walls", arr}};
}

nlohmann::json phi_report_json(const PhiReport& rep, int precision) {
    json walls = json::array();
    for (const Wall& w : rep.walls_used) walls.push_back(wall_json(w, precision));
    return json{{"d", int_json(rep.d)},
                {"n", int_json(rep.n)},
                {"phi", int_json(rep.phi_formula)},
                {"phi_pipeline", int_json(rep.phi_pipeline)},
                {"walls", walls},
                {"bounds",
                 {{"trivial", int_json(rep.bounds.trivial_upper)},
                  {"terakawa", rat_str(rep.bounds.terakawa)},
                  {"reider", int_json(rep.bounds.reider_lower)}}},
                {"checks",
                 {{"z_bound", rep.z_bound_ok},
                  {"base_case", rep.base_case_ok},
                  {"induction", rep.induction_ok}}}};
}

nlohmann::json bounds_json(const Surface& S, const Int& n, const BoundsRecord& b) {
    return json{{"d", int_json(S.d)},
                {"n", int_json(n)},
                {"trivial", int_json(b.trivial_upper)},
                {"terakawa", rat_str(b.terakawa)},
                {"reider", int_json(b.reider_lower)}};
}

std::string wall_list_tsv(const Surface& S, const Character& target,
                          const std::vector<Wall>& walls, int precision) {
    std::ostringstream out;
    out << "d\ttarget\tq0\tt_approx\tf_positive_side\tdestabilizer\n";
    for (const Wall& w : walls)
        for (const Character& u : w.destabilizers)
            out << S.d << "\t" << target.r << "," << target.c << "," << target.chi << "\t"
                << rat_str(w.q0) << "\t" << sqrt_decimal(w.q0, precision) << "\t"
                << to_string(w.f_positive_side) << "\t" << u.r << "," << u.c << "," << u.chi
                << "\n";
    return out.str();
}

std::string wall_list_human(const Surface& S, const Character& target,
                            const std::vector<Wall>& walls, int precision) {
    std::ostringstream out;
    out << "d = " << S.d << ", target = " << target << "\n";
    if (walls.empty()) {
        out << "no walls\n";
        return out.str();
    }
    out << "candidate walls (necessary-condition filters): " << walls.size() << "\n";
    for (const Wall& w : walls) {
        out << "  q0 = " << rat_str(w.q0) << "  (t ~ " << sqrt_decimal(w.q0, precision)
            << ")  f > 0 " << to_string(w.f_positive_side) << "  destabilizers:";
        for (const Character& u : w.destabilizers) out << " " << u;
        out << "\n";
    }
    return out.str();
}

std::string phi_report_human(const PhiReport& rep, int precision) {
    std::ostringstream out;
    out << "d = " << rep.d << ", n = " << rep.n << "\n";
    out << "phi = " << rep.phi_formula << "  (pipeline " << rep.phi_pipeline << ", "
        << (rep.phi_formula == rep.phi_pipeline ? "agreement" : "MISMATCH") << ")\n";
    out << "checks: z-bound " << (rep.z_bound_ok ? "ok" : "FAIL") << ", base case "
        << (rep.base_case_ok ? "ok" : "FAIL") << ", induction "
        << (rep.induction_ok ? "ok" : "FAIL") << "\n";
    if (rep.witness_euler)
        out << "upper bound witnessed by Euler characteristic: chi = " << *rep.witness_euler
            << " < 0\n";
    if (!rep.walls_used.empty()) {
        out << "walls used:\n";
        for (const Wall& w : rep.walls_used) {
            out << "  q0 = " << rat_str(w.q0) << " (t ~ " << sqrt_decimal(w.q0, precision)
                << ") destabilizers:";
            for (const Character& u : w.destabilizers) out << " " << u;
            out << "\n";
        }
    } else {
        out << "walls used: none\n";
    }
    out << "bounds: reider " << rep.bounds.reider_lower << " <= phi <= terakawa "
        << rat_str(rep.bounds.terakawa) << " <= trivial " << rep.bounds.trivial_upper << "\n";
    return out.str();
}

std::string bounds_human(const Surface& S, const Int& n, const BoundsRecord& b) {
    std::ostringstream out;
    out << "d = " << S.d << ", n = " << n << "\n";
    out << "trivial upper: " << b.trivial_upper << "\n";
    out << "terakawa:      " << rat_str(b.terakawa) << "\n";
    out << "reider lower:  " << b.reider_lower << "\n";
    return out.str();
}

namespace {

constexpr int kCoordDigits = 8;

std::string coord(const Rat& x) { return decimal(x, kCoordDigits); }

}  // namespace

std::string wall_diagram_svg(const Surface& S, const Character& target,
                             const std::vector<Wall>& walls, int precision) {
    // window: s in [-c_v, c_v], t in (0, 1.2 * max wall t]; equal scale on
    // both axes so circle loci stay circular
    Rat cv(target.c);
    Rat tmax = walls.empty() ? Rat(1) : sqrt_approx(walls.front().q0, 24);
    Rat twin = Rat(6, 5) * tmax;
    Rat margin(50);
    Rat plot_w(640);
    Rat scale = plot_w / (2 * cv);
    Rat width = 2 * margin + plot_w;
    Rat height = 2 * margin + scale * twin;
    auto X = [&](const Rat& s) -> Rat { return margin + scale * (s + cv); };
    auto Y = [&](const Rat& t) -> Rat { return margin + scale * (twin - t); };
    Rat y0 = Y(Rat(0));

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << coord(width) << " "
        << coord(height) << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << coord(width) << "\" height=\"" << coord(height)
        << "\" fill=\"white\"/>\n";
    // s-axis and the marked s = 0 axis
    out << "  <line x1=\"" << coord(X(-cv)) << "\" y1=\"" << coord(y0) << "\" x2=\""
        << coord(X(cv)) << "\" y2=\"" << coord(y0)
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    out << "  <line x1=\"" << coord(X(Rat(0))) << "\" y1=\"" << coord(Y(twin)) << "\" x2=\""
        << coord(X(Rat(0))) << "\" y2=\"" << coord(y0)
        << "\" stroke=\"#333333\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    out << "  <text x=\"" << coord(X(cv) + 6) << "\" y=\"" << coord(y0 + 4)
        << "\" font-size=\"14\">s</text>\n";
    out << "  <text x=\"" << coord(X(Rat(0)) + 6) << "\" y=\"" << coord(Y(twin) + 4)
        << "\" font-size=\"14\">t</text>\n";
    out << "  <text x=\"" << coord(margin) << "\" y=\"" << coord(margin - 20)
        << "\" font-size=\"14\">d = " << S.d << ", target " << target << "</text>\n";

    for (const Wall& w : walls) {
        // one locus per wall; merged destabilizers share q0, the first one is
        // the drawn representative
        WallLocus locus = numerical_wall(S, w.destabilizers.front(), target);
        Rat radius = sqrt_approx(*locus.radius_sq, 24);
        Rat x1 = X(*locus.center - radius);
        Rat x2 = X(*locus.center + radius);
        Rat r_px = scale * radius;
        out << "  <path d=\"M " << coord(x1) << " " << coord(y0) << " A " << coord(r_px) << " "
            << coord(r_px) << " 0 0 1 " << coord(x2) << " " << coord(y0)
            << "\" fill=\"none\" stroke=\"#bb2222\" stroke-width=\"1.5\"/>\n";
        out << "  <text x=\"" << coord(X(*locus.center) + 4) << "\" y=\""
            << coord(Y(sqrt_approx(w.q0, 24)) - 6) << "\" font-size=\"12\" fill=\"#bb2222\">q0 = "
            << rat_str(w.q0) << ", t ~ " << sqrt_decimal(w.q0, precision) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace abelwalls
