#include <CLI11.hpp>
#include <iostream>

#include "rjc/jsonout.hpp"
#include "rjc/parse.hpp"

namespace {

using namespace rjc;

bool g_pretty = false;

void emit(const ordered_json& j) {
    if (g_pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

Var parse_var(const std::string& s) {
    if (s == "x") return Var::x;
    if (s == "y") return Var::y;
    throw PreconditionFailed("--var must be x or y");
}

Family make_family(int id, const std::string& a02) {
    return Family::make(id, Rat::from_string(a02));
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(Rat::from_string(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(Rat::from_string(cur));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decision procedures for planar polynomial submersions and Jacobian pairs"};
    app.require_subcommand(1);
    app.add_flag("--json-pretty", g_pretty, "indent the JSON output");

    std::string poly_text, poly2_text, var_text = "x", a02_text = "0", eps_text = "1/1000";
    std::string blist;
    int k = 0, family_id = 1, hj = 1, hk = 1;
    bool minors = false;
    Rat level(0);
    std::string level_text = "0";

    auto* c_classify = app.add_subcommand("classify", "full verdict for a degree <= 4 polynomial");
    c_classify->add_option("poly", poly_text, "polynomial in x, y")->required();

    auto* c_critical = app.add_subcommand("critical", "decide whether the gradient vanishes somewhere");
    c_critical->add_option("poly", poly_text)->required();

    auto* c_connected = app.add_subcommand("connected", "connectedness certificate for a level set");
    c_connected->add_option("poly", poly_text)->required();
    c_connected->add_option("--level", level_text, "level c (rational)");

    auto* c_subres = app.add_subcommand("subres", "k-subresultant of two polynomials");
    c_subres->add_option("p", poly_text)->required();
    c_subres->add_option("q", poly2_text)->required();
    c_subres->add_option("--var", var_text, "elimination variable (x or y)")->required();
    c_subres->add_option("--k", k, "subresultant index")->required();

    auto* c_refute = app.add_subcommand("refute", "refutation certificate for a Jacobian partner");
    c_refute->add_option("--family", family_id, "canonical family 1..4")->required();
    c_refute->add_option("--a02", a02_text, "family parameter (families 2 and 4)");
    c_refute->add_option("q", poly2_text)->required();

    auto* c_bruna = app.add_subcommand("bruna", "sign witnesses for L(theta) built from b0,b1,...");
    c_bruna->add_option("b", blist, "comma-separated rationals")->required();

    auto* c_hankel = app.add_subcommand("hankel", "Hankel matrix determinant (and minors)");
    c_hankel->add_option("j", hj)->required();
    c_hankel->add_option("k", hk)->required();
    c_hankel->add_flag("--minors", minors, "also emit the leading principal minors");

    auto* c_integral = app.add_subcommand("hrc-integral", "truncated numeric integral over the family region");
    c_integral->add_option("--family", family_id)->required();
    c_integral->add_option("--a02", a02_text);
    c_integral->add_option("h", poly_text)->required();
    c_integral->add_option("--eps", eps_text, "truncation parameter")->required();

    auto* c_tau = app.add_subcommand("tau", "edge exponent of h for a family");
    c_tau->add_option("--family", family_id)->required();
    c_tau->add_option("--a02", a02_text);
    c_tau->add_option("h", poly_text)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (c_classify->parsed()) {
            BPoly p = parse_poly(poly_text);
            emit(json_classify(p, classify_degree4(p)));
        } else if (c_critical->parsed()) {
            BPoly p = parse_poly(poly_text);
            emit(json_critical(p, critical_point_exists(p)));
        } else if (c_connected->parsed()) {
            BPoly p = parse_poly(poly_text);
            Rat c = Rat::from_string(level_text);
            emit(json_connected(p, decide_connected(p, c)));
        } else if (c_subres->parsed()) {
            BPoly p = parse_poly(poly_text);
            BPoly q = parse_poly(poly2_text);
            Var v = parse_var(var_text);
            emit(json_subres(p, q, v, k, subresultant(p, q, v, k)));
        } else if (c_refute->parsed()) {
            Family f = make_family(family_id, a02_text);
            BPoly q = parse_poly(poly2_text);
            emit(json_refute(f, q, refute_pair(f, q)));
        } else if (c_bruna->parsed()) {
            std::vector<Rat> b = parse_rat_list(blist);
            emit(json_bruna(b, bruna_witnesses(b)));
        } else if (c_hankel->parsed()) {
            HankelMatrix H = hankel(hj, hk);
            Rat det = det_exact(H.entries);
            if (minors) {
                auto ms = leading_minors(H.entries);
                emit(json_hankel(hj, hk, det, &ms));
            } else {
                emit(json_hankel(hj, hk, det, nullptr));
            }
        } else if (c_integral->parsed()) {
            Family f = make_family(family_id, a02_text);
            BPoly h = parse_poly(poly_text);
            Rat eps = Rat::from_string(eps_text);
            emit(json_hrc_integral(f, h, eps, truncated_integral(f, h, eps)));
        } else if (c_tau->parsed()) {
            Family f = make_family(family_id, a02_text);
            BPoly h = parse_poly(poly_text);
            emit(json_tau(f, h, tau(f, h)));
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
