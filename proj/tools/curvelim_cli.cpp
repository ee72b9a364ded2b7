// Command-line front end: one subcommand per library operation, JSON on
// stdout. Exit codes: 0 success, 1 mathematical failure (a check came
// out false), 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "curvelim/curvelim.hpp"

namespace {

using namespace curvelim;

struct MathFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Option values that look like JSON are used inline; anything else is a
/// file path.
json load_json(const std::string& arg) {
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw syntax_error("cannot open input file: " + arg, 0);
    return json::parse(in);
}

ExactDetRep load_rep(const std::string& rep_arg, const std::string& fixture) {
    if (!fixture.empty()) {
        if (fixture == "conic") return conic_fixture();
        if (fixture == "cubic") return cubic_fixture();
        throw syntax_error("unknown fixture (use conic or cubic)", 0);
    }
    if (rep_arg.empty()) throw syntax_error("a representation is required (--rep or --fixture)", 0);
    return detrep_from_json(load_json(rep_arg));
}

std::array<ExactScalar, 3> load_point(const std::string& arg) {
    if (!arg.empty() && arg[0] == '[') return point_from_json(json::parse(arg));
    std::array<ExactScalar, 3> x;
    std::stringstream ss(arg);
    std::string tok;
    for (std::size_t k = 0; k < 3; ++k) {
        if (!std::getline(ss, tok, ',')) throw syntax_error("point wants three comma-separated values", 0);
        x[k] = parse_scalar(tok);
    }
    return x;
}

std::optional<unsigned> opt_deg(int n) {
    return n < 0 ? std::nullopt : std::optional<unsigned>(static_cast<unsigned>(n));
}

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elimination theory along plane curves with determinantal representations"};
    app.require_subcommand(1);

    unsigned seed = 0;
    std::string backend = "exact";
    double tol = 1e-9;
    app.add_option("--seed", seed, "seed for randomized verification");
    app.add_option("--backend", backend, "exact | float")->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--tol", tol, "float-backend tolerance");

    std::string p_str, q_str, f_str, g_str, p0_str, p1_str, p2_str;
    std::string rep_arg, fixture, point1, point2, map1_arg, map2_arg;
    int decl_n = -1;
    unsigned level_n = 1;
    std::size_t samples = 20;
    bool tau = false;

    auto add_pq = [&](CLI::App* c, bool with_fg = false) {
        c->add_option("-p", p_str, "first polynomial")->required();
        c->add_option("-q", q_str, "second polynomial")->required();
        if (with_fg) {
            c->add_option("-f", f_str, "third polynomial")->required();
            c->add_option("-g", g_str, "fourth polynomial")->required();
        }
        c->add_option("-n", decl_n, "declared degree");
    };
    auto add_rep = [&](CLI::App* c) {
        c->add_option("--rep", rep_arg, "representation JSON (inline or file)");
        c->add_option("--fixture", fixture, "conic | cubic");
    };

    auto* c_res = app.add_subcommand("resultant", "determinant of the Sylvester matrix");
    add_pq(c_res);
    auto* c_bez = app.add_subcommand("bezout", "classical Bezout matrix");
    add_pq(c_bez);
    auto* c_syl = app.add_subcommand("sylvester", "classical Sylvester matrix");
    add_pq(c_syl);
    auto* c_krav = app.add_subcommand("kravitsky-check", "classical connecting identity");
    add_pq(c_krav, true);
    auto* c_line = app.add_subcommand("line-image", "pencil for the image of a line");
    c_line->add_option("--p0", p0_str)->required();
    c_line->add_option("--p1", p1_str)->required();
    c_line->add_option("--p2", p2_str)->required();
    c_line->add_option("-n", decl_n, "declared degree");
    auto* c_det = app.add_subcommand("detpoly", "determinant of the pencil");
    add_rep(c_det);
    auto* c_val = app.add_subcommand("validate-rep", "structural validation of a pencil");
    add_rep(c_val);
    auto* c_ker = app.add_subcommand("kernel-at", "pencil kernel at a curve point");
    add_rep(c_ker);
    c_ker->add_option("--point", point1, "curve point")->required();
    auto* c_pdim = app.add_subcommand("principal-dim", "principal subspace dimension");
    add_rep(c_pdim);
    c_pdim->add_option("-n", level_n, "level")->required();
    auto* c_count = app.add_subcommand("curve-count", "common zeros on the curve");
    add_rep(c_count);
    c_count->add_option("-p", p_str)->required();
    c_count->add_option("-q", q_str)->required();
    auto* c_pair = app.add_subcommand("pairing-check", "kernel pairing at two curve points");
    add_rep(c_pair);
    c_pair->add_option("--point1", point1)->required();
    c_pair->add_option("--point2", point2)->required();
    auto* c_gkrav = app.add_subcommand("gen-kravitsky-check", "connecting identity along the curve");
    add_rep(c_gkrav);
    c_gkrav->add_option("-p", p_str)->required();
    c_gkrav->add_option("-q", q_str)->required();
    c_gkrav->add_option("-f", f_str)->required();
    c_gkrav->add_option("-g", g_str)->required();
    auto* c_img = app.add_subcommand("image-curve", "representation of the image curve");
    add_rep(c_img);
    c_img->add_option("--map", map1_arg, "rational map JSON")->required();
    c_img->add_option("--samples", samples, "verification sample count");
    auto* c_comp = app.add_subcommand("compose-check", "two constructions of a composite image");
    add_rep(c_comp);
    c_comp->add_option("--map1", map1_arg, "inner map JSON")->required();
    c_comp->add_option("--map2", map2_arg, "outer map JSON")->required();
    c_comp->add_flag("--tau", tau, "also check the degree-1 compression identity");

    // accept the global options (--seed/--backend/--tol) after the
    // subcommand name as well as before it
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_res) {
            UniPoly p = parse_unipoly(p_str, opt_deg(decl_n)), q = parse_unipoly(q_str, opt_deg(decl_n));
            emit(json{{"resultant", resultant(p, q).str()}});
        } else if (*c_bez) {
            UniPoly p = parse_unipoly(p_str, opt_deg(decl_n)), q = parse_unipoly(q_str, opt_deg(decl_n));
            ExactMatrix b = bezout(p, q);
            emit(json{{"matrix", to_json(b)},
                      {"rank", rank(b)},
                      {"kernel_dim", b.rows() - rank(b)}});
        } else if (*c_syl) {
            UniPoly p = parse_unipoly(p_str, opt_deg(decl_n)), q = parse_unipoly(q_str, opt_deg(decl_n));
            ExactMatrix s = sylvester(p, q);
            emit(json{{"matrix", to_json(s)},
                      {"rank", rank(s)},
                      {"kernel_dim", s.cols() - rank(s)}});
        } else if (*c_krav) {
            auto d = opt_deg(decl_n);
            bool ok = kravitsky_check(parse_unipoly(p_str, d), parse_unipoly(q_str, d),
                                      parse_unipoly(f_str, d), parse_unipoly(g_str, d));
            emit(json{{"equal", ok}});
            if (!ok) return 1;
        } else if (*c_line) {
            auto d = opt_deg(decl_n);
            LinePencil lp = line_image_pencil(parse_unipoly(p0_str, d), parse_unipoly(p1_str, d),
                                              parse_unipoly(p2_str, d));
            ExactDetRep rep(lp.m0, lp.m1, lp.m2);
            emit(json{{"M0", to_json(lp.m0)},
                      {"M1", to_json(lp.m1)},
                      {"M2", to_json(lp.m2)},
                      {"det", print_poly(det_poly(rep))}});
        } else if (*c_det) {
            emit(json{{"det", print_poly(det_poly(load_rep(rep_arg, fixture)))}});
        } else if (*c_val) {
            ExactDetRep d = load_rep(rep_arg, fixture);
            HomPoly3 delta = validate_rep(d);
            emit(json{{"m", d.m}, {"hermitian", d.hermitian}, {"det", print_poly(delta)}});
        } else if (*c_ker) {
            ExactDetRep d = load_rep(rep_arg, fixture);
            if (backend == "float") {
                auto pk = kernel_at(to_float(d), {load_point(point1)[0].to_complex(),
                                                  load_point(point1)[1].to_complex(),
                                                  load_point(point1)[2].to_complex()},
                                    tol);
                json e = json::array();
                for (const auto& v : pk.e) e.push_back(to_json(v));
                emit(json{{"e", e}, {"multi_dim", pk.multi_dim}});
            } else {
                auto pk = kernel_at(d, load_point(point1));
                json e = json::array(), pt = json::array();
                for (const auto& v : pk.e) e.push_back(v.str());
                for (const auto& v : pk.point) pt.push_back(v.str());
                emit(json{{"point", pt}, {"e", e}, {"multi_dim", pk.multi_dim}});
            }
        } else if (*c_pdim) {
            ExactDetRep d = load_rep(rep_arg, fixture);
            PrincipalSubspace vn = principal_subspace(d, level_n);
            emit(json{{"dim", vn.basis.dim()}, {"expected", level_n * d.m}});
        } else if (*c_count) {
            ExactDetRep d = load_rep(rep_arg, fixture);
            HomPoly3 p = parse_hom3(p_str);
            HomPoly3 q = parse_hom3(q_str, p.degree());
            std::size_t sc = count_common_zeros_sylvester(d, p, q);
            std::size_t bc = count_common_zeros_bezout(d, p, q);
            emit(json{{"n", p.degree()},
                      {"m", d.m},
                      {"sylvester_count", sc},
                      {"bezout_count", bc},
                      {"agree", sc == bc}});
            if (sc != bc) return 1;
        } else if (*c_pair) {
            ExactDetRep d = load_rep(rep_arg, fixture);
            if (backend == "float") {
                FloatDetRep df = to_float(d);
                auto cvt = [](const std::array<ExactScalar, 3>& x) {
                    return std::array<FloatScalar, 3>{x[0].to_complex(), x[1].to_complex(),
                                                      x[2].to_complex()};
                };
                auto pk1 = kernel_at(df, cvt(load_point(point1)), tol);
                auto pk2 = kernel_at(df, cvt(load_point(point2)), tol);
                emit(json{{"value", to_json(pairing(df, pk1, pk2, tol))}, {"agree", true}});
            } else {
                auto pk1 = kernel_at(d, load_point(point1));
                auto pk2 = kernel_at(d, load_point(point2));
                emit(json{{"value", pairing(d, pk1, pk2).str()}, {"agree", true}});
            }
        } else if (*c_gkrav) {
            ExactDetRep d = load_rep(rep_arg, fixture);
            HomPoly3 p = parse_hom3(p_str);
            bool ok = generalized_kravitsky_check(d, p, parse_hom3(q_str, p.degree()),
                                                  parse_hom3(f_str, p.degree()),
                                                  parse_hom3(g_str, p.degree()));
            emit(json{{"equal", ok}});
            if (!ok) return 1;
        } else if (*c_img) {
            ExactDetRep d = load_rep(rep_arg, fixture);
            RationalMap r = map_from_json(load_json(map1_arg));
            ImagePencil ip = image_pencil(d, r);
            VerifyReport vr = verify_image(d, r, ip, samples, seed, backend == "float", tol);
            emit(json{{"M0", to_json(ip.pencil.d0)},
                      {"M1", to_json(ip.pencil.d1)},
                      {"M2", to_json(ip.pencil.d2)},
                      {"size", ip.reduced_dim},
                      {"det", print_poly(det_poly(ip.pencil))},
                      {"verify",
                       json{{"points_tested", vr.points_tested},
                            {"failures", vr.failures},
                            {"max_residual", vr.max_residual},
                            {"ok", vr.ok()}}}});
            if (!vr.ok()) return 1;
        } else if (*c_comp) {
            ExactDetRep d = load_rep(rep_arg, fixture);
            RationalMap r = map_from_json(load_json(map1_arg));
            RationalMap s = map_from_json(load_json(map2_arg));
            ComposeReport cr = compose_check(d, r, s, tau);
            emit(json{{"proportional", cr.proportional},
                      {"tau_checked", cr.tau_checked},
                      {"tau_ok", cr.tau_ok},
                      {"det_direct", print_poly(cr.det_direct)},
                      {"det_staged", print_poly(cr.det_staged)}});
            if (!cr.proportional || (cr.tau_checked && !cr.tau_ok)) return 1;
        }
    } catch (const syntax_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const not_homogeneous& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const shape_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
