/*
  realroots command-line frontend.

  Subcommands: isolate, sign-at, compare, solve2, satisfy, satisfy2, bounds.
  Exit codes: 0 success, 1 library/domain error, 2 usage or parse error.
*/
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "output_format.hpp"
#include "poly_parser.hpp"

namespace rc = realroots::cli;
using namespace realroots;

namespace {

AlgebraicNumber number_from_args(const std::string& poly, const std::string& lo,
                                 const std::string& hi) {
    return AlgebraicNumber(rc::parse_univariate(poly), rc::parse_rational_arg(lo),
                           rc::parse_rational_arg(hi));
}

std::vector<BivariatePolynomial> parse_all_bivariate(const std::vector<std::string>& texts) {
    std::vector<BivariatePolynomial> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(rc::parse_bivariate(t));
    return out;
}

std::vector<IntPolynomial> parse_all_univariate(const std::vector<std::string>& texts) {
    std::vector<IntPolynomial> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(rc::parse_univariate(t));
    return out;
}

void require_square_free_pair(const BivariatePolynomial& F, const BivariatePolynomial& G) {
    if (!bivar_is_square_free(F) || !bivar_is_square_free(G))
        throw PreconditionError("solve2: input polynomials must be square-free");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation with real algebraic numbers"};
    app.require_subcommand(1);

    std::string fmt_name = "text";

    auto add_format = [&fmt_name](CLI::App* sub) {
        sub->add_option("--format", fmt_name, "output format: text or json")
            ->default_val("text");
    };

    // isolate <f>
    std::string iso_poly;
    auto* iso = app.add_subcommand("isolate", "isolate the real roots of a polynomial");
    iso->add_option("poly", iso_poly, "univariate polynomial in x")->required();
    add_format(iso);

    // sign-at <Q> <P> <lo> <hi>
    std::string sa_q, sa_p, sa_lo, sa_hi;
    auto* sa = app.add_subcommand("sign-at", "sign of Q at the root of P isolated by [lo, hi]");
    sa->add_option("Q", sa_q)->required();
    sa->add_option("P", sa_p)->required();
    sa->add_option("lo", sa_lo)->required();
    sa->add_option("hi", sa_hi)->required();
    add_format(sa);

    // compare <P1> <lo1> <hi1> <P2> <lo2> <hi2>
    std::string cm_p1, cm_lo1, cm_hi1, cm_p2, cm_lo2, cm_hi2;
    auto* cm = app.add_subcommand("compare", "compare two real algebraic numbers");
    cm->add_option("P1", cm_p1)->required();
    cm->add_option("lo1", cm_lo1)->required();
    cm->add_option("hi1", cm_hi1)->required();
    cm->add_option("P2", cm_p2)->required();
    cm->add_option("lo2", cm_lo2)->required();
    cm->add_option("hi2", cm_hi2)->required();
    add_format(cm);

    // solve2 --method {naive|rur} [--shear N] <F> <G>
    std::string sv_method = "naive", sv_f, sv_g;
    std::optional<long> sv_shear;
    long sv_shear_val = 0;
    auto* sv = app.add_subcommand("solve2", "real solutions of the system F = G = 0");
    sv->add_option("--method", sv_method, "naive or rur")->default_val("naive");
    auto* shear_opt = sv->add_option("--shear", sv_shear_val, "shear (X,Y) -> (X+aY, Y) for rur");
    sv->add_option("F", sv_f)->required();
    sv->add_option("G", sv_g)->required();
    add_format(sv);

    // satisfy <P> [--gt A]* [--lt B]* [--eq C]*
    std::string st_p;
    std::vector<std::string> st_gt, st_lt, st_eq;
    auto* st = app.add_subcommand("satisfy", "roots of P under simultaneous sign conditions");
    st->add_option("P", st_p)->required();
    st->add_option("--gt", st_gt, "require A > 0 at the root")->type_size(1);
    st->add_option("--lt", st_lt, "require B < 0 at the root")->type_size(1);
    st->add_option("--eq", st_eq, "require C = 0 at the root")->type_size(1);
    add_format(st);

    // satisfy2 <P> <Q> [--gt]* [--lt]* [--eq]*
    std::string s2_p, s2_q;
    std::vector<std::string> s2_gt, s2_lt, s2_eq;
    auto* s2 = app.add_subcommand("satisfy2", "system solutions under sign conditions");
    s2->add_option("P", s2_p)->required();
    s2->add_option("Q", s2_q)->required();
    s2->add_option("--gt", s2_gt)->type_size(1);
    s2->add_option("--lt", s2_lt)->type_size(1);
    s2->add_option("--eq", s2_eq)->type_size(1);
    add_format(s2);

    // bounds <f>
    std::string bd_poly;
    auto* bd = app.add_subcommand("bounds", "root and separation bounds");
    bd->add_option("poly", bd_poly)->required();
    add_format(bd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc_code = app.exit(e);
        return rc_code == 0 ? 0 : 2;
    }

    try {
        const rc::Format fmt = rc::parse_format(fmt_name);
        if (*iso) {
            std::cout << rc::format_roots(isolate_real_roots(rc::parse_univariate(iso_poly)), fmt);
        } else if (*sa) {
            AlgebraicNumber alpha = number_from_args(sa_p, sa_lo, sa_hi);
            std::cout << rc::format_sign(sign_at(rc::parse_univariate(sa_q), alpha), fmt);
        } else if (*cm) {
            AlgebraicNumber a = number_from_args(cm_p1, cm_lo1, cm_hi1);
            AlgebraicNumber b = number_from_args(cm_p2, cm_lo2, cm_hi2);
            std::cout << rc::format_ordering(compare(a, b), fmt);
        } else if (*sv) {
            if (shear_opt->count() > 0) sv_shear = sv_shear_val;
            BivariatePolynomial F = rc::parse_bivariate(sv_f);
            BivariatePolynomial G = rc::parse_bivariate(sv_g);
            require_square_free_pair(F, G);
            std::vector<SystemSolution> sols;
            if (sv_method == "naive") {
                if (sv_shear) throw ParseError("--shear requires --method rur", 0);
                sols = naive_solve(F, G);
            } else if (sv_method == "rur") {
                sols = rur_solve(F, G, sv_shear);
            } else {
                throw ParseError("unknown method '" + sv_method + "'", 0);
            }
            std::cout << rc::format_solutions(sols, fmt);
        } else if (*st) {
            auto roots = satisfy_univariate(rc::parse_univariate(st_p), parse_all_univariate(st_gt),
                                            parse_all_univariate(st_lt), parse_all_univariate(st_eq));
            std::cout << rc::format_roots(roots, fmt);
        } else if (*s2) {
            BivariatePolynomial P = rc::parse_bivariate(s2_p);
            BivariatePolynomial Q = rc::parse_bivariate(s2_q);
            require_square_free_pair(P, Q);
            auto sols = satisfy_bivariate(P, Q, parse_all_bivariate(s2_gt),
                                          parse_all_bivariate(s2_lt), parse_all_bivariate(s2_eq));
            std::cout << rc::format_solutions(sols, fmt);
        } else if (*bd) {
            std::cout << rc::format_bounds(
                rc::compute_bounds_report(rc::parse_univariate(bd_poly)), fmt);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.tag() << ": " << e.what() << " (position " << e.position()
                  << ")\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.tag() << ": " << e.what() << "\n";
        return 1;
    }
    return 0;
}
