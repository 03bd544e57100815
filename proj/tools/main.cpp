// Command-line frontend: point evaluation, identity verification, table
// generation, and SVG plots.  Exit codes: 0 success / all checks pass,
// 1 identity failure, 2 parse error, 3 domain error, 4 I/O error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hml/hypergeometric.hpp"
#include "hml/identities.hpp"
#include "hml/modular.hpp"
#include "hml/monodromy.hpp"
#include "hml/numeric.hpp"
#include "hml/plot.hpp"
#include "hml/schwarz.hpp"

namespace {

using hml::Cplx;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

struct IoError {
    std::string message;
};

// ---------------------------------------------------------------------------
// literals

// one real component: decimal ("0.5", "-1.4") or rational ("1/2", "-5/12")
double parse_component(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    try {
        std::size_t slash = s.find('/');
        if (slash != std::string::npos) {
            std::size_t pos = 0;
            long long num = std::stoll(s.substr(0, slash), &pos);
            if (pos != slash)
                throw std::invalid_argument("bad rational: " + s);
            std::string den_s = s.substr(slash + 1);
            long long den = std::stoll(den_s, &pos);
            if (pos != den_s.size() || den == 0)
                throw std::invalid_argument("bad rational: " + s);
            return static_cast<double>(num) / static_cast<double>(den);
        }
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad number: " + s);
        return v;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad number: " + s);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("number out of range: " + s);
    }
}

// complex literal: a, ai, a+bi, a-bi with rational or decimal components;
// bare "i" and signed "i" allowed
Cplx parse_complex(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw std::invalid_argument("empty literal");
    if (s == "i" || s == "+i") return {0.0, 1.0};
    if (s == "-i") return {0.0, -1.0};
    if (s.back() != 'i') return {parse_component(s), 0.0};
    std::string body = s.substr(0, s.size() - 1);
    if (body.empty()) throw std::invalid_argument("bad literal: " + s);
    // split at the sign separating the parts; a sign right after an
    // exponent marker belongs to the number ("1e-3+2e-5i")
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') &&
            body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos || split == 0) {
        if (body == "+") return {0.0, 1.0};
        if (body == "-") return {0.0, -1.0};
        return {0.0, parse_component(body)};
    }
    std::string re_part = body.substr(0, split);
    std::string im_part = body.substr(split);
    double im;
    if (im_part == "+")
        im = 1.0;
    else if (im_part == "-")
        im = -1.0;
    else
        im = parse_component(im_part);
    return {parse_component(re_part), im};
}

hml::Rational parse_rational(const std::string& s) {
    try {
        std::size_t slash = s.find('/');
        std::size_t pos = 0;
        if (slash == std::string::npos) {
            long long n = std::stoll(s, &pos);
            if (pos != s.size())
                throw std::invalid_argument("bad rational: " + s);
            return hml::Rational(n);
        }
        long long num = std::stoll(s.substr(0, slash), &pos);
        if (pos != slash) throw std::invalid_argument("bad rational: " + s);
        std::string den_s = s.substr(slash + 1);
        long long den = std::stoll(den_s, &pos);
        if (pos != den_s.size() || den == 0)
            throw std::invalid_argument("bad rational: " + s);
        return hml::Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational: " + s);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("rational out of range: " + s);
    }
}

// ---------------------------------------------------------------------------
// formatting

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string fmt_complex(Cplx z) {
    if (std::abs(z.imag()) <= 1e-14 * std::max(1.0, std::abs(z.real())))
        return fmt_real(z.real());
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
    return buf;
}

std::string fmt_rational(const hml::Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError{"cannot open " + path};
    out << content;
    out.flush();
    if (!out) throw IoError{"write failed: " + path};
}

// ---------------------------------------------------------------------------
// eval

int cmd_eval(const std::vector<std::string>& args, const std::string& format) {
    if (args.empty()) throw std::invalid_argument("eval: missing function");
    const std::string& fn = args.front();
    auto need = [&](std::size_t n) {
        if (args.size() != n + 1)
            throw std::invalid_argument("eval " + fn + ": expected " +
                                        std::to_string(n) + " argument(s)");
    };

    Cplx value{0.0, 0.0};
    bool pole = false, cusp = false;
    if (fn == "F") {
        need(4);
        hml::HGParams p{parse_rational(args[1]), parse_rational(args[2]),
                        parse_rational(args[3])};
        value = hml::hg_principal(p, parse_complex(args[4]));
    } else if (fn.rfind("theta", 0) == 0 && fn.size() == 7) {
        need(1);
        hml::ThetaChar ch{fn[5] - '0', fn[6] - '0'};
        if ((ch.p != 0 && ch.p != 1) || (ch.q != 0 && ch.q != 1))
            throw std::invalid_argument("eval: unknown function " + fn);
        value = hml::theta(ch, parse_complex(args[1]));
    } else if (fn == "lambda") {
        need(1);
        value = hml::lambda_fn(parse_complex(args[1]));
    } else if (fn == "nu") {
        need(1);
        hml::ModularValue v = hml::nu(parse_complex(args[1]));
        value = v.value;
        pole = v.at_pole;
    } else if (fn == "j") {
        need(1);
        hml::ModularValue v = hml::j_invariant(parse_complex(args[1]));
        value = v.value;
        pole = v.at_pole;
    } else if (fn == "E4") {
        need(1);
        value = hml::e4(parse_complex(args[1]));
    } else if (fn == "phi0" || fn == "phi1" || fn == "phi2") {
        need(1);
        hml::SchwarzId id = fn == "phi0"   ? hml::SchwarzId::phi0
                            : fn == "phi1" ? hml::SchwarzId::phi1
                                           : hml::SchwarzId::phi2;
        hml::SchwarzValue v = hml::schwarz_map(id, parse_complex(args[1]));
        value = v.tau;
        cusp = v.at_cusp;
    } else {
        throw std::invalid_argument("eval: unknown function " + fn);
    }

    if (format == "json") {
        json out;
        out["function"] = fn;
        std::string input;
        for (std::size_t k = 1; k < args.size(); ++k) {
            if (k > 1) input += " ";
            input += args[k];
        }
        out["input"] = input;
        if (cusp) {
            out["cusp"] = true;
        } else if (pole) {
            out["pole"] = true;
        } else {
            out["re"] = value.real();
            out["im"] = value.imag();
        }
        std::cout << out.dump() << "\n";
    } else {
        if (cusp)
            std::cout << "cusp (i*infinity)\n";
        else if (pole)
            std::cout << "pole (infinite)\n";
        else
            std::cout << fmt_complex(value) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

json report_to_json(const hml::CheckReport& r) {
    json o;
    o["id"] = hml::identity_name(r.id);
    o["label"] = r.label;
    o["point"] = {{"re", r.point.real()}, {"im", r.point.imag()}};
    o["lhs"] = {{"re", r.lhs.real()}, {"im", r.lhs.imag()}};
    o["rhs"] = {{"re", r.rhs.real()}, {"im", r.rhs.imag()}};
    o["residual"] = r.residual;
    o["rel_residual"] = r.rel_residual;
    o["tol"] = r.tol;
    o["pass"] = r.pass;
    o["skipped"] = r.skipped;
    return o;
}

int cmd_verify(const std::vector<std::string>& tags, double tol, int points,
               const std::string& tau_str, const std::string& format) {
    std::vector<hml::IdentityId> ids;
    if (tags.empty() || (tags.size() == 1 && tags.front() == "all")) {
        ids = hml::all_identities();
    } else {
        for (const std::string& t : tags) {
            std::optional<hml::IdentityId> id = hml::identity_from_name(t);
            if (!id) throw std::invalid_argument("verify: unknown tag " + t);
            ids.push_back(*id);
        }
    }

    std::vector<hml::CheckReport> reports;
    if (!tau_str.empty()) {
        Cplx pt = parse_complex(tau_str);
        for (hml::IdentityId id : ids)
            reports.push_back(hml::check_identity(id, pt, tol));
    } else {
        for (hml::IdentityId id : ids)
            for (hml::CheckReport& r : hml::run_identity(id, points, tol))
                reports.push_back(std::move(r));
    }

    int failed = 0, passed = 0, skipped = 0;
    for (const hml::CheckReport& r : reports) {
        if (r.skipped)
            ++skipped;
        else if (r.pass)
            ++passed;
        else
            ++failed;
    }

    if (format == "json") {
        json arr = json::array();
        for (const hml::CheckReport& r : reports)
            arr.push_back(report_to_json(r));
        std::cout << arr.dump() << "\n";
    } else {
        for (const hml::CheckReport& r : reports) {
            std::string tag = hml::identity_name(r.id);
            if (!r.label.empty()) tag += "[" + r.label + "]";
            if (std::string(hml::identity_name(r.id)).rfind("fourier", 0) ==
                0) {
                // coefficient rows: computed value, integer target, residual
                std::printf(
                    "%-4s %-32s coeff=%-22s target=%-9lld residual=%.3e\n",
                    r.skipped ? "skip" : (r.pass ? "ok" : "FAIL"), tag.c_str(),
                    fmt_complex(r.lhs).c_str(),
                    static_cast<long long>(std::llround(r.rhs.real())),
                    r.residual);
                continue;
            }
            std::printf("%-4s %-32s point=%-22s residual=%.3e rel=%.3e tol=%g\n",
                        r.skipped ? "skip" : (r.pass ? "ok" : "FAIL"),
                        tag.c_str(), fmt_complex(r.point).c_str(), r.residual,
                        r.rel_residual, r.tol);
        }
        std::printf("passed %d  failed %d  skipped %d\n", passed, failed,
                    skipped);
    }
    return failed == 0 ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const std::string& kind, const std::vector<std::string>& args,
              int points, double im0, const std::string& out_path) {
    std::ostringstream csv;
    if (kind == "lambda" || kind == "nu" || kind == "j" || kind == "E4") {
        if (points < 1) throw std::invalid_argument("table: points must be >= 1");
        csv << "re_tau,im_tau,re_value,im_value\n";
        for (int k = 0; k < points; ++k) {
            double re =
                points == 1 ? 0.0 : -0.4 + 0.8 * k / (points - 1.0);
            Cplx tau{re, im0};
            Cplx v;
            if (kind == "lambda") {
                v = hml::lambda_fn(tau);
            } else if (kind == "nu") {
                v = hml::nu(tau).value;
            } else if (kind == "j") {
                v = hml::j_invariant(tau).value;
            } else {
                v = hml::e4(tau);
            }
            csv << fmt_real(tau.real()) << "," << fmt_real(tau.imag()) << ","
                << fmt_real(v.real()) << "," << fmt_real(v.imag()) << "\n";
        }
    } else if (kind == "riemann") {
        if (args.size() != 3)
            throw std::invalid_argument("table riemann: expected a b c");
        hml::HGParams p{parse_rational(args[0]), parse_rational(args[1]),
                        parse_rational(args[2])};
        hml::RiemannScheme rs = hml::riemann_scheme(p);
        csv << "point,exp1,exp2,difference\n";
        csv << "0," << fmt_rational(rs.at0[0]) << "," << fmt_rational(rs.at0[1])
            << "," << fmt_rational(rs.diff0) << "\n";
        csv << "1," << fmt_rational(rs.at1[0]) << "," << fmt_rational(rs.at1[1])
            << "," << fmt_rational(rs.diff1) << "\n";
        csv << "inf," << fmt_rational(rs.atinf[0]) << ","
            << fmt_rational(rs.atinf[1]) << "," << fmt_rational(rs.diffinf)
            << "\n";
    } else if (kind == "circuits") {
        csv << "triple,matrix,entry,re,im\n";
        const struct {
            const char* name;
            hml::HGParams p;
        } triples[] = {
            {"1/2 1/2 1", hml::params_half()},
            {"1/6 1/2 1", hml::params_sixth()},
            {"1/12 5/12 1", hml::params_twelfth()},
        };
        for (const auto& t : triples) {
            hml::CircuitSet cs = hml::circuit_matrices(t.p);
            const struct {
                const char* name;
                const hml::CycMat2* m;
            } mats[] = {{"M0", &cs.m0}, {"M1", &cs.m1}, {"Minf", &cs.minf}};
            for (const auto& m : mats) {
                const struct {
                    const char* entry;
                    const hml::Cyc24* v;
                } entries[] = {{"a", &m.m->a},
                               {"b", &m.m->b},
                               {"c", &m.m->c},
                               {"d", &m.m->d}};
                for (const auto& e : entries) {
                    Cplx v = e.v->to_complex();
                    csv << t.name << "," << m.name << "," << e.entry << ","
                        << fmt_real(v.real()) << "," << fmt_real(v.imag())
                        << "\n";
                }
            }
        }
    } else {
        throw std::invalid_argument("table: unknown kind " + kind);
    }
    write_output(out_path, csv.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// plot

int cmd_plot(const std::string& kind, const std::string& id_str,
             const std::string& group_str, int depth,
             const std::string& out_path) {
    hml::PlotOptions opt;
    opt.depth = depth;
    if (id_str == "phi0")
        opt.triangle = hml::SchwarzId::phi0;
    else if (id_str == "phi1")
        opt.triangle = hml::SchwarzId::phi1;
    else if (id_str == "phi2")
        opt.triangle = hml::SchwarzId::phi2;
    else
        throw std::invalid_argument("plot: unknown id " + id_str);
    if (group_str == "SL2Z")
        opt.group = hml::DomainGroup::SL2Z;
    else if (group_str == "Gamma2CubeRoot")
        opt.group = hml::DomainGroup::Gamma2CubeRoot;
    else
        throw std::invalid_argument("plot: unknown group " + group_str);

    hml::PlotKind pk;
    if (kind == "fundamental_domains")
        pk = hml::PlotKind::fundamental_domains;
    else if (kind == "schwarz_triangle")
        pk = hml::PlotKind::schwarz_triangle;
    else if (kind == "tessellation")
        pk = hml::PlotKind::tessellation;
    else
        throw std::invalid_argument("plot: unknown kind " + kind);

    write_output(out_path, hml::render_svg(pk, opt));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Special values, modular functions, identity checks, and plots for "
        "the hypergeometric triples (1/2,1/2,1), (1/6,1/2,1), (1/12,5/12,1).\n"
        "Complex literals: a, ai, a+bi, a-bi with decimal or rational parts "
        "(examples: i, 2i, 0.1+1.4i, 1/2+1/2i)."};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand(
        "eval",
        "Evaluate a named function: F a b c z | theta00..theta11 tau | "
        "lambda tau | nu tau | j tau | E4 tau | phi0/phi1/phi2 z");
    std::vector<std::string> eval_args;
    std::string eval_format = "text";
    eval->add_option("args", eval_args, "function name and arguments")
        ->expected(-1);
    eval->add_option("--format", eval_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // verify
    auto* verify = app.add_subcommand(
        "verify", "Check named identities (or 'all') over sample grids");
    std::vector<std::string> verify_tags;
    double verify_tol = 1e-8;
    int verify_points = 10;
    std::string verify_tau, verify_format = "text";
    verify->add_option("tags", verify_tags, "identity tags, or 'all'");
    verify->add_option("--tol", verify_tol, "pass tolerance")
        ->check(CLI::PositiveNumber);
    verify->add_option("--points", verify_points, "grid points per identity")
        ->check(CLI::PositiveNumber);
    verify->add_option("--tau", verify_tau,
                       "check at a single point instead of a grid");
    verify->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // table
    auto* table = app.add_subcommand(
        "table",
        "CSV tables: lambda|nu|j|E4 value grids, riemann a b c, circuits");
    std::string table_kind;
    std::vector<std::string> table_args;
    int table_points = 5;
    double table_im0 = 1.2;
    std::string table_out = "-";
    table->add_option("kind", table_kind, "table kind")->required();
    table->add_option("args", table_args, "extra arguments (riemann: a b c)");
    table->add_option("--points", table_points, "rows for value tables")
        ->check(CLI::PositiveNumber);
    table->add_option("--im0", table_im0, "height of the sample segment")
        ->check(CLI::PositiveNumber);
    table->add_option("-o,--output", table_out, "output path ('-' = stdout)");

    // plot
    auto* plot = app.add_subcommand(
        "plot",
        "SVG plots: fundamental_domains | schwarz_triangle | tessellation");
    std::string plot_kind, plot_id = "phi1", plot_group = "SL2Z";
    int plot_depth = 3;
    std::string plot_out = "plot.svg";
    plot->add_option("kind", plot_kind, "plot kind")->required();
    plot->add_option("--id", plot_id, "triangle map: phi0, phi1, phi2");
    plot->add_option("--group", plot_group,
                     "tessellation group: SL2Z or Gamma2CubeRoot");
    plot->add_option("--depth", plot_depth, "tessellation word length");
    plot->add_option("-o,--output", plot_out, "output path ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*eval) return cmd_eval(eval_args, eval_format);
        if (*verify)
            return cmd_verify(verify_tags, verify_tol, verify_points,
                              verify_tau, verify_format);
        if (*table)
            return cmd_table(table_kind, table_args, table_points, table_im0,
                             table_out);
        if (*plot)
            return cmd_plot(plot_kind, plot_id, plot_group, plot_depth,
                            plot_out);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.message << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
