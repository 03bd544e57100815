#include "hml/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

#include "hml/hypergeometric.hpp"
#include "hml/modular.hpp"
#include "hml/schwarz.hpp"

namespace hml {

namespace {

constexpr double kFourierTol = 1e-4;   // pre-rounding coefficient residual
constexpr double kQuarticTol = 1e-12;  // chained quartic equalities

Cplx sq(Cplx z) { return z * z; }
Cplx cube(Cplx z) { return z * z * z; }
Cplx p4(Cplx z) { return sq(sq(z)); }

Cplx F(const HGParams& p, Cplx z) { return hg_principal(p, z); }

const double kThreeRootThree = 3.0 * std::sqrt(3.0);

// ---------------------------------------------------------------------------
// report plumbing

CheckReport make_report(IdentityId id, Cplx point, Cplx lhs, Cplx rhs,
                        double tol, std::string label) {
    CheckReport r;
    r.id = id;
    r.point = point;
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = std::abs(lhs - rhs);
    double scale = std::max(std::abs(lhs), std::abs(rhs));
    r.rel_residual = scale > 0.0 ? r.residual / scale : 0.0;
    r.tol = tol;
    bool finite = std::isfinite(r.residual);
    r.pass = finite && (r.residual <= tol || r.rel_residual <= tol);
    if (!finite) r.residual = std::numeric_limits<double>::infinity();
    r.label = std::move(label);
    return r;
}

CheckReport skip_report(IdentityId id, Cplx point, double tol,
                        std::string label) {
    CheckReport r;
    r.id = id;
    r.point = point;
    r.tol = tol;
    r.pass = true;
    r.skipped = true;
    r.label = std::move(label);
    return r;
}

// ---------------------------------------------------------------------------
// tag table and sampling regions

struct TagInfo {
    IdentityId id;
    const char* name;
};

const TagInfo kTagTable[] = {
    {IdentityId::jacobi_id_theta, "jacobi_id_theta"},
    {IdentityId::jacobi_formula, "jacobi_formula"},
    {IdentityId::jacobi_T, "jacobi_T"},
    {IdentityId::jacobi_pullback, "jacobi_pullback"},
    {IdentityId::j621, "j621"},
    {IdentityId::j621_inv, "j621_inv"},
    {IdentityId::theta_quartic_relations, "theta_quartic_relations"},
    {IdentityId::e4_product, "e4_product"},
    {IdentityId::e4_j_formula, "e4_j_formula"},
    {IdentityId::pullback_phi1, "pullback_phi1"},
    {IdentityId::pullback_phi2, "pullback_phi2"},
    {IdentityId::fe1, "fe1"},
    {IdentityId::fe2, "fe2"},
    {IdentityId::fe3, "fe3"},
    {IdentityId::fe4, "fe4"},
    {IdentityId::fourier_e4, "fourier_e4"},
    {IdentityId::fourier_F2, "fourier_F2"},
    {IdentityId::fourier_F1, "fourier_F1"},
    {IdentityId::fourier_1728j, "fourier_1728j"},
};

enum class Region {
    upper_half,       // any tau with Im >= 0.05
    d2_interior,      // level-2 fundamental region (two lens halves)
    dtilde_interior,  // |Re+1/2| < 1, above both unit arcs
    d_interior,       // |Re| < 1/2, |tau| > 1
    lens,             // |z| < 1 and |1-z| < 1
    small_disc,       // |z| <= 0.15 sampling, 0.25 admitted
    q_line,           // horizontal expansion line Im = const
};

Region region_of(IdentityId id) {
    switch (id) {
        case IdentityId::jacobi_id_theta:
        case IdentityId::theta_quartic_relations:
            return Region::upper_half;
        case IdentityId::jacobi_formula:
        case IdentityId::jacobi_T:
            return Region::d2_interior;
        case IdentityId::j621:
        case IdentityId::j621_inv:
        case IdentityId::e4_product:
            return Region::dtilde_interior;
        case IdentityId::e4_j_formula:
            return Region::d_interior;
        case IdentityId::jacobi_pullback:
        case IdentityId::pullback_phi1:
        case IdentityId::pullback_phi2:
            return Region::lens;
        case IdentityId::fe1:
        case IdentityId::fe2:
        case IdentityId::fe3:
        case IdentityId::fe4:
            return Region::small_disc;
        default:
            return Region::q_line;
    }
}

double default_height(IdentityId id) {
    // the hypergeometric-of-1/j composites need a little more room for the
    // argument to stay small across the whole sample line
    return (id == IdentityId::fourier_F1 || id == IdentityId::fourier_F2)
               ? 1.3
               : 1.1;
}

void require_region(IdentityId id, Cplx pt) {
    const double tol = 1e-9;
    bool ok = true;
    switch (region_of(id)) {
        case Region::upper_half:
            ok = pt.imag() >= 0.05 - 1e-12;
            break;
        case Region::d2_interior:
            ok = pt.imag() > 0.0 && std::abs(pt.real()) <= 1.0 + tol &&
                 std::abs(pt - Cplx{0.5, 0.0}) >= 0.5 - tol &&
                 std::abs(pt + Cplx{0.5, 0.0}) >= 0.5 - tol;
            break;
        case Region::dtilde_interior:
            ok = in_domain_dtilde(pt, tol);
            break;
        case Region::d_interior:
            ok = in_domain_d(pt, tol);
            break;
        case Region::lens:
            ok = std::abs(pt) < 1.0 + tol && std::abs(1.0 - pt) < 1.0 + tol;
            break;
        case Region::small_disc:
            ok = std::abs(pt) <= 0.25;
            break;
        case Region::q_line:
            ok = pt.imag() >= 0.0;
            break;
    }
    if (!ok)
        throw std::domain_error(std::string("check_identity: point outside the "
                                            "stated region for ") +
                                identity_name(id));
}

// van der Corput radical inverse; bases 2 and 3 give the planar sequence
double halton(unsigned long long k, int base) {
    double f = 1.0, r = 0.0;
    while (k > 0) {
        f /= base;
        r += f * static_cast<double>(k % base);
        k /= base;
    }
    return r;
}

std::vector<Cplx> sample_points(IdentityId id, int n, unsigned skip) {
    Region reg = region_of(id);
    if (reg == Region::q_line) return {Cplx{0.0, default_height(id)}};
    std::vector<Cplx> pts;
    unsigned long long k = 1 + skip;
    int guard = 0;
    while (static_cast<int>(pts.size()) < n && ++guard < 100000) {
        double u = halton(k, 2);
        double v = halton(k, 3);
        ++k;
        Cplx z;
        bool ok = true;
        switch (reg) {
            case Region::upper_half:
                z = {-0.9 + 1.8 * u, 0.1 + 1.9 * v};
                break;
            case Region::d2_interior:
                z = {-0.95 + 1.9 * u, 0.55 + 1.65 * v};
                ok = std::abs(z - Cplx{0.5, 0.0}) > 0.52 &&
                     std::abs(z + Cplx{0.5, 0.0}) > 0.52;
                break;
            case Region::dtilde_interior:
                z = {-1.45 + 1.9 * u, 0.95 + 1.25 * v};
                ok = in_domain_dtilde(z, -0.02);
                break;
            case Region::d_interior:
                z = {-0.45 + 0.9 * u, 1.02 + 1.18 * v};
                ok = in_domain_d(z, -0.02);
                break;
            case Region::lens:
                z = {0.08 + 0.84 * u, -0.3 + 0.6 * v};
                ok = std::abs(z) < 0.93 && std::abs(1.0 - z) < 0.93 &&
                     std::abs(z) > 0.05 && std::abs(1.0 - z) > 0.05;
                break;
            case Region::small_disc: {
                double r = 0.15 * std::sqrt(u);
                double th = 2.0 * kPi * v;
                z = {r * std::cos(th), r * std::sin(th)};
                break;
            }
            case Region::q_line:
                break;  // unreachable
        }
        if (ok) pts.push_back(z);
    }
    return pts;
}

// ---------------------------------------------------------------------------
// per-tag evaluation (theta side on one arm, hypergeometric on the other)

std::vector<CheckReport> quartic_reports(Cplx tau, double tol) {
    ThetaSqTriple t = theta_sq_triple(tau);
    Cplx a = sq(t.t00), b = sq(t.t01), c = sq(t.t10);
    const IdentityId id = IdentityId::theta_quartic_relations;
    std::vector<CheckReport> out;
    Cplx s1 = a + kOmega * c;
    out.push_back(make_report(id, tau, s1, b - kOmega2 * c, tol, "sum1-alt1"));
    out.push_back(make_report(id, tau, s1, -kOmega2 * a - kOmega * b, tol,
                              "sum1-alt2"));
    out.push_back(make_report(id, tau, s1,
                              (1.0 - kOmega2) / 3.0 *
                                  (a - kOmega * b - kOmega2 * c),
                              tol, "sum1-scaled"));
    Cplx s2 = a + kOmega2 * c;
    out.push_back(make_report(id, tau, s2, b - kOmega * c, tol, "sum2-alt1"));
    out.push_back(make_report(id, tau, s2, -kOmega * a - kOmega2 * b, tol,
                              "sum2-alt2"));
    out.push_back(make_report(id, tau, s2,
                              (1.0 - kOmega) / 3.0 *
                                  (a - kOmega2 * b - kOmega * c),
                              tol, "sum2-scaled"));
    Cplx half_sum = (sq(a) + sq(b) + sq(c)) / 2.0;
    out.push_back(make_report(id, tau, half_sum, sq(a) - a * c + sq(c), tol,
                              "e4-via-00-10"));
    out.push_back(make_report(id, tau, half_sum, sq(a) - a * b + sq(b), tol,
                              "e4-via-00-01"));
    out.push_back(make_report(id, tau, half_sum, sq(b) + b * c + sq(c), tol,
                              "e4-via-01-10"));
    return out;
}

std::vector<CheckReport> fourier_reports(IdentityId id, double im0) {
    std::function<Cplx(Cplx)> fn;
    std::vector<double> targets;
    bool with_inv = false;
    switch (id) {
        case IdentityId::fourier_e4:
            fn = [](Cplx t) { return e4(t); };
            targets = {1.0, 240.0, 2160.0, 6720.0};
            break;
        case IdentityId::fourier_F1:
            fn = [](Cplx t) {
                return F(params_twelfth(), 1.0 / j_invariant(t).value);
            };
            targets = {1.0, 60.0, -4860.0, 660480.0};
            break;
        case IdentityId::fourier_F2:
            fn = [](Cplx t) {
                return sq(F(params_twelfth(), 1.0 / j_invariant(t).value));
            };
            targets = {1.0, 120.0, -6120.0, 737760.0};
            break;
        default:  // fourier_1728j
            fn = [](Cplx t) { return 1728.0 * j_invariant(t).value; };
            targets = {744.0, 196884.0};
            with_inv = true;
            break;
    }
    FourierSeries s =
        q_expand(fn, static_cast<int>(targets.size()), im0, with_inv);
    std::vector<CheckReport> out;
    Cplx point{0.0, im0};
    if (with_inv)
        out.push_back(make_report(id, point, s.leading_inv_q, Cplx{1.0, 0.0},
                                  kFourierTol, "1/q"));
    for (std::size_t k = 0; k < targets.size(); ++k)
        out.push_back(make_report(id, point, s.coeffs[k],
                                  Cplx{targets[k], 0.0}, kFourierTol,
                                  "q^" + std::to_string(k)));
    return out;
}

// nu and nu/(nu-1), skipping the pole orbit and its T-translate
bool nu_pair(Cplx tau, Cplx* nu_val, Cplx* nu_frac) {
    ModularValue nv = nu(tau);
    if (nv.at_pole || !std::isfinite(std::abs(nv.value)) ||
        std::abs(nv.value) > 1e8)
        return false;
    *nu_val = nv.value;
    if (nu_frac) {
        if (std::abs(nv.value - 1.0) < 1e-10 * std::max(1.0, std::abs(nv.value)))
            return false;
        *nu_frac = nv.value / (nv.value - 1.0);
    }
    return true;
}

std::vector<CheckReport> check_point(IdentityId id, Cplx pt, double tol) {
    require_region(id, pt);
    auto skip = [&](const char* label) {
        return std::vector<CheckReport>{skip_report(id, pt, tol, label)};
    };
    try {
        switch (id) {
            case IdentityId::jacobi_id_theta: {
                ThetaSqTriple t = theta_sq_triple(pt);
                return {make_report(id, pt, sq(t.t00), sq(t.t01) + sq(t.t10),
                                    tol, "")};
            }
            case IdentityId::jacobi_formula: {
                ThetaSqTriple t = theta_sq_triple(pt);
                return {make_report(id, pt, t.t00, F(params_half(), lambda_fn(pt)),
                                    tol, "")};
            }
            case IdentityId::jacobi_T: {
                ThetaSqTriple t = theta_sq_triple(pt);
                Cplx lam = lambda_fn(pt);
                if (std::abs(lam - 1.0) < 1e-10) return skip("lambda-at-1");
                return {make_report(id, pt, t.t01,
                                    F(params_half(), lam / (lam - 1.0)), tol,
                                    "")};
            }
            case IdentityId::jacobi_pullback: {
                SchwarzValue v = schwarz_map(SchwarzId::phi0, pt);
                if (v.at_cusp) return skip("cusp");
                ThetaSqTriple t = theta_sq_triple(v.tau);
                std::vector<CheckReport> out;
                out.push_back(make_report(id, pt, F(params_half(), pt), t.t00,
                                          tol, "theta00"));
                out.push_back(make_report(id, pt,
                                          F(params_half(), pt / (pt - 1.0)),
                                          t.t01, tol, "theta01"));
                return out;
            }
            case IdentityId::j621: {
                Cplx nv;
                if (!nu_pair(pt, &nv, nullptr)) return skip("nu-pole");
                ThetaSqTriple t = theta_sq_triple(pt);
                return {make_report(id, pt, sq(t.t00) + kOmega * sq(t.t10),
                                    sq(F(params_sixth(), nv)), tol, "")};
            }
            case IdentityId::j621_inv: {
                Cplx nv, nf;
                if (!nu_pair(pt, &nv, &nf)) return skip("nu-pole");
                ThetaSqTriple t = theta_sq_triple(pt);
                return {make_report(id, pt, sq(t.t01) - kOmega * sq(t.t10),
                                    sq(F(params_sixth(), nf)), tol, "")};
            }
            case IdentityId::theta_quartic_relations:
                return quartic_reports(pt, tol);
            case IdentityId::e4_product: {
                Cplx nv, nf;
                if (!nu_pair(pt, &nv, &nf)) return skip("nu-pole");
                Cplx rhs = sq(F(params_sixth(), nv)) * sq(F(params_sixth(), nf));
                return {make_report(id, pt, e4(pt), rhs, tol, "")};
            }
            case IdentityId::e4_j_formula: {
                ModularValue jv = j_invariant(pt);
                if (jv.at_pole || std::abs(jv.value) < 1e-12)
                    return skip("j-degenerate");
                Cplx rhs = p4(F(params_twelfth(), 1.0 / jv.value));
                return {make_report(id, pt, e4(pt), rhs, tol, "")};
            }
            case IdentityId::pullback_phi1: {
                SchwarzValue v = schwarz_map(SchwarzId::phi1, pt);
                if (v.at_cusp) return skip("cusp");
                if (std::abs(pt - 1.0) < 1e-12) return skip("vertex");
                ThetaSqTriple t = theta_sq_triple(v.tau);
                Cplx a = sq(t.t00), c = sq(t.t10);
                Cplx f1 = sq(F(params_sixth(), pt));
                Cplx f2 = sq(F(params_sixth(), pt / (pt - 1.0)));
                std::vector<CheckReport> out;
                out.push_back(
                    make_report(id, pt, f1, a + kOmega * c, tol, "direct"));
                out.push_back(
                    make_report(id, pt, f2, a + kOmega2 * c, tol, "fraction"));
                out.push_back(make_report(id, pt, f1 * f2, e4(v.tau), tol, "e4"));
                return out;
            }
            case IdentityId::pullback_phi2: {
                SchwarzValue v = schwarz_map(SchwarzId::phi2, pt);
                if (v.at_cusp) return skip("cusp");
                return {make_report(id, pt, p4(F(params_twelfth(), pt)),
                                    e4(v.tau), tol, "")};
            }
            case IdentityId::fe1: {
                Cplx arg = kI * kThreeRootThree * pt * (1.0 - pt) /
                           cube(1.0 + kOmega * pt);
                Cplx rhs = -kOmega2 * sq(F(params_half(), pt)) -
                           kOmega * sq(F(params_half(), pt / (pt - 1.0)));
                return {make_report(id, pt, sq(F(params_sixth(), arg)), rhs,
                                    tol, "")};
            }
            case IdentityId::fe2: {
                Cplx arg = -kI * kThreeRootThree * pt * (1.0 - pt) /
                           cube(pt + kOmega);
                Cplx rhs = -kOmega * sq(F(params_half(), pt)) -
                           kOmega2 * sq(F(params_half(), pt / (pt - 1.0)));
                return {make_report(id, pt, sq(F(params_sixth(), arg)), rhs,
                                    tol, "")};
            }
            case IdentityId::fe3: {
                Cplx arg = sq(pt) / (4.0 * (pt - 1.0));
                Cplx rhs = F(params_sixth(), pt) *
                           F(params_sixth(), pt / (pt - 1.0));
                return {make_report(id, pt, sq(F(params_twelfth(), arg)), rhs,
                                    tol, "")};
            }
            case IdentityId::fe4: {
                Cplx arg = 27.0 * sq(pt) * sq(1.0 - pt) /
                           (4.0 * cube(sq(pt) - pt + 1.0));
                Cplx a = sq(F(params_half(), pt));
                Cplx b = sq(F(params_half(), pt / (pt - 1.0)));
                return {make_report(id, pt, p4(F(params_twelfth(), arg)),
                                    sq(a) + sq(b) - a * b, tol, "")};
            }
            default: {
                double im0 = pt.imag() > 0.0 ? pt.imag() : default_height(id);
                return fourier_reports(id, im0);
            }
        }
    } catch (const std::domain_error&) {
        // a cut or pole was hit inside the evaluation: excluded point
        return skip("evaluation-skip");
    }
}

int thread_count() {
    if (const char* env = std::getenv("HML_THREADS")) {
        int k = std::atoi(env);
        if (k >= 1) return std::min(k, 32);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(std::min(hw, 8u)) : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    int threads = thread_count();
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) body(i);
        });
    for (std::thread& th : pool) th.join();
}

}  // namespace

std::vector<IdentityId> all_identities() {
    std::vector<IdentityId> out;
    for (const TagInfo& t : kTagTable) out.push_back(t.id);
    return out;
}

const char* identity_name(IdentityId id) {
    for (const TagInfo& t : kTagTable)
        if (t.id == id) return t.name;
    return "unknown";
}

std::optional<IdentityId> identity_from_name(const std::string& name) {
    for (const TagInfo& t : kTagTable)
        if (name == t.name) return t.id;
    return std::nullopt;
}

CheckReport check_identity(IdentityId id, Cplx point, double tol) {
    std::vector<CheckReport> reports = check_point(id, point, tol);
    const CheckReport* worst = &reports.front();
    for (const CheckReport& r : reports) {
        if (r.skipped) continue;
        if (worst->skipped || (!r.pass && worst->pass) ||
            (r.pass == worst->pass && r.residual > worst->residual))
            worst = &r;
    }
    return *worst;
}

std::vector<CheckReport> run_identity(IdentityId id, int n_points, double tol,
                                      unsigned skip) {
    std::vector<Cplx> pts = sample_points(id, n_points, skip);
    std::vector<std::vector<CheckReport>> results(pts.size());
    parallel_for(pts.size(), [&](std::size_t k) {
        results[k] = check_point(id, pts[k], tol);
    });
    std::vector<CheckReport> out;
    for (std::vector<CheckReport>& v : results)
        for (CheckReport& r : v) out.push_back(std::move(r));
    return out;
}

std::vector<CheckReport> fourier_acceptance() {
    std::vector<CheckReport> out;
    for (IdentityId id : {IdentityId::fourier_F1, IdentityId::fourier_F2,
                          IdentityId::fourier_e4, IdentityId::fourier_1728j})
        for (CheckReport& r : fourier_reports(id, default_height(id)))
            out.push_back(std::move(r));
    return out;
}

std::vector<CheckReport> check_theta_quartics(Cplx tau) {
    if (tau.imag() < 0.05)
        throw std::domain_error("check_theta_quartics: Im(tau) < 0.05");
    return quartic_reports(tau, kQuarticTol);
}

SuiteSummary verify_suite(const SuiteGrid& grid, double tol,
                          std::vector<CheckReport>* reports) {
    struct Job {
        IdentityId id;
        Cplx point;
    };
    std::vector<Job> jobs;
    for (IdentityId id : all_identities()) {
        Region reg = region_of(id);
        int n = (reg == Region::lens || reg == Region::small_disc)
                    ? grid.z_points
                    : grid.tau_points;
        for (Cplx p : sample_points(id, n, grid.skip)) jobs.push_back({id, p});
    }
    std::vector<std::vector<CheckReport>> results(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t k) {
        try {
            results[k] = check_point(jobs[k].id, jobs[k].point, tol);
        } catch (const std::exception&) {
            CheckReport r;
            r.id = jobs[k].id;
            r.point = jobs[k].point;
            r.tol = tol;
            r.pass = false;
            r.label = "error";
            r.residual = std::numeric_limits<double>::infinity();
            results[k] = {r};
        }
    });
    SuiteSummary summary;
    for (std::vector<CheckReport>& v : results)
        for (CheckReport& r : v) {
            ++summary.total;
            if (r.skipped)
                ++summary.skipped;
            else if (r.pass)
                ++summary.passed;
            else
                ++summary.failed;
            if (reports) reports->push_back(std::move(r));
        }
    return summary;
}

}  // namespace hml
