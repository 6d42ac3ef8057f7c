// acceptance.cpp: end-to-end acceptance run, one PASS/FAIL line per criterion
//
// Exit status is 0 when every criterion was evaluated; with --strict it is 1 if any failed.
// Pass criterion numbers (1..11) to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "ccqed/config.hpp"
#include "ccqed/equilibrium.hpp"
#include "ccqed/observables.hpp"
#include "ccqed/sweep.hpp"
#include "oracle/brute_force.hpp"

using namespace ccqed;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, ...)
{
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

struct Verdict {
    bool pass = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string& what)
    {
        pass = pass && ok;
        details.push_back((ok ? "" : "FAILED ") + what);
    }
    // Context only; never affects the verdict.
    void note(const std::string& what) { details.push_back("info: " + what); }
};

constexpr double kStep = 0.005; // μ_B grid of the default-parameter scan, units of g

// Defaults: 1/βg = 0.001, γ = 0.02, κ = 0.007, zτ = 0.6, n_max = 10.
ModelParams default_params()
{
    return ModelParams{};
}

struct SharedScan {
    ScanResult result;
    double seconds = 0.0;
};

const SharedScan& default_scan()
{
    static const SharedScan shared = [] {
        SweepSpec spec;
        spec.kind = SweepKind::MuBScan;
        spec.base = default_params();
        spec.mu_b_axis = {-1.5, -0.2, kStep};
        spec.direction = Direction::Both;
        const auto t0 = Clock::now();
        SharedScan s;
        s.result = run_mu_b_scan(spec);
        s.seconds = seconds_since(t0);
        std::cout << fmt("       (default-parameter scan: %zu rows in %.0f s)\n", s.result.rows.size(), s.seconds);
        return s;
    }();
    return shared;
}

// Rows of one pass in ascending μ_B, the order used by scan_samples.
std::vector<const SweepRow*> pass_rows(const ScanResult& r, Pass pass)
{
    std::vector<const SweepRow*> out;
    for (const auto& row : r.rows)
        if (row.pass == pass) out.push_back(&row);
    std::stable_sort(out.begin(), out.end(),
                     [](const SweepRow* a, const SweepRow* b) { return a->params.mu_b < b->params.mu_b; });
    return out;
}

const std::vector<PlateauRegion>& pass_regions(const ScanResult& r, Pass pass)
{
    static const std::vector<PlateauRegion> none;
    for (const auto& pp : r.plateaus)
        if (pp.pass == pass) return pp.regions;
    return none;
}

constexpr Pass kPasses[] = {Pass::Ascending, Pass::Descending};

OperatorMatrix random_density(int dim, std::mt19937_64& rng)
{
    std::normal_distribution<double> n(0.0, 1.0);
    OperatorMatrix x(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) x(i, j) = complex(n(rng), n(rng));
    OperatorMatrix rho = x * x.adjoint();
    return rho / rho.trace();
}

// exp(−β(K − δμ N)) normalised.
OperatorMatrix gibbs(const OperatorMatrix& k, const OperatorMatrix& n, double beta, double delta_mu)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(k - delta_mu * n);
    const Eigen::VectorXd e = es.eigenvalues();
    Eigen::VectorXd w = (-beta * (e.array() - e(0))).exp();
    w /= w.sum();
    return es.eigenvectors() * w.cast<complex>().asDiagonal() * es.eigenvectors().adjoint();
}

// ---------------------------------------------------------------------------

Verdict generator_soundness()
{
    const auto t0 = Clock::now();
    std::mt19937_64 rng(1001);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_trace = 0.0, worst_herm = 0.0;
    for (int i = 0; i < 100; ++i) {
        ModelParams p;
        p.cfg = HilbertConfig(1 + i % 10);
        p.z_tau = u(rng);
        p.kappa = i % 7 == 0 ? 0.0 : 0.05 * u(rng);
        p.gamma = 0.001 + 0.05 * u(rng);
        p.beta = std::pow(10.0, 3.0 * u(rng));
        p.mu_b = -1.5 + 1.5 * u(rng);
        const MeanField mf{2.0 * u(rng), -1.5 + 1.5 * u(rng)};
        const Assembly a = assemble(p, mf, false);
        const double lnorm = a.total.matrix.norm();
        const int d = p.cfg.dim();
        const Eigen::VectorXcd one = vec(OperatorMatrix::Identity(d, d));
        worst_trace = std::max(worst_trace, (a.total.matrix.adjoint() * one).norm() / lnorm);
        const OperatorMatrix out = a.total.apply(random_density(d, rng));
        worst_herm = std::max(worst_herm, (out - out.adjoint()).norm() / lnorm);
    }
    const double secs = seconds_since(t0);
    Verdict v;
    v.require(worst_trace < 1e-10, fmt("max |L^dag(1)|/|L| = %.2e (< 1e-10)", worst_trace));
    v.require(worst_herm < 1e-12, fmt("max |L(rho) - L(rho)^dag|/|L| = %.2e (< 1e-12)", worst_herm));
    v.require(secs < 10.0, fmt("%.2f s (< 10 s)", secs));
    return v;
}

Verdict steady_state_validity()
{
    const auto& rows = default_scan().result.rows;
    double trace = 0.0, herm = 0.0, min_eig = 0.0, resid = 0.0;
    std::size_t converged = 0;
    for (const auto& r : rows) {
        if (!r.converged) continue;
        ++converged;
        const auto& c = r.certificate;
        trace = std::max(trace, c.trace_error);
        herm = std::max(herm, c.hermiticity_error);
        min_eig = std::min(min_eig, c.min_eig_rho);
        resid = std::max(resid, c.residual_norm / c.generator_norm);
    }
    Verdict v;
    v.require(converged > 0, fmt("%zu of %zu scan points converged", converged, rows.size()));
    v.require(trace < 1e-12, fmt("max |Tr rho - 1| = %.2e (< 1e-12)", trace));
    v.require(herm < 1e-12, fmt("max |rho - rho^dag| = %.2e (< 1e-12)", herm));
    v.require(min_eig >= -1e-10, fmt("min eig rho = %.2e (>= -1e-10)", min_eig));
    v.require(resid < 1e-9, fmt("max |L rho|/|L| = %.2e (< 1e-9)", resid));
    return v;
}

Verdict oracle_equivalence()
{
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2002);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const oracle::Ops ops = oracle::build_ops(1);
    double gen = 0.0, state = 0.0, cur = 0.0;
    for (int i = 0; i < 20; ++i) {
        ModelParams p;
        p.cfg = HilbertConfig(1);
        p.z_tau = u(rng);
        p.kappa = 0.002 + 0.05 * u(rng);
        p.gamma = 0.005 + 0.05 * u(rng);
        p.beta = std::pow(10.0, 3.0 * u(rng));
        p.mu_b = -1.5 + 1.5 * u(rng);
        const MeanField mf{1.5 * u(rng), -1.5 + 1.5 * u(rng)};

        const Assembly a = assemble(p, mf);
        const SteadyState ss = solve_steady(a.total, false);
        const ObservableRecord obs = compute_observables(p, a, ss.rho);

        const oracle::Point pt{1, p.omega0, p.g_coupling, p.z_tau, p.kappa, p.gamma, p.beta, p.mu_b, mf.psi, mf.mu};
        const auto d = oracle::eigen_channels(pt, ops);
        const oracle::Mat l = oracle::generator_matrix(pt, ops, d);
        const oracle::Mat rho = oracle::steady_state(l, 4);
        const oracle::Currents c = oracle::currents(pt, ops, d, rho);

        gen = std::max(gen, (a.total.matrix - l).cwiseAbs().maxCoeff());
        state = std::max(state, oracle::trace_distance(ss.rho.matrix, rho));
        cur = std::max({cur, std::abs(obs.j_tls_in - c.tls_in), std::abs(obs.j_tls_out - c.tls_out),
                        std::abs(obs.j_ph_out - c.ph_out)});
    }
    const double secs = seconds_since(t0);
    Verdict v;
    v.require(gen < 1e-10, fmt("generator max entry diff %.2e", gen));
    v.require(state < 1e-10, fmt("steady state trace distance %.2e", state));
    v.require(cur < 1e-10, fmt("current diff %.2e", cur));
    v.require(secs < 5.0, fmt("%.2f s (< 5 s)", secs));
    return v;
}

Verdict equilibrium_limit()
{
    Verdict v;
    double worst = 0.0;
    struct G { double beta, mu_b, mu; };
    for (const G& c : {G{1000.0, -1.0, -1.2}, G{1000.0, -0.6, -0.9}, G{100.0, -0.8, -1.0}, G{20.0, -0.7, -0.9}}) {
        ModelParams p;
        p.kappa = 0.0;
        p.beta = c.beta;
        p.mu_b = c.mu_b;
        const MeanField mf{0.0, c.mu};
        const Assembly a = assemble(p, mf, false);
        const SteadyState ss = solve_steady(a.total, false);
        const OperatorMatrix ref = gibbs(a.k_s, build_number_operators(p.cfg).total, p.beta, p.mu_b - mf.mu);
        worst = std::max(worst, trace_distance(ss.rho.matrix, ref));
    }
    v.require(worst < 1e-8, fmt("Gibbs trace distance %.2e (< 1e-8)", worst));

    double dev = 0.0;
    bool all_coherent = true;
    for (double mu_b : {-1.25, -1.0, -0.8}) {
        ModelParams p;
        p.kappa = 0.0;
        p.mu_b = mu_b;
        const SweepRow row = run_single_point(p);
        all_coherent = all_coherent && row.converged && row.phase == Phase::Coherent;
        if (row.phase == Phase::Coherent) dev = std::max(dev, std::abs(row.mf.mu - mu_b));
    }
    v.require(all_coherent, "kappa = 0 points at mu_B = -1.25, -1.0, -0.8 converge coherent");
    v.require(dev < 1e-6, fmt("max |mu - mu_B| = %.2e g (< 1e-6)", dev));
    return v;
}

Verdict near_equilibrium()
{
    const auto& s = default_scan();
    Verdict v;
    for (Pass pass : kPasses) {
        const auto& regions = pass_regions(s.result, pass);
        const double end = regions.empty() ? std::numeric_limits<double>::infinity() : regions.front().mu_b_start;
        double dev = 0.0;
        std::size_t n = 0;
        for (const SweepRow* r : pass_rows(s.result, pass)) {
            if (r->params.mu_b >= end || !r->converged || r->phase != Phase::Coherent) continue;
            ++n;
            dev = std::max(dev, std::abs(r->mf.mu - r->params.mu_b));
        }
        v.require(n >= 3 && dev < 0.01,
                  fmt("%s: %zu weak-pumping points, max |mu - mu_B| = %.4f g (< 0.01)", to_string(pass), n, dev));
    }
    v.require(s.seconds < 1800.0, fmt("scan %.0f s (< 1800 s)", s.seconds));
    return v;
}

Verdict plateau_structure()
{
    const auto& s = default_scan();
    Verdict v;
    for (Pass pass : kPasses) {
        const auto& regions = pass_regions(s.result, pass);
        const auto rows = pass_rows(s.result, pass);
        v.require(regions.size() >= 2, fmt("%s: %zu plateaus (>= 2)", to_string(pass), regions.size()));
        double worst_out = 0.0, worst_bal = 0.0;
        for (const auto& reg : regions) {
            double worst_td = 0.0, interior_td = 0.0;
            std::string where = "-";
            for (std::size_t i = reg.first_index; i <= reg.last_index; ++i) {
                const auto& o = rows[i]->observables;
                worst_out = std::max(worst_out, o.j_tls_out / o.j_tls_in);
                worst_bal = std::max(worst_bal, std::abs(o.j_tls_in - o.j_ph_out) / o.j_tls_in);
                for (std::size_t j = i + 1; j <= reg.last_index; ++j) {
                    const double td = trace_distance(rows[i]->rho, rows[j]->rho);
                    if (i > reg.first_index && j < reg.last_index) interior_td = std::max(interior_td, td);
                    if (td > worst_td) {
                        worst_td = td;
                        where = fmt("%.3f vs %.3f", rows[i]->params.mu_b, rows[j]->params.mu_b);
                    }
                }
            }
            v.require(worst_td < 1e-6, fmt("%s: plateau [%.3f, %.3f] max pairwise trace distance %.2e (< 1e-6), "
                                           "worst pair mu_B %s",
                                           to_string(pass), reg.mu_b_start, reg.mu_b_end, worst_td, where.c_str()));
            v.note(fmt("%s: same plateau without its two end points: %.2e", to_string(pass), interior_td));
        }
        v.require(worst_out < 0.05, fmt("%s: max J_out/J_in %.4f (< 0.05)", to_string(pass), worst_out));
        v.require(worst_bal < 0.05, fmt("%s: max |J_in - J_ph|/J_in %.4f (< 0.05)", to_string(pass), worst_bal));
    }
    return v;
}

Verdict current_conservation()
{
    double worst = 0.0;
    std::size_t n = 0;
    for (const auto& r : default_scan().result.rows) {
        if (!r.converged) continue;
        ++n;
        const auto& o = r.observables;
        worst = std::max(worst, std::abs(o.j_tls_in - o.j_tls_out - o.j_ph_out) / o.j_tls_in);
    }
    Verdict v;
    v.require(n > 0 && worst <= 1e-8,
              fmt("max |J_in - J_out - J_ph|/J_in = %.2e over %zu points (<= 1e-8)", worst, n));
    return v;
}

// Nearest root of gap_k − δμ along the coherent rows, and the closest approach near `at`.
struct GapCrossing {
    std::vector<double> roots;
    double margin_at = NAN; // gap − δμ at the row nearest `at`
};

GapCrossing gap_crossings(const std::vector<const SweepRow*>& rows, int k, double at)
{
    std::vector<double> x, y;
    GapCrossing out;
    double best = std::numeric_limits<double>::infinity();
    for (const SweepRow* r : rows) {
        if (r->phase != Phase::Coherent || !std::isfinite(r->observables.delta_mu)) continue;
        x.push_back(r->params.mu_b);
        y.push_back(r->observables.gaps[k] - r->observables.delta_mu);
        if (std::abs(r->params.mu_b - at) < best) {
            best = std::abs(r->params.mu_b - at);
            out.margin_at = y.back();
        }
    }
    out.roots = find_crossings(x, y);
    return out;
}

std::string roots_text(const std::vector<double>& roots)
{
    std::string s;
    for (double r : roots) s += fmt("%s%.4f", s.empty() ? "" : ", ", r);
    return s.empty() ? "none" : s;
}

Verdict mechanism_crossings()
{
    const auto& s = default_scan();
    const double beta = default_params().beta;
    Verdict v;
    for (Pass pass : kPasses) {
        const auto& regions = pass_regions(s.result, pass);
        const auto rows = pass_rows(s.result, pass);
        if (regions.size() < 2) {
            v.require(false, fmt("%s: fewer than two plateaus", to_string(pass)));
            continue;
        }
        const PlateauRegion& p1 = regions[0];
        const PlateauRegion& p2 = regions[1];
        auto near_end = [&](int k, double end, const char* name) {
            const GapCrossing c = gap_crossings(rows, k, end);
            double dist = std::numeric_limits<double>::infinity();
            for (double r : c.roots) dist = std::min(dist, std::abs(r - end));
            v.require(dist <= 2.0 * kStep + 1e-12,
                      fmt("%s: %s - (mu_B - mu) crosses at [%s]; plateau end %.3f, nearest %.4f g away (<= %.3f); "
                          "margin at end %.4f g = %.1f kT",
                          to_string(pass), name, roots_text(c.roots).c_str(), end, dist, 2.0 * kStep, c.margin_at,
                          beta * c.margin_at));
        };
        near_end(0, p1.mu_b_end, "E1-E0");
        near_end(2, p2.mu_b_end, "E3-E2");
        const GapCrossing c21 = gap_crossings(rows, 1, p1.mu_b_end);
        const bool inside = std::any_of(c21.roots.begin(), c21.roots.end(), [&](double r) {
            return r > p1.mu_b_end && r < p2.mu_b_start;
        });
        v.require(inside, fmt("%s: E2-E1 crosses at [%s], transition (%.3f, %.3f)", to_string(pass),
                              roots_text(c21.roots).c_str(), p1.mu_b_end, p2.mu_b_start));
    }
    return v;
}

Verdict supplement_closed_form()
{
    SweepSpec spec;
    spec.kind = SweepKind::KappaScan;
    spec.base = default_params();
    spec.kappas = {0.007, 0.004, 0.002};
    spec.mu_b_axis = {-1.5, -0.2, kStep};
    const auto t0 = Clock::now();
    const auto rows = run_kappa_scan(spec);
    const double secs = seconds_since(t0);
    Verdict v;
    double prev = -std::numeric_limits<double>::infinity();
    bool increasing = true;
    for (const auto& r : rows) {
        const bool have = r.mu_b_first_detected.has_value();
        const double det = have ? *r.mu_b_first_detected : NAN;
        v.require(have && std::abs(det - r.mu_b_first_closed) <= 0.05,
                  fmt("kappa %.3f (n_max %d): detected %.3f, closed form %.4f, ground-state estimate %s",
                      r.kappa, r.n_max, det, r.mu_b_first_closed,
                      r.mu_b_first_gs ? fmt("%.4f", *r.mu_b_first_gs).c_str() : "none"));
        increasing = increasing && have && det > prev;
        prev = det;
    }
    v.require(increasing, "onset strictly increases as kappa decreases");
    v.require(secs < 7200.0, fmt("%.0f s (< 7200 s)", secs));
    return v;
}

// Total μ_B length of the coherent region inside [lo, hi], from sorted edges.
double coherent_length(const std::vector<BoundaryCrossing>& edges, double lo, double hi, bool coherent_at_lo)
{
    double len = 0.0, from = lo;
    bool inside = coherent_at_lo;
    for (const auto& e : edges) {
        if (inside) len += e.mu_b - from;
        inside = e.entering_coherent;
        from = e.mu_b;
    }
    if (inside) len += hi - from;
    return len;
}

std::optional<double> first_entering(const std::vector<BoundaryCrossing>& edges)
{
    for (const auto& e : edges)
        if (e.entering_coherent) return e.mu_b;
    return std::nullopt;
}

Verdict phase_diagram_consistency()
{
    Verdict v;
    for (double zt : {0.2, 0.4, 0.6}) {
        ModelParams p = default_params();
        p.z_tau = zt;
        const double lo = -1.5, hi = -1.0;
        const auto diss = first_entering(dissipative_boundary(p, lo, hi, 0.02, 1e-4));
        BoundaryOptions b;
        b.mu_min = lo;
        b.mu_max = hi;
        const auto eq = first_entering(equilibrium_boundary(p, {zt}, b));
        const double diff = diss && eq ? std::abs(*diss - *eq) : NAN;
        v.require(diss && eq && diff <= 0.02, fmt("z tau %.1f: lower edge dissipative %.4f, equilibrium %.4f, |diff| %.4f "
                                                  "(<= 0.02)",
                                                  zt, diss.value_or(NAN), eq.value_or(NAN), diff));
    }
    for (double zt : {0.1, 0.2, 0.3}) {
        ModelParams p = default_params();
        p.z_tau = zt;
        const double lo = -1.3, hi = p.omega0 - zt;
        const auto de = dissipative_boundary(p, lo, hi, 0.02, 1e-3);
        BoundaryOptions b;
        b.mu_min = lo;
        b.mu_max = hi;
        b.tol = 1e-3;
        const auto ee = equilibrium_boundary(p, {zt}, b);
        ModelParams at_lo = p;
        at_lo.mu_b = lo;
        const double dl = coherent_length(de, lo, hi, dissipative_is_coherent(at_lo));
        const double el = coherent_length(ee, lo, hi, equilibrium_is_coherent(p, lo));
        v.require(dl < el, fmt("z tau %.1f: coherent length in [%.1f, %.1f] dissipative %.4f < equilibrium %.4f", zt,
                               lo, hi, dl, el));
    }
    return v;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Verdict determinism()
{
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / fmt("ccqed_acceptance_%d", static_cast<int>(::getpid()));
    fs::create_directories(dir);
    const std::string scan_cfg = "kind = scan-mub\nn_max = 4\nmu_b_min = -1.30\nmu_b_max = -1.10\n"
                                 "mu_b_step = 0.01\ndirection = both\n";
    const std::string phase_cfg = "kind = phase-diagram\nn_max = 4\nz_tau_min = 0.3\nz_tau_max = 0.4\n"
                                  "z_tau_step = 0.1\nmu_b_min = -1.5\nmu_b_max = -1.0\n";
    auto run = [&](const std::string& text, const std::string& tag) {
        std::istringstream in(text);
        const ResolvedConfig cfg = parse_config(in, tag);
        const fs::path out = dir / (tag + ".tsv");
        if (cfg.spec.kind == SweepKind::MuBScan) {
            const ScanResult r = run_mu_b_scan(cfg.spec);
            emit_results(r.rows, out.string());
            emit_plateaus(r, (dir / (tag + ".plateaus.tsv")).string());
            return slurp(out) + slurp(dir / (tag + ".plateaus.tsv"));
        }
        emit_phase_diagram(run_phase_diagram(cfg.spec), out.string());
        return slurp(out);
    };
    Verdict v;
    const std::string a = run(scan_cfg, "scan_a"), b = run(scan_cfg, "scan_b");
    v.require(!a.empty() && a == b, fmt("mu_B scan tables identical (%zu bytes)", a.size()));
    const std::string c = run(phase_cfg, "phase_a"), d = run(phase_cfg, "phase_b");
    v.require(!c.empty() && c == d, fmt("phase-diagram tables identical (%zu bytes)", c.size()));
    fs::remove_all(dir);
    return v;
}

struct Criterion {
    const char* name;
    std::function<Verdict()> run;
};

} // namespace

int main(int argc, char** argv)
{
    bool strict = false;
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--strict") strict = true;
        else only.insert(std::stoi(arg));
    }

    const std::vector<Criterion> criteria = {
        {"generator soundness", generator_soundness},
        {"steady-state validity", steady_state_validity},
        {"oracle equivalence at n_max = 1", oracle_equivalence},
        {"equilibrium limit", equilibrium_limit},
        {"near-equilibrium regime", near_equilibrium},
        {"plateau existence and structure", plateau_structure},
        {"current conservation", current_conservation},
        {"mechanism crossings", mechanism_crossings},
        {"closed-form plateau onset", supplement_closed_form},
        {"phase-diagram consistency", phase_diagram_consistency},
        {"determinism", determinism},
    };

    int failed = 0, evaluated = 0;
    bool errored = false;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int number = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(number)) continue;
        const auto t0 = Clock::now();
        Verdict v;
        try {
            v = criteria[i].run();
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
            errored = true;
        }
        ++evaluated;
        if (!v.pass) ++failed;
        std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << number << ". " << criteria[i].name
                  << fmt(" (%.1f s)", seconds_since(t0)) << "\n";
        for (const auto& d : v.details) std::cout << "       " << d << "\n";
        std::cout.flush();
    }
    std::cout << fmt("%d/%d criteria passed\n", evaluated - failed, evaluated);
    if (errored) return 1;
    return strict && failed > 0 ? 1 : 0;
}
