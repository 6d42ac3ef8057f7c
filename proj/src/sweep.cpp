// sweep.cpp: warm-started scans, boundary bisection and the κ-scan

#include "ccqed/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <stdexcept>

namespace ccqed {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Order-restoring map over [0, n) with at most `workers` jobs in flight.
template <class T>
std::vector<T> parallel_map(std::size_t n, int workers, const std::function<T(std::size_t)>& fn)
{
    std::vector<T> out(n);
    const std::size_t w = static_cast<std::size_t>(std::max(1, workers));
    if (w == 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    for (std::size_t start = 0; start < n; start += w) {
        const std::size_t stop = std::min(n, start + w);
        std::vector<std::future<T>> jobs;
        for (std::size_t i = start; i < stop; ++i) jobs.push_back(std::async(std::launch::async, fn, i));
        for (std::size_t i = start; i < stop; ++i) out[i] = jobs[i - start].get();
    }
    return out;
}

struct LadderOutcome {
    std::vector<SelfConsistentSolution> roots; // descending ψ, branch_id = seed index
    int failures = 0;
};

LadderOutcome cold_ladder(const ModelParams& params, const SelfConsistencyOptions& opts)
{
    LadderOutcome out;
    const auto seeds = default_seed_ladder(params);
    for (std::size_t k = 0; k < seeds.size(); ++k) {
        SelfConsistentSolution s;
        try {
            s = solve_selfconsistent(params, seeds[k], opts);
        } catch (const NoStationaryState&) {
            ++out.failures;
            continue;
        }
        if (!s.converged) {
            ++out.failures;
            continue;
        }
        if (s.trivial || s.mf.psi <= opts.psi_threshold) continue;
        s.branch_id = static_cast<int>(k);
        const bool duplicate = std::any_of(out.roots.begin(), out.roots.end(), [&](const auto& r) {
            return std::abs(r.mf.psi - s.mf.psi) < 1e-6 && std::abs(r.mf.mu - s.mf.mu) < 1e-6;
        });
        if (!duplicate) out.roots.push_back(std::move(s));
    }
    std::stable_sort(out.roots.begin(), out.roots.end(),
                     [](const auto& l, const auto& r) { return l.mf.psi > r.mf.psi; });
    return out;
}

SweepRow evaluate_row(const ModelParams& params, const SelfConsistentSolution* sol, bool compute_gap)
{
    SweepRow row;
    row.params = params;
    const MeanField mf = sol ? sol->mf : MeanField{0.0, params.mu_b};
    const Assembly asmb = assemble(params, mf, true);
    DensityMatrix rho = sol ? sol->rho : solve_steady(asmb.total, false).rho;
    row.certificate = certify(rho, asmb.total, compute_gap);
    row.observables = compute_observables(params, asmb, rho);
    row.mf = mf;
    if (sol) {
        row.phase = Phase::Coherent;
        row.iterations = sol->iterations;
        row.residual = std::abs(sol->residual);
        row.converged = sol->converged;
    } else {
        // ψ = 0: the frame is arbitrary; evaluated at μ = μ_B and reported as undefined.
        row.mf.mu = kNaN;
        row.observables.delta_mu = kNaN;
        row.converged = true;
    }
    // A near-degenerate stationary manifold is flagged, never resolved.
    if (row.certificate.near_degenerate) row.converged = false;
    row.rho = std::move(rho.matrix);
    return row;
}

SweepRow solve_point(const ModelParams& params, const SelfConsistencyOptions& opts,
                     const std::optional<MeanField>& warm, bool compute_gap)
{
    if (warm) {
        try {
            const SelfConsistentSolution s = solve_selfconsistent(params, *warm, opts);
            if (s.converged && !s.trivial && s.mf.psi > opts.psi_threshold) {
                SweepRow row = evaluate_row(params, &s, compute_gap);
                row.branch_id = 0;
                return row;
            }
        } catch (const NoStationaryState&) {
        }
    }
    const LadderOutcome ladder = cold_ladder(params, opts);
    if (!ladder.roots.empty()) {
        SweepRow row = evaluate_row(params, &ladder.roots.front(), compute_gap);
        row.branch_id = ladder.roots.front().branch_id + 1;
        row.ambiguous = ladder.roots.size() > 1;
        return row;
    }
    SweepRow row = evaluate_row(params, nullptr, compute_gap);
    row.converged = row.converged && ladder.failures == 0;
    return row;
}

using StopRule = std::function<bool(const std::vector<SweepRow>&)>;

std::vector<SweepRow> run_pass(const ModelParams& base, const std::vector<double>& grid, Pass pass,
                               const SelfConsistencyOptions& opts, bool compute_gap, const StopRule& stop = {})
{
    std::vector<SweepRow> rows;
    struct Prev {
        double mu_b;
        MeanField mf;
    };
    std::optional<Prev> prev, prev2;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        ModelParams p = base;
        p.mu_b = grid[i];
        std::optional<MeanField> warm;
        if (prev) {
            // Linear extrapolation of μ covers both μ ≈ μ_B tracking and flat plateaus.
            const double slope = prev2 ? (prev->mf.mu - prev2->mf.mu) / (prev->mu_b - prev2->mu_b) : 1.0;
            warm = MeanField{prev->mf.psi, prev->mf.mu + slope * (p.mu_b - prev->mu_b)};
        }
        SweepRow row = solve_point(p, opts, warm, compute_gap);
        row.pass = pass;
        row.index = i;
        if (row.phase == Phase::Coherent) {
            prev2 = prev;
            prev = Prev{p.mu_b, row.mf};
        } else {
            prev.reset();
            prev2.reset();
        }
        rows.push_back(std::move(row));
        if (stop && stop(rows)) break;
    }
    return rows;
}

std::vector<PlateauRegion> pass_plateaus(const std::vector<SweepRow>& rows, Pass pass, double step,
                                         double tol_mu, double tol_nph, int min_steps, double g)
{
    const auto samples = scan_samples(rows, pass);
    return detect_plateaus(samples, tol_mu * g, tol_nph, min_steps * step);
}

template <class Coherent>
std::vector<BoundaryCrossing> scan_edges(double z_tau, double lo, double hi, double coarse, double tol,
                                         Coherent&& coherent)
{
    std::vector<BoundaryCrossing> out;
    if (!(hi > lo)) return out;
    const int steps = std::max(1, static_cast<int>(std::ceil((hi - lo) / coarse - 1e-9)));
    double prev_mu = lo;
    bool prev = coherent(lo);
    for (int k = 1; k <= steps; ++k) {
        const double mu = std::min(hi, lo + k * coarse);
        const bool cur = coherent(mu);
        if (cur != prev) {
            double a = prev_mu, b = mu;
            while (b - a > tol) {
                const double mid = 0.5 * (a + b);
                (coherent(mid) == prev ? a : b) = mid;
            }
            out.push_back({z_tau, 0.5 * (a + b), cur});
        }
        prev = cur;
        prev_mu = mu;
    }
    return out;
}

std::optional<double> lowest_entering(const std::vector<BoundaryCrossing>& edges)
{
    for (const auto& e : edges)
        if (e.entering_coherent) return e.mu_b;
    return std::nullopt;
}

} // namespace

std::vector<double> GridAxis::values() const
{
    if (!std::isfinite(min) || !std::isfinite(max) || !std::isfinite(step))
        throw std::invalid_argument("GridAxis: non-finite bound or step");
    if (max < min) throw std::invalid_argument("GridAxis: max < min");
    if (max == min) return {min};
    if (!(step > 0.0)) throw std::invalid_argument("GridAxis: step must be > 0");
    const auto n = static_cast<long>(std::floor((max - min) / step + 1e-9));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) out.push_back(min + static_cast<double>(k) * step);
    return out;
}

void SweepSpec::validate() const
{
    base.validate();
    switch (kind) {
    case SweepKind::SinglePoint:
        break;
    case SweepKind::MuBScan:
        if (mu_b_axis.values().empty()) throw std::invalid_argument("SweepSpec: empty μ_B axis");
        break;
    case SweepKind::PhaseDiagram:
        if (z_tau_axis.values().empty() || mu_b_axis.values().empty())
            throw std::invalid_argument("SweepSpec: empty phase-diagram axes");
        if (!(boundary_tol > 0.0) || !(boundary_coarse_step > 0.0))
            throw std::invalid_argument("SweepSpec: boundary tolerances must be > 0");
        break;
    case SweepKind::KappaScan:
        if (kappas.empty()) throw std::invalid_argument("SweepSpec: empty κ list");
        for (double k : kappas)
            if (!std::isfinite(k) || k < 0.0) throw std::invalid_argument("SweepSpec: κ values must be finite and >= 0");
        (void)mu_b_axis.values();
        break;
    }
    if (plateau_min_steps < 1) throw std::invalid_argument("SweepSpec: plateau_min_steps must be >= 1");
    if (workers < 1) throw std::invalid_argument("SweepSpec: workers must be >= 1");
}

const char* to_string(Pass p)
{
    switch (p) {
    case Pass::Single: return "single";
    case Pass::Ascending: return "ascending";
    case Pass::Descending: return "descending";
    }
    return "?";
}

bool ScanResult::all_converged() const
{
    return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.converged; });
}

SweepRow run_single_point(const ModelParams& params, const SelfConsistencyOptions& opts)
{
    params.validate();
    SweepRow row = solve_point(params, opts, std::nullopt, true);
    row.pass = Pass::Single;
    return row;
}

std::vector<ScanSample> scan_samples(const std::vector<SweepRow>& rows, Pass pass)
{
    std::vector<ScanSample> out;
    for (const auto& r : rows)
        if (r.pass == pass) out.push_back({r.params.mu_b, r.observables, r.mf});
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.mu_b < b.mu_b; });
    return out;
}

ScanResult run_mu_b_scan(const SweepSpec& spec)
{
    if (spec.kind != SweepKind::MuBScan) throw std::invalid_argument("run_mu_b_scan: spec.kind must be MuBScan");
    spec.validate();
    const auto grid = spec.mu_b_axis.values();
    std::vector<Pass> passes;
    if (spec.direction != Direction::Descending) passes.push_back(Pass::Ascending);
    if (spec.direction != Direction::Ascending) passes.push_back(Pass::Descending);

    const auto per_pass = parallel_map<std::vector<SweepRow>>(
        passes.size(), std::min<int>(spec.workers, static_cast<int>(passes.size())), [&](std::size_t i) {
            std::vector<double> g = grid;
            if (passes[i] == Pass::Descending) std::reverse(g.begin(), g.end());
            return run_pass(spec.base, g, passes[i], spec.sc, true);
        });

    ScanResult result;
    for (std::size_t i = 0; i < passes.size(); ++i) {
        result.plateaus.push_back({passes[i], pass_plateaus(per_pass[i], passes[i], spec.mu_b_axis.step,
                                                           spec.plateau_tol_mu, spec.plateau_tol_nph,
                                                           spec.plateau_min_steps, spec.base.g_coupling)});
        result.rows.insert(result.rows.end(), per_pass[i].begin(), per_pass[i].end());
    }
    return result;
}

bool dissipative_is_coherent(const ModelParams& params, const SelfConsistencyOptions& opts)
{
    auto seeds = default_seed_ladder(params);
    std::reverse(seeds.begin(), seeds.end());
    for (const auto& seed : seeds) {
        try {
            const SelfConsistentSolution s = solve_selfconsistent(params, seed, opts);
            if (s.converged && !s.trivial && s.mf.psi > opts.psi_threshold) return true;
        } catch (const NoStationaryState&) {
        }
    }
    return false;
}

std::vector<BoundaryCrossing> dissipative_boundary(const ModelParams& params, double mu_lo, double mu_hi,
                                                   double coarse_step, double tol,
                                                   const SelfConsistencyOptions& opts)
{
    ModelParams p = params;
    return scan_edges(params.z_tau, mu_lo, mu_hi, coarse_step, tol, [&](double mu_b) {
        p.mu_b = mu_b;
        return dissipative_is_coherent(p, opts);
    });
}

std::vector<PhaseBoundaryRow> run_phase_diagram(const SweepSpec& spec)
{
    if (spec.kind != SweepKind::PhaseDiagram)
        throw std::invalid_argument("run_phase_diagram: spec.kind must be PhaseDiagram");
    spec.validate();
    const auto taus = spec.z_tau_axis.values();
    const double g = spec.base.g_coupling;
    return parallel_map<PhaseBoundaryRow>(taus.size(), spec.workers, [&](std::size_t i) {
        ModelParams p = spec.base;
        p.z_tau = taus[i];
        PhaseBoundaryRow row;
        row.z_tau = taus[i];
        row.dissipative_edges = dissipative_boundary(p, spec.mu_b_axis.min, spec.mu_b_axis.max,
                                                     spec.boundary_coarse_step * g, spec.boundary_tol * g, spec.sc);
        BoundaryOptions bopts;
        bopts.mu_min = (spec.mu_b_axis.min - p.omega0) / g;
        bopts.mu_max = (spec.mu_b_axis.max - p.omega0) / g;
        bopts.coarse_step = spec.boundary_coarse_step * g;
        bopts.tol = spec.boundary_tol * g;
        bopts.psi_threshold = spec.sc.psi_threshold;
        row.equilibrium_edges = equilibrium_boundary(p, {taus[i]}, bopts);
        row.mu_b_dissipative = lowest_entering(row.dissipative_edges);
        row.mu_b_equilibrium = lowest_entering(row.equilibrium_edges);
        return row;
    });
}

int scheduled_cutoff(double kappa_over_g)
{
    if (kappa_over_g >= 0.002 - 1e-12) return 15;
    if (kappa_over_g >= 0.0008 - 1e-12) return 25;
    return 30;
}

std::vector<KappaRow> run_kappa_scan(const SweepSpec& spec)
{
    if (spec.kind != SweepKind::KappaScan) throw std::invalid_argument("run_kappa_scan: spec.kind must be KappaScan");
    spec.validate();
    const auto grid = spec.mu_b_axis.values();
    const double step = spec.mu_b_axis.step;
    const double g = spec.base.g_coupling;
    const double min_width = spec.plateau_min_steps * step;

    return parallel_map<KappaRow>(spec.kappas.size(), spec.workers, [&](std::size_t i) {
        ModelParams p = spec.base;
        p.kappa = spec.kappas[i];
        if (spec.cutoff_schedule) p.cfg = HilbertConfig(scheduled_cutoff(p.kappa / g));

        KappaRow row;
        row.kappa = p.kappa;
        row.n_max = p.cfg.n_max();
        StopRule stop;
        if (spec.stop_after_first_plateau) {
            stop = [&](const std::vector<SweepRow>& rows) {
                const auto regions = pass_plateaus(rows, Pass::Ascending, step, spec.plateau_tol_mu,
                                                   spec.plateau_tol_nph, spec.plateau_min_steps, g);
                return !regions.empty() && regions.front().mu_b_end - regions.front().mu_b_start >= 2.0 * min_width;
            };
        }
        const auto rows = run_pass(p, grid, Pass::Ascending, spec.sc, false, stop);
        row.points = rows.size();
        row.converged = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.converged; });
        const auto regions = pass_plateaus(rows, Pass::Ascending, step, spec.plateau_tol_mu, spec.plateau_tol_nph,
                                           spec.plateau_min_steps, g);
        if (!regions.empty()) row.mu_b_first_detected = regions.front().mu_b_start;
        else row.note = "no plateau on the μ_B grid";

        row.mu_b_first_closed = mu_b_first_closed_form(p);
        OnsetSearchOptions oopts;
        oopts.n_max = spec.gs_n_max;
        oopts.mu_max = (spec.mu_b_axis.max - p.omega0) / g;
        const OnsetEstimate est = mu_b_first_gs_estimate(p, oopts);
        row.mu_b_first_gs = est.mu_b;
        if (!est.note.empty()) row.note += (row.note.empty() ? "" : "; ") + est.note;
        return row;
    });
}

} // namespace ccqed
