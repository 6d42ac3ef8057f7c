// equilibrium.cpp: ground-state mean field and plateau-onset estimates

#include "ccqed/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace ccqed {

Eigen::SparseMatrix<double> build_k_s_real(const ModelParams& params, const MeanField& mf)
{
    const auto& cfg = params.cfg;
    const int d = cfg.dim();
    const double hop = params.z_tau * mf.psi;
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(5 * d));
    for (int s = 0; s < 2; ++s) {
        for (int n = 0; n <= cfg.n_max(); ++n) {
            const int i = cfg.index(s, n);
            const double excitations = n + s;
            trip.emplace_back(i, i, (params.omega0 - mf.mu) * excitations + hop * mf.psi);
            if (n >= 1) {
                const int j = cfg.index(s, n - 1);
                const double v = -hop * std::sqrt(static_cast<double>(n));
                trip.emplace_back(i, j, v);
                trip.emplace_back(j, i, v);
            }
        }
    }
    // g(σ+ a + σ− a†): |g,n⟩ ↔ |e,n−1⟩ with amplitude g√n
    for (int n = 1; n <= cfg.n_max(); ++n) {
        const int i = cfg.index(0, n), j = cfg.index(1, n - 1);
        const double v = params.g_coupling * std::sqrt(static_cast<double>(n));
        trip.emplace_back(i, j, v);
        trip.emplace_back(j, i, v);
    }
    Eigen::SparseMatrix<double> k(d, d);
    k.setFromTriplets(trip.begin(), trip.end());
    return k;
}

LowestEigenpair lowest_eigenpair(const Eigen::SparseMatrix<double>& k, const Eigen::VectorXd* warm, double tol)
{
    const Eigen::Index n = k.rows();
    const Eigen::Index m = std::min<Eigen::Index>(n, 80);

    Eigen::VectorXd v0;
    if (warm && warm->size() == n && warm->norm() > 0.0) {
        v0 = *warm;
    } else {
        v0.resize(n);
        for (Eigen::Index i = 0; i < n; ++i) v0(i) = 1.0 / (1.0 + static_cast<double>(i));
    }
    v0.normalize();

    LowestEigenpair out;
    for (int restart = 0; restart < 500; ++restart) {
        Eigen::MatrixXd basis(n, m);
        Eigen::VectorXd alpha(m), beta(m);
        basis.col(0) = v0;
        Eigen::Index steps = 0;
        double scale = 0.0;
        for (Eigen::Index j = 0; j < m; ++j) {
            Eigen::VectorXd w = k * basis.col(j);
            alpha(j) = basis.col(j).dot(w);
            for (int pass = 0; pass < 2; ++pass) {
                w -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).transpose() * w);
            }
            steps = j + 1;
            beta(j) = w.norm();
            scale = std::max(scale, std::abs(alpha(j)) + beta(j));
            if (j + 1 == m || beta(j) < 1e-14 * std::max(1.0, scale)) break;
            basis.col(j + 1) = w / beta(j);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        Eigen::VectorXd diag = alpha.head(steps);
        Eigen::VectorXd sub = beta.head(std::max<Eigen::Index>(steps - 1, 0));
        tri.computeFromTridiagonal(diag, sub);
        out.value = tri.eigenvalues()(0);
        out.vector = (basis.leftCols(steps) * tri.eigenvectors().col(0)).normalized();
        out.residual = (k * out.vector - out.value * out.vector).norm();
        if (out.residual < tol * std::max({1.0, std::abs(out.value), scale})) return out;
        v0 = out.vector;
    }
    return out;
}

namespace {

struct GroundStateEval {
    double energy;
    Eigen::VectorXd vector;
    double amplitude;
};

class GroundStateMap {
public:
    GroundStateMap(const ModelParams& params, double mu, const GroundStateOptions& opts)
        : params_(params), mu_(mu), opts_(opts) {}

    GroundStateEval operator()(double psi)
    {
        const auto k = build_k_s_real(params_, {psi, mu_});
        GroundStateEval ev;
        if (k.rows() <= opts_.dense_limit) {
            const Eigen::MatrixXd dense(k);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
            ev.energy = es.eigenvalues()(0);
            ev.vector = es.eigenvectors().col(0);
        } else {
            const LowestEigenpair lp = lowest_eigenpair(k, last_.size() ? &last_ : nullptr);
            ev.energy = lp.value;
            ev.vector = lp.vector;
        }
        last_ = ev.vector;
        ev.amplitude = std::abs(amplitude(ev.vector));
        return ev;
    }

    double amplitude(const Eigen::VectorXd& v) const
    {
        const auto& cfg = params_.cfg;
        double a = 0.0;
        for (int s = 0; s < 2; ++s)
            for (int n = 1; n <= cfg.n_max(); ++n)
                a += std::sqrt(static_cast<double>(n)) * v(cfg.index(s, n - 1)) * v(cfg.index(s, n));
        return a;
    }

private:
    ModelParams params_;
    double mu_;
    GroundStateOptions opts_;
    Eigen::VectorXd last_;
};

GroundStateSolution iterate_groundstate(const ModelParams& params, double mu, double seed_psi,
                                        const GroundStateOptions& opts)
{
    GroundStateMap map(params, mu, opts);
    GroundStateSolution sol;
    double psi = seed_psi;
    std::vector<double> history;
    GroundStateEval ev = map(psi);
    for (int it = 0; it < opts.max_iter; ++it) {
        sol.iterations = it + 1;
        // Near ψ = 0 a small step is not convergence while the map still pushes outward.
        const bool escaping = psi < 1e-6 && ev.amplitude > psi;
        if (std::abs(ev.amplitude - psi) < opts.tol && !escaping) {
            sol.converged = true;
            break;
        }
        double next = psi + opts.damping * (ev.amplitude - psi);
        history.push_back(next);
        if (opts.aitken && history.size() == 3) {
            const double p0 = history[0], p1 = history[1], p2 = history[2];
            const double denom = p2 - 2.0 * p1 + p0;
            const bool contracting = std::abs(p2 - p1) < std::abs(p1 - p0);
            if (contracting && std::abs(denom) > 1e-300) {
                const double extrap = p0 - (p1 - p0) * (p1 - p0) / denom;
                // ψ = 0 is always a fixed point; never jump onto it, only toward it.
                if (std::isfinite(extrap)) next = std::max(extrap, 1e-3 * p2);
            }
            history.clear();
        }
        psi = next;
        ev = map(psi);
    }

    sol.psi = psi;
    sol.energy = ev.energy;
    sol.vector = ev.vector;
    sol.amplitude = ev.amplitude;
    const auto& cfg = params.cfg;
    double nph = 0.0, sm = 0.0;
    for (int n = 0; n <= cfg.n_max(); ++n) {
        const double vg = ev.vector(cfg.index(0, n)), ve = ev.vector(cfg.index(1, n));
        nph += n * (vg * vg + ve * ve);
        sm += vg * ve;
    }
    sol.n_ph_gs = nph;
    sol.sigma_minus_expect = sm;
    return sol;
}

} // namespace

GroundStateSolution solve_equilibrium_groundstate(const ModelParams& params, double mu, double seed_psi,
                                                  const GroundStateOptions& opts)
{
    if (seed_psi < 0.0) throw std::invalid_argument("solve_equilibrium_groundstate: seed_psi must be >= 0");
    GroundStateSolution sol = iterate_groundstate(params, mu, seed_psi, opts);
    if (opts.check_cutoff) {
        ModelParams wider = params;
        wider.cfg = HilbertConfig(params.cfg.n_max() + 5);
        const GroundStateSolution w = iterate_groundstate(wider, mu, std::max(sol.psi, seed_psi), opts);
        sol.cutoff_sensitivity = std::abs(w.psi - sol.psi);
    }
    return sol;
}

bool equilibrium_is_coherent(const ModelParams& params, double mu_b, double psi_threshold)
{
    const GroundStateSolution gs = solve_equilibrium_groundstate(params, mu_b, 1.0);
    return gs.psi > psi_threshold;
}

namespace {

std::vector<BoundaryCrossing> crossings_for_tau(const ModelParams& base, double z_tau, const BoundaryOptions& opts)
{
    ModelParams p = base;
    p.z_tau = z_tau;
    const double lo = p.omega0 + opts.mu_min * p.g_coupling;
    const double hi = std::min(p.omega0 + opts.mu_max * p.g_coupling, p.omega0 - z_tau - 1e-6);
    std::vector<BoundaryCrossing> out;
    if (!(hi > lo)) return out;

    auto coherent = [&](double mu) { return equilibrium_is_coherent(p, mu, opts.psi_threshold); };
    const int steps = std::max(1, static_cast<int>(std::ceil((hi - lo) / opts.coarse_step)));
    double prev_mu = lo;
    bool prev = coherent(lo);
    for (int k = 1; k <= steps; ++k) {
        const double mu = std::min(hi, lo + k * opts.coarse_step);
        const bool cur = coherent(mu);
        if (cur != prev) {
            double a = prev_mu, b = mu;
            while (b - a > opts.tol) {
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

} // namespace

std::vector<BoundaryCrossing> equilibrium_boundary(const ModelParams& params, const std::vector<double>& tau_grid,
                                                   const BoundaryOptions& opts)
{
    if (tau_grid.empty()) throw std::invalid_argument("equilibrium_boundary: empty zτ grid");
    std::vector<std::vector<BoundaryCrossing>> per(tau_grid.size());
    const int workers = std::max(1, opts.workers);
    for (std::size_t start = 0; start < tau_grid.size(); start += static_cast<std::size_t>(workers)) {
        std::vector<std::future<std::vector<BoundaryCrossing>>> jobs;
        const std::size_t stop = std::min(tau_grid.size(), start + static_cast<std::size_t>(workers));
        for (std::size_t i = start; i < stop; ++i) {
            jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                      crossings_for_tau, std::cref(params), tau_grid[i], std::cref(opts)));
        }
        for (std::size_t i = start; i < stop; ++i) per[i] = jobs[i - start].get();
    }
    std::vector<BoundaryCrossing> out;
    for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
    return out;
}

CurrentEstimates gs_current_estimates(const GroundStateSolution& gs, const ModelParams& params)
{
    return {params.kappa * gs.n_ph_gs, params.gamma * std::norm(gs.sigma_minus_expect)};
}

double mu_b_first_closed_form(const ModelParams& params)
{
    if (!(params.gamma > 0.0)) throw std::invalid_argument("mu_b_first_closed_form: gamma must be > 0");
    const double g = params.g_coupling;
    return params.omega0 + g * (-params.z_tau / g - std::sqrt(params.kappa / params.gamma));
}

OnsetEstimate mu_b_first_gs_estimate(const ModelParams& params, const OnsetSearchOptions& opts)
{
    ModelParams p = params;
    p.cfg = HilbertConfig(opts.n_max);
    OnsetEstimate est;

    BoundaryOptions bopts;
    bopts.mu_max = opts.mu_max;
    const auto crossings = equilibrium_boundary(p, {p.z_tau}, bopts);
    const auto first = std::find_if(crossings.begin(), crossings.end(),
                                    [](const BoundaryCrossing& c) { return c.entering_coherent; });
    if (first == crossings.end()) {
        est.note = "no coherent equilibrium region below the unstable line";
        return est;
    }
    est.coherent_onset = first->mu_b;

    double psi_warm = 1.0;
    auto difference = [&](double mu_b) {
        const GroundStateSolution gs = solve_equilibrium_groundstate(p, mu_b, psi_warm);
        if (gs.psi > 1e-6) psi_warm = gs.psi;
        const CurrentEstimates j = gs_current_estimates(gs, p);
        return j.j_ph_out - j.j_tls_in;
    };

    const double hi = std::min(p.omega0 + opts.mu_max * p.g_coupling, p.omega0 - p.z_tau - 1e-3);
    double prev_mu = est.coherent_onset + 1e-3;
    double prev = difference(prev_mu);
    for (double mu = prev_mu + opts.step; mu <= hi + 1e-12; mu += opts.step) {
        const double cur = difference(mu);
        if (prev < 0.0 && cur >= 0.0) {
            double a = prev_mu, b = mu;
            while (b - a > opts.tol) {
                const double mid = 0.5 * (a + b);
                (difference(mid) < 0.0 ? a : b) = mid;
            }
            est.mu_b = 0.5 * (a + b);
            return est;
        }
        prev = cur;
        prev_mu = mu;
    }
    est.note = "J_ph - J_in has no sign change on the search interval";
    return est;
}

complex sigma_minus_from_amplitude(const ModelParams& params, double mu, complex amplitude)
{
    const complex detuning(params.omega0 - mu - params.z_tau, -0.5 * params.kappa);
    return -detuning * amplitude / params.g_coupling;
}

} // namespace ccqed
