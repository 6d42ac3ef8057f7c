// self_consistency.cpp: Quasi-Newton root finding for the rotating-frame mean field

#include "ccqed/self_consistency.hpp"

#include <algorithm>
#include <cmath>

namespace ccqed {

namespace {

struct Evaluation {
    Eigen::Vector2d f;
    complex amplitude; // Tr ρ a
    DensityMatrix rho;
};

class ResidualMap {
public:
    explicit ResidualMap(const ModelParams& params)
        : params_(params), a_(build_annihilation(params.cfg)) {}

    Evaluation operator()(double psi, double mu) const
    {
        const Assembly asmb = assemble(params_, {psi, mu}, false);
        SteadyState ss = solve_steady(asmb.total, false);
        const complex amp = (ss.rho.matrix * a_).trace();
        const complex r = amp - psi;
        return {Eigen::Vector2d(r.real(), r.imag()), amp, std::move(ss.rho)};
    }

private:
    ModelParams params_;
    OperatorMatrix a_;
};

Eigen::Matrix2d fd_jacobian(const ResidualMap& map, const Eigen::Vector2d& x, const Eigen::Vector2d& f,
                            const SelfConsistencyOptions& opts)
{
    Eigen::Matrix2d j;
    const Evaluation ep = map(x(0) + opts.fd_step_psi, x(1));
    j.col(0) = (ep.f - f) / opts.fd_step_psi;
    const Evaluation em = map(x(0), x(1) + opts.fd_step_mu);
    j.col(1) = (em.f - f) / opts.fd_step_mu;
    return j;
}

double condition_number(const Eigen::Matrix2d& j)
{
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(j);
    const auto s = svd.singularValues();
    return s(1) > 0.0 ? s(0) / s(1) : std::numeric_limits<double>::infinity();
}

} // namespace

complex residual(const ModelParams& params, const MeanField& mf)
{
    if (mf.psi < 0.0) throw std::invalid_argument("residual: psi must be >= 0");
    const Evaluation e = ResidualMap(params)(mf.psi, mf.mu);
    return {e.f(0), e.f(1)};
}

SelfConsistentSolution solve_selfconsistent(const ModelParams& params, const MeanField& seed,
                                            const SelfConsistencyOptions& opts)
{
    if (!(seed.psi > 0.0)) throw std::invalid_argument("solve_selfconsistent: seed psi must be > 0");
    params.validate();
    const ResidualMap map(params);

    SelfConsistentSolution sol;
    Eigen::Vector2d x(seed.psi, seed.mu);
    Evaluation cur = map(x(0), x(1));
    Eigen::Matrix2d jac = fd_jacobian(map, x, cur.f, opts);
    bool fresh = true;
    int polish_left = -1;

    auto finish = [&](bool converged, std::string msg) {
        sol.mf = {x(0), x(1)};
        sol.rho = std::move(cur.rho);
        sol.residual = {cur.f(0), cur.f(1)};
        sol.converged = converged;
        sol.message = std::move(msg);
        return sol;
    };

    for (int it = 0; it < opts.max_iter; ++it) {
        sol.iterations = it;
        const double fnorm = cur.f.norm();

        if (x(0) < 0.01 * opts.psi_threshold) {
            x(0) = 0.0;
            cur = map(0.0, x(1));
            sol.trivial = true;
            return finish(cur.f.norm() < opts.tol, "collapsed onto the trivial root");
        }
        if (fnorm < opts.tol) {
            if (polish_left < 0) polish_left = opts.polish_steps;
            if (polish_left == 0) return finish(true, "converged");
            --polish_left;
        }

        Eigen::Vector2d step;
        const bool ill = !jac.allFinite() || condition_number(jac) > 1e12;
        if (!ill) step = -jac.fullPivLu().solve(cur.f);

        bool accepted = false;
        if (!ill && step.allFinite()) {
            double lambda = 1.0;
            for (int k = 0; k < 12; ++k, lambda *= opts.damping) {
                Eigen::Vector2d trial = x + lambda * step;
                if (trial(0) < 0.0) continue;
                Evaluation ev = map(trial(0), trial(1));
                if (ev.f.norm() < (1.0 - 1e-4 * lambda) * fnorm) {
                    const Eigen::Vector2d dx = trial - x;
                    const Eigen::Vector2d df = ev.f - cur.f;
                    jac += (df - jac * dx) * dx.transpose() / dx.squaredNorm();
                    x = trial;
                    cur = std::move(ev);
                    accepted = true;
                    fresh = false;
                    break;
                }
            }
        }
        if (accepted) continue;

        if (polish_left >= 0) return finish(true, "converged");
        if (!fresh) {
            jac = fd_jacobian(map, x, cur.f, opts);
            fresh = true;
            continue;
        }

        // Damped fixed-point fallback: ψ toward |Tr ρ a|, μ against the residual phase.
        const double phase = std::arg(cur.amplitude);
        x(0) = x(0) + opts.damping * (std::abs(cur.amplitude) - x(0));
        x(1) = x(1) - opts.damping * phase * params.g_coupling * 1e-2;
        cur = map(x(0), x(1));
        jac = fd_jacobian(map, x, cur.f, opts);
        fresh = true;
    }
    sol.iterations = opts.max_iter;
    return finish(false, "maximum iterations reached");
}

std::vector<MeanField> default_seed_ladder(const ModelParams& params)
{
    std::vector<MeanField> seeds;
    for (double psi : {0.05, 0.2, 0.5, 1.0}) seeds.push_back({psi, params.mu_b});
    return seeds;
}

PhaseLabel classify_phase(const ModelParams& params, const std::vector<MeanField>& seeds,
                          const SelfConsistencyOptions& opts)
{
    PhaseLabel label;
    try {
        params.validate();
    } catch (const std::invalid_argument& e) {
        label.flagged = true;
        label.note = std::string("classification rejected: ") + e.what();
        return label;
    }
    if (seeds.empty()) {
        label.flagged = true;
        label.note = "classification rejected: empty seed list";
        return label;
    }

    for (std::size_t k = 0; k < seeds.size(); ++k) {
        SelfConsistentSolution s;
        try {
            s = solve_selfconsistent(params, seeds[k], opts);
        } catch (const NoStationaryState& e) {
            label.note = e.what();
            continue;
        }
        s.branch_id = static_cast<int>(k);
        if (!s.converged || s.trivial || s.mf.psi <= opts.psi_threshold) continue;
        const bool duplicate = std::any_of(label.roots.begin(), label.roots.end(), [&](const auto& r) {
            return std::abs(r.mf.psi - s.mf.psi) < 1e-6 && std::abs(r.mf.mu - s.mf.mu) < 1e-6;
        });
        if (!duplicate) label.roots.push_back(std::move(s));
    }
    std::stable_sort(label.roots.begin(), label.roots.end(),
                     [](const auto& l, const auto& r) { return l.mf.psi > r.mf.psi; });

    if (!label.roots.empty()) {
        label.kind = Phase::Coherent;
        label.psi = label.roots.front().mf.psi;
        label.mu = label.roots.front().mf.mu;
        label.ambiguous = label.roots.size() > 1;
    }
    return label;
}

} // namespace ccqed
