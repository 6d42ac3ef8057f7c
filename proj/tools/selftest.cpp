// selftest.cpp: fast built-in oracle checks for the `selftest` verb

#include "selftest.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "ccqed/equilibrium.hpp"
#include "ccqed/observables.hpp"
#include "ccqed/self_consistency.hpp"

namespace ccqed::tools {

namespace {

struct Check {
    std::string name;
    std::function<std::string(bool&)> run; // returns a detail string, sets pass
};

ModelParams random_params(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ModelParams p;
    p.z_tau = 0.8 * u(rng);
    p.kappa = 0.05 * u(rng);
    p.gamma = 0.005 + 0.05 * u(rng);
    p.beta = 5.0 + 50.0 * u(rng);
    p.mu_b = -1.5 + 1.3 * u(rng);
    p.cfg = HilbertConfig(4);
    return p;
}

// exp(−β(K − δμ N)) normalised, from the Hermitian eigendecomposition.
OperatorMatrix gibbs(const OperatorMatrix& k, const OperatorMatrix& n, double beta, double delta_mu)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(k - delta_mu * n);
    const double e0 = es.eigenvalues()(0);
    Eigen::VectorXd w = (-beta * (es.eigenvalues().array() - e0)).exp();
    w /= w.sum();
    return es.eigenvectors() * w.cast<complex>().asDiagonal() * es.eigenvectors().adjoint();
}

char fmt_buf[160];
std::string fmt(const char* f, double a, double b = 0.0)
{
    std::snprintf(fmt_buf, sizeof fmt_buf, f, a, b);
    return fmt_buf;
}

} // namespace

int run_selftest(std::ostream& out)
{
    std::vector<Check> checks;

    checks.push_back({"trace and Hermiticity preservation", [](bool& pass) {
        std::mt19937_64 rng(7);
        double worst_trace = 0.0, worst_herm = 0.0;
        for (int i = 0; i < 10; ++i) {
            const ModelParams p = random_params(rng);
            const Assembly a = assemble(p, {0.3 * (i + 1) / 10.0, p.mu_b + 0.01 * i}, false);
            const Eigen::VectorXcd one = vec(OperatorMatrix::Identity(p.cfg.dim(), p.cfg.dim()));
            const double lnorm = a.total.matrix.norm();
            worst_trace = std::max(worst_trace, (a.total.matrix.adjoint() * one).norm() / lnorm);
            OperatorMatrix h = OperatorMatrix::Random(p.cfg.dim(), p.cfg.dim());
            h = (h + h.adjoint()).eval();
            const OperatorMatrix out = a.total.apply(h);
            worst_herm = std::max(worst_herm, (out - out.adjoint()).norm() / lnorm);
        }
        pass = worst_trace < 1e-10 && worst_herm < 1e-12;
        return fmt("max |L^T 1|/|L| = %.1e, max anti-Hermitian part = %.1e", worst_trace, worst_herm);
    }});

    checks.push_back({"Gibbs state is stationary at kappa = 0, psi = 0", [](bool& pass) {
        ModelParams p;
        p.kappa = 0.0;
        p.beta = 20.0;
        p.mu_b = -0.7;
        p.cfg = HilbertConfig(6);
        const MeanField mf{0.0, -0.9};
        const Assembly a = assemble(p, mf, false);
        const SteadyState ss = solve_steady(a.total, false);
        const auto nums = build_number_operators(p.cfg);
        const OperatorMatrix ref = gibbs(a.k_s, nums.total, p.beta, p.mu_b - mf.mu);
        const double d = trace_distance(ss.rho.matrix, ref);
        pass = d < 1e-8;
        return fmt("trace distance %.1e", d);
    }});

    checks.push_back({"current balance at a coherent point", [](bool& pass) {
        ModelParams p;
        p.mu_b = -1.0;
        const PhaseLabel label = classify_phase(p, default_seed_ladder(p));
        if (label.roots.empty()) {
            pass = false;
            return std::string("no coherent root found");
        }
        const auto& s = label.roots.front();
        const Assembly a = assemble(p, s.mf);
        const ObservableRecord o = compute_observables(p, a, s.rho);
        const double imbalance = std::abs(o.j_tls_in - o.j_tls_out - o.j_ph_out);
        pass = imbalance <= 1e-8 * o.j_tls_in;
        return fmt("|J_in - J_out - J_ph| / J_in = %.1e (psi = %.4f)", imbalance / o.j_tls_in, s.mf.psi);
    }});

    checks.push_back({"closed-form plateau onset", [](bool& pass) {
        const ModelParams p;
        const double v = mu_b_first_closed_form(p);
        const double expect = -0.6 - std::sqrt(0.35);
        pass = std::abs(v - expect) < 1e-14;
        return fmt("%.6f vs %.6f", v, expect);
    }});

    checks.push_back({"equilibrium lobe edge vs second-order vacuum instability", [](bool& pass) {
        const ModelParams p;
        const auto edges = equilibrium_boundary(p, {p.z_tau});
        // Vacuum instability at second order in ψ: zτ·x/(x² − g²) = 1 with x = ω0 − μ_B.
        const double zt = p.z_tau;
        const double expect = p.omega0 - (zt + std::sqrt(zt * zt + 4.0 * p.g_coupling * p.g_coupling)) / 2.0;
        const double got = edges.empty() ? NAN : edges.front().mu_b;
        pass = std::abs(got - expect) < 1e-3;
        return fmt("%.5f vs %.5f", got, expect);
    }});

    int failures = 0;
    for (auto& c : checks) {
        bool pass = false;
        std::string detail;
        try {
            detail = c.run(pass);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
            pass = false;
        }
        out << (pass ? "PASS  " : "FAIL  ") << c.name << "  (" << detail << ")\n";
        failures += pass ? 0 : 1;
    }
    return failures;
}

} // namespace ccqed::tools
