#include <doctest.h>

#include <cmath>
#include <random>

#include "ccqed/observables.hpp"
#include "ccqed/self_consistency.hpp"
#include "oracle/brute_force.hpp"

using namespace ccqed;

TEST_CASE("photon number of a Fock mixture")
{
    const HilbertConfig cfg(4);
    DensityMatrix rho{OperatorMatrix::Zero(cfg.dim(), cfg.dim())};
    rho.matrix(cfg.index(0, 2), cfg.index(0, 2)) = 0.25;
    rho.matrix(cfg.index(1, 3), cfg.index(1, 3)) = 0.75;
    CHECK(photon_number(rho) == doctest::Approx(0.5 + 2.25));
}

TEST_CASE("currents balance and match the literal trace formulas")
{
    ModelParams p;
    p.cfg = HilbertConfig(3);
    p.beta = 40.0;
    const MeanField mf{0.45, -1.15};
    const Assembly a = assemble(p, mf);
    const SteadyState ss = solve_steady(a.total, false);
    const ObservableRecord o = compute_observables(p, a, ss.rho);

    const oracle::Point pt{3, p.omega0, p.g_coupling, p.z_tau, p.kappa, p.gamma, p.beta, p.mu_b, mf.psi, mf.mu};
    const oracle::Ops ops = oracle::build_ops(3);
    const auto d = oracle::eigen_channels(pt, ops);
    const auto ref = oracle::currents(pt, ops, d, ss.rho.matrix);
    CHECK(o.j_tls_in == doctest::Approx(ref.tls_in).epsilon(1e-10));
    CHECK(o.j_tls_out == doctest::Approx(ref.tls_out).epsilon(1e-10));
    CHECK(o.j_ph_out == doctest::Approx(ref.ph_out).epsilon(1e-10));
    CHECK(o.j_ph_out == doctest::Approx(p.kappa * o.n_ph).epsilon(1e-12));
    // In − out − loss equals the hopping drive −2 zτ ψ Im⟨a⟩, which vanishes only at a root.
    const complex amp = (ss.rho.matrix * build_annihilation(p.cfg)).trace();
    CHECK(o.j_tls_in - o.j_tls_out - o.j_ph_out == doctest::Approx(-2.0 * p.z_tau * mf.psi * amp.imag()).epsilon(1e-8));
    CHECK(o.delta_mu == doctest::Approx(p.mu_b - mf.mu));
}

TEST_CASE("energy gaps are ordered level differences")
{
    ModelParams p;
    const EigenSystem eig = diagonalize(build_k_s(p, {0.6, -1.2}));
    const auto g = energy_gaps(eig);
    CHECK(g[0] == doctest::Approx(eig.group_energy(1) - eig.group_energy(0)));
    CHECK(g[2] == doctest::Approx(eig.group_energy(3) - eig.group_energy(2)));
    for (double x : g) CHECK(x > 0.0);
}

TEST_CASE("compute_observables requires assembled parts")
{
    ModelParams p;
    p.cfg = HilbertConfig(2);
    const Assembly a = assemble(p, {0.2, -1.0}, false);
    const SteadyState ss = solve_steady(a.total, false);
    CHECK_THROWS(compute_observables(p, a, ss.rho));
}

TEST_CASE("plateau detection on synthetic data")
{
    std::vector<ScanSample> scan;
    for (int k = 0; k <= 40; ++k) {
        ScanSample s;
        s.mu_b = -1.0 + 0.01 * k;
        // Ramp, flat run over k ∈ [10, 20], ramp, flat run over [30, 32] (too short), ramp.
        double mu = s.mu_b;
        if (k >= 10 && k <= 20) mu = -0.9;
        if (k > 20) mu = -0.9 + 0.01 * (k - 20);
        if (k >= 30 && k <= 32) mu = -0.8;
        if (k > 32) mu = -0.8 + 0.01 * (k - 32);
        s.mf.mu = mu;
        s.observables.n_ph = 1.0 + mu;
        scan.push_back(s);
    }
    const auto plateaus = detect_plateaus(scan, 1e-4, 1e-3, 0.03);
    REQUIRE(plateaus.size() == 1);
    CHECK(plateaus[0].first_index == 10);
    CHECK(plateaus[0].last_index == 20);
    CHECK(plateaus[0].mu_b_start == doctest::Approx(-0.9));
    CHECK(plateaus[0].plateau_mu == doctest::Approx(-0.9));
    CHECK(detect_plateaus(scan, 1e-4, 1e-3, 0.02).size() == 2);

    CHECK(detect_plateaus(scan, 1e-4, 1e-3, 0.05).size() == 1);
    scan[15].observables.n_ph += 0.01; // breaks the run in N_ph only
    CHECK(detect_plateaus(scan, 1e-4, 1e-3, 0.05).empty());
}

TEST_CASE("NaN mean fields never form plateaus")
{
    std::vector<ScanSample> scan(10);
    for (int k = 0; k < 10; ++k) {
        scan[k].mu_b = 0.01 * k;
        scan[k].mf.mu = std::nan("");
    }
    CHECK(detect_plateaus(scan).empty());
}

TEST_CASE("crossings by linear interpolation")
{
    const std::vector<double> x{0.0, 1.0, 2.0, 3.0};
    const std::vector<double> y{-1.0, 1.0, 1.0, -3.0};
    const auto c = find_crossings(x, y);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == doctest::Approx(0.5));
    CHECK(c[1] == doctest::Approx(2.25));
    CHECK_THROWS(find_crossings(x, std::vector<double>{1.0}));
}
