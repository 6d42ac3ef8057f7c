// equilibrium.hpp: Zero-temperature (κ = 0) mean-field reference and plateau-onset estimates

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "ccqed/hamiltonian.hpp"

namespace ccqed {

struct GroundStateSolution {
    double psi = 0.0;
    double energy = 0.0;
    Eigen::VectorXd vector;
    double n_ph_gs = 0.0;
    complex sigma_minus_expect{0.0, 0.0};
    double amplitude = 0.0;     // ⟨E0|a|E0⟩
    int iterations = 0;
    bool converged = false;
    // |ψ(n_max) − ψ(n_max + 5)|; negative when not evaluated.
    double cutoff_sensitivity = -1.0;
};

struct GroundStateOptions {
    double damping = 0.5;
    double tol = 1e-12;
    int max_iter = 5000;
    bool aitken = true;            // Δ² extrapolation every third iterate
    bool check_cutoff = false;     // re-solve at n_max + 5
    int dense_limit = 160;         // dense eigensolver up to this dimension, Lanczos above
};

struct LowestEigenpair {
    double value = 0.0;
    Eigen::VectorXd vector;
    double residual = 0.0;
};

// K_S at real ψ as a sparse real symmetric matrix (same basis as build_k_s).
Eigen::SparseMatrix<double> build_k_s_real(const ModelParams& params, const MeanField& mf);

// Restarted Lanczos with full reorthogonalization; `warm` seeds the Krylov space.
LowestEigenpair lowest_eigenpair(const Eigen::SparseMatrix<double>& k, const Eigen::VectorXd* warm = nullptr,
                                 double tol = 1e-12);

GroundStateSolution solve_equilibrium_groundstate(const ModelParams& params, double mu, double seed_psi,
                                                  const GroundStateOptions& opts = {});

struct BoundaryCrossing {
    double z_tau = 0.0;
    double mu_b = 0.0;
    bool entering_coherent = true; // incoherent below, coherent above
};

struct BoundaryOptions {
    double mu_min = -2.0;      // relative to ω0, units of g
    double mu_max = -0.2;
    double coarse_step = 0.02;
    double tol = 1e-4;
    double psi_threshold = 1e-4;
    int workers = 1;
};

bool equilibrium_is_coherent(const ModelParams& params, double mu_b, double psi_threshold = 1e-4);

// Incoherent/coherent transitions along μ_B for each zτ, capped below the unstable
// line μ_B = ω0 − zτ.
std::vector<BoundaryCrossing> equilibrium_boundary(const ModelParams& params, const std::vector<double>& tau_grid,
                                                   const BoundaryOptions& opts = {});

struct CurrentEstimates {
    double j_ph_out = 0.0; // κ ⟨E0|a†a|E0⟩
    double j_tls_in = 0.0; // γ |⟨E0|σ−|E0⟩|²
};

CurrentEstimates gs_current_estimates(const GroundStateSolution& gs, const ModelParams& params);

// ω0 + g(−zτ/g − √(κ/γ))
double mu_b_first_closed_form(const ModelParams& params);

struct OnsetSearchOptions {
    double mu_max = -0.2;     // relative to ω0
    double step = 0.01;
    double tol = 1e-6;
    int n_max = 500;          // ground-state cutoff
};

struct OnsetEstimate {
    std::optional<double> mu_b; // absent when no sign change was found
    double coherent_onset = 0.0;
    std::string note;
};

OnsetEstimate mu_b_first_gs_estimate(const ModelParams& params, const OnsetSearchOptions& opts = {});

// −(ω0 − μ − zτ − iκ/2) ⟨a⟩ / g
complex sigma_minus_from_amplitude(const ModelParams& params, double mu, complex amplitude);

} // namespace ccqed
