// hamiltonian.hpp: Single-site Jaynes-Cummings and mean-field rotating-frame Hamiltonians

#pragma once

#include <vector>

#include "ccqed/hilbert.hpp"

namespace ccqed {

// Physical constants of one simulation point. Energies are in units of the
// TLS-photon coupling g; rates likewise.
struct ModelParams {
    double omega0 = 0.0;
    double g_coupling = 1.0;
    double z_tau = 0.6;
    double kappa = 0.007;
    double gamma = 0.02;
    double beta = 1000.0;
    double mu_b = -1.0;
    HilbertConfig cfg{10};

    // Throws std::invalid_argument on a violated invariant.
    void validate() const;

    bool operator==(const ModelParams&) const = default;
};

// Rotating-frame order parameter ψ e^{-iμt}; ψ is real and non-negative.
struct MeanField {
    double psi = 0.0;
    double mu = 0.0;
};

inline constexpr double kDefaultDegeneracyTol = 1e-9;

struct EigenSystem {
    Eigen::VectorXd energies;          // ascending
    OperatorMatrix vectors;            // columns are eigenvectors
    std::vector<std::vector<int>> groups; // degenerate index sets, ascending energy
    std::vector<int> group_of;         // level index -> group index

    Eigen::Index dim() const { return energies.size(); }
    double group_energy(std::size_t group) const;
    OperatorMatrix projector(std::size_t group) const;
};

struct EigenOperator {
    double omega = 0.0;
    OperatorMatrix sigma_plus;  // Σ_q P(E_q + ω) σ+ P(E_q)
    OperatorMatrix sigma_minus; // Σ_q P(E_q − ω) σ− P(E_q) = (σ+_ω)†
};

struct EigenOperatorSet {
    std::vector<EigenOperator> entries; // sorted by omega
};

OperatorMatrix build_h_jc(const ModelParams& params);

// K_S = H_JC − zτ(ψ a + ψ a† − ψ²) − μ N_S
OperatorMatrix build_k_s(const ModelParams& params, const MeanField& mf);

EigenSystem diagonalize(const OperatorMatrix& k_s, double eps_deg = kDefaultDegeneracyTol);

// Binned transition frequency ω_pq = E_p − E_q for every eigenvector pair,
// with group-mean energies and frequencies closer than eps_deg merged.
Eigen::MatrixXd transition_frequencies(const EigenSystem& eig, double eps_deg = kDefaultDegeneracyTol);

EigenOperatorSet build_eigenoperators(const EigenSystem& eig, const OperatorMatrix& sigma_plus,
                                      double eps_deg = kDefaultDegeneracyTol);

} // namespace ccqed
