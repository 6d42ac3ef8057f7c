// self_consistency.hpp: Mean-field closure ψ = Tr[ρ_ss(ψ, μ) a] and phase classification

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccqed/steady_state.hpp"

namespace ccqed {

struct SelfConsistencyOptions {
    double tol = 1e-10;           // |Tr ρ a − ψ| at acceptance
    int max_iter = 200;
    double fd_step_psi = 1e-6;
    double fd_step_mu = 1e-6;     // in units of g
    double damping = 0.5;         // step halving factor on rejection
    double psi_threshold = 1e-4;  // coherent amplitude cut
    int polish_steps = 4;         // extra Newton steps after tol is met

    bool operator==(const SelfConsistencyOptions&) const = default;
};

struct SelfConsistentSolution {
    MeanField mf;
    DensityMatrix rho;
    complex residual{0.0, 0.0};
    int iterations = 0;
    int branch_id = 0;
    bool converged = false;
    bool trivial = false; // collapsed onto ψ = 0
    std::string message;
};

enum class Phase { Incoherent, Coherent };

struct PhaseLabel {
    Phase kind = Phase::Incoherent;
    double psi = 0.0;
    std::optional<double> mu; // defined only in the coherent phase
    std::vector<SelfConsistentSolution> roots; // distinct coherent roots, descending ψ
    bool ambiguous = false;   // more than one distinct coherent root
    bool flagged = false;     // classification rejected
    std::string note;
};

// Tr[ρ_ss(ψ, μ) a] − ψ.
complex residual(const ModelParams& params, const MeanField& mf);

SelfConsistentSolution solve_selfconsistent(const ModelParams& params, const MeanField& seed,
                                            const SelfConsistencyOptions& opts = {});

// ψ ∈ {0.05, 0.2, 0.5, 1.0}, μ = μ_B.
std::vector<MeanField> default_seed_ladder(const ModelParams& params);

PhaseLabel classify_phase(const ModelParams& params, const std::vector<MeanField>& seeds,
                          const SelfConsistencyOptions& opts = {});

} // namespace ccqed
