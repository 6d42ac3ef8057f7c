// liouvillian.hpp: Quantum-master-equation generator on column-stacked density matrices

#pragma once

#include <vector>

#include "ccqed/hamiltonian.hpp"

namespace ccqed {

// Linear map on vec(ρ), column stacking: vec(A ρ B) = (Bᵀ ⊗ A) vec(ρ).
struct Superoperator {
    Eigen::MatrixXcd matrix;

    Eigen::Index dim() const;  // D of the underlying D×D operators
    OperatorMatrix apply(const OperatorMatrix& rho) const;
};

Eigen::VectorXcd vec(const OperatorMatrix& rho);
OperatorMatrix unvec(const Eigen::VectorXcd& v);
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

struct FermiWeight {
    double omega = 0.0;
    double f_plus = 0.0;
    double f_minus = 1.0;
};

inline constexpr double kFermiExponentClamp = 50.0;

// f+(ω) = 1 / (1 + exp β(ω − Δμ)), with Δμ = μ_B − μ.
FermiWeight fermi(double omega, double beta, double delta_mu);

Superoperator superop_hamiltonian(const OperatorMatrix& k_s);
Superoperator superop_loss(double kappa, const OperatorMatrix& a);

struct PumpSuperoperators {
    Superoperator plus;  // L_TLS^+
    Superoperator minus; // L_TLS^-
};

PumpSuperoperators superop_pump(double gamma, const std::vector<FermiWeight>& weights,
                                const EigenOperatorSet& eig_ops, const OperatorMatrix& sigma_plus);

// Same generator from the pre-summed weighted eigenoperators
// A± = Σ_ω f±(ω) σ+_ω.
PumpSuperoperators superop_pump_from_sums(double gamma, const OperatorMatrix& sigma_plus,
                                          const OperatorMatrix& weighted_plus,
                                          const OperatorMatrix& weighted_minus);

struct Assembly {
    Superoperator total;
    // Individual generators; empty unless assembled with parts.
    Superoperator commutator;
    Superoperator loss;
    PumpSuperoperators pump;
    OperatorMatrix k_s;
    EigenSystem eig;
    double delta_mu = 0.0;
};

Assembly assemble(const ModelParams& params, const MeanField& mf, bool with_parts = true);

} // namespace ccqed
