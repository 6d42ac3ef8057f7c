// steady_state.hpp: Stationary density matrix of a trace-preserving generator

#pragma once

#include <stdexcept>

#include "ccqed/liouvillian.hpp"

namespace ccqed {

struct DensityMatrix {
    OperatorMatrix matrix;

    Eigen::Index dim() const { return matrix.rows(); }
};

struct SteadyStateCertificate {
    double residual_norm = 0.0;  // ‖L vec(ρ)‖₂
    double generator_norm = 0.0; // ‖L‖_F
    double spectral_gap = -1.0;  // second-smallest |λ(L)|; negative when not computed
    double min_eig_rho = 0.0;
    double top_fock_population = 0.0;
    double trace_error = 0.0;
    double hermiticity_error = 0.0;
    bool truncation_warning = false; // top Fock population > 1e-6
    bool near_degenerate = false;    // spectral gap < 1e-8 ‖L‖

    bool gap_computed() const { return spectral_gap >= 0.0; }
    // Density-matrix and residual invariants at their documented tolerances.
    bool valid() const;
};

struct SteadyState {
    DensityMatrix rho;
    SteadyStateCertificate certificate;
};

class NoStationaryState : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GapMethod { Auto, Dense, ShiftInvert };

// Real matrix of L in the orthonormal Hermitian basis {E_jj, (E_jk+E_kj)/√2, i(E_jk−E_kj)/√2}.
// Coordinate b sits at the column-stacked position of (row, col): diagonal, real part when
// row < col, imaginary part when row > col.
Eigen::MatrixXd hermitian_basis_matrix(const Superoperator& l);
Eigen::VectorXd hermitian_coordinates(const OperatorMatrix& rho);
OperatorMatrix from_hermitian_coordinates(const Eigen::VectorXd& x);

double trace_distance(const OperatorMatrix& a, const OperatorMatrix& b);

double spectral_gap(const Superoperator& l, const DensityMatrix& stationary, GapMethod method = GapMethod::Auto);

SteadyState solve_steady(const Superoperator& l, bool compute_gap = true);

SteadyStateCertificate certify(const DensityMatrix& rho, const Superoperator& l, bool compute_gap = true);

} // namespace ccqed
