// observables.hpp: Photon number, bath currents, K_S gaps and plateau detection

#pragma once

#include <array>
#include <span>
#include <vector>

#include "ccqed/steady_state.hpp"

namespace ccqed {

struct ObservableRecord {
    double n_ph = 0.0;
    double j_tls_in = 0.0;
    double j_tls_out = 0.0;
    double j_ph_out = 0.0;
    std::array<double, 3> gaps{}; // E1−E0, E2−E1, E3−E2
    double delta_mu = 0.0;        // μ_B − μ
};

struct Currents {
    double tls_in = 0.0;  //  Tr[σ+σ− L+ ρ]
    double tls_out = 0.0; // −Tr[σ+σ− L− ρ]
    double ph_out = 0.0;  // −Tr[a†a L_ph ρ]
};

struct PlateauRegion {
    double mu_b_start = 0.0;
    double mu_b_end = 0.0;
    double plateau_mu = 0.0;
    double plateau_n_ph = 0.0;
    std::size_t first_index = 0; // into the scan passed to detect_plateaus
    std::size_t last_index = 0;
};

struct ScanSample {
    double mu_b = 0.0;
    ObservableRecord observables;
    MeanField mf;
};

inline constexpr double kPlateauTolMu = 1e-4;
inline constexpr double kPlateauTolNph = 1e-3;
inline constexpr int kPlateauMinSteps = 3;

double photon_number(const DensityMatrix& rho);

Currents currents(const DensityMatrix& rho, const Superoperator& l_tls_plus,
                  const Superoperator& l_tls_minus, const Superoperator& l_ph);

std::array<double, 3> energy_gaps(const EigenSystem& eig);

// All reported quantities at one converged point; `asmb` must be assembled with parts
// at the same (ψ, μ) that produced `rho`. Throws std::logic_error if J_ph ≠ κ⟨a†a⟩.
ObservableRecord compute_observables(const ModelParams& params, const Assembly& asmb,
                                     const DensityMatrix& rho);

std::vector<PlateauRegion> detect_plateaus(std::span<const ScanSample> scan,
                                           double tol_mu = kPlateauTolMu,
                                           double tol_nph = kPlateauTolNph, double min_width = 0.015);

// Abscissae where y changes sign, by linear interpolation between neighbours.
std::vector<double> find_crossings(std::span<const double> x, std::span<const double> y);

} // namespace ccqed
