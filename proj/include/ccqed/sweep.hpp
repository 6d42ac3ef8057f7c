// sweep.hpp: μ_B scans, phase-diagram bisection and the κ-scan of the first plateau onset

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccqed/equilibrium.hpp"
#include "ccqed/observables.hpp"
#include "ccqed/self_consistency.hpp"

namespace ccqed {

enum class SweepKind { SinglePoint, MuBScan, PhaseDiagram, KappaScan };
enum class Direction { Ascending, Descending, Both };

struct GridAxis {
    double min = 0.0;
    double max = 0.0;
    double step = 0.0;

    // min + k·step for k = 0..⌊(max − min)/step⌋ (+1 if max is hit within 1e-9 step).
    std::vector<double> values() const;
    bool operator==(const GridAxis&) const = default;
};

struct SweepSpec {
    SweepKind kind = SweepKind::SinglePoint;
    ModelParams base;
    GridAxis mu_b_axis{-1.5, -0.2, 0.005};    // absolute μ_B
    Direction direction = Direction::Both;
    GridAxis z_tau_axis{0.02, 1.0, 0.02};
    std::vector<double> kappas{0.007, 0.004, 0.002};
    bool cutoff_schedule = true;              // κ-scan: n_max 15/25/30 by κ
    bool stop_after_first_plateau = true;     // κ-scan
    int gs_n_max = 500;
    SelfConsistencyOptions sc;
    double plateau_tol_mu = kPlateauTolMu;    // units of g
    double plateau_tol_nph = kPlateauTolNph;
    int plateau_min_steps = kPlateauMinSteps;
    double boundary_tol = 1e-4;               // units of g
    double boundary_coarse_step = 0.02;
    int workers = 1;
    std::string output;

    void validate() const;
    bool operator==(const SweepSpec&) const = default;
};

enum class Pass { Single, Ascending, Descending };
const char* to_string(Pass p);

struct SweepRow {
    Pass pass = Pass::Single;
    std::size_t index = 0;        // position along the pass
    ModelParams params;           // μ_B, zτ, κ, ... of this point
    Phase phase = Phase::Incoherent;
    bool ambiguous = false;       // cold ladder found more than one coherent root
    MeanField mf;                 // μ is NaN in the incoherent phase
    ObservableRecord observables;
    SteadyStateCertificate certificate;
    int branch_id = -1;           // 0 warm continuation, k+1 ladder seed k, −1 incoherent
    bool converged = false;
    int iterations = 0;
    double residual = 0.0;        // |Tr ρ a − ψ|
    OperatorMatrix rho;           // kept in memory, not emitted
};

struct PassPlateaus {
    Pass pass = Pass::Ascending;
    std::vector<PlateauRegion> regions;
};

struct ScanResult {
    std::vector<SweepRow> rows;
    std::vector<PassPlateaus> plateaus;
    bool all_converged() const;
};

// One grid point, cold seed ladder.
SweepRow run_single_point(const ModelParams& params, const SelfConsistencyOptions& opts = {});

ScanResult run_mu_b_scan(const SweepSpec& spec);

// Rows of one pass as plateau-detector input (incoherent rows carry μ = NaN).
std::vector<ScanSample> scan_samples(const std::vector<SweepRow>& rows, Pass pass);

struct PhaseBoundaryRow {
    double z_tau = 0.0;
    std::optional<double> mu_b_dissipative; // lowest incoherent→coherent edge
    std::optional<double> mu_b_equilibrium;
    std::vector<BoundaryCrossing> dissipative_edges;
    std::vector<BoundaryCrossing> equilibrium_edges;
};

// Coherent if any seed of the ladder converges to ψ > psi_threshold.
bool dissipative_is_coherent(const ModelParams& params, const SelfConsistencyOptions& opts = {});

// Dissipative edges along μ_B ∈ [mu_lo, mu_hi] by coarse scan and bisection.
std::vector<BoundaryCrossing> dissipative_boundary(const ModelParams& params, double mu_lo, double mu_hi,
                                                   double coarse_step, double tol,
                                                   const SelfConsistencyOptions& opts = {});

std::vector<PhaseBoundaryRow> run_phase_diagram(const SweepSpec& spec);

struct KappaRow {
    double kappa = 0.0;
    int n_max = 0;
    std::optional<double> mu_b_first_detected;
    std::optional<double> mu_b_first_gs;
    double mu_b_first_closed = 0.0;
    std::size_t points = 0;
    bool converged = true;
    std::string note;
};

// Cutoff used for κ when the schedule is on: 15 for κ/g ≥ 0.002, 25 down to 0.0008, 30 below.
int scheduled_cutoff(double kappa_over_g);

std::vector<KappaRow> run_kappa_scan(const SweepSpec& spec);

} // namespace ccqed
