// hamiltonian.cpp: Jaynes-Cummings / mean-field Hamiltonians, spectra and eigenoperators

#include "ccqed/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ccqed {

void ModelParams::validate() const
{
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("invalid model parameters: ") + what);
    };
    require(std::isfinite(omega0) && std::isfinite(mu_b), "omega0 and mu_b must be finite");
    require(g_coupling > 0.0, "g_coupling must be > 0");
    require(kappa >= 0.0, "kappa must be >= 0");
    require(gamma > 0.0, "gamma must be > 0");
    require(beta > 0.0, "beta must be > 0");
    require(z_tau >= 0.0, "z_tau must be >= 0");
}

double EigenSystem::group_energy(std::size_t group) const
{
    const auto& members = groups.at(group);
    double sum = 0.0;
    for (int i : members) sum += energies(i);
    return sum / static_cast<double>(members.size());
}

OperatorMatrix EigenSystem::projector(std::size_t group) const
{
    const Eigen::Index d = dim();
    OperatorMatrix p = OperatorMatrix::Zero(d, d);
    for (int i : groups.at(group)) {
        p.noalias() += vectors.col(i) * vectors.col(i).adjoint();
    }
    return p;
}

OperatorMatrix build_h_jc(const ModelParams& params)
{
    const auto& cfg = params.cfg;
    const OperatorMatrix a = build_annihilation(cfg);
    const OperatorMatrix sm = build_sigma_minus(cfg);
    const OperatorMatrix sp = sm.adjoint();
    const NumberOperators num = build_number_operators(cfg);
    OperatorMatrix h = params.omega0 * num.total;
    h += params.g_coupling * (sp * a + sm * a.adjoint());
    return h;
}

OperatorMatrix build_k_s(const ModelParams& params, const MeanField& mf)
{
    const auto& cfg = params.cfg;
    const OperatorMatrix a = build_annihilation(cfg);
    const NumberOperators num = build_number_operators(cfg);
    OperatorMatrix k = build_h_jc(params);
    k -= params.z_tau * mf.psi * (a + a.adjoint());
    k.diagonal().array() += params.z_tau * mf.psi * mf.psi;
    k -= mf.mu * num.total;
    return k;
}

EigenSystem diagonalize(const OperatorMatrix& k_s, double eps_deg)
{
    if (k_s.rows() != k_s.cols() || k_s.rows() == 0) {
        throw std::invalid_argument("diagonalize: matrix must be square and non-empty");
    }
    const double scale = std::max(1.0, k_s.norm());
    if ((k_s - k_s.adjoint()).norm() > 1e-12 * scale) {
        throw std::invalid_argument("diagonalize: matrix is not Hermitian");
    }

    Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(k_s);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("diagonalize: eigensolver failed");
    }

    EigenSystem eig;
    eig.energies = solver.eigenvalues();
    eig.vectors = solver.eigenvectors();
    eig.group_of.assign(static_cast<std::size_t>(eig.energies.size()), 0);
    for (Eigen::Index i = 0; i < eig.energies.size(); ++i) {
        if (i == 0 || eig.energies(i) - eig.energies(i - 1) >= eps_deg) {
            eig.groups.emplace_back();
        }
        eig.groups.back().push_back(static_cast<int>(i));
        eig.group_of[static_cast<std::size_t>(i)] = static_cast<int>(eig.groups.size() - 1);
    }
    return eig;
}

namespace {

struct FrequencyBins {
    std::vector<double> omegas;   // bin representative frequencies, ascending
    Eigen::MatrixXi bin_of;       // (p, q) -> bin index
};

FrequencyBins bin_frequencies(const EigenSystem& eig, double eps_deg)
{
    const std::size_t ng = eig.groups.size();
    std::vector<double> ge(ng);
    for (std::size_t g = 0; g < ng; ++g) ge[g] = eig.group_energy(g);

    struct PairFreq {
        double omega;
        std::size_t p, q;
    };
    std::vector<PairFreq> pairs;
    pairs.reserve(ng * ng);
    for (std::size_t p = 0; p < ng; ++p)
        for (std::size_t q = 0; q < ng; ++q) pairs.push_back({ge[p] - ge[q], p, q});
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const PairFreq& l, const PairFreq& r) { return l.omega < r.omega; });

    Eigen::MatrixXi group_bin(static_cast<Eigen::Index>(ng), static_cast<Eigen::Index>(ng));
    FrequencyBins bins;
    std::vector<std::size_t> cluster;
    auto flush = [&]() {
        if (cluster.empty()) return;
        double sum = 0.0;
        for (std::size_t k : cluster) sum += pairs[k].omega;
        // The zero-frequency bin holds every diagonal pair; pin it exactly.
        double rep = sum / static_cast<double>(cluster.size());
        for (std::size_t k : cluster) {
            if (pairs[k].p == pairs[k].q) {
                rep = 0.0;
                break;
            }
        }
        const int b = static_cast<int>(bins.omegas.size());
        bins.omegas.push_back(rep);
        for (std::size_t k : cluster) {
            group_bin(static_cast<Eigen::Index>(pairs[k].p), static_cast<Eigen::Index>(pairs[k].q)) = b;
        }
        cluster.clear();
    };
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (!cluster.empty() && pairs[k].omega - pairs[cluster.back()].omega >= eps_deg) flush();
        cluster.push_back(k);
    }
    flush();

    const Eigen::Index d = eig.dim();
    bins.bin_of.resize(d, d);
    for (Eigen::Index p = 0; p < d; ++p)
        for (Eigen::Index q = 0; q < d; ++q)
            bins.bin_of(p, q) = group_bin(eig.group_of[static_cast<std::size_t>(p)],
                                          eig.group_of[static_cast<std::size_t>(q)]);
    return bins;
}

} // namespace

Eigen::MatrixXd transition_frequencies(const EigenSystem& eig, double eps_deg)
{
    const FrequencyBins bins = bin_frequencies(eig, eps_deg);
    Eigen::MatrixXd omega(bins.bin_of.rows(), bins.bin_of.cols());
    for (Eigen::Index p = 0; p < omega.rows(); ++p)
        for (Eigen::Index q = 0; q < omega.cols(); ++q)
            omega(p, q) = bins.omegas[static_cast<std::size_t>(bins.bin_of(p, q))];
    return omega;
}

EigenOperatorSet build_eigenoperators(const EigenSystem& eig, const OperatorMatrix& sigma_plus,
                                      double eps_deg)
{
    if (sigma_plus.rows() != eig.dim() || sigma_plus.cols() != eig.dim()) {
        throw std::invalid_argument("build_eigenoperators: dimension mismatch");
    }
    const FrequencyBins bins = bin_frequencies(eig, eps_deg);
    const OperatorMatrix s_eig = eig.vectors.adjoint() * sigma_plus * eig.vectors;
    const Eigen::Index d = eig.dim();

    std::vector<std::vector<std::pair<Eigen::Index, Eigen::Index>>> members(bins.omegas.size());
    for (Eigen::Index q = 0; q < d; ++q)
        for (Eigen::Index p = 0; p < d; ++p)
            members[static_cast<std::size_t>(bins.bin_of(p, q))].emplace_back(p, q);

    EigenOperatorSet set;
    for (std::size_t b = 0; b < bins.omegas.size(); ++b) {
        OperatorMatrix block = OperatorMatrix::Zero(d, d);
        for (auto [p, q] : members[b]) block(p, q) = s_eig(p, q);
        if (block.norm() < 1e-12) continue;
        EigenOperator op;
        op.omega = bins.omegas[b];
        op.sigma_plus = eig.vectors * block * eig.vectors.adjoint();
        op.sigma_minus = op.sigma_plus.adjoint();
        set.entries.push_back(std::move(op));
    }
    return set;
}

} // namespace ccqed
