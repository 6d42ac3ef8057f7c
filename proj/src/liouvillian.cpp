// liouvillian.cpp: Commutator, cavity-loss and pumping superoperators

#include "ccqed/liouvillian.hpp"

#include <cmath>
#include <stdexcept>

namespace ccqed {

Eigen::Index Superoperator::dim() const
{
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(matrix.rows()))));
    return d;
}

OperatorMatrix Superoperator::apply(const OperatorMatrix& rho) const
{
    return unvec(matrix * vec(rho));
}

Eigen::VectorXcd vec(const OperatorMatrix& rho)
{
    return Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
}

OperatorMatrix unvec(const Eigen::VectorXcd& v)
{
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
    if (d * d != v.size()) throw std::invalid_argument("unvec: length is not a perfect square");
    return Eigen::Map<const OperatorMatrix>(v.data(), d, d);
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b)
{
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

FermiWeight fermi(double omega, double beta, double delta_mu)
{
    if (!(beta > 0.0)) throw std::invalid_argument("fermi: beta must be > 0");
    const double x = beta * (omega - delta_mu);
    FermiWeight w;
    w.omega = omega;
    if (x > kFermiExponentClamp) {
        w.f_plus = 0.0;
    } else if (x < -kFermiExponentClamp) {
        w.f_plus = 1.0;
    } else {
        w.f_plus = 1.0 / (1.0 + std::exp(x));
    }
    w.f_minus = 1.0 - w.f_plus;
    return w;
}

namespace {

// target += c (I ⊗ x)
void add_left(Eigen::MatrixXcd& target, complex c, const OperatorMatrix& x)
{
    const Eigen::Index d = x.rows();
    for (Eigen::Index j = 0; j < d; ++j) target.block(j * d, j * d, d, d) += c * x;
}

// target += c (xᵀ ⊗ I), i.e. vec(ρ x)
void add_right(Eigen::MatrixXcd& target, complex c, const OperatorMatrix& x)
{
    const Eigen::Index d = x.rows();
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index i = 0; i < d; ++i) {
            const complex v = c * x(j, i);
            if (v == complex(0.0, 0.0)) continue;
            target.block(i * d, j * d, d, d).diagonal().array() += v;
        }
}

// target += c (a ⊗ b), skipping zero blocks of a
void add_kron(Eigen::MatrixXcd& target, complex c, const OperatorMatrix& a, const OperatorMatrix& b)
{
    const Eigen::Index d = b.rows();
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            const complex v = c * a(i, j);
            if (v == complex(0.0, 0.0)) continue;
            target.block(i * d, j * d, d, d) += v * b;
        }
}

void accumulate_commutator(Eigen::MatrixXcd& target, const OperatorMatrix& k_s)
{
    add_left(target, complex(0.0, -1.0), k_s);
    add_right(target, complex(0.0, 1.0), k_s);
}

void accumulate_loss(Eigen::MatrixXcd& target, double kappa, const OperatorMatrix& a)
{
    if (kappa == 0.0) return;
    const OperatorMatrix n = a.adjoint() * a;
    add_kron(target, kappa, a.conjugate(), a);
    add_left(target, -0.5 * kappa, n);
    add_right(target, -0.5 * kappa, n);
}

// L+ ρ = −γ/2 [σ− A ρ + ρ A† σ+ − σ+ ρ A† − A ρ σ−],  A = Σ f+ σ+_ω
void accumulate_pump_plus(Eigen::MatrixXcd& target, double gamma, const OperatorMatrix& sp,
                          const OperatorMatrix& ap)
{
    const OperatorMatrix sm = sp.adjoint();
    const complex c = -0.5 * gamma;
    add_left(target, c, sm * ap);
    add_right(target, c, ap.adjoint() * sp);
    add_kron(target, -c, sm.transpose(), ap);
    add_kron(target, -c, ap.conjugate(), sp);
}

// L− ρ = −γ/2 [σ+ B ρ + ρ B† σ− − σ− ρ B† − B ρ σ+],  B = Σ f− σ−_ω = C†
void accumulate_pump_minus(Eigen::MatrixXcd& target, double gamma, const OperatorMatrix& sp,
                           const OperatorMatrix& cm)
{
    const OperatorMatrix sm = sp.adjoint();
    const OperatorMatrix b = cm.adjoint();
    const complex c = -0.5 * gamma;
    add_left(target, c, sp * b);
    add_right(target, c, cm * sm);
    add_kron(target, -c, sp.transpose(), b);
    add_kron(target, -c, b.conjugate(), sm);
}

Superoperator zero_superop(Eigen::Index d)
{
    return {Eigen::MatrixXcd::Zero(d * d, d * d)};
}

} // namespace

Superoperator superop_hamiltonian(const OperatorMatrix& k_s)
{
    Superoperator l = zero_superop(k_s.rows());
    accumulate_commutator(l.matrix, k_s);
    return l;
}

Superoperator superop_loss(double kappa, const OperatorMatrix& a)
{
    if (kappa < 0.0) throw std::invalid_argument("superop_loss: kappa must be >= 0");
    Superoperator l = zero_superop(a.rows());
    accumulate_loss(l.matrix, kappa, a);
    return l;
}

PumpSuperoperators superop_pump_from_sums(double gamma, const OperatorMatrix& sigma_plus,
                                          const OperatorMatrix& weighted_plus,
                                          const OperatorMatrix& weighted_minus)
{
    PumpSuperoperators out{zero_superop(sigma_plus.rows()), zero_superop(sigma_plus.rows())};
    accumulate_pump_plus(out.plus.matrix, gamma, sigma_plus, weighted_plus);
    accumulate_pump_minus(out.minus.matrix, gamma, sigma_plus, weighted_minus);
    return out;
}

PumpSuperoperators superop_pump(double gamma, const std::vector<FermiWeight>& weights,
                                const EigenOperatorSet& eig_ops, const OperatorMatrix& sigma_plus)
{
    if (weights.size() != eig_ops.entries.size()) {
        throw std::invalid_argument("superop_pump: weight list does not match eigenoperator list");
    }
    const Eigen::Index d = sigma_plus.rows();
    OperatorMatrix ap = OperatorMatrix::Zero(d, d);
    OperatorMatrix cm = OperatorMatrix::Zero(d, d);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const auto& op = eig_ops.entries[i];
        if (std::abs(weights[i].omega - op.omega) > 1e-12 * std::max(1.0, std::abs(op.omega))) {
            throw std::invalid_argument("superop_pump: weight frequency does not match eigenoperator frequency");
        }
        ap += weights[i].f_plus * op.sigma_plus;
        cm += weights[i].f_minus * op.sigma_plus;
    }
    return superop_pump_from_sums(gamma, sigma_plus, ap, cm);
}

Assembly assemble(const ModelParams& params, const MeanField& mf, bool with_parts)
{
    params.validate();
    const auto& cfg = params.cfg;
    const OperatorMatrix a = build_annihilation(cfg);
    const OperatorMatrix sp = build_sigma_minus(cfg).adjoint();

    Assembly out;
    out.delta_mu = params.mu_b - mf.mu;
    out.k_s = build_k_s(params, mf);
    out.eig = diagonalize(out.k_s);

    // Weighted eigenoperator sums in the eigenbasis: (Σ_ω f(ω) σ+_ω)_pq = f(ω_pq) S_pq.
    const Eigen::MatrixXd omega = transition_frequencies(out.eig);
    const OperatorMatrix s_eig = out.eig.vectors.adjoint() * sp * out.eig.vectors;
    OperatorMatrix ap_eig(s_eig.rows(), s_eig.cols());
    OperatorMatrix cm_eig(s_eig.rows(), s_eig.cols());
    for (Eigen::Index q = 0; q < s_eig.cols(); ++q) {
        for (Eigen::Index p = 0; p < s_eig.rows(); ++p) {
            const FermiWeight w = fermi(omega(p, q), params.beta, out.delta_mu);
            ap_eig(p, q) = w.f_plus * s_eig(p, q);
            cm_eig(p, q) = w.f_minus * s_eig(p, q);
        }
    }
    const OperatorMatrix& v = out.eig.vectors;
    const OperatorMatrix ap = v * ap_eig * v.adjoint();
    const OperatorMatrix cm = v * cm_eig * v.adjoint();

    const Eigen::Index d = cfg.dim();
    out.total = zero_superop(d);
    accumulate_commutator(out.total.matrix, out.k_s);
    accumulate_loss(out.total.matrix, params.kappa, a);
    accumulate_pump_plus(out.total.matrix, params.gamma, sp, ap);
    accumulate_pump_minus(out.total.matrix, params.gamma, sp, cm);

    if (with_parts) {
        out.commutator = superop_hamiltonian(out.k_s);
        out.loss = superop_loss(params.kappa, a);
        out.pump = superop_pump_from_sums(params.gamma, sp, ap, cm);
    }
    return out;
}

} // namespace ccqed
