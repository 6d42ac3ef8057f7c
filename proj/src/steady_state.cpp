// steady_state.cpp: Bordered null-space solve and shift-invert spectral gap

#include "ccqed/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace ccqed {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Eigen::Index side_of(Eigen::Index n)
{
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
    if (d * d != n) throw std::invalid_argument("superoperator size is not a perfect square");
    return d;
}

// Trace functional in Hermitian coordinates.
Eigen::VectorXd trace_row(Eigen::Index d)
{
    Eigen::VectorXd t = Eigen::VectorXd::Zero(d * d);
    for (Eigen::Index j = 0; j < d; ++j) t(j * d + j) = 1.0;
    return t;
}

} // namespace

bool SteadyStateCertificate::valid() const
{
    return trace_error < 1e-12 && hermiticity_error < 1e-12 && min_eig_rho >= -1e-10 &&
           residual_norm < 1e-9 * generator_norm && (!gap_computed() || spectral_gap > 0.0);
}

Eigen::MatrixXd hermitian_basis_matrix(const Superoperator& l)
{
    const Eigen::Index n = l.matrix.rows();
    const Eigen::Index d = side_of(n);
    const Eigen::MatrixXcd& L = l.matrix;

    // LT: columns are L applied to the Hermitian basis elements.
    Eigen::MatrixXcd lt(n, n);
    for (Eigen::Index c = 0; c < d; ++c) {
        for (Eigen::Index r = 0; r < d; ++r) {
            const Eigen::Index b = c * d + r;
            if (r == c) {
                lt.col(b) = L.col(b);
            } else if (r < c) {
                lt.col(b) = kInvSqrt2 * (L.col(c * d + r) + L.col(r * d + c));
            } else {
                // i(E_cr − E_rc)/√2: +i at (c, r), −i at (r, c)
                lt.col(b) = complex(0.0, kInvSqrt2) * (L.col(r * d + c) - L.col(c * d + r));
            }
        }
    }

    Eigen::MatrixXd m(n, n);
    for (Eigen::Index c = 0; c < d; ++c) {
        for (Eigen::Index r = 0; r < d; ++r) {
            const Eigen::Index a = c * d + r;
            if (r == c) {
                m.row(a) = lt.row(a).real();
            } else if (r < c) {
                m.row(a) = (kInvSqrt2 * (lt.row(c * d + r) + lt.row(r * d + c))).real();
            } else {
                m.row(a) = (complex(0.0, -kInvSqrt2) * (lt.row(r * d + c) - lt.row(c * d + r))).real();
            }
        }
    }
    return m;
}

Eigen::VectorXd hermitian_coordinates(const OperatorMatrix& rho)
{
    const Eigen::Index d = rho.rows();
    Eigen::VectorXd x(d * d);
    const double s2 = std::sqrt(2.0);
    for (Eigen::Index c = 0; c < d; ++c) {
        for (Eigen::Index r = 0; r < d; ++r) {
            const Eigen::Index b = c * d + r;
            if (r == c) x(b) = rho(r, r).real();
            else if (r < c) x(b) = s2 * rho(r, c).real();
            else x(b) = s2 * rho(c, r).imag();
        }
    }
    return x;
}

OperatorMatrix from_hermitian_coordinates(const Eigen::VectorXd& x)
{
    const Eigen::Index d = side_of(x.size());
    OperatorMatrix rho(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        for (Eigen::Index r = 0; r <= c; ++r) {
            if (r == c) {
                rho(r, r) = x(c * d + c);
            } else {
                const complex v(kInvSqrt2 * x(c * d + r), kInvSqrt2 * x(r * d + c));
                rho(r, c) = v;
                rho(c, r) = std::conj(v);
            }
        }
    }
    return rho;
}

double trace_distance(const OperatorMatrix& a, const OperatorMatrix& b)
{
    const OperatorMatrix diff = a - b;
    const OperatorMatrix herm = 0.5 * (diff + diff.adjoint());
    Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(herm, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

namespace {

double dense_gap(const Eigen::MatrixXd& m)
{
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    std::vector<double> mags;
    mags.reserve(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) mags.push_back(std::abs(es.eigenvalues()(i)));
    std::sort(mags.begin(), mags.end());
    return mags.size() > 1 ? mags[1] : 0.0;
}

// Largest |θ| of the deflated inverse (M + s x0 tᵀ)⁻¹ on the traceless subspace is 1 / gap.
double shift_invert_gap(const Eigen::MatrixXd& m, const Eigen::VectorXd& x0, const Eigen::VectorXd& t)
{
    const Eigen::Index n = m.rows();
    const double shift = -std::max(1.0, m.norm() / std::sqrt(static_cast<double>(n)));
    Eigen::MatrixXd deflated = m + shift * x0 * t.transpose();
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(deflated);
    if (!(lu.rcond() > 1e-15)) return 0.0;

    auto project = [&](Eigen::VectorXcd& v) { v -= x0.cast<complex>() * t.cast<complex>().dot(v); };
    auto apply_inverse = [&](const Eigen::VectorXcd& v) {
        Eigen::MatrixXd rhs(n, 2);
        rhs.col(0) = v.real();
        rhs.col(1) = v.imag();
        const Eigen::MatrixXd sol = lu.solve(rhs);
        Eigen::VectorXcd out(n);
        out.real() = sol.col(0);
        out.imag() = sol.col(1);
        return out;
    };

    const Eigen::Index krylov = std::min<Eigen::Index>(40, n - 1);
    std::mt19937_64 rng(0x5eedULL);
    std::normal_distribution<double> normal;
    Eigen::VectorXcd start(n);
    for (Eigen::Index i = 0; i < n; ++i) start(i) = complex(normal(rng), 0.0);
    project(start);

    double theta_mag = 0.0;
    for (int restart = 0; restart < 12; ++restart) {
        Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(n, krylov + 1);
        Eigen::MatrixXcd hess = Eigen::MatrixXcd::Zero(krylov + 1, krylov);
        basis.col(0) = start.normalized();
        Eigen::Index steps = krylov;
        for (Eigen::Index j = 0; j < krylov; ++j) {
            Eigen::VectorXcd w = apply_inverse(basis.col(j));
            project(w);
            for (int pass = 0; pass < 2; ++pass) {
                for (Eigen::Index i = 0; i <= j; ++i) {
                    const complex h = basis.col(i).dot(w);
                    hess(i, j) += h;
                    w -= h * basis.col(i);
                }
            }
            hess(j + 1, j) = w.norm();
            if (std::abs(hess(j + 1, j)) < 1e-14 * std::abs(hess(0, 0))) {
                steps = j + 1;
                break;
            }
            basis.col(j + 1) = w / hess(j + 1, j);
        }
        const Eigen::MatrixXcd h = hess.topLeftCorner(steps, steps);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(h);
        Eigen::Index best = 0;
        for (Eigen::Index i = 1; i < steps; ++i)
            if (std::abs(ces.eigenvalues()(i)) > std::abs(ces.eigenvalues()(best))) best = i;
        theta_mag = std::abs(ces.eigenvalues()(best));
        const Eigen::VectorXcd y = ces.eigenvectors().col(best);
        const double resid =
            steps < krylov ? 0.0 : std::abs(hess(krylov, krylov - 1)) * std::abs(y(krylov - 1));
        if (resid <= 1e-9 * theta_mag) break;
        start = basis.leftCols(steps) * y;
        project(start);
    }
    return theta_mag > 0.0 ? 1.0 / theta_mag : std::numeric_limits<double>::infinity();
}

} // namespace

double spectral_gap(const Superoperator& l, const DensityMatrix& stationary, GapMethod method)
{
    const Eigen::MatrixXd m = hermitian_basis_matrix(l);
    if (method == GapMethod::Dense || (method == GapMethod::Auto && m.rows() <= 64)) {
        return dense_gap(m);
    }
    const Eigen::Index d = stationary.dim();
    return shift_invert_gap(m, hermitian_coordinates(stationary.matrix), trace_row(d));
}

SteadyStateCertificate certify(const DensityMatrix& rho, const Superoperator& l, bool compute_gap)
{
    SteadyStateCertificate cert;
    const OperatorMatrix& r = rho.matrix;
    cert.generator_norm = l.matrix.norm();
    cert.residual_norm = (l.matrix * vec(r)).norm();
    cert.trace_error = std::abs(r.trace() - complex(1.0, 0.0));
    cert.hermiticity_error = (r - r.adjoint()).cwiseAbs().maxCoeff();
    const OperatorMatrix herm = 0.5 * (r + r.adjoint());
    Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(herm, Eigen::EigenvaluesOnly);
    cert.min_eig_rho = es.eigenvalues()(0);

    const HilbertConfig cfg = config_for_dim(r.rows());
    cert.top_fock_population = r(cfg.index(0, cfg.n_max()), cfg.index(0, cfg.n_max())).real() +
                               r(cfg.index(1, cfg.n_max()), cfg.index(1, cfg.n_max())).real();
    cert.truncation_warning = cert.top_fock_population > 1e-6;

    if (compute_gap) {
        cert.spectral_gap = spectral_gap(l, rho);
        cert.near_degenerate = cert.spectral_gap < 1e-8 * cert.generator_norm;
    }
    return cert;
}

SteadyState solve_steady(const Superoperator& l, bool compute_gap)
{
    const Eigen::Index n = l.matrix.rows();
    const Eigen::Index d = side_of(n);
    Eigen::MatrixXd m = hermitian_basis_matrix(l);

    // The trace functional is a left null vector of M, so the (0,0) row is redundant;
    // replace it with the normalization Tr ρ = 1.
    const Eigen::VectorXd t = trace_row(d);
    m.row(0) = t.transpose();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs(0) = 1.0;

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
    Eigen::VectorXd x = lu.solve(rhs);
    x += lu.solve(rhs - m * x);

    if (!x.allFinite()) {
        throw NoStationaryState("no stationary state at tolerance: bordered system is singular");
    }

    SteadyState out;
    out.rho.matrix = from_hermitian_coordinates(x);
    out.rho.matrix /= out.rho.matrix.trace().real();
    out.certificate = certify(out.rho, l, compute_gap);
    if (lu.rcond() < 1e-14) out.certificate.near_degenerate = true;
    if (!(out.certificate.residual_norm < 1e-6 * out.certificate.generator_norm)) {
        throw NoStationaryState("no stationary state at tolerance: residual " +
                                std::to_string(out.certificate.residual_norm));
    }
    return out;
}

} // namespace ccqed
