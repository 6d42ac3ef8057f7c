// hilbert.cpp: Fock-space ladder and TLS operators

#include "ccqed/hilbert.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ccqed {

HilbertConfig::HilbertConfig(int n_max) : n_max_(n_max)
{
    if (n_max < 1) {
        throw std::invalid_argument("photon cutoff n_max must be >= 1, got " + std::to_string(n_max));
    }
}

HilbertConfig config_for_dim(Eigen::Index dim)
{
    if (dim < 4 || dim % 2 != 0) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " is not 2*(n_max+1)");
    }
    return HilbertConfig(static_cast<int>(dim / 2 - 1));
}

OperatorMatrix build_annihilation(const HilbertConfig& cfg)
{
    OperatorMatrix a = OperatorMatrix::Zero(cfg.dim(), cfg.dim());
    for (int s = 0; s < 2; ++s) {
        for (int n = 1; n <= cfg.n_max(); ++n) {
            a(cfg.index(s, n - 1), cfg.index(s, n)) = std::sqrt(static_cast<double>(n));
        }
    }
    return a;
}

OperatorMatrix build_sigma_minus(const HilbertConfig& cfg)
{
    OperatorMatrix sm = OperatorMatrix::Zero(cfg.dim(), cfg.dim());
    for (int n = 0; n <= cfg.n_max(); ++n) {
        sm(cfg.index(0, n), cfg.index(1, n)) = 1.0;
    }
    return sm;
}

NumberOperators build_number_operators(const HilbertConfig& cfg)
{
    NumberOperators ops;
    ops.photon = OperatorMatrix::Zero(cfg.dim(), cfg.dim());
    ops.excitation = OperatorMatrix::Zero(cfg.dim(), cfg.dim());
    for (int s = 0; s < 2; ++s) {
        for (int n = 0; n <= cfg.n_max(); ++n) {
            const int i = cfg.index(s, n);
            ops.photon(i, i) = static_cast<double>(n);
            ops.excitation(i, i) = static_cast<double>(s);
        }
    }
    ops.total = ops.photon + ops.excitation;
    return ops;
}

} // namespace ccqed
