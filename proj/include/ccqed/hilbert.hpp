// hilbert.hpp: Truncated TLS ⊗ photon Hilbert space and elementary operators

#pragma once

#include <complex>
#include <tuple>

#include <Eigen/Dense>

namespace ccqed {

using complex = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;

// Basis |s, n⟩ with the TLS index outermost (s = 0 ground, s = 1 excited)
// and the photon index innermost: index(s, n) = s * (n_max + 1) + n.
class HilbertConfig {
public:
    explicit HilbertConfig(int n_max = 10);

    int n_max() const { return n_max_; }
    int dim() const { return 2 * (n_max_ + 1); }
    int index(int s, int n) const { return s * (n_max_ + 1) + n; }

    bool operator==(const HilbertConfig&) const = default;

private:
    int n_max_;
};

// Recovers the configuration from a composite-space dimension.
HilbertConfig config_for_dim(Eigen::Index dim);

OperatorMatrix build_annihilation(const HilbertConfig& cfg);
OperatorMatrix build_sigma_minus(const HilbertConfig& cfg);

struct NumberOperators {
    OperatorMatrix photon;     // a†a
    OperatorMatrix excitation; // σ+σ−
    OperatorMatrix total;      // N_S = a†a + σ+σ−
};

NumberOperators build_number_operators(const HilbertConfig& cfg);

} // namespace ccqed
