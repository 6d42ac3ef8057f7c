// observables.cpp: Steady-state expectation values and plateau bookkeeping

#include "ccqed/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccqed {

namespace {

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace

double photon_number(const DensityMatrix& rho)
{
    const HilbertConfig cfg = config_for_dim(rho.dim());
    double n = 0.0;
    for (int s = 0; s < 2; ++s)
        for (int k = 0; k <= cfg.n_max(); ++k) n += k * rho.matrix(cfg.index(s, k), cfg.index(s, k)).real();
    return std::max(n, 0.0);
}

Currents currents(const DensityMatrix& rho, const Superoperator& l_tls_plus,
                  const Superoperator& l_tls_minus, const Superoperator& l_ph)
{
    const HilbertConfig cfg = config_for_dim(rho.dim());
    const NumberOperators num = build_number_operators(cfg);
    Currents j;
    j.tls_in = (num.excitation * l_tls_plus.apply(rho.matrix)).trace().real();
    j.tls_out = -(num.excitation * l_tls_minus.apply(rho.matrix)).trace().real();
    j.ph_out = -(num.photon * l_ph.apply(rho.matrix)).trace().real();
    return j;
}

std::array<double, 3> energy_gaps(const EigenSystem& eig)
{
    if (eig.energies.size() < 4) throw std::invalid_argument("energy_gaps: need at least 4 levels");
    const auto& e = eig.energies;
    return {e(1) - e(0), e(2) - e(1), e(3) - e(2)};
}

ObservableRecord compute_observables(const ModelParams& params, const Assembly& asmb,
                                     const DensityMatrix& rho)
{
    if (asmb.loss.matrix.size() == 0) {
        throw std::invalid_argument("compute_observables: assembly was built without parts");
    }
    ObservableRecord rec;
    rec.n_ph = photon_number(rho);
    const Currents j = currents(rho, asmb.pump.plus, asmb.pump.minus, asmb.loss);
    rec.j_tls_in = j.tls_in;
    rec.j_tls_out = j.tls_out;
    rec.j_ph_out = j.ph_out;
    rec.gaps = energy_gaps(asmb.eig);
    rec.delta_mu = asmb.delta_mu;

    const double expected = params.kappa * rec.n_ph;
    if (std::abs(rec.j_ph_out - expected) > 1e-10 * std::max(1.0, std::abs(expected))) {
        throw std::logic_error("photon loss current differs from kappa * <a^dag a>");
    }
    return rec;
}

std::vector<PlateauRegion> detect_plateaus(std::span<const ScanSample> scan, double tol_mu, double tol_nph,
                                           double min_width)
{
    std::vector<PlateauRegion> out;
    const std::size_t n = scan.size();
    std::size_t start = 0;
    auto close_run = [&](std::size_t first, std::size_t last) {
        if (last <= first) return;
        const double width = scan[last].mu_b - scan[first].mu_b;
        if (width < min_width * (1.0 - 1e-9)) return;
        std::vector<double> mus, nphs;
        for (std::size_t k = first; k <= last; ++k) {
            mus.push_back(scan[k].mf.mu);
            nphs.push_back(scan[k].observables.n_ph);
        }
        out.push_back({scan[first].mu_b, scan[last].mu_b, median(mus), median(nphs), first, last});
    };
    for (std::size_t k = 1; k <= n; ++k) {
        const bool flat = k < n && std::abs(scan[k].mf.mu - scan[k - 1].mf.mu) < tol_mu &&
                          std::abs(scan[k].observables.n_ph - scan[k - 1].observables.n_ph) < tol_nph;
        if (!flat) {
            close_run(start, k - 1);
            start = k;
        }
    }
    return out;
}

std::vector<double> find_crossings(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size()) throw std::invalid_argument("find_crossings: size mismatch");
    std::vector<double> out;
    for (std::size_t k = 1; k < x.size(); ++k) {
        const double y0 = y[k - 1], y1 = y[k];
        if (y1 == 0.0 && y0 != 0.0) out.push_back(x[k]);
        else if (y0 * y1 < 0.0) out.push_back(x[k - 1] + (x[k] - x[k - 1]) * y0 / (y0 - y1));
    }
    return out;
}

} // namespace ccqed
