#include <doctest.h>

#include "ccqed/hilbert.hpp"

using namespace ccqed;

TEST_CASE("dimension and index layout")
{
    const HilbertConfig cfg(10);
    CHECK(cfg.dim() == 22);
    CHECK(cfg.index(0, 0) == 0);
    CHECK(cfg.index(0, 10) == 10);
    CHECK(cfg.index(1, 0) == 11);
    CHECK(cfg.index(1, 10) == 21);
    CHECK(config_for_dim(22) == cfg);
    CHECK_THROWS_AS(HilbertConfig(0), std::invalid_argument);
    CHECK_THROWS(config_for_dim(7));
}

TEST_CASE("ladder operator matrix elements and commutator")
{
    const HilbertConfig cfg(6);
    const OperatorMatrix a = build_annihilation(cfg);
    for (int s = 0; s < 2; ++s)
        for (int n = 1; n <= cfg.n_max(); ++n)
            CHECK(std::abs(a(cfg.index(s, n - 1), cfg.index(s, n)) - std::sqrt(double(n))) < 1e-15);
    const OperatorMatrix comm = a * a.adjoint() - a.adjoint() * a;
    for (int s = 0; s < 2; ++s) {
        for (int n = 0; n <= cfg.n_max(); ++n) {
            const int i = cfg.index(s, n);
            // Truncation: [a, a†] = 1 except at the top Fock state where it is −n_max.
            const double expect = n == cfg.n_max() ? -cfg.n_max() : 1.0;
            CHECK(std::abs(comm(i, i) - expect) < 1e-12);
        }
    }
    CHECK((comm - OperatorMatrix(comm.diagonal().asDiagonal())).norm() < 1e-12);
}

TEST_CASE("two-level algebra")
{
    const HilbertConfig cfg(3);
    const OperatorMatrix sm = build_sigma_minus(cfg);
    const OperatorMatrix sp = sm.adjoint();
    const OperatorMatrix id = OperatorMatrix::Identity(cfg.dim(), cfg.dim());
    CHECK((sm * sm).norm() < 1e-15);
    CHECK((sp * sm + sm * sp - id).norm() < 1e-14);
    CHECK(std::abs(sm(cfg.index(0, 2), cfg.index(1, 2)) - 1.0) < 1e-15);
}

TEST_CASE("number operators are diagonal with the expected spectrum")
{
    const HilbertConfig cfg(4);
    const auto nums = build_number_operators(cfg);
    for (int s = 0; s < 2; ++s) {
        for (int n = 0; n <= cfg.n_max(); ++n) {
            const int i = cfg.index(s, n);
            CHECK(nums.photon(i, i).real() == doctest::Approx(n));
            CHECK(nums.excitation(i, i).real() == doctest::Approx(s));
            CHECK(nums.total(i, i).real() == doctest::Approx(n + s));
        }
    }
    const OperatorMatrix a = build_annihilation(cfg);
    CHECK((nums.photon - a.adjoint() * a).norm() < 1e-13);
}
