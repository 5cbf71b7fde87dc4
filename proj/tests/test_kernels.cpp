#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// The parallel kernels against the serial reference implementations, plus
// determinism of the pairwise reduction.

#include <cmath>

#include "qtorus/fock.hpp"
#include "qtorus/lattice.hpp"
#include "qtorus/random.hpp"
#include "qtorus/reference.hpp"
#include "qtorus/theta.hpp"
#include "testutil.hpp"

using namespace qtorus;

TEST_CASE("ellipsoid enumeration counts and order") {
    Eigen::MatrixXd q = Eigen::MatrixXd::Identity(1, 1);
    auto pts = ellipsoid_points(q, 3.0);
    CHECK(pts.size() == 7); // -3 .. 3

    q = Eigen::MatrixXd::Identity(2, 2);
    pts = ellipsoid_points(q, 3.0);
    CHECK(pts.size() == 29); // integer points in the disk of radius 3
    // lexicographic order
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const auto &a = pts[i - 1], &b = pts[i];
        CHECK((a[0] < b[0] || (a[0] == b[0] && a[1] < b[1])));
    }
}

TEST_CASE("tail bound certifies and refuses sensibly") {
    const Eigen::MatrixXd q = Eigen::MatrixXd::Identity(2, 2);
    CHECK(gaussian_tail_bound(q, 8.0) < 1e-12);
    CHECK(gaussian_tail_bound(q, 3.0) > gaussian_tail_bound(q, 6.0));
    CHECK(std::isinf(gaussian_tail_bound(q, 1.0, 2.0))); // radius below the shift

    // the bound really dominates: brute-force tail for the unit form
    double brute = 0;
    for (int a = -60; a <= 60; ++a)
        for (int b = -60; b <= 60; ++b) {
            const double r2 = static_cast<double>(a) * a + static_cast<double>(b) * b;
            if (r2 > 9.0) brute += std::exp(-M_PI * r2);
        }
    CHECK(gaussian_tail_bound(q, 3.0) >= brute);
}

TEST_CASE("pairwise sum is deterministic and accurate") {
    Rng rng(7);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<cplx> terms(10001);
    long double re = 0, im = 0;
    for (auto& t : terms) {
        t = cplx(u(rng), u(rng));
        re += t.real();
        im += t.imag();
    }
    const cplx a = pairwise_sum(terms);
    const cplx b = pairwise_sum(terms);
    CHECK(a == b);
    CHECK(std::abs(a - cplx(static_cast<double>(re), static_cast<double>(im))) < 1e-10);
}

TEST_CASE("parallel term sum equals a direct pairwise pass") {
    const auto term = [](std::size_t i) {
        return std::exp(cplx(0.0, 0.001 * static_cast<double>(i)));
    };
    std::vector<cplx> buf(4097);
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = term(i);
    CHECK(parallel_term_sum(buf.size(), term) == pairwise_sum(buf));
}

TEST_CASE("classical theta kernel matches the serial reference") {
    Rng rng(19);
    for (int n : {1, 2}) {
        for (int i = 0; i < 10; ++i) {
            const auto T = random_siegel(n, rng, 0.5);
            const CVec z = random_cvec(n, rng, 0.4);
            const cplx fast = theta(z, T, TruncationParams{10.0, 1e-6});
            const cplx slow = reference::classical_theta(z, T, 10.0);
            CHECK(std::abs(fast - slow) <= 1e-12 * std::max(1.0, std::abs(slow)));
        }
    }
}

TEST_CASE("invariant theta kernel matches the serial reference") {
    Rng rng(23);
    for (int n : {1, 2}) {
        for (int i = 0; i < 10; ++i) {
            const auto T = random_siegel(n, rng, 0.5);
            const auto x = random_real_coordinate(n, rng);
            const cplx fast = invariant_theta(x, T, TruncationParams{8.0, 1e-6});
            const cplx slow = reference::invariant_theta(x, T, 8.0);
            CHECK(std::abs(fast - slow) <= 1e-12);
        }
    }
}

TEST_CASE("quadrature kernel matches the serial reference") {
    Rng rng(29);
    const auto T = random_siegel(1, rng);
    const QuadratureGrid grid(T, 40);
    const auto f = coherent(random_cvec(1, rng, 0.5));
    const auto h = monomial(IVec::Ones(1));
    const cplx fast = scalar_product(f, h, T, grid);
    const cplx slow = reference::scalar_product(f, h, T, grid);
    CHECK(std::abs(fast - slow) < 1e-12 * std::max(1.0, std::abs(slow)));
}
