#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtorus/random.hpp"
#include "qtorus/siegel.hpp"
#include "qtorus/symplectic.hpp"
#include "testutil.hpp"

using namespace qtorus;

TEST_CASE("SiegelPoint validation") {
    CHECK_NOTHROW(qtest::scalar_T(0.5, 2.0));
    CHECK_THROWS_AS(qtest::scalar_T(0.0, -1.0), validation_error); // Im not positive

    CMat asym(2, 2);
    asym << cplx(0, 1), cplx(0.5, 0), cplx(-0.5, 0), cplx(0, 1);
    CHECK_THROWS_AS((void)SiegelPoint(asym), validation_error);

    CMat indefinite(2, 2);
    indefinite << cplx(0, 1), cplx(0, 2), cplx(0, 2), cplx(0, 1);
    CHECK_THROWS_AS((void)SiegelPoint(indefinite), validation_error); // Im has a negative eigenvalue
}

TEST_CASE("embedding") {
    const auto Ti = qtest::scalar_T(0, 1);
    CHECK(std::abs(embed(qtest::coord1(0, 0), Ti)[0]) == 0.0);
    CHECK(std::abs(embed(qtest::coord1(1, 0), Ti)[0] - cplx(0, 1)) < 1e-15);

    // Im(embed(x)) = (Im T) x1
    Rng rng(2);
    for (int n : {1, 2}) {
        for (int i = 0; i < 10; ++i) {
            const auto T = random_siegel(n, rng);
            const auto x = random_real_coordinate(n, rng);
            const RVec lhs = embed(x, T).imag();
            const RVec rhs = T.im() * x.x1;
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
        }
    }
}

TEST_CASE("hermitian form values and symmetry") {
    const auto Ti = qtest::scalar_T(0, 1);
    CHECK(std::abs(hermitian_form(Ti, qtest::cvec1({1, 0}), qtest::cvec1({1, 0})) - cplx(1, 0)) < 1e-15);
    CHECK(std::abs(hermitian_form(Ti, qtest::cvec1({0, 1}), qtest::cvec1({0, 1})) - cplx(1, 0)) < 1e-15);

    Rng rng(7);
    for (int n : {1, 2}) {
        for (int i = 0; i < 20; ++i) {
            const auto T = random_siegel(n, rng);
            const CVec s = random_cvec(n, rng);
            const CVec z = random_cvec(n, rng);
            CHECK(std::abs(hermitian_form(T, s, z) - std::conj(hermitian_form(T, z, s))) < 1e-12);
            const cplx diag = hermitian_form(T, z, z);
            CHECK(diag.imag() == doctest::Approx(0.0).epsilon(1e-12));
            if (z.norm() > 1e-8) CHECK(diag.real() > 0.0);
        }
    }
}

TEST_CASE("real Gram form represents H_T and has determinant one") {
    Rng rng(13);
    for (int n : {1, 2}) {
        for (int i = 0; i < 10; ++i) {
            const auto T = random_siegel(n, rng);
            const RMat g = T.real_gram();
            CHECK(std::abs(g.determinant() - 1.0) < 1e-10);
            for (int t = 0; t < 10; ++t) {
                const auto x = random_real_coordinate(n, rng);
                const RVec s = x.stacked();
                const double via_gram = s.dot(g * s);
                const double via_form = hermitian_form(T, embed(x, T), embed(x, T)).real();
                CHECK(std::abs(via_gram - via_form) < 1e-11);
            }
        }
    }
}

TEST_CASE("symplectic pairing is the integer combination, independent of T") {
    const auto anyT = qtest::scalar_T(0.7, 3.1);
    CHECK(symplectic_pairing(anyT, qtest::lp1(1, 0), qtest::coord1(0, 1)) == doctest::Approx(1.0).epsilon(1e-12));

    // antisymmetry: pairing of a lattice point with itself vanishes
    CHECK(std::abs(symplectic_pairing(anyT, qtest::lp1(2, 3), qtest::coord1(2, 3))) < 1e-12);

    Rng rng(23);
    for (int n : {1, 2}) {
        for (int i = 0; i < 10; ++i) {
            const auto k = random_lattice_point(n, rng);
            const auto x = random_real_coordinate(n, rng);
            const double first = symplectic_pairing(random_siegel(n, rng), k, x);
            for (int t = 0; t < 5; ++t)
                CHECK(std::abs(symplectic_pairing(random_siegel(n, rng), k, x) - first) < 1e-10);
        }
    }
}

TEST_CASE("Im(g.T) transformation identity") {
    const auto Ti = qtest::scalar_T(0, 1);
    CHECK(im_transform_identity(SymplecticMatrix::identity(1), Ti) < 1e-14);
    CHECK(im_transform_identity(qtest::fourier1(), Ti) < 1e-14);

    Rng rng(29);
    for (int n : {1, 2}) {
        const auto alphabet = standard_alphabet(n);
        const auto j = generator(n, GeneratorKind::fourier);
        for (int i = 0; i < 100; ++i) {
            const auto g = random_word(alphabet, 4, rng);
            const auto T = random_siegel(n, rng);
            CHECK(im_transform_identity(g, T) < 1e-10);
            CHECK(im_transform_identity(j, T) < 1e-10); // the fourier special case
        }
    }
}

TEST_CASE("hermitian form is invariant under the group action") {
    const auto Ti = qtest::scalar_T(0, 1);
    CHECK(lemma1_residual(SymplecticMatrix::identity(1), Ti, qtest::coord1(0.2, 0.4), qtest::coord1(1, 0)) <
          1e-14);
    CHECK(lemma1_residual(qtest::fourier1(), Ti, qtest::coord1(1, 0), qtest::coord1(0, 1)) < 1e-13);

    Rng rng(31);
    for (int n : {1, 2}) {
        const auto alphabet = standard_alphabet(n);
        for (int i = 0; i < 100; ++i) {
            const auto g = random_word(alphabet, 4, rng);
            const auto T = random_siegel(n, rng);
            CHECK(lemma1_residual(g, T, random_real_coordinate(n, rng), random_real_coordinate(n, rng)) < 1e-10);
        }
    }
}
