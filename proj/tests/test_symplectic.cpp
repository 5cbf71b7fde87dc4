#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtorus/random.hpp"
#include "qtorus/symplectic.hpp"
#include "testutil.hpp"

using namespace qtorus;
using qtest::mat2;

TEST_CASE("is_symplectic on the canonical cases") {
    CHECK(is_symplectic(IntMat::identity(4)));

    IntMat j4(4, 4);
    j4(0, 2) = -1;
    j4(1, 3) = -1;
    j4(2, 0) = 1;
    j4(3, 1) = 1;
    CHECK(is_symplectic(j4));

    IntMat d(4, 4);
    d(0, 0) = 2;
    d(1, 1) = 1;
    d(2, 2) = 1;
    d(3, 3) = 1;
    CHECK_FALSE(is_symplectic(d));

    CHECK_THROWS_AS(is_symplectic(IntMat::identity(3)), validation_error);
    CHECK_THROWS_AS(is_symplectic(IntMat(2, 4)), validation_error);
}

TEST_CASE("generator families") {
    IntMat b(1, 1);
    b(0, 0) = 1;
    CHECK(generator(1, GeneratorKind::shear, b).entries() == mat2(1, 1, 0, 1));
    CHECK(generator(1, GeneratorKind::fourier).entries() == mat2(0, -1, 1, 0));
    CHECK(generator(2, GeneratorKind::linear, IntMat::identity(2)).entries() == IntMat::identity(4));

    IntMat nonsym(2, 2);
    nonsym(0, 1) = 1;
    CHECK_THROWS_AS(generator(2, GeneratorKind::shear, nonsym), validation_error);

    IntMat notunimodular(1, 1);
    notunimodular(0, 0) = 2;
    CHECK_THROWS_AS(generator(1, GeneratorKind::linear, notunimodular), validation_error);
}

TEST_CASE("group words evaluate by exact multiplication") {
    IntMat b(1, 1);
    b(0, 0) = 1;
    GroupWord w{1, {{GeneratorKind::shear, b}, {GeneratorKind::fourier, IntMat()}}};
    const auto g = w.evaluate();
    CHECK(g.entries() == mat2(1, 1, 0, 1) * mat2(0, -1, 1, 0));
    CHECK(is_symplectic(g.entries()));
}

TEST_CASE("act_siegel fixed point and shear") {
    const auto Ti = qtest::scalar_T(0, 1);
    const auto j = qtest::fourier1();
    CHECK(std::abs(act_siegel(j, Ti).mat()(0, 0) - cplx(0, 1)) < 1e-14);

    IntMat b(1, 1);
    b(0, 0) = 2;
    const auto shear = generator(1, GeneratorKind::shear, b);
    const auto tau = qtest::scalar_T(0.3, 0.8);
    const auto moved = act_siegel(shear, tau);
    CHECK(moved.mat()(0, 0).real() == doctest::Approx(2.3).epsilon(1e-14));
    CHECK(moved.mat()(0, 0).imag() == doctest::Approx(0.8).epsilon(1e-14));

    // J . 2i = i/2
    const auto t2 = qtest::scalar_T(0, 2);
    CHECK(std::abs(act_siegel(j, t2).mat()(0, 0) - cplx(0, 0.5)) < 1e-14);
}

TEST_CASE("act_siegel is a left action") {
    Rng rng(11);
    for (int n : {1, 2}) {
        const auto alphabet = standard_alphabet(n);
        for (int i = 0; i < 100; ++i) {
            const auto g = random_word(alphabet, 3, rng);
            const auto h = random_word(alphabet, 3, rng);
            const auto T = random_siegel(n, rng);
            const auto lhs = act_siegel(g, act_siegel(h, T));
            const auto rhs = act_siegel(g * h, T);
            CHECK((lhs.mat() - rhs.mat()).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("act_coord examples") {
    const auto Ti = qtest::scalar_T(0, 1);
    const CVec z = qtest::cvec1({0.4, 0.1});

    CHECK((act_coord(SymplecticMatrix::identity(1), z, Ti) - z).norm() < 1e-15);

    // (C tau + D)^-t = 1/i = -i at tau = i for the fourier generator
    const CVec moved = act_coord(qtest::fourier1(), z, Ti);
    CHECK(std::abs(moved[0] - cplx(0, -1) * z[0]) < 1e-14);

    IntMat b(1, 1);
    b(0, 0) = 5;
    CHECK((act_coord(generator(1, GeneratorKind::shear, b), z, Ti) - z).norm() < 1e-15);
}

TEST_CASE("act_real is exact and matches the complex action") {
    const auto j = qtest::fourier1();
    const auto x = qtest::coord1(0.3, 0.7);

    const auto id = SymplecticMatrix::identity(1);
    CHECK(act_real(id, x).x1[0] == 0.3);
    CHECK(act_real(id, x).x2[0] == 0.7);

    // J^-t = J sends (x1, x2) to (-x2, x1)
    const auto jx = act_real(j, x);
    CHECK(jx.x1[0] == -0.7);
    CHECK(jx.x2[0] == 0.3);

    const auto Ti = qtest::scalar_T(0, 1);
    const CVec lhs = embed(jx, act_siegel(j, Ti));
    const CVec rhs = act_coord(j, embed(x, Ti), Ti);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("act_real composes exactly (integer arithmetic)") {
    Rng rng(5);
    for (int n : {1, 2}) {
        const auto alphabet = standard_alphabet(n);
        for (int i = 0; i < 50; ++i) {
            const auto g = random_word(alphabet, 3, rng);
            const auto h = random_word(alphabet, 3, rng);
            const auto w = random_lattice_point(n, rng);
            CHECK(act_real(g, act_real(h, w)) == act_real(g * h, w));
        }
    }
}

TEST_CASE("word products stay symplectic exactly") {
    Rng rng(3);
    for (int n : {1, 2}) {
        const auto alphabet = standard_alphabet(n);
        for (int i = 0; i < 50; ++i) {
            const auto g = random_word(alphabet, 4, rng);
            const auto h = random_word(alphabet, 4, rng);
            CHECK(is_symplectic((g * h).entries()));
            CHECK((g * g.inverse()) == SymplecticMatrix::identity(n));
        }
    }
}

TEST_CASE("stabilizer search at T = i finds the cyclic group of order four") {
    const auto Ti = qtest::scalar_T(0, 1);
    const auto j = qtest::fourier1();

    const auto level1 = stabilizer_search(Ti, 1);
    bool has_j = false;
    for (const auto& g : level1) has_j |= g == j;
    CHECK(has_j);

    const auto stab = stabilizer_search(Ti, 4);
    CHECK(stab.size() == 4);
    const std::vector<SymplecticMatrix> expected{SymplecticMatrix::identity(1), j, j * j, j * j * j};
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& g : stab) found |= g == e;
        CHECK(found);
    }
    for (const auto& g : stab)
        CHECK((act_siegel(g, Ti).mat() - Ti.mat()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("stabilizer of a generic point is the center") {
    const auto T = qtest::scalar_T(0.31830988618, 1.41421356237); // irrational-ish entries
    const auto stab = stabilizer_search(T, 3);
    CHECK(stab.size() == 2); // +-I only
}

TEST_CASE("stabilizer at n = 2, T = iI is nonabelian and contains J") {
    const auto T = qtest::diag_iI(2);
    const auto stab = stabilizer_search(T, 2);
    const auto j = generator(2, GeneratorKind::fourier);
    bool has_j = false, has_swap = false;
    IntMat swap(2, 2);
    swap(0, 1) = swap(1, 0) = 1;
    const auto perm = generator(2, GeneratorKind::linear, swap);
    for (const auto& g : stab) {
        has_j |= g == j;
        has_swap |= g == perm;
    }
    CHECK(has_j);
    CHECK(has_swap);
    CHECK(stab.size() > 4);

    // nonabelian: the swap and a sign flip are both in the stabilizer and
    // do not commute
    IntMat flip = IntMat::identity(2);
    flip(1, 1) = -1;
    const auto sign = generator(2, GeneratorKind::linear, flip);
    CHECK((act_siegel(sign, T).mat() - T.mat()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK_FALSE(perm * sign == sign * perm);
}

TEST_CASE("symplectic matrix inverse identities") {
    Rng rng(17);
    const auto alphabet = standard_alphabet(2);
    for (int i = 0; i < 20; ++i) {
        const auto g = random_word(alphabet, 4, rng);
        CHECK(g.inverse().inverse() == g);
        CHECK(g.inverse_transpose().entries() == g.inverse().entries().transpose());
    }
}
