#include "qtorus/random.hpp"

namespace qtorus {

SiegelPoint random_siegel(int n, Rng& rng, double spread) {
    std::uniform_real_distribution<double> u(-spread, spread);
    RMat x(n, n), l(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            x(i, j) = u(rng);
            l(i, j) = 0.5 * u(rng);
        }
    x = ((x + x.transpose()) / 2.0).eval();
    const RMat y = l * l.transpose() + RMat::Identity(n, n);
    CMat t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = cplx(x(i, j), y(i, j));
    return SiegelPoint(t);
}

SymplecticMatrix random_word(const std::vector<SymplecticMatrix>& alphabet, int length, Rng& rng) {
    if (alphabet.empty()) throw validation_error("random_word: empty alphabet");
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    SymplecticMatrix acc = SymplecticMatrix::identity(alphabet.front().n());
    for (int i = 0; i < length; ++i) acc = acc * alphabet[pick(rng)];
    return acc;
}

RealCoordinate random_real_coordinate(int n, Rng& rng, double spread) {
    std::uniform_real_distribution<double> u(-spread, spread);
    RVec a(n), b(n);
    for (int i = 0; i < n; ++i) {
        a[i] = u(rng);
        b[i] = u(rng);
    }
    return RealCoordinate(a, b);
}

LatticePoint random_lattice_point(int n, Rng& rng, int max_abs) {
    std::uniform_int_distribution<int> u(-max_abs, max_abs);
    IVec a(n), b(n);
    for (int i = 0; i < n; ++i) {
        a[i] = u(rng);
        b[i] = u(rng);
    }
    return LatticePoint(a, b);
}

CVec random_cvec(int n, Rng& rng, double spread) {
    std::uniform_real_distribution<double> u(-spread, spread);
    CVec z(n);
    for (int i = 0; i < n; ++i) z[i] = cplx(u(rng), u(rng));
    return z;
}

} // namespace qtorus
