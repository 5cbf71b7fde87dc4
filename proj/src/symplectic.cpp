#include "qtorus/symplectic.hpp"

#include <iostream>
#include <set>

namespace qtorus {

namespace {

IntMat standard_j(int n) {
    IntMat j(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        j(i, n + i) = -1;
        j(n + i, i) = 1;
    }
    return j;
}

CMat to_complex(const IntMat& m) {
    CMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = cplx(static_cast<double>(m(i, j)), 0.0);
    return r;
}

RMat to_real(const IntMat& m) {
    RMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = static_cast<double>(m(i, j));
    return r;
}

} // namespace

bool is_symplectic(const IntMat& m) {
    if (m.rows() != m.cols()) throw validation_error("is_symplectic: matrix is not square");
    if (m.rows() % 2 != 0) throw validation_error("is_symplectic: odd side length");
    const IntMat j = standard_j(m.rows() / 2);
    return m.transpose() * j * m == j;
}

SymplecticMatrix::SymplecticMatrix(IntMat m) : m_(std::move(m)) {
    if (!is_symplectic(m_)) throw validation_error("SymplecticMatrix: g^t J g != J");
    n_ = m_.rows() / 2;
}

IntMat SymplecticMatrix::block(int bi, int bj) const {
    IntMat b(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) b(i, j) = m_(bi * n_ + i, bj * n_ + j);
    return b;
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    const IntMat j = standard_j(n_);
    return SymplecticMatrix(-(j * m_.transpose() * j));
}

SymplecticMatrix SymplecticMatrix::inverse_transpose() const {
    const IntMat j = standard_j(n_);
    return SymplecticMatrix(-(j * m_ * j));
}

SymplecticMatrix generator(int n, GeneratorKind kind, const IntMat& param) {
    if (n < 1) throw validation_error("generator: n must be positive");
    IntMat g(2 * n, 2 * n);
    switch (kind) {
    case GeneratorKind::linear: {
        if (param.rows() != n || param.cols() != n) throw validation_error("generator: A must be n x n");
        const IntMat ainv_t = param.unimodular_inverse().transpose();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                g(i, j) = param(i, j);
                g(n + i, n + j) = ainv_t(i, j);
            }
        break;
    }
    case GeneratorKind::shear: {
        if (param.rows() != n || param.cols() != n) throw validation_error("generator: B must be n x n");
        if (!param.is_symmetric()) throw validation_error("generator: B must be symmetric");
        for (int i = 0; i < n; ++i) {
            g(i, i) = 1;
            g(n + i, n + i) = 1;
            for (int j = 0; j < n; ++j) g(i, n + j) = param(i, j);
        }
        break;
    }
    case GeneratorKind::fourier:
        g = standard_j(n);
        break;
    }
    return SymplecticMatrix(g);
}

SymplecticMatrix GroupWord::evaluate() const {
    SymplecticMatrix acc = SymplecticMatrix::identity(n);
    for (const auto& l : letters) acc = acc * generator(n, l.kind, l.param);
    return acc;
}

std::vector<SymplecticMatrix> standard_alphabet(int n) {
    std::vector<SymplecticMatrix> letters;
    auto push = [&](const SymplecticMatrix& g) {
        for (const auto& h : letters)
            if (h == g) return;
        letters.push_back(g);
    };

    // linear letters: -I, adjacent swaps, one shear in GL(n, Z)
    push(generator(n, GeneratorKind::linear, -IntMat::identity(n)));
    for (int i = 0; i + 1 < n; ++i) {
        IntMat p = IntMat::identity(n);
        p(i, i) = p(i + 1, i + 1) = 0;
        p(i, i + 1) = p(i + 1, i) = 1;
        push(generator(n, GeneratorKind::linear, p));
    }
    if (n > 1) {
        IntMat s = IntMat::identity(n);
        s(0, 1) = 1;
        push(generator(n, GeneratorKind::linear, s));
        s(0, 1) = -1;
        push(generator(n, GeneratorKind::linear, s));
    }

    // shear letters: elementary symmetric B and their negatives
    for (int i = 0; i < n; ++i) {
        IntMat b(n, n);
        b(i, i) = 1;
        push(generator(n, GeneratorKind::shear, b));
        b(i, i) = -1;
        push(generator(n, GeneratorKind::shear, b));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            IntMat b(n, n);
            b(i, j) = b(j, i) = 1;
            push(generator(n, GeneratorKind::shear, b));
            b(i, j) = b(j, i) = -1;
            push(generator(n, GeneratorKind::shear, b));
        }

    const auto f = generator(n, GeneratorKind::fourier);
    push(f);
    push(f.inverse());
    return letters;
}

std::vector<SymplecticMatrix> theta_group_alphabet(int n) {
    std::vector<SymplecticMatrix> letters;
    auto push = [&](const SymplecticMatrix& g) {
        for (const auto& h : letters)
            if (h == g) return;
        letters.push_back(g);
    };

    push(generator(n, GeneratorKind::linear, -IntMat::identity(n)));
    for (int i = 0; i + 1 < n; ++i) {
        IntMat p = IntMat::identity(n);
        p(i, i) = p(i + 1, i + 1) = 0;
        p(i, i + 1) = p(i + 1, i) = 1;
        push(generator(n, GeneratorKind::linear, p));
    }
    if (n > 1) {
        IntMat s = IntMat::identity(n);
        s(0, 1) = 1;
        push(generator(n, GeneratorKind::linear, s));
        s(0, 1) = -1;
        push(generator(n, GeneratorKind::linear, s));
    }

    // even diagonal keeps every word inside the theta subgroup
    for (int i = 0; i < n; ++i) {
        IntMat b(n, n);
        b(i, i) = 2;
        push(generator(n, GeneratorKind::shear, b));
        b(i, i) = -2;
        push(generator(n, GeneratorKind::shear, b));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            IntMat b(n, n);
            b(i, j) = b(j, i) = 1;
            push(generator(n, GeneratorKind::shear, b));
            b(i, j) = b(j, i) = -1;
            push(generator(n, GeneratorKind::shear, b));
        }

    const auto f = generator(n, GeneratorKind::fourier);
    push(f);
    push(f.inverse());
    return letters;
}

SiegelPoint act_siegel(const SymplecticMatrix& g, const SiegelPoint& T) {
    if (g.n() != T.n()) throw validation_error("act_siegel: dimension mismatch");
    const CMat a = to_complex(g.block_a());
    const CMat b = to_complex(g.block_b());
    const CMat c = to_complex(g.block_c());
    const CMat d = to_complex(g.block_d());
    const CMat m = c * T.mat() + d;
    Eigen::PartialPivLU<CMat> lu(m);
    const double rc = lu.rcond();
    if (rc < 1e-13)
        std::cerr << "qtorus: warning: C T + D nearly singular (rcond " << rc << ")\n";
    // (A T + B) M^-1 computed as a solve against M^t from the left
    const CMat num = a * T.mat() + b;
    CMat r = m.transpose().partialPivLu().solve(num.transpose()).transpose();
    r = ((r + r.transpose()) / 2.0).eval(); // symmetric up to rounding
    return SiegelPoint(r);
}

CVec act_coord(const SymplecticMatrix& g, const CVec& z, const SiegelPoint& T) {
    if (g.n() != T.n() || z.size() != T.n()) throw validation_error("act_coord: dimension mismatch");
    const CMat m = to_complex(g.block_c()) * T.mat() + to_complex(g.block_d());
    return m.transpose().partialPivLu().solve(z);
}

RealCoordinate act_real(const SymplecticMatrix& g, const RealCoordinate& x) {
    if (g.n() != x.dim()) throw validation_error("act_real: dimension mismatch");
    const RMat git = to_real(g.inverse_transpose().entries());
    return RealCoordinate::from_stacked(git * x.stacked());
}

LatticePoint act_real(const SymplecticMatrix& g, const LatticePoint& w) {
    if (g.n() != w.dim()) throw validation_error("act_real: dimension mismatch");
    const IntMat git = g.inverse_transpose().entries();
    const int n = g.n();
    IVec r1(n), r2(n);
    for (int i = 0; i < 2 * n; ++i) {
        i64 acc = 0;
        for (int j = 0; j < n; ++j) {
            acc = checked_add(acc, checked_mul(git(i, j), w.w1[j]));
            acc = checked_add(acc, checked_mul(git(i, n + j), w.w2[j]));
        }
        if (i < n)
            r1[i] = static_cast<int>(acc);
        else
            r2[i - n] = static_cast<int>(acc);
    }
    return LatticePoint(r1, r2);
}

std::vector<SymplecticMatrix> stabilizer_search(const SiegelPoint& T, int max_word_length, double fix_tol,
                                                const std::vector<SymplecticMatrix>* alphabet) {
    if (max_word_length < 1) throw validation_error("stabilizer_search: max_word_length must be >= 1");
    const int n = T.n();
    std::vector<SymplecticMatrix> letters = alphabet ? *alphabet : standard_alphabet(n);

    std::set<SymplecticMatrix> seen;
    std::vector<SymplecticMatrix> frontier{SymplecticMatrix::identity(n)};
    seen.insert(frontier.front());
    // -I fixes every T; make sure both central elements are always reported
    seen.insert(SymplecticMatrix(-IntMat::identity(2 * n)));

    for (int len = 0; len < max_word_length; ++len) {
        std::vector<SymplecticMatrix> next;
        for (const auto& v : frontier)
            for (const auto& a : letters) {
                SymplecticMatrix w = v * a;
                if (seen.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }

    std::vector<SymplecticMatrix> fixing;
    for (const auto& g : seen) {
        const SiegelPoint gt = act_siegel(g, T);
        if ((gt.mat() - T.mat()).cwiseAbs().maxCoeff() < fix_tol) fixing.push_back(g);
    }
    return fixing;
}

} // namespace qtorus
