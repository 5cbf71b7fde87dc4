#pragma once

#include <vector>

#include "qtorus/intmat.hpp"
#include "qtorus/siegel.hpp"

namespace qtorus {

/// True iff M^t J M = J exactly, J = (0, -I; I, 0). Odd side length is a
/// validation error, any other failure just returns false.
bool is_symplectic(const IntMat& m);

/// Element of Sp(2n, Z) held exactly; the symplectic condition is checked
/// on construction with integer arithmetic.
class SymplecticMatrix {
public:
    explicit SymplecticMatrix(IntMat m);

    static SymplecticMatrix identity(int n) { return SymplecticMatrix(IntMat::identity(2 * n)); }

    int n() const { return n_; }
    const IntMat& entries() const { return m_; }

    IntMat block_a() const { return block(0, 0); }
    IntMat block_b() const { return block(0, 1); }
    IntMat block_c() const { return block(1, 0); }
    IntMat block_d() const { return block(1, 1); }

    SymplecticMatrix operator*(const SymplecticMatrix& o) const { return SymplecticMatrix(m_ * o.m_); }

    /// g^-1 = -J g^t J, exact.
    SymplecticMatrix inverse() const;
    /// g^-t = -J g J, exact. This is the matrix acting on real coordinates.
    SymplecticMatrix inverse_transpose() const;

    bool operator==(const SymplecticMatrix& o) const { return m_ == o.m_; }
    bool operator!=(const SymplecticMatrix& o) const { return m_ != o.m_; }
    bool operator<(const SymplecticMatrix& o) const { return m_ < o.m_; }

private:
    IntMat block(int bi, int bj) const;

    IntMat m_;
    int n_;
};

enum class GeneratorKind {
    linear, // (A, 0; 0, A^-t), A in GL(n, Z)
    shear,  // (I, B; 0, I), B symmetric
    fourier // (0, -I; I, 0)
};

/// One of the three standard generator families of Sp(2n, Z). `param` is
/// A for `linear`, B for `shear`, ignored for `fourier`.
SymplecticMatrix generator(int n, GeneratorKind kind, const IntMat& param = IntMat());

/// A word in the generators, evaluated by exact multiplication.
struct GroupWord {
    struct Letter {
        GeneratorKind kind;
        IntMat param;
    };

    int n = 1;
    std::vector<Letter> letters;

    SymplecticMatrix evaluate() const;
};

/// Generator letters (with inverses) used for word enumeration.
std::vector<SymplecticMatrix> standard_alphabet(int n);

/// Letters restricted to the theta subgroup: shear parameters keep an even
/// diagonal, so the classical modular transformation law applies to every
/// word. linear and fourier letters land there as is.
std::vector<SymplecticMatrix> theta_group_alphabet(int n);

/// g . T = (A T + B)(C T + D)^-1. Warns on stderr when C T + D is close
/// to singular.
SiegelPoint act_siegel(const SymplecticMatrix& g, const SiegelPoint& T);

/// g . z = (C T + D)^-t z, the coordinate action attached to the base
/// point T.
CVec act_coord(const SymplecticMatrix& g, const CVec& z, const SiegelPoint& T);

/// g . x = g^-t (x1; x2), exact on integer input. A left action:
/// act_real(g, act_real(h, x)) = act_real(g h, x).
RealCoordinate act_real(const SymplecticMatrix& g, const RealCoordinate& x);
LatticePoint act_real(const SymplecticMatrix& g, const LatticePoint& w);

/// Breadth-first enumeration of generator words up to max_word_length;
/// returns the distinct elements fixing T within fix_tol, sorted. Both I
/// and -I are always included (each fixes every T).
std::vector<SymplecticMatrix> stabilizer_search(const SiegelPoint& T, int max_word_length,
                                                double fix_tol = 1e-10,
                                                const std::vector<SymplecticMatrix>* alphabet = nullptr);

} // namespace qtorus
