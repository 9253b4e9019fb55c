#ifndef GRADUS_LINALG_HPP
#define GRADUS_LINALG_HPP

#include "gradus/laurent.hpp"

#include <optional>
#include <vector>

namespace gradus {

// Dense exact matrices.  QMat is rational, FMat has Q(v) entries.  All
// algorithms choose pivots deterministically (first usable index).

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

QMat q_identity(size_t n);
QMat q_mul(const QMat& a, const QMat& b);
QVec q_apply(const QMat& a, const QVec& x);
QMat q_transpose(const QMat& a);
size_t q_rank(QMat a);
std::optional<QMat> q_inverse(QMat a);
// Solves a x = b; empty optional when inconsistent.  If the system is
// underdetermined the solution with zero free variables is returned.
std::optional<QVec> q_solve(QMat a, QVec b);
// Basis of the right kernel of a (column vectors).
std::vector<QVec> q_kernel(QMat a);
// Reduced row echelon form; returns pivot column indices.
std::vector<size_t> q_rref(QMat& a);

using FVec = std::vector<Field>;
using FMat = std::vector<FVec>;

FVec f_add(const FVec& a, const FVec& b);
FVec f_sub(const FVec& a, const FVec& b);
FVec f_scale(const Field& c, const FVec& a);
FVec f_apply(const FMat& a, const FVec& x);
size_t f_rank(FMat a);
std::optional<FVec> f_solve(FMat a, FVec b);
std::vector<FVec> f_kernel(FMat a);
FVec f_bar(const FVec& a);

// Row echelon on a Laurent matrix by fraction-free elimination with content
// stripping (rows divided by their rational content and lowest v-power).
// Returns the rank; `a` is left in echelon form and `pivot_cols` collects the
// pivot column of each processed row.
size_t laurent_echelon(std::vector<std::vector<Laurent>>& a,
                       std::vector<size_t>* pivot_cols = nullptr);

// Column Hermite form over Q[v].  Input: generator columns (entries must be
// polynomials in v), each of length n.  Output: a triangular Q[v]-basis of
// the column span, as columns, together with the pivot row of each basis
// column (strictly increasing).
struct PolyLattice {
    std::vector<std::vector<Laurent>> basis;  // basis[j] = column vector
    std::vector<size_t> pivot_rows;
    size_t n = 0;

    // Coordinates of x over the basis, each a rational function; empty when x
    // is outside the Q(v)-span.  `integral` is set when every coordinate is a
    // polynomial, i.e. x lies in the Q[v]-module itself.
    std::optional<std::vector<Field>> coordinates(const std::vector<Laurent>& x,
                                                  bool* integral) const;
};

PolyLattice poly_hnf(const std::vector<std::vector<Laurent>>& columns, size_t n);

}  // namespace gradus

#endif
