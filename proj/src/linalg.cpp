#include "gradus/linalg.hpp"

#include <algorithm>

namespace gradus {

QMat q_identity(size_t n) {
    QMat a(n, QVec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

QMat q_mul(const QMat& a, const QMat& b) {
    size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    QMat r(n, QVec(m, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

QVec q_apply(const QMat& a, const QVec& x) {
    QVec r(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            if (a[i][j] != 0 && x[j] != 0) r[i] += a[i][j] * x[j];
    return r;
}

QMat q_transpose(const QMat& a) {
    if (a.empty()) return {};
    QMat r(a[0].size(), QVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

std::vector<size_t> q_rref(QMat& a) {
    std::vector<size_t> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size(), row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[row]);
        Rat inv = Rat(1) / a[row][col];
        for (size_t j = col; j < cols; ++j) a[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t q_rank(QMat a) { return q_rref(a).size(); }

std::optional<QMat> q_inverse(QMat a) {
    size_t n = a.size();
    QMat aug = a;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Rat(1) : Rat(0));
    }
    auto pivots = q_rref(aug);
    if (pivots.size() != n) return std::nullopt;
    for (size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    QMat inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::optional<QVec> q_solve(QMat a, QVec b) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    auto pivots = q_rref(a);
    QVec x(cols, Rat(0));
    size_t row = 0;
    for (size_t col : pivots) {
        if (col == cols) return std::nullopt;  // pivot in the rhs column
        x[col] = a[row][cols];
        ++row;
    }
    // Rows past the pivots must be null.
    for (size_t i = pivots.size(); i < rows; ++i)
        if (a[i][cols] != 0) return std::nullopt;
    return x;
}

std::vector<QVec> q_kernel(QMat a) {
    if (a.empty()) return {};
    size_t cols = a[0].size();
    auto pivots = q_rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

FVec f_add(const FVec& a, const FVec& b) {
    FVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

FVec f_sub(const FVec& a, const FVec& b) {
    FVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

FVec f_scale(const Field& c, const FVec& a) {
    FVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

FVec f_apply(const FMat& a, const FVec& x) {
    FVec r(a.size(), Field::zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            if (!a[i][j].is_zero() && !x[j].is_zero()) r[i] += a[i][j] * x[j];
    return r;
}

FVec f_bar(const FVec& a) {
    FVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].bar();
    return r;
}

namespace {

std::vector<size_t> f_rref(FMat& a) {
    std::vector<size_t> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size(), row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && a[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[row]);
        Field inv = a[row][col].inverse();
        for (size_t j = col; j < cols; ++j) a[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Field f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

size_t f_rank(FMat a) { return f_rref(a).size(); }

std::optional<FVec> f_solve(FMat a, FVec b) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    auto pivots = f_rref(a);
    FVec x(cols, Field::zero());
    size_t row = 0;
    for (size_t col : pivots) {
        if (col == cols) return std::nullopt;
        x[col] = a[row][cols];
        ++row;
    }
    for (size_t i = pivots.size(); i < rows; ++i)
        if (!a[i][cols].is_zero()) return std::nullopt;
    return x;
}

std::vector<FVec> f_kernel(FMat a) {
    if (a.empty()) return {};
    size_t cols = a[0].size();
    auto pivots = f_rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<FVec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        FVec v(cols, Field::zero());
        v[free] = Field::one();
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Strip the rational content and the v-power from a row.
void strip_row(std::vector<Laurent>& row) {
    Int num_gcd = 0, den_lcm = 1;
    int min_exp = 0;
    bool any = false;
    for (const auto& f : row) {
        if (f.is_zero()) continue;
        if (!any) min_exp = f.lowest_exponent();
        min_exp = std::min(min_exp, f.lowest_exponent());
        any = true;
        for (const auto& [e, c] : f.terms()) {
            num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c) < 0
                                                              ? Int(-numerator(c))
                                                              : numerator(c));
            den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, denominator(c)) *
                      denominator(c);
        }
    }
    if (!any) return;
    Rat scale = Rat(den_lcm) / Rat(num_gcd);
    for (auto& f : row) f = f.scaled(scale).shifted(-min_exp);
}

}  // namespace

size_t laurent_echelon(std::vector<std::vector<Laurent>>& a,
                       std::vector<size_t>* pivot_cols) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size(), row = 0;
    for (auto& r : a) strip_row(r);
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && a[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[row]);
        for (size_t i = row + 1; i < rows; ++i) {
            if (a[i][col].is_zero()) continue;
            // Cross-multiplication keeps everything in Q[v,v^-1].
            Laurent pi = a[row][col], xi = a[i][col];
            for (size_t j = col; j < cols; ++j)
                a[i][j] = a[i][j] * pi - a[row][j] * xi;
            strip_row(a[i]);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++row;
    }
    return row;
}

PolyLattice poly_hnf(const std::vector<std::vector<Laurent>>& columns, size_t n) {
    for (const auto& c : columns) {
        if (c.size() != n) throw InvariantViolation("Internal", "poly_hnf: column size");
        for (const auto& f : c)
            if (!f.is_polynomial())
                throw InvariantViolation("NonPolynomialEntry", "poly_hnf entry " + f.to_string());
    }
    std::vector<std::vector<Laurent>> work = columns;
    PolyLattice out;
    out.n = n;
    size_t start = 0;
    for (size_t row = 0; row < n && start < work.size(); ++row) {
        // Reduce all active columns in this row until one nonzero entry stays.
        while (true) {
            size_t best = work.size();
            for (size_t j = start; j < work.size(); ++j) {
                if (work[j][row].is_zero()) continue;
                if (best == work.size() ||
                    work[j][row].highest_exponent() < work[best][row].highest_exponent())
                    best = j;
            }
            if (best == work.size()) break;  // row identically zero
            std::swap(work[start], work[best]);
            bool reduced_all = true;
            for (size_t j = start + 1; j < work.size(); ++j) {
                if (work[j][row].is_zero()) continue;
                Laurent rem;
                Laurent q = poly_divmod(work[j][row], work[start][row], rem);
                for (size_t i = 0; i < n; ++i)
                    work[j][i] = work[j][i] - q * work[start][i];
                if (!work[j][row].is_zero()) reduced_all = false;
            }
            if (reduced_all) {
                // Make the pivot monic for determinism.
                Rat lead = work[start][row].coeff(work[start][row].highest_exponent());
                for (size_t i = 0; i < n; ++i)
                    work[start][i] = work[start][i].scaled(Rat(1) / lead);
                out.basis.push_back(work[start]);
                out.pivot_rows.push_back(row);
                ++start;
                break;
            }
        }
    }
    // Drop exhausted zero columns; anything nonzero left would mean a missed
    // pivot, which cannot happen.
    for (size_t j = start; j < work.size(); ++j)
        for (size_t i = 0; i < n; ++i)
            if (!work[j][i].is_zero())
                throw InvariantViolation("Internal", "poly_hnf: residual column");
    // Normalize to echelon: reduce entries above each pivot.
    for (size_t j = out.basis.size(); j-- > 0;) {
        for (size_t k = 0; k < j; ++k) {
            size_t prow = out.pivot_rows[j];
            if (out.basis[k][prow].is_zero()) continue;
            Laurent rem;
            Laurent q = poly_divmod(out.basis[k][prow], out.basis[j][prow], rem);
            if (q.is_zero()) continue;
            for (size_t i = 0; i < out.n; ++i)
                out.basis[k][i] = out.basis[k][i] - q * out.basis[j][i];
        }
    }
    return out;
}

std::optional<std::vector<Field>> PolyLattice::coordinates(const std::vector<Laurent>& x,
                                                           bool* integral) const {
    std::vector<Field> rem(n);
    for (size_t i = 0; i < n; ++i) rem[i] = Field(x[i]);
    std::vector<Field> coords(basis.size(), Field::zero());
    if (integral) *integral = true;
    for (size_t j = 0; j < basis.size(); ++j) {
        size_t row = pivot_rows[j];
        // Rows before this pivot must already be cleared.
        if (rem[row].is_zero()) continue;
        Field c = rem[row] / Field(basis[j][row]);
        coords[j] = c;
        for (size_t i = 0; i < n; ++i) rem[i] -= c * Field(basis[j][i]);
        if (integral && !(c.is_laurent() && c.num().is_polynomial())) *integral = false;
    }
    for (size_t i = 0; i < n; ++i)
        if (!rem[i].is_zero()) return std::nullopt;
    return coords;
}

}  // namespace gradus
