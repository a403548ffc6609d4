#include "conetool/linalg.hpp"

#include <algorithm>

#include "conetool/errors.hpp"

namespace conetool {

Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw InputError("dot: length mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

QVec matvec(const QMat& m, const QVec& x) {
    QVec out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(dot(row, x));
    return out;
}

QMat matmul(const QMat& a, const QMat& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), p = b[0].size();
    QMat out(n, QVec(p, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw InputError("matmul: shape mismatch");
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t c = 0; c < p; ++c) out[i][c] += a[i][j] * b[j][c];
        }
    }
    return out;
}

QMat transpose(const QMat& m) {
    if (m.empty()) return {};
    QMat out(m[0].size(), QVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
    return out;
}

QMat identity_matrix(int n) {
    QMat out(n, QVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

bool is_zero_vector(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

bool is_integer_matrix(const QMat& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (denominator(x) != 1) return false;
    return true;
}

QVec vec_add(const QVec& a, const QVec& b) {
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

QVec vec_sub(const QVec& a, const QVec& b) {
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

QVec vec_scale(const Rat& s, const QVec& v) {
    QVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

bool lex_less(const QVec& a, const QVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return a.size() < b.size();
}

QVec primitive(const QVec& v) {
    if (is_zero_vector(v)) throw InputError("primitive: zero vector");
    Int den_lcm = 1;
    for (const auto& x : v) den_lcm = lcm(den_lcm, denominator(x));
    Int num_gcd = 0;
    std::vector<Int> scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        scaled[i] = numerator(v[i]) * (den_lcm / denominator(v[i]));
        num_gcd = gcd(num_gcd, scaled[i]);
    }
    QVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(scaled[i] / num_gcd);
    return out;
}

QVec lex_positive_primitive(const QVec& v) {
    QVec p = primitive(v);
    for (const auto& x : p) {
        if (x > 0) return p;
        if (x < 0) {
            for (auto& y : p) y = -y;
            return p;
        }
    }
    return p;
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref_inplace(QMat& m, int ncols) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < ncols && row < static_cast<int>(m.size()); ++col) {
        int pivot = -1;
        for (int r = row; r < static_cast<int>(m.size()); ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[row], m[pivot]);
        const Rat inv = Rat(1) / m[row][col];
        for (int c = col; c < ncols; ++c) m[row][c] *= inv;
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (int c = col; c < ncols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank_of(QMat m) {
    if (m.empty()) return 0;
    return static_cast<int>(rref_inplace(m, static_cast<int>(m[0].size())).size());
}

Rat determinant(QMat m) {
    const int n = static_cast<int>(m.size());
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const Rat inv = Rat(1) / m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rat f = m[r][col] * inv;
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

std::optional<QMat> inverse(const QMat& m) {
    const int n = static_cast<int>(m.size());
    QMat work(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n) throw InputError("inverse: not square");
        work[i] = m[i];
        for (int j = 0; j < n; ++j) work[i].push_back(i == j ? Rat(1) : Rat(0));
    }
    const auto pivots = rref_inplace(work, 2 * n);
    if (static_cast<int>(pivots.size()) != n) return std::nullopt;
    QMat out(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = work[i][n + j];
    return out;
}

std::vector<QVec> kernel_basis(const QMat& m, int ncols) {
    QMat work = m;
    const auto pivots = rref_inplace(work, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(ncols, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work[r][free];
        basis.push_back(lex_positive_primitive(v));
    }
    std::sort(basis.begin(), basis.end(), lex_less);
    return basis;
}

std::optional<QVec> solve_square(const QMat& m, const QVec& b) {
    const auto inv = inverse(m);
    if (!inv) return std::nullopt;
    return matvec(*inv, b);
}

std::optional<QMat> left_inverse(const QMat& m) {
    const QMat mt = transpose(m);
    const auto gram_inv = inverse(matmul(mt, m));
    if (!gram_inv) return std::nullopt;
    return matmul(*gram_inv, mt);
}

} // namespace conetool
