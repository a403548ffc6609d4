#pragma once

#include <optional>
#include <vector>

#include "conetool/util.hpp"

namespace conetool {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>; // row-major

Rat dot(const QVec& a, const QVec& b);
QVec matvec(const QMat& m, const QVec& x);
QMat matmul(const QMat& a, const QMat& b);
QMat transpose(const QMat& m);
QMat identity_matrix(int n);
bool is_zero_vector(const QVec& v);
bool is_integer_matrix(const QMat& m);

QVec vec_add(const QVec& a, const QVec& b);
QVec vec_sub(const QVec& a, const QVec& b);
QVec vec_scale(const Rat& s, const QVec& v);

/// Strict lexicographic order on vectors of equal length.
bool lex_less(const QVec& a, const QVec& b);

/// Scale a nonzero vector to integer entries with gcd 1, preserving direction.
QVec primitive(const QVec& v);

/// primitive() followed by a sign flip making the first nonzero entry positive.
/// Canonical representative of a line through the origin.
QVec lex_positive_primitive(const QVec& v);

int rank_of(QMat m);
Rat determinant(QMat m);
std::optional<QMat> inverse(const QMat& m);

/// Canonical basis of {x : m x = 0}, derived from the reduced row echelon form,
/// each vector in lex-positive primitive form, lex-sorted.
std::vector<QVec> kernel_basis(const QMat& m, int ncols);

/// Unique solution of m x = b for square invertible m.
std::optional<QVec> solve_square(const QMat& m, const QVec& b);

/// Left inverse (mᵀm)⁻¹mᵀ of a full-column-rank matrix.
std::optional<QMat> left_inverse(const QMat& m);

} // namespace conetool
