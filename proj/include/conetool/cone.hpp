#pragma once

#include <string>
#include <utility>
#include <vector>

#include "conetool/linalg.hpp"

namespace conetool {

/// A rational polyhedral cone in a fixed lattice of rank `rank`, held in canonical
/// dual description:
///   - generators: primitive integer extreme rays, lex-sorted; a lineality line
///     appears as a +/- pair of rays, so the cone is the nonnegative span.
///   - inequalities: primitive integer normals of the irredundant closed half-space
///     description {x : <a,x> >= 0}; implicit equalities appear as +/- pairs.
/// All arithmetic is exact; instances are immutable after construction and may be
/// shared freely across threads.
class PolyCone {
  public:
    /// Empty placeholder (rank 0); assign a factory-built cone before use.
    PolyCone() = default;

    /// Cone generated by `rays` (empty list gives the zero cone {0}).
    static PolyCone from_rays(int rank, const std::vector<QVec>& rays);
    /// Cone cut out by `normals` (empty list gives the whole space).
    static PolyCone from_inequalities(int rank, const std::vector<QVec>& normals);
    /// Both representations supplied by the caller; verified to agree, else
    /// RepresentationMismatch.
    static PolyCone from_both(int rank, const std::vector<QVec>& rays,
                              const std::vector<QVec>& normals);
    /// Caller guarantees `rays`/`normals` are already canonical (used by exact
    /// unimodular transports, which preserve canonical form up to reordering).
    static PolyCone from_canonical(int rank, std::vector<QVec> rays, std::vector<QVec> normals);

    static PolyCone zero(int rank);
    static PolyCone full_space(int rank);

    int rank() const { return rank_; }
    const std::vector<QVec>& generators() const { return generators_; }
    const std::vector<QVec>& inequalities() const { return inequalities_; }

    bool is_zero_cone() const { return generators_.empty(); }
    bool contains(const QVec& p) const;
    bool contains_cone(const PolyCone& other) const;
    int dim() const;
    bool is_full_dimensional() const { return dim() == rank_; }
    bool is_strictly_convex() const;

    /// Sum of the canonical generators; lies in ri(C) by convexity. Zero cone -> 0.
    QVec relative_interior_point() const;
    bool in_relative_interior(const QVec& p) const;

    bool operator==(const PolyCone& other) const {
        return rank_ == other.rank_ && generators_ == other.generators_;
    }
    bool operator!=(const PolyCone& other) const { return !(*this == other); }

    std::string to_string() const;

  private:
    PolyCone(int rank, std::vector<QVec> gens, std::vector<QVec> ineqs)
        : rank_(rank), generators_(std::move(gens)), inequalities_(std::move(ineqs)) {}

    int rank_ = 0;
    std::vector<QVec> generators_;
    std::vector<QVec> inequalities_;
};

/// A face of `parent`, cut out by turning the active inequalities into equalities.
/// Satisfies the closed-line-segment property of faces of convex cones.
struct Face {
    PolyCone parent;
    std::vector<int> active_inequalities;
    PolyCone cone;
};

PolyCone intersect(const PolyCone& a, const PolyCone& b);
PolyCone cone_sum(const PolyCone& a, const PolyCone& b);

/// Image {m x : x in c}; m maps rank(c) to m.size() coordinates.
PolyCone linear_image(const PolyCone& c, const QMat& m);
/// Preimage {t : m t in c}; normals pull back through mᵀ.
PolyCone linear_preimage(const PolyCone& c, const QMat& m);

/// For closed full-dimensional cones: interiors meet iff the intersection is
/// full-dimensional. Errors on non-full-dimensional input.
bool interiors_intersect(const PolyCone& a, const PolyCone& b);

/// All faces of c including the minimal face and c itself, in deterministic order
/// (by dimension, then lex on generator lists).
std::vector<Face> faces(const PolyCone& c);

/// C^+ for a rational polyhedral cone is the cone itself; returns c unchanged.
/// Non-polyhedral C^+ is never materialized; TiledCone is its representation.
PolyCone plus_closure(const PolyCone& c);

/// Exact conic combination of p in terms of the canonical generators of c
/// (constructive Caratheodory along faces; c must contain p and be strictly convex).
/// Returns (coefficient, generator index) pairs with positive coefficients.
std::vector<std::pair<Rat, int>> conic_combination(const PolyCone& c, const QVec& p);

} // namespace conetool
