#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conetool/action.hpp"
#include "conetool/cone.hpp"
#include "conetool/jsonio.hpp"

namespace conetool {

/// Rational description of the ambient cone C of a group action:
///   - closure_ineqs: half-spaces containing the closure of C (exact, or an outer
///     approximation when the true boundary is irrational),
///   - strict_ineqs: half-spaces carving a sampling subregion of the interior C°
///     (an inner approximation; samples must avoid irrational boundary rays).
/// On integer sample points and primitive integer normals, <a,x> >= 1 realizes
/// the margin rule for strictness.
struct AmbientRegion {
    std::vector<QVec> closure_ineqs;
    std::vector<QVec> strict_ineqs;
    int box = 50;
};

AmbientRegion region_from_cone(const PolyCone& c, int box = 50);

/// The computational stand-in for C^+: the pair (Γ, Π) representing Γ·Π.
struct TiledCone {
    ActionGroup group;
    PolyCone tile; // Π: rational polyhedral, strictly convex, full-dimensional
    std::optional<AmbientRegion> ambient;
};

/// Validates the tile invariants and, when an ambient description is present,
/// that every tile generator satisfies the closure inequalities.
TiledCone make_tiled_cone(ActionGroup group, PolyCone tile,
                          std::optional<AmbientRegion> ambient);

enum class Verdict { VerifiedOnSamples, Refuted, BudgetExhausted };
std::string verdict_string(Verdict v);
int verdict_exit_code(Verdict v); // 0 / 2 / 3

/// Machine-checkable record of a bounded verification run. Refutations carry an
/// exact rational witness; verdicts never claim more than sampled/bounded checks.
struct Certificate {
    std::string kind; // polyhedral-type | fundamental-domain | face-descent | glue | decomposition
    std::string inputs_digest;
    ordered_json params = ordered_json::object();
    Verdict verdict = Verdict::VerifiedOnSamples;
    ordered_json witnesses = ordered_json::array();
    ordered_json details = ordered_json::object();
    ordered_json to_json() const;
};

/// Deterministic integer sampler: rejection sampling of lattice points in
/// [-box, box]^n against the strict region, seeded and reproducible.
std::vector<QVec> draw_strict_samples(const AmbientRegion& region, int rank, int count,
                                      std::uint64_t seed);

struct ReduceResult {
    bool success = false;
    GroupElement element; // act(element, x) == reduced on success
    QVec reduced;
    int steps = 0;
    bool exhaustive = false; // finite group was fully scanned after greedy descent failed
    std::vector<QVec> trace; // visited points on failure
};

/// Reduction of x into the tile: best-first descent on the objective <xi, y>
/// over the orbit of x (xi = sum of the tile's primitive generators, ties broken
/// by insertion order), one unit of fuel per expansion. For groups whose BFS
/// ball stabilizes (finite groups) a failed descent falls back to an exhaustive
/// scan, so failures there are exact. Domain error if x is outside the ambient
/// closure.
ReduceResult reduce_point(const TiledCone& t, const QVec& x, int fuel);
ReduceResult reduce_point(const TiledCone& t, const QVec& x, int fuel, const QVec& xi);

/// Default reduction objective: sum of the tile's primitive generators.
QVec default_objective(const PolyCone& tile);

/// Samples the strict interior region and reduces every sample; also re-asserts
/// that the tile generators lie in the ambient closure (the Π ⊂ C^+ hypothesis
/// at data level). Failures are reported as budget-exhausted with witnesses,
/// never as disproof.
Certificate certify_polyhedral_type(const TiledCone& t, int samples, int fuel,
                                    std::uint64_t seed);

struct CarveResult {
    PolyCone domain;
    QVec xi;
    std::vector<GroupElement> overlaps; // S: ball elements with full-dim overlap
};

/// Dirichlet-style carving: D = Π ∩ {x : <xi, x> <= <gᵀxi, x> for all g in S},
/// S the non-identity ball elements whose tile translate overlaps Π in full
/// dimension.
CarveResult carve_fundamental_domain(const TiledCone& t, int radius,
                                     const std::optional<QVec>& xi = std::nullopt);

/// (a) strictness: no non-identity ball element gives act(g,D) a full-dimensional
/// overlap with D (hard refutation with witness element otherwise);
/// (b) covering: sampled strict-region points reduce into Γ·D.
Certificate verify_fundamental_domain(const TiledCone& t, const PolyCone& domain, int radius,
                                      int samples, int fuel, std::uint64_t seed);

struct FaceAssignment {
    PolyCone tile_face;
    std::optional<GroupElement> element; // g with act(g, ri-point) in ri(F)
};

struct DescentResult {
    std::vector<GroupElement> stabilizer_window;
    PolyCone pi_f;
    std::vector<FaceAssignment> assignments;
    Certificate cert;
};

/// Face descent: for each nonzero face of Π, search the ball for an element
/// mapping its relative-interior point into ri(F); Π_F is the sum of the mapped
/// faces. F must intersect Π in a face of Π (or trivially) and lie in the
/// ambient closure.
DescentResult descend_to_face(const TiledCone& t, const PolyCone& f, int radius);

struct GlueResult {
    PolyCone pi;
    Certificate cert;
};

/// Glue chamber tiles: Π = Σ Π_i after validating Π_i ⊆ N_i and N_i full-dim.
/// Certifies Π ⊆ ambient closure (exact; refutation carries the escaping ray)
/// and that sampled strict-region points reduce into Γ·Π.
GlueResult glue_chambers(const ActionGroup& group,
                         const std::vector<std::pair<PolyCone, PolyCone>>& reps,
                         const AmbientRegion& ambient, int samples, int fuel,
                         std::uint64_t seed);

} // namespace conetool
