#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conetool/tiling.hpp"

namespace conetool {

/// A marked Q-factorial birational contraction at data level: the pullback matrix
/// (injective, columns model f^* on a basis of N^1 of the target), the classes of
/// the exceptional prime divisors, and whether the marking is a small
/// modification (SQM: square, invertible, no exceptional rays).
struct Marking {
    std::string id;
    int source_rank = 0;
    int target_rank = 0;
    QMat pullback; // source_rank x target_rank, full column rank
    std::vector<QVec> exceptional_rays;
    bool is_sqm = false;
};

/// Validates the direct-sum invariant: pullback columns and exceptional rays
/// together span a space of dimension target_rank + #exceptional.
Marking make_marking(std::string id, int source_rank, int target_rank, QMat pullback,
                     std::vector<QVec> exceptional_rays, bool is_sqm);

/// A Mori chamber datum: marking plus the rational polyhedral model of the
/// target's nef-effective cone. Induces the chamber cone
/// pullback(target_nef) + cone(exceptional rays).
struct Chamber {
    Marking marking;
    PolyCone target_nef;
    std::optional<PolyCone> tile; // chamber-level tile for gluing pipelines
};

Chamber make_chamber(Marking marking, PolyCone target_nef,
                     std::optional<PolyCone> tile = std::nullopt);

PolyCone chamber_cone(const Chamber& ch);

/// Composite marking modeling outer ∘ inner for an SQM inner marking:
/// pullback = inner.pullback · outer.pullback, exceptional rays transported
/// through the SQM pullback.
Marking compose_marking(const Marking& outer, const Marking& inner_sqm);

/// True iff the chamber cones' interiors meet; cross-checks cone equality and
/// throws DichotomyViolation when interiors meet but the cones differ
/// (inconsistent scenario data).
bool chambers_equivalent(const Chamber& a, const Chamber& b);

/// A system of Mori chambers under a pseudo-automorphism action: the listed
/// chambers are orbit representatives inside the target (effective or movable)
/// cone model.
struct ChamberSystem {
    int rank = 0;
    ActionGroup group;
    std::vector<Chamber> chambers;
    PolyCone target_cone;
    AmbientRegion ambient;
    bool movable = false;
};

/// Validation: rank coherence, SQM-only for movable systems, chamber cones and
/// tiles inside the target closure, and a radius-1 permutation sanity check
/// (generator translates of listed chambers either equal a listed chamber or
/// have interiors disjoint from all of them).
ChamberSystem make_chamber_system(int rank, ActionGroup group, std::vector<Chamber> chambers,
                                  PolyCone target_cone, AmbientRegion ambient, bool movable);

/// Pairwise dichotomy across listed chambers plus sampled covering of the target
/// cone by chamber cones and their ball translates.
Certificate validate_system(const ChamberSystem& sys, int radius, int samples,
                            std::uint64_t seed);

struct DecomposePiece {
    std::string label;
    int chamber_index = -1;
    GroupElement translate;
    PolyCone chamber; // the translated chamber cone
    PolyCone piece;   // its intersection with the decomposed cone
};

struct DecomposeResult {
    std::vector<DecomposePiece> pieces;
    Certificate cert;
};

/// Chamber decomposition of a polyhedral cone: the pieces are the intersections
/// with the (listed and ball-translated) chamber cones whose interior meets the
/// cone; sampled points of the cone must land in some piece.
DecomposeResult decompose_polytope_cone(const PolyCone& pi, const ChamberSystem& sys,
                                        int radius, int samples, std::uint64_t seed);

struct StabilizerResult {
    std::vector<GroupElement> elements;   // stabilize the chamber cone and ker f_*
    std::vector<GroupElement> violations; // stabilize the cone, move the exceptional subcone
};

/// Ball stabilizer of the chamber cone; elements that fail to preserve the
/// exceptional subcone are flagged as data errors, not silently returned.
StabilizerResult chamber_stabilizer(const ChamberSystem& sys, const Chamber& ch, int radius);

struct NefDescentResult {
    std::vector<GroupElement> stabilizer_window;
    PolyCone pi_f;        // descended tile upstairs, inside the face
    PolyCone down_tile;   // transported to the target rank by the pushforward
    TiledCone down_tiling;
    Certificate cert;
};

/// Descend the nef tiling to the face cut out by a morphism-type marking: run
/// face descent on F = pullback(target_nef), then transport the result to the
/// target rank through the pushforward (left inverse of the pullback).
NefDescentResult nef_descent(const ChamberSystem& sys, const TiledCone& nef_tiling,
                             const Chamber& face_marking, int radius);

/// Conjunction of component certificates for one statement of the equivalence
/// theorem's cycle.
struct PipelineCertificate {
    std::string statement;
    std::vector<Certificate> components;
    ordered_json extras = ordered_json::object();
    Verdict verdict() const;
    ordered_json to_json() const;
};

/// Glue the per-orbit-representative chamber tiles into Π for the effective or
/// movable target; on success also carve and verify a fundamental domain for
/// (group, Π).
PipelineCertificate build_effective_certificate(const ChamberSystem& sys, int radius,
                                                int samples, int fuel, std::uint64_t seed);

struct NefExtraction {
    std::vector<GroupElement> gammas; // self-SQM translates whose chambers meet eff_tile
    PolyCone sigma;                   // sum of (gamma^-1)* eff_tile ∩ nef model
    std::vector<std::string> target_classes;
    PipelineCertificate cert;
};

/// From an effective-cone tile to nef-cone data: decompose eff_tile against the
/// SQM chambers, form Σ from the self-SQM translates, verify that ample-model
/// samples reduce into Stab·Σ, and report the finitely many SQM-target classes.
NefExtraction extract_nef_certificates(const ChamberSystem& sys, const PolyCone& eff_tile,
                                       int radius, int samples, int fuel, std::uint64_t seed);

struct ProductResult {
    PolyCone cone;
    int required_rank = 0;
    int achieved_rank = 0;
    bool span_ok = false;
};

/// Sum of the pullback images of two effective cones; checks the span hypothesis
/// rank [p1 | p2] = ambient rank and returns the cone with a warning flag when
/// it fails.
ProductResult product_effective_cone(const PolyCone& eff1, const PolyCone& eff2,
                                     const QMat& p1_pullback, const QMat& p2_pullback);

struct ProductSplit {
    QVec part1, part2; // images: x = part1 + part2
    QVec u, v;         // preimages: part1 = p1 u, part2 = p2 v, u in eff1, v in eff2
};

/// Constructive split of a member of the product cone into its two pullback
/// parts (exact, via conic combination in the sum cone).
ProductSplit split_product_member(const ProductResult& prod, const PolyCone& eff1,
                                  const PolyCone& eff2, const QMat& p1, const QMat& p2,
                                  const QVec& x);

} // namespace conetool
