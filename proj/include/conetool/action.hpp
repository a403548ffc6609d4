#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conetool/cone.hpp"

namespace conetool {

/// An element of GL(V_Z): a unimodular integer matrix together with the word in
/// the group's stored generators that produced it (for provenance in reports).
struct GroupElement {
    QMat matrix;           // n x n, integer entries, det = +/-1
    std::vector<int> word; // indices into ActionGroup::generator_matrices(), in
                           // multiplication order (matrix = product left to right)
    bool is_identity() const { return word.empty(); }
    std::string word_string(const std::vector<std::string>& names) const;
};

/// A subgroup of GL(V_Z) given by finitely many generators. Inverses are stored
/// alongside the supplied generators, so words never need negative letters.
/// Groups are never assumed finite; enumerations are bounded and report truncation.
class ActionGroup {
  public:
    int rank() const { return rank_; }
    const std::vector<QMat>& generator_matrices() const { return gens_; }
    const std::vector<std::string>& generator_names() const { return names_; }
    /// Index of each stored generator's inverse within the stored list.
    const std::vector<int>& inverse_indices() const { return inverse_index_; }
    const std::optional<PolyCone>& invariant_cone() const { return invariant_cone_; }
    GroupElement identity() const;

    friend ActionGroup make_group(const std::vector<QMat>& gens,
                                  const std::optional<PolyCone>& invariant_cone);

  private:
    int rank_ = 0;
    std::vector<QMat> gens_;
    std::vector<std::string> names_;
    std::vector<int> inverse_index_;
    std::optional<PolyCone> invariant_cone_;
};

/// Validates unimodularity, auto-adds inverses, and (when given) checks that every
/// stored generator maps the invariant cone into itself, which for the closed set
/// of generators-and-inverses is exact preservation.
ActionGroup make_group(const std::vector<QMat>& gens,
                       const std::optional<PolyCone>& invariant_cone = std::nullopt);

/// All distinct elements expressible as words of length <= radius, BFS order,
/// deduplicated by matrix (shortest word kept). Includes the identity.
/// Throws BudgetError past the global element cap.
std::vector<GroupElement> orbit_ball(const ActionGroup& g, int radius);

/// Full element list if the BFS ball stabilizes within `probe_radius`
/// (ball(r) == ball(r+1) implies the group has been exhausted); nullopt otherwise.
std::optional<std::vector<GroupElement>> full_group_if_finite(const ActionGroup& g,
                                                              int probe_radius = 16);

QVec act(const GroupElement& g, const QVec& x);
/// Transported cone: generators by the matrix, normals by the inverse transpose.
/// Unimodular maps preserve canonical form up to reordering, so no re-derivation.
PolyCone act(const GroupElement& g, const PolyCone& c);

GroupElement compose(const ActionGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement inverse_element(const ActionGroup& g, const GroupElement& a);

/// Ball elements stabilizing c as a cone (act(g, c) == c); a finite window into
/// the stabilizer, closed under inverses within the ball.
std::vector<GroupElement> stabilizer_in_ball(const ActionGroup& g, const PolyCone& c,
                                             int radius);

} // namespace conetool
