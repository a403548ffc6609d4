#include "conetool/action.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "conetool/errors.hpp"

namespace conetool {

std::string GroupElement::word_string(const std::vector<std::string>& names) const {
    if (word.empty()) return "id";
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "*" : "") << names[word[i]];
    return os.str();
}

GroupElement ActionGroup::identity() const { return GroupElement{identity_matrix(rank_), {}}; }

ActionGroup make_group(const std::vector<QMat>& gens,
                       const std::optional<PolyCone>& invariant_cone) {
    ActionGroup g;
    if (gens.empty() && !invariant_cone) throw InputError("make_group: no generators and no rank");
    g.rank_ = gens.empty() ? invariant_cone->rank() : static_cast<int>(gens[0].size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const QMat& m = gens[k];
        if (m.size() != gens[0].size()) throw InputError("make_group: generator sizes differ");
        for (const auto& row : m)
            if (row.size() != m.size()) throw InputError("make_group: generator not square");
        if (!is_integer_matrix(m))
            throw InputError("generator " + std::to_string(k) + ": non-integer entries");
        const Rat det = determinant(m);
        if (det != 1 && det != -1)
            throw InputError("generator " + std::to_string(k) + ": determinant " +
                             format_rational(det));
    }
    if (invariant_cone && invariant_cone->rank() != g.rank_)
        throw InputError("make_group: invariant cone rank mismatch");

    std::map<QMat, int> index_of;
    const auto store = [&](const QMat& m, const std::string& name) -> int {
        const auto it = index_of.find(m);
        if (it != index_of.end()) return it->second;
        const int idx = static_cast<int>(g.gens_.size());
        g.gens_.push_back(m);
        g.names_.push_back(name);
        g.inverse_index_.push_back(-1);
        index_of.emplace(m, idx);
        return idx;
    };
    const QMat id = identity_matrix(g.rank_);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (gens[k] == id) continue; // the identity adds nothing as a generator
        const auto inv = inverse(gens[k]);
        const int i = store(gens[k], "g" + std::to_string(k));
        const int j = store(*inv, "g" + std::to_string(k) + "^-1");
        g.inverse_index_[i] = j;
        g.inverse_index_[j] = i;
    }

    if (invariant_cone) {
        // each stored generator (inverses included) maps the cone into itself,
        // which for the inverse-closed set is exact preservation
        for (std::size_t i = 0; i < g.gens_.size(); ++i) {
            for (const auto& v : invariant_cone->generators()) {
                if (!invariant_cone->contains(matvec(g.gens_[i], v)))
                    throw InputError("generator " + g.names_[i] +
                                     " violates the invariant cone (ray escapes)");
            }
        }
        g.invariant_cone_ = invariant_cone;
    }
    return g;
}

std::vector<GroupElement> orbit_ball(const ActionGroup& g, int radius) {
    if (radius < 0) throw InputError("orbit_ball: radius must be >= 0");
    const std::size_t cap = budget_cap();
    std::vector<GroupElement> elements{g.identity()};
    std::map<QMat, int> seen{{elements[0].matrix, 0}};
    std::size_t level_begin = 0;
    for (int level = 1; level <= radius; ++level) {
        const std::size_t level_end = elements.size();
        for (std::size_t e = level_begin; e < level_end; ++e) {
            for (std::size_t s = 0; s < g.generator_matrices().size(); ++s) {
                QMat m = matmul(elements[e].matrix, g.generator_matrices()[s]);
                if (seen.count(m)) continue;
                if (elements.size() >= cap)
                    throw BudgetError("orbit_ball: element cap " + std::to_string(cap) +
                                      " exceeded at radius " + std::to_string(level));
                GroupElement child;
                child.word = elements[e].word;
                child.word.push_back(static_cast<int>(s));
                child.matrix = std::move(m);
                seen.emplace(child.matrix, static_cast<int>(elements.size()));
                elements.push_back(std::move(child));
            }
        }
        if (elements.size() == level_end) break; // ball stabilized early
        level_begin = level_end;
    }
    return elements;
}

std::optional<std::vector<GroupElement>> full_group_if_finite(const ActionGroup& g,
                                                              int probe_radius) {
    try {
        auto prev = orbit_ball(g, probe_radius);
        auto next = orbit_ball(g, probe_radius + 1);
        if (prev.size() == next.size()) return prev;
    } catch (const BudgetError&) {
    }
    return std::nullopt;
}

QVec act(const GroupElement& g, const QVec& x) {
    if (x.size() != g.matrix.size()) throw InputError("act: rank mismatch");
    return matvec(g.matrix, x);
}

PolyCone act(const GroupElement& g, const PolyCone& c) {
    if (c.rank() != static_cast<int>(g.matrix.size())) throw InputError("act: rank mismatch");
    std::vector<QVec> rays;
    rays.reserve(c.generators().size());
    for (const auto& v : c.generators()) rays.push_back(matvec(g.matrix, v));
    const auto inv = inverse(g.matrix);
    if (!inv) throw InputError("act: singular matrix");
    const QMat inv_t = transpose(*inv);
    std::vector<QVec> normals;
    normals.reserve(c.inequalities().size());
    for (const auto& a : c.inequalities()) normals.push_back(primitive(matvec(inv_t, a)));
    std::sort(rays.begin(), rays.end(), lex_less);
    std::sort(normals.begin(), normals.end(), lex_less);
    return PolyCone::from_canonical(c.rank(), std::move(rays), std::move(normals));
}

GroupElement compose(const ActionGroup&, const GroupElement& a, const GroupElement& b) {
    GroupElement out;
    out.matrix = matmul(a.matrix, b.matrix);
    out.word = a.word;
    out.word.insert(out.word.end(), b.word.begin(), b.word.end());
    return out;
}

GroupElement inverse_element(const ActionGroup& g, const GroupElement& a) {
    GroupElement out;
    const auto inv = inverse(a.matrix);
    if (!inv) throw InputError("inverse_element: singular matrix");
    out.matrix = *inv;
    out.word.reserve(a.word.size());
    for (auto it = a.word.rbegin(); it != a.word.rend(); ++it)
        out.word.push_back(g.inverse_indices()[*it]);
    return out;
}

std::vector<GroupElement> stabilizer_in_ball(const ActionGroup& g, const PolyCone& c,
                                             int radius) {
    std::vector<GroupElement> out;
    for (auto& e : orbit_ball(g, radius))
        if (act(e, c) == c) out.push_back(std::move(e));
    return out;
}

} // namespace conetool
