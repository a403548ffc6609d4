#include "conetool/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "conetool/errors.hpp"

namespace conetool {

namespace {

void check_lengths(int rank, const std::vector<QVec>& vecs, const char* what) {
    if (rank < 1) throw InputError("cone: ambient rank must be >= 1");
    for (const auto& v : vecs)
        if (static_cast<int>(v.size()) != rank)
            throw InputError(std::string(what) + ": length mismatch with ambient rank");
}

std::vector<QVec> cleaned_normals(int rank, const std::vector<QVec>& raw) {
    std::vector<QVec> out;
    std::set<QVec> seen;
    for (const auto& v : raw) {
        (void)rank;
        if (is_zero_vector(v)) continue;
        QVec p = primitive(v);
        if (seen.insert(p).second) out.push_back(std::move(p));
    }
    return out;
}

struct DDRay {
    QVec r;                  // primitive
    std::vector<int> active; // sorted indices of processed normals with <a,r> = 0
};

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Extreme rays of the pointed cone {t in R^d : <a,t> >= 0 for a in normals},
// rank(normals) == d. Incremental double description; adjacency of two rays is
// decided by the rank of their common active normal set (== d-2).
std::vector<QVec> dd_pointed(int d, const std::vector<QVec>& normals) {
    // Greedy full-rank initial subsystem, in input order.
    std::vector<int> basis;
    QMat basis_rows;
    for (int i = 0; i < static_cast<int>(normals.size()) && static_cast<int>(basis.size()) < d;
         ++i) {
        basis_rows.push_back(normals[i]);
        if (rank_of(basis_rows) == static_cast<int>(basis.size()) + 1)
            basis.push_back(i);
        else
            basis_rows.pop_back();
    }
    if (static_cast<int>(basis.size()) != d)
        throw InputError("double description: normal system is rank-deficient");
    const auto inv = inverse(basis_rows);
    if (!inv) throw InputError("double description: initial basis inversion failed");

    std::vector<DDRay> rays;
    for (int j = 0; j < d; ++j) {
        QVec col(d);
        for (int i = 0; i < d; ++i) col[i] = (*inv)[i][j];
        DDRay ray{primitive(col), {}};
        for (int i = 0; i < d; ++i)
            if (i != j) ray.active.push_back(basis[i]);
        std::sort(ray.active.begin(), ray.active.end());
        rays.push_back(std::move(ray));
    }

    std::set<int> in_basis(basis.begin(), basis.end());
    for (int idx = 0; idx < static_cast<int>(normals.size()); ++idx) {
        if (in_basis.count(idx)) continue;
        const QVec& a = normals[idx];
        std::vector<DDRay> pos, zero, neg;
        std::vector<Rat> pos_val, neg_val;
        for (auto& ray : rays) {
            Rat v = dot(a, ray.r);
            if (v > 0) {
                pos.push_back(std::move(ray));
                pos_val.push_back(std::move(v));
            } else if (v < 0) {
                neg.push_back(std::move(ray));
                neg_val.push_back(std::move(v));
            } else {
                ray.active.insert(std::lower_bound(ray.active.begin(), ray.active.end(), idx),
                                  idx);
                zero.push_back(std::move(ray));
            }
        }
        std::set<QVec> fresh;
        std::vector<DDRay> born;
        for (std::size_t pi = 0; pi < pos.size(); ++pi) {
            const DDRay& rp = pos[pi];
            for (std::size_t ni = 0; ni < neg.size(); ++ni) {
                const DDRay& rn = neg[ni];
                const auto common = sorted_intersection(rp.active, rn.active);
                if (static_cast<int>(common.size()) < d - 2) continue;
                QMat rows;
                rows.reserve(common.size());
                for (int ci : common) rows.push_back(normals[ci]);
                if (rank_of(rows) != d - 2) continue;
                QVec combined(d);
                for (int c = 0; c < d; ++c)
                    combined[c] = pos_val[pi] * rn.r[c] - neg_val[ni] * rp.r[c];
                QVec prim = primitive(combined);
                if (!fresh.insert(prim).second) continue;
                // active set w.r.t. all processed normals (basis, earlier insertions, idx)
                DDRay nr{std::move(prim), {}};
                for (int i = 0; i < static_cast<int>(normals.size()); ++i) {
                    if (i > idx && !in_basis.count(i)) continue;
                    if (dot(normals[i], nr.r) == 0) nr.active.push_back(i);
                }
                born.push_back(std::move(nr));
            }
        }
        std::vector<DDRay> next = std::move(pos);
        for (auto& z : zero) next.push_back(std::move(z));
        for (auto& b : born) next.push_back(std::move(b));
        rays = std::move(next);
    }

    std::vector<QVec> out;
    out.reserve(rays.size());
    for (auto& ray : rays) out.push_back(std::move(ray.r));
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

// Generators of {x : <a,x> >= 0 for all a in raw}: a +/- pair per lineality basis
// vector plus the extreme rays of the pointed part, primitive and lex-sorted.
std::vector<QVec> dd_dual_rays(int n, const std::vector<QVec>& raw) {
    const std::vector<QVec> normals = cleaned_normals(n, raw);
    const std::vector<QVec> lines = kernel_basis(QMat(normals.begin(), normals.end()), n);
    std::vector<QVec> out;
    for (const auto& line : lines) {
        out.push_back(line);
        QVec negated(line.size());
        for (std::size_t i = 0; i < line.size(); ++i) negated[i] = -line[i];
        out.push_back(primitive(negated));
    }
    const int d = n - static_cast<int>(lines.size());
    if (d > 0) {
        std::vector<QVec> pointed_rays;
        if (lines.empty()) {
            pointed_rays = dd_pointed(n, normals);
        } else {
            // Work in the orthogonal complement of the lineality space:
            // C = L + (C ∩ L^perp), and the second summand is pointed.
            const std::vector<QVec> q = kernel_basis(QMat(lines.begin(), lines.end()), n);
            std::vector<QVec> reduced;
            reduced.reserve(normals.size());
            for (const auto& a : normals) {
                QVec ra(d);
                for (int j = 0; j < d; ++j) ra[j] = dot(a, q[j]);
                reduced.push_back(std::move(ra));
            }
            for (const auto& t : dd_pointed(d, reduced)) {
                QVec x(n, Rat(0));
                for (int j = 0; j < d; ++j)
                    for (int i = 0; i < n; ++i) x[i] += t[j] * q[j][i];
                pointed_rays.push_back(primitive(x));
            }
        }
        for (auto& r : pointed_rays) out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

} // namespace

PolyCone PolyCone::from_rays(int rank, const std::vector<QVec>& rays) {
    check_lengths(rank, rays, "rays");
    std::vector<QVec> nonzero;
    for (const auto& r : rays)
        if (!is_zero_vector(r)) nonzero.push_back(r);
    std::vector<QVec> ineqs = dd_dual_rays(rank, nonzero);
    std::vector<QVec> gens = dd_dual_rays(rank, ineqs);
    return PolyCone(rank, std::move(gens), std::move(ineqs));
}

PolyCone PolyCone::from_inequalities(int rank, const std::vector<QVec>& normals) {
    check_lengths(rank, normals, "inequalities");
    std::vector<QVec> gens = dd_dual_rays(rank, normals);
    std::vector<QVec> ineqs = dd_dual_rays(rank, gens);
    return PolyCone(rank, std::move(gens), std::move(ineqs));
}

PolyCone PolyCone::from_both(int rank, const std::vector<QVec>& rays,
                             const std::vector<QVec>& normals) {
    PolyCone by_rays = from_rays(rank, rays);
    PolyCone by_ineqs = from_inequalities(rank, normals);
    if (by_rays != by_ineqs)
        throw RepresentationMismatch("supplied V- and H-representations describe different cones: " +
                                     by_rays.to_string() + " vs " + by_ineqs.to_string());
    return by_rays;
}

PolyCone PolyCone::from_canonical(int rank, std::vector<QVec> rays, std::vector<QVec> normals) {
    check_lengths(rank, rays, "rays");
    check_lengths(rank, normals, "inequalities");
    return PolyCone(rank, std::move(rays), std::move(normals));
}

PolyCone PolyCone::zero(int rank) { return from_rays(rank, {}); }

PolyCone PolyCone::full_space(int rank) { return from_inequalities(rank, {}); }

bool PolyCone::contains(const QVec& p) const {
    if (static_cast<int>(p.size()) != rank_) throw InputError("contains: dimension mismatch");
    for (const auto& a : inequalities_)
        if (dot(a, p) < 0) return false;
    return true;
}

bool PolyCone::contains_cone(const PolyCone& other) const {
    if (other.rank_ != rank_) throw InputError("contains_cone: rank mismatch");
    for (const auto& g : other.generators_)
        if (!contains(g)) return false;
    return true;
}

int PolyCone::dim() const {
    if (generators_.empty()) return 0;
    return rank_of(QMat(generators_.begin(), generators_.end()));
}

bool PolyCone::is_strictly_convex() const {
    if (inequalities_.empty()) return rank_ == 0;
    return rank_of(QMat(inequalities_.begin(), inequalities_.end())) == rank_;
}

QVec PolyCone::relative_interior_point() const {
    QVec p(rank_, Rat(0));
    for (const auto& g : generators_)
        for (int i = 0; i < rank_; ++i) p[i] += g[i];
    return p;
}

bool PolyCone::in_relative_interior(const QVec& p) const {
    if (!contains(p)) return false;
    for (const auto& a : inequalities_) {
        if (dot(a, p) != 0) continue;
        // must be an implicit equality (active on the whole cone)
        for (const auto& g : generators_)
            if (dot(a, g) != 0) return false;
    }
    return true;
}

std::string PolyCone::to_string() const {
    std::ostringstream os;
    os << "cone[rank=" << rank_ << "; rays=";
    if (generators_.empty()) os << "{}";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        os << (i ? "," : "") << "(";
        for (int j = 0; j < rank_; ++j) os << (j ? "," : "") << format_rational(generators_[i][j]);
        os << ")";
    }
    os << "]";
    return os.str();
}

PolyCone intersect(const PolyCone& a, const PolyCone& b) {
    if (a.rank() != b.rank()) throw InputError("intersect: rank mismatch");
    std::vector<QVec> normals = a.inequalities();
    normals.insert(normals.end(), b.inequalities().begin(), b.inequalities().end());
    return PolyCone::from_inequalities(a.rank(), normals);
}

PolyCone cone_sum(const PolyCone& a, const PolyCone& b) {
    if (a.rank() != b.rank()) throw InputError("sum: rank mismatch");
    std::vector<QVec> rays = a.generators();
    rays.insert(rays.end(), b.generators().begin(), b.generators().end());
    return PolyCone::from_rays(a.rank(), rays);
}

PolyCone linear_image(const PolyCone& c, const QMat& m) {
    if (m.empty()) throw InputError("linear_image: empty matrix");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != c.rank())
            throw InputError("linear_image: shape mismatch");
    std::vector<QVec> rays;
    rays.reserve(c.generators().size());
    for (const auto& g : c.generators()) rays.push_back(matvec(m, g));
    return PolyCone::from_rays(static_cast<int>(m.size()), rays);
}

PolyCone linear_preimage(const PolyCone& c, const QMat& m) {
    if (m.empty() || m[0].empty()) throw InputError("linear_preimage: empty matrix");
    if (static_cast<int>(m.size()) != c.rank())
        throw InputError("linear_preimage: shape mismatch");
    const QMat mt = transpose(m);
    std::vector<QVec> normals;
    normals.reserve(c.inequalities().size());
    for (const auto& a : c.inequalities()) normals.push_back(matvec(mt, a));
    return PolyCone::from_inequalities(static_cast<int>(m[0].size()), normals);
}

bool interiors_intersect(const PolyCone& a, const PolyCone& b) {
    if (a.rank() != b.rank()) throw InputError("interiors_intersect: rank mismatch");
    if (!a.is_full_dimensional() || !b.is_full_dimensional())
        throw InputError("interiors_intersect requires full-dimensional cones");
    return intersect(a, b).dim() == a.rank();
}

std::vector<Face> faces(const PolyCone& c) {
    const auto& gens = c.generators();
    const auto& ineqs = c.inequalities();
    const int ng = static_cast<int>(gens.size());

    // Generator subsets annihilated by each inequality; every face is an
    // intersection of these (faces of a polyhedral cone are spanned by the
    // generators they contain).
    std::vector<std::vector<int>> facet_sets;
    for (const auto& a : ineqs) {
        std::vector<int> s;
        for (int g = 0; g < ng; ++g)
            if (dot(a, gens[g]) == 0) s.push_back(g);
        facet_sets.push_back(std::move(s));
    }

    std::vector<int> all(ng);
    for (int g = 0; g < ng; ++g) all[g] = g;
    std::set<std::vector<int>> subsets;
    std::vector<std::vector<int>> frontier{all};
    subsets.insert(all);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& cur : frontier) {
            for (const auto& fs : facet_sets) {
                auto meet = sorted_intersection(cur, fs);
                if (subsets.insert(meet).second) next.push_back(std::move(meet));
            }
        }
        frontier = std::move(next);
    }

    std::vector<Face> out;
    for (const auto& subset : subsets) {
        std::vector<QVec> rays;
        rays.reserve(subset.size());
        for (int g : subset) rays.push_back(gens[g]);
        PolyCone fc = PolyCone::from_rays(c.rank(), rays);
        std::vector<int> active;
        for (int i = 0; i < static_cast<int>(ineqs.size()); ++i) {
            bool on = true;
            for (int g : subset)
                if (dot(ineqs[i], gens[g]) != 0) {
                    on = false;
                    break;
                }
            if (on) active.push_back(i);
        }
        out.push_back(Face{c, std::move(active), std::move(fc)});
    }
    std::sort(out.begin(), out.end(), [](const Face& x, const Face& y) {
        const int dx = x.cone.dim(), dy = y.cone.dim();
        if (dx != dy) return dx < dy;
        return x.cone.generators() < y.cone.generators();
    });
    return out;
}

PolyCone plus_closure(const PolyCone& c) { return c; }

std::vector<std::pair<Rat, int>> conic_combination(const PolyCone& c, const QVec& p) {
    if (!c.is_strictly_convex()) throw InputError("conic_combination: cone must be strictly convex");
    if (!c.contains(p)) throw InputError("conic_combination: point is not in the cone");
    const auto& gens = c.generators();
    const auto& ineqs = c.inequalities();
    std::map<int, Rat> coeffs;
    QVec cur = p;
    while (!is_zero_vector(cur)) {
        std::vector<int> active;
        for (int i = 0; i < static_cast<int>(ineqs.size()); ++i)
            if (dot(ineqs[i], cur) == 0) active.push_back(i);
        int chosen = -1;
        Rat step = 0;
        for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
            bool in_face = true;
            for (int i : active)
                if (dot(ineqs[i], gens[g]) != 0) {
                    in_face = false;
                    break;
                }
            if (!in_face) continue;
            bool bounded = false;
            Rat t = 0;
            for (int i = 0; i < static_cast<int>(ineqs.size()); ++i) {
                const Rat ag = dot(ineqs[i], gens[g]);
                if (ag <= 0) continue;
                const Rat ratio = dot(ineqs[i], cur) / ag;
                if (!bounded || ratio < t) {
                    t = ratio;
                    bounded = true;
                }
            }
            if (bounded && t > 0) {
                chosen = g;
                step = t;
                break;
            }
        }
        if (chosen < 0) throw InputError("conic_combination: no descent generator found");
        coeffs[chosen] += step;
        for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= step * gens[chosen][i];
    }
    std::vector<std::pair<Rat, int>> out;
    for (const auto& [g, t] : coeffs) out.emplace_back(t, g);
    return out;
}

} // namespace conetool
