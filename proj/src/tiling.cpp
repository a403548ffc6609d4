#include "conetool/tiling.hpp"

#include <random>
#include <set>

#include "conetool/errors.hpp"

namespace conetool {

namespace {

std::string digest_of(const ordered_json& j) { return hex64(fnv1a(j.dump())); }

ordered_json json_region(const AmbientRegion& r) {
    ordered_json out;
    out["closure_ineqs"] = json_mat(QMat(r.closure_ineqs.begin(), r.closure_ineqs.end()));
    out["strict_ineqs"] = json_mat(QMat(r.strict_ineqs.begin(), r.strict_ineqs.end()));
    out["box"] = r.box;
    return out;
}

ordered_json json_tiled(const TiledCone& t) {
    ordered_json out;
    ordered_json gens = ordered_json::array();
    for (const auto& m : t.group.generator_matrices()) gens.push_back(json_mat(m));
    out["group"] = std::move(gens);
    out["tile"] = json_cone(t.tile);
    if (t.ambient) out["ambient"] = json_region(*t.ambient);
    return out;
}

ordered_json json_element(const ActionGroup& g, const GroupElement& e) {
    ordered_json out;
    out["word"] = e.word_string(g.generator_names());
    out["matrix"] = json_mat(e.matrix);
    return out;
}

bool inside_closure(const AmbientRegion& region, const QVec& x) {
    for (const auto& a : region.closure_ineqs)
        if (dot(a, x) < 0) return false;
    return true;
}

Certificate base_certificate(std::string kind, const ordered_json& inputs) {
    Certificate cert;
    cert.kind = std::move(kind);
    cert.inputs_digest = digest_of(inputs);
    return cert;
}

} // namespace

AmbientRegion region_from_cone(const PolyCone& c, int box) {
    AmbientRegion r;
    r.closure_ineqs = c.inequalities();
    r.strict_ineqs = c.inequalities();
    r.box = box;
    return r;
}

TiledCone make_tiled_cone(ActionGroup group, PolyCone tile,
                          std::optional<AmbientRegion> ambient) {
    if (group.rank() != tile.rank()) throw InputError("tiled cone: rank mismatch");
    if (!tile.is_full_dimensional())
        throw InputError("tiled cone: tile must be full-dimensional");
    if (!tile.is_strictly_convex())
        throw InputError("tiled cone: tile must be strictly convex");
    if (ambient) {
        for (const auto& g : tile.generators())
            if (!inside_closure(*ambient, g))
                throw InputError("tiled cone: tile generator escapes the ambient closure");
    }
    return TiledCone{std::move(group), std::move(tile), std::move(ambient)};
}

std::string verdict_string(Verdict v) {
    switch (v) {
        case Verdict::VerifiedOnSamples: return "verified-on-samples";
        case Verdict::Refuted: return "refuted";
        case Verdict::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

int verdict_exit_code(Verdict v) {
    switch (v) {
        case Verdict::VerifiedOnSamples: return 0;
        case Verdict::Refuted: return 2;
        case Verdict::BudgetExhausted: return 3;
    }
    return 1;
}

ordered_json Certificate::to_json() const {
    ordered_json out;
    out["kind"] = kind;
    out["inputs_digest"] = inputs_digest;
    out["params"] = params;
    out["verdict"] = verdict_string(verdict);
    out["witnesses"] = witnesses;
    out["details"] = details;
    return out;
}

std::vector<QVec> draw_strict_samples(const AmbientRegion& region, int rank, int count,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(region.box) + 1;
    std::vector<QVec> out;
    long tries = 0;
    const long try_cap = 10000 + static_cast<long>(count) * 2000;
    while (static_cast<int>(out.size()) < count && tries < try_cap) {
        ++tries;
        QVec x(rank);
        bool zero = true;
        for (int i = 0; i < rank; ++i) {
            const long v = static_cast<long>(rng() % span) - region.box;
            if (v != 0) zero = false;
            x[i] = Rat(v);
        }
        if (zero) continue;
        bool ok = true;
        for (const auto& a : region.strict_ineqs)
            if (dot(a, x) < 1) {
                ok = false;
                break;
            }
        if (ok) out.push_back(std::move(x));
    }
    if (static_cast<int>(out.size()) < count)
        throw InputError("sampler could not find interior points (degenerate strict region)");
    return out;
}

QVec default_objective(const PolyCone& tile) {
    QVec xi(tile.rank(), Rat(0));
    for (const auto& g : tile.generators()) xi = vec_add(xi, g);
    return xi;
}

ReduceResult reduce_point(const TiledCone& t, const QVec& x, int fuel) {
    return reduce_point(t, x, fuel, default_objective(t.tile));
}

ReduceResult reduce_point(const TiledCone& t, const QVec& x, int fuel, const QVec& xi) {
    if (is_zero_vector(x)) throw InputError("reduce_point: x must be nonzero");
    if (fuel < 1) throw InputError("reduce_point: fuel must be >= 1");
    if (t.ambient && !inside_closure(*t.ambient, x))
        throw InputError("reduce_point: point outside the ambient closure");

    // Best-first descent on the objective <xi, y> over the orbit of x: always
    // expand the frontier point of least objective. A single descending walker
    // stalls when the tile is not the xi-Dirichlet cell; keeping the frontier
    // preserves the greedy order while allowing the next-best branch. One unit
    // of fuel per expansion.
    const auto& gens = t.group.generator_matrices();
    ReduceResult res;
    res.element = t.group.identity();

    struct Node {
        QVec point;
        GroupElement element;
    };
    std::map<std::pair<Rat, long>, Node> frontier; // keyed by (objective, insertion)
    std::set<QVec> visited{x};
    long seq = 0;
    frontier.emplace(std::make_pair(dot(xi, x), seq++), Node{x, t.group.identity()});

    for (int step = 0; step < fuel && !frontier.empty(); ++step) {
        Node cur = std::move(frontier.begin()->second);
        frontier.erase(frontier.begin());
        if (t.tile.contains(cur.point)) {
            res.success = true;
            res.element = std::move(cur.element);
            res.reduced = std::move(cur.point);
            res.steps = step;
            return res;
        }
        if (res.trace.size() < 8) res.trace.push_back(cur.point);
        res.steps = step + 1;
        for (std::size_t s = 0; s < gens.size(); ++s) {
            QVec next = matvec(gens[s], cur.point);
            if (!visited.insert(next).second) continue;
            GroupElement letter{gens[s], {static_cast<int>(s)}};
            Rat obj = dot(xi, next);
            frontier.emplace(std::make_pair(std::move(obj), seq++),
                             Node{std::move(next), compose(t.group, letter, cur.element)});
        }
    }
    // On finite groups the ball stabilizes; scan all of it so failures are exact.
    if (const auto full = full_group_if_finite(t.group)) {
        for (const auto& e : *full) {
            const QVec image = act(e, x);
            if (t.tile.contains(image)) {
                res.success = true;
                res.element = e;
                res.reduced = image;
                res.exhaustive = true;
                return res;
            }
        }
        res.exhaustive = true;
    }
    res.success = false;
    return res;
}

Certificate certify_polyhedral_type(const TiledCone& t, int samples, int fuel,
                                    std::uint64_t seed) {
    if (!t.ambient)
        throw InputError("certify_polyhedral_type: ambient cone description required");
    Certificate cert = base_certificate("polyhedral-type", json_tiled(t));
    cert.params["samples"] = samples;
    cert.params["fuel"] = fuel;
    cert.params["seed"] = seed;
    cert.params["box"] = t.ambient->box;

    for (const auto& g : t.tile.generators()) {
        if (!inside_closure(*t.ambient, g)) {
            cert.verdict = Verdict::Refuted;
            ordered_json w;
            w["escaping_tile_ray"] = json_vec(g);
            cert.witnesses.push_back(std::move(w));
        }
    }
    if (cert.verdict == Verdict::Refuted) {
        cert.details["tile_in_closure"] = false;
        return cert;
    }
    cert.details["tile_in_closure"] = true;

    const auto points = draw_strict_samples(*t.ambient, t.tile.rank(), samples, seed);
    int failures = 0;
    for (const auto& p : points) {
        const ReduceResult r = reduce_point(t, p, fuel);
        if (r.success) continue;
        ++failures;
        if (cert.witnesses.size() < 8) {
            ordered_json w;
            w["unreduced_point"] = json_vec(p);
            w["exhaustive"] = r.exhaustive;
            cert.witnesses.push_back(std::move(w));
        }
    }
    cert.details["samples_drawn"] = static_cast<int>(points.size());
    cert.details["samples_reduced"] = static_cast<int>(points.size()) - failures;
    cert.details["failures"] = failures;
    if (failures == 0) {
        cert.verdict = Verdict::VerifiedOnSamples;
    } else {
        cert.verdict = Verdict::BudgetExhausted;
        if (failures * 20 > samples)
            cert.details["note"] = "repeated failures concentrate in a systematic gap";
    }
    return cert;
}

CarveResult carve_fundamental_domain(const TiledCone& t, int radius,
                                     const std::optional<QVec>& xi_opt) {
    if (radius < 1) throw InputError("carve_fundamental_domain: radius must be >= 1");
    CarveResult out;
    out.xi = xi_opt ? *xi_opt : default_objective(t.tile);
    if (static_cast<int>(out.xi.size()) != t.tile.rank())
        throw InputError("carve_fundamental_domain: xi rank mismatch");
    std::vector<QVec> cuts = t.tile.inequalities();
    for (auto& e : orbit_ball(t.group, radius)) {
        if (e.is_identity()) continue;
        if (intersect(act(e, t.tile), t.tile).dim() != t.tile.rank()) continue;
        const QVec cut = vec_sub(matvec(transpose(e.matrix), out.xi), out.xi);
        if (!is_zero_vector(cut)) cuts.push_back(cut);
        out.overlaps.push_back(std::move(e));
    }
    out.domain = PolyCone::from_inequalities(t.tile.rank(), cuts);
    return out;
}

Certificate verify_fundamental_domain(const TiledCone& t, const PolyCone& domain, int radius,
                                      int samples, int fuel, std::uint64_t seed) {
    if (domain.rank() != t.tile.rank())
        throw InputError("verify_fundamental_domain: rank mismatch");
    if (t.ambient)
        for (const auto& g : domain.generators())
            if (!inside_closure(*t.ambient, g))
                throw InputError("verify_fundamental_domain: domain outside ambient closure");

    ordered_json inputs = json_tiled(t);
    inputs["domain"] = json_cone(domain);
    Certificate cert = base_certificate("fundamental-domain", inputs);
    cert.params["radius"] = radius;
    cert.params["samples"] = samples;
    cert.params["fuel"] = fuel;
    cert.params["seed"] = seed;

    int checked = 0;
    for (const auto& e : orbit_ball(t.group, radius)) {
        if (e.is_identity()) continue;
        ++checked;
        if (intersect(act(e, domain), domain).dim() == domain.rank()) {
            cert.verdict = Verdict::Refuted;
            if (cert.witnesses.size() < 8) {
                ordered_json w;
                w["overlapping_element"] = json_element(t.group, e);
                cert.witnesses.push_back(std::move(w));
            }
        }
    }
    cert.details["strictness_elements_checked"] = checked;
    cert.details["strict"] = cert.verdict != Verdict::Refuted;

    int failures = 0;
    if (t.ambient && samples > 0 && cert.verdict != Verdict::Refuted) {
        const TiledCone cover{t.group, domain, t.ambient};
        for (const auto& p : draw_strict_samples(*t.ambient, domain.rank(), samples, seed)) {
            const ReduceResult r = reduce_point(cover, p, fuel);
            if (r.success) continue;
            ++failures;
            if (cert.witnesses.size() < 8) {
                ordered_json w;
                w["uncovered_point"] = json_vec(p);
                cert.witnesses.push_back(std::move(w));
            }
        }
        cert.details["samples_drawn"] = samples;
        cert.details["uncovered"] = failures;
    }
    if (cert.verdict != Verdict::Refuted && failures > 0) cert.verdict = Verdict::BudgetExhausted;
    return cert;
}

DescentResult descend_to_face(const TiledCone& t, const PolyCone& f, int radius) {
    if (f.rank() != t.tile.rank()) throw InputError("descend_to_face: rank mismatch");
    const PolyCone meet = intersect(f, t.tile);
    if (!meet.is_zero_cone()) {
        bool is_face = false;
        for (const auto& face : faces(t.tile)) is_face = is_face || face.cone == meet;
        if (!is_face) throw InputError("descend_to_face: F ∩ Π is not a face of Π");
    }
    if (t.ambient)
        for (const auto& g : f.generators())
            if (!inside_closure(*t.ambient, g))
                throw InputError("descend_to_face: face outside ambient closure");

    ordered_json inputs = json_tiled(t);
    inputs["face"] = json_cone(f);
    Certificate cert = base_certificate("face-descent", inputs);
    cert.params["radius"] = radius;

    DescentResult out;
    const auto ball = orbit_ball(t.group, radius);
    PolyCone pi_f = PolyCone::zero(f.rank());
    int matched = 0;
    ordered_json unmatched = ordered_json::array();
    for (const auto& face : faces(t.tile)) {
        if (face.cone.is_zero_cone()) continue;
        const QVec p = face.cone.relative_interior_point();
        FaceAssignment assignment{face.cone, std::nullopt};
        for (const auto& e : ball) {
            if (f.in_relative_interior(act(e, p))) {
                assignment.element = e;
                break;
            }
        }
        if (assignment.element) {
            ++matched;
            const PolyCone moved = act(*assignment.element, face.cone);
            // the summand's closure lands inside the face: exact containment check
            if (!f.contains_cone(moved)) {
                cert.verdict = Verdict::Refuted;
                ordered_json w;
                w["summand_outside_face"] = json_cone(moved);
                cert.witnesses.push_back(std::move(w));
            }
            pi_f = cone_sum(pi_f, moved);
        } else {
            unmatched.push_back(json_cone(face.cone));
        }
        out.assignments.push_back(std::move(assignment));
    }
    cert.details["tile_faces"] = static_cast<int>(out.assignments.size());
    cert.details["matched"] = matched;
    cert.details["unmatched"] = unmatched;
    if (!unmatched.empty())
        cert.details["note"] = "faces without a ball element may indicate radius insufficiency";
    out.pi_f = std::move(pi_f);
    out.stabilizer_window = stabilizer_in_ball(t.group, f, radius);
    out.cert = std::move(cert);
    return out;
}

GlueResult glue_chambers(const ActionGroup& group,
                         const std::vector<std::pair<PolyCone, PolyCone>>& reps,
                         const AmbientRegion& ambient, int samples, int fuel,
                         std::uint64_t seed) {
    if (reps.empty()) throw InputError("glue_chambers: no orbit representatives");
    for (const auto& [chamber, tile] : reps) {
        if (chamber.rank() != group.rank() || tile.rank() != group.rank())
            throw InputError("glue_chambers: rank mismatch");
        if (!chamber.is_full_dimensional())
            throw InputError("glue_chambers: chamber cone is not full-dimensional");
        if (!chamber.contains_cone(tile))
            throw InputError("glue_chambers: tile is not contained in its chamber cone");
    }

    GlueResult out;
    out.pi = PolyCone::zero(group.rank());
    ordered_json reps_json = ordered_json::array();
    for (const auto& [chamber, tile] : reps) {
        out.pi = cone_sum(out.pi, tile);
        ordered_json rep;
        rep["chamber"] = json_cone(chamber);
        rep["tile"] = json_cone(tile);
        reps_json.push_back(std::move(rep));
    }
    ordered_json all_inputs;
    all_inputs["reps"] = std::move(reps_json);
    all_inputs["region"] = json_region(ambient);
    Certificate cert = base_certificate("glue", all_inputs);
    cert.params["samples"] = samples;
    cert.params["fuel"] = fuel;
    cert.params["seed"] = seed;
    cert.params["box"] = ambient.box;

    bool contained = true;
    for (const auto& g : out.pi.generators()) {
        if (!inside_closure(ambient, g)) {
            contained = false;
            cert.verdict = Verdict::Refuted;
            ordered_json w;
            w["escaping_ray"] = json_vec(g);
            cert.witnesses.push_back(std::move(w));
        }
    }
    cert.details["glued_in_closure"] = contained; // the C^+ ⊂ C conclusion at data level

    int failures = 0;
    if (cert.verdict != Verdict::Refuted) {
        const TiledCone cover{group, out.pi, ambient};
        for (const auto& p : draw_strict_samples(ambient, group.rank(), samples, seed)) {
            const ReduceResult r = reduce_point(cover, p, fuel);
            if (r.success) continue;
            ++failures;
            if (cert.witnesses.size() < 8) {
                ordered_json w;
                w["unreduced_point"] = json_vec(p);
                w["exhaustive"] = r.exhaustive;
                cert.witnesses.push_back(std::move(w));
            }
        }
        cert.details["samples_drawn"] = samples;
        cert.details["failures"] = failures;
        if (failures > 0) cert.verdict = Verdict::BudgetExhausted;
    }
    out.cert = std::move(cert);
    return out;
}

} // namespace conetool
