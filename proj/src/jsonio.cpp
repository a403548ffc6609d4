#include "conetool/jsonio.hpp"

#include "conetool/errors.hpp"

namespace conetool {

ordered_json json_vec(const QVec& v) {
    ordered_json out = ordered_json::array();
    for (const auto& x : v) out.push_back(format_rational(x));
    return out;
}

ordered_json json_mat(const QMat& m) {
    ordered_json out = ordered_json::array();
    for (const auto& row : m) out.push_back(json_vec(row));
    return out;
}

ordered_json json_cone(const PolyCone& c) {
    ordered_json out;
    out["rank"] = c.rank();
    out["rays"] = json_mat(QMat(c.generators().begin(), c.generators().end()));
    out["ineqs"] = json_mat(QMat(c.inequalities().begin(), c.inequalities().end()));
    return out;
}

namespace {

Rat entry_from_json(const ordered_json& e) {
    if (e.is_string()) return parse_rational(e.get<std::string>());
    if (e.is_number_integer()) return Rat(e.get<long long>());
    throw InputError("expected a rational entry (string or integer), got " + e.dump());
}

} // namespace

QVec vec_from_json(const ordered_json& j, int expect_len) {
    if (!j.is_array()) throw InputError("expected an array of rationals, got " + j.dump());
    QVec v;
    for (const auto& e : j) v.push_back(entry_from_json(e));
    if (expect_len >= 0 && static_cast<int>(v.size()) != expect_len)
        throw InputError("expected a vector of length " + std::to_string(expect_len));
    return v;
}

QMat mat_from_json(const ordered_json& j) {
    if (!j.is_array()) throw InputError("expected a matrix (array of arrays)");
    QMat m;
    for (const auto& row : j) m.push_back(vec_from_json(row));
    for (const auto& row : m)
        if (row.size() != m[0].size()) throw InputError("ragged matrix rows");
    return m;
}

PolyCone cone_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("rank"))
        throw InputError("cone literal must be an object with a \"rank\" field");
    const int rank = j["rank"].get<int>();
    const bool has_rays = j.contains("rays");
    const bool has_ineqs = j.contains("ineqs");
    if (!has_rays && !has_ineqs)
        throw InputError("cone literal needs \"rays\" or \"ineqs\"");
    std::vector<QVec> rays, ineqs;
    if (has_rays)
        for (const auto& r : j["rays"]) rays.push_back(vec_from_json(r, rank));
    if (has_ineqs)
        for (const auto& a : j["ineqs"]) ineqs.push_back(vec_from_json(a, rank));
    if (has_rays && has_ineqs) return PolyCone::from_both(rank, rays, ineqs);
    if (has_rays) return PolyCone::from_rays(rank, rays);
    return PolyCone::from_inequalities(rank, ineqs);
}

} // namespace conetool
