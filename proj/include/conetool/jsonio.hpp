#pragma once

#include <json.hpp>

#include "conetool/cone.hpp"

namespace conetool {

using ordered_json = nlohmann::ordered_json;

/// Rationals serialize as strings ("3", "-1/2") so reports stay exact.
ordered_json json_vec(const QVec& v);
ordered_json json_mat(const QMat& m);
ordered_json json_cone(const PolyCone& c);

QVec vec_from_json(const ordered_json& j, int expect_len = -1);
QMat mat_from_json(const ordered_json& j);
PolyCone cone_from_json(const ordered_json& j);

} // namespace conetool
