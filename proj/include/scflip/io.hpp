#pragma once

// JSON interchange for ideals and run metadata.

#include <string>
#include <vector>

#include <json.hpp>

#include "scflip/ideal.hpp"

namespace scflip::io {

using nlohmann::json;

// {"dims":[...],"members":[ranks...]} or, for d = 3 and heights = true, {"dims":[...],"heights":[[...]]}
json ideal_record(const Ideal& i, bool heights = false);
Ideal ideal_from_record(const json& j);  // accepts either form

json meta(const std::vector<int>& dims, const std::string& cls, const std::string& method);

}  // namespace scflip::io
