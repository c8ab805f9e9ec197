#include "scflip/io.hpp"

#include "scflip/errors.hpp"
#include "scflip/version.hpp"

namespace scflip::io {

json ideal_record(const Ideal& i, bool heights) {
    json j;
    j["dims"] = i.poset()->dims();
    if (heights) {
        j["heights"] = to_heights(i).h;
    } else {
        j["members"] = i.members();
    }
    return j;
}

Ideal ideal_from_record(const json& j) {
    try {
        auto dims = j.at("dims").get<std::vector<int>>();
        if (j.contains("heights")) {
            if (dims.size() != 3) fail(ErrorCode::UnsupportedShape, "heights records need three dims");
            auto h = j.at("heights").get<std::vector<std::vector<int>>>();
            return from_heights({dims[0], dims[1], dims[2]}, h);
        }
        return Ideal::from_ranks(ChainProduct::make(dims), j.at("members").get<std::vector<std::size_t>>());
    } catch (const json::exception& e) {
        fail(ErrorCode::Validation, std::string("malformed ideal record: ") + e.what());
    }
}

json meta(const std::vector<int>& dims, const std::string& cls, const std::string& method) {
    return {{"tool", kToolName}, {"version", kVersion}, {"dims", dims}, {"class", cls}, {"method", method}};
}

}  // namespace scflip::io
