#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace scflip::verify {

enum class Status { pass, fail, skipped, conjecture_violated };
const char* to_string(Status s);

struct InstanceResult {
    std::string instance;
    std::string check;
    std::string expected, observed;
    Status status = Status::pass;
    std::string note;
};

struct SuiteReport {
    std::string name;
    bool conjecture = false;  // failures are reported, not fatal
    nlohmann::json params;
    std::vector<InstanceResult> instances;
    double seconds = 0;

    bool failed() const;
    bool skipped() const;
};

struct SuiteParams {
    bool slow = false;
    unsigned workers = 0;
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteParams& params = {});

// Default instance grids.
std::vector<std::vector<int>> sc_count_grid();      // d <= 3, V <= 216, even product
std::vector<std::vector<int>> sc_metric_grid();     // closed count <= 3000, plus small d >= 4
std::vector<std::vector<int>> sc_oracle_grid();     // at most 100 vertices

nlohmann::json to_json(const SuiteReport& r, bool with_runtime = false);
void write_junit(const std::vector<SuiteReport>& rs, std::ostream& os);

}  // namespace scflip::verify
