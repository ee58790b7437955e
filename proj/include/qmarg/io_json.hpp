#pragma once

#include <stdexcept>
#include <string>

#include "qmarg/feasibility.hpp"

namespace qmarg::io {

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Problem files:
//   {"dims": [..], "constraints":
//     [{"subsystems": [..], "state": {"re": [[..]], "im": [[..]]}}]}
// State entries are row-major; "im" may be omitted for real states.
feasibility::FeasibilityProblem read_problem_file(const std::string& path);

void write_state_file(const std::string& path, const ComplexMatrix& m,
                      const std::vector<int>& dims);

void write_report_file(const std::string& path,
                       const feasibility::FeasibilityReport& report,
                       const std::vector<int>& dims);

std::string verdict_name(feasibility::Verdict v);

}  // namespace qmarg::io
