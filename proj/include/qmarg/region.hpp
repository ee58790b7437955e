#pragma once

#include <string>
#include <vector>

namespace qmarg::region {

// Grid classification of a joinability region. Axis names follow the
// parameter they sample; `inside` is 1/0 per grid point. Rows are emitted
// in nested-loop order over the axes, so identical invocations are
// byte-identical.
struct RegionSample {
    std::vector<std::string> axes;
    std::vector<std::vector<double>> points;  // one entry per axis
    std::vector<bool> inside;
};

// Scenarios: werner-triple, iso-triple, classical, werner-pair, iso-pair,
// hybrid-pair. Resolution is the number of samples per axis; the total
// point count is capped at 10^6.
RegionSample sample_region(const std::string& scenario, int d, int resolution);

// CSV with a header row naming the axes plus an `inside` column; reals
// carry 17 significant digits.
std::string to_csv(const RegionSample& sample);

}  // namespace qmarg::region
