// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef NRANGE_REPORT_HPP
#define NRANGE_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace nrange {

struct DirectionRecord {
    double theta = 0.0;
    double target_support = 0.0;
    double achieved_support = 0.0;
    double gap = 0.0;
};

/// Machine-readable outcome of one verification run.
struct VerifyReport {
    std::string theorem_id;
    std::string instance; // description + seed
    std::vector<DirectionRecord> per_direction;
    double hausdorff = 0.0;
    std::vector<double> residuals;
    bool passed = false;
    std::int64_t runtime_ms = 0;
};

} // namespace nrange

#endif // NRANGE_REPORT_HPP
