// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef NRANGE_IO_HPP
#define NRANGE_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "nrange/dilation.hpp"
#include "nrange/matrix.hpp"
#include "nrange/rank_k.hpp"
#include "nrange/region.hpp"
#include "nrange/report.hpp"

namespace nrange {

using MatrixOrModel = std::variant<ComplexMatrix, SpectralModel>;

/// Parses a matrix file: either {"rows", "cols", "entries": [[re, im], ...]}
/// in row-major order, {"atoms": [{"re", "im", "mult"}, ...]} with "mult" a
/// positive integer or "inf", or the shorthand {"shift": n}.
MatrixOrModel parse_matrix_file(const std::string& path);
MatrixOrModel parse_matrix_text(const std::string& text, const std::string& origin = "<input>");

std::string matrix_to_json(const ComplexMatrix& M);

/// All numbers in CSV output carry 17 significant digits so re-runs are
/// byte-identical.
std::string format_double(double value);

std::string region_to_csv(const ConvexRegion& region);
std::string region_to_json(const ConvexRegion& region);

struct SvgOptions {
    bool unit_circle = false; // overlay the unit circle (contraction inputs)
};

/// Fixed 800x800 viewport, content autoscaled with a 10% margin, axis cross
/// through the origin.
std::string region_to_svg(const ConvexRegion& region, const SvgOptions& options = {});

std::string report_to_json(const VerifyReport& report);
std::string report_to_csv(const VerifyReport& report);

std::string points_to_csv(const std::vector<Complex>& points);

/// Dilation descriptor: kind, parameter blocks and residuals.
std::string dilation_to_json(DilationKind kind, const ComplexMatrix& U,
                             const std::vector<std::pair<std::string, ComplexMatrix>>& blocks,
                             const std::vector<std::pair<std::string, double>>& residuals);

std::string error_to_json(const std::string& code, const std::string& message);

void write_file(const std::string& path, const std::string& content);

} // namespace nrange

#endif // NRANGE_IO_HPP
