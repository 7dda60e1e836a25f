// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#include "nrange/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nrange/errors.hpp"

namespace nrange {

using nlohmann::json;

namespace {

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

double finite_number(const json& value, const std::string& where) {
    if (!value.is_number())
        throw Error(ErrorCode::ParseError, where + " must be a number");
    const double x = value.get<double>();
    if (!std::isfinite(x))
        throw Error(ErrorCode::ParseError, where + " is not finite");
    return x;
}

ComplexMatrix matrix_from_json(const json& doc) {
    const auto rows = doc.at("rows");
    const auto cols = doc.at("cols");
    if (!rows.is_number_integer() || !cols.is_number_integer() || rows.get<long long>() < 1 ||
        cols.get<long long>() < 1)
        throw Error(ErrorCode::ShapeError, "rows/cols must be positive integers");
    const auto n = rows.get<Eigen::Index>();
    const auto m = cols.get<Eigen::Index>();
    const json& entries = doc.at("entries");
    if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != n * m)
        throw Error(ErrorCode::ShapeError,
                    "entries must hold rows*cols = " + std::to_string(n * m) + " pairs");
    ComplexMatrix M(n, m);
    for (Eigen::Index idx = 0; idx < n * m; ++idx) {
        const json& pair = entries[idx];
        const std::string where =
            "entry (" + std::to_string(idx / m) + "," + std::to_string(idx % m) + ")";
        if (!pair.is_array() || pair.size() != 2)
            throw Error(ErrorCode::ParseError, where + " must be a [re, im] pair");
        M(idx / m, idx % m) = Complex(finite_number(pair[0], where + " re"),
                                      finite_number(pair[1], where + " im"));
    }
    return M;
}

SpectralModel model_from_json(const json& doc) {
    const json& atoms = doc.at("atoms");
    if (!atoms.is_array() || atoms.empty())
        throw Error(ErrorCode::ParseError, "atoms must be a non-empty array");
    SpectralModel model;
    int index = 0;
    for (const json& atom : atoms) {
        const std::string where = "atom " + std::to_string(index++);
        SpectralAtom out;
        out.point = Complex(finite_number(atom.at("re"), where + " re"),
                            finite_number(atom.at("im"), where + " im"));
        const json& mult = atom.at("mult");
        if (mult.is_string() && mult.get<std::string>() == "inf") {
            out.infinite = true;
        } else if (mult.is_number_integer() && mult.get<long long>() >= 1) {
            out.multiplicity = mult.get<long long>();
        } else {
            throw Error(ErrorCode::ParseError,
                        where + " mult must be a positive integer or \"inf\"");
        }
        model.atoms.push_back(out);
    }
    return model;
}

json matrix_json(const ComplexMatrix& M) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j)
            entries.push_back({M(i, j).real(), M(i, j).imag()});
    return json{{"rows", M.rows()}, {"cols", M.cols()}, {"entries", entries}};
}

json finite_or_string(double value) {
    if (std::isfinite(value)) return value;
    return value > 0 ? "inf" : "-inf";
}

} // namespace

MatrixOrModel parse_matrix_text(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, origin + ":" +
                                               std::to_string(line_of_offset(text, e.byte)) +
                                               ": " + e.what());
    } catch (const json::exception& e) {
        // e.g. number overflow: strict JSON has no way to spell NaN/Inf
        throw Error(ErrorCode::ParseError, origin + ": " + e.what());
    }
    try {
        if (doc.contains("shift")) {
            const json& n = doc.at("shift");
            if (!n.is_number_integer() || n.get<long long>() < 2)
                throw Error(ErrorCode::ParseError, "shift must be an integer >= 2");
            return shift_matrix(n.get<int>());
        }
        if (doc.contains("atoms")) return model_from_json(doc);
        if (doc.contains("rows")) return matrix_from_json(doc);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, origin + ": " + e.what());
    }
    throw Error(ErrorCode::ParseError,
                origin + ": expected a matrix {rows, cols, entries}, a spectral model {atoms} "
                         "or a {shift} shorthand");
}

MatrixOrModel parse_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix_text(buffer.str(), path);
}

std::string matrix_to_json(const ComplexMatrix& M) { return matrix_json(M).dump(); }

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string region_to_csv(const ConvexRegion& region) {
    std::ostringstream out;
    out << "theta,support\n";
    for (std::size_t i = 0; i < region.thetas.size(); ++i)
        out << format_double(region.thetas[i]) << "," << format_double(region.supports[i])
            << "\n";
    return out.str();
}

std::string region_to_json(const ConvexRegion& region) {
    json samples = json::array();
    for (std::size_t i = 0; i < region.thetas.size(); ++i)
        samples.push_back({region.thetas[i], region.supports[i]});
    json vertices = json::array();
    for (const Complex& v : region.vertices) vertices.push_back({v.real(), v.imag()});
    return json{{"empty", region.empty}, {"samples", samples}, {"vertices", vertices}}.dump();
}

std::string region_to_svg(const ConvexRegion& region, const SvgOptions& options) {
    constexpr double size = 800.0;

    double lo_x = -1.0, hi_x = 1.0, lo_y = -1.0, hi_y = 1.0;
    if (!region.empty && !region.vertices.empty() && !options.unit_circle) {
        lo_x = hi_x = region.vertices.front().real();
        lo_y = hi_y = region.vertices.front().imag();
        for (const Complex& v : region.vertices) {
            lo_x = std::min(lo_x, v.real());
            hi_x = std::max(hi_x, v.real());
            lo_y = std::min(lo_y, v.imag());
            hi_y = std::max(hi_y, v.imag());
        }
        // Keep the origin in frame; the axis cross anchors the picture.
        lo_x = std::min(lo_x, 0.0);
        hi_x = std::max(hi_x, 0.0);
        lo_y = std::min(lo_y, 0.0);
        hi_y = std::max(hi_y, 0.0);
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-6});
    const double margin = 0.1 * span;
    const double scale = size / (span + 2 * margin);
    const double cx = 0.5 * (lo_x + hi_x), cy = 0.5 * (lo_y + hi_y);

    auto px = [&](double x) { return size / 2 + (x - cx) * scale; };
    auto py = [&](double y) { return size / 2 - (y - cy) * scale; };
    auto coord = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3f", v);
        return std::string(buf);
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    out << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    out << "<line x1=\"" << coord(px(lo_x - margin)) << "\" y1=\"" << coord(py(0))
        << "\" x2=\"" << coord(px(hi_x + margin)) << "\" y2=\"" << coord(py(0))
        << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << coord(px(0)) << "\" y1=\"" << coord(py(lo_y - margin))
        << "\" x2=\"" << coord(px(0)) << "\" y2=\"" << coord(py(hi_y + margin))
        << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    if (options.unit_circle) {
        out << "<circle cx=\"" << coord(px(0)) << "\" cy=\"" << coord(py(0)) << "\" r=\""
            << coord(scale) << "\" fill=\"none\" stroke=\"#444\" stroke-dasharray=\"6 4\"/>\n";
    }
    if (!region.empty && !region.vertices.empty()) {
        out << "<polygon points=\"";
        for (std::size_t i = 0; i < region.vertices.size(); ++i) {
            if (i) out << " ";
            out << coord(px(region.vertices[i].real())) << ","
                << coord(py(region.vertices[i].imag()));
        }
        out << "\" fill=\"#1f77b4\" fill-opacity=\"0.35\" stroke=\"#1f77b4\" "
               "stroke-width=\"1.5\"/>\n";
    } else {
        out << "<text x=\"20\" y=\"40\" font-family=\"monospace\" font-size=\"20\">empty "
               "region</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string report_to_json(const VerifyReport& report) {
    json per_direction = json::array();
    for (const DirectionRecord& r : report.per_direction)
        per_direction.push_back({{"theta", r.theta},
                                 {"target_support", r.target_support},
                                 {"achieved_support", r.achieved_support},
                                 {"gap", r.gap}});
    json residuals = json::array();
    for (double r : report.residuals) residuals.push_back(finite_or_string(r));
    return json{{"theorem_id", report.theorem_id},
                {"instance", report.instance},
                {"per_direction", per_direction},
                {"hausdorff", finite_or_string(report.hausdorff)},
                {"residuals", residuals},
                {"passed", report.passed},
                {"runtime_ms", report.runtime_ms}}
        .dump(2);
}

std::string report_to_csv(const VerifyReport& report) {
    std::ostringstream out;
    out << "theta,target_support,achieved_support,gap\n";
    for (const DirectionRecord& r : report.per_direction)
        out << format_double(r.theta) << "," << format_double(r.target_support) << ","
            << format_double(r.achieved_support) << "," << format_double(r.gap) << "\n";
    return out.str();
}

std::string points_to_csv(const std::vector<Complex>& points) {
    std::ostringstream out;
    out << "re,im\n";
    for (const Complex& p : points)
        out << format_double(p.real()) << "," << format_double(p.imag()) << "\n";
    return out.str();
}

std::string dilation_to_json(DilationKind kind, const ComplexMatrix& U,
                             const std::vector<std::pair<std::string, ComplexMatrix>>& blocks,
                             const std::vector<std::pair<std::string, double>>& residuals) {
    json block_obj = json::object();
    for (const auto& [name, M] : blocks) block_obj[name] = matrix_json(M);
    json residual_obj = json::object();
    for (const auto& [name, value] : residuals) residual_obj[name] = finite_or_string(value);
    return json{{"kind", dilation_kind_name(kind)},
                {"dilation", matrix_json(U)},
                {"parameters", block_obj},
                {"residuals", residual_obj}}
        .dump(2);
}

std::string error_to_json(const std::string& code, const std::string& message) {
    return json{{"error", code}, {"message", message}}.dump();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << content;
}

} // namespace nrange
