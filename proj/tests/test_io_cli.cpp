// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nrange/cli.hpp"
#include "nrange/errors.hpp"
#include "nrange/io.hpp"

using namespace nrange;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("nrange_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int n = 0;
        return n;
    }
};

} // namespace

TEST_CASE("parse_matrix_text accepts the three input shapes") {
    const auto scalar = parse_matrix_text(R"({"rows":1,"cols":1,"entries":[[0,0]]})");
    const auto* M = std::get_if<ComplexMatrix>(&scalar);
    REQUIRE(M != nullptr);
    CHECK(M->rows() == 1);
    CHECK((*M)(0, 0) == Complex(0, 0));

    const auto model_in = parse_matrix_text(R"({"atoms":[{"re":1,"im":0,"mult":"inf"}]})");
    const auto* model = std::get_if<SpectralModel>(&model_in);
    REQUIRE(model != nullptr);
    REQUIRE(model->atoms.size() == 1);
    CHECK(model->atoms[0].infinite);

    const auto shift_in = parse_matrix_text(R"({"shift":4})");
    const auto* S = std::get_if<ComplexMatrix>(&shift_in);
    REQUIRE(S != nullptr);
    CHECK((*S - shift_matrix(4)).norm() == 0.0);
}

TEST_CASE("parse_matrix_text diagnostics") {
    // syntax error reports the line
    try {
        parse_matrix_text("{\n  \"rows\": 2,\n  bad\n}", "test.json");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("test.json:3") != std::string::npos);
    }

    // wrong entry count
    CHECK_THROWS_WITH_AS(parse_matrix_text(R"({"rows":2,"cols":2,"entries":[[1,0]]})"),
                         doctest::Contains("ShapeError"), Error);

    // numeric overflow is rejected (strict JSON cannot spell NaN/Inf)
    try {
        parse_matrix_text(R"({"rows":1,"cols":2,"entries":[[1,0],[1e999,0]]})");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("overflow") != std::string::npos);
    }

    // bad entries carry their coordinates
    try {
        parse_matrix_text(R"({"rows":1,"cols":2,"entries":[[1,0],["x",0]]})");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("entry (0,1)") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_matrix_text(R"({"atoms":[{"re":0,"im":0,"mult":0}]})"), Error);
    CHECK_THROWS_AS(parse_matrix_text(R"({"shift":1})"), Error);
    CHECK_THROWS_AS(parse_matrix_text(R"({"something":1})"), Error);
    CHECK_THROWS_AS(parse_matrix_file("/nonexistent/file.json"), Error);
}

TEST_CASE("matrix json round trip is row-major") {
    ComplexMatrix M(2, 3);
    M << Complex(1, 2), Complex(3, 4), Complex(5, 6), Complex(7, 8), Complex(9, 10),
        Complex(11, 12);
    const auto parsed = parse_matrix_text(matrix_to_json(M));
    CHECK((std::get<ComplexMatrix>(parsed) - M).norm() == 0.0);

    const auto doc = nlohmann::json::parse(matrix_to_json(M));
    CHECK(doc["entries"][1][0] == 3.0); // (0,1) comes second in row-major order
}

TEST_CASE("region serialization formats") {
    const ConvexRegion disk = disk_region(0.5, 32);

    const std::string csv = region_to_csv(disk);
    CHECK(csv.rfind("theta,support\n", 0) == 0);
    CHECK(csv == region_to_csv(disk)); // deterministic

    const auto doc = nlohmann::json::parse(region_to_json(disk));
    CHECK(doc["empty"] == false);
    CHECK(doc["samples"].size() == 32);
    CHECK(doc["vertices"].size() == disk.vertices.size());

    const std::string svg = region_to_svg(disk, SvgOptions{true});
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<polygon") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg == region_to_svg(disk, SvgOptions{true}));

    const std::string empty_svg = region_to_svg(disk_region(-1.0, 32));
    CHECK(empty_svg.find("empty region") != std::string::npos);
}

TEST_CASE("report serialization carries all fields") {
    VerifyReport report;
    report.theorem_id = "unit-test";
    report.instance = "instance";
    report.per_direction = {{0.0, 1.0, 1.5, 0.5}};
    report.hausdorff = std::numeric_limits<double>::infinity();
    report.residuals = {0.25};
    report.passed = false;
    report.runtime_ms = 12;

    const auto doc = nlohmann::json::parse(report_to_json(report));
    CHECK(doc["theorem_id"] == "unit-test");
    CHECK(doc["hausdorff"] == "inf");
    CHECK(doc["passed"] == false);
    CHECK(doc["per_direction"][0]["gap"] == 0.5);
    CHECK(doc["runtime_ms"] == 12);

    const std::string csv = report_to_csv(report);
    CHECK(csv.find("theta,target_support,achieved_support,gap") == 0);
    CHECK(csv.find("0.5") != std::string::npos);
}

TEST_CASE("format_double has 17 significant digits") {
    CHECK(format_double(M_PI) == "3.1415926535897931");
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("cli range command writes deterministic artifacts") {
    TempDir dir;
    const std::string out1 = (dir.path / "a").string();
    const std::string out2 = (dir.path / "b").string();

    std::ostringstream log, err;
    const int rc1 = run_cli({"range", "--shift", "4", "--k", "2", "-o", out1}, log, err);
    const int rc2 = run_cli({"range", "--shift", "4", "--k", "2", "-o", out2}, log, err);
    REQUIRE(rc1 == 0);
    REQUIRE(rc2 == 0);
    CHECK(slurp(out1 + ".csv") == slurp(out2 + ".csv"));
    CHECK(slurp(out1 + ".svg") == slurp(out2 + ".svg"));

    // the disk radius lands in the CSV: cos(2 pi / 5)
    CHECK(slurp(out1 + ".csv").find("0.3090169943749") != std::string::npos);
}

TEST_CASE("cli range on a matrix file and a model file") {
    TempDir dir;
    const std::string matrix_path = (dir.path / "m.json").string();
    write_file(matrix_path, R"({"rows":2,"cols":2,"entries":[[0,0],[1,0],[0,0],[0,0]]})");
    std::ostringstream log, err;
    const int rc = run_cli({"range", "--input", matrix_path, "--k", "1", "-o",
                            (dir.path / "m_out").string(), "--format", "json"},
                           log, err);
    REQUIRE(rc == 0);
    const auto doc = nlohmann::json::parse(slurp((dir.path / "m_out.json").string()));
    CHECK(doc["empty"] == false);

    const std::string model_path = (dir.path / "model.json").string();
    write_file(model_path,
               R"({"atoms":[{"re":-0.5,"im":0,"mult":"inf"},{"re":0.5,"im":0,"mult":"inf"}]})");
    const int rc2 = run_cli({"range", "--input", model_path, "--k", "inf", "-o",
                             (dir.path / "model_out").string(), "--format", "csv"},
                            log, err);
    REQUIRE(rc2 == 0);
    CHECK(fs::exists(dir.path / "model_out.csv"));
}

TEST_CASE("cli verify exit codes and artifacts") {
    TempDir dir;
    std::ostringstream log, err;
    const std::string out = (dir.path / "gap").string();
    const int rc = run_cli(
        {"verify", "cnum-gap", "--samples", "300", "--seed", "0", "-o", out}, log, err);
    CHECK(rc == 0);
    const auto doc = nlohmann::json::parse(slurp(out + ".report.json"));
    CHECK(doc["passed"] == true);
    CHECK(doc["theorem_id"] == "cnum-dilation-gap");
    CHECK(log.str().find("PASSED") != std::string::npos);

    // report artifacts are byte-identical across runs at a fixed seed
    const std::string out2 = (dir.path / "gap2").string();
    CHECK(run_cli({"verify", "cnum-gap", "--samples", "300", "--seed", "0", "-o", out2}, log,
                  err) == 0);
    CHECK(slurp(out + ".report.json") == slurp(out2 + ".report.json"));
}

TEST_CASE("cli verify covers every harness mode") {
    TempDir dir;
    std::ostringstream log, err;

    CHECK(run_cli({"verify", "glw", "--shift", "3", "--k", "1", "--grid", "16", "-o",
                   (dir.path / "glw").string()},
                  log, err) == 0);
    const auto glw = nlohmann::json::parse(slurp((dir.path / "glw.report.json").string()));
    CHECK(glw["passed"] == true);
    CHECK(glw["per_direction"].size() == 16);
    CHECK(glw["runtime_ms"] == 0); // timing lives on stdout, artifacts stay stable

    const std::string matrix_path = (dir.path / "a.json").string();
    write_file(matrix_path,
               R"({"rows":2,"cols":2,"entries":[[0.5,0],[0,0],[0,0],[-0.33,0]]})");
    CHECK(run_cli({"verify", "bt", "--input", matrix_path, "--k", "1", "--grid", "8", "-o",
                   (dir.path / "bt").string()},
                  log, err) == 0);

    CHECK(run_cli({"verify", "normal", "--eigs", "1,0;0,1;-1,0;0,-1", "--k", "2", "-o",
                   (dir.path / "nm").string()},
                  log, err) == 0);

    CHECK(run_cli({"verify", "inf-example", "--n-trunc", "8", "--k-list", "1,2", "--grid",
                   "32", "-o", (dir.path / "inf").string()},
                  log, err) == 0);
}

TEST_CASE("cli verify trunc and oracle") {
    TempDir dir;
    std::ostringstream log, err;
    CHECK(run_cli({"verify", "trunc", "--gen", "diag-harmonic", "--k", "1", "--n-max", "24",
                   "-o", (dir.path / "t").string()},
                  log, err) == 0);
    CHECK(run_cli({"oracle", "shift", "9", "1", "-o", (dir.path / "o").string()}, log, err) ==
          0);
    CHECK(slurp((dir.path / "o.csv").string()).find("0.95105651629515") != std::string::npos);
}

TEST_CASE("cli cnum writes interval, region and cloud") {
    TempDir dir;
    const std::string matrix_path = (dir.path / "h.json").string();
    write_file(matrix_path, R"({"rows":2,"cols":2,"entries":[[3,0],[0,0],[0,0],[-1,0]]})");
    std::ostringstream log, err;
    const int rc = run_cli({"cnum", "--input", matrix_path, "--weights", "2,1", "--samples",
                            "50", "-o", (dir.path / "c").string()},
                           log, err);
    REQUIRE(rc == 0);
    const auto interval = nlohmann::json::parse(slurp((dir.path / "c.interval.json").string()));
    CHECK(interval["alpha"] == 1.0);
    CHECK(interval["beta"] == 5.0);
    CHECK(fs::exists(dir.path / "c.cloud.csv"));
    CHECK(fs::exists(dir.path / "c.region.svg"));
}

TEST_CASE("cli dilate extremal and prescribed") {
    TempDir dir;
    const std::string matrix_path = (dir.path / "a.json").string();
    write_file(matrix_path,
               R"({"rows":2,"cols":2,"entries":[[0.5,0],[0,0],[0,0],[0.33,0]]})");
    std::ostringstream log, err;

    CHECK(run_cli({"dilate", "--input", matrix_path, "--kind", "extremal", "--k", "1", "-o",
                   (dir.path / "ex").string()},
                  log, err) == 0);
    const auto ex = nlohmann::json::parse(slurp((dir.path / "ex.dilation.json").string()));
    CHECK(ex["kind"] == "minimal_VW");
    CHECK(ex["residuals"]["converged"] == 1.0);

    CHECK(run_cli({"dilate", "--input", matrix_path, "--kind", "prescribed", "--lambda",
                   "0,1", "-o", (dir.path / "pr").string()},
                  log, err) == 0);
    const auto pr = nlohmann::json::parse(slurp((dir.path / "pr.dilation.json").string()));
    CHECK(pr["residuals"]["converged"] == 1.0);

    CHECK(run_cli({"dilate", "--input", matrix_path, "--kind", "halmos", "-o",
                   (dir.path / "h").string()},
                  log, err) == 0);
    const auto h = nlohmann::json::parse(slurp((dir.path / "h.dilation.json").string()));
    CHECK(h["dilation"]["rows"] == 4);
}

TEST_CASE("cli failure paths emit machine-readable errors") {
    std::ostringstream log, err;

    // unknown flag
    CHECK(run_cli({"range", "--shift", "4", "--bogus"}, log, err) == 2);
    auto doc = nlohmann::json::parse(err.str());
    CHECK(doc["error"] == "UsageError");

    // missing input
    err.str("");
    CHECK(run_cli({"range", "--k", "1"}, log, err) == 2);
    doc = nlohmann::json::parse(err.str());
    CHECK(doc.contains("error"));
    CHECK(doc.contains("message"));

    // parse error surfaces the code
    err.str("");
    TempDir dir;
    const std::string bad = (dir.path / "bad.json").string();
    write_file(bad, "{not json");
    CHECK(run_cli({"range", "--input", bad, "--k", "1"}, log, err) == 2);
    doc = nlohmann::json::parse(err.str());
    CHECK(doc["error"] == "ParseError");

    // k out of range
    err.str("");
    CHECK(run_cli({"range", "--shift", "3", "--k", "9"}, log, err) == 2);
    doc = nlohmann::json::parse(err.str());
    CHECK(doc["error"] == "KOutOfRange");
}

TEST_CASE("cli help exits zero") {
    std::ostringstream log, err;
    CHECK(run_cli({"--help"}, log, err) == 0);
    CHECK(log.str().find("Subcommands") != std::string::npos);
}
