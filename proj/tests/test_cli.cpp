// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using padua::cli::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);) v.push_back(l);
    return v;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> v;
    std::istringstream is(line);
    for (std::string f; std::getline(is, f, ',');) v.push_back(f);
    return v;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("padua_cli_test_" + name);
}

} // namespace

TEST_CASE("points") {
    const Run r = run({"points", "--degree", "2"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == "k,j,x1,x2,class");
    CHECK(rows[2] == "0,2,1,-1,vertex");
    CHECK(r.out.find('\r') == std::string::npos);

    const Run bad = run({"points", "--degree", "0"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("unsupported degree") != std::string::npos);

    const Run j = run({"points", "--degree", "4", "--format", "json"});
    CHECK(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 15);
    CHECK(doc[0].contains("class"));
}

TEST_CASE("precision") {
    const auto full = lines(run({"points", "--degree", "2"}).out);
    CHECK(split(full[1])[3] == "0.50000000000000011");
    CHECK(std::strtod(split(full[1])[3].c_str(), nullptr) == std::cos(std::numbers::pi / 3));
    const auto short_rows = lines(run({"points", "--degree", "2", "--precision", "3"}).out);
    CHECK(split(short_rows[1])[3] == "0.5");
    CHECK(run({"points", "--degree", "2", "--precision", "0"}).code == 2);
    CHECK(run({"points", "--degree", "2", "--precision", "18"}).code == 2);
    const auto doc = nlohmann::json::parse(run({"points", "--degree", "2", "--format", "json", "--precision", "4"}).out);
    CHECK(doc[0]["x2"].get<double>() == 0.5);
}

TEST_CASE("cubature") {
    const Run r = run({"cubature", "--degree", "2"});
    CHECK(r.code == 0);
    double sum = 0.0;
    const auto rows = lines(r.out);
    CHECK(rows[0] == "k,j,x1,x2,class,weight");
    for (std::size_t i = 1; i < rows.size(); ++i) sum += std::stod(split(rows[i])[5]);
    CHECK(std::abs(sum - 1.0) <= 1e-12);

    const auto c = lines(run({"cubature", "--degree", "5", "--function", "const"}).out);
    CHECK(std::stod(split(c[1])[2]) == doctest::Approx(1.0).epsilon(1e-14));
    const auto x = lines(run({"cubature", "--degree", "5", "--function", "coord1"}).out);
    CHECK(std::abs(std::stod(split(x[1])[2])) <= 1e-12);
    CHECK(run({"cubature", "--degree", "5", "--function", "zzz"}).code == 2);
}

TEST_CASE("interp") {
    const Run r = run({"interp", "--degree", "8", "--function", "franke", "--grid", "100"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 100 * 100 + 1);
    const auto pos = r.err.find("error_uniform=");
    REQUIRE(pos != std::string::npos);
    CHECK(std::stod(r.err.substr(pos + 14)) > 0.0);

    const Run c = run({"interp", "--degree", "8", "--function", "const", "--grid", "10", "--format", "json"});
    CHECK(c.code == 0);
    const auto doc = nlohmann::json::parse(c.out);
    CHECK(doc["summary"]["error_uniform"].get<double>() <= 1e-8);
    CHECK(doc["values"].size() == 100);

    CHECK(run({"interp", "--degree", "8", "--function", "nope"}).code == 2);
    CHECK(run({"interp", "--degree", "8"}).code == 2);
    CHECK(run({"interp", "--degree", "8", "--function", "const", "--grid", "1"}).code == 2);
}

TEST_CASE("interp from sample files") {
    // values of x1 at the degree-3 nodes, in set order and as k,j,value
    const auto nodes = lines(run({"points", "--degree", "3"}).out);
    const auto bare = temp_file("bare.csv"), keyed = temp_file("keyed.csv"), short_file = temp_file("short.csv");
    {
        std::ofstream b(bare), k(keyed), s(short_file);
        k << "k,j,value\n";
        for (std::size_t i = nodes.size() - 1; i >= 1; --i) { // reversed: keyed rows may come in any order
            const auto f = split(nodes[i]);
            k << f[0] << ',' << f[1] << ',' << f[2] << '\n';
        }
        for (std::size_t i = 1; i < nodes.size(); ++i) {
            b << split(nodes[i])[2] << '\n';
            if (i + 1 < nodes.size()) s << split(nodes[i])[2] << '\n';
        }
    }
    for (const auto& path : {bare, keyed}) {
        const Run r = run({"interp", "--degree", "3", "--samples", path.string(), "--function", "coord1", "--grid", "7"});
        CHECK(r.code == 0);
        const auto pos = r.err.find("error_uniform=");
        REQUIRE(pos != std::string::npos);
        CHECK(std::stod(r.err.substr(pos + 14)) <= 1e-12);
    }
    const Run mismatch = run({"interp", "--degree", "3", "--samples", short_file.string(), "--grid", "5"});
    CHECK(mismatch.code == 4);
    CHECK(run({"interp", "--degree", "4", "--samples", bare.string(), "--grid", "5"}).code == 4);
    CHECK(run({"interp", "--degree", "3", "--samples", temp_file("missing.csv").string(), "--grid", "5"}).code == 3);
    for (const auto& p : {bare, keyed, short_file}) std::filesystem::remove(p);
}

TEST_CASE("output file and I/O failure") {
    const auto path = temp_file("points.csv");
    CHECK(run({"points", "--degree", "3", "--output", path.string()}).code == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == run({"points", "--degree", "3"}).out);
    std::filesystem::remove(path);
    CHECK(run({"points", "--degree", "3", "--output", "/nonexistent-dir/x.csv"}).code == 3);
}

TEST_CASE("lebesgue") {
    const Run r = run({"lebesgue", "--degrees", "8,16,32", "--grid", "200"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    double prev = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double v = std::stod(split(rows[i])[2]);
        CHECK(v >= prev);
        prev = v;
    }
    CHECK(run({"lebesgue", "--degrees", "16,8"}).code == 2);
}

TEST_CASE("converge") {
    const Run r = run({"converge", "--function", "exp_sum", "--p", "2", "--degrees", "4,8,16"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "n,nodes,error_wp,error_uniform,lebesgue_estimate,en_proxy,ratio_wp_proxy");
    double prev = 1e300;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double v = std::stod(split(rows[i])[2]);
        CHECK(v < prev);
        prev = v;
    }
    const auto doc = nlohmann::json::parse(
        run({"converge", "--function", "franke", "--p", "inf", "--degrees", "4,8", "--grid", "50", "--format", "json"}).out);
    CHECK(doc["rows"].size() == 2);
    CHECK(doc["p"] == "inf");
    CHECK(run({"converge", "--function", "exp_sum", "--p", "-1", "--degrees", "4"}).code == 2);
}

TEST_CASE("marcinkiewicz") {
    const std::vector<std::string> args{"marcinkiewicz", "--degree", "16", "--p", "2", "--trials", "100", "--seed", "1"};
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(lines(a.out).size() == 101);
    CHECK(a.err.find("min_ratio=") != std::string::npos);
    auto json_args = args;
    json_args.insert(json_args.end(), {"--format", "json"});
    const auto doc = nlohmann::json::parse(run(json_args).out);
    const double lo = doc["results"][0]["min_ratio"], hi = doc["results"][0]["max_ratio"];
    CHECK(lo > 0.0);
    CHECK(std::isfinite(hi));
    CHECK(run({"marcinkiewicz", "--degree", "4", "--p", "0.5"}).code == 2);
}

TEST_CASE("verify") {
    const Run a = run({"verify", "--max-degree", "8", "--seed", "7"});
    const Run b = run({"verify", "--max-degree", "8", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["pass"] == true);
    for (const auto& c : doc["checks"]) {
        CHECK(c.contains("tolerance"));
        CHECK(c.contains("max_observed"));
        for (const auto& d : c["per_degree"]) CHECK(d["observed"].get<double>() <= d["tolerance"].get<double>());
    }
    const Run bad = run({"verify", "--max-degree", "4", "--seed", "7", "--tamper-vertex-factor", "0.5"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("node_values") != std::string::npos);
    const auto bad_doc = nlohmann::json::parse(bad.out);
    CHECK(bad_doc["pass"] == false);
    CHECK(bad_doc["failed_checks"].size() >= 1);
}

TEST_CASE("help and argument errors") {
    const Run h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("Exit codes") != std::string::npos);
    CHECK(h.out.find("PADUA_THREADS") != std::string::npos);
    CHECK(h.out.find("tamper") == std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"points"}).code == 2);
    CHECK(run({"points", "--degree", "x"}).code == 2);
}
