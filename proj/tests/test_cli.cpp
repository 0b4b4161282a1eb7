#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "qmagic/cli.hpp"

using namespace qmagic;
using namespace qmagic::cli;

namespace {

std::vector<std::string> data_rows(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#' && line.find_first_of("0123456789") == 0)
            rows.push_back(line);
    return rows;
}

}  // namespace

TEST_CASE("table1 rows match the published table") {
    RunConfig cfg;
    cfg.ps = {3, 7};
    const Artifact art = cmd_table1(cfg);
    CHECK(art.exit_code == 0);
    const auto rows = data_rows(art.text);
    REQUIRE(rows.size() == 2);
    // p=3: blank Weil column
    CHECK(rows[0] == "3,6.464102,,6.411474,6,1");
    CHECK(rows[1] == "7,22.874508,28.000000,19.411190,19,1");
}

TEST_CASE("table1 marks search values as non-exact lower bounds") {
    RunConfig cfg;
    cfg.ps = {11};
    cfg.restarts = 60;
    const Artifact art = cmd_table1(cfg);
    const auto rows = data_rows(art.text);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].back() == '0');  // lhv_exact = 0
    CHECK(rows[0].find("34.646440") != std::string::npos);
}

TEST_CASE("table1 rejects non-prime p") {
    RunConfig cfg;
    cfg.ps = {9};
    CHECK_THROWS_AS(cmd_table1(cfg), UnsupportedDimension);
    cfg.ps = {31};  // prime but beyond Table 1's range
    CHECK_THROWS_AS(cmd_table1(cfg), UnsupportedDimension);
}

TEST_CASE("identical config gives byte-identical output") {
    RunConfig cfg;
    cfg.ps = {5, 11};
    cfg.seed = 7;
    cfg.restarts = 40;
    const Artifact a = cmd_table1(cfg);
    const Artifact b = cmd_table1(cfg);
    CHECK(a.text == b.text);

    RunConfig e;
    e.ps = {5};
    e.seed = 3;
    e.restarts = 12;
    CHECK(cmd_entropy_min(e).text == cmd_entropy_min(e).text);
}

TEST_CASE("table2 reproduces the seven-dimensional rows and the bound footer") {
    RunConfig cfg;
    const Artifact art = cmd_table2(cfg);
    const auto rows = data_rows(art.text);
    REQUIRE(rows.size() == 6);
    CHECK(rows[5] == "6,-0.027692,0.814835,7.87055");
    CHECK(rows[4] == "5,-0.089915,0.814835,12.32868");
    CHECK(art.text.find("# min_entropy_lower_bound_arbitrary_states: 7.6933") !=
          std::string::npos);
}

TEST_CASE("table2 as json mirrors the csv payload") {
    RunConfig cfg;
    cfg.format = RunConfig::Format::json;
    const Artifact art = cmd_table2(cfg);
    const nlohmann::json j = nlohmann::json::parse(art.text);
    REQUIRE(j["rows"].size() == 6);
    CHECK(j["rows"][0]["a"] == 1);
    CHECK(j["rows"][0]["w_min"] == "-0.027692");
    CHECK(j["rows"][0]["min_entropy_total"] == "7.87055");
}

TEST_CASE("fig2 grid artifact") {
    RunConfig cfg;
    cfg.resolution = 18;
    const Artifact art = cmd_fig2(cfg);
    const auto rows = data_rows(art.text);
    REQUIRE(rows.size() == 18 * 18);
    CHECK(art.text.find("x,y,total_min_entropy") != std::string::npos);
    // grid minimum ~= 1.468
    double best = 1e9;
    for (const auto& row : rows) {
        const auto pos = row.rfind(',');
        best = std::min(best, std::stod(row.substr(pos + 1)));
    }
    CHECK_THAT(best, Catch::Matchers::WithinAbs(1.468, 1e-3));
}

TEST_CASE("satotate artifact carries samples and summary") {
    RunConfig cfg;
    cfg.ps = {7};
    const Artifact art = cmd_satotate(cfg);
    const auto rows = data_rows(art.text);
    CHECK(rows.size() == 6 * 7);
    CHECK(art.text.find("# ks_semicircle:") != std::string::npos);
    CHECK(art.text.find("a,c,theta") != std::string::npos);
}

TEST_CASE("entropy_min finds the paper's non-magic counterexample at p=11") {
    RunConfig cfg;
    cfg.ps = {11};
    cfg.format = RunConfig::Format::json;
    const Artifact art = cmd_entropy_min(cfg);
    const nlohmann::json j = nlohmann::json::parse(art.text);
    const auto& r = j["results"][0];
    CHECK(std::stod(r["value"].get<std::string>()) <= 17.7606 + 0.01);
    CHECK(r["magic"] == false);
    CHECK(std::stod(r["best_magic_value"].get<std::string>()) > 19.8);
}

TEST_CASE("entropy_min at small p lands on magic states") {
    RunConfig cfg;
    cfg.ps = {3};
    cfg.restarts = 8;
    cfg.format = RunConfig::Format::json;
    const nlohmann::json j = nlohmann::json::parse(cmd_entropy_min(cfg).text);
    CHECK(j["results"][0]["magic"] == true);
    CHECK_THAT(std::stod(j["results"][0]["value"].get<std::string>()),
               Catch::Matchers::WithinAbs(1.468, 1e-3));
}

TEST_CASE("verify passes on the default p-list") {
    RunConfig cfg;
    const Artifact art = cmd_verify(cfg);
    CHECK(art.exit_code == 0);
    CHECK(art.text.find("FAIL") == std::string::npos);
    CHECK(art.text.find("invariant checks passed") != std::string::npos);
}
