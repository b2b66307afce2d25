// End-to-end checks of the qcatalan binary: exit-code contract, output
// formats, and determinism of the rendered artifacts.

#include "schema.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

std::string temp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("verify exit codes") {
    CHECK(run_cli("verify eq5 --n-max 3").exit_code == 0);
    auto bogus = run_cli("verify bogus");
    CHECK(bogus.exit_code == 2);
    CHECK(bogus.output.find("unknown verification suite") != std::string::npos);
    CHECK(run_cli("verify eq5 --n-max 0").exit_code == 2);
}

TEST_CASE("verify emits schema-valid json") {
    auto out = temp_path("verify.json");
    auto r = run_cli("verify theorem_main --n-max 4 --format json --out " + out);
    CHECK(r.exit_code == 0);
    auto j = schema::Json::parse(read_file(out));
    std::string why;
    CHECK(schema::validate_report_array(j, &why));
    INFO(why);
    bool reported = false;
    for (const auto& row : j) reported |= row["status"] == "reported";
    CHECK(reported);
    std::remove(out.c_str());
}

TEST_CASE("verify csv header") {
    auto r = run_cli("verify eq5 --n-max 3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("identity,params,status,note,lhs,rhs,elapsed_ms\n", 0) == 0);
}

TEST_CASE("enumerate") {
    auto r = run_cli("enumerate catalan:2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0011\n0101\n");

    auto genfun = run_cli("enumerate omega:2 --genfun maj-des");
    CHECK(genfun.exit_code == 0);
    CHECK(genfun.output == "1 + q\n");

    auto ballot = run_cli("enumerate ballot:2,2");
    CHECK(ballot.output == "0111\n");

    auto json = run_cli("enumerate catalan:2 --stats --format json");
    auto j = schema::Json::parse(json.output);
    std::string why;
    CHECK(schema::validate_path_listing(j, true, &why));
    INFO(why);

    CHECK(run_cli("enumerate dyck:3").exit_code == 2);
    CHECK(run_cli("enumerate catalan:2 --genfun inv").exit_code == 2);
    CHECK(run_cli("enumerate ballot:2,5").exit_code == 2);
}

TEST_CASE("biject") {
    auto r = run_cli("biject f 0111");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0011\n");

    auto wrong_family = run_cli("biject f 0011");
    CHECK(wrong_family.exit_code == 2);
    CHECK(wrong_family.output.find("ballotstar") != std::string::npos);

    auto traced = run_cli("biject g 01100111 --trace");
    CHECK(traced.exit_code == 0);
    auto j = schema::Json::parse(traced.output);
    std::string why;
    CHECK(schema::validate_trace(j, &why));
    INFO(why);
    CHECK(j["case"] == "case2");
    CHECK(j["output"] == "00001111");

    CHECK(run_cli("biject nosuch 0011").exit_code == 2);
    CHECK(run_cli("biject f 0x11").exit_code == 2);
}

TEST_CASE("table") {
    auto s = run_cli("table S 0..2 0..2");
    CHECK(s.exit_code == 0);
    CHECK(s.output.find("6") != std::string::npos);  // S(2,2)

    auto tq = run_cli("table Tq m=2 n=2");
    CHECK(tq.exit_code == 0);
    CHECK(tq.output.find("1 + q + q^2") != std::string::npos);

    auto bq = run_cli("table Bq n=2");
    CHECK(bq.exit_code == 0);
    CHECK(bq.output.find("1 + q") != std::string::npos);

    CHECK(run_cli("table X 0..2").exit_code == 2);
    CHECK(run_cli("table Tq n=0..2").exit_code == 2);
    CHECK(run_cli("table S 2..1").exit_code == 2);
}

TEST_CASE("render is deterministic and labels landmarks") {
    auto out1 = temp_path("r1.svg"), out2 = temp_path("r2.svg");
    CHECK(run_cli("render 0101 --out " + out1).exit_code == 0);
    CHECK(run_cli("render 0101 --out " + out2).exit_code == 0);
    CHECK(read_file(out1) == read_file(out2));
    CHECK(read_file(out1).find("<svg") == 0);

    auto traced = temp_path("rt.svg");
    CHECK(run_cli("render 0111000111 --trace g --out " + traced).exit_code == 0);
    std::string svg = read_file(traced);
    CHECK(svg.find(">N<") != std::string::npos);
    CHECK(svg.find(">R<") != std::string::npos);
    CHECK(svg.find(">Q<") != std::string::npos);
    // one root element, both panels inside it
    size_t roots = 0;
    for (size_t at = svg.find("<svg"); at != std::string::npos; at = svg.find("<svg", at + 1))
        ++roots;
    CHECK(roots == 1);
    CHECK(svg.find("g input") != std::string::npos);
    CHECK(svg.find("g output") != std::string::npos);

    auto fam = temp_path("fam.svg");
    CHECK(run_cli("render catalan:2 --out " + fam).exit_code == 0);
    CHECK(read_file(fam).find("0101") != std::string::npos);

    CHECK(run_cli("render 0101").exit_code == 2);  // missing --out
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    std::remove(traced.c_str());
    std::remove(fam.c_str());
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}
