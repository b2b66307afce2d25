#include "qcatalan/serialize.hpp"
#include "qcatalan/svg.hpp"

#include "schema.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

using namespace qcatalan;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

std::string golden(const std::string& name) { return read_file(std::string(QC_GOLDEN_DIR) + "/" + name); }

// elapsed_ms is the one nondeterministic field; zero it before comparing.
Json normalized(Json j) {
    if (j.is_array())
        for (auto& r : j) r["elapsed_ms"] = 0.0;
    else if (j.is_object() && j.contains("elapsed_ms"))
        j["elapsed_ms"] = 0.0;
    return j;
}

}  // namespace

TEST_CASE("qpoly json round trip") {
    QPoly p = QPoly::from_coeffs(-1, {1, 0, 2});
    Json j = to_json(p);
    CHECK(j["min_deg"] == -1);
    CHECK(j["coeffs"] == Json::array({"1", "0", "2"}));
    CHECK(qpoly_from_json(j) == p);
    CHECK(schema::validate_qpoly(j));

    QPoly zero;
    CHECK(to_json(zero) == Json{{"min_deg", 0}, {"coeffs", Json::array()}});
    CHECK(qpoly_from_json(to_json(zero)) == zero);

    QPoly big = QPoly::monomial(BigInt(1) << 100, 3);
    QPoly back = qpoly_from_json(to_json(big));
    CHECK(back == big);
    CHECK(back.coeff(3) == BigInt(1) << 100);

    CHECK_THROWS_AS(qpoly_from_json(Json{{"coeffs", Json::array()}}), DomainError);
}

TEST_CASE("qpoly json golden") {
    QPoly p = QPoly::from_coeffs(-1, {1, 0, 2});
    CHECK(to_json(p).dump(2) + "\n" == golden("qpoly.json"));
}

TEST_CASE("report json shape") {
    auto rows = verify_theorem_main(3);
    Json arr = to_json(rows);
    std::string why;
    CHECK(schema::validate_report_array(arr, &why));
    INFO(why);

    // one pass row, no witness
    CHECK(arr[0]["status"] == "pass");
    CHECK(arr[0]["witness"].is_null());
    // the printed form is reported with both sides
    bool saw_reported = false;
    for (const auto& r : arr)
        if (r["status"] == "reported") {
            saw_reported = true;
            CHECK(r["witness"].is_object());
            CHECK(schema::validate_qpoly(r["witness"]["lhs"]));
            CHECK(schema::validate_qpoly(r["witness"]["rhs"]));
        }
    CHECK(saw_reported);
}

TEST_CASE("report json golden") {
    auto rows = verify_theorem_main(2);  // three rows: proof, printed, parts
    Json arr = normalized(to_json(rows));
    CHECK(arr.dump(2) + "\n" == golden("report_theorem_n2.json"));
}

TEST_CASE("trace json golden and shape") {
    BijectionTrace t = trace("f", parse_path("0111"));
    Json j = to_json(t);
    std::string why;
    CHECK(schema::validate_trace(j, &why));
    INFO(why);
    CHECK(j["input"] == "0111");
    CHECK(j["output"] == "0011");
    CHECK(j.dump(2) + "\n" == golden("trace_f_0111.json"));

    Json g2 = to_json(trace("g", parse_path("0101100111")));
    CHECK(schema::validate_trace(g2, &why));
    CHECK(g2["case"] == "case2");
    CHECK(g2["landmarks"]["sigma"] == Json::array({3, 5}));
}

TEST_CASE("path listing json") {
    auto paths = all_paths_in(FamilySpec::catalan(2));
    Json with_stats = path_listing_json(paths, true);
    Json bare = path_listing_json(paths, false);
    std::string why;
    CHECK(schema::validate_path_listing(with_stats, true, &why));
    INFO(why);
    CHECK(schema::validate_path_listing(bare, false, &why));
    CHECK(bare == Json::array({"0011", "0101"}));
    CHECK(with_stats[0]["path"] == "0011");
    CHECK(with_stats[0]["h_plus"] == 2);
    CHECK(with_stats.dump(2) + "\n" == golden("paths_catalan2.json"));

    Json ballot = path_listing_json(all_paths_in(FamilySpec::ballot(2, 2)), true);
    CHECK(ballot[0]["h_minus"].is_null());
}

TEST_CASE("csv output") {
    CHECK(report_csv_header() == "identity,params,status,note,lhs,rhs,elapsed_ms");
    auto rows = verify_eq5(3);
    std::string csv = reports_csv(rows);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == report_csv_header());
    std::getline(lines, line);
    CHECK(line.rfind("eq5,n=2;grounding=closed_form,pass,,,,", 0) == 0);

    // a reported row carries its note and both rendered sides
    auto printed = verify_theorem_main(2);
    std::string row;
    for (const auto& r : printed)
        if (r.identity == "theorem_main_printed") row = report_csv_row(r);
    CHECK(row.find("reported") != std::string::npos);
    CHECK(row.find("1 + q + q^2") != std::string::npos);
    CHECK(row.find("2*q + q^2") != std::string::npos);
}

TEST_CASE("csv golden") {
    auto rows = verify_eq5(3);
    for (auto& r : rows) r.elapsed_ms = 0;
    CHECK(reports_csv(rows) == golden("verify_eq5_n3.csv"));
}

TEST_CASE("svg rendering is deterministic") {
    LatticePath p = parse_path("0101");
    std::string a = render_path_svg(p);
    std::string b = render_path_svg(p);
    CHECK(a == b);
    CHECK(a.find("<svg") == 0);
    CHECK(a.find("polyline") != std::string::npos);
    CHECK(a == golden("render_0101.svg"));

    BijectionTrace t = trace("f", parse_path("0111"));
    std::string with_marks = render_path_svg(t.input, t.landmarks, "f input");
    CHECK(with_marks.find(">R<") != std::string::npos);

    std::string fam = render_family_svg(FamilySpec::catalan(2));
    CHECK(fam.find("0011") != std::string::npos);
    CHECK(fam.find("0101") != std::string::npos);
}
