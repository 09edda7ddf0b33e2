#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oig/io.hpp"
#include "oigcli.hpp"
#include "support.hpp"

using namespace oig;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path =
        (std::filesystem::temp_directory_path() / ("oig_test_" + name)).string();
    std::ofstream f(path);
    f << content;
    return path;
}

struct cli_result {
    int code;
    std::string out, err;
};

cli_result cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("set-system JSON round trip") {
    set_system sys = testing::colinear_system();
    json j = to_json(sys);
    CHECK(set_system_from_json(j) == sys);
    // canonical member order in the emitted JSON
    CHECK(j["feasible"][0] == json::array());
    CHECK(j["feasible"][1] == json::array({"x"}));
    // byte-determinism
    CHECK(j.dump() == to_json(set_system_from_json(j)).dump());
}

TEST_CASE("bundle JSON round trip") {
    oriented_system o = testing::colinear_oig();
    json j = bundle_json(o);
    auto [sys, covs] = bundle_from_json(j);
    CHECK(sys == o.system());
    CHECK(covs == o.strings());
    oriented_system o2 = oriented_system::validate(sys, covs);
    CHECK(bundle_json(o2).dump() == j.dump());
}

TEST_CASE("arrangement and point JSON round trips") {
    rational_arrangement arr(2, {{rational(-3), rational(1)}, {rational(1) / 2, rational(1)}});
    json j = to_json(arr);
    rational_arrangement back = arrangement_from_json(j);
    CHECK(back.forms() == arr.forms());
    CHECK(to_json(back).dump() == j.dump());

    point_configuration pts = testing::colinear_points();
    json pj = to_json(pts);
    point_configuration pback = points_from_json(pj);
    CHECK(pback.points == pts.points);
    CHECK(pback.labels == pts.labels);

    CHECK_THROWS_AS(arrangement_from_json(json::parse(R"({"d": 1})")), error);
}

TEST_CASE("covector JSON") {
    oriented_system o = testing::colinear_oig();
    int i = o.find(sign_vec_from_string("0++"));
    json j = covector_json(o, i);
    CHECK(j["signs"] == "0++");
    CHECK(j["support_xi"] == json::array({"x"}));
}

TEST_CASE("dot exports") {
    flat_lattice L = flat_lattice::build(testing::colinear_system());
    std::string dot = lattice_dot(L);
    CHECK(dot.find("graph flats") != std::string::npos);
    CHECK(dot.find("{x,y,z}") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
}

TEST_CASE("cli check") {
    std::string path = write_temp("colinear.json", to_json(testing::colinear_system()).dump());
    cli_result r = cli({"check", "--class", "interval_greedoid", path});
    CHECK(r.code == 0);
    CHECK(r.out == "passed\n");

    std::string bad = write_temp("bad.json",
                                 R"({"ground": ["a","b"], "feasible": [[], ["a","b"]]})");
    r = cli({"check", "--class", "accessible", bad});
    CHECK(r.code == 1);
    CHECK(r.out.find("failed") == 0);
    CHECK(r.out.find("IG1") != std::string::npos);

    r = cli({"check", "--class", "nonsense", bad});
    CHECK(r.code == 2);

    std::string broken = write_temp("broken.json", "{not json");
    r = cli({"check", "--class", "matroid", broken});
    CHECK(r.code == 2);

    r = cli({"check", "--class", "matroid", "no_such_file.json"});
    CHECK(r.code == 2);
}

TEST_CASE("cli orient reports witnesses") {
    oriented_system o = testing::colinear_oig();
    std::vector<std::string> covs = o.strings();
    std::erase(covs, "0--");  // drop one of a negation pair
    std::string path = write_temp("broken_bundle.json", bundle_json(o.system(), covs).dump());
    cli_result r = cli({"orient", path});
    CHECK(r.code == 1);
    CHECK(r.out.find("OG2") != std::string::npos);
    CHECK(r.out.find("0++") != std::string::npos);

    std::string good = write_temp("good_bundle.json", bundle_json(o).dump());
    r = cli({"orient", good});
    CHECK(r.code == 0);
    CHECK(r.out == "passed\n");
}

TEST_CASE("cli pipeline determinism") {
    std::string points = write_temp("points.json", to_json(testing::colinear_points()).dump());
    cli_result a = cli({"from-points", points});
    cli_result b = cli({"from-points", points});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    // the produced bundle re-ingests and re-emits identically
    json bundle = json::parse(a.out);
    auto [sys, covs] = bundle_from_json(bundle);
    CHECK(bundle_json(sys, covs).dump(2) + "\n" == a.out);
}

TEST_CASE("cli sphere and flags") {
    std::string bundle =
        write_temp("colinear_bundle.json", bundle_json(testing::colinear_oig()).dump());
    cli_result r = cli({"sphere", bundle});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["thin"] == true);
    CHECK(j["cells_by_rank"] == json::array({6, 8, 4}));
    CHECK(j["homology"]["euler"] == 2);
    CHECK(j["homology"]["reduced_betti"] == json::array({0, 0, 1}));
    CHECK(j["sphere_evidence"] == true);

    r = cli({"flags", bundle});
    CHECK(r.code == 0);
    for (const json& row : json::parse(r.out)) CHECK(row["observed"] == row["predicted"]);

    r = cli({"flags", bundle, "--chain", R"([[], ["x","y","z"]])"});
    CHECK(r.code == 0);
    json rows = json::parse(r.out);
    CHECK(rows.size() == 1);
    CHECK(rows[0]["observed"] == 4);
}

TEST_CASE("cli rco and topes") {
    std::string bundle =
        write_temp("colinear_bundle2.json", bundle_json(testing::colinear_oig()).dump());
    cli_result r = cli({"rco", bundle, "--base", "+1+", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out == "verified\n");

    r = cli({"topes", bundle, "--format", "dot"});
    CHECK(r.code == 0);
    CHECK(r.out.find("graph topes") == 0);

    r = cli({"rco", bundle, "--base", "000"});
    CHECK(r.code == 2);  // not a tope
}
