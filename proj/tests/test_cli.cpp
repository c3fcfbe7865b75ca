#include <sl2orbit/cli.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sl2orbit;
using nlohmann::json;

namespace {

// Runs a CLI invocation with std::cout captured.
struct RunResult {
    int exit_code = 0;
    std::string out;
};

RunResult run(const std::vector<std::string>& argv) {
    std::stringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    RunResult result;
    try {
        result.exit_code = cli::dispatch(argv);
    } catch (...) {
        std::cout.rdbuf(old);
        throw;
    }
    std::cout.rdbuf(old);
    result.out = captured.str();
    return result;
}

std::string write_fixture(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("sl2orbit_cli_" + name);
    std::ofstream file(path);
    file << text;
    return path.string();
}

const char* poly_b = R"({"vars":["a","b","c","d"],"terms":[{"c":"1","e":[0,1]}]})";
const char* poly_ab = R"({"vars":["a","b","c","d"],"terms":[{"c":"1","e":[1,1]}]})";
const char* poly_bb = R"({"vars":["a","b","c","d"],"terms":[{"c":"1","e":[0,2]}]})";
const char* poly_nonadm =
    R"({"vars":["a","b","c","d"],"terms":[{"c":"1","e":[2,2]},{"c":"1","e":[0,4]}]})";

}  // namespace

TEST_CASE("usage and argument errors") {
    CHECK(run({"--help"}).exit_code == 0);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({"classify"}).exit_code == 2);  // --in missing
    CHECK(run({"classify", "--in"}).exit_code == 2);
    CHECK(run({"molien", "--group", "Z"}).exit_code == 2);
}

TEST_CASE("verify-sums reports a clean grid") {
    auto result = run({"verify-sums", "--max", "6"});
    CHECK(result.exit_code == 0);
    json out = json::parse(result.out);
    CHECK(out["failures"] == 0);
    CHECK(out["cells"].get<long>() > 0);
    CHECK(run({"verify-sums", "--max", "0"}).exit_code == 2);
}

TEST_CASE("admissible subcommand") {
    std::string pass_path = write_fixture(
        "adm_pass.json", std::string("{\"generators\":[") + poly_ab + "],\"bound\":10}");
    auto pass = run({"admissible", "--in", pass_path});
    CHECK(pass.exit_code == 0);
    CHECK(json::parse(pass.out)["verdict"] == "pass");

    std::string fail_path = write_fixture(
        "adm_fail.json", std::string("{\"generators\":[") + poly_nonadm + "],\"bound\":10}");
    auto fail = run({"admissible", "--in", fail_path});
    CHECK(fail.exit_code == 1);
    json out = json::parse(fail.out);
    CHECK(out["verdict"] == "fail");
    CHECK(out["witness"]["s"] == 2);
}

TEST_CASE("classify subcommand") {
    // Algebra input: a shear of the torus orbit.
    std::string torus_path = write_fixture(
        "cls_torus.json",
        R"({"generators":[{"vars":["a","b","c","d"],"terms":[{"c":"1","e":[1,1]},{"c":"3","e":[0,2]}]}]})");
    auto torus = run({"classify", "--in", torus_path});
    CHECK(torus.exit_code == 0);
    json torus_label = json::parse(torus.out);
    CHECK(torus_label["variant"] == "Homogeneous");
    CHECK(torus_label["subgroup"] == "T");

    // Semigroup input.
    std::string cone_path = write_fixture("cls_cone.json", R"({"gens":[[0,1],[1,2],[2,3]]})");
    auto cone = run({"classify", "--in", cone_path});
    CHECK(cone.exit_code == 0);
    json cone_label = json::parse(cone.out);
    CHECK(cone_label["variant"] == "QF");
    CHECK(cone_label["q"] == "3/2");
    CHECK(cone_label["f"] == 1);
    CHECK(cone_label["stabilizer"] == "mu_1");

    // A well-formed but non-classifiable input is a failed check, not usage.
    std::string bad_path = write_fixture(
        "cls_bad.json", std::string("{\"generators\":[") + poly_nonadm + "],\"bound\":10}");
    auto bad = run({"classify", "--in", bad_path});
    CHECK(bad.exit_code == 1);
    CHECK(json::parse(bad.out).contains("error"));

    // Broken JSON is a usage error.
    std::string broken_path = write_fixture("cls_broken.json", "{\"generators\": [");
    CHECK(run({"classify", "--in", broken_path}).exit_code == 2);
}

TEST_CASE("hilbert subcommand") {
    auto result = run({"hilbert", "--q", "3/2", "--f", "1"});
    CHECK(result.exit_code == 0);
    json out = json::parse(result.out);
    CHECK(out["gens"] == json::parse("[[0,1],[1,2],[2,3]]"));
    CHECK(out["f"] == 1);
    CHECK(run({"hilbert", "--q", "3/2", "--f", "2"}).exit_code == 2);
}

TEST_CASE("gens subcommand") {
    std::string path =
        write_fixture("gens.json", std::string("{\"generators\":[") + poly_bb + "]}");
    auto result = run({"gens", "--in", path});
    CHECK(result.exit_code == 0);
    json out = json::parse(result.out);
    REQUIRE(out.is_array());
    CHECK(out.size() == 3);
}

TEST_CASE("molien and invariants subcommands") {
    auto molien = run({"molien", "--group", "A", "--f", "2", "--degree", "4"});
    CHECK(molien.exit_code == 0);
    json m = json::parse(molien.out);
    CHECK(m["group"] == "mu_2");
    CHECK(m["order"] == 2);
    CHECK(m["coefficients"] == json::parse("[1,0,3,0,5]"));

    auto inv = run({"invariants", "--group", "D", "--f", "2", "--degree", "2"});
    CHECK(inv.exit_code == 0);
    json i = json::parse(inv.out);
    CHECK(i["group"] == "D_2");
    CHECK(i["basis"].size() == 1);
}

TEST_CASE("decompose subcommand") {
    std::string path = write_fixture(
        "dec.json", std::string("{\"p1\":") + poly_b + ",\"p2\":" + poly_b + "}");
    auto result = run({"decompose", "--in", path});
    CHECK(result.exit_code == 0);
    json out = json::parse(result.out);
    REQUIRE(out["components"].size() == 2);
    CHECK(out["components"][0]["s"] == 0);
    CHECK(out["components"][0]["zero"] == false);
    CHECK(out["components"][1]["zero"] == true);
}

TEST_CASE("diagram subcommand renders deterministic svg") {
    std::string path = write_fixture(
        "diag.json", R"({"polygons":[{"label":"chain","points":[[0,2],[1,1],[2,0]]}]})");
    auto first = run({"diagram", "--in", path});
    auto second = run({"diagram", "--in", path});
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("<svg") != std::string::npos);
    CHECK(first.out.find("</svg>") != std::string::npos);

    // Pair input goes through the decomposition path.
    std::string pair_path = write_fixture(
        "diag_pair.json", std::string("{\"p1\":") + poly_ab + ",\"p2\":" + poly_ab + "}");
    auto svg_file =
        (std::filesystem::temp_directory_path() / "sl2orbit_cli_diag.svg").string();
    auto pair = run({"diagram", "--in", pair_path, "--svg", svg_file});
    CHECK(pair.exit_code == 0);
    std::ifstream rendered(svg_file);
    std::stringstream buffer;
    buffer << rendered.rdbuf();
    CHECK(buffer.str().find("<svg") != std::string::npos);
}
