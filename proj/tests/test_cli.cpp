#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "citenorm/cli.hpp"
#include "citenorm/report_io.hpp"

using namespace citenorm;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content) {
    auto path = fs::temp_directory_path() / ("citenorm_cli_" + name);
    std::ofstream(path, std::ios::binary) << content;
    return path;
}

const std::string kTwoUnits =
    "unit_id,pub_id,year,doc_type,citations,self_citations,jcs,fcs\n"
    "a,1,2001,Article,17,2,16.9,23.7\n"
    "a,2,2001,Article,4,0,3.1,3.0\n"
    "a,3,2002,Article,6,1,4.8,4.1\n"
    "a,4,2002,Article,8,0,4.8,4.1\n"
    "b,1,2001,Article,1,0,2.0,2.5\n"
    "b,2,2001,Review,3,1,2.0,2.5\n"
    "b,3,2001,Editorial,9,0,2.0,2.5\n";

}  // namespace

TEST_CASE("evaluate the bundled fixture", "[cli]") {
    auto r = run({"evaluate", "--fixture", "appendix"});
    CHECK(r.code == cli::kExitOk);
    for (const char* v : {"10.74", "15.23", "0.71", "0.91", "0.11"}) CHECK(r.out.find(v) != std::string::npos);
}

TEST_CASE("field basis on journal-only data is a data error", "[cli]") {
    auto r = run({"evaluate", "--fixture", "appendix", "--basis", "field"});
    CHECK(r.code == cli::kExitDataError);
    CHECK(r.err.find("MissingFieldRate") != std::string::npos);
}

TEST_CASE("usage errors", "[cli]") {
    CHECK(run({}).code == cli::kExitUsageError);
    CHECK(run({"evaluate"}).code == cli::kExitUsageError);
    CHECK(run({"evaluate", "--fixture", "appendix", "--format", "xml"}).code == cli::kExitUsageError);
    CHECK(run({"test", "--fixture", "appendix"}).code == cli::kExitUsageError);
    CHECK(run({"evaluate", "--fixture", "appendix", "--exclude-doc-types", "poem"}).code == cli::kExitUsageError);
    CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("missing input file", "[cli]") {
    auto r = run({"evaluate", "--input", "/nonexistent/none.csv"});
    CHECK(r.code == cli::kExitDataError);
    CHECK(r.err.find("/nonexistent/none.csv") != std::string::npos);
}

TEST_CASE("JSON reports round-trip", "[cli]") {
    auto path = temp_file("two.csv", kTwoUnits);
    auto r = run({"evaluate", "--input", path.string(), "--format", "json", "--basis", "both",
                  "--self-citations", "exclude"});
    REQUIRE(r.code == cli::kExitOk);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["reports"].size() == 2);
    auto first = j["reports"][0].get<IndicatorReport>();
    CHECK(first.unit_id == "a");
    CHECK(first.c == 32);
    nlohmann::json again = first;
    CHECK(again == j["reports"][0]);
    // Editorial excluded by default.
    CHECK(j["reports"][1]["p"] == 2);
}

TEST_CASE("rank, compare and test commands", "[cli]") {
    auto path = temp_file("two.csv", kTwoUnits);
    auto rank = run({"rank", "--input", path.string(), "--indicator", "mor", "--format", "csv"});
    CHECK(rank.code == cli::kExitOk);
    CHECK(rank.out.find("a,") != std::string::npos);

    auto cmp = run({"compare", "--input", path.string()});
    CHECK(cmp.code == cli::kExitDataError);
    CHECK(cmp.err.find("TooFewUnits") != std::string::npos);

    auto kw = run({"test", "--input", path.string(), "--kruskal-wallis", "--against-unity", "--pairwise"});
    CHECK(kw.code == cli::kExitOk);

    auto single = run({"test", "--fixture", "appendix", "--kruskal-wallis"});
    CHECK(single.code == cli::kExitDataError);
    CHECK(single.err.find("TooFewGroups") != std::string::npos);
}

TEST_CASE("compare precomputed pairs with plot data", "[cli]") {
    auto pairs = temp_file("pairs.csv",
                           "unit_id,rom,mor\nA,0.71,0.91\nB,0.92,1.01\nC,1.05,1.14\nD,1.18,1.30\n");
    auto plot = fs::temp_directory_path() / "citenorm_cli_plot.csv";
    auto r = run({"compare", "--pairs", pairs.string(), "--plot-data", plot.string()});
    CHECK(r.code == cli::kExitOk);
    std::ifstream in(plot);
    std::string header;
    std::getline(in, header);
    CHECK(header == "unit_id,rom,mor,rel_diff_pct,rank_rom,rank_mor");
}

TEST_CASE("export the fixture", "[cli]") {
    auto path = fs::temp_directory_path() / "citenorm_cli_fixture.csv";
    auto r = run({"export-fixture", "--out", path.string()});
    REQUIRE(r.code == cli::kExitOk);
    std::ifstream in(path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 66);

    auto back = run({"evaluate", "--input", path.string()});
    CHECK(back.code == cli::kExitOk);
    CHECK(back.out.find("10.74") != std::string::npos);
}
