#include <doctest.h>

#include "cli/commands.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using circhad::cli::run;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

// Candidate records with the chunk field removed, so chunked and unchunked
// runs can be compared.
std::set<std::string> records_without_chunk(const std::string& text) {
    std::set<std::string> out;
    for (const auto& line : lines_of(text)) {
        auto j = nlohmann::ordered_json::parse(line);
        if (j.contains("summary")) {
            continue;
        }
        j.erase("chunk");
        out.insert(j.dump());
    }
    return out;
}

}  // namespace

TEST_CASE("lambda") {
    CHECK(invoke({"lambda", "-n", "2", "-i", "1", "-j", "1", "-k", "0"}).out == "2\n");
    CHECK(invoke({"lambda", "-n", "8", "--weights", "8", "3", "3"}).out == "1\n");
    CHECK(invoke({"lambda", "-n", "4", "-i", "1", "-j", "2", "-k", "0"}).out == "0\n");
    CHECK(invoke({"lambda", "-n", "4", "-i", "1", "-j", "2", "-k", "0", "--format", "json"}).out ==
          "{\"n\":4,\"i\":1,\"j\":2,\"k\":0,\"lambda\":\"0\"}\n");
    CHECK(invoke({"lambda", "-n", "4"}).code == 2);
    CHECK(invoke({"lambda", "-n", "4", "-i", "9", "-j", "0", "-k", "0"}).code == 2);
    CHECK(invoke({"lambda", "-n", "4", "-i", "1", "-j", "1", "-k", "0", "--weights", "1", "1", "1"}).code == 2);
}

TEST_CASE("product") {
    CHECK(invoke({"product", "-n", "4", "-a", "1", "-b", "1"}).out == "[2,4]\n");
    CHECK(invoke({"product", "-n", "6", "-a", "6", "-b", "2"}).out == "[2]\n");
    CHECK(invoke({"product", "-n", "4", "-a", "2", "-b", "2", "--format", "json"}).out == "[0,2,4]\n");
    CHECK(invoke({"product", "-n", "4", "-a", "5", "-b", "2"}).code == 2);
}

TEST_CASE("autocorr") {
    CHECK(invoke({"autocorr", "-+++"}).out == "4 0 0 0 | sum=4 (2a−n)²=4\n");
    CHECK(invoke({"autocorr", "++++"}).out == "4 4 4 4 | sum=16 (2a−n)²=16\n");
    CHECK(invoke({"autocorr", "+-+-"}).out == "4 -4 4 -4 | sum=0 (2a−n)²=0\n");
    CHECK(invoke({"autocorr", "--hex", "n=4:e"}).out == "4 0 0 0 | sum=4 (2a−n)²=4\n");
    const auto json = invoke({"autocorr", "+-+-", "--format", "json"});
    CHECK(json.code == 0);
    const auto parsed = nlohmann::ordered_json::parse(json.out);
    CHECK(parsed["autocorrelation"] == nlohmann::json::array({4, -4, 4, -4}));
    CHECK(parsed.dump() + "\n" == json.out);
    CHECK(invoke({"autocorr", "+x+"}).code == 2);
}

TEST_CASE("search") {
    const auto full = invoke({"search", "-m", "1"});
    CHECK(full.code == 0);
    const auto lines = lines_of(full.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] ==
          R"({"n":4,"m":1,"weight":3,"sequence":"+++-","autocorrelation":[4,0,0,0],"orbit_size":4,"chunk":[0,1]})");
    CHECK(lines[1] ==
          R"({"n":4,"m":1,"weight":1,"sequence":"+---","autocorrelation":[4,0,0,0],"orbit_size":4,"chunk":[0,1]})");
    const auto summary = nlohmann::ordered_json::parse(lines[2]);
    CHECK(summary["summary"]["completed"] == true);
    CHECK(summary["summary"]["candidates_tested"] == 8);
    for (const auto& line : lines) {
        CHECK(nlohmann::ordered_json::parse(line).dump() == line);
    }

    for (const std::string total : {"2", "3", "7"}) {
        std::set<std::string> merged;
        for (int i = 0; i < std::stoi(total); ++i) {
            const auto part = invoke({"search", "-m", "1", "--chunk", std::to_string(i) + "/" + total});
            CHECK(part.code == 0);
            const auto recs = records_without_chunk(part.out);
            merged.insert(recs.begin(), recs.end());
        }
        CHECK(merged == records_without_chunk(full.out));
    }

    CHECK(invoke({"search", "-m", "2"}).code == 2);
    CHECK(invoke({"search", "-m", "2", "--no-turyn"}).code == 0);
    CHECK(invoke({"search", "-m", "1", "--chunk", "2/2"}).code == 2);
    CHECK(invoke({"search", "-m", "1", "--chunk", "x"}).code == 2);
    CHECK(invoke({"search", "-m", "1", "--sign", "sideways"}).code == 2);
    CHECK(invoke({"search", "-m", "1", "--jobs", "0"}).code == 2);
    CHECK(invoke({"search", "-m", "1", "--sign", "minus", "--format", "text"}).out.rfind("+--- weight=1", 0) == 0);
    CHECK(records_without_chunk(invoke({"search", "-m", "1", "--jobs", "2"}).out) == records_without_chunk(full.out));
}

TEST_CASE("search checkpoint and resume") {
    const auto path = std::filesystem::temp_directory_path() / "circhad_cli_checkpoint";
    std::filesystem::remove(path);

    const auto first = invoke({"search", "-m", "1", "--stop-after", "2", "--resume", path.string()});
    CHECK(first.code == 3);
    std::ifstream in(path);
    std::string saved;
    std::getline(in, saved);
    CHECK(saved == "2");

    const auto second = invoke({"search", "-m", "1", "--resume", path.string()});
    CHECK(second.code == 0);
    const auto lines = lines_of(second.out);
    REQUIRE_FALSE(lines.empty());
    const auto summary = nlohmann::ordered_json::parse(lines.back());
    CHECK(summary["summary"]["completed"] == true);
    CHECK(summary["summary"]["units_done"] == 6);

    std::set<std::string> union_of_runs = records_without_chunk(first.out);
    const auto rest = records_without_chunk(second.out);
    union_of_runs.insert(rest.begin(), rest.end());
    CHECK(union_of_runs == records_without_chunk(invoke({"search", "-m", "1"}).out));
    std::filesystem::remove(path);

    std::atomic<bool> stop{true};
    std::ostringstream out;
    std::ostringstream err;
    CHECK(run({"search", "-m", "1"}, out, err, &stop) == 3);
}

TEST_CASE("count") {
    CHECK(invoke({"count", "-m", "1"}).out == "reduced=8 unreduced=8\n");
    CHECK(invoke({"count", "-m", "3"}).out == "reduced=11130337920 unreduced=11135805120\n");
    CHECK(invoke({"count", "-m", "5", "--format", "json"}).out ==
          "{\"m\":5,\"reduced\":\"122896932216396321738079734080\","
          "\"unreduced\":\"122896942428272359193441185920\"}\n");
    CHECK(invoke({"count", "-m", "4"}).code == 2);
}

TEST_CASE("verify") {
    const auto sweep = invoke({"verify", "hadamard-sweep", "-n", "4"});
    CHECK(sweep.code == 0);
    CHECK(sweep.out.find("8 sequences / 2 orbits, weights {1,3}") != std::string::npos);
    CHECK(invoke({"verify", "eq1", "--max-n", "6"}).code == 0);
    CHECK(invoke({"verify", "eq2", "--max-n", "6"}).code == 0);
    CHECK(invoke({"verify", "lemma1", "--max-n", "8"}).code == 0);
    CHECK(invoke({"verify", "thm2", "--samples", "1000"}).code == 0);
    CHECK(invoke({"verify", "thm3", "--max-n", "10", "--samples", "1000"}).code == 0);
    CHECK(invoke({"verify", "diffset"}).code == 0);
    CHECK(invoke({"verify", "count"}).code == 0);
    CHECK(invoke({"verify", "nope"}).code == 2);

    // The maximal S-set suite reports its findings and fails.
    const auto maximal = invoke({"verify", "maximal", "--max-t", "1"});
    CHECK(maximal.code == 1);
    CHECK(maximal.out.find("FINDING n=4") != std::string::npos);

    const auto json = invoke({"verify", "hadamard-sweep", "-n", "4", "--format", "json"});
    CHECK(nlohmann::ordered_json::parse(json.out).dump() + "\n" == json.out);
}

TEST_CASE("output file and usage") {
    const auto path = std::filesystem::temp_directory_path() / "circhad_cli_output";
    CHECK(invoke({"product", "-n", "4", "-a", "1", "-b", "1", "-o", path.string()}).out.empty());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "[2,4]");
    std::filesystem::remove(path);

    CHECK(invoke({}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({"product", "-n", "4", "-a", "1", "-b", "1", "--format", "xml"}).code == 2);
}
