#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "b3img/cli.hpp"
#include "b3img/json_io.hpp"

using namespace b3img;

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

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("b3img_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("classify examples") {
  auto odd = run({"classify", "--dim", "3", "--eig", "0/1,1/7,5/7"});
  REQUIRE(odd.code == kExitOk);
  const Json j = Json::parse(odd.out);
  CHECK(j["kind"] == "Finite");
  CHECK(j["rule"] == rules::kPrimitiveDim3Odd);
  CHECK(j["parity"] == "Odd");

  auto small = run({"classify", "--dim", "4", "--eig", "0/1,1/4,1/2,3/4"});
  REQUIRE(small.code == kExitOk);
  CHECK(Json::parse(small.out)["rule"] == rules::kSmallProjectiveOrder);

  auto block = run({"classify", "--dim", "4", "--eig", "0/1,1/2,1/10,3/5", "--d-sign", "-"});
  REQUIRE(block.code == kExitOk);
  const Json b = Json::parse(block.out);
  CHECK(b["kind"] == "Finite");
  CHECK(b["o_u"] == 5);
  CHECK(b["D"] == "-1");

  auto table = run({"classify", "--dim", "3", "--eig", "0/1,1/7,2/7", "--format", "table"});
  CHECK(table.code == kExitOk);
  CHECK(table.out.find("kind     Infinite") != std::string::npos);

  auto nonroot = run({"classify", "--dim", "2", "--eig", "0/1,1/3", "--non-root"});
  CHECK(Json::parse(nonroot.out)["rule"] == rules::kNonRootOrRepeated);
}

TEST_CASE("classify input errors exit 2") {
  CHECK(run({"classify", "--dim", "3", "--eig", "0/1,1/7"}).code == kExitInputError);
  CHECK(run({"classify", "--dim", "3", "--eig", "0/1,x,1/7"}).code == kExitInputError);
  CHECK(run({"classify", "--dim", "7", "--eig", "0/1"}).code == kExitInputError);
  CHECK(run({"classify", "--dim", "3", "--eig", "0/1,1/7,5/7", "--d-sign", "-"}).code == kExitInputError);
  CHECK(run({"classify", "--dim", "3", "--eig", "0/1,1/7,5/7", "--format", "csv"}).code == kExitInputError);
  CHECK(run({"classify", "--eig", "0/1"}).code == kExitInputError);
  CHECK(run({"nonsense"}).code == kExitInputError);
  CHECK(run({}).code == kExitInputError);
  const auto bad = run({"classify", "--dim", "3", "--eig", "0/1,1/0,1/7"});
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("verdict JSON round trip") {
  const std::vector<std::vector<std::string>> cases{
      {"classify", "--dim", "3", "--eig", "0/1,1/7,5/7"},
      {"classify", "--dim", "4", "--eig", "0/1,1/2,1/10,3/5", "--d-sign", "+"},
      {"classify", "--dim", "4", "--eig", "0/1,1/9,2/9,4/9"},
      {"classify", "--dim", "5", "--eig", "0/1,1/11,2/11,4/11,7/11", "--gamma", "1/11"},
      {"classify", "--dim", "2", "--eig", "0/1,1/3"},
      {"classify", "--dim", "3", "--eig", "0/1,1/6,1/3"},
  };
  for (const auto& args : cases) {
    const auto r = run(args);
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    const Verdict v = j.get<Verdict>();
    CHECK(Json(v) == j);
    CHECK(Json(v).dump(2) + "\n" == r.out);
  }
}

TEST_CASE("closure command") {
  auto so7 = run({"closure", "--builder", "so7", "--ell", "14", "--bound", "100000"});
  REQUIRE(so7.code == kExitOk);
  const Json j = Json::parse(so7.out);
  CHECK(j["outcome"] == "Completed");
  CHECK(j["order"] == 168);
  CHECK(j["stats"]["products"].get<std::uint64_t>() > 0);
  CHECK(Json(j.get<ClosureResult>()) == j);

  auto d3 = run({"closure", "--builder", "d3", "--theta", "1/7", "--phi", "3/7"});
  REQUIRE(d3.code == kExitOk);
  CHECK(1176 % Json::parse(d3.out)["order"].get<std::int64_t>() == 0);

  auto block = run({"closure", "--builder", "d4block", "--u", "1/7", "--d-sign", "-", "--bound", "1000"});
  CHECK(block.code == kExitExceededBound);
  CHECK(Json::parse(block.out)["outcome"] == "ExceededBound");

  CHECK(run({"closure", "--builder", "d4block", "--u", "1/7"}).code == kExitInputError);
  CHECK(run({"closure", "--builder", "d4block", "--u", "1/4", "--d-sign", "+"}).code == kExitInputError);
  CHECK(run({"closure", "--builder", "so7", "--ell", "13"}).code == kExitInputError);
  CHECK(run({"closure", "--builder", "so7", "--ell", "14", "--d-sign", "-"}).code == kExitInputError);
  CHECK(run({"closure", "--builder", "gl9"}).code == kExitInputError);
  CHECK(run({"closure", "--builder", "so7", "--ell", "14", "--bound", "0"}).code == kExitInputError);
}

TEST_CASE("closure dump writes generators and elements") {
  const auto path = temp_file("dump.json");
  auto r = run({"closure", "--builder", "d4block", "--u", "1/6", "--d-sign", "+", "--dump", path.string()});
  REQUIRE(r.code == kExitOk);
  std::ifstream in(path);
  const Json dump = Json::parse(in);
  REQUIRE(dump["generators"].size() == 2);
  const CycMatrix a = matrix_from_json(dump["generators"][0]);
  const CycMatrix b = matrix_from_json(dump["generators"][1]);
  CHECK(a * b * a == b * a * b);
  CHECK(dump["elements"].size() == Json::parse(r.out)["order"].get<std::size_t>());
  std::filesystem::remove(path);
}

TEST_CASE("qg command") {
  auto r = run({"qg", "--family", "SO7spin", "--ell", "14"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  for (const char* key : {"family", "ell", "spec", "verdict", "closure", "expectation_quote", "agreement"})
    CHECK(j.contains(key));
  CHECK(j["agreement"] == true);
  CHECK(j["closure"]["order"] == 168);
  CHECK(run({"qg", "--family", "F4", "--ell", "22", "--format", "table"}).out.find("agreement    true") !=
        std::string::npos);
  CHECK(run({"qg", "--family", "F4", "--ell", "20"}).code == kExitInputError);
  CHECK(run({"qg", "--family", "E8", "--ell", "20"}).code == kExitInputError);
}

TEST_CASE("output redirection") {
  const auto path = temp_file("verdict.json");
  auto r = run({"classify", "--dim", "3", "--eig", "0/1,1/7,5/7", "--output", path.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(Json::parse(in)["kind"] == "Finite");
  std::filesystem::remove(path);
}

TEST_CASE("sweep rows and determinism") {
  const auto first = run({"sweep", "--dim", "4", "--max-order", "12"});
  const auto second = run({"sweep", "--dim", "4", "--max-order", "12"});
  REQUIRE(first.code == kExitOk);
  CHECK(first.out == second.out);
  CHECK(first.out.rfind("dim,eigenvalues,po,pattern,rule,kind\n", 0) == 0);

  SUBCASE("d4, m = 12: gap orders without a pattern are Undecidable") {
    const auto rows = csv_rows(first.out);
    CHECK(rows.size() == 165);  // C(11, 3)
    for (const auto& row : rows) {
      REQUIRE(row.size() == 6);
      if (row[2] == "-" || !row[3].empty()) continue;
      const int po = std::stoi(row[2]);
      if ((po >= 6 && po <= 10) || po == 12) CHECK(row[5] == "Undecidable");
    }
  }
  SUBCASE("d3, m = 7: po 7 rows are decided") {
    for (const auto& row : csv_rows(run({"sweep", "--dim", "3", "--max-order", "7"}).out)) {
      CHECK(row[5] != "Undecidable");
      if (row[2] == "7") CHECK((row[5] == "Finite" || row[5] == "Infinite"));
    }
  }
  SUBCASE("d2: Finite exactly when po <= 5") {
    for (int m : {5, 7, 8, 12, 30}) {
      for (const auto& row : csv_rows(run({"sweep", "--dim", "2", "--max-order", std::to_string(m)}).out)) {
        const int po = std::stoi(row[2]);
        CHECK((row[5] == "Finite") == (po <= 5));
      }
    }
  }
  SUBCASE("json format parses") {
    const auto r = run({"sweep", "--dim", "3", "--max-order", "9", "--format", "json"});
    const Json j = Json::parse(r.out);
    CHECK(j.size() == 28);  // C(8, 2)
    for (const auto& row : j) CHECK(Json(row["verdict"].get<Verdict>()) == row["verdict"]);
  }
  CHECK(run({"sweep", "--dim", "3", "--max-order", "1"}).code == kExitInputError);
}

TEST_CASE("installed tool returns the documented exit codes") {
  const char* tool = std::getenv("B3IMG_TOOL");
  if (!tool) return;
  auto status = [&](const std::string& args) {
    const int raw = std::system((std::string(tool) + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("classify --dim 3 --eig 0/1,1/7,5/7") == 0);
  CHECK(status("classify --dim 3 --eig 0/1,1/7") == 2);
  CHECK(status("closure --builder d4block --u 1/7 --d-sign - --bound 1000") == 3);
}
