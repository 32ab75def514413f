#include "polyspace/chamber_db.hpp"
#include "polyspace/json_io.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace polyspace;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(POLYSPACE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("polyspace-test-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("CLI output matches the golden files") {
  struct Case {
    const char* args;
    const char* golden;
    int code;
  };
  const Case cases[] = {
      {"betti --lv 1,1,1,1,1 --json", "betti_pentagon.json", 0},
      {"betti --lv 1,1,3,3,3", "betti_pair_long.txt", 0},
      {"classify --lv 1,1,1,1,2 --subset 1,5 --json", "classify_wall.json", 0},
      {"present --lv 1,1,1,1,2 --json", "present_wall.json", 0},
      {"gf2dims --lv 1,1,1,1,1 --space n --json", "gf2dims_pentagon_spatial.json", 0},
      {"gf2dims --lv 1,1,1,1,1 --space mbar", "gf2dims_pentagon_planar.txt", 0},
      {"w1 --lv 1,1,1,1,1 --json", "w1_pentagon.json", 0},
      {"w1 --lv 1,1,1,2", "w1_square.txt", 0},
      {"compare --lv1 1,1,1,2 --lv2 1,2,2,2 --json", "compare_n4.json", 0},
      {"compare --lv1 1,1,1,1,3 --lv2 1,1,1,1,1", "compare_n5.txt", 0},
      {"sample-normal --n 6 --samples 2000 --seed 5 --json", "sample_n6.json", 0},
      {"gf2dims --lv 1,1,1,1,2 --json", "error_wall.json", 3},
      {"betti --lv 1,0,2", "error_zero.json", 3},
      {"betti --lv 1,x,2", "error_parse.json", 1},
      {"betti", "error_missing.json", 1},
  };
  for (const auto& c : cases) {
    CAPTURE(c.args);
    const auto r = run_cli(c.args);
    CHECK(r.code == c.code);
    CHECK(r.out == read_file(fs::path(GOLDEN_DIR) / c.golden));
  }
}

TEST_CASE("table subcommand reproduces the counts up to n = 7") {
  const auto r = run_cli("table --to 7 --json");
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  const std::size_t c[] = {2, 3, 7, 21, 135}, cs[] = {2, 1, 2, 7, 65};
  for (int i = 0; i < 5; ++i) {
    CHECK(j["rows"][i]["chambers"] == c[i]);
    CHECK(j["rows"][i]["normal_chambers"] == cs[i]);
  }
}

TEST_CASE("enumerate writes a database that audit reads back") {
  const fs::path db = scratch("chambers-6.jsonl");
  auto r = run_cli("enumerate --n 6 --db " + db.string() + " --json");
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["chambers"] == 21);
  const auto records = read_records(db);
  CHECK(records.size() == 21);
  CHECK(read_progress(db)->complete);
  r = run_cli("audit --db " + db.string() + " --json");
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["collisions"].empty());
  CHECK(j["round_trip_failures"] == 0);
}

TEST_CASE("an exhausted time budget exits with the resource code") {
  const fs::path db = scratch("chambers-8-budget.jsonl");
  const auto r = run_cli("enumerate --n 8 --split-depth 0 --max-seconds 0.000001 --db " + db.string());
  CHECK(r.code == 2);
  CHECK(Json::parse(r.out)["error"]["code"] == 2);
}

TEST_CASE("resume finishes an interrupted run without duplicates") {
  const fs::path db = scratch("chambers-7.jsonl");
  EnumerationOptions opts;
  opts.split_depth = 4;
  const auto full = enumerate_chambers(7, opts).records;

  // Simulate a crash: some tasks finished and recorded, one finished task
  // whose records were written but not yet acknowledged, and a torn line.
  std::vector<std::string> planned;
  std::map<std::string, std::vector<ChamberRecord>> by_task;
  EnumerationOptions probe = opts;
  probe.on_tasks_planned = [&](const std::vector<std::string>& ids) { planned = ids; };
  probe.on_task_complete = [&](const std::string& id, const std::vector<ChamberRecord>& rs) { by_task[id] = rs; };
  enumerate_chambers(7, probe);
  REQUIRE(planned.size() > 3);
  {
    std::ofstream out(db);
    for (std::size_t t = 0; t < 3; ++t)
      for (const auto& rec : by_task[planned[t]]) out << to_json(rec).dump() << '\n';
    out << "{\"n\":7,\"short_with";
    Json progress{{"schema_version", 1},        {"n", 7},
                  {"split_depth", 4},           {"complete", false},
                  {"tasks_total", planned.size()}, {"completed", {planned[0], planned[1]}}};
    std::ofstream(progress_path(db)) << progress.dump();
  }
  const auto resumed = enumerate_to_db(7, db, opts, true);
  CHECK(resumed.complete);
  CHECK(resumed.resumed_tasks == 2);
  const auto stored = read_records(db);
  REQUIRE(stored.size() == full.size());
  for (std::size_t i = 0; i < full.size(); ++i) CHECK(stored[i].signature == full[i].signature);

  // A mismatched split depth is refused.
  fs::remove(progress_path(db));
  Json progress{{"schema_version", 1}, {"n", 7}, {"split_depth", 3}, {"complete", false}, {"tasks_total", 1}, {"completed", Json::array()}};
  std::ofstream(progress_path(db)) << progress.dump();
  CHECK_THROWS(enumerate_to_db(7, db, opts, true));
}

TEST_CASE("records round-trip through JSON and corrupted ones are rejected") {
  const auto records = enumerate_chambers(5).records;
  for (const auto& r : records) {
    const auto back = record_from_json(Json::parse(to_json(r).dump()));
    CHECK(back.signature == r.signature);
    CHECK(back.witness == r.witness);
  }
  auto j = to_json(records[2]);
  j["betti"][0] = 7;
  CHECK_THROWS(record_from_json(j));
  j = to_json(records[2]);
  j["short_with_n"] = Json::array({"0x0"});
  CHECK_THROWS(record_from_json(j));
}

TEST_CASE("default database path honours the environment") {
  ::setenv("POLYSPACE_DB_DIR", "/tmp/somewhere", 1);
  CHECK(default_db_path(6) == fs::path("/tmp/somewhere/chambers-6.jsonl"));
  ::unsetenv("POLYSPACE_DB_DIR");
  CHECK(default_db_path(6).filename() == "chambers-6.jsonl");
}
