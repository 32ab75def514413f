#include "polyspace/chamber_db.hpp"

#include "polyspace/errors.hpp"
#include "polyspace/json_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>

namespace polyspace {
namespace {

namespace fs = std::filesystem;

void write_progress(const fs::path& db, const Progress& p) {
  Json j{{"schema_version", kSchemaVersion},
         {"n", p.n},
         {"split_depth", p.split_depth},
         {"complete", p.complete},
         {"tasks_total", p.tasks_total},
         {"completed", p.completed}};
  const fs::path target = progress_path(db);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

void sort_unique(std::vector<ChamberRecord>& records) {
  std::sort(records.begin(), records.end(),
            [](const ChamberRecord& a, const ChamberRecord& b) { return a.signature < b.signature; });
  records.erase(std::unique(records.begin(), records.end(),
                            [](const ChamberRecord& a, const ChamberRecord& b) { return a.signature == b.signature; }),
                records.end());
}

}  // namespace

fs::path default_db_path(int n) {
  const char* dir = std::getenv("POLYSPACE_DB_DIR");
  const fs::path base = dir && *dir ? fs::path(dir) : fs::current_path();
  return base / ("chambers-" + std::to_string(n) + ".jsonl");
}

fs::path progress_path(const fs::path& db) { return fs::path(db.string() + ".progress.json"); }

std::vector<ChamberRecord> read_records(const fs::path& db) {
  std::ifstream in(db);
  if (!in) throw std::runtime_error("cannot open chamber database " + db.string());
  std::vector<ChamberRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error&) {
      if (in.peek() == std::char_traits<char>::eof()) break;
      throw std::runtime_error("corrupt line in " + db.string());
    }
    out.push_back(record_from_json(j));
  }
  return out;
}

void write_records(const fs::path& db, std::vector<ChamberRecord> records) {
  sort_unique(records);
  const fs::path tmp = db.string() + ".tmp";
  {
    std::ofstream out(tmp);
    for (const auto& r : records) out << to_json(r).dump() << '\n';
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, db);
}

std::optional<Progress> read_progress(const fs::path& db) {
  std::ifstream in(progress_path(db));
  if (!in) return std::nullopt;
  const Json j = Json::parse(in);
  Progress p;
  p.n = j.at("n").get<int>();
  p.split_depth = j.at("split_depth").get<int>();
  p.complete = j.at("complete").get<bool>();
  p.tasks_total = j.at("tasks_total").get<std::size_t>();
  for (const auto& id : j.at("completed")) p.completed.insert(id.get<std::string>());
  return p;
}

DbRunResult enumerate_to_db(int n, const fs::path& db, EnumerationOptions options, bool resume) {
  DbRunResult result;
  Progress progress;
  progress.n = n;
  progress.split_depth = options.split_depth;
  std::vector<ChamberRecord> previous;

  if (resume) {
    if (auto p = read_progress(db)) {
      if (p->n != n) throw PreconditionError("resume: progress file belongs to n = " + std::to_string(p->n));
      if (p->split_depth != options.split_depth)
        throw PreconditionError("resume: split depth differs from the interrupted run (" +
                                std::to_string(p->split_depth) + ")");
      progress = *p;
      if (fs::exists(db)) previous = read_records(db);
    }
  }
  if (progress.complete) {
    sort_unique(previous);
    result.records = std::move(previous);
    result.complete = true;
    result.resumed_tasks = progress.completed.size();
    return result;
  }
  result.resumed_tasks = progress.completed.size();
  options.skip_tasks = progress.completed;

  // Rewrite what survived (dropping any torn line) before appending.
  {
    std::ofstream out(db, std::ios::trunc);
    for (const auto& r : previous) out << to_json(r).dump() << '\n';
  }
  std::ofstream append(db, std::ios::app);
  std::mutex lock;
  options.on_tasks_planned = [&](const std::vector<std::string>& ids) {
    std::lock_guard guard(lock);
    progress.tasks_total = ids.size();
    write_progress(db, progress);
  };
  options.on_task_complete = [&](const std::string& id, const std::vector<ChamberRecord>& records) {
    std::lock_guard guard(lock);
    for (const auto& r : records) append << to_json(r).dump() << '\n';
    append.flush();
    if (!append) throw std::runtime_error("cannot append to " + db.string());
    progress.completed.insert(id);
    write_progress(db, progress);
  };

  auto run = enumerate_chambers(n, options);
  append.close();
  result.stats = run.stats;
  result.complete = run.complete;
  previous.insert(previous.end(), std::make_move_iterator(run.records.begin()),
                  std::make_move_iterator(run.records.end()));
  sort_unique(previous);
  if (run.complete) {
    write_records(db, previous);
    progress.complete = true;
    write_progress(db, progress);
  }
  result.records = std::move(previous);
  return result;
}

std::vector<ChamberRecord> load_or_enumerate(int n, const fs::path& db, const EnumerationOptions& options) {
  if (fs::exists(db)) {
    const auto p = read_progress(db);
    if (!p || p->complete) {
      auto records = read_records(db);
      for (const auto& r : records)
        if (r.signature.n != n) throw PreconditionError("database " + db.string() + " holds records for another n");
      return records;
    }
  }
  return enumerate_chambers(n, options).records;
}

}  // namespace polyspace
