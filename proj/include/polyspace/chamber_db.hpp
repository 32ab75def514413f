#pragma once

#include "polyspace/enumeration.hpp"

#include <filesystem>
#include <set>
#include <string>
#include <vector>

namespace polyspace {

/// `chambers-<n>.jsonl` inside $POLYSPACE_DB_DIR, or the working directory.
std::filesystem::path default_db_path(int n);
/// Sidecar listing finished task ids: `<db>.progress.json`.
std::filesystem::path progress_path(const std::filesystem::path& db);

/// Reads every complete line; a torn final line from an interrupted run is ignored.
std::vector<ChamberRecord> read_records(const std::filesystem::path& db);
/// Writes the records sorted by signature, replacing the file atomically.
void write_records(const std::filesystem::path& db, std::vector<ChamberRecord> records);

struct Progress {
  int n = 0;
  int split_depth = 0;
  bool complete = false;
  std::size_t tasks_total = 0;
  std::set<std::string> completed;
};

std::optional<Progress> read_progress(const std::filesystem::path& db);

struct DbRunResult {
  std::vector<ChamberRecord> records;
  bool complete = false;
  EnumerationStats stats;
  std::size_t resumed_tasks = 0;
};

/// Enumerates into `db`, appending each finished task and recording it in the
/// sidecar. With `resume`, tasks already listed there are skipped and their
/// records are read back. A finished run rewrites the file in canonical order.
DbRunResult enumerate_to_db(int n, const std::filesystem::path& db, EnumerationOptions options, bool resume);

/// Records for n from an existing complete database, else a fresh enumeration.
std::vector<ChamberRecord> load_or_enumerate(int n, const std::filesystem::path& db, const EnumerationOptions& options);

}  // namespace polyspace
