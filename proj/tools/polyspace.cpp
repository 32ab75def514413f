// Command-line frontend for polygon-space invariants and chamber databases.

#include "polyspace/chamber_db.hpp"
#include "polyspace/cohomology.hpp"
#include "polyspace/combinatorics.hpp"
#include "polyspace/enumeration.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/graded_ring.hpp"
#include "polyspace/json_io.hpp"
#include "polyspace/walker.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace polyspace;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kResource = 2, kPrecondition = 3 };

int emit_error(int code, const std::string& kind, const std::string& message) {
  Json j{{"schema_version", kSchemaVersion}, {"error", {{"code", code}, {"kind", kind}, {"message", message}}}};
  std::cout << j.dump() << '\n';
  return code;
}

void print(const Json& body, bool json, const std::string& text) {
  if (json) {
    Json out{{"schema_version", kSchemaVersion}};
    for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
    std::cout << out.dump() << '\n';
  } else {
    std::cout << text;
  }
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string join_masks(const std::vector<SubsetMask>& masks) {
  std::ostringstream os;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    os << (i ? " " : "") << "{";
    const auto idx = to_index_list(masks[i]);
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
    os << "}";
  }
  return os.str();
}

struct Options {
  std::string lv, lv1, lv2, subset, space = "mbar", db;
  bool json = false, resume = false, partial_lp = false, allow_large_n = false;
  int n = 0, from = 3, to = 7, threads = 1, split_depth = 8;
  double max_seconds = 0;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
};

int run_classify(const Options& o) {
  const LengthVector lv = parse_length_vector(o.lv);
  const auto sig = signature(lv);
  Json j{{"lv", to_json(lv)}, {"signature", to_json(sig)}, {"normal", is_normal(lv)}};
  std::ostringstream text;
  text << "n = " << sig.n << (sig.generic ? ", generic" : ", on a wall") << (is_normal(lv) ? ", normal" : ", not normal")
       << "\nshort with n (J minus n): " << join_masks(sig.short_with_n)
       << "\nmedian with n (J minus n): " << join_masks(sig.median_with_n) << '\n';
  if (!o.subset.empty()) {
    const SubsetMask s = parse_index_list(o.subset, lv.size());
    const char* c = to_string(classify_subset(lv, s));
    j["subset"] = {{"indices", to_index_list(s)}, {"class", c}};
    text << "subset {" << o.subset << "} is " << c << '\n';
  }
  print(j, o.json, text.str());
  return kOk;
}

int run_betti(const Options& o) {
  const LengthVector lv = parse_length_vector(o.lv);
  const auto t = betti(lv);
  Json j = to_json(t);
  std::string text = "b = " + join(t.b) + "\n";
  if (lv.size() > 4) {
    const auto row = case_table_row(lv.sorted().first);
    j["case"] = to_string(row.label);
    text += std::string("case: ") + to_string(row.label) + "\n";
  }
  print(j, o.json, text);
  return kOk;
}

int run_present(const Options& o) {
  const LengthVector lv = parse_length_vector(o.lv).sorted().first;
  const auto p = balanced_presentation(lv);
  Json j{{"lv", to_json(lv)}, {"balanced", to_json(p)}};
  std::ostringstream text;
  text << "balanced subalgebra: exterior algebra on X_1..X_" << p.num_generators << " modulo\n  "
       << join_masks(p.minimal_monomials) << "\ni(l) = " << p.first_killed << ", ranks " << join(p.ranks()) << '\n';
  if (lv.size() >= 4 && is_main_case(lv)) {
    const auto d = defect_basis(lv);
    j["defect"] = to_json(d);
    text << "defect basis:";
    for (const auto& [k, masks] : d.by_degree) text << " degree " << k << ": " << join_masks(masks) << ';';
    text << (d.empty() ? " none\n" : "\n");
  }
  print(j, o.json, text.str());
  return kOk;
}

int run_gf2dims(const Options& o) {
  const LengthVector lv = parse_length_vector(o.lv);
  PolygonSpace space;
  if (o.space == "mbar") space = PolygonSpace::PlanarQuotient;
  else if (o.space == "n") space = PolygonSpace::Spatial;
  else throw CLI::ValidationError("--space", "expected mbar or n");
  const auto p = make_presentation(lv, space);
  const auto d = graded_dims(p);
  Json j{{"space", o.space}, {"dims", d.dims}, {"presentation", to_json(p)}};
  print(j, o.json, "dims = " + join(d.dims) + "\n");
  return kOk;
}

int run_w1(const Options& o) {
  const LengthVector lv = parse_length_vector(o.lv);
  const auto p = make_presentation(lv, PolygonSpace::PlanarQuotient);
  const auto w = extract_w1(p);
  const auto q = quotient_by_w1(p);
  Json j{{"unique", w.unique},
         {"solution_space_dim", w.solution_space_dim},
         {"w1", to_string(w.u)},
         {"quotient_dims", q.dims}};
  std::ostringstream text;
  text << "w1 = " << to_string(w.u) << (w.unique ? " (unique)" : " (ambiguous, solution space of dimension ")
       << (w.unique ? "" : std::to_string(w.solution_space_dim) + ")") << "\nquotient by w1: " << join(q.dims)
       << '\n';
  print(j, o.json, text.str());
  return kOk;
}

int run_compare(const Options& o) {
  const auto v = compare(parse_length_vector(o.lv1), parse_length_vector(o.lv2));
  Json j = to_json(v);
  print(j, o.json,
        j["verdict"].get<std::string>() + (v.stage.empty() ? "" : ", distinguished at stage " + v.stage) + "\n");
  return kOk;
}

EnumerationOptions enumeration_options(const Options& o) {
  EnumerationOptions e;
  e.threads = o.threads;
  e.split_depth = o.split_depth;
  e.partial_lp = o.partial_lp;
  e.max_seconds = o.max_seconds;
  e.allow_large_n = o.allow_large_n;
  return e;
}

int run_enumerate(const Options& o) {
  const auto db = o.db.empty() ? default_db_path(o.n) : std::filesystem::path(o.db);
  const auto r = enumerate_to_db(o.n, db, enumeration_options(o), o.resume);
  const auto [c, cstar] = count_normal(r.records);
  Json j{{"n", o.n},
         {"db", db.string()},
         {"complete", r.complete},
         {"chambers", c},
         {"normal_chambers", cstar},
         {"resumed_tasks", r.resumed_tasks},
         {"stats",
          {{"tasks", r.stats.tasks},
           {"candidates", r.stats.candidates},
           {"lp_calls", r.stats.lp_calls},
           {"infeasible", r.stats.infeasible},
           {"seconds", r.stats.seconds}}}};
  if (!r.complete)
    return emit_error(kResource, "resource",
                      "time budget exhausted after " + std::to_string(c) + " chambers; rerun with --resume");
  std::ostringstream text;
  text << "n = " << o.n << ": " << c << " chambers, " << cstar << " normal; written to " << db.string() << '\n';
  print(j, o.json, text.str());
  return kOk;
}

int run_audit(const Options& o) {
  std::vector<ChamberRecord> records;
  int n = o.n;
  if (!o.db.empty()) {
    records = read_records(o.db);
    if (records.empty()) throw PreconditionError("audit: database is empty");
    n = records.front().signature.n;
  } else {
    if (n < 3) throw CLI::ValidationError("audit", "give --db or --n");
    records = load_or_enumerate(n, default_db_path(n), enumeration_options(o));
  }
  const auto report = walker_audit(n, records, o.threads);
  std::ostringstream text;
  text << "n = " << n << ": " << report.chambers << " chambers, " << report.collisions.size()
       << " cohomology collisions, " << report.round_trip_failures << " failed round trips of " << report.round_trips
       << ", " << report.gf2_collisions.size() << " Z_2 collisions (" << report.gf2_skipped_empty
       << " empty spaces skipped)\n";
  auto witness = [&](std::size_t i) { return "(" + to_json(records[i].witness).dump() + ")"; };
  for (const auto& c : report.collisions)
    text << "  cohomology agrees for " << witness(c.first) << " and " << witness(c.second) << '\n';
  for (const auto& c : report.gf2_collisions)
    text << "  Z_2 invariants agree for " << witness(c.first) << " and " << witness(c.second) << '\n';
  print(to_json(report, records), o.json, text.str());
  return report.collisions.empty() && report.round_trip_failures == 0 ? kOk : kPrecondition;
}

int run_sample_normal(const Options& o) {
  const auto v = estimate_nonnormal_volume(o.n, o.samples, o.seed);
  Json j = to_json(v);
  j["seed"] = o.seed;
  std::ostringstream text;
  text << "n = " << v.n << ": non-normal fraction " << v.fraction << " +- " << v.half_width_99 << " (99%), bound "
       << to_string(v.bound) << '\n';
  print(j, o.json, text.str());
  return kOk;
}

int run_table(const Options& o) {
  if (o.from < 3 || o.to < o.from) throw CLI::ValidationError("table", "need 3 <= --from <= --to");
  Json rows = Json::array();
  std::ostringstream text;
  text << "n\tc_n\tc_n*\n";
  for (int n = o.from; n <= o.to; ++n) {
    auto opts = enumeration_options(o);
    const auto records = load_or_enumerate(n, default_db_path(n), opts);
    const auto [c, cstar] = count_normal(records);
    rows.push_back(Json{{"n", n}, {"chambers", c}, {"normal_chambers", cstar}});
    text << n << '\t' << c << '\t' << cstar << '\n';
  }
  print(Json{{"rows", rows}}, o.json, text.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of planar and spatial polygon spaces"};
  app.require_subcommand(1);
  Options o;

  auto add_lv = [&](CLI::App* c) { c->add_option("--lv", o.lv, "length vector, e.g. 1,1,2 or 1/2,3/4,1")->required(); };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "print JSON"); };
  auto add_search = [&](CLI::App* c) {
    c->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    c->add_option("--split-depth", o.split_depth, "free decisions before the search is cut into tasks")
        ->check(CLI::NonNegativeNumber);
    c->add_option("--max-seconds", o.max_seconds, "wall-clock budget, 0 for none")->check(CLI::NonNegativeNumber);
    c->add_flag("--partial-lp", o.partial_lp, "prune partial candidates by LP");
    c->add_flag("--allow-large-n", o.allow_large_n, "permit n > 9");
  };

  auto* classify = app.add_subcommand("classify", "subset classes, signature and normality");
  add_lv(classify);
  classify->add_option("--subset", o.subset, "1-based indices, e.g. 1,2,5");
  add_json(classify);

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of the planar polygon space");
  add_lv(betti_cmd);
  add_json(betti_cmd);

  auto* present = app.add_subcommand("present", "balanced subalgebra and defect basis");
  add_lv(present);
  add_json(present);

  auto* gf2 = app.add_subcommand("gf2dims", "Z_2 graded dimensions from the Hausmann-Knutson presentation");
  add_lv(gf2);
  gf2->add_option("--space", o.space, "mbar or n")->check(CLI::IsMember({"mbar", "n"}));
  add_json(gf2);

  auto* w1 = app.add_subcommand("w1", "first Stiefel-Whitney class and the quotient by it");
  add_lv(w1);
  add_json(w1);

  auto* cmp = app.add_subcommand("compare", "decide whether two vectors lie in the same chamber");
  cmp->add_option("--lv1", o.lv1, "first length vector")->required();
  cmp->add_option("--lv2", o.lv2, "second length vector")->required();
  add_json(cmp);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate chambers up to permutation into a JSONL database");
  enumerate->add_option("--n", o.n, "number of links")->required();
  enumerate->add_option("--db", o.db, "database path (default chambers-<n>.jsonl)");
  enumerate->add_flag("--resume", o.resume, "continue an interrupted run");
  add_search(enumerate);
  add_json(enumerate);

  auto* audit = app.add_subcommand("audit", "pairwise cohomology audit of a chamber database");
  audit->add_option("--db", o.db, "database path");
  audit->add_option("--n", o.n, "enumerate or load chambers-<n>.jsonl instead");
  add_search(audit);
  add_json(audit);

  auto* sample = app.add_subcommand("sample-normal", "Monte Carlo volume of non-normal vectors");
  sample->add_option("--n", o.n, "number of links")->required()->check(CLI::Range(3, 1000));
  sample->add_option("--samples", o.samples, "sample count")->check(CLI::PositiveNumber);
  sample->add_option("--seed", o.seed, "generator seed");
  add_json(sample);

  auto* table = app.add_subcommand("table", "chamber and normal chamber counts");
  table->add_option("--from", o.from, "first n");
  table->add_option("--to", o.to, "last n");
  add_search(table);
  add_json(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(kUsage, "usage", e.what());
  }

  try {
    if (*classify) return run_classify(o);
    if (*betti_cmd) return run_betti(o);
    if (*present) return run_present(o);
    if (*gf2) return run_gf2dims(o);
    if (*w1) return run_w1(o);
    if (*cmp) return run_compare(o);
    if (*enumerate) return run_enumerate(o);
    if (*audit) return run_audit(o);
    if (*sample) return run_sample_normal(o);
    if (*table) return run_table(o);
  } catch (const CLI::ValidationError& e) {
    return emit_error(kUsage, "usage", e.what());
  } catch (const PreconditionError& e) {
    return emit_error(kPrecondition, "precondition", e.what());
  } catch (const ResourceLimitError& e) {
    return emit_error(kResource, "resource", e.what());
  } catch (const std::out_of_range& e) {
    return emit_error(kUsage, "usage", e.what());
  } catch (const std::invalid_argument& e) {
    return emit_error(kUsage, "usage", e.what());
  }
  return kUsage;
}
