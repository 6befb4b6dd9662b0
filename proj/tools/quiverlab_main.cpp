// Command-line surface: every subcommand reads a quiver document (from a file
// or a named built-in fixture), runs one library construction, and prints a
// JSON report to standard output.  Report layout:
//
//   {
//     "command":     subcommand name,
//     "input":       {source, quiver, vertices, arrows, relations},
//     "parameters":  flags that affected the computation,
//     "result":      subcommand-specific findings,
//     "dimensions":  [[source, target, degree, dim], ...]   (when graded data
//                    was computed; entries ordered by degree, source, target)
//   }
//
// Exit codes: 0 success; 2 quiver-file parse error; 3 invalid input rejected
// by a construction; 4 internal consistency check failed; 5 file I/O failure;
// CLI11 usage errors keep their own codes.

#include "quiverlab/bound_quiver.hpp"
#include "quiverlab/dsl.hpp"
#include "quiverlab/graded_algebra.hpp"
#include "quiverlab/grading.hpp"
#include "quiverlab/multilayer.hpp"
#include "quiverlab/quadratic.hpp"
#include "quiverlab/quiver.hpp"
#include "quiverlab/translation_window.hpp"
#include "quiverlab/trivial_extension.hpp"
#include "quiverlab/walk.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace quiverlab;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags shared by every subcommand that reads a quiver document.
struct CommonOpts {
  std::string file;
  std::string fixture;
  std::string json_path;
  int degree_bound = -1;
};

void add_input_flags(CLI::App* sub, CommonOpts& o) {
  auto* pos = sub->add_option("file", o.file, "path to a .qv quiver file");
  auto* fix = sub->add_option("--fixture", o.fixture,
                              "load a built-in example instead of a file");
  pos->excludes(fix);
  fix->excludes(pos);
  sub->add_option("--json", o.json_path,
                  "also write the JSON report to this path");
}

void add_degree_bound_flag(CLI::App* sub, CommonOpts& o) {
  sub->add_option("--degree-bound", o.degree_bound,
                  "resolve graded components up to this degree")
      ->check(CLI::NonNegativeNumber);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixture_dir() { return QUIVERLAB_FIXTURE_DIR; }

std::string fixture_path(const std::string& name) {
  namespace fs = std::filesystem;
  fs::path path = fs::path(fixture_dir()) / (name + ".qv");
  if (fs::exists(path)) return path.string();

  std::vector<std::string> known;
  for (const auto& entry : fs::directory_iterator(fixture_dir())) {
    if (entry.path().extension() == ".qv") {
      known.push_back(entry.path().stem().string());
    }
  }
  std::sort(known.begin(), known.end());
  std::string message = "unknown fixture '" + name + "'; available:";
  for (const std::string& k : known) message += " " + k;
  throw IoError(message);
}

struct LoadedDocument {
  QuiverDocument doc;
  std::string source;  // what to echo in the report
};

LoadedDocument load_document(const CommonOpts& o) {
  if (!o.fixture.empty()) {
    return {parse_quiver_document(read_file(fixture_path(o.fixture))),
            "fixture:" + o.fixture};
  }
  if (o.file.empty()) {
    throw IoError("no input: pass a .qv file or --fixture NAME");
  }
  return {parse_quiver_document(read_file(o.file)), o.file};
}

json make_report(const std::string& command, const LoadedDocument& in) {
  const Quiver& q = in.doc.bound.quiver;
  json report;
  report["command"] = command;
  report["input"] = {{"source", in.source},
                     {"quiver", in.doc.name},
                     {"vertices", q.vertex_count()},
                     {"arrows", q.arrow_count()},
                     {"relations", in.doc.bound.relations.size()}};
  report["parameters"] = json::object();
  return report;
}

json dimension_rows(const GradedAlgebra& alg) {
  json rows = json::array();
  for (const GradedAlgebra::DimEntry& e : alg.dimension_table()) {
    rows.push_back({alg.quiver().vertex_name(e.source),
                    alg.quiver().vertex_name(e.target), e.degree, e.dim});
  }
  return rows;
}

// Engine facts every graded report shares.  top_degree and the properly
// graded degree only make sense once the algebra visibly vanished.
void fill_graded_facts(const GradedAlgebra& alg, json& result) {
  result["stabilized"] = alg.stabilized();
  result["total_dimension"] = alg.total_dim();
  if (alg.stabilized() && alg.total_dim() > 0) {
    result["top_degree"] = alg.top_degree();
    std::pair<Path, Path> offender;
    if (auto degree = alg.properly_graded_degree(&offender)) {
      result["properly_graded_degree"] = *degree;
    } else {
      result["properly_graded_degree"] = nullptr;
      result["properly_graded_offenders"] = {
          path_to_string(alg.quiver(), offender.first),
          path_to_string(alg.quiver(), offender.second)};
    }
  } else {
    result["top_degree"] = nullptr;
    result["properly_graded_degree"] = nullptr;
  }
}

void emit(const json& report, const CommonOpts& o) {
  std::string text = report.dump(2);
  std::cout << text << "\n";
  if (!o.json_path.empty()) {
    std::ofstream out(o.json_path, std::ios::binary);
    out << text << "\n";
    if (!out) {
      throw IoError("cannot write '" + o.json_path + "'");
    }
  }
}

int effective_bound(const CommonOpts& o, const BoundQuiver& bq) {
  return o.degree_bound >= 0 ? o.degree_bound : default_degree_bound(bq);
}

// check: grading existence/depth plus the graded profile of the algebra.
void run_check(const CommonOpts& o) {
  LoadedDocument in = load_document(o);
  const BoundQuiver& bq = in.doc.bound;
  const Quiver& q = bq.quiver;

  json report = make_report("check", in);
  const int bound = effective_bound(o, bq);
  report["parameters"]["degree_bound"] = bound;

  json result;
  NiceGradingResult nice = compute_nice_grading(q);
  result["nicely_graded"] = nice.ok();
  if (nice.ok()) {
    json values = json::object();
    long long depth = 0;
    for (int v = 0; v < q.vertex_count(); ++v) {
      values[q.vertex_name(v)] = nice.grading->at(v);
      depth = std::max(depth, nice.grading->at(v));
    }
    result["grading"] = values;
    result["depth"] = depth;
  } else {
    result["counterexample"] = walk_to_string(q, *nice.counterexample);
  }
  if (in.doc.grading) {
    result["declared_grading_nice"] = is_nice_grading(q, *in.doc.grading);
  }

  GradedAlgebra alg(bq, bound);
  fill_graded_facts(alg, result);
  report["result"] = std::move(result);
  report["dimensions"] = dimension_rows(alg);
  emit(report, o);
}

// dual: quadratic dual presentation plus its graded profile.
void run_dual(const CommonOpts& o) {
  LoadedDocument in = load_document(o);
  BoundQuiver dual = quadratic_dual(in.doc.bound);

  json report = make_report("dual", in);
  const int bound = effective_bound(o, dual);
  report["parameters"]["degree_bound"] = bound;

  json result;
  result["relations"] = dual.relations.size();
  GradedAlgebra alg(dual, bound);
  fill_graded_facts(alg, result);
  QuiverDocument out{in.doc.name + "_dual", std::move(dual), std::nullopt};
  result["document"] = serialize(out);
  report["result"] = std::move(result);
  report["dimensions"] = dimension_rows(alg);
  emit(report, o);
}

const char* kind_name(ArrowKind kind) {
  switch (kind) {
    case ArrowKind::original:
      return "original";
    case ArrowKind::returning:
      return "returning";
    case ArrowKind::loop:
      return "loop";
  }
  return "unknown";
}

// trivext: returning-arrow presentation of the trivial extension; --double
// applies the construction twice.
void run_trivext(const CommonOpts& o, bool twice) {
  LoadedDocument in = load_document(o);
  ReturningArrowQuiver raq =
      returning_arrow_quiver(in.doc.bound, o.degree_bound);
  if (twice) {
    raq = double_returning_quiver(raq, o.degree_bound);
  }
  const Quiver& q = raq.bound.quiver;

  json report = make_report("trivext", in);
  if (o.degree_bound >= 0) {
    report["parameters"]["degree_bound"] = o.degree_bound;
  }
  report["parameters"]["double"] = twice;

  json result;
  result["base_degree"] = raq.base_degree;
  json socle = json::array();
  for (const Path& p : raq.socle) {
    socle.push_back(path_to_string(raq.base.quiver, p));
  }
  result["socle"] = std::move(socle);
  json arrows = json::array();
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    arrows.push_back({{"name", arrow.name},
                      {"source", q.vertex_name(arrow.source)},
                      {"target", q.vertex_name(arrow.target)},
                      {"kind", kind_name(raq.kinds[a])}});
  }
  result["arrows"] = std::move(arrows);
  result["relations"] = raq.bound.relations.size();
  result["pairing_relations"] = raq.pairing_relations.size();
  result["composite_relations"] = raq.composite_relations.size();

  GradedAlgebra alg(raq.bound, raq.base_degree + 2);
  fill_graded_facts(alg, result);
  QuiverDocument out{in.doc.name + (twice ? "_trivext2" : "_trivext"),
                     raq.bound, std::nullopt};
  result["document"] = serialize(out);
  report["result"] = std::move(result);
  report["dimensions"] = dimension_rows(alg);
  emit(report, o);
}

const char* kind_name(LayerArrowKind kind) {
  switch (kind) {
    case LayerArrowKind::floor:
      return "floor";
    case LayerArrowKind::ladder:
      return "ladder";
    case LayerArrowKind::beta:
      return "beta";
  }
  return "unknown";
}

// multilayer: the layered quiver over a nicely graded base, with the natural
// grading written into the emitted document.
void run_multilayer(const CommonOpts& o) {
  LoadedDocument in = load_document(o);
  MultilayerQuiver ml = multilayer_quiver(in.doc.bound, o.degree_bound);
  const Quiver& q = ml.bound.quiver;

  json report = make_report("multilayer", in);
  if (o.degree_bound >= 0) {
    report["parameters"]["degree_bound"] = o.degree_bound;
  }

  json result;
  result["base_degree"] = ml.base_degree;
  result["floors"] = ml.floor_count();
  json base_grading = json::object();
  for (int v = 0; v < ml.base.quiver.vertex_count(); ++v) {
    base_grading[ml.base.quiver.vertex_name(v)] = ml.base_grading.at(v);
  }
  result["base_grading"] = std::move(base_grading);
  json socle = json::array();
  for (const Path& p : ml.socle) {
    socle.push_back(path_to_string(ml.base.quiver, p));
  }
  result["socle"] = std::move(socle);
  result["vertices"] = q.vertex_count();
  json arrows = json::array();
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    arrows.push_back({{"name", arrow.name},
                      {"source", q.vertex_name(arrow.source)},
                      {"target", q.vertex_name(arrow.target)},
                      {"kind", kind_name(ml.kinds[a])}});
  }
  result["arrows"] = std::move(arrows);
  result["relations"] = ml.bound.relations.size();

  GradedAlgebra alg(ml.bound, ml.base_degree + 3);
  fill_graded_facts(alg, result);
  Grading layered;
  for (int v = 0; v < q.vertex_count(); ++v) {
    layered.values.push_back(ml.base_grading.at(ml.vertex_base[v]) +
                             ml.vertex_floor[v]);
  }
  QuiverDocument out{in.doc.name + "_multilayer", ml.bound,
                     std::move(layered)};
  result["document"] = serialize(out);
  report["result"] = std::move(result);
  report["dimensions"] = dimension_rows(alg);
  emit(report, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bound quiver constructions and graded algebra checks"};
  app.require_subcommand(1);

  CommonOpts check_opts;
  CLI::App* check = app.add_subcommand(
      "check", "grading existence, depth, and graded dimensions");
  add_input_flags(check, check_opts);
  add_degree_bound_flag(check, check_opts);
  check->callback([&] { run_check(check_opts); });

  CommonOpts dual_opts;
  CLI::App* dual =
      app.add_subcommand("dual", "quadratic dual of a quadratic presentation");
  add_input_flags(dual, dual_opts);
  add_degree_bound_flag(dual, dual_opts);
  dual->callback([&] { run_dual(dual_opts); });

  CommonOpts trivext_opts;
  bool trivext_double = false;
  CLI::App* trivext = app.add_subcommand(
      "trivext", "returning-arrow quiver of the trivial extension");
  add_input_flags(trivext, trivext_opts);
  add_degree_bound_flag(trivext, trivext_opts);
  trivext->add_flag("--double", trivext_double,
                    "apply the construction a second time");
  trivext->callback([&] { run_trivext(trivext_opts, trivext_double); });

  CommonOpts multilayer_opts;
  CLI::App* multilayer = app.add_subcommand(
      "multilayer", "layered quiver over a nicely graded base");
  add_input_flags(multilayer, multilayer_opts);
  add_degree_bound_flag(multilayer, multilayer_opts);
  multilayer->callback([&] { run_multilayer(multilayer_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const quiverlab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
