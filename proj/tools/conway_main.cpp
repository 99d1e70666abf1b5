#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "conway/classify.hpp"
#include "conway/design.hpp"
#include "conway/enumerate.hpp"
#include "conway/moves.hpp"
#include "conway/report.hpp"
#include "criteria.hpp"

namespace {

using conway::Design;
using conway::Point;
using nlohmann::json;

struct DesignSource {
  std::string builtin;
  std::string file;

  Design Load() const {
    if (!builtin.empty()) return conway::Builtin(builtin);
    if (!file.empty()) return conway::LoadDesign(file);
    throw CLI::RequiredError("--builtin or --file");
  }
};

struct Config {
  DesignSource source;
  std::size_t infinity = 1;
  bool json = false;
  std::size_t workers = 1;
  std::uint64_t seed = 20161015;
  std::uint64_t cap = conway::kDefaultElementCap;
  bool all_holes = false;
  std::vector<std::size_t> waypoints;
  std::size_t n = 0;
  std::size_t lambda = 0;
  bool count_only = false;
  bool classify = false;
  std::string out_dir;
  bool stretch = false;
};

void AddSource(CLI::App* cmd, Config& config) {
  auto* b = cmd->add_option("--builtin", config.source.builtin, "Built-in design")
                ->check(CLI::IsMember(conway::BuiltinNames()));
  auto* f = cmd->add_option("--file", config.source.file, "Design file");
  b->excludes(f);
  f->excludes(b);
}

Point ToPoint(std::size_t one_based, const Design& d, const std::string& what) {
  if (one_based < 1 || one_based > d.n()) {
    throw conway::Error(what + " " + std::to_string(one_based) + " is not a point of a design on " +
                        std::to_string(d.n()) + " points");
  }
  return static_cast<Point>(one_based - 1);
}

void Emit(const Config& config, const json& j, const std::string& text) {
  if (config.json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

int RunValidate(const Config& config) {
  Design d = config.source.Load();
  auto report = conway::Validate(d);
  std::string text = "n " + std::to_string(d.n()) + ", lambda " + std::to_string(d.lambda()) +
                     ", " + std::to_string(d.lines().size()) + " lines\n";
  text += std::string("2-design     ") + (report.is_2_design ? "yes" : "no") + "\n";
  text += "pair counts  " + std::to_string(report.observed_lambda_range.first) + ".." +
          std::to_string(report.observed_lambda_range.second) + "\n";
  text += std::string("simple       ") + (report.is_simple ? "yes" : "no") + "\n";
  text += std::string("supersimple  ") + (report.is_supersimple ? "yes" : "no") + "\n";
  if (report.first_violation) text += "violation    " + *report.first_violation + "\n";
  Emit(config, conway::ToJson(report), text);
  return report.is_2_design && report.is_supersimple ? 0 : 1;
}

int RunMove(const Config& config) {
  Design d = config.source.Load();
  conway::MoveSequence seq;
  for (std::size_t w : config.waypoints) seq.waypoints.push_back(ToPoint(w, d, "waypoint"));
  auto g = conway::EvaluateMoves(d, seq);
  json j{{"waypoints", config.waypoints}, {"permutation", g.ToString()}, {"closed", seq.closed()}};
  Emit(config, j, g.ToString() + "\n");
  return 0;
}

std::string HoleText(const Design& d, Point hole, const conway::Group& g) {
  auto sig = conway::ComputeSignature(g);
  std::string text = "hole " + std::to_string(hole + 1) + " of 2-(" + std::to_string(d.n()) +
                     ",4," + std::to_string(d.lambda()) + "), points renumbered 1.." +
                     std::to_string(d.n() - 1) + " skipping the hole\n";
  text += "generators           " + std::to_string(g.generators().size()) + "\n";
  text += conway::FormatSignature(sig);
  text += "recognized           " + conway::Recognize(sig) + "\n";
  auto add_claims = [&](const conway::ConsistencyReport& report) {
    for (const auto& c : report.claims) {
      text += "  " + c.id + ": " + conway::ToString(c.status) + " (" + c.witness + ")\n";
    }
  };
  text += "degree bounds\n";
  add_claims(conway::CheckDegreeBounds(d.n(), d.lambda(), sig));
  if (d.lambda() == 3) {
    text += "lambda=3 classification\n";
    add_claims(conway::CheckLambda3Classification(d.n(), sig));
  }
  return text;
}

int RunHolestab(const Config& config) {
  Design d = config.source.Load();
  if (!config.all_holes) {
    Point hole = ToPoint(config.infinity, d, "infinity");
    auto g = conway::HoleStabilizer(d, hole);
    Emit(config, conway::HoleStabilizerReport(d, hole, g), HoleText(d, hole, g));
    return 0;
  }
  json reports = json::array();
  std::string text;
  std::optional<conway::Signature> first;
  bool equal = true;
  for (Point hole = 0; hole < d.n(); ++hole) {
    auto g = conway::HoleStabilizer(d, hole);
    auto sig = conway::ComputeSignature(g);
    if (!first) first = sig;
    equal &= sig == *first;
    reports.push_back(conway::HoleStabilizerReport(d, hole, g));
    text += "hole " + std::to_string(hole + 1) + ": order " + sig.order.str() + ", " +
            conway::Recognize(sig) + "\n";
  }
  text += equal ? "all hole stabilizers have equal signatures\n"
                : "hole stabilizer signatures differ\n";
  Emit(config, json{{"holes", reports}, {"signatures_equal", equal}}, text);
  return equal ? 0 : 1;
}

int RunClassify(const Config& config) {
  Design d = config.source.Load();
  Point hole = ToPoint(config.infinity, d, "infinity");
  auto g = conway::HoleStabilizer(d, hole);
  auto criterion = conway::SupportCriterion(g, d.lambda(), config.cap);
  json j = conway::HoleStabilizerReport(d, hole, g);
  j["support_criterion"] = conway::ToJson(criterion);
  std::string text = HoleText(d, hole, g);
  text += "support criterion    " + conway::ToString(criterion.which);
  for (const auto& w : criterion.witnesses) text += " " + w.ToString();
  text += "\n";
  Emit(config, j, text);
  return 0;
}

int RunEnumerate(const Config& config) {
  conway::EnumerationOptions options;
  options.workers = config.workers;
  options.keep_designs = !config.count_only || !config.out_dir.empty();
  options.classify = config.classify;
  options.shuffle_seed = config.seed;
  auto result = conway::EnumerateDesigns(config.n, config.lambda, options);

  json designs = json::array();
  std::string text = "supersimple 2-(" + std::to_string(config.n) + ",4," +
                     std::to_string(config.lambda) + ") designs up to isomorphism: " +
                     std::to_string(result.count) + "\n";
  if (!config.out_dir.empty()) std::filesystem::create_directories(config.out_dir);
  for (std::size_t i = 0; i < result.designs.size(); ++i) {
    const Design& d = result.designs[i];
    std::string hash = conway::CanonicalHash(d);
    json entry{{"hash", hash}};
    text += hash;
    if (!config.out_dir.empty()) {
      auto path = std::filesystem::path(config.out_dir) / (hash + ".txt");
      std::ofstream file(path);
      file << conway::SerializeDesign(d);
      if (!file) throw conway::Error("cannot write " + path.string());
    }
    if (config.classify) {
      const auto& sig = result.signatures[i];
      entry["signature"] = conway::ToJson(sig);
      entry["recognized"] = conway::Recognize(sig);
      text += "  order " + sig.order.str() + "  " + conway::Recognize(sig);
    }
    text += "\n";
    if (!config.count_only) designs.push_back(entry);
  }
  json j{{"n", config.n}, {"lambda", config.lambda}, {"count", result.count}};
  if (!config.count_only) j["designs"] = designs;
  if (config.count_only) text = std::to_string(result.count) + "\n";
  Emit(config, j, text);
  return 0;
}

int RunSelftest(const Config& config) {
  conway::acceptance::Options options;
  options.seed = config.seed;
  options.workers = config.workers;
  options.stretch = config.stretch;
  auto outcomes = conway::acceptance::RunAll(options);
  int failed = 0;
  json j = json::array();
  for (const auto& o : outcomes) {
    if (!config.json) conway::acceptance::Print(std::cout, o);
    if (!o.passed && !o.known_conflict) ++failed;
    j.push_back({{"id", o.id}, {"title", o.title}, {"passed", o.passed}, {"skipped", o.skipped},
                 {"known_conflict", o.known_conflict}, {"detail", o.detail}});
  }
  if (config.json) std::cout << j.dump(2) << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Config config;
  CLI::App app{"Supersimple 2-(n,4,lambda) designs and their hole stabilizers"};
  app.require_subcommand(1);
  app.add_flag("--json", config.json, "JSON output");
  app.add_option("--seed", config.seed, "Seed for any sampled randomness");
  app.add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Check the design axioms");
  AddSource(validate, config);

  auto* move = app.add_subcommand("move", "Evaluate a move sequence");
  AddSource(move, config);
  move->add_option("waypoints", config.waypoints, "1-based waypoints")->required();

  auto* holestab = app.add_subcommand("holestab", "Hole stabilizer report");
  AddSource(holestab, config);
  holestab->add_option("--infinity", config.infinity, "1-based hole point");
  holestab->add_flag("--all-holes", config.all_holes, "Compare every hole");

  auto* classify = app.add_subcommand("classify", "Hole stabilizer report with support criterion");
  AddSource(classify, config);
  classify->add_option("--infinity", config.infinity, "1-based hole point");
  classify->add_option("--cap", config.cap, "Largest group order to scan");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate designs up to isomorphism");
  enumerate->add_option("n", config.n)->required();
  enumerate->add_option("lambda", config.lambda)->required();
  enumerate->add_flag("--count-only", config.count_only, "Print only the count");
  enumerate->add_flag("--classify", config.classify, "Attach hole stabilizer signatures");
  enumerate->add_option("--out", config.out_dir, "Write one file per design");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->add_flag("--stretch", config.stretch, "Include the 2-(12,4,3) count");

  for (auto* cmd : {validate, move, holestab, classify, enumerate, selftest}) {
    cmd->add_flag("--json", config.json, "JSON output");
    cmd->add_option("--seed", config.seed, "Seed for any sampled randomness");
    cmd->add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);
  }
  for (auto* cmd : {validate, move, holestab, classify}) {
    cmd->callback([cmd] {
      if (cmd->count("--builtin") + cmd->count("--file") == 0) {
        throw CLI::RequiredError("--builtin or --file");
      }
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return RunValidate(config);
    if (*move) return RunMove(config);
    if (*holestab) return RunHolestab(config);
    if (*classify) return RunClassify(config);
    if (*enumerate) return RunEnumerate(config);
    if (*selftest) return RunSelftest(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
