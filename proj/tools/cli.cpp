#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "emodetect/evaluation.hpp"
#include "emodetect/lexicons.hpp"
#include "emodetect/ontology.hpp"
#include "emodetect/report.hpp"
#include "emodetect/scoring.hpp"

namespace emodetect::cli {
namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every field is optional so that flags can be layered over a --config file.
struct Settings {
  std::optional<std::string> config;
  std::optional<std::string> ontology;
  std::optional<std::string> negation;
  std::optional<std::string> intensity;
  std::optional<std::string> affinity;
  std::optional<std::string> pairs;
  std::optional<std::string> mode;
  std::optional<double> alpha;
  std::optional<int> negation_window;
  std::optional<int> intensity_window;
  std::optional<std::string> depth_weighting;
  std::optional<std::string> format;
};

void add_shared_options(CLI::App& cmd, Settings& s) {
  cmd.add_option("--config", s.config, "JSON file with default settings");
  cmd.add_option("--ontology", s.ontology, "Ontology file (default: bundled Parrott)");
  cmd.add_option("--negation", s.negation, "Negation cue file");
  cmd.add_option("--intensity", s.intensity, "Intensity modifier file");
  cmd.add_option("--affinity", s.affinity, "Affinity lexicon file");
  cmd.add_option("--pairs", s.pairs, "Counter-emotion pairing file");
  cmd.add_option("--mode", s.mode, "keyword|affinity|hybrid")
      ->check(CLI::IsMember({"keyword", "affinity", "hybrid"}));
  cmd.add_option("--alpha", s.alpha, "Keyword weight in hybrid mode (default 0.5)")
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--negation-window", s.negation_window, "Tokens searched for negation")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--intensity-window", s.intensity_window,
                 "Tokens searched for intensity modifiers")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--depth-weighting", s.depth_weighting, "inverse|proportional")
      ->check(CLI::IsMember({"inverse", "proportional"}));
  cmd.add_option("--format", s.format, "json|text")->check(CLI::IsMember({"json", "text"}));
}

template <typename T>
void fill_from(const nlohmann::json& j, const char* key, std::optional<T>& slot,
               const std::string& source) {
  if (slot || !j.contains(key)) return;
  try {
    slot = j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw DataError(source, 0, std::string("config key '") + key + "' has the wrong type");
  }
}

void merge_config(Settings& s) {
  if (!s.config) return;
  const fs::path path = *s.config;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(path.string(), 0, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DataError(path.string(), 0, "config must be a JSON object");

  const std::string src = path.string();
  Settings from_file;
  fill_from(j, "ontology", from_file.ontology, src);
  fill_from(j, "negation", from_file.negation, src);
  fill_from(j, "intensity", from_file.intensity, src);
  fill_from(j, "affinity", from_file.affinity, src);
  fill_from(j, "pairs", from_file.pairs, src);
  // Paths in a config file are relative to the file itself.
  for (auto* p : {&from_file.ontology, &from_file.negation, &from_file.intensity,
                  &from_file.affinity, &from_file.pairs}) {
    if (*p && fs::path(**p).is_relative()) {
      *p = (path.parent_path() / **p).lexically_normal().string();
    }
  }
  fill_from(j, "mode", from_file.mode, src);
  fill_from(j, "alpha", from_file.alpha, src);
  fill_from(j, "negation_window", from_file.negation_window, src);
  fill_from(j, "intensity_window", from_file.intensity_window, src);
  fill_from(j, "depth_weighting", from_file.depth_weighting, src);
  fill_from(j, "format", from_file.format, src);

  auto layer = [](auto& flag, auto& file) {
    if (!flag) flag = std::move(file);
  };
  layer(s.ontology, from_file.ontology);
  layer(s.negation, from_file.negation);
  layer(s.intensity, from_file.intensity);
  layer(s.affinity, from_file.affinity);
  layer(s.pairs, from_file.pairs);
  layer(s.mode, from_file.mode);
  layer(s.alpha, from_file.alpha);
  layer(s.negation_window, from_file.negation_window);
  layer(s.intensity_window, from_file.intensity_window);
  layer(s.depth_weighting, from_file.depth_weighting);
  layer(s.format, from_file.format);
}

// Everything a command needs to run detection, loaded once.
struct Engine {
  std::optional<EmotionOntology> owned_ontology;
  const EmotionOntology* ontology = nullptr;
  AffinityLexicon affinity;
  CounterPairing pairing;
  DetectOptions options;
  bool json = true;

  std::vector<CounterOutcome> counters(const ScoreTable& scores) const {
    CounterPairing usable;
    for (const auto& pair : pairing.pairs) {
      if (scores.contains(pair.first) && scores.contains(pair.second)) {
        usable.pairs.push_back(pair);
      }
    }
    return counter_compare(scores, usable);
  }

  std::string render(const DetectionResult& result, std::string_view source) const {
    if (json) return result_to_json(result, source) + "\n";
    return result_to_text(result, source, counters(result.scores));
  }
};

std::unique_ptr<Engine> make_engine(Settings s) {
  merge_config(s);
  auto engine = std::make_unique<Engine>();

  const std::string mode_name = s.mode.value_or("keyword");
  const auto mode = parse_mode(mode_name);
  if (!mode) throw UsageError("unknown mode '" + mode_name + "'");
  const std::string weighting_name = s.depth_weighting.value_or("inverse");
  const auto weighting = parse_depth_weighting(weighting_name);
  if (!weighting) throw UsageError("unknown depth weighting '" + weighting_name + "'");
  const std::string format = s.format.value_or("json");
  if (format != "json" && format != "text") {
    throw UsageError("unknown format '" + format + "'");
  }
  const double alpha = s.alpha.value_or(0.5);
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw UsageError("alpha must lie in [0, 1]");
  if (s.negation_window.value_or(0) < 0 || s.intensity_window.value_or(0) < 0) {
    throw UsageError("windows must be nonnegative");
  }
  if (*mode != Mode::keyword && !s.affinity) {
    throw UsageError("--mode " + mode_name + " requires --affinity");
  }

  if (s.ontology) {
    engine->owned_ontology = EmotionOntology::load_file(*s.ontology);
    engine->ontology = &*engine->owned_ontology;
  } else {
    engine->ontology = &EmotionOntology::bundled();
  }

  DetectOptions& opts = engine->options;
  opts.mode = *mode;
  opts.weighting = *weighting;
  opts.alpha = alpha;
  if (s.negation) opts.spotting.negation_cues = load_negation_cues(*s.negation);
  if (s.intensity) opts.spotting.intensity_map = load_intensity_map(*s.intensity);
  if (s.negation_window) opts.spotting.negation_window = static_cast<std::size_t>(*s.negation_window);
  if (s.intensity_window) {
    opts.spotting.intensity_window = static_cast<std::size_t>(*s.intensity_window);
  }
  if (s.affinity) {
    engine->affinity = load_affinity_lexicon(*s.affinity, engine->ontology);
    opts.affinity = &engine->affinity;
  }
  engine->pairing = s.pairs ? load_counter_pairing(*s.pairs, engine->ontology)
                            : CounterPairing::defaults();
  engine->json = format == "json";
  return engine;
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  return read_file(path);
}

int cmd_detect(const Settings& settings, const std::string& input, std::istream& in,
               std::ostream& out) {
  const auto engine = make_engine(settings);
  const std::string text = read_input(input, in);
  out << engine->render(detect(text, *engine->ontology, engine->options), input);
  return kExitOk;
}

struct Document {
  std::string source;
  std::optional<std::string> text;  // empty when unreadable
};

std::vector<Document> collect_directory(const fs::path& dir, std::ostream& err) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw DataError(dir.string(), 0, "not a readable directory");
  }
  std::vector<fs::path> files;
  fs::directory_iterator it(dir, ec);
  if (ec) throw DataError(dir.string(), 0, "cannot list directory: " + ec.message());
  for (const auto& entry : it) {
    if (entry.path().extension() != ".txt") continue;
    if (entry.is_directory(ec)) continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });

  std::vector<Document> docs;
  for (const fs::path& file : files) {
    Document doc{file.filename().string(), std::nullopt};
    try {
      doc.text = read_file(file);
    } catch (const DataError& e) {
      err << "warning: " << e.what() << '\n';
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<Document> collect_lines(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw DataError(file.string(), 0, "cannot open file");
  std::vector<Document> docs;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    docs.push_back({file.filename().string() + ":" + std::to_string(number), line});
  }
  return docs;
}

int cmd_batch(const Settings& settings, const std::optional<std::string>& dir,
              const std::optional<std::string>& lines,
              const std::optional<std::string>& out_path, unsigned jobs, std::ostream& out,
              std::ostream& err) {
  if (dir.has_value() == lines.has_value()) {
    throw UsageError("batch needs exactly one of --dir or --lines");
  }
  auto engine = make_engine(settings);
  engine->json = true;
  const std::vector<Document> docs =
      dir ? collect_directory(*dir, err) : collect_lines(*lines);

  std::vector<std::string> records(docs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < docs.size(); i = next++) {
      if (!docs[i].text) continue;
      records[i] = result_to_json(
          detect(*docs[i].text, *engine->ontology, engine->options), docs[i].source);
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, docs.size()));
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }

  std::ofstream file;
  if (out_path) {
    file.open(*out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw DataError(*out_path, 0, "cannot open output file");
  }
  std::ostream& sink = out_path ? static_cast<std::ostream&>(file) : out;
  std::size_t written = 0;
  std::size_t warnings = 0;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (!docs[i].text) {
      ++warnings;
      continue;
    }
    sink << records[i] << '\n';
    ++written;
  }
  sink.flush();

  std::ostream& summary = out_path ? out : err;
  summary << written << " documents";
  if (warnings > 0) summary << ", " << warnings << " warnings";
  summary << '\n';
  return kExitOk;
}

int cmd_eval(const Settings& settings, const std::string& corpus_path, std::ostream& out) {
  const auto engine = make_engine(settings);
  std::ifstream in(corpus_path, std::ios::binary);
  if (!in) throw DataError(corpus_path, 0, "cannot open corpus");
  const auto corpus = parse_corpus(in, corpus_path, *engine->ontology);
  const EvalReport report = evaluate(corpus, *engine->ontology, engine->options);
  out << report.to_json() << '\n' << report.confusion_text();
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Keyword-spotting emotion detection over a three-level emotion ontology",
               "emodetect"};
  app.require_subcommand(1);

  Settings detect_settings;
  std::string input = "-";
  auto* detect_cmd = app.add_subcommand("detect", "Classify a single document");
  add_shared_options(*detect_cmd, detect_settings);
  detect_cmd->add_option("input", input, "Document path, or - for stdin");

  Settings batch_settings;
  std::optional<std::string> batch_dir, batch_lines, batch_out;
  unsigned jobs = 1;
  auto* batch_cmd = app.add_subcommand("batch", "Classify many documents as JSON lines");
  add_shared_options(*batch_cmd, batch_settings);
  batch_cmd->add_option("--dir", batch_dir, "Directory of .txt documents");
  batch_cmd->add_option("--lines", batch_lines, "File with one document per line");
  batch_cmd->add_option("--out", batch_out, "Output file (default: stdout)");
  batch_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  Settings eval_settings;
  std::string corpus;
  auto* eval_cmd = app.add_subcommand("eval", "Score a labeled corpus");
  add_shared_options(*eval_cmd, eval_settings);
  eval_cmd->add_option("--corpus", corpus, "TSV of label<TAB>text")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*detect_cmd) return cmd_detect(detect_settings, input, in, out);
    if (*batch_cmd) {
      return cmd_batch(batch_settings, batch_dir, batch_lines, batch_out, jobs, out, err);
    }
    return cmd_eval(eval_settings, corpus, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const ScoringError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace emodetect::cli
