#include "kpe/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "kpe/corpus.hpp"
#include "kpe/eval.hpp"
#include "kpe/extractor.hpp"
#include "kpe/graph.hpp"
#include "kpe/kea.hpp"
#include "kpe/parallel.hpp"
#include "kpe/stat_models.hpp"
#include "kpe/text.hpp"

namespace kpe::cli {

namespace {

namespace fs = std::filesystem;

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

struct CommonOptions {
  std::string stopwords;
  std::string pos_lexicon;
  std::size_t jobs = 1;
};

Analyzer make_analyzer(const CommonOptions& c) {
  auto stopwords = c.stopwords.empty() ? StopwordList::persian() : StopwordList::load(c.stopwords);
  std::shared_ptr<const PosTagger> tagger =
      c.pos_lexicon.empty() ? std::make_shared<LexiconTagger>()
                            : std::make_shared<LexiconTagger>(LexiconTagger::load(c.pos_lexicon));
  return Analyzer(std::move(stopwords), std::move(tagger));
}

void require_file(const std::string& path) {
  if (path != "-" && !fs::is_regular_file(path)) throw DataError("input file not found: " + path);
}

LoadResult read_records(const std::string& path, Streams& io) {
  require_file(path);
  LoadResult result;
  if (path == "-") {
    result = load_records(io.in);
  } else {
    result = load_records_file(path);
  }
  for (const auto& r : result.rejected) io.err << path << ":" << r.line << ": skipped: " << r.reason << '\n';
  for (const auto& w : result.warnings) io.err << path << ": " << w << '\n';
  io.err << "loaded " << result.records.size() << " records from " << path << '\n';
  return result;
}

// Writes to a file, or to the result stream for "-".
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path == "-" || path.empty()) {
      os_ = &fallback;
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw DataError("cannot write " + path);
    os_ = &file_;
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

std::vector<ProcessedDocument> analyze_all(const std::vector<NewsRecord>& records,
                                           const Analyzer& analyzer, std::size_t jobs) {
  std::vector<ProcessedDocument> docs(records.size());
  parallel_for(records.size(), jobs, [&](std::size_t i) { docs[i] = analyzer.analyze(records[i].body); });
  return docs;
}

void validate_methods(const std::vector<std::string>& names) {
  for (const auto& n : names) method_label(n);
}

// ---------------------------------------------------------------------------
// clean

struct CleanOptions {
  std::string input;
  std::string output = "-";
  std::string audit;
  FilterConfig filters;
};

int run_clean(const CleanOptions& o, Streams& io) {
  o.filters.validate();
  const auto loaded = read_records(o.input, io);
  const auto result = apply_filters(loaded.records, o.filters);
  Output out(o.output, io.out);
  write_records(out.stream(), result.kept);
  if (!o.audit.empty()) {
    Output audit(o.audit, io.out);
    write_audit(audit.stream(), result.rejections);
  }
  io.err << "kept " << result.kept.size() << " of " << loaded.records.size() << " records, rejected "
         << result.rejections.size() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// stats

struct StatsOptions {
  std::string input;
  bool json = false;
};

int run_stats(const StatsOptions& o, const CommonOptions& common, Streams& io) {
  const auto loaded = read_records(o.input, io);
  const auto stats = compute_stats(loaded.records, make_analyzer(common));
  io.out << (o.json ? render_stats_json(stats) : render_stats_text(stats));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// split

struct SplitOptions {
  std::string input;
  std::string out_dir;
  std::size_t test_size = kDefaultTestSize;
  std::size_t val_size = kDefaultValidationSize;
  std::uint64_t seed = 42;
};

int run_split(const SplitOptions& o, Streams& io) {
  const auto loaded = read_records(o.input, io);
  const auto split = split_corpus(loaded.records, o.test_size, o.val_size, o.seed);
  fs::create_directories(o.out_dir);
  const std::pair<const char*, const std::vector<NewsRecord>*> parts[] = {
      {"train.jsonl", &split.train}, {"validation.jsonl", &split.validation}, {"test.jsonl", &split.test}};
  for (const auto& [name, records] : parts) {
    Output out((fs::path(o.out_dir) / name).string(), io.out);
    write_records(out.stream(), *records);
    io.err << name << ": " << records->size() << " records\n";
  }
  io.err << "split seed " << o.seed << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// df

struct DfBuildOptions {
  std::string input;
  std::string output;
  std::size_t max_n = 3;
};

int run_df_build(const DfBuildOptions& o, const CommonOptions& common, Streams& io) {
  const auto loaded = read_records(o.input, io);
  if (loaded.records.empty()) throw DataError("no records in " + o.input);
  const auto docs = analyze_all(loaded.records, make_analyzer(common), common.jobs);
  const auto df = build_df(docs, o.max_n);
  Output out(o.output, io.out);
  df.save(out.stream());
  io.err << "document frequency table: " << df.total_documents() << " documents, " << df.size()
         << " terms\n";
  return kExitOk;
}

struct DfInspectOptions {
  std::string df;
  std::vector<std::string> terms;
  std::size_t top = 20;
};

DocumentFrequencyTable load_df(const std::string& path) {
  require_file(path);
  return DocumentFrequencyTable::load(fs::path(path));
}

int run_df_inspect(const DfInspectOptions& o, const CommonOptions& common, Streams& io) {
  const auto df = load_df(o.df);
  if (!o.terms.empty()) {
    const auto analyzer = make_analyzer(common);
    for (const auto& t : o.terms) {
      const auto key = phrase_match_key(analyzer, t, false);
      io.out << key << '\t' << (df.contains(key) ? df.count(key) : 0) << '\n';
    }
    return kExitOk;
  }
  io.out << "format " << DocumentFrequencyTable::kMagic << " v" << DocumentFrequencyTable::kVersion << '\n'
         << "documents " << df.total_documents() << '\n'
         << "max_n " << df.max_n() << '\n'
         << "terms " << df.size() << '\n';
  std::vector<std::pair<std::string, std::size_t>> entries(df.entries().begin(), df.entries().end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  for (std::size_t i = 0; i < entries.size() && i < o.top; ++i) {
    io.out << entries[i].first << '\t' << entries[i].second << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// kea train

struct KeaTrainOptions {
  std::string input;
  std::string df;
  std::string output;
  KeaTrainingConfig config;
};

int run_kea_train(const KeaTrainOptions& o, const CommonOptions& common, Streams& io) {
  const auto loaded = read_records(o.input, io);
  if (loaded.records.empty()) throw DataError("no training records in " + o.input);
  const auto analyzer = make_analyzer(common);
  DocumentFrequencyTable df;
  if (!o.df.empty()) {
    df = load_df(o.df);
  } else {
    io.err << "no --df given; building document frequencies from the training records\n";
    df = build_df(analyze_all(loaded.records, analyzer, common.jobs), o.config.max_n);
  }
  KeaModel model;
  try {
    model = kea_train(loaded.records, analyzer, df, o.config);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  Output out(o.output, io.out);
  model.save(out.stream());
  io.err << "trained on " << model.positives << " positive and " << model.negatives
         << " negative candidates\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// extract

struct ExtractOptions {
  std::string method;
  std::size_t k = 10;
  std::string input;
  std::string text;
  std::string df;
  std::string model;
  std::string graph_dump;
  bool scores = false;
};

void dump_graph(const ProcessedDocument& doc, const std::string& method, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  if (method == "singlerank") {
    const auto wg = build_singlerank_graph(doc);
    write_graph_dump(out, wg.graph, wg.labels);
  } else if (method == "topicrank") {
    const auto tg = build_topic_graph(doc);
    write_graph_dump(out, tg.graph, tg.labels);
  } else {
    auto mg = build_multipartite_graph(doc);
    if (!mg.candidates.empty()) adjust_multipartite_weights(mg.graph, mg.candidates, mg.clustering, 1.1);
    write_graph_dump(out, mg.graph, mg.labels);
  }
}

int run_extract(const ExtractOptions& o, const CommonOptions& common, Streams& io) {
  validate_methods({o.method});
  if (o.input.empty() == o.text.empty()) throw UsageError("exactly one of --input or --text is required");
  ExtractorResources res;
  if (method_needs_df(o.method)) {
    if (o.df.empty()) throw UsageError(o.method + " needs --df");
    res.df = std::make_shared<DocumentFrequencyTable>(load_df(o.df));
  }
  if (method_needs_model(o.method)) {
    if (o.model.empty()) throw UsageError(o.method + " needs --model");
    require_file(o.model);
    res.kea = std::make_shared<KeaModel>(KeaModel::load(fs::path(o.model)));
  }
  const auto extractor = make_extractor(o.method, res);
  const auto analyzer = make_analyzer(common);

  std::vector<NewsRecord> records;
  if (!o.text.empty()) {
    require_file(o.text);
    std::ostringstream body;
    if (o.text == "-") {
      body << io.in.rdbuf();
    } else {
      std::ifstream f(o.text, std::ios::binary);
      body << f.rdbuf();
    }
    NewsRecord record;
    record.body = body.str();
    records.push_back(std::move(record));
  } else {
    records = read_records(o.input, io).records;
  }

  const auto docs = analyze_all(records, analyzer, common.jobs);
  std::vector<std::vector<ScoredPhrase>> results(docs.size());
  parallel_for(docs.size(), common.jobs, [&](std::size_t i) { results[i] = extractor->extract(docs[i], o.k); });

  if (!o.graph_dump.empty()) {
    if (o.method == "singlerank" || o.method == "topicrank" || o.method == "multipartiterank") {
      fs::create_directories(o.graph_dump);
      for (std::size_t i = 0; i < docs.size(); ++i) {
        dump_graph(docs[i], o.method, fs::path(o.graph_dump) / (std::to_string(i) + "." + o.method + ".graph"));
      }
    } else {
      io.err << "--graph-dump ignored: " << o.method << " does not build a graph\n";
    }
  }

  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (!o.text.empty()) {
      for (const auto& p : results[i]) {
        io.out << p.text;
        if (o.scores) io.out << '\t' << p.score;
        io.out << '\n';
      }
    } else {
      nlohmann::ordered_json j;
      j["url"] = records[i].url;
      j["method"] = o.method;
      j["keyphrases"] = nlohmann::ordered_json::array();
      for (const auto& p : results[i]) {
        if (o.scores) {
          j["keyphrases"].push_back({{"text", p.text}, {"score", p.score}});
        } else {
          j["keyphrases"].push_back(p.text);
        }
      }
      io.out << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::string input;
  std::string train;
  std::string df;
  std::string model;
  std::vector<std::string> methods;
  std::optional<std::size_t> min_gold;
  std::vector<std::size_t> ks{5, 10};
  bool strict_at_k = false;
  bool exact_match = false;
  std::string json;
  std::size_t bins = 8;
};

int run_bench(const BenchOptions& o, const CommonOptions& common, Streams& io) {
  const bool explicit_methods = !o.methods.empty();
  std::vector<std::string> methods = explicit_methods ? o.methods : method_names();
  validate_methods(methods);
  const bool need_df = std::any_of(methods.begin(), methods.end(), [](const auto& m) { return method_needs_df(m); });
  const bool need_model =
      std::any_of(methods.begin(), methods.end(), [](const auto& m) { return method_needs_model(m); });
  if (need_model && o.model.empty() && o.train.empty()) {
    if (explicit_methods) throw UsageError("kea needs --model or --train");
    io.err << "no --model or --train given; kea left out of the benchmark\n";
    methods.erase(std::remove(methods.begin(), methods.end(), "kea"), methods.end());
  }

  const auto analyzer = make_analyzer(common);
  const auto test = read_records(o.input, io);
  std::optional<LoadResult> train;
  if (!o.train.empty()) train = read_records(o.train, io);

  ExtractorResources res;
  if (need_df) {
    if (!o.df.empty()) {
      res.df = std::make_shared<DocumentFrequencyTable>(load_df(o.df));
    } else if (train && !train->records.empty()) {
      io.err << "building document frequencies from the training records\n";
      res.df = std::make_shared<DocumentFrequencyTable>(build_df(analyze_all(train->records, analyzer, common.jobs)));
    } else if (!test.records.empty()) {
      io.err << "building document frequencies from the evaluated records\n";
      res.df = std::make_shared<DocumentFrequencyTable>(build_df(analyze_all(test.records, analyzer, common.jobs)));
    }
  }
  if (std::find(methods.begin(), methods.end(), "kea") != methods.end()) {
    if (!o.model.empty()) {
      require_file(o.model);
      res.kea = std::make_shared<KeaModel>(KeaModel::load(fs::path(o.model)));
    } else if (res.df) {
      KeaTrainingConfig cfg;
      cfg.bins = o.bins;
      cfg.exact_match = o.exact_match;
      try {
        res.kea = std::make_shared<KeaModel>(kea_train(train->records, analyzer, *res.df, cfg));
      } catch (const std::invalid_argument& e) {
        throw DataError(std::string("kea training failed: ") + e.what());
      }
      io.err << "trained kea on " << train->records.size() << " records\n";
    }
  }

  std::vector<std::unique_ptr<KeyphraseExtractor>> owned;
  std::vector<const KeyphraseExtractor*> extractors;
  for (const auto& m : methods) {
    if (method_needs_df(m) && !res.df) {
      io.err << m << " left out: no documents to build frequencies from\n";
      continue;
    }
    owned.push_back(make_extractor(m, res));
    extractors.push_back(owned.back().get());
  }

  const auto docs = prepare_documents(test.records, analyzer, o.exact_match, common.jobs);
  std::vector<std::size_t> min_golds = o.min_gold ? std::vector<std::size_t>{*o.min_gold}
                                                  : std::vector<std::size_t>{2, 3};
  std::vector<EvalReport> reports;
  for (auto mg : min_golds) {
    BenchmarkConfig cfg;
    cfg.ks = o.ks;
    cfg.min_gold = mg;
    cfg.strict_at_k = o.strict_at_k;
    cfg.exact_match = o.exact_match;
    cfg.jobs = common.jobs;
    reports.push_back(run_benchmark(docs, extractors, cfg));
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) io.out << '\n';
    io.out << render_report_text(reports[i]);
  }
  for (const auto& r : reports) {
    for (const auto& d : r.diagnostics) io.err << d << '\n';
  }
  if (!o.json.empty()) {
    Output out(o.json, io.out);
    out.stream() << render_report_json(reports);
  }
  const bool failed = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.any_failures(); });
  return failed ? kExitData : kExitOk;
}

// Logs global options and those of the subcommand that ran.
void log_resolved_config(const CLI::App& app, std::ostream& err) {
  std::string prefix;
  for (const CLI::App* sub = &app; sub;) {
    const auto parsed = sub->get_subcommands();
    if (parsed.empty()) break;
    sub = parsed.front();
    prefix += sub->get_name() + ".";
  }
  err << "# resolved configuration\n";
  std::istringstream lines(app.config_to_str(true, false));
  for (std::string line; std::getline(lines, line);) {
    const auto key = line.substr(0, line.find('='));
    if (key.find('.') == std::string::npos || key.rfind(prefix, 0) == 0) err << line << '\n';
  }
}

void add_filter_options(CLI::App* sub, FilterConfig& f) {
  sub->add_option("--min-body-tokens", f.min_body_tokens, "Minimum body word tokens")->capture_default_str();
  sub->add_option("--max-body-tokens", f.max_body_tokens, "Maximum body word tokens")->capture_default_str();
  sub->add_option("--min-keyphrases", f.min_keyphrases, "Minimum keyphrases per record")->capture_default_str();
  sub->add_option("--min-keyphrase-chars", f.min_keyphrase_chars, "Minimum characters per keyphrase")
      ->capture_default_str();
  sub->add_option("--max-keyphrase-tokens", f.max_keyphrase_tokens, "Maximum tokens per keyphrase")
      ->capture_default_str();
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Persian keyphrase extraction toolkit and benchmark harness", "kpe"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Configuration file (INI or TOML)")->envname(kConfigEnv);

  CommonOptions common;
  app.add_option("--stopwords", common.stopwords, "Stopword list, one word per line")->check(CLI::ExistingFile);
  app.add_option("--pos-lexicon", common.pos_lexicon, "POS lexicon, word<TAB>TAG per line")
      ->check(CLI::ExistingFile);
  app.add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  CleanOptions clean;
  auto* clean_cmd = app.add_subcommand("clean", "Load, filter and write the kept records");
  clean_cmd->add_option("--input", clean.input, "Input JSONL ('-' for stdin)")->required();
  clean_cmd->add_option("--output", clean.output, "Output JSONL ('-' for stdout)")->capture_default_str();
  clean_cmd->add_option("--audit", clean.audit, "Write one JSON line per rejected record");
  add_filter_options(clean_cmd, clean.filters);

  StatsOptions stats;
  auto* stats_cmd = app.add_subcommand("stats", "Corpus statistics report");
  stats_cmd->add_option("--input", stats.input, "Input JSONL")->required();
  stats_cmd->add_flag("--json", stats.json, "Machine-readable output");

  SplitOptions split;
  auto* split_cmd = app.add_subcommand("split", "Seeded train/validation/test split");
  split_cmd->add_option("--input", split.input, "Input JSONL")->required();
  split_cmd->add_option("--out-dir", split.out_dir, "Directory for train/validation/test.jsonl")->required();
  split_cmd->add_option("--test-size", split.test_size, "Test records")->capture_default_str();
  split_cmd->add_option("--val-size", split.val_size, "Validation records")->capture_default_str();
  split_cmd->add_option("--seed", split.seed, "Shuffle seed")->capture_default_str();

  auto* df_cmd = app.add_subcommand("df", "Document frequency tables");
  df_cmd->require_subcommand(1);
  DfBuildOptions df_build;
  auto* df_build_cmd = df_cmd->add_subcommand("build", "Build a table from a corpus");
  df_build_cmd->add_option("--input", df_build.input, "Input JSONL")->required();
  df_build_cmd->add_option("--output", df_build.output, "Table path ('-' for stdout)")->required();
  df_build_cmd->add_option("--max-n", df_build.max_n, "Longest n-gram counted")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  DfInspectOptions df_inspect;
  auto* df_inspect_cmd = df_cmd->add_subcommand("inspect", "Summarize a table or look up terms");
  df_inspect_cmd->add_option("--df", df_inspect.df, "Table path")->required();
  df_inspect_cmd->add_option("--term", df_inspect.terms, "Phrase to look up (repeatable)");
  df_inspect_cmd->add_option("--top", df_inspect.top, "Most frequent terms to list")->capture_default_str();

  auto* kea_cmd = app.add_subcommand("kea", "Supervised KEA model");
  kea_cmd->require_subcommand(1);
  KeaTrainOptions kea_train_opts;
  auto* kea_train_cmd = kea_cmd->add_subcommand("train", "Train a model on gold-annotated records");
  kea_train_cmd->add_option("--input", kea_train_opts.input, "Training JSONL")->required();
  kea_train_cmd->add_option("--df", kea_train_opts.df, "Document frequency table (built from input if omitted)");
  kea_train_cmd->add_option("--output", kea_train_opts.output, "Model path ('-' for stdout)")->required();
  kea_train_cmd->add_option("--bins", kea_train_opts.config.bins, "Discretization bins")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  kea_train_cmd->add_option("--max-n", kea_train_opts.config.max_n, "Longest candidate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  kea_train_cmd->add_flag("--exact-match", kea_train_opts.config.exact_match, "Match gold on surfaces");

  ExtractOptions extract;
  ExtractOptions kea_extract_opts;
  kea_extract_opts.method = "kea";
  auto add_extract_options = [](CLI::App* cmd, ExtractOptions& o) {
    cmd->add_option("--k", o.k, "Phrases per document")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--input", o.input, "Input JSONL; one JSON line of results per record");
    cmd->add_option("--text", o.text, "Plain-text document ('-' for stdin); one phrase per line");
    cmd->add_option("--df", o.df, "Document frequency table");
    cmd->add_option("--model", o.model, "KEA model");
    cmd->add_flag("--scores", o.scores, "Print scores");
  };
  auto* extract_cmd = app.add_subcommand("extract", "Extract keyphrases with one method");
  extract_cmd->add_option("--method", extract.method, "Method name")->required();
  add_extract_options(extract_cmd, extract);
  extract_cmd->add_option("--graph-dump", extract.graph_dump, "Directory for per-document graph dumps");
  auto* kea_extract_cmd = kea_cmd->add_subcommand("extract", "Extract keyphrases with a trained model");
  add_extract_options(kea_extract_cmd, kea_extract_opts);

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "P/R/F1 at k benchmark");
  bench_cmd->add_option("--input", bench.input, "Evaluated JSONL")->required();
  bench_cmd->add_option("--train", bench.train, "Training JSONL for document frequencies and KEA");
  bench_cmd->add_option("--df", bench.df, "Document frequency table");
  bench_cmd->add_option("--model", bench.model, "KEA model");
  bench_cmd->add_option("--methods", bench.methods, "Methods to run (default: all)")->delimiter(',');
  bench_cmd->add_option("--min-gold", bench.min_gold,
                        "Only documents with at least this many gold keyphrases (default: reports for 2 and 3)");
  bench_cmd->add_option("--k", bench.ks, "Cutoffs")->delimiter(',')->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_flag("--strict-at-k", bench.strict_at_k, "Divide precision by k");
  bench_cmd->add_flag("--exact-match", bench.exact_match, "Match on surfaces instead of stems");
  bench_cmd->add_option("--json", bench.json, "Write the machine-readable report here");
  bench_cmd->add_option("--bins", bench.bins, "KEA bins when training on --train")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  log_resolved_config(app, err);

  try {
    if (clean_cmd->parsed()) return run_clean(clean, io);
    if (stats_cmd->parsed()) return run_stats(stats, common, io);
    if (split_cmd->parsed()) return run_split(split, io);
    if (df_build_cmd->parsed()) return run_df_build(df_build, common, io);
    if (df_inspect_cmd->parsed()) return run_df_inspect(df_inspect, common, io);
    if (kea_train_cmd->parsed()) return run_kea_train(kea_train_opts, common, io);
    if (kea_extract_cmd->parsed()) return run_extract(kea_extract_opts, common, io);
    if (extract_cmd->parsed()) return run_extract(extract, common, io);
    if (bench_cmd->parsed()) return run_bench(bench, common, io);
  } catch (const std::invalid_argument& e) {
    err << "kpe: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "kpe: " << e.what() << '\n';
    return kExitData;
  }
  err << "kpe: no subcommand\n";
  return kExitUsage;
}

}  // namespace kpe::cli
