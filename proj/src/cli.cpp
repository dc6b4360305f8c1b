// Copyright 2026 The Unseen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unseen/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "unseen/conllu.hpp"
#include "unseen/error.hpp"
#include "unseen/eval.hpp"
#include "unseen/languages.hpp"
#include "unseen/ner.hpp"
#include "unseen/raw_text.hpp"
#include "unseen/script.hpp"
#include "unseen/splits.hpp"
#include "unseen/taxonomy.hpp"
#include "unseen/translit.hpp"

namespace unseen::cli {
namespace {

constexpr std::string_view kStdio = "-";

// Stream plumbing shared by every subcommand. Output is buffered and only
// written once the command has succeeded, so a failing command never leaves
// a truncated file behind.
class Io {
 public:
  Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  template <typename Fn>
  auto read(const std::string& path, Fn&& fn) {
    if (path == kStdio) return fn(in_);
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open " + path);
    return fn(file);
  }

  void write(const std::string& path, const std::string& data) {
    if (path == kStdio) {
      out_ << data;
      out_.flush();
      return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot write " + path);
    file << data;
    if (!file.flush()) throw Error("cannot write " + path);
  }

 private:
  std::istream& in_;
  std::ostream& out_;
};

std::vector<corpus::ConlluSentence> read_conllu(Io& io, const std::string& path) {
  return io.read(path, [](std::istream& s) { return corpus::parse_conllu(s); });
}

std::vector<corpus::NerSentence> read_ner(Io& io, const std::string& path,
                                          const corpus::NerOptions& options) {
  return io.read(path,
                 [&](std::istream& s) { return corpus::parse_ner(s, options); });
}

std::vector<std::string> read_raw(Io& io, const std::string& path) {
  return io.read(path, [](std::istream& s) { return corpus::read_lines(s); });
}

std::size_t count_sentences(Io& io, const std::string& path,
                            const std::string& format) {
  if (format == "conllu") return read_conllu(io, path).size();
  if (format == "ner") return read_ner(io, path, {corpus::Iob2Mode::kRepair}).size();
  std::size_t lines = 0;
  for (const std::string& line : read_raw(io, path)) {
    lines += line.empty() ? 0 : 1;
  }
  return lines;
}

const std::vector<std::string> kFormats = {"raw", "conllu", "ner"};

// ---------------------------------------------------------------------------
// translit

struct TranslitArgs {
  std::string rules;
  std::vector<std::string> inputs;
  std::string out = "-";
  std::string format = "raw";
  bool no_lemma = false;
  bool repair = false;
  bool strip_prefix = false;
  unsigned jobs = 1;
};

void run_translit(Io& io, const TranslitArgs& args) {
  const translit::Transliterator transliterator(
      translit::resolve_ruleset(args.rules));
  const std::vector<std::string> inputs =
      args.inputs.empty() ? std::vector<std::string>{"-"} : args.inputs;

  std::ostringstream result;
  for (const std::string& input : inputs) {
    if (args.format == "conllu") {
      const auto sentences = read_conllu(io, input);
      corpus::write_conllu(
          result, corpus::transliterate_conllu(sentences, transliterator,
                                               {!args.no_lemma, args.jobs}));
    } else if (args.format == "ner") {
      const auto sentences = read_ner(
          io, input,
          {args.repair ? corpus::Iob2Mode::kRepair : corpus::Iob2Mode::kStrict,
           args.strip_prefix});
      corpus::write_ner(result, corpus::transliterate_ner(
                                    sentences, transliterator, args.jobs));
    } else {
      corpus::write_lines(result,
                          corpus::transliterate_lines(read_raw(io, input),
                                                      transliterator, args.jobs));
    }
  }
  io.write(args.out, result.str());
}

// ---------------------------------------------------------------------------
// rules-validate

int run_rules_validate(Io& io, const std::string& rules, const std::string& out,
                       std::ostream& err) {
  const translit::RuleSet ruleset = translit::resolve_ruleset(rules);
  const translit::ValidationReport report = translit::validate_ruleset(ruleset);
  std::ostringstream result;
  if (report.ok()) {
    result << "valid\t" << ruleset.name << '\t' << ruleset.rules.size()
           << " rules\n";
    io.write(out, result.str());
    return kExitOk;
  }
  result << "kind\trule\tline\tgrapheme\tmessage\n";
  for (const translit::Issue& issue : report.issues) {
    result << translit::to_string(issue.kind) << '\t' << issue.rule + 1 << '\t'
           << ruleset.rules[issue.rule].line << '\t' << issue.grapheme << '\t'
           << issue.message << '\n';
  }
  io.write(out, result.str());
  err << "error: ruleset '" << ruleset.name << "' has "
      << report.issues.size() << " issue(s)\n";
  return kExitDataError;
}

// ---------------------------------------------------------------------------
// corpus-stats

void run_corpus_stats(Io& io, const std::string& input,
                      const std::string& format, const std::string& out) {
  std::ostringstream result;
  result << "key\tvalue\n";
  auto row = [&](std::string_view key, auto value) {
    result << key << '\t' << value << '\n';
  };
  if (format == "conllu") {
    const auto sentences = read_conllu(io, input);
    std::size_t words = 0, mwts = 0, empty = 0;
    std::vector<std::string> forms;
    std::map<std::string, std::size_t> upos;
    for (const auto& s : sentences) {
      words += s.tokens.size();
      mwts += s.multiword_tokens.size();
      empty += s.empty_nodes.size();
      for (const auto& t : s.tokens) {
        forms.push_back(t.form);
        ++upos[t.upos];
      }
    }
    row("sentences", sentences.size());
    row("words", words);
    row("multiword_tokens", mwts);
    row("empty_nodes", empty);
    row("upos_tags", upos.size());
    const script::ScriptDistribution d = script::script_distribution(forms);
    for (ScriptClass c : kAllScriptClasses) {
      row("script." + std::string(to_string(c)), d.count(c));
    }
  } else if (format == "ner") {
    const auto sentences = read_ner(io, input, {corpus::Iob2Mode::kRepair});
    std::size_t tokens = 0, entities = 0;
    std::map<std::string, std::size_t> by_type;
    for (const auto& s : sentences) {
      tokens += s.tokens.size();
      for (const auto& span : corpus::extract_spans(s.labels)) {
        ++entities;
        ++by_type[span.type];
      }
    }
    row("sentences", sentences.size());
    row("tokens", tokens);
    row("entities", entities);
    for (const auto& [type, n] : by_type) row("entities." + type, n);
  } else {
    const auto lines = read_raw(io, input);
    std::size_t nonempty = 0, tokens = 0;
    for (const std::string& line : lines) {
      std::istringstream words(line);
      std::string w;
      bool any = false;
      while (words >> w) {
        ++tokens;
        any = true;
      }
      nonempty += any ? 1 : 0;
    }
    row("lines", lines.size());
    row("nonempty_lines", nonempty);
    row("unique_lines", corpus::dedup_lines(lines).size());
    row("tokens", tokens);
  }
  io.write(out, result.str());
}

// ---------------------------------------------------------------------------
// split

struct SplitArgs {
  std::optional<std::size_t> n_train;
  std::optional<std::size_t> n_test;
  std::string train;
  std::string test;
  std::string dev;
  std::string format = "conllu";
  bool has_dev = false;
  int k = splits::kDefaultFolds;
  std::uint64_t seed = 0;
  std::string out = "-";
  std::string folds;
  std::string runs;
};

void run_split(Io& io, const SplitArgs& args) {
  const std::size_t n_train =
      args.n_train ? *args.n_train : count_sentences(io, args.train, args.format);
  std::size_t n_test = 0;
  if (args.n_test) {
    n_test = *args.n_test;
  } else if (!args.test.empty()) {
    n_test = count_sentences(io, args.test, args.format);
  }
  const bool has_dev = args.has_dev || !args.dev.empty();
  const splits::SplitPlan plan =
      splits::plan_splits(n_train, has_dev, args.k, args.seed);
  const std::size_t pool = n_train + n_test;

  std::ostringstream plan_text;
  splits::write_plan(plan_text, plan, n_train, pool);
  if (plan.strategy == splits::Strategy::kCrossValidation) {
    plan_text << "pool_order\ttrain+test\n";
    const splits::FoldAssignment folds = splits::make_folds(pool, plan.k, plan.seed);
    if (!args.folds.empty()) {
      std::ostringstream manifest;
      splits::write_fold_manifest(manifest, folds);
      io.write(args.folds, manifest.str());
    }
    if (!args.runs.empty()) {
      std::ostringstream manifest;
      splits::write_run_manifest(manifest, plan);
      io.write(args.runs, manifest.str());
    }
  }
  io.write(args.out, plan_text.str());
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  std::string gold;
  std::vector<std::string> preds;
  std::vector<std::string> seeds;
  bool strict_deprel = false;
  bool repair = false;
  bool strip_prefix = false;
  std::string output_format = "tsv";
  std::string out = "-";
};

struct MetricValue {
  std::string metric;
  std::string value;  // already rounded to two decimals
};

std::vector<MetricValue> score_one(Io& io, std::string_view task,
                                   const EvalArgs& args,
                                   const std::string& pred_path) {
  if (task == "pos") {
    const auto gold = read_conllu(io, args.gold);
    const auto pred = read_conllu(io, pred_path);
    const eval::PosScore s = eval::eval_pos(gold, pred);
    return {{"upos", eval::format_percent(s.correct, s.total)}};
  }
  if (task == "dep") {
    const auto gold = read_conllu(io, args.gold);
    const auto pred = read_conllu(io, pred_path);
    const eval::DepScore s = eval::eval_dep(
        gold, pred,
        args.strict_deprel ? eval::DeprelMatch::kExact
                           : eval::DeprelMatch::kMainRelation);
    return {{"uas", eval::format_percent(s.head_correct, s.total)},
            {"las", eval::format_percent(s.labeled_correct, s.total)}};
  }
  const corpus::NerOptions gold_options{corpus::Iob2Mode::kStrict,
                                        args.strip_prefix};
  const corpus::NerOptions pred_options{
      args.repair ? corpus::Iob2Mode::kRepair : corpus::Iob2Mode::kStrict,
      args.strip_prefix};
  const auto gold = read_ner(io, args.gold, gold_options);
  const auto pred = read_ner(io, pred_path, pred_options);
  const eval::NerScore s = eval::eval_ner(gold, pred);
  return {{"precision", eval::format_percent(s.tp, s.tp + s.fp)},
          {"recall", eval::format_percent(s.tp, s.tp + s.fn)},
          {"f1", eval::format_percent(2 * s.tp, 2 * s.tp + s.fp + s.fn)}};
}

void run_eval(Io& io, std::string_view task, const EvalArgs& args) {
  if (!args.seeds.empty() && args.seeds.size() != args.preds.size()) {
    throw Error("--seeds lists " + std::to_string(args.seeds.size()) +
                " labels for " + std::to_string(args.preds.size()) +
                " prediction files");
  }
  struct Row {
    std::string metric;
    std::string value;
    std::optional<std::string> seed;
  };
  std::vector<Row> rows;
  std::map<std::string, std::vector<double>> per_metric;
  std::vector<std::string> metric_order;

  for (std::size_t i = 0; i < args.preds.size(); ++i) {
    std::optional<std::string> seed;
    if (!args.seeds.empty()) {
      seed = args.seeds[i];
    } else if (args.preds.size() > 1) {
      seed = std::to_string(i + 1);
    }
    for (MetricValue& m : score_one(io, task, args, args.preds[i])) {
      if (!per_metric.contains(m.metric)) metric_order.push_back(m.metric);
      per_metric[m.metric].push_back(std::stod(m.value));
      rows.push_back({m.metric, std::move(m.value), seed});
    }
  }
  if (args.preds.size() > 1) {
    for (const std::string& metric : metric_order) {
      const eval::RunAggregate a = eval::aggregate_runs(per_metric[metric]);
      rows.push_back({metric + "_mean", eval::format_score(a.mean), std::nullopt});
      rows.push_back({metric + "_sd", eval::format_score(a.sd), std::nullopt});
    }
  }

  std::ostringstream result;
  if (args.output_format == "jsonl") {
    for (const Row& row : rows) {
      nlohmann::ordered_json record;
      record["task"] = task;
      record["metric"] = row.metric;
      record["value"] = std::stod(row.value);
      if (!row.seed) {
        record["seed"] = nullptr;
      } else if (std::all_of(row.seed->begin(), row.seed->end(), ::isdigit) &&
                 row.seed->size() < 19) {
        record["seed"] = std::stoll(*row.seed);
      } else {
        record["seed"] = *row.seed;
      }
      result << record.dump() << '\n';
    }
  } else {
    result << "task\tmetric\tvalue\tseed\n";
    for (const Row& row : rows) {
      result << task << '\t' << row.metric << '\t' << row.value << '\t'
             << row.seed.value_or("-") << '\n';
    }
  }
  io.write(args.out, result.str());
}

// ---------------------------------------------------------------------------
// categorize

void run_categorize(Io& io, const std::string& input, double tau,
                    bool by_language, const std::string& out) {
  const std::vector<taxonomy::ScorePoint> points =
      io.read(input, [](std::istream& s) { return taxonomy::parse_score_points(s); });
  std::vector<taxonomy::CategoryPoint> located;
  located.reserve(points.size());
  for (const taxonomy::ScorePoint& p : points) {
    located.push_back(taxonomy::locate(p, tau));
  }
  std::ostringstream result;
  if (by_language) {
    taxonomy::write_language_categories(result,
                                        taxonomy::categorize_languages(located));
  } else {
    taxonomy::write_category_points(result, located);
  }
  io.write(out, result.str());
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Transliteration, corpus and evaluation tools for languages "
               "unseen by multilingual language models",
               "unseen"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "unseen 0.1.0");

  // translit
  TranslitArgs translit_args;
  CLI::App* translit_cmd =
      app.add_subcommand("translit", "Transliterate a corpus with a ruleset");
  translit_cmd
      ->add_option("--rules", translit_args.rules,
                   "Built-in ruleset name or rule file path")
      ->required();
  translit_cmd->add_option("--in", translit_args.inputs,
                           "Input files, processed in order ('-' = stdin)");
  translit_cmd->add_option("--out", translit_args.out, "Output file ('-' = stdout)");
  translit_cmd->add_option("--format", translit_args.format, "raw, conllu or ner")
      ->check(CLI::IsMember(kFormats));
  translit_cmd->add_flag("--no-lemma", translit_args.no_lemma,
                         "Leave CoNLL-U lemmas untouched");
  translit_cmd->add_flag("--repair", translit_args.repair,
                         "Repair dangling I- labels instead of failing");
  translit_cmd->add_flag("--strip-lang-prefix", translit_args.strip_prefix,
                         "Drop 'xx:' prefixes from NER tokens");
  translit_cmd->add_option("--jobs", translit_args.jobs, "Worker threads")
      ->check(CLI::Range(1u, 256u));

  // rules-validate
  std::string validate_rules;
  std::string validate_out = "-";
  CLI::App* validate_cmd = app.add_subcommand(
      "rules-validate", "Check a ruleset for duplicate keys and idempotence");
  validate_cmd->add_option("--rules", validate_rules, "Ruleset name or file")
      ->required();
  validate_cmd->add_option("--out", validate_out, "Output file");

  // corpus-stats
  std::string stats_in = "-", stats_format = "conllu", stats_out = "-";
  CLI::App* stats_cmd =
      app.add_subcommand("corpus-stats", "Count sentences, tokens and labels");
  stats_cmd->add_option("--in", stats_in, "Input file");
  stats_cmd->add_option("--format", stats_format, "raw, conllu or ner")
      ->check(CLI::IsMember(kFormats));
  stats_cmd->add_option("--out", stats_out, "Output file");

  // dedup
  std::string dedup_in = "-", dedup_out = "-";
  CLI::App* dedup_cmd =
      app.add_subcommand("dedup", "Drop repeated and empty lines of raw text");
  dedup_cmd->add_option("--in", dedup_in, "Input file");
  dedup_cmd->add_option("--out", dedup_out, "Output file");

  // scriptdist
  std::string dist_in = "-", dist_out = "-", dist_marker;
  CLI::App* dist_cmd = app.add_subcommand(
      "scriptdist", "Script distribution of a vocabulary (one token per line)");
  dist_cmd->add_option("--in", dist_in, "Vocabulary file");
  dist_cmd->add_option("--strip-prefix", dist_marker,
                       "Subword marker removed before classification, e.g. ##");
  dist_cmd->add_option("--out", dist_out, "Output file");

  // split
  SplitArgs split_args;
  CLI::App* split_cmd = app.add_subcommand(
      "split", "Plan standard or cross-validation splits and write manifests");
  auto* n_train_opt =
      split_cmd->add_option("--n-train", split_args.n_train, "Training sentences");
  auto* train_opt = split_cmd->add_option("--train", split_args.train,
                                          "Training file (sentences are counted)");
  n_train_opt->excludes(train_opt);
  auto* n_test_opt =
      split_cmd->add_option("--n-test", split_args.n_test, "Test sentences");
  auto* test_opt = split_cmd->add_option("--test", split_args.test, "Test file");
  n_test_opt->excludes(test_opt);
  split_cmd->add_option("--dev", split_args.dev, "Validation file, if any");
  split_cmd->add_flag("--has-dev", split_args.has_dev,
                      "The dataset provides a validation split");
  split_cmd->add_option("--format", split_args.format,
                        "Format of --train/--test files")
      ->check(CLI::IsMember(kFormats));
  split_cmd->add_option("--k", split_args.k, "Number of folds")
      ->check(CLI::Range(2, 1000));
  split_cmd->add_option("--seed", split_args.seed, "Shuffle seed");
  split_cmd->add_option("--out", split_args.out, "Plan output file");
  split_cmd->add_option("--folds", split_args.folds, "Fold manifest output file");
  split_cmd->add_option("--runs", split_args.runs, "Run manifest output file");

  // eval
  EvalArgs eval_args;
  std::string eval_task;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Score predictions against gold");
  eval_cmd->require_subcommand(1);
  for (const char* task : {"pos", "dep", "ner"}) {
    CLI::App* sub = eval_cmd->add_subcommand(task, std::string(task) + " scores");
    sub->add_option("--gold", eval_args.gold, "Gold file")->required();
    sub->add_option("--pred", eval_args.preds,
                    "Prediction file; repeat once per seed")
        ->required();
    sub->add_option("--seeds", eval_args.seeds, "Seed label of each --pred")
        ->delimiter(',');
    sub->add_option("--output-format", eval_args.output_format, "tsv or jsonl")
        ->check(CLI::IsMember({"tsv", "jsonl"}));
    sub->add_option("--out", eval_args.out, "Output file");
    if (std::string_view(task) == "dep") {
      sub->add_flag("--strict-deprel", eval_args.strict_deprel,
                    "Compare full deprels including subtypes");
    }
    if (std::string_view(task) == "ner") {
      sub->add_flag("--repair", eval_args.repair,
                    "Repair dangling I- labels in predictions");
      sub->add_flag("--strip-lang-prefix", eval_args.strip_prefix,
                    "Drop 'xx:' prefixes from tokens");
    }
    sub->callback([&eval_task, task] { eval_task = task; });
  }

  // categorize
  std::string cat_in = "-", cat_out = "-";
  double tau = 0.0;
  bool by_language = false;
  CLI::App* cat_cmd = app.add_subcommand(
      "categorize", "Place score triples relative to the baseline and label "
                    "them Easy, Intermediate or Hard");
  cat_cmd->add_option("--in", cat_in,
                      "TSV: language, task, baseline, mbert, mbert_mlm");
  cat_cmd->add_option("--tau", tau, "Threshold on relative improvement");
  cat_cmd->add_flag("--by-language", by_language,
                    "One label per language (majority, ties go harder)");
  cat_cmd->add_option("--out", cat_out, "Output file");

  // langs
  std::string langs_iso, langs_out = "-";
  CLI::App* langs_cmd =
      app.add_subcommand("langs", "Print the language registry");
  langs_cmd->add_option("--iso", langs_iso, "Only this language");
  langs_cmd->add_option("--out", langs_out, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\nRun 'unseen --help' for usage.\n";
    return kExitUsage;
  }

  Io io(in, out);
  try {
    if (*translit_cmd) {
      run_translit(io, translit_args);
    } else if (*validate_cmd) {
      return run_rules_validate(io, validate_rules, validate_out, err);
    } else if (*stats_cmd) {
      run_corpus_stats(io, stats_in, stats_format, stats_out);
    } else if (*dedup_cmd) {
      const auto lines = read_raw(io, dedup_in);
      std::ostringstream result;
      corpus::write_lines(result, corpus::dedup_lines(lines));
      io.write(dedup_out, result.str());
    } else if (*dist_cmd) {
      const auto vocabulary = io.read(
          dist_in, [](std::istream& s) { return script::read_vocabulary(s); });
      std::ostringstream result;
      script::write_distribution_tsv(
          result, script::script_distribution(vocabulary, dist_marker));
      io.write(dist_out, result.str());
    } else if (*split_cmd) {
      if (!split_args.n_train && split_args.train.empty()) {
        err << "usage error: split needs --n-train or --train\n";
        return kExitUsage;
      }
      run_split(io, split_args);
    } else if (*eval_cmd) {
      run_eval(io, eval_task, eval_args);
    } else if (*cat_cmd) {
      run_categorize(io, cat_in, tau, by_language, cat_out);
    } else if (*langs_cmd) {
      std::ostringstream result;
      if (langs_iso.empty()) {
        corpus::write_language_table(result, corpus::language_table());
      } else {
        const corpus::LanguageRecord& record = corpus::lookup_language(langs_iso);
        corpus::write_language_table(result, std::span(&record, 1));
      }
      io.write(langs_out, result.str());
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace unseen::cli
