// Copyright 2026 The normkit Authors.
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

#include "normkit/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "normkit/addresses.h"
#include "normkit/backend.h"
#include "normkit/dates.h"
#include "normkit/eval.h"
#include "normkit/gazetteer.h"
#include "normkit/noise.h"
#include "normkit/text.h"
#include "normkit/normalizer.h"
#include "normkit/unified.h"

namespace normkit::cli {

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInvalidRange:
    case ErrorCode::kInventoryTooSmall:
    case ErrorCode::kUnsupportedSlot:
      return kExitUsage;
    case ErrorCode::kBackendCrash:
    case ErrorCode::kProtocolViolation:
      return kExitBackend;
    default:
      return kExitData;
  }
}

namespace {

struct Common {
  uint64_t seed = 7;
  std::string out;
  std::string manifest;
  std::string format = "jsonl";
  bool quiet = false;
  unsigned jobs = 1;
};

struct NoiseFlags {
  double level = 0.0;
  uint64_t seed = 7;
  int ops_per_record = 1;
  std::string tables;

  NoiseConfig Build() const {
    NoiseConfig c = NoiseConfig::Defaults();
    c.level = level;
    c.seed = seed;
    c.ops_per_record = ops_per_record;
    if (!tables.empty()) c.LoadTables(tables);
    c.Validate();
    return c;
  }
};

void AddCommon(CLI::App *app, Common &c, bool with_manifest = true) {
  app->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  app->add_option("--out", c.out, "Output file (default: stdout)");
  if (with_manifest) {
    app->add_option("--manifest", c.manifest,
                    "Manifest path (default: <out>.manifest.json)");
  }
  app->add_option("--format", c.format, "Record format")
      ->check(CLI::IsMember({"jsonl", "csv"}))
      ->capture_default_str();
  app->add_flag("--quiet", c.quiet, "Suppress the summary on stderr");
  app->add_option("--jobs", c.jobs, "Worker threads")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
}

void AddNoise(CLI::App *app, NoiseFlags &n) {
  app->add_option("--noise", n.level, "Fraction of records to corrupt")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app->add_option("--noise-seed", n.seed, "Noise seed")->capture_default_str();
  app->add_option("--ops-per-record", n.ops_per_record,
                  "Operators per corrupted record")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--noise-tables", n.tables,
                  "JSON file overriding confusion/abbreviation tables")
      ->check(CLI::ExistingFile);
}

class Output {
 public:
  Output(const std::string &path, std::ostream &fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::kIo, "cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream &get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream *stream_;
};

void WriteRecords(const Common &c, const std::vector<Record> &records,
                  std::ostream &out) {
  Output o(c.out, out);
  if (c.format == "csv") {
    WriteCsv(o.get(), records);
  } else {
    WriteJsonl(o.get(), records);
  }
  o.get().flush();
}

std::string ManifestPath(const Common &c) {
  if (!c.manifest.empty()) return c.manifest;
  if (!c.out.empty()) return c.out + ".manifest.json";
  return "";
}

void WriteCorpus(const Common &c, const Corpus &corpus, std::ostream &out,
                 std::ostream &err) {
  WriteRecords(c, corpus.records, out);
  std::string path = ManifestPath(c);
  if (!path.empty()) WriteManifestFile(path, corpus.manifest);
  if (!c.quiet) {
    err << "wrote " << corpus.records.size() << " records ("
        << corpus.manifest.train_formats.size() << " train / "
        << corpus.manifest.test_formats.size() << " test formats)";
    if (!path.empty()) err << ", manifest " << path;
    err << "\n";
  }
}

std::vector<Record> ReadRecords(const std::string &path, std::istream &in) {
  if (path.empty() || path == "-") return ReadJsonl(in);
  return ReadJsonlFile(path);
}

std::vector<GazetteerEntry> LoadGazetteer(const std::string &path,
                                          bool quiet, std::ostream &err) {
  if (path.empty()) return DefaultGazetteer();
  GazetteerLoad load = IngestGazetteerFile(path);
  if (!quiet && load.malformed_rows > 0) {
    err << "gazetteer: skipped " << load.malformed_rows << " malformed rows\n";
    for (size_t i = 0; i < std::min<size_t>(load.problems.size(), 5); ++i) {
      err << "  line " << load.problems[i].line << ": "
          << load.problems[i].reason << "\n";
    }
  }
  return load.entries;
}

void AddFlags(nlohmann::ordered_json &generator, const std::string &key,
              const nlohmann::ordered_json &value) {
  generator[key] = value;
}

}  // namespace

int Main(const std::vector<std::string> &args, std::istream &in,
         std::ostream &out, std::ostream &err) {
  CLI::App app{"normkit: date and address normalization toolkit", "normkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  // gen
  CLI::App *gen = app.add_subcommand("gen", "Generate corpora");
  gen->require_subcommand(1);

  Common dates_common;
  NoiseFlags dates_noise;
  std::string kind = "complete", lang = "pt", split_text, inventory_path;
  int64_t count = -2;
  int year_min = kDefaultYearMin, year_max = kDefaultYearMax;
  CLI::App *gen_dates = gen->add_subcommand("dates", "Date corpus");
  AddCommon(gen_dates, dates_common);
  AddNoise(gen_dates, dates_noise);
  gen_dates->add_option("--kind", kind, "Date kind")
      ->check(CLI::IsMember({"complete", "incomplete-dm", "incomplete-my",
                             "relative", "incomplete_dm", "incomplete_my"}))
      ->capture_default_str();
  gen_dates->add_option("--lang", lang, "Language")
      ->check(CLI::IsMember({"pt", "en"}))
      ->capture_default_str();
  gen_dates->add_option("--count", count,
                        "Records (default 73000 / 2500 / 7200 / 1800 by kind)");
  gen_dates->add_option("--year-min", year_min)->capture_default_str();
  gen_dates->add_option("--year-max", year_max)->capture_default_str();
  gen_dates->add_option("--split", split_text,
                        "TRAIN:TEST format split (default 34:11, 13:5)");
  gen_dates->add_option("--inventory", inventory_path,
                        "Date format inventory JSON")
      ->check(CLI::ExistingFile);

  Common probes_common;
  std::string probe_side = "both";
  int probe_n = kDefaultProbeCount;
  std::string probe_kind = "complete", probe_lang = "pt", probe_split;
  int probe_min = kDefaultYearMin, probe_max = kDefaultYearMax;
  CLI::App *gen_probes = gen->add_subcommand(
      "probes", "Out-of-range dates rendered with test-split formats");
  AddCommon(gen_probes, probes_common, false);
  gen_probes->add_option("--side", probe_side)
      ->check(CLI::IsMember({"below", "above", "both"}))
      ->capture_default_str();
  gen_probes->add_option("-n,--count", probe_n, "Probes per side")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen_probes->add_option("--kind", probe_kind)
      ->check(CLI::IsMember({"complete", "incomplete-my", "incomplete_my"}))
      ->capture_default_str();
  gen_probes->add_option("--lang", probe_lang)
      ->check(CLI::IsMember({"pt", "en"}))
      ->capture_default_str();
  gen_probes->add_option("--year-min", probe_min)->capture_default_str();
  gen_probes->add_option("--year-max", probe_max)->capture_default_str();
  gen_probes->add_option("--split", probe_split);

  Common addr_common;
  NoiseFlags addr_noise;
  std::string gazetteer_path, addr_split, addr_inventory;
  int64_t per_format = kDefaultPerFormat;
  CLI::App *gen_addr = gen->add_subcommand("addresses", "Address corpus");
  AddCommon(gen_addr, addr_common);
  AddNoise(gen_addr, addr_noise);
  gen_addr->add_option("--gazetteer", gazetteer_path,
                       "Gazetteer CSV (default: shipped fixture)")
      ->check(CLI::ExistingFile);
  gen_addr->add_option("--per-format", per_format)->capture_default_str();
  gen_addr->add_option("--split", addr_split, "TRAIN:TEST (default 17:5)");
  gen_addr->add_option("--inventory", addr_inventory)
      ->check(CLI::ExistingFile);

  Common uni_common;
  NoiseFlags uni_noise;
  int64_t uni_count = kUnifiedCorpusSize;
  double address_share = 0.5;
  std::string prefix = "off", uni_gazetteer;
  int validation_formats = kUnifiedValidationFormats;
  CLI::App *gen_uni = gen->add_subcommand("unified", "Mixed date/address corpus");
  AddCommon(gen_uni, uni_common);
  AddNoise(gen_uni, uni_noise);
  gen_uni->add_option("--count", uni_count)->capture_default_str();
  gen_uni->add_option("--address-share", address_share)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen_uni->add_option("--prefix", prefix)
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  gen_uni->add_option("--validation-formats", validation_formats)
      ->capture_default_str();
  gen_uni->add_option("--gazetteer", uni_gazetteer)->check(CLI::ExistingFile);

  // corrupt
  Common cor_common;
  NoiseFlags cor_noise;
  std::string cor_in, cor_manifest_in;
  CLI::App *corrupt = app.add_subcommand("corrupt", "Apply noise to a corpus");
  AddCommon(corrupt, cor_common);
  AddNoise(corrupt, cor_noise);
  corrupt->add_option("--in", cor_in, "Input JSONL (default: stdin)");
  corrupt->add_option("--manifest-in", cor_manifest_in,
                      "Manifest of the input corpus")
      ->check(CLI::ExistingFile);

  // normalize
  std::string norm_task = "auto", norm_lang = "auto", norm_in, norm_out;
  bool lenient = false, show_confidence = false;
  CLI::App *normalize = app.add_subcommand(
      "normalize", "Read one text per line, print its canonical form");
  normalize->add_option("--task", norm_task)
      ->check(CLI::IsMember({"auto", "date", "address"}))
      ->capture_default_str();
  normalize->add_option("--lang", norm_lang)
      ->check(CLI::IsMember({"auto", "pt", "en"}))
      ->capture_default_str();
  normalize->add_option("--in", norm_in, "Input file (default: stdin)");
  normalize->add_option("--out", norm_out, "Output file (default: stdout)");
  normalize->add_flag("--lenient", lenient,
                      "Print an empty line for unparseable input, exit 0");
  normalize->add_flag("--show-confidence", show_confidence,
                      "Append a tab and exact|fuzzy");

  // split
  std::string split_in, split_manifest, train_out, test_out;
  CLI::App *split = app.add_subcommand(
      "split", "Partition a corpus into train/test files by manifest");
  split->add_option("--in", split_in, "Input JSONL (default: stdin)");
  split->add_option("--manifest", split_manifest)
      ->required()
      ->check(CLI::ExistingFile);
  split->add_option("--train-out", train_out)->required();
  split->add_option("--test-out", test_out)->required();

  // evaluate
  std::vector<std::string> eval_corpora, eval_manifests, buckets;
  std::string backend_spec = "rules", report_out, markdown_out;
  bool all_formats = false, eval_quiet = false;
  double timeout_s = 30.0;
  size_t max_in_flight = 32;
  unsigned eval_jobs = 1;
  CLI::App *evaluate = app.add_subcommand("evaluate", "Exact-match evaluation");
  evaluate->add_option("--corpus", eval_corpora)->required();
  evaluate->add_option("--manifest", eval_manifests)->required();
  evaluate->add_option("--backend", backend_spec, "rules | cmd:<command>")
      ->capture_default_str();
  evaluate->add_option("--buckets", buckets, "range,noise,format")
      ->delimiter(',');
  evaluate->add_option("--out", report_out, "Report JSON path");
  evaluate->add_option("--markdown", markdown_out, "Markdown table path");
  evaluate->add_flag("--all-formats", all_formats,
                     "Score train formats too");
  evaluate->add_option("--timeout", timeout_s, "Seconds per request")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  evaluate->add_option("--max-in-flight", max_in_flight)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  evaluate->add_option("--jobs", eval_jobs)->check(CLI::Range(1u, 1024u));
  evaluate->add_flag("--quiet", eval_quiet);

  // fetch-gazetteer
  std::string ceps_path, base_url, cache_path, credential_env = "NORMKIT_CEP_TOKEN",
                                               fetch_out;
  int attempts = 3;
  CLI::App *fetch = app.add_subcommand(
      "fetch-gazetteer", "Build a gazetteer CSV from a CEP lookup API");
  fetch->add_option("--ceps", ceps_path, "File with one CEP per line")
      ->required()
      ->check(CLI::ExistingFile);
  fetch->add_option("--base-url", base_url)->required();
  fetch->add_option("--cache", cache_path, "JSON cache file");
  fetch->add_option("--credential-env", credential_env)->capture_default_str();
  fetch->add_option("--attempts", attempts)->check(CLI::PositiveNumber);
  fetch->add_option("--out", fetch_out, "CSV output (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    err << app.help();
    return kExitUsage;
  }

  try {
    if (*gen_dates) {
      DateCorpusConfig config;
      config.seed = dates_common.seed;
      config.kind = ParseDateKind(kind);
      config.language = ParseLanguage(lang);
      config.count = count == -2 ? DefaultCorpusSize(config.kind) : count;
      config.year_min = year_min;
      config.year_max = year_max;
      if (!split_text.empty()) config.split = ParseSplitPolicy(split_text);
      config.noise = dates_noise.Build();
      config.jobs = dates_common.jobs;
      DateInventory custom;
      if (!inventory_path.empty()) custom = DateInventory::FromFile(inventory_path);
      Corpus corpus = GenerateDateCorpus(
          config, inventory_path.empty() ? DateInventory::Default() : custom);
      if (!inventory_path.empty()) {
        AddFlags(corpus.manifest.generator, "inventory", inventory_path);
      }
      WriteCorpus(dates_common, corpus, out, err);
      return kExitOk;
    }
    if (*gen_probes) {
      DateCorpusConfig config;
      config.seed = probes_common.seed;
      config.kind = ParseDateKind(probe_kind);
      config.language = ParseLanguage(probe_lang);
      config.year_min = probe_min;
      config.year_max = probe_max;
      if (!probe_split.empty()) config.split = ParseSplitPolicy(probe_split);
      std::vector<Record> records;
      for (ProbeSide side : {ProbeSide::kBelow, ProbeSide::kAbove}) {
        if (probe_side == "below" && side != ProbeSide::kBelow) continue;
        if (probe_side == "above" && side != ProbeSide::kAbove) continue;
        auto part = GenerateOutOfRangeProbes(config, side, probe_n);
        records.insert(records.end(), part.begin(), part.end());
      }
      WriteRecords(probes_common, records, out);
      if (!probes_common.quiet) err << "wrote " << records.size() << " probes\n";
      return kExitOk;
    }
    if (*gen_addr) {
      AddressCorpusConfig config;
      config.seed = addr_common.seed;
      config.per_format = per_format;
      if (!addr_split.empty()) config.split = ParseSplitPolicy(addr_split);
      config.noise = addr_noise.Build();
      config.jobs = addr_common.jobs;
      auto gazetteer = LoadGazetteer(gazetteer_path, addr_common.quiet, err);
      AddressInventory custom;
      if (!addr_inventory.empty()) custom = AddressInventory::FromFile(addr_inventory);
      Corpus corpus = GenerateAddressCorpus(
          config, gazetteer,
          addr_inventory.empty() ? AddressInventory::Default() : custom);
      if (!gazetteer_path.empty()) {
        AddFlags(corpus.manifest.generator, "gazetteer", gazetteer_path);
      }
      WriteCorpus(addr_common, corpus, out, err);
      return kExitOk;
    }
    if (*gen_uni) {
      UnifiedConfig config;
      config.seed = uni_common.seed;
      config.count = uni_count;
      config.address_share = address_share;
      config.prefix = prefix == "on";
      config.validation_formats = validation_formats;
      config.noise = uni_noise.Build();
      config.jobs = uni_common.jobs;
      auto gazetteer = LoadGazetteer(uni_gazetteer, uni_common.quiet, err);
      Corpus corpus = BuildUnifiedCorpus(config, gazetteer);
      WriteCorpus(uni_common, corpus, out, err);
      return kExitOk;
    }
    if (*corrupt) {
      NoiseConfig config = cor_noise.Build();
      std::vector<Record> records = ReadRecords(cor_in, in);
      std::vector<Record> noised = CorruptAll(records, config, cor_common.jobs);
      WriteRecords(cor_common, noised, out);
      std::string path = ManifestPath(cor_common);
      if (!path.empty()) {
        SplitManifest m;
        if (!cor_manifest_in.empty()) m = ReadManifestFile(cor_manifest_in);
        m.noise_level = config.level;
        m.generator["corrupt"] = {{"noise", config.level},
                                  {"noise_seed", config.seed},
                                  {"ops_per_record", config.ops_per_record}};
        WriteManifestFile(path, m);
      }
      if (!cor_common.quiet) {
        err << "corrupted " << MeasureNoise(records, noised) * 100.0
            << "% of " << records.size() << " records\n";
      }
      return kExitOk;
    }
    if (*normalize) {
      NormalizeOptions options;
      options.task = norm_task == "date"      ? TaskHint::kDate
                     : norm_task == "address" ? TaskHint::kAddress
                                              : TaskHint::kAuto;
      if (norm_lang != "auto") options.language = ParseLanguage(norm_lang);
      std::ifstream file;
      std::istream *src = &in;
      if (!norm_in.empty() && norm_in != "-") {
        file.open(norm_in);
        if (!file) throw Error(ErrorCode::kIo, "cannot open " + norm_in);
        src = &file;
      }
      Output o(norm_out, out);
      int failures = 0;
      std::string line;
      size_t lineno = 0;
      while (std::getline(*src, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        try {
          ParseOutcome r = Normalize(line, options);
          o.get() << r.canonical;
          if (show_confidence) o.get() << '\t' << ConfidenceName(r.confidence);
          o.get() << '\n';
        } catch (const Error &e) {
          ++failures;
          err << "line " << lineno << ": " << e.what() << "\n";
          o.get() << '\n';
        }
      }
      o.get().flush();
      return failures > 0 && !lenient ? kExitData : kExitOk;
    }
    if (*split) {
      SplitManifest m = ReadManifestFile(split_manifest);
      std::vector<Record> records = ReadRecords(split_in, in);
      std::vector<Record> train, test;
      for (const Record &r : records) {
        (m.IsTestFormat(r.format_id) ? test : train).push_back(r);
      }
      Common c;
      c.out = train_out;
      WriteRecords(c, train, out);
      c.out = test_out;
      WriteRecords(c, test, out);
      err << "train " << train.size() << ", test " << test.size() << "\n";
      return kExitOk;
    }
    if (*evaluate) {
      if (eval_corpora.size() != eval_manifests.size()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "give one --manifest per --corpus");
      }
      std::vector<EvalCorpus> corpora;
      for (size_t i = 0; i < eval_corpora.size(); ++i) {
        corpora.push_back({ReadJsonlFile(eval_corpora[i]),
                           ReadManifestFile(eval_manifests[i])});
      }
      EvalOptions options;
      options.all_formats = all_formats;
      if (!buckets.empty()) {
        options.dimensions.clear();
        for (const auto &b : buckets) {
          options.dimensions.push_back(ParseBucketDimension(b));
        }
      }
      std::unique_ptr<Backend> backend;
      if (backend_spec == "rules") {
        backend = std::make_unique<RulesBackend>(eval_jobs);
      } else if (backend_spec.rfind("cmd:", 0) == 0) {
        ProcessBackendConfig pc;
        pc.command = backend_spec.substr(4);
        pc.timeout = std::chrono::milliseconds(
            static_cast<int64_t>(timeout_s * 1000.0));
        pc.max_in_flight = max_in_flight;
        backend = std::make_unique<ProcessBackend>(pc);
      } else {
        throw Error(ErrorCode::kInvalidArgument,
                    "backend must be 'rules' or 'cmd:<command>'");
      }
      EvalReport report = Evaluate(*backend, corpora, options);
      std::string md = ReportToMarkdown(report);
      if (!report_out.empty()) {
        std::ofstream f(report_out);
        if (!f) throw Error(ErrorCode::kIo, "cannot write " + report_out);
        f << ReportToJson(report).dump(2) << "\n";
      }
      if (!markdown_out.empty()) {
        std::ofstream f(markdown_out);
        if (!f) throw Error(ErrorCode::kIo, "cannot write " + markdown_out);
        f << md;
      }
      if (report_out.empty()) {
        out << ReportToJson(report).dump(2) << "\n";
      } else if (!eval_quiet) {
        out << md;
      }
      if (!report.ok()) {
        err << "backend failure: " << report.status_message << "\n";
        return kExitBackend;
      }
      return kExitOk;
    }
    if (*fetch) {
      CepClientConfig cc;
      cc.base_url = base_url;
      cc.cache_path = cache_path;
      cc.credential_env = credential_env;
      cc.max_attempts = attempts;
      CepClient client(cc);
      std::ifstream list(ceps_path);
      std::vector<std::string> ceps;
      std::string line;
      while (std::getline(list, line)) {
        std::string_view t = Trim(line);
        if (!t.empty() && t.front() != '#') ceps.emplace_back(t);
      }
      FetchResult result = client.FetchAll(ceps);
      Output o(fetch_out, out);
      WriteGazetteerCsv(o.get(), result.entries);
      for (const auto &f : result.failures) {
        err << "lookup failed: " << f.reason << "\n";
      }
      err << "fetched " << result.entries.size() << " entries ("
          << result.cache_hits << " from cache), " << result.failures.size()
          << " failures\n";
      return kExitOk;
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    int code = ExitCodeFor(e.code());
    if (code == kExitUsage) {
      const CLI::App *active = &app;
      while (!active->get_subcommands().empty()) {
        active = active->get_subcommands().front();
      }
      err << active->help();
    }
    return code;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace normkit::cli
