// Copyright 2026 The rstgen Authors.
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

// Command-line driver: tree generation, baselines, evaluation and corpus
// statistics.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 resource budget
// exceeded.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "rstgen/corpus_stats.h"
#include "rstgen/errors.h"
#include "rstgen/pipeline.h"
#include "rstgen/score_io.h"
#include "rstgen/tree_io.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitResource = 3;

// Writes through a sibling temporary file so a failed run never leaves a
// truncated corpus behind.
class AtomicOutput {
 public:
  explicit AtomicOutput(std::string path) : path_(std::move(path)), tmp_(path_ + ".tmp") {
    out_.open(tmp_, std::ios::binary | std::ios::trunc);
    if (!out_) throw rstgen::DataError("cannot write '" + path_ + "'");
  }
  ~AtomicOutput() {
    if (!committed_) {
      out_.close();
      std::error_code ec;
      std::filesystem::remove(tmp_, ec);
    }
  }

  std::ostream& stream() { return out_; }

  void Commit() {
    out_.close();
    if (!out_) throw rstgen::DataError("write failed for '" + path_ + "'");
    std::filesystem::rename(tmp_, path_);
    committed_ = true;
  }

 private:
  std::string path_;
  std::string tmp_;
  std::ofstream out_;
  bool committed_ = false;
};

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rstgen::DataError("cannot open '" + path + "'");
  return in;
}

void ReportSkipped(const rstgen::PipelineReport& report, std::size_t max_edus) {
  for (const std::string& id : report.skipped_ids) {
    std::cerr << "warning: skipped document '" << id << "' (more than " << max_edus
              << " EDUs)\n";
  }
  std::cerr << "wrote " << report.docs_written << " trees; skipped "
            << report.skipped_ids.size() << " documents\n";
}

void PrintStats(const char* label, const rstgen::CorpusStats& s) {
  std::printf("%-10s documents=%zu edus_per_doc=%.1f vocab=%zu\n", label, s.doc_count,
              s.mean_edus_per_doc, s.vocab_size);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discourse tree generation from EDU sentiment and attention scores"};
  app.require_subcommand(1);

  // gen-trees
  std::string scores_path, out_path, agg_name = "sum";
  rstgen::GenerateOptions gen;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* gen_cmd = app.add_subcommand("gen-trees", "Generate one discourse tree per scored document");
  gen_cmd->add_option("--scores", scores_path, "Score file (JSON lines)")->required()->check(CLI::ExistingFile);
  gen_cmd->add_option("--agg", agg_name, "Attention aggregation")
      ->required()
      ->check(CLI::IsMember({"sum", "max", "avg"}));
  gen_cmd->add_option("--lambda", gen.policy.lambda, "Damping factor for sum aggregation")
      ->check(CLI::Range(0.0, 0.999999999));
  gen_cmd->add_option("--eps-dedup", gen.builder.eps_dedup, "Signature deduplication tolerance")
      ->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--max-edus", gen.builder.max_edus, "Skip documents with more EDUs")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--max-candidates", gen.builder.candidate_budget,
                      "Per-document chart candidate budget")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--out", out_path, "Output tree file")->required();

  // baseline
  std::string kind_name;
  auto* base_cmd = app.add_subcommand("baseline", "Write structural baseline trees");
  base_cmd->add_option("--kind", kind_name, "Baseline kind")
      ->required()
      ->check(CLI::IsMember({"right", "left", "hier-right", "hier-left"}));
  base_cmd->add_option("--scores", scores_path, "Score file (JSON lines)")->required()->check(CLI::ExistingFile);
  base_cmd->add_option("--out", out_path, "Output tree file")->required();

  // eval
  std::string pred_path, gold_path;
  bool count_leaf_spans = false;
  auto* eval_cmd = app.add_subcommand("eval", "Micro span precision of predicted against gold trees");
  eval_cmd->add_option("--pred", pred_path, "Predicted tree file")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--gold", gold_path, "Gold tree file")->required()->check(CLI::ExistingFile);
  eval_cmd->add_flag("--count-leaf-spans", count_leaf_spans, "Include single-EDU spans");

  // stats
  std::string against_path;
  auto* stats_cmd = app.add_subcommand("stats", "Corpus size and vocabulary statistics");
  stats_cmd->add_option("--scores", scores_path, "Score file (JSON lines)")->required()->check(CLI::ExistingFile);
  stats_cmd->add_option("--against", against_path, "Second score file for vocabulary overlap")
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen_cmd) {
      gen.policy.kind = *rstgen::ParseAggregation(agg_name);
      gen.jobs = jobs;
      auto in = OpenInput(scores_path);
      AtomicOutput out(out_path);
      const auto report = rstgen::GenerateCorpus(in, out.stream(), gen);
      out.Commit();
      ReportSkipped(report, gen.builder.max_edus);
    } else if (*base_cmd) {
      auto in = OpenInput(scores_path);
      AtomicOutput out(out_path);
      const auto report = rstgen::BaselineCorpus(in, out.stream(), *rstgen::ParseBaselineKind(kind_name));
      out.Commit();
      std::cerr << "wrote " << report.docs_written << " trees\n";
    } else if (*eval_cmd) {
      const auto pred = rstgen::ReadGoldCorpus(pred_path, count_leaf_spans);
      const auto gold = rstgen::ReadGoldCorpus(gold_path, count_leaf_spans);
      const auto counts = rstgen::EvaluateCorpus(pred, gold);
      std::printf("span precision: %.2f%% (%zu/%zu spans, %zu documents)\n",
                  100.0 * counts.precision(), counts.matched, counts.gold, gold.size());
    } else if (*stats_cmd) {
      const auto a = rstgen::ReadScoreFile(scores_path, {0});
      const auto sa = rstgen::ComputeCorpusStats(a.docs);
      PrintStats("scores", sa);
      if (!against_path.empty()) {
        const auto b = rstgen::ReadScoreFile(against_path, {0});
        PrintStats("against", rstgen::ComputeCorpusStats(b.docs));
        const double j = rstgen::VocabJaccard(rstgen::BuildVocabulary(a.docs),
                                              rstgen::BuildVocabulary(b.docs));
        std::printf("vocabulary overlap (Jaccard): %.2f%%\n", 100.0 * j);
      }
    }
  } catch (const rstgen::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const rstgen::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return 0;
}
