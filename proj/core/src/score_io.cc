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

#include "rstgen/score_io.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"

namespace rstgen {
namespace {

using nlohmann::json;

const json& Field(const json& obj, const char* name, const std::string& path,
                  std::size_t line) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ScoreParseError(line, "missing field '" + path + name + "'");
  return *it;
}

int IntField(const json& obj, const char* name, const std::string& path, std::size_t line) {
  const json& v = Field(obj, name, path, line);
  if (!v.is_number_integer()) {
    throw ScoreParseError(line, "field '" + path + name + "' must be an integer");
  }
  return v.get<int>();
}

double RealField(const json& v, const std::string& field, std::size_t line) {
  if (!v.is_number()) throw ScoreParseError(line, "field '" + field + "' must be a number");
  return v.get<double>();
}

}  // namespace

ScoredDocument ParseScoreRecord(const std::string& text, std::size_t line) {
  json rec;
  try {
    rec = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScoreParseError(line, std::string("malformed JSON: ") + e.what());
  }
  if (!rec.is_object()) throw ScoreParseError(line, "record must be a JSON object");

  ScoredDocument doc;
  const json& id = Field(rec, "doc_id", "", line);
  if (!id.is_string()) throw ScoreParseError(line, "field 'doc_id' must be a string");
  doc.doc_id = id.get<std::string>();
  doc.num_classes = IntField(rec, "num_classes", "", line);
  doc.gold_class = IntField(rec, "gold_class", "", line);

  const json& edus = Field(rec, "edus", "", line);
  if (!edus.is_array()) throw ScoreParseError(line, "field 'edus' must be an array");
  doc.edus.reserve(edus.size());
  doc.scores.reserve(edus.size());
  for (std::size_t i = 0; i < edus.size(); ++i) {
    const std::string path = "edus[" + std::to_string(i) + "].";
    const json& e = edus[i];
    if (!e.is_object()) {
      throw ScoreParseError(line, "field 'edus[" + std::to_string(i) + "]' must be an object");
    }
    Edu edu;
    edu.index = static_cast<int>(i);
    const json& t = Field(e, "text", path, line);
    if (!t.is_string()) throw ScoreParseError(line, "field '" + path + "text' must be a string");
    edu.text = t.get<std::string>();
    edu.sentence_id = IntField(e, "sentence_id", path, line);

    EduScores scores;
    const json& dist = Field(e, "sentiment_dist", path, line);
    if (!dist.is_array()) {
      throw ScoreParseError(line, "field '" + path + "sentiment_dist' must be an array");
    }
    for (std::size_t c = 0; c < dist.size(); ++c) {
      scores.sentiment_dist.push_back(
          RealField(dist[c], path + "sentiment_dist[" + std::to_string(c) + "]", line));
    }
    scores.attention = RealField(Field(e, "attention", path, line), path + "attention", line);
    doc.edus.push_back(std::move(edu));
    doc.scores.push_back(std::move(scores));
  }

  if (auto violations = ValidateDocument(doc); !violations.empty()) {
    std::string msg = "document '" + doc.doc_id + "': " + violations.front();
    if (violations.size() > 1) {
      msg += " (and " + std::to_string(violations.size() - 1) + " more)";
    }
    throw ScoreParseError(line, msg);
  }
  return doc;
}

std::string FormatScoreRecord(const ScoredDocument& doc) {
  json edus = json::array();
  for (std::size_t i = 0; i < doc.edus.size(); ++i) {
    json e;
    e["text"] = doc.edus[i].text;
    e["sentence_id"] = doc.edus[i].sentence_id;
    e["sentiment_dist"] = doc.scores[i].sentiment_dist;
    e["attention"] = doc.scores[i].attention;
    edus.push_back(std::move(e));
  }
  json rec;
  rec["doc_id"] = doc.doc_id;
  rec["num_classes"] = doc.num_classes;
  rec["gold_class"] = doc.gold_class;
  rec["edus"] = std::move(edus);
  return rec.dump();
}

bool ScoreReader::Next(ScoredDocument* doc) {
  while (std::getline(in_, buffer_)) {
    ++line_;
    if (buffer_.find_first_not_of(" \t\r") == std::string::npos) continue;
    ScoredDocument d = ParseScoreRecord(buffer_, line_);
    if (options_.max_edus != 0 && d.size() > options_.max_edus) {
      skipped_ids_.push_back(d.doc_id);
      continue;
    }
    *doc = std::move(d);
    return true;
  }
  return false;
}

ScoreFile ReadScoreFile(const std::string& path, ScoreReadOptions options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open score file '" + path + "'");
  ScoreReader reader(in, options);
  ScoreFile file;
  ScoredDocument doc;
  while (reader.Next(&doc)) file.docs.push_back(std::move(doc));
  file.skipped_ids = reader.skipped_ids();
  return file;
}

void WriteScoreFile(const std::string& path, const std::vector<ScoredDocument>& docs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write score file '" + path + "'");
  for (const ScoredDocument& d : docs) out << FormatScoreRecord(d) << '\n';
  if (!out) throw DataError("write failed for '" + path + "'");
}

}  // namespace rstgen
