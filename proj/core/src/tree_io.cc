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

#include "rstgen/tree_io.h"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rstgen {
namespace {

void AppendNumber(double v, std::string* out) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  *out += buf;
}

void AppendQuoted(const std::string& s, std::string* out) {
  out->push_back('"');
  for (char c : s) {
    if (c == '"' || c == '\\') out->push_back('\\');
    if (c == '\n') {
      *out += "\\n";
      continue;
    }
    out->push_back(c);
  }
  out->push_back('"');
}

std::string_view NucToken(const DiscourseNode& node, bool is_root) {
  if (is_root) return "Root";
  if (!node.nuclearity) {
    throw std::invalid_argument("node (" + std::to_string(node.span.lo + 1) + "," +
                                std::to_string(node.span.hi + 1) +
                                ") has no nuclearity; assign nuclearity before writing");
  }
  return NuclearityName(*node.nuclearity);
}

void AppendNode(const DiscourseNode& node, bool is_root, std::string* out) {
  if (node.is_leaf()) {
    *out += "(leaf ";
    *out += std::to_string(node.span.lo + 1);
  } else {
    *out += "(span ";
    *out += std::to_string(node.span.lo + 1);
    out->push_back(' ');
    *out += std::to_string(node.span.hi + 1);
  }
  out->push_back(' ');
  *out += NucToken(node, is_root);
  out->push_back(' ');
  *out += node.relation;
  out->push_back(' ');
  AppendNumber(node.sentiment, out);
  out->push_back(' ');
  AppendNumber(node.attention, out);
  for (const DiscourseNode& c : node.children) {
    out->push_back(' ');
    AppendNode(c, false, out);
  }
  out->push_back(')');
}

enum class TokenKind { kOpen, kClose, kAtom, kString, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

class Lexer {
 public:
  explicit Lexer(detail::TreeCursor& cursor) : c_(cursor) {}

  Token Next() {
    SkipSpace();
    Token t;
    t.line = c_.line;
    t.column = c_.column;
    const int ch = c_.in->peek();
    if (ch == EOF) return t;
    if (ch == '(' || ch == ')') {
      Get();
      t.kind = ch == '(' ? TokenKind::kOpen : TokenKind::kClose;
      return t;
    }
    if (ch == '"') {
      Get();
      t.kind = TokenKind::kString;
      for (;;) {
        const int c = Get();
        if (c == EOF) throw TreeParseError(t.line, t.column, "unterminated string");
        if (c == '"') break;
        if (c == '\\') {
          const int e = Get();
          if (e == EOF) throw TreeParseError(t.line, t.column, "unterminated string");
          t.text.push_back(e == 'n' ? '\n' : static_cast<char>(e));
          continue;
        }
        t.text.push_back(static_cast<char>(c));
      }
      return t;
    }
    t.kind = TokenKind::kAtom;
    for (int c = c_.in->peek(); c != EOF && !std::isspace(c) && c != '(' && c != ')' && c != '"';
         c = c_.in->peek()) {
      t.text.push_back(static_cast<char>(Get()));
    }
    return t;
  }

 private:
  int Get() {
    const int ch = c_.in->get();
    if (ch == '\n') {
      ++c_.line;
      c_.column = 1;
    } else if (ch != EOF) {
      ++c_.column;
    }
    return ch;
  }

  void SkipSpace() {
    while (std::isspace(c_.in->peek())) Get();
  }

  detail::TreeCursor& c_;
};

[[noreturn]] void Fail(const Token& at, const std::string& what) {
  throw TreeParseError(at.line, at.column, what);
}

class Parser {
 public:
  explicit Parser(Lexer& lex) : lex_(lex) {}

  // Returns false if the input is exhausted before a record starts.
  bool Record(DiscourseTree* tree) {
    Token open = lex_.Next();
    if (open.kind == TokenKind::kEnd) return false;
    Expect(open, TokenKind::kOpen, "'('");
    Keyword("doc");
    Token id = lex_.Next();
    Expect(id, TokenKind::kString, "quoted document id");
    Token agg = Atom("aggregation");
    DiscourseTree t;
    t.doc_id = id.text;
    if (agg.text != "none") {
      t.aggregation = ParseAggregation(agg.text);
      if (!t.aggregation) Fail(agg, "unknown aggregation '" + agg.text + "'");
    }
    t.root_distance = Number("root distance");
    Token node_open = lex_.Next();
    t.root = Node(node_open, /*is_root=*/true);
    if (t.root.span.lo != 0) Fail(node_open, "root span must start at EDU 1");
    Close("end of record");
    *tree = std::move(t);
    return true;
  }

 private:
  void Expect(const Token& t, TokenKind kind, const char* what) {
    if (t.kind != kind) {
      Fail(t, std::string("expected ") + what +
                  (t.kind == TokenKind::kEnd ? ", got end of input"
                                             : ", got '" + Describe(t) + "'"));
    }
  }

  static std::string Describe(const Token& t) {
    switch (t.kind) {
      case TokenKind::kOpen: return "(";
      case TokenKind::kClose: return ")";
      default: return t.text;
    }
  }

  Token Atom(const char* what) {
    Token t = lex_.Next();
    Expect(t, TokenKind::kAtom, what);
    return t;
  }

  void Keyword(const char* kw) {
    Token t = Atom(kw);
    if (t.text != kw) Fail(t, std::string("expected '") + kw + "', got '" + t.text + "'");
  }

  void Close(const char* what) {
    Token t = lex_.Next();
    if (t.kind != TokenKind::kClose) {
      Fail(t, std::string("expected ')' at ") + what +
                  (t.kind == TokenKind::kEnd ? " (unbalanced parentheses)" : ""));
    }
  }

  double Number(const char* what) {
    Token t = Atom(what);
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(t.text.c_str(), &end);
    if (t.text.empty() || *end != '\0' || (errno == ERANGE && std::isinf(v))) {
      Fail(t, std::string("expected ") + what + ", got '" + t.text + "'");
    }
    return v;
  }

  int Index(const char* what) {
    Token t = Atom(what);
    char* end = nullptr;
    const long v = std::strtol(t.text.c_str(), &end, 10);
    if (t.text.empty() || *end != '\0' || v < 1 || v > 1'000'000) {
      Fail(t, std::string("expected 1-based ") + what + ", got '" + t.text + "'");
    }
    return static_cast<int>(v) - 1;
  }

  void Nuc(DiscourseNode* node, bool is_root) {
    Token t = Atom("nuclearity");
    if (t.text == "Root") {
      if (!is_root) Fail(t, "'Root' nuclearity below the root");
    } else if (t.text == "Nucleus" || t.text == "Satellite") {
      if (is_root) Fail(t, "root node must be labelled 'Root'");
      node->nuclearity = t.text == "Nucleus" ? Nuclearity::kNucleus : Nuclearity::kSatellite;
    } else {
      Fail(t, "unknown nuclearity '" + t.text + "'");
    }
  }

  DiscourseNode Node(const Token& open, bool is_root) {
    Expect(open, TokenKind::kOpen, "'(' opening a node");
    Token kind = Atom("node kind");
    DiscourseNode node;
    if (kind.text == "leaf") {
      const int i = Index("EDU index");
      node.span = {i, i};
      Nuc(&node, is_root);
      node.relation = Atom("relation").text;
      node.sentiment = Number("sentiment");
      node.attention = Number("attention");
      Close("end of leaf");
      return node;
    }
    if (kind.text != "span") Fail(kind, "expected 'span' or 'leaf', got '" + kind.text + "'");
    node.span.lo = Index("span start");
    node.span.hi = Index("span end");
    if (node.span.hi <= node.span.lo) Fail(kind, "internal span must cover at least two EDUs");
    Nuc(&node, is_root);
    node.relation = Atom("relation").text;
    node.sentiment = Number("sentiment");
    node.attention = Number("attention");
    Token lo = lex_.Next();
    DiscourseNode left = Node(lo, false);
    Token ro = lex_.Next();
    DiscourseNode right = Node(ro, false);
    if (left.span.lo != node.span.lo || right.span.hi != node.span.hi ||
        left.span.hi + 1 != right.span.lo) {
      Fail(kind, "children (" + std::to_string(left.span.lo + 1) + "," +
                     std::to_string(left.span.hi + 1) + ") and (" +
                     std::to_string(right.span.lo + 1) + "," +
                     std::to_string(right.span.hi + 1) + ") do not partition span (" +
                     std::to_string(node.span.lo + 1) + "," +
                     std::to_string(node.span.hi + 1) + ")");
    }
    if (left.nuclearity == right.nuclearity) {
      Fail(kind, "siblings must be one Nucleus and one Satellite");
    }
    node.children.reserve(2);
    node.children.push_back(std::move(left));
    node.children.push_back(std::move(right));
    Close("end of span");
    return node;
  }

  Lexer& lex_;
};

}  // namespace

std::string FormatTree(const DiscourseTree& tree) {
  std::string out = "(doc ";
  AppendQuoted(tree.doc_id, &out);
  out.push_back(' ');
  out += tree.aggregation ? AggregationName(*tree.aggregation) : std::string_view("none");
  out.push_back(' ');
  AppendNumber(tree.root_distance, &out);
  out.push_back(' ');
  AppendNode(tree.root, true, &out);
  out.push_back(')');
  return out;
}

void WriteTree(std::ostream& out, const DiscourseTree& tree) {
  out << FormatTree(tree) << '\n';
}

bool TreeReader::Next(DiscourseTree* tree) {
  Lexer lex(cursor_);
  Parser parser(lex);
  return parser.Record(tree);
}

DiscourseTree ParseTree(const std::string& text) {
  std::istringstream in(text);
  TreeReader reader(in);
  DiscourseTree tree;
  if (!reader.Next(&tree)) throw TreeParseError(1, 1, "empty input");
  DiscourseTree extra;
  if (reader.Next(&extra)) throw DataError("more than one record in input");
  return tree;
}

std::vector<DiscourseTree> ReadTreeFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open tree file '" + path + "'");
  TreeReader reader(in);
  std::vector<DiscourseTree> trees;
  DiscourseTree t;
  while (reader.Next(&t)) trees.push_back(std::move(t));
  return trees;
}

void WriteTreeFile(const std::string& path, const std::vector<DiscourseTree>& trees) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write tree file '" + path + "'");
  for (const DiscourseTree& t : trees) WriteTree(out, t);
  if (!out) throw DataError("write failed for '" + path + "'");
}

std::vector<SpanSet> ReadGoldCorpus(const std::string& path, bool include_leaves) {
  std::vector<SpanSet> out;
  for (const DiscourseTree& t : ReadTreeFile(path)) out.push_back(ExtractSpans(t, include_leaves));
  return out;
}

}  // namespace rstgen
