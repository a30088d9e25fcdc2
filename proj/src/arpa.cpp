// Copyright 2026 The morphlm Authors.
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

#include "morphlm/arpa.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "morphlm/error.hpp"

namespace morphlm {

namespace {

std::string format_log10(double value) {
  if (!std::isfinite(value) || value < kLog10Floor) value = kLog10Floor;
  if (value == 0.0) value = 0.0;  // normalize -0
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.7g", value);
  return buf;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

double parse_number(const std::string& field, std::size_t line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value))
    fail(line_no, "malformed number '" + field + "'");
  return value;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

}  // namespace

void write_arpa(const ArpaDocument& doc, std::ostream& out) {
  if (doc.orders.empty())
    throw UsageError("cannot write an ARPA model with no orders");
  out << "\\data\\\n";
  for (std::size_t k = 1; k <= doc.orders.size(); ++k)
    out << "ngram " << k << '=' << doc.orders[k - 1].size() << '\n';
  for (std::size_t k = 1; k <= doc.orders.size(); ++k) {
    out << "\n\\" << k << "-grams:\n";
    for (const ArpaEntry& entry : doc.orders[k - 1]) {
      out << format_log10(entry.log10_prob) << '\t';
      for (std::size_t i = 0; i < entry.tokens.size(); ++i) {
        if (i) out << ' ';
        out << entry.tokens[i];
      }
      if (entry.log10_bow) out << '\t' << format_log10(*entry.log10_bow);
      out << '\n';
    }
  }
  out << "\n\\end\\\n";
  if (!out) throw IoError("write failure on ARPA stream");
}

ArpaDocument model_to_document(const BackoffModel& model) {
  ArpaDocument doc;
  doc.orders.resize(model.order());
  const Vocabulary& vocab = model.vocab();
  for (std::size_t k = 1; k <= model.order(); ++k) {
    auto& list = doc.orders[k - 1];
    list.reserve(model.entries(k).size());
    for (const auto& [gram, entry] : model.entries(k)) {
      ArpaEntry e;
      e.log10_prob = entry.log10_prob;
      e.tokens.reserve(gram.size());
      for (TokenId id : gram) e.tokens.push_back(vocab.token(id));
      if (entry.has_bow) e.log10_bow = entry.log10_bow;
      list.push_back(std::move(e));
    }
    std::sort(list.begin(), list.end(),
              [](const ArpaEntry& a, const ArpaEntry& b) {
                return a.tokens < b.tokens;
              });
  }
  return doc;
}

void write_arpa(const BackoffModel& model, std::ostream& out) {
  write_arpa(model_to_document(model), out);
}

void write_arpa_file(const BackoffModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  write_arpa(model, out);
}

ArpaDocument parse_arpa(std::istream& in) {
  ArpaDocument doc;
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  // Header.
  bool seen_data = false;
  while (next_line()) {
    if (line.empty()) continue;
    if (line == "\\data\\") {
      seen_data = true;
      break;
    }
    fail(line_no, "expected \\data\\ header, got '" + line + "'");
  }
  if (!seen_data) throw ParseError("missing \\data\\ header");

  std::vector<std::size_t> declared;
  while (next_line()) {
    if (line.empty()) continue;
    if (line.rfind("ngram ", 0) != 0) break;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "malformed ngram count line");
    const std::string order_str = line.substr(6, eq - 6);
    const std::string count_str = line.substr(eq + 1);
    std::size_t order = 0, count = 0;
    auto r1 = std::from_chars(order_str.data(),
                              order_str.data() + order_str.size(), order);
    auto r2 = std::from_chars(count_str.data(),
                              count_str.data() + count_str.size(), count);
    if (r1.ec != std::errc() || r2.ec != std::errc() ||
        r1.ptr != order_str.data() + order_str.size() ||
        r2.ptr != count_str.data() + count_str.size())
      fail(line_no, "malformed ngram count line");
    if (order != declared.size() + 1)
      fail(line_no, "ngram orders must be declared consecutively from 1");
    declared.push_back(count);
  }
  if (declared.empty()) throw ParseError("no ngram count declarations");
  doc.orders.resize(declared.size());

  // Sections.  `line` currently holds the first non-count line.
  bool seen_end = false;
  for (std::size_t k = 1; k <= declared.size(); ++k) {
    const std::string header = "\\" + std::to_string(k) + "-grams:";
    while (line.empty() && next_line()) {
    }
    if (line != header)
      fail(line_no, "expected section header " + header);
    auto& list = doc.orders[k - 1];
    list.reserve(declared[k - 1]);
    std::set<std::vector<std::string>> seen;
    while (next_line()) {
      if (line.empty()) continue;
      if (line[0] == '\\') break;
      const std::vector<std::string> fields = split_fields(line);
      if (fields.size() != k + 1 && fields.size() != k + 2)
        fail(line_no, "expected " + std::to_string(k + 1) + " or " +
                          std::to_string(k + 2) + " fields in a " +
                          std::to_string(k) + "-gram line");
      ArpaEntry entry;
      entry.log10_prob = parse_number(fields[0], line_no);
      entry.tokens.assign(fields.begin() + 1, fields.begin() + 1 + k);
      if (fields.size() == k + 2)
        entry.log10_bow = parse_number(fields.back(), line_no);
      if (!seen.insert(entry.tokens).second)
        fail(line_no, "duplicate " + std::to_string(k) + "-gram entry");
      list.push_back(std::move(entry));
    }
    if (list.size() != declared[k - 1])
      throw ParseError("order " + std::to_string(k) + ": declared " +
                       std::to_string(declared[k - 1]) + " entries but found " +
                       std::to_string(list.size()));
    if (!in && k < declared.size())
      throw ParseError("unexpected end of file before order " +
                       std::to_string(k + 1) + " section");
  }
  while (line.empty() && next_line()) {
  }
  if (line == "\\end\\") seen_end = true;
  if (!seen_end) throw ParseError("missing \\end\\ terminator");
  return doc;
}

BackoffModel document_to_model(const ArpaDocument& doc) {
  if (doc.orders.empty() || doc.orders[0].empty())
    throw ParseError("ARPA document has no unigram entries");
  auto vocab = std::make_shared<Vocabulary>();
  for (const ArpaEntry& entry : doc.orders[0]) vocab->add(entry.tokens[0]);
  BackoffModel model(doc.orders.size(), vocab);
  for (std::size_t k = 1; k <= doc.orders.size(); ++k) {
    auto& out = model.entries(k);
    for (const ArpaEntry& entry : doc.orders[k - 1]) {
      NGram gram;
      gram.reserve(k);
      for (const std::string& token : entry.tokens) {
        const auto id = vocab->find(token);
        if (!id)
          throw ParseError("token '" + token + "' in a " + std::to_string(k) +
                           "-gram has no unigram entry");
        gram.push_back(*id);
      }
      ModelEntry e;
      e.log10_prob = entry.log10_prob;
      if (entry.log10_bow) {
        e.has_bow = true;
        e.log10_bow = *entry.log10_bow;
      }
      out.emplace(std::move(gram), e);
    }
  }
  return model;
}

BackoffModel read_arpa(std::istream& in) {
  return document_to_model(parse_arpa(in));
}

BackoffModel read_arpa_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model file: " + path);
  try {
    return read_arpa(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace morphlm
