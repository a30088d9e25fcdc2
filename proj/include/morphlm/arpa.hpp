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

#ifndef MORPHLM_ARPA_HPP_
#define MORPHLM_ARPA_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "morphlm/smoothing.hpp"

namespace morphlm {

// In-memory image of an ARPA text model.
struct ArpaEntry {
  double log10_prob = 0.0;
  std::vector<std::string> tokens;
  std::optional<double> log10_bow;
};

struct ArpaDocument {
  // orders[k-1] holds the entries of the "\k-grams:" section.
  std::vector<std::vector<ArpaEntry>> orders;
};

// Canonical layout: "\data\" header, one "ngram k=N" line per order, per
// order a "\k-grams:" section of "LOGPROB<TAB>w1 .. wk[<TAB>BACKOFF]" lines
// sorted lexicographically by token strings, and a final "\end\".  Numbers
// carry 7 significant digits; -infinity is floored at -99.
void write_arpa(const ArpaDocument& doc, std::ostream& out);
void write_arpa(const BackoffModel& model, std::ostream& out);
void write_arpa_file(const BackoffModel& model, const std::string& path);

// Strict structural validation (declared counts, section order, uniqueness,
// number syntax); throws ParseError with a 1-based line number.
ArpaDocument parse_arpa(std::istream& in);

ArpaDocument model_to_document(const BackoffModel& model);
BackoffModel document_to_model(const ArpaDocument& doc);

BackoffModel read_arpa(std::istream& in);
BackoffModel read_arpa_file(const std::string& path);

}  // namespace morphlm

#endif  // MORPHLM_ARPA_HPP_
