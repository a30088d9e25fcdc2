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

#include "morphlm/postproc.hpp"

#include "morphlm/error.hpp"
#include "morphlm/utf8.hpp"

namespace morphlm {

void RejoinConfig::validate() const {
  if (utf8::length(marker) != 1)
    throw UsageError("rejoin marker must be exactly one code point");
}

SentenceTokens rejoin(const SentenceTokens& tokens, const RejoinConfig& config,
                      std::uint64_t* orphan_count) {
  config.validate();
  SentenceTokens out;
  out.reserve(tokens.size());
  for (const std::string& token : tokens) {
    if (token.size() > config.marker.size() &&
        token.compare(0, config.marker.size(), config.marker) == 0) {
      const std::string body = token.substr(config.marker.size());
      if (out.empty()) {
        if (orphan_count) ++*orphan_count;
        out.push_back(body);
      } else {
        out.back() += body;
      }
    } else if (token == config.marker) {
      // A bare marker token carries no content; treat as an orphan suffix.
      if (orphan_count && out.empty()) ++*orphan_count;
    } else {
      out.push_back(token);
    }
  }
  return out;
}

Corpus rejoin_corpus(const Corpus& corpus, const RejoinConfig& config,
                     std::uint64_t* orphan_count) {
  Corpus out;
  out.reserve(corpus.size());
  for (const SentenceTokens& sentence : corpus)
    out.push_back(rejoin(sentence, config, orphan_count));
  return out;
}

}  // namespace morphlm
