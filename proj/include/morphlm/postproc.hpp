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

#ifndef MORPHLM_POSTPROC_HPP_
#define MORPHLM_POSTPROC_HPP_

#include <cstdint>
#include <string>

#include "morphlm/corpus.hpp"

namespace morphlm {

struct RejoinConfig {
  std::string marker = "+";  // exactly one code point

  void validate() const;
};

// Concatenates every marker-led token onto the previous output token,
// chaining consecutive marked tokens.  A marked token with no predecessor is
// emitted with the marker stripped and counted as an orphan.
SentenceTokens rejoin(const SentenceTokens& tokens, const RejoinConfig& config,
                      std::uint64_t* orphan_count = nullptr);

Corpus rejoin_corpus(const Corpus& corpus, const RejoinConfig& config,
                     std::uint64_t* orphan_count = nullptr);

}  // namespace morphlm

#endif  // MORPHLM_POSTPROC_HPP_
