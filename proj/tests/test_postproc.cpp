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

#include <doctest.h>

#include "morphlm/error.hpp"
#include "morphlm/postproc.hpp"

using namespace morphlm;

namespace {

const std::string kCaduvu = "చదువు";
const std::string kCunnaadu =
    "చున్నాడు";
const std::string kGaa = "గా";

}  // namespace

TEST_CASE("marked suffix merges onto the stem") {
  const RejoinConfig config;
  CHECK(rejoin({kCaduvu, "+" + kCunnaadu}, config) ==
        SentenceTokens{kCaduvu + kCunnaadu});
}

TEST_CASE("marker-free sentences pass through") {
  const RejoinConfig config;
  const SentenceTokens tokens = {"a", "b", "c"};
  CHECK(rejoin(tokens, config) == tokens);
}

TEST_CASE("leading orphan marker is stripped and counted") {
  const RejoinConfig config;
  std::uint64_t orphans = 0;
  CHECK(rejoin({"+" + kGaa, "nu"}, config, &orphans) ==
        SentenceTokens{kGaa, "nu"});
  CHECK(orphans == 1);
}

TEST_CASE("consecutive marked tokens chain onto one word") {
  const RejoinConfig config;
  CHECK(rejoin({"base", "+mid", "+end"}, config) ==
        SentenceTokens{"basemidend"});
}

TEST_CASE("rejoin is idempotent on marker-free output") {
  const RejoinConfig config;
  const SentenceTokens tokens = {"stem", "+a", "word", "+b", "+c"};
  const SentenceTokens once = rejoin(tokens, config);
  CHECK(rejoin(once, config) == once);
  for (const std::string& t : once)
    CHECK(t.find(config.marker) == std::string::npos);
}

TEST_CASE("custom single code point markers work") {
  RejoinConfig config;
  config.marker = "§";  // section sign
  CHECK(rejoin({"ab", config.marker + "cd"}, config) ==
        SentenceTokens{"abcd"});
  RejoinConfig bad;
  bad.marker = "++";
  CHECK_THROWS_AS(bad.validate(), UsageError);
}

TEST_CASE("empty sentences stay empty") {
  const RejoinConfig config;
  CHECK(rejoin({}, config) == SentenceTokens{});
}
