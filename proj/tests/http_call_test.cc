// Copyright 2026 The Evorest Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "evorest/http_call.h"

#include <gtest/gtest.h>

#include <string>

#include "evorest/error.h"
#include "evorest/rng.h"

namespace evorest {
namespace {

TEST(ResolveLocationTest, AppendsSuffixBelowCreatedResource) {
  EXPECT_EQ(ResolveLocation("/api/v1/activities/77", "/api/v1/activities/-324163273/rating",
                            "/api/v1/activities"),
            "/api/v1/activities/77/rating");
}

TEST(ResolveLocationTest, ResourceItselfIsReplacedWholesale) {
  EXPECT_EQ(ResolveLocation("/r/9", "/r/5", "/r"), "/r/9");
}

TEST(ResolveLocationTest, PathOutsideCreationPathIsRejected) {
  EXPECT_THROW(ResolveLocation("/r/9", "/other/5/x", "/r"), ResolutionError);
}

TEST(ResolveLocationTest, PathWithoutIdSegmentIsRejected) {
  EXPECT_THROW(ResolveLocation("/r/9", "/r", "/r"), ResolutionError);
}

TEST(ResolveLocationTest, PlaceholdersInCreationPathMatchAnySegment) {
  EXPECT_EQ(ResolveLocation("/u/3/items/8", "/u/41/items/2/tags", "/u/{uid}/items"),
            "/u/3/items/8/tags");
}

TEST(ResolveLocationTest, QueryIsCarriedOver) {
  EXPECT_EQ(ResolveLocation("/r/9", "/r/5?x=1", "/r"), "/r/9?x=1");
}

TEST(ResolveLocationTest, TrailingSlashOfSavedLocationIsDropped) {
  EXPECT_EQ(ResolveLocation("/r/9/", "/r/5/sub", "/r"), "/r/9/sub");
}

std::string RandomSegment(Rng& rng) {
  static constexpr std::string_view kAlphabet = "abcxyz0123456789-_";
  std::string s;
  const size_t n = 1 + rng.Index(6);
  for (size_t i = 0; i < n; ++i) s += kAlphabet[rng.Index(kAlphabet.size())];
  return s;
}

std::string RandomPath(Rng& rng, size_t segments) {
  std::string p;
  for (size_t i = 0; i < segments; ++i) p += "/" + RandomSegment(rng);
  return p;
}

TEST(ResolveLocationProperty, ResultStartsWithSavedLocationAndKeepsSuffix) {
  Rng rng(7);
  for (int i = 0; i < 20000; ++i) {
    const std::string creation = RandomPath(rng, rng.Index(4));
    const std::string saved = RandomPath(rng, 1 + rng.Index(4));
    const std::string suffix = RandomPath(rng, rng.Index(3));
    const std::string concrete = creation + "/" + RandomSegment(rng) + suffix;
    const std::string resolved = ResolveLocation(saved, concrete, creation);
    ASSERT_EQ(resolved.rfind(saved, 0), 0u) << saved << " " << concrete << " " << creation;
    ASSERT_EQ(resolved, saved + suffix);
  }
}

TEST(UrlEncodeTest, ReservedCharactersArePercentEncoded) {
  EXPECT_EQ(UrlEncode("a b&c=d/é"), "a%20b%26c%3Dd%2F%C3%A9");
  EXPECT_EQ(UrlEncode("AZaz09-_.~"), "AZaz09-_.~");
}

TEST(UrlEncodeTest, DecodeHandlesPlusAndMalformedEscapes) {
  EXPECT_EQ(UrlDecode("a+b%2"), "a b%2");
  EXPECT_EQ(UrlDecode("%zz"), "%zz");
}

TEST(UrlEncodeProperty, DecodeInvertsEncode) {
  Rng rng(11);
  for (int i = 0; i < 20000; ++i) {
    std::string s;
    const size_t n = rng.Index(20);
    for (size_t k = 0; k < n; ++k) s += static_cast<char>(rng.Index(256));
    ASSERT_EQ(UrlDecode(UrlEncode(s)), s);
  }
}

TEST(PathOfUrlTest, ExtractsPathComponent) {
  EXPECT_EQ(PathOfUrl("http://localhost:8080/api/v1/activities/77"), "/api/v1/activities/77");
  EXPECT_EQ(PathOfUrl("http://localhost:8080"), "/");
  EXPECT_EQ(PathOfUrl("/already/a/path"), "/already/a/path");
}

TEST(ConcreteHttpCallTest, UrlJoinsBasePathAndQuery) {
  ConcreteHttpCall call;
  call.path = "/r/1";
  EXPECT_EQ(call.Url("http://h:1"), "http://h:1/r/1");
  call.query = "q=2";
  EXPECT_EQ(call.Url("http://h:1"), "http://h:1/r/1?q=2");
  EXPECT_TRUE(call.content_type().empty());
  call.body = "{}";
  EXPECT_EQ(call.content_type(), "application/json");
}

}  // namespace
}  // namespace evorest
