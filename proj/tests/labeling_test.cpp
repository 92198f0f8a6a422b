// Copyright 2026 The corona-antimagic Authors
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

#include <map>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "corona/labeling.hpp"
#include "corona/presets.hpp"
#include "test_support.hpp"

namespace corona {
namespace {

TEST(LabelBlock, AssignsConsecutiveLabels) {
  Labeling f(5);
  EXPECT_EQ(label_block(f, {3, 1}, 0), 2);
  EXPECT_EQ(f[3], 1);
  EXPECT_EQ(f[1], 2);
  EXPECT_EQ(label_block(f, {0, 4, 2}, 2), 5);
  EXPECT_EQ(f.labels, (std::vector<std::int64_t>{3, 2, 5, 1, 4}));
  EXPECT_TRUE(f.complete());
}

TEST(LabelBlock, EmptyRunReturnsStart) {
  Labeling f(2);
  std::vector<EdgeId> none;
  EXPECT_EQ(label_block(f, none, 7), 7);
  EXPECT_FALSE(f.complete());
}

TEST(LabelBlock, RefusesToRelabel) {
  Labeling f(3);
  label_block(f, {1}, 0);
  try {
    label_block(f, {0, 1}, 1);
    FAIL() << "expected AlreadyLabeled";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AlreadyLabeled);
  }
  // Nothing of the rejected run was written.
  EXPECT_FALSE(f.is_labeled(0));
}

TEST(Rank, OrdersBySumThenId) {
  const std::vector<VertexId> vs{7, 8, 9};
  const std::vector<std::int64_t> sums{5, 3, 4};
  auto r = rank_by_partial_sums(vs, sums);
  EXPECT_EQ(r.order, (std::vector<VertexId>{8, 9, 7}));
  EXPECT_EQ(r.partial_sums, (std::vector<std::int64_t>{3, 4, 5}));
}

TEST(Rank, TiesGoToTheSmallerId) {
  const std::vector<VertexId> vs{12, 4, 9, 5};
  const std::vector<std::int64_t> sums{2, 2, 1, 2};
  EXPECT_EQ(rank_by_partial_sums(vs, sums).order, (std::vector<VertexId>{9, 4, 5, 12}));
  EXPECT_EQ(rank_by_partial_sums({{3, 0}, {1, 0}, {2, 0}}).order,
            (std::vector<VertexId>{1, 2, 3}));
}

TEST(Rank, MismatchedInputs) {
  const std::vector<VertexId> vs{1, 2};
  const std::vector<std::int64_t> sums{1};
  EXPECT_THROW(rank_by_partial_sums(vs, sums), Error);
}

TEST(Rank, TriangleAfterItsOwnEdges) {
  // C3 inside a composite: internal labels 1, 2, 3 give partial sums 3, 4, 5.
  Graph c3 = cycle_graph(3);
  Labeling f(3);
  label_block(f, {0, 1, 2}, 0);
  const std::vector<VertexId> vs{0, 1, 2};
  auto r = detail::rank_now(c3, f, vs, "t");
  EXPECT_EQ(r.partial_sums, (std::vector<std::int64_t>{3, 4, 5}));
}

TEST(Rank, IsAPermutationAndMonotone) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const int n = testing::uniform_int(rng, 0, 12);
    std::vector<VertexId> vs;
    std::vector<std::int64_t> sums;
    for (int i = 0; i < n; ++i) {
      vs.push_back(static_cast<VertexId>(i * 3 + testing::uniform_int(rng, 0, 2)));
      sums.push_back(testing::uniform_int(rng, 0, 5));
    }
    const auto r = rank_by_partial_sums(vs, sums);
    ASSERT_EQ(r.order.size(), vs.size());
    auto sorted = r.order;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, vs);  // vs is increasing by construction
    for (std::size_t i = 1; i < r.order.size(); ++i) {
      EXPECT_TRUE(r.partial_sums[i - 1] < r.partial_sums[i] ||
                  (r.partial_sums[i - 1] == r.partial_sums[i] && r.order[i - 1] < r.order[i]));
    }
    // Ranking the ranked output changes nothing.
    EXPECT_EQ(rank_by_partial_sums(r.order, r.partial_sums).order, r.order);
  }
}

}  // namespace
}  // namespace corona
