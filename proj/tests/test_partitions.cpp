#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "verlinde/errors.hpp"
#include "verlinde/partitions.hpp"

using namespace verlinde;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// p-core by repeatedly stripping rim hooks of length p found on the beta-set.
Partition core_oracle(const Partition& lambda, int p) {
  const int n = static_cast<int>(lambda.length());
  std::vector<int> beta;
  for (int i = 1; i <= n; ++i) beta.push_back(lambda.part(static_cast<std::size_t>(i)) + n - i);
  bool moved = true;
  while (moved) {
    moved = false;
    for (auto& b : beta) {
      if (b >= p && std::find(beta.begin(), beta.end(), b - p) == beta.end()) {
        b -= p;
        moved = true;
        break;
      }
    }
  }
  std::sort(beta.rbegin(), beta.rend());
  std::vector<int> parts;
  for (int i = 0; i < n; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (n - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(parts);
}

bool oracle_regular(const Partition& lambda, int p) {
  std::map<int, int> count;
  for (int x : lambda.parts())
    if (++count[x] >= p) return false;
  return true;
}

std::vector<Partition> regular_partitions(int max_size, int p) {
  std::vector<Partition> out;
  for (int n = 1; n <= max_size; ++n)
    for (const auto& lambda : partitions_of(n))
      if (is_p_regular(lambda, p)) out.push_back(lambda);
  return out;
}

}  // namespace

TEST(Partition, Basics) {
  const Partition l = P({3, 2, 2});
  EXPECT_EQ(l.size(), 7);
  EXPECT_EQ(l.length(), 3u);
  EXPECT_EQ(l.part(2), 2);
  EXPECT_EQ(l.part(4), 0);
  EXPECT_EQ(l.to_string(), "(3,2,2)");
  EXPECT_EQ(Partition().to_string(), "()");
  EXPECT_TRUE(l.contains(P({2, 2})));
  EXPECT_FALSE(P({2, 2}).contains(l));
  EXPECT_EQ(l.with_box_added(4), P({3, 2, 2, 1}));
  EXPECT_THROW(l.with_box_added(3), InvalidArgument);
  EXPECT_THROW(P({1, 2}), InvalidArgument);
  EXPECT_THROW(P({2, 0}), InvalidArgument);
}

TEST(Partition, CountsOfPartitions) {
  const std::size_t expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(partitions_of(n).size(), expected[n]);
}

TEST(Regularity, Examples) {
  EXPECT_TRUE(is_p_regular(P({3, 2, 1}), 2));
  EXPECT_FALSE(is_p_regular(P({2, 2}), 2));
  EXPECT_TRUE(is_p_regular(P({2, 2}), 3));
  EXPECT_FALSE(is_p_regular(P({1, 1, 1}), 3));
  EXPECT_TRUE(is_p_regular(Partition(), 2));
  for (int p : {2, 3, 5})
    for (int n = 0; n <= 9; ++n)
      for (const auto& l : partitions_of(n)) EXPECT_EQ(is_p_regular(l, p), oracle_regular(l, p));
}

TEST(Boxes, AddableAndRemovable) {
  const auto add = addable_boxes(P({2, 1}), 3);
  ASSERT_EQ(add.size(), 3u);
  EXPECT_EQ(add[0], (BoxPos{3, 1, 1}));
  EXPECT_EQ(add[1], (BoxPos{2, 2, 0}));
  EXPECT_EQ(add[2], (BoxPos{1, 3, 2}));
  const auto rem = removable_boxes(P({2, 1}), 3);
  ASSERT_EQ(rem.size(), 2u);
  EXPECT_EQ(rem[0], (BoxPos{2, 1, 2}));
  EXPECT_EQ(rem[1], (BoxPos{1, 2, 1}));
  EXPECT_EQ(make_box(1, 1, 5).residue, 0);
  EXPECT_EQ(make_box(3, 1, 5).residue, 3);
}

TEST(Core, Examples) {
  for (int p : {2, 3, 5}) EXPECT_EQ(p_core(P({p}), p), Partition());
  EXPECT_EQ(p_core(P({2, 1}), 3), Partition());
  EXPECT_EQ(p_core(P({2, 1}), 2), P({2, 1}));
  EXPECT_EQ(p_core(P({4}), 3), P({1}));
  EXPECT_EQ(removable_rim_hooks(P({2, 1}), 3), 1u);
  EXPECT_EQ(removable_rim_hooks(P({2, 1}), 2), 0u);
}

TEST(Core, MatchesBetaSetOracle) {
  Rng rng(179);
  for (int p : {2, 3, 5}) {
    for (int n = 0; n <= 12; ++n) {
      for (const auto& l : partitions_of(n)) {
        const Partition c = p_core(l, p);
        EXPECT_EQ(c, core_oracle(l, p)) << l.to_string();
        EXPECT_EQ(p_core(c, p), c);
        EXPECT_EQ(p_core_random_order(l, p, rng), c);
        EXPECT_EQ((l.size() - c.size()) % p, 0);
      }
    }
  }
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho(3, 2), P({2, 2, 1, 1}));
  EXPECT_EQ(rho(2, 3), P({3, 2, 1}));
  EXPECT_EQ(rho(5, 0), Partition());
  EXPECT_EQ(rho(2, 1), P({1}));
  for (int p : {2, 3, 5}) {
    for (int k = 0; k <= 4; ++k) {
      const Partition r = rho(p, k);
      EXPECT_TRUE(is_p_regular(r, p));
      EXPECT_EQ(p_core(r, p), r);
      EXPECT_EQ(r.size(), (p - 1) * k * (k + 1) / 2);
    }
  }
}

TEST(Conormal, Examples) {
  EXPECT_EQ(conormal_boxes(Partition(), 3, 0), (std::vector<BoxPos>{{1, 1, 0}}));
  EXPECT_TRUE(conormal_boxes(Partition(), 3, 1).empty());
  // both addable boxes of (1) have residue 1 at p = 2 and nothing cancels them
  EXPECT_EQ(conormal_boxes(P({1}), 2, 1), (std::vector<BoxPos>{{2, 1, 1}, {1, 2, 1}}));
  // (2,1) at p = 3, residue 1: "+ -" in column order; only "- +" cancels
  EXPECT_EQ(conormal_boxes(P({2, 1}), 3, 1), (std::vector<BoxPos>{{3, 1, 1}}));
  EXPECT_TRUE(conormal_boxes(P({2, 1}), 3, 1, SignatureRule::CancelPlusMinus).empty());
  EXPECT_EQ(cogood_box(P({1}), 2, 1), std::optional<BoxPos>(BoxPos{1, 2, 1}));
  EXPECT_EQ(cogood_box(P({2, 1}), 3, 0), std::optional<BoxPos>(BoxPos{2, 2, 0}));
  EXPECT_EQ(cogood_box(P({2, 1}), 3, 2), std::nullopt);
}

TEST(Conormal, CogoodBoxKeepsRegularity) {
  for (int p : {2, 3, 5}) {
    for (const auto& l : regular_partitions(11, p)) {
      for (int r = 0; r < p; ++r) {
        const auto b = cogood_box(l, p, r);
        if (b) EXPECT_TRUE(is_p_regular(l.with_box_added(b->row), p)) << l.to_string() << " p=" << p << " r=" << r;
      }
    }
  }
}

TEST(Conormal, SomeConormalBoxBreaksRegularity) {
  // the left-most conormal box of (1) at p = 2 gives (1,1)
  const auto boxes = conormal_boxes(P({1}), 2, 1);
  ASSERT_FALSE(boxes.empty());
  EXPECT_FALSE(is_p_regular(P({1}).with_box_added(boxes.front().row), 2));
}

TEST(Greedy, Examples) {
  EXPECT_TRUE(greedy_to_rho(P({1}), 2).empty());
  EXPECT_EQ(greedy_to_rho(P({2}), 2), (std::vector<Partition>{P({2, 1})}));
  const auto chain = greedy_to_rho(P({2, 1}), 3);
  ASSERT_FALSE(chain.empty());
  EXPECT_EQ(chain.back(), P({2, 2, 1, 1}));
  EXPECT_EQ(chain.size(), 3u);
  EXPECT_THROW(greedy_to_rho(P({1, 1}), 2), InvalidArgument);
  EXPECT_THROW(greedy_to_rho(Partition(), 2), InvalidArgument);
  EXPECT_EQ(added_box(P({2}), P({2, 1}), 2), (BoxPos{2, 1, 1}));
}

TEST(Greedy, EveryStepIsConormal) {
  for (int p : {2, 3, 5}) {
    for (const auto& l : regular_partitions(10, p)) {
      const auto chain = greedy_to_rho(l, p);
      const Partition target = rho(p, l.part(1));
      EXPECT_EQ(chain.empty() ? l : chain.back(), target) << l.to_string();
      Partition prev = l;
      for (const auto& next : chain) {
        EXPECT_TRUE(is_p_regular(next, p));
        const BoxPos b = added_box(prev, next, p);
        const auto conormal = conormal_boxes(prev, p, b.residue);
        EXPECT_NE(std::find(conormal.begin(), conormal.end(), b), conormal.end()) << prev.to_string() << " -> " << next.to_string();
        prev = next;
      }
    }
  }
}

TEST(Greedy, OtherSignatureRuleFails) {
  // under "+-" cancellation the step (2) -> (2,1) at p = 2 is not conormal
  const auto conormal = conormal_boxes(P({2}), 2, 1, SignatureRule::CancelPlusMinus);
  EXPECT_EQ(std::find(conormal.begin(), conormal.end(), BoxPos{2, 1, 1}), conormal.end());
}

TEST(James, Condition) {
  EXPECT_TRUE(james_condition(P({3, 3}), 2));
  EXPECT_FALSE(james_condition(P({2, 2}), 2));
  EXPECT_TRUE(james_condition(P({3, 2}), 2));
  EXPECT_TRUE(james_condition(Partition(), 3));
  for (int p : {2, 3, 5})
    for (int k = 1; k <= 9; ++k) EXPECT_TRUE(james_condition(P({k}), p));
}

TEST(James, Envelope) {
  EXPECT_EQ(james_envelope(P({3, 2}), 2), P({3, 3}));
  EXPECT_EQ(james_envelope(P({1}), 2), P({1}));
  EXPECT_EQ(james_envelope(P({2, 2, 2}), 3), P({2, 2, 2}));
  EXPECT_EQ(james_envelope(P({1, 1, 1}), 2), P({1, 1, 1}));
  EXPECT_EQ(james_envelope(P({3, 2, 1}), 2), P({3, 3, 3}));
}

TEST(James, EnvelopeProperties) {
  for (int p : {2, 3, 5}) {
    for (int n = 1; n <= 12; ++n) {
      for (const auto& l : partitions_of(n)) {
        const Partition mu = james_envelope(l, p);
        EXPECT_TRUE(mu.contains(l));
        EXPECT_EQ(mu.length(), l.length());
        EXPECT_TRUE(james_condition(mu, p)) << l.to_string() << " -> " << mu.to_string();
        EXPECT_EQ(mu.part(mu.length()), l.part(1));
      }
    }
  }
}

TEST(Sasha, Examples) {
  EXPECT_EQ(ell_p(2, 3), 2);
  EXPECT_EQ(ell_p(2, 4), 3);
  EXPECT_EQ(ell_p(5, 0), 0);
  EXPECT_EQ(ell_p(3, 8), 2);
  EXPECT_EQ(sasha_bound(2, 3), 9u);
  EXPECT_EQ(sasha_bound(3, 1), 4u);
  for (int p : {2, 3, 5, 7})
    for (std::uint64_t n = 1; n <= 50; ++n) EXPECT_GE(sasha_bound(p, n), n);
}
