#include <gtest/gtest.h>

#include <set>

#include "bisc/classes.hpp"

namespace bisc {
namespace {

std::size_t count_len(const std::vector<Permutation>& ps, std::size_t n) {
  return static_cast<std::size_t>(
      std::count_if(ps.begin(), ps.end(), [&](const Permutation& p) { return p.size() == n; }));
}

bool member(const std::vector<Permutation>& ps, const Permutation& p) {
  return std::find(ps.begin(), ps.end(), p) != ps.end();
}

TEST(StackSort, Examples) {
  EXPECT_EQ(stack_sort(Permutation{2, 3, 1}), (Permutation{2, 1, 3}));
  EXPECT_EQ(stack_sort(Permutation{3, 5, 2, 4, 1}), (Permutation{3, 2, 1, 4, 5}));
  EXPECT_EQ(stack_sort(stack_sort(Permutation{3, 5, 2, 4, 1})), (Permutation{1, 2, 3, 4, 5}));
  EXPECT_EQ(stack_sort(Permutation{}), Permutation{});
}

TEST(StackSort, SortableAreCatalan) {
  const auto s = gen_stack_sortable(7);
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (std::size_t n = 0; n <= 7; ++n) EXPECT_EQ(count_len(s, n), catalan[n]);
  EXPECT_EQ(s, avoiders(parse_pattern_list("231"), 7).flat());
}

TEST(WestTwo, SmallLengths) {
  const auto w = gen_west2(5);
  std::vector<Permutation> s4;
  for (const auto& p : all_permutations(4))
    if (p != Permutation{2, 3, 4, 1} && p != Permutation{3, 2, 4, 1}) s4.push_back(p);
  std::vector<Permutation> w4;
  for (const auto& p : w)
    if (p.size() == 4) w4.push_back(p);
  EXPECT_EQ(w4, s4);
  EXPECT_TRUE(member(w, Permutation{3, 5, 2, 4, 1}));
  EXPECT_FALSE(member(w, Permutation{3, 4, 1, 5, 2}));
}

TEST(WestTwo, MatchesItsBasisAndCounts) {
  const auto w = gen_west2(7);
  EXPECT_EQ(w, avoiders(parse_pattern_list("2341, (3241, {(1,4)})"), 7).flat());
  // 2(3n)!/((n+1)!(2n+1)!)
  const std::size_t counts[] = {1, 1, 2, 6, 22, 91, 408, 1938};
  for (std::size_t n = 0; n <= 7; ++n) EXPECT_EQ(count_len(w, n), counts[n]);
}

TEST(Quicksort, Pass) {
  EXPECT_EQ(quicksort_pass(Permutation{1, 2, 3}), (Permutation{1, 2, 3}));
  EXPECT_EQ(quicksort_pass(Permutation{2, 1, 3}), (Permutation{1, 2, 3}));
  EXPECT_EQ(quicksort_pass(Permutation{3, 2, 1}), (Permutation{2, 1, 3}));
  const auto q = gen_quicksortable(6);
  EXPECT_FALSE(member(q, Permutation{3, 2, 1}));
  EXPECT_FALSE(member(q, Permutation{2, 4, 1, 3}));
  EXPECT_TRUE(member(q, Permutation{3, 1, 2}));
  EXPECT_EQ(q, avoiders(parse_pattern_list("321, 2413, (2143, {(2,2)})"), 6).flat());
}

TEST(Dihedral, GroupSizes) {
  const auto d = gen_dihedral(7);
  EXPECT_EQ(count_len(d, 0), 1u);
  EXPECT_EQ(count_len(d, 1), 1u);
  EXPECT_EQ(count_len(d, 2), 2u);
  for (std::size_t n = 3; n <= 7; ++n) EXPECT_EQ(count_len(d, n), 2 * n);
  EXPECT_TRUE(std::is_sorted(d.begin(), d.end()));
  EXPECT_TRUE(member(d, Permutation{2, 3, 4, 1}));
  EXPECT_TRUE(member(d, Permutation{4, 3, 2, 1}));
  EXPECT_FALSE(member(d, Permutation{2, 1, 3, 4}));
}

TEST(Dihedral, ClosedUnderComposition) {
  const auto d = gen_dihedral(6);
  std::set<Permutation> d6;
  for (const auto& p : d)
    if (p.size() == 6) d6.insert(p);
  for (const auto& a : d6)
    for (const auto& b : d6) {
      std::vector<int> ab(6);
      for (std::size_t i = 0; i < 6; ++i) ab[i] = a[static_cast<std::size_t>(b[i]) - 1];
      EXPECT_TRUE(d6.contains(Permutation(ab)));
    }
}

TEST(Alternating, Counts) {
  const auto a = gen_alternating(6);
  EXPECT_EQ(count_len(a, 0), 1u);
  EXPECT_EQ(count_len(a, 1), 1u);
  EXPECT_EQ(count_len(a, 2), 1u);
  EXPECT_EQ(count_len(a, 3), 3u);
  EXPECT_EQ(count_len(a, 6), 360u);
  EXPECT_TRUE(member(a, Permutation{2, 3, 1}));
  EXPECT_TRUE(member(a, Permutation{3, 1, 2}));
  EXPECT_FALSE(member(a, Permutation{1, 3, 2}));
}

TEST(Alternating, FullShadingsOnceHostsAreLongEnough) {
  for (const auto& [n, m] : {std::pair<std::size_t, std::size_t>{5, 3}, {6, 4}}) {
    const auto b = bisc(gen_alternating(n), m);
    EXPECT_FALSE(b.empty());
    for (const auto& mp : b.patterns) EXPECT_TRUE(mp.shading.is_full()) << n << "," << m << ": " << mp;
  }
}

TEST(Rsk, Shapes) {
  EXPECT_EQ(rsk_shape(Permutation{1, 2, 3}), (YoungShape{3}));
  EXPECT_EQ(rsk_shape(Permutation{3, 2, 1}), (YoungShape{1, 1, 1}));
  EXPECT_EQ(rsk_shape(Permutation{2, 1, 4, 3}), (YoungShape{2, 2}));
  EXPECT_EQ(rsk_shape(Permutation{}), YoungShape{});
  // longest increasing subsequence = first row
  for (const auto& p : all_permutations(6)) {
    std::size_t lis = 0;
    std::vector<int> tails;
    for (const int x : p) {
      auto it = std::lower_bound(tails.begin(), tails.end(), x);
      if (it == tails.end())
        tails.push_back(x);
      else
        *it = x;
    }
    lis = tails.size();
    EXPECT_EQ(static_cast<std::size_t>(rsk_shape(p).rows().front()), lis) << p;
  }
}

TEST(Rsk, ShapeParsing) {
  EXPECT_EQ(YoungShape::parse("3,2"), (YoungShape{3, 2}));
  EXPECT_EQ(YoungShape::parse("(2,2)"), (YoungShape{2, 2}));
  EXPECT_EQ(YoungShape::parse("32"), (YoungShape{3, 2}));
  EXPECT_THROW(YoungShape::parse("2,3"), std::invalid_argument);
  EXPECT_THROW(YoungShape::parse("x"), std::invalid_argument);
  EXPECT_EQ((YoungShape{3, 2}).str(), "(3,2)");
}

TEST(Rsk, ShapeAvoiders) {
  EXPECT_EQ(gen_shape_avoiders(YoungShape{1}, 4), std::vector<Permutation>{Permutation{}});
  // avoiding a row of 3 = avoiding 123
  EXPECT_EQ(gen_shape_avoiders(YoungShape{3}, 6), avoiders(parse_pattern_list("123"), 6).flat());
  const auto hooks = gen_shape_avoiders(YoungShape{2, 2}, 5);
  EXPECT_FALSE(member(hooks, Permutation{2, 1, 4, 3}));
  EXPECT_TRUE(member(hooks, Permutation{1, 4, 3, 2}));
}

TEST(RestrictedStack, SigmaTwentyOneIsWestTwo) {
  EXPECT_EQ(restricted_stack_sortable(Permutation{2, 1}, 6), gen_west2(6));
}

TEST(RestrictedStack, SigmaTwelveIsAv213) {
  EXPECT_EQ(restricted_stack_sortable(Permutation{1, 2}, 6), avoiders(parse_pattern_list("213"), 6).flat());
}

TEST(RestrictedStack, RejectsEmptyRestriction) {
  EXPECT_THROW(restricted_stack_sortable(Permutation{}, 3), std::invalid_argument);
}

TEST(ByAvoidance, Baxter) {
  const auto b = generate_class("baxter", 4);
  std::vector<Permutation> s4;
  for (const auto& p : all_permutations(4))
    if (p != Permutation{2, 4, 1, 3} && p != Permutation{3, 1, 4, 2}) s4.push_back(p);
  std::vector<Permutation> b4;
  for (const auto& p : b)
    if (p.size() == 4) b4.push_back(p);
  EXPECT_EQ(b4, s4);
  EXPECT_EQ(count_len(generate_class("baxter", 6), 6), 422u);
}

TEST(Registry, Specs) {
  EXPECT_EQ(generate_class("stack_sortable", 5), gen_stack_sortable(5));
  EXPECT_EQ(generate_class("avoid:231", 5), gen_stack_sortable(5));
  EXPECT_EQ(generate_class("rsk_avoid:2,2", 5), gen_shape_avoiders(YoungShape{2, 2}, 5));
  EXPECT_EQ(generate_class("restricted_stack:21", 5), gen_west2(5));
  EXPECT_EQ(generate_class("forest-like", 5), generate_class("forestlike", 5));
  EXPECT_EQ(count_len(generate_class("smooth", 5), 5), 88u);
  EXPECT_THROW(generate_class("nope", 3), std::invalid_argument);
  EXPECT_THROW(generate_class("west2", 11), LimitError);
}

}  // namespace
}  // namespace bisc
