#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edgefair/fairness.hpp"
#include "edgefair/generator.hpp"
#include "edgefair/goods_chores.hpp"
#include "edgefair/oracle.hpp"
#include "support/test_support.hpp"

using namespace edgefair;
using ef_test::make_instance;

TEST_CASE("goods efx+ orientation: lower endpoint everywhere, checker passes") {
  Instance triangle = make_instance(3, {{0, 1, 1, 2}, {0, 2, 3, 1}, {1, 2, 2, 2}});
  Allocation alloc = goods_efxplus_orientation(triangle);
  CHECK(alloc.owner(0) == std::optional<AgentId>(0));
  CHECK(alloc.owner(1) == std::optional<AgentId>(0));
  CHECK(alloc.owner(2) == std::optional<AgentId>(1));
  CHECK(passes(triangle, alloc, Notion::EfxGPlus));

  Instance single = make_instance(2, {{0, 1, 1, 1}});
  Allocation sa = goods_efxplus_orientation(single);
  CHECK(sa.owner(0) == std::optional<AgentId>(0));
  CHECK(passes(single, sa, Notion::EfxGPlus));
  CHECK(!passes(single, sa, Notion::Ef));

  Instance empty = build_instance(2, {}, {});
  CHECK(is_envy_free(empty, goods_efxplus_orientation(empty)));

  CHECK_THROWS_WITH_AS(goods_efxplus_orientation(ef_test::c4_chord_chores()),
                       doctest::Contains("NotGoodsInstance"), Error);
}

TEST_CASE("goods efx0 allocation passes its checker") {
  Instance single = make_instance(2, {{0, 1, 1, 1}});
  CHECK(passes(single, goods_efx0_allocation(single), Notion::EfxG0));

  Instance star = make_instance(4, {{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 3, 1, 1}});
  CHECK(passes(star, goods_efx0_allocation(star), Notion::EfxG0));

  Instance triangle = make_instance(3, {{0, 1, 1, 1}, {0, 2, 1, 1}, {1, 2, 1, 1}});
  CHECK(passes(triangle, goods_efx0_allocation(triangle), Notion::EfxG0));
}

TEST_CASE("chores EF allocation avoids endpoints") {
  Instance single = make_instance(3, {{0, 1, -1, -1}});
  Allocation alloc = chores_ef_allocation(single);
  CHECK(alloc.owner(0) == std::optional<AgentId>(2));
  CHECK(is_envy_free(single, alloc));

  Instance c4 = make_instance(4, {{0, 1, -1, -1}, {1, 2, -1, -1}, {2, 3, -1, -1}, {0, 3, -1, -1}});
  Allocation a4 = chores_ef_allocation(c4);
  CHECK(a4.owner(0) == std::optional<AgentId>(2));
  CHECK(a4.owner(1) == std::optional<AgentId>(0));
  CHECK(a4.owner(2) == std::optional<AgentId>(0));
  CHECK(a4.owner(3) == std::optional<AgentId>(1));
  CHECK(is_envy_free(c4, a4));

  CHECK_THROWS_WITH_AS(chores_ef_allocation(make_instance(2, {{0, 1, -1, -1}})),
                       doctest::Contains("TooFewAgents"), Error);
}

TEST_CASE("chores efx- orientation decider") {
  // More chore edges than vertices in one component.
  CHECK(!chores_efxminus_orientation(ef_test::c4_chord_chores()).exists);

  Instance triangle = make_instance(3, {{0, 1, -1, -1}, {0, 2, -1, -1}, {1, 2, -1, -1}});
  DecideResult r = chores_efxminus_orientation(triangle);
  REQUIRE(r.exists);
  auto bundles = r.witness->bundles(3);
  for (AgentId a = 0; a < 3; ++a) CHECK(bundles[static_cast<size_t>(a)].size() == 1);
  CHECK(passes(triangle, *r.witness, Notion::EfxCMinus));

  // Dummy for one endpoint: pruned away and parked at the dummy side.
  Instance mixed_signs = make_instance(2, {{0, 1, -1, 0}});
  DecideResult r2 = chores_efxminus_orientation(mixed_signs);
  REQUIRE(r2.exists);
  CHECK(r2.witness->owner(0) == std::optional<AgentId>(1));
  CHECK(passes(mixed_signs, *r2.witness, Notion::EfxCMinus));
}

TEST_CASE("push subroutine") {
  Instance single = make_instance(2, {{0, 1, -1, -1}});
  std::vector<EdgeId> r{0};
  PushOutcome out = push(single, Allocation(1), 0, 0, r);
  CHECK(out.flag);
  CHECK(out.touched == std::vector<AgentId>{0});
  CHECK(out.remaining.empty());
  CHECK(out.orientation.owner(0) == std::optional<AgentId>(0));

  // Refused when the target already owns something.
  Instance two = make_instance(3, {{0, 1, -1, -1}, {0, 2, -1, -1}});
  Allocation pre(2);
  pre.assign(0, 0);
  CHECK(!push(two, pre, 1, 0, {1}).flag);

  // Triangle cascade: pushing (0,1) to agent 0 forces the other two edges.
  Instance triangle = make_instance(3, {{0, 1, -1, -1}, {0, 2, -1, -1}, {1, 2, -1, -1}});
  std::vector<EdgeId> all{0, 1, 2};
  PushOutcome cascade = push(triangle, Allocation(3), 0, 0, all);
  REQUIRE(cascade.flag);
  CHECK(cascade.orientation.owner(0) == std::optional<AgentId>(0));
  CHECK(cascade.orientation.owner(1) == std::optional<AgentId>(2));
  CHECK(cascade.orientation.owner(2) == std::optional<AgentId>(1));
  CHECK(cascade.touched == std::vector<AgentId>{0, 1, 2});
  CHECK(passes(triangle, cascade.orientation, Notion::EfxC0));
}

TEST_CASE("chores efx0 orientation decider on the named instances") {
  CHECK(!chores_efx0_orientation(ef_test::c4_chord_chores()).exists);

  Instance c4 = make_instance(4, {{0, 1, -1, -1}, {1, 2, -1, -1}, {2, 3, -1, -1}, {0, 3, -1, -1}});
  DecideResult r = chores_efx0_orientation(c4);
  REQUIRE(r.exists);
  CHECK(passes(c4, *r.witness, Notion::EfxC0));
  // Cross-check existence with the oracle over all 16 orientations.
  SearchSpec spec;
  spec.mode = SearchMode::Orientations;
  spec.notion = Notion::EfxC0;
  CHECK(oracle_exists(c4, spec).exists);

  // Middle agent classes both path edges as dummies, the leaves as chores.
  Instance dummy_middle = make_instance(3, {{0, 1, -1, 0}, {1, 2, 0, -1}});
  DecideResult r2 = chores_efx0_orientation(dummy_middle);
  REQUIRE(r2.exists);
  CHECK(passes(dummy_middle, *r2.witness, Notion::EfxC0));
}

TEST_CASE("chores deciders match the oracle on random small chores instances") {
  Rng rng(31);
  SearchSpec spec;
  spec.mode = SearchMode::Orientations;
  for (int trial = 0; trial < 150; ++trial) {
    GenOptions opt;
    opt.kind = GenKind::Chores;
    opt.n = 2 + static_cast<int>(rng.below(4));
    int cap = std::min(7, opt.n * (opt.n - 1) / 2);
    opt.m = static_cast<int>(rng.below(static_cast<std::uint64_t>(cap + 1)));
    opt.seed = rng.next();
    opt.vmin = -2;
    opt.vmax = 0;
    Instance inst = generate_instance(opt);

    spec.notion = Notion::EfxC0;
    DecideResult mine = chores_efx0_orientation(inst);
    CHECK(mine.exists == oracle_exists(inst, spec).exists);
    if (mine.exists) CHECK(passes(inst, *mine.witness, Notion::EfxC0));

    spec.notion = Notion::EfxCMinus;
    DecideResult minus = chores_efxminus_orientation(inst);
    CHECK(minus.exists == oracle_exists(inst, spec).exists);
    if (minus.exists) CHECK(passes(inst, *minus.witness, Notion::EfxCMinus));
  }
}
