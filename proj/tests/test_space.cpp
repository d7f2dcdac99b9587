#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hyperconv/enumerate.hpp"
#include "hyperconv/space.hpp"

using namespace hyperconv;

TEST_CASE("sierpinski space from opens") {
  FiniteSpace s = FiniteSpace::from_opens(2, {0u, 2u, 3u});
  CHECK(s.open_count() == 3);
  CHECK(s.leq(0, 1));   // every open containing 0 contains 1
  CHECK(!s.leq(1, 0));
  CHECK(s == FiniteSpace::sierpinski());
}

TEST_CASE("preorder with no relations gives the discrete space") {
  FiniteSpace s = FiniteSpace::from_preorder(3, {});
  CHECK(s.open_count() == 8);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(s.leq(x, y) == (x == y));
}

TEST_CASE("missing union is rejected, not repaired") {
  CHECK_THROWS_AS(FiniteSpace::from_opens(2, {0u, 1u, 2u}), Error);  // {0},{1} but no {0,1}... full missing
  try {
    FiniteSpace::from_opens(2, {0u, 1u, 2u});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotATopology);
  }
  // intersection escape
  CHECK_THROWS_AS(FiniteSpace::from_opens(3, {0u, 3u, 5u, 7u}), Error);
}

TEST_CASE("empty or full set missing") {
  CHECK_THROWS_AS(FiniteSpace::from_opens(2, {2u, 3u}), Error);
  CHECK_THROWS_AS(FiniteSpace::from_opens(2, {0u, 2u}), Error);
}

TEST_CASE("interior and closure") {
  FiniteSpace s = FiniteSpace::sierpinski();
  CHECK(s.interior(1u) == 0u);          // {0} has empty interior
  CHECK(s.interior(3u) == 3u);          // the whole space is open
  CHECK(s.closure(2u) == 3u);           // {1} is dense
  CHECK(s.closure(1u) == 1u);           // {0} is closed
  FiniteSpace d3 = FiniteSpace::discrete(3);
  CHECK(d3.interior(5u) == 5u);
  SUBCASE("interior is idempotent, monotone, under the identity") {
    for (const FiniteSpace& sp : enumerate_spaces(3, false)) {
      for (PointSet a = 0; a <= sp.all_points(); ++a) {
        PointSet i = sp.interior(a);
        CHECK(subset(i, a));
        CHECK(sp.interior(i) == i);
        CHECK(sp.is_open(i));
        CHECK((sp.interior(a) == a) == sp.is_open(a));
        for (PointSet b = 0; b <= sp.all_points(); ++b)
          if (subset(a, b)) CHECK(subset(sp.interior(a), sp.interior(b)));
      }
    }
  }
}

TEST_CASE("continuous maps between small spaces") {
  FiniteSpace sp = FiniteSpace::sierpinski();
  auto maps = continuous_maps(sp, sp);
  CHECK(maps.size() == 3);  // both constants and the identity; the swap fails
  bool has_swap = false;
  for (const auto& f : maps)
    if (f.table == std::vector<std::uint8_t>{1, 0}) has_swap = true;
  CHECK(!has_swap);
  CHECK(!is_continuous(sp, sp, {1, 0}));

  FiniteSpace pt = FiniteSpace::discrete(1);
  CHECK(continuous_maps(pt, sp).size() == 2);   // one per point of the target
  CHECK(continuous_maps(sp, pt).size() == 1);

  // C(X,$) matches the opens of X
  for (const FiniteSpace& x : enumerate_spaces(3, false)) {
    auto to_s = continuous_maps(x, sp);
    CHECK(to_s.size() == static_cast<size_t>(x.open_count()));
    for (const auto& f : to_s) CHECK(x.is_open(f.preimage(2u)));
  }
}

TEST_CASE("composition of continuous maps is continuous") {
  auto spaces = enumerate_spaces(2, false);
  auto spaces3 = enumerate_spaces(3, false);
  spaces.insert(spaces.end(), spaces3.begin(), spaces3.end());
  for (size_t i = 0; i < spaces.size(); i += 7) {
    for (size_t j = 0; j < spaces.size(); j += 5) {
      for (size_t k = 0; k < spaces.size(); k += 3) {
        auto fs = continuous_maps(spaces[i], spaces[j]);
        auto gs = continuous_maps(spaces[j], spaces[k]);
        for (size_t a = 0; a < fs.size(); a += 2)
          for (size_t b = 0; b < gs.size(); b += 2)
            CHECK(is_continuous(spaces[i], spaces[k], compose(gs[b], fs[a]).table));
      }
    }
  }
}

TEST_CASE("components") {
  CHECK(FiniteSpace::sierpinski().components().size() == 1);
  CHECK(FiniteSpace::discrete(4).components().size() == 4);
  FiniteSpace mixed = FiniteSpace::from_preorder(3, {{0, 1}});  // sierpinski plus a point
  CHECK(mixed.components().size() == 2);
  CHECK(mixed.saturation(1u) == 3u);
}

TEST_CASE("maps into a T1 space are constant on components") {
  for (const FiniteSpace& x : enumerate_spaces(4, false)) {
    FiniteSpace d2 = FiniteSpace::discrete(2);
    for (const auto& f : continuous_maps(x, d2)) {
      for (PointSet block : x.components()) {
        int first = -1;
        for_each_bit(block, [&](int p) {
          if (first < 0) first = f(p);
          CHECK(f(p) == first);
        });
      }
    }
  }
}

TEST_CASE("product spaces") {
  FiniteSpace sp = FiniteSpace::sierpinski();
  FiniteSpace p = product(sp, sp);
  CHECK(p.points() == 4);
  // specialization is the product order of the two-chain
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          CHECK(p.leq(x * 2 + y, a * 2 + b) == (sp.leq(x, a) && sp.leq(y, b)));
  // opens are exactly the unions of open boxes
  std::set<PointSet> boxes;
  for (PointSet u : sp.opens())
    for (PointSet v : sp.opens()) {
      PointSet box = 0;
      for_each_bit(u, [&](int x) { for_each_bit(v, [&](int y) { box |= PointSet{1} << (x * 2 + y); }); });
      boxes.insert(box);
    }
  std::set<PointSet> unions = {0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (PointSet a : std::vector<PointSet>(unions.begin(), unions.end()))
      for (PointSet b : boxes)
        if (unions.insert(a | b).second) grew = true;
  }
  CHECK(unions == std::set<PointSet>(p.opens().begin(), p.opens().end()));

  FiniteSpace pt = FiniteSpace::discrete(1);
  for (const FiniteSpace& x : enumerate_spaces(3, false))
    CHECK(product(x, pt).opens() == x.opens());
  CHECK(product(FiniteSpace::discrete(2), FiniteSpace::discrete(2)) == FiniteSpace::discrete(4));
}

TEST_CASE("separation profile") {
  SeparationProfile sp = FiniteSpace::sierpinski().separation_profile();
  CHECK(sp.t0);
  CHECK(!sp.t1);
  CHECK(sp.normal);
  SeparationProfile d = FiniteSpace::discrete(3).separation_profile();
  CHECK(d.t0);
  CHECK(d.t1);
  CHECK(d.normal);
  SeparationProfile ind = FiniteSpace::indiscrete(2).separation_profile();
  CHECK(!ind.t0);
  CHECK(!ind.t1);
  CHECK(ind.normal);
  CHECK(!FiniteSpace::sierpinski().regular());
  CHECK(FiniteSpace::indiscrete(2).regular());
  CHECK(FiniteSpace::discrete(3).regular());
}

TEST_CASE("alexandrov round trip") {
  for (const FiniteSpace& s : enumerate_spaces(4, false)) {
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < s.points(); ++x)
      for (int y = 0; y < s.points(); ++y)
        if (s.leq(x, y)) edges.emplace_back(x, y);
    CHECK(FiniteSpace::from_preorder(s.points(), edges) == s);
  }
}

TEST_CASE("space file round trip and validation") {
  FiniteSpace s = FiniteSpace::sierpinski();
  CHECK(space_from_json(space_to_json(s)) == s);
  CHECK(space_from_json("{\"points\":2,\"le\":[[0,1]]}") == s);
  CHECK_THROWS_AS(space_from_json("{\"points\":2,\"opens\":[[0,5]]}"), Error);
  CHECK_THROWS_AS(space_from_json("{\"points\":2,\"le\":[[0,7]]}"), Error);
  CHECK_THROWS_AS(space_from_json("not json"), Error);
  CHECK_THROWS_AS(space_from_json("{\"points\":2}"), Error);
}

TEST_CASE("enumeration counts match the labeled counts") {
  CHECK(enumerate_spaces(1, false).size() == 1);
  CHECK(enumerate_spaces(2, false).size() == 4);
  CHECK(enumerate_spaces(3, false).size() == 29);
  CHECK(enumerate_spaces(4, false).size() == 355);
  CHECK(enumerate_spaces(1, true).size() == 1);
  CHECK(enumerate_spaces(2, true).size() == 3);
  CHECK(enumerate_spaces(3, true).size() == 19);
  CHECK(enumerate_spaces(4, true).size() == 219);
  CHECK_THROWS_AS(enumerate_spaces(6, false), Error);
  CHECK_THROWS_AS(enumerate_spaces(0, false), Error);

  // independent oracle: families closed under union and intersection
  CHECK(count_topologies_by_families(3, false) == 29);
  CHECK(count_topologies_by_families(3, true) == 19);
  CHECK(count_topologies_by_families(4, true) == 219);

  // duplicate-free
  auto all = enumerate_spaces(4, false);
  std::set<std::vector<PointSet>> seen;
  for (const FiniteSpace& s : all) seen.insert(s.opens());
  CHECK(seen.size() == all.size());
}
