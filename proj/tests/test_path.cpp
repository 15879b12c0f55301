#include "bbperc/path.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bbp;

namespace {

Path path_of(std::initializer_list<Point> pts) {
  Path p;
  for (const Point& v : pts) p.v.push_back(v);
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("path");

TEST_CASE("record levels are running maxima of the last coordinate") {
  auto h1 = record_levels(
      path_of({Point::of({0, 0}), Point::of({1, 1}), Point::of({2, 0})}));
  CHECK(h1 == std::vector<int64_t>{0, 1, 1});

  auto h2 = record_levels(path_of({Point::of({0, 0}), Point::of({1, 1}),
                                   Point::of({0, 2}), Point::of({1, 3})}));
  CHECK(h2 == std::vector<int64_t>{0, 1, 2, 3});

  // The oriented zig-zag used to climb the lattice axis.
  auto h3 = record_levels(
      path_of({Point::of({0, 0}), Point::of({-1, 1}), Point::of({0, 2}),
               Point::of({-1, 3}), Point::of({0, 4})}));
  CHECK(h3 == std::vector<int64_t>{0, 1, 2, 3, 4});

  CHECK_THROWS_AS(record_levels(Path{}), std::invalid_argument);
}

TEST_CASE("validator on hand-built paths") {
  const Region h2 = Region::half_space(2);

  CHECK(validate_path(beta_const(0),
                      path_of({Point::of({0, 0}), Point::of({1, 1}),
                               Point::of({0, 2})}),
                      h2)
            .valid);

  const auto dip = validate_path(
      beta_const(0),
      path_of({Point::of({0, 0}), Point::of({1, 1}), Point::of({2, 0})}), h2);
  CHECK_FALSE(dip.valid);
  CHECK(dip.index == 2);
  CHECK(dip.clause == PathCheck::Clause::Backbend);

  // One-level retreats are fine for a 1-backbend path.
  CHECK(validate_path(beta_const(1),
                      path_of({Point::of({0, 0}), Point::of({1, 1}),
                               Point::of({2, 0}), Point::of({3, 1}),
                               Point::of({4, 2})}),
                      h2)
            .valid);

  CHECK_THROWS_AS(validate_path(beta_const(0), Path{}, h2),
                  std::invalid_argument);
}

TEST_CASE("validator reports the failing clause") {
  const Region h2 = Region::half_space(2);

  const auto dup = validate_path(
      beta_unoriented(),
      path_of({Point::of({0, 0}), Point::of({1, 1}), Point::of({0, 0})}), h2);
  CHECK_FALSE(dup.valid);
  CHECK(dup.clause == PathCheck::Clause::Distinct);
  CHECK(dup.index == 2);

  const auto jump = validate_path(
      beta_unoriented(),
      path_of({Point::of({0, 0}), Point::of({2, 2})}), h2);
  CHECK(jump.clause == PathCheck::Clause::Adjacency);

  const auto outside = validate_path(
      beta_unoriented(),
      path_of({Point::of({0, 0}), Point::of({1, -1})}), h2);
  CHECK(outside.clause == PathCheck::Clause::Region);
  CHECK(outside.index == 1);

  // Start below level 0 is rejected even in the full space.
  const auto low = validate_path(beta_unoriented(),
                                 path_of({Point::of({0, -2})}),
                                 Region::full_space(2));
  CHECK(low.clause == PathCheck::Clause::StartLevel);
}

TEST_CASE("oriented spec accepts exactly the strictly-rising paths") {
  bbt::Rng rng(31);
  const Region region = Region::half_space(3);
  for (int it = 0; it < 1000; ++it) {
    Point start = bbt::random_vertex(rng, 3, 4);
    start.x[2] = std::abs(start.x[2]);
    const Path p = bbt::random_sa_path(rng, region, start,
                                       bbt::rand_int(rng, 0, 10));
    bool rising = true;
    for (size_t i = 1; i < p.v.size(); ++i)
      rising = rising && p.v[i].level() == p.v[i - 1].level() + 1;
    CHECK(validate_path(beta_const(0), p, region).valid == rising);
  }
}

TEST_CASE("unoriented spec accepts every admissible path") {
  bbt::Rng rng(32);
  const Region region = Region::half_space(2);
  for (int it = 0; it < 1000; ++it) {
    Point start = bbt::random_vertex(rng, 2, 5);
    start.x[1] = std::abs(start.x[1]);
    const Path p = bbt::random_sa_path(rng, region, start,
                                       bbt::rand_int(rng, 0, 14));
    CHECK(validate_path(beta_unoriented(), p, region).valid);
  }
}

TEST_CASE("validator agrees with the direct transcription of the definition") {
  bbt::Rng rng(33);
  for (int it = 0; it < 2000; ++it) {
    const int d = bbt::rand_int(rng, 2, 4);
    const Region region = Region::half_space(d);
    const BetaSeq s = bbt::random_beta(rng);
    Point start = bbt::random_vertex(rng, d, 3);
    start.x[d - 1] = std::abs(start.x[d - 1]);
    const Path p = bbt::random_sa_path(rng, region, start,
                                       bbt::rand_int(rng, 0, 12));
    CHECK(validate_path(s, p, region).valid ==
          bbt::path_valid_by_definition(s, p, region));
  }
}

TEST_CASE("pointwise domination implies acceptance inclusion") {
  bbt::Rng rng(34);
  const Region region = Region::half_space(2);
  int accepted = 0;
  for (int it = 0; it < 2000; ++it) {
    BetaSeq lo = bbt::random_beta(rng, false, 4);
    BetaSeq hi = lo;
    for (auto& v : hi.prefix) v += bbt::rand_int(rng, 0, 3);
    for (auto& v : hi.tail) v += bbt::rand_int(rng, 0, 3);
    REQUIRE(lo.dominated_by(hi));

    Point start = bbt::random_vertex(rng, 2, 4);
    start.x[1] = std::abs(start.x[1]);
    const Path p = bbt::random_sa_path(rng, region, start,
                                       bbt::rand_int(rng, 1, 12));
    if (validate_path(lo, p, region).valid) {
      ++accepted;
      CHECK(validate_path(hi, p, region).valid);
    }
  }
  CHECK(accepted > 100);  // the property was actually exercised
}

TEST_CASE("oriented prefix concatenation") {
  const Region h2 = Region::half_space(2);

  // Oriented prefix up to level 4, oriented suffix onward.
  const Path pre = path_of({Point::of({0, 0}), Point::of({1, 1}),
                            Point::of({0, 2}), Point::of({1, 3}),
                            Point::of({0, 4})});
  const Path suf = path_of({Point::of({0, 4}), Point::of({1, 5}),
                            Point::of({0, 6})});
  CHECK(concatenation_preserves(beta_const(0), pre, suf, h2));

  CHECK_THROWS_AS(concatenation_preserves(
                      beta_const(0), pre,
                      path_of({Point::of({2, 4}), Point::of({3, 5})}), h2),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      concatenation_preserves(
          beta_const(0),
          path_of({Point::of({0, 0}), Point::of({1, 1}), Point::of({2, 0})}),
          path_of({Point::of({2, 0}), Point::of({3, 1})}), h2),
      std::invalid_argument);
}

TEST_CASE("monotone floor makes concatenation safe") {
  bbt::Rng rng(35);
  const Region region = Region::half_space(2);
  const BetaSeq spec = beta_const(2);
  int exercised = 0;
  for (int it = 0; it < 2000; ++it) {
    const int rise = bbt::rand_int(rng, 1, 6);
    Path pre;
    Point cur = Point::of({0, 0});
    pre.v.push_back(cur);
    for (int i = 0; i < rise; ++i) {
      cur = add(cur, Point::of({bbt::rand_int(rng, 0, 1) ? 1 : -1, 1}));
      pre.v.push_back(cur);
    }
    const Path suf =
        bbt::random_sa_path(rng, region, cur, bbt::rand_int(rng, 0, 12));
    if (!validate_path(spec, suf, region).valid) continue;
    ++exercised;
    CHECK(concatenation_preserves(spec, pre, suf, region));
  }
  CHECK(exercised > 200);
}

TEST_CASE("non-monotone floors can break concatenation") {
  // beta = 0,5,0,5,...: the suffix is valid on its own (record 5, floor 0)
  // but the splice reaches record 4 where the floor snaps back to 4.
  const Region h2 = Region::half_space(2);
  const BetaSeq spec = beta_cyclic({0, 5});
  REQUIRE_FALSE(spec.monotone_floor());

  const Path pre = path_of({Point::of({0, 0}), Point::of({1, 1}),
                            Point::of({0, 2}), Point::of({1, 3}),
                            Point::of({0, 4})});
  const Path suf = path_of({Point::of({0, 4}), Point::of({1, 5}),
                            Point::of({2, 4}), Point::of({1, 3}),
                            Point::of({2, 2}), Point::of({3, 3}),
                            Point::of({4, 4}), Point::of({5, 3})});
  REQUIRE(validate_path(spec, suf, h2).valid);
  CHECK_FALSE(concatenation_preserves(spec, pre, suf, h2));
}

TEST_SUITE_END();
