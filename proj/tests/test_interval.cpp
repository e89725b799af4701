#include <doctest.h>

#include <algorithm>
#include <random>

#include "mdx/interval.hpp"
#include "mdx/rational.hpp"

using namespace mdx;
using RI = BasicInterval<Rational>;

namespace {

Rational r(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

// Pointwise oracle: every endpoint and every midpoint between consecutive
// endpoints decides membership of its whole elementary cell.
void check_pointwise(const RI& base, const std::vector<RI>& removed) {
  const auto out = subtract_intervals(base, removed);
  std::vector<Rational> points{base.lo, base.hi};
  for (const auto& x : removed) {
    points.push_back(x.lo);
    points.push_back(x.hi);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Rational> probes = points;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) probes.push_back((points[i] + points[i + 1]) / 2);
  probes.push_back(points.front() - 1);
  probes.push_back(points.back() + 1);
  for (const auto& x : probes) {
    bool expected = base.contains(x);
    for (const auto& rem : removed) expected = expected && !rem.contains(x);
    const bool got = std::any_of(out.begin(), out.end(), [&](const RI& piece) { return piece.contains(x); });
    CHECK_MESSAGE(expected == got, "probe ", to_string(x));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    CHECK_FALSE(out[i].empty());
    if (i + 1 < out.size()) CHECK(out[i].hi <= out[i + 1].lo);
  }
}

}  // namespace

TEST_CASE("open base minus closed pieces") {
  // (3/10, 7/10) - [1/2, 13/20] - [3/10, 11/20] = (13/20, 7/10)
  const auto out = subtract_intervals(RI::open(r(3, 10), r(7, 10)),
                                      {RI::closed(r(1, 2), r(13, 20)), RI::closed(r(3, 10), r(11, 20))});
  REQUIRE(out.size() == 1);
  CHECK(out[0] == RI::open(r(13, 20), r(7, 10)));
}

TEST_CASE("a gap between two removed pieces") {
  const auto out = subtract_intervals(RI::open(r(0), r(10)), {RI::closed(r(1), r(3)), RI::closed(r(5), r(9))});
  REQUIRE(out.size() == 3);
  CHECK(out[0] == RI{r(0), r(1), false, false});
  CHECK(out[1] == RI{r(3), r(5), false, false});
  CHECK(out[2] == RI{r(9), r(10), false, false});
}

TEST_CASE("touching closed pieces cover an open base") {
  const auto out = subtract_intervals(RI::open(r(1), r(4)), {RI::closed(r(0), r(2)), RI::closed(r(2), r(5))});
  CHECK(out.empty());
}

TEST_CASE("a single point survives between open removals") {
  const auto out = subtract_intervals(RI::closed(r(0), r(2)), {RI::open(r(-1), r(1)), RI::open(r(1), r(3))});
  REQUIRE(out.size() == 1);
  CHECK(out[0] == RI::closed(r(1), r(1)));
}

TEST_CASE("empty base and empty removals") {
  CHECK(subtract_intervals(RI::open(r(1), r(1)), {}).empty());
  CHECK(subtract_intervals(RI::open(r(2), r(1)), {}).empty());
  const auto all = subtract_intervals(RI::open(r(0), r(1)), {RI::closed(r(3), r(2))});
  REQUIRE(all.size() == 1);
  CHECK(all[0] == RI::open(r(0), r(1)));
}

TEST_CASE("integer intervals") {
  using II = BasicInterval<std::int64_t>;
  CHECK(subtract_intervals(II::open(30, 70), {II::closed(30, 70)}).empty());
  CHECK(subtract_intervals(II::open(30, 70), {II::closed(30, 69)}).size() == 1);
}

TEST_CASE("random subtraction agrees with pointwise membership") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coord(-4, 12);
  for (int t = 0; t < 2000; ++t) {
    auto random_interval = [&] {
      RI x{r(coord(rng), 2), r(coord(rng), 2), static_cast<bool>(rng() % 2), static_cast<bool>(rng() % 2)};
      if (rng() % 4 != 0 && x.hi < x.lo) std::swap(x.lo, x.hi);
      return x;
    };
    const RI base = random_interval();
    std::vector<RI> removed;
    const int k = static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i) removed.push_back(random_interval());
    check_pointwise(base, removed);
  }
}
