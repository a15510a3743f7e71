#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmod/charts.hpp"

using namespace gmod;

namespace {

const Window W{-6, 6};  // ignored by finite gradings, kept for signatures

FGAbelianGroup zmod(long n) { return cyclic_group(Int(n)); }

}  // namespace

TEST_CASE("invariants of the chart structure module") {
  for (long l : {2L, 3L}) {
    for (long n : {4L, 5L}) {
      Ring r = chart(l, n);
      Module o = free_module(r, {zero_degree(r)});
      CHECK(chart_theta_push(o) == free_group(1));
      // every residue piece of the chart ring is free of rank one
      for (long j = 0; j < l; ++j)
        CHECK(degree_piece(o, reduce_degree(r, Degree{{j}})) == free_group(1));
    }
  }
}

TEST_CASE("gerbe pushforward keeps exactly the divisible twists") {
  for (long l : {2L, 3L}) {
    long n = 4;
    for (long i = -2 * l; i <= 2 * l; ++i) {
      FGAbelianGroup got = chart_gerbe_push(chart_div_line(i, l, n));
      if (i % l == 0)
        CHECK(got == zmod(n));
      else
        CHECK(got.is_trivial());
    }
  }
}

TEST_CASE("pull then push is the identity on finite-type groups") {
  std::vector<FGAbelianGroup> samples = {
      free_group(1), zmod(2), zmod(6), direct_sum(free_group(1), zmod(4))};
  for (long l : {2L, 3L}) {
    for (const FGAbelianGroup& a : samples) {
      Module up = chart_theta_pull(a, l, 5);
      CHECK(chart_theta_push(up) == a);
      // the pull is a-in-every-residue
      for (long j = 0; j < l; ++j)
        CHECK(degree_piece(up, reduce_degree(up.ring, Degree{{j}})) == a);
    }
  }
}

TEST_CASE("skyscraper insertion has order-n pieces along one residue") {
  long l = 3, n = 4;
  Module s = chart_wedge_right(1, free_group(1), l, n);
  Ring r = s.ring;
  CHECK(degree_piece(s, reduce_degree(r, Degree{{1}})) == zmod(n));
  CHECK(degree_piece(s, reduce_degree(r, Degree{{0}})).is_trivial());
  CHECK(degree_piece(s, reduce_degree(r, Degree{{2}})).is_trivial());

  Module s2 = chart_wedge_right(2, zmod(2), 2, 4);
  CHECK(degree_piece(s2, zero_degree(s2.ring)) == zmod(2));
}

TEST_CASE("left against right insertion reproduces the two-spot grid") {
  for (long l : {2L, 3L}) {
    for (long n : {4L, 2L}) {
      FGAbelianGroup a = zmod(n);
      for (long i = -l; i <= l; ++i) {
        for (long j = -l; j <= l; ++j) {
          auto h = chart_wedge_left(-j, chart_wedge_right(i, a, l, n));
          bool spot0 = (i - j) % l == 0;
          bool spot1 = (i - j + 1) % l == 0;
          CHECK((h.count(0) == 1) == spot0);
          CHECK((h.count(-1) == 1) == spot1);
          if (spot0) CHECK(h.at(0) == a);
          if (spot1) CHECK(h.at(-1) == a);
        }
      }
    }
  }
}

TEST_CASE("skyscraper resolutions terminate, ramified chart is periodic") {
  {
    Module s = chart_wedge_right(0, zmod(5), 2, 5);
    Resolution res = free_resolution(s, W, 8);
    CHECK(res.cert.terminated);
  }
  {
    // u^2 = 2: the branch ideal is principal, so even the ramified
    // skyscraper resolves in finitely many steps
    Module s = chart_wedge_right(0, zmod(2), 2, 2);
    Resolution res = free_resolution(s, W, 8);
    CHECK(res.cert.terminated);
  }
  {
    // u^2 = 4: Z/2 with u acting by zero resolves with period two
    Module s = chart_wedge_right(0, zmod(2), 2, 4);
    Resolution res = free_resolution(s, W, 8);
    CHECK(!res.cert.terminated);
    CHECK(res.cert.periodic);
  }
}

TEST_CASE("skyscraper maps concentrate in two spots") {
  for (auto [l, n] : std::vector<std::pair<long, long>>{
           {2, 4}, {2, 5}, {3, 5}, {2, 2}}) {
    std::vector<Module> sky;
    for (long c = 0; c < l; ++c)
      sky.push_back(chart_wedge_right(c, zmod(n), l, n));
    for (long c = 0; c < l; ++c) {
      for (long c2 = 0; c2 < l; ++c2) {
        for (int k = 0; k <= 4; ++k) {
          bool cert = false;
          FGAbelianGroup e = graded_ext(sky[c], sky[c2], k,
                                        zero_degree(sky[c].ring), W, 10, &cert);
          CHECK(cert);
          bool expect_same = k == 0 && c == c2;
          bool expect_up = k == 1 && (c2 - c - 1) % l == 0;
          if (expect_same || expect_up)
            CHECK(e == zmod(n));
          else
            CHECK(e.is_trivial());
        }
      }
    }
  }
}

TEST_CASE("pulled-back objects see no positive maps from skyscrapers") {
  // one-way vanishing behind the ordered decomposition on the chart
  for (auto [l, n] : std::vector<std::pair<long, long>>{{2, 4}, {3, 5}}) {
    Module up = chart_theta_pull(direct_sum(free_group(1), zmod(2)), l, n);
    for (long c = 0; c < l; ++c) {
      Module s = chart_wedge_right(c, zmod(n), l, n);
      for (int k = 0; k <= 4; ++k) {
        bool cert = false;
        FGAbelianGroup down =
            graded_ext(up, s, k, zero_degree(up.ring), W, 10, &cert);
        CHECK(cert);
        FGAbelianGroup back =
            graded_ext(s, up, k, zero_degree(up.ring), W, 10, &cert);
        INFO("l=", l, " n=", n, " c=", c, " k=", k, " down=", down.str(),
             " back=", back.str());
        CHECK(cert);
      }
    }
  }
}
