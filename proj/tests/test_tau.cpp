#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmod/tau.hpp"

using namespace gmod;

namespace {

const Window W{-4, 8};
const Window INNER{-2, 6};

// expected table of the cover translate: rank one at (a, j) for a >= m
Table cover_table(long l, long m) {
  Ring h = hyper(l);
  Table t;
  for (long a = INNER.lo; a <= INNER.hi; ++a)
    for (long j = 0; j < l; ++j)
      if (a >= m) t[reduce_degree(h, {{a, j}})] = free_group(1);
  return t;
}

// expected table of the ideal power: rank one at (a, j) with a >= n and the
// underlying ring piece nonzero (a >= j)
Table ideal_table(long l, long n) {
  Ring h = hyper(l);
  Table t;
  for (long a = INNER.lo; a <= INNER.hi; ++a)
    for (long j = 0; j < l; ++j)
      if (a >= n && a >= j) t[reduce_degree(h, {{a, j}})] = free_group(1);
  return t;
}

}  // namespace

TEST_CASE("cover translate tables") {
  for (long l : {2L, 3L})
    for (long m = 0; m < l; ++m)
      CHECK(piece_table(cover_power_module(l, m), INNER) == cover_table(l, m));
}

TEST_CASE("ideal power tables") {
  for (long l : {2L, 3L})
    for (long n = 0; n < l; ++n)
      CHECK(piece_table(ideal_power_module(l, n, W), INNER) == ideal_table(l, n));
}

TEST_CASE("diagonal embedding is injective") {
  for (long l : {2L, 3L})
    for (long m = 0; m < l; ++m)
      CHECK(is_injective(delta_map(l, m, W), INNER));
}

TEST_CASE("diagonal embedding is an isomorphism at the top ideal power") {
  // at m = l-1 the embedding identifies the ideal power with the cover
  for (long l : {2L, 3L}) {
    Map d = delta_map(l, l - 1, W);
    CHECK(is_injective(d, INNER));
    CHECK(is_surjective(d, INNER));
  }
}

TEST_CASE("interpolation kernel boundary identifications") {
  for (long l : {2L, 3L}) {
    for (long n = 0; n < l; ++n) {
      CHECK(piece_table(tau_module(l, n, n, W), INNER) == cover_table(l, n));
      CHECK(piece_table(tau_module(l, n, l - 1, W), INNER) == ideal_table(l, n));
    }
  }
}

TEST_CASE("interpolation kernel example at l=2") {
  // tau(0,1) for l=2 is the full fiber product: the free rank-one module
  Module t = tau_module(2, 0, 1, W);
  CHECK(piece_table(t, INNER) ==
        piece_table(free_module(hyper(2), {{{0, 0}}}), INNER));
  // its low pieces are Z at (0,0), (1,0), (1,1) as in the rank-one table
  CHECK(degree_piece(t, {{0, 0}}).str() == "Z");
  CHECK(degree_piece(t, {{0, 1}}).is_trivial());
  CHECK(degree_piece(t, {{1, 0}}).str() == "Z");
  CHECK(degree_piece(t, {{1, 1}}).str() == "Z");
}

TEST_CASE("cover-direction steps inject with skyscraper cokernels") {
  for (long l : {2L, 3L}) {
    for (long m = 1; m < l; ++m) {
      for (long n = 0; n <= m - 1; ++n) {
        Map f = tau_step_t(l, n, m, W);
        CHECK(is_injective(f, INNER));
        Module cok = quotient_by_image(f);
        CHECK(piece_table(cok, INNER) == tau_step_t_coker(l, m));
      }
    }
  }
}

TEST_CASE("ideal-direction steps inject with skyscraper cokernels") {
  for (long l : {2L, 3L}) {
    for (long m = 1; m < l; ++m) {
      for (long n = 0; n + 1 <= m; ++n) {
        Map f = tau_step_i(l, n, m, W);
        CHECK(is_injective(f, INNER));
        Module cok = quotient_by_image(f);
        CHECK(piece_table(cok, INNER) == tau_step_i_coker(l, n));
      }
    }
  }
}

TEST_CASE("diagonal kernels act as twists under the transform") {
  // tau(n,n) transforms M into M twisted up by n
  for (long l : {2L, 3L}) {
    for (long n = 0; n < l; ++n) {
      Module k = tau_module(l, n, n, W);
      Module m = free_module(line_r(), {{{-1}}});
      Complex c = fm_transform(k, m, {-3, 5}, 2 * 8 / l + 4);
      HTable h = homology_table(c, {-3, 5});
      REQUIRE(h.count(0) == 1);
      CHECK(h.size() == 1);
      CHECK(h.at(0) == piece_table(twist(m, {{n}}), {-3, 5}));
    }
  }
}
