#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmod/functors.hpp"

using namespace gmod;

namespace {

Module line_free(long a) {  // free Z[x]-module, sections from degree a
  return free_module(line_r(), {{{a}}});
}

GT single(long d, FGAbelianGroup g) { return GT{{d, std::move(g)}}; }

}  // namespace

TEST_CASE("point table plumbing") {
  GT a = single(1, free_group(2));
  a[3] = cyclic_group(Int(4));
  CHECK(gt_twist(a, 2).count(3) == 1);
  CHECK(bt_pull(a, 2).count(2) == 1);
  CHECK(bt_pull(a, 2).count(6) == 1);
  CHECK(bt_push(bt_pull(a, 3), 3) == a);
  GT b = bt_push(a, 3);
  CHECK(b.size() == 1);
  CHECK(b.at(1).torsion[0] == 4);

  Module m = gt_to_module(a);
  CHECK(module_to_gt(m, {-3, 6}) == a);
}

TEST_CASE("derived restriction to the origin") {
  // free module: only H^0 at its generator degree
  GC r = li_star(line_free(2), {-2, 6});
  CHECK(r.count(-1) == 0);
  CHECK(r.at(0) == single(2, free_group(1)));

  // torsion in the x-direction contributes H^-1: Z[x]/(x^2) with gens at 0
  Ring lr = line_r();
  Module m = free_module(lr, {{{0}}});
  m.rels.push_back({relem_var(lr, 0, 2)});
  m.rel_degs.push_back({{2}});
  GC t = li_star(m, {-2, 6});
  CHECK(t.at(0) == single(0, free_group(1)));
  CHECK(t.at(-1) == single(2, free_group(1)));
}

TEST_CASE("placement functor produces x-torsion modules") {
  Module m = wedge_right(1, single(0, free_group(1)), 2);
  Table t = piece_table(m, {-3, 4});
  REQUIRE(t.size() == 1);
  CHECK(t.at({{1}}).str() == "Z");

  Module tor = wedge_right(0, single(1, cyclic_group(Int(6))), 3);
  Table tt = piece_table(tor, {-3, 6});
  REQUIRE(tt.size() == 1);
  CHECK(tt.at({{3}}).str() == "Z/6");
}

TEST_CASE("projection of the structure sheaf") {
  GC r = wedge_left(0, line_free(0), 2, {-4, 6});
  CHECK(r.count(-1) == 0);
  CHECK(r.at(0) == single(0, free_group(1)));
}

TEST_CASE("composite projection-placement matches the twist formula") {
  // left(-j) after right(i) sends A to A(x)(L^((i-j)/l) + L^((i-j+1)/l)[-1])
  // with fractional powers read as zero.
  for (long l : {2L, 3L}) {
    for (long i = -2; i <= 2; ++i) {
      for (long j = -2; j <= 2; ++j) {
        GT a = single(1, direct_sum(free_group(1), cyclic_group(Int(4))));
        Module placed = wedge_right(i, a, l);
        GC got = wedge_left(-j, placed, l, {-4 * l, 4 * l});
        GC want;
        if ((i - j) % l == 0) want[0] = gt_twist(a, (i - j) / l);
        long s1 = i - j + 1;
        if (s1 % l == 0) want[-1] = gt_twist(a, s1 / l);
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("adjunction unit is an isomorphism on samples") {
  // right(i) has right adjoint left(-(i+1))[-1]; the unit puts A in H^-1.
  for (long l : {2L, 3L}) {
    for (long i = -1; i <= 2; ++i) {
      GT a = single(-1, cyclic_group(Int(2)));
      a[2] = free_group(1);
      GC u = wedge_left(-(i + 1), wedge_right(i, a, l), l, {-4 * l, 4 * l});
      REQUIRE(u.count(-1) == 1);
      CHECK(u.at(-1) == a);
      CHECK(u.count(0) == 0);
    }
  }
}

TEST_CASE("cover base change and pushforward") {
  // theta_push(O(-1)) = O(-1) for l = 2 (in the pushed grading)
  Module pushed = theta_push(line_free(1), 2, {-3, 4});
  CHECK(equal_tables(pushed, line_free(1), {-3, 4}));
  // theta_push(O) = O
  Module pushed0 = theta_push(line_free(0), 2, {-3, 4});
  CHECK(equal_tables(pushed0, line_free(0), {-3, 4}));
  // theta_pull multiplies degrees by l
  Module pulled = theta_pull(line_free(1), 3);
  Table t = piece_table(pulled, {0, 7});
  CHECK(t.count({{3}}) == 1);
  CHECK(t.count({{2}}) == 0);
  // pull-push projection: theta_push(theta_pull(M)) = M for flat samples
  Module roundtrip = theta_push(theta_pull(line_free(1), 2), 2, {-3, 4});
  CHECK(equal_tables(roundtrip, line_free(1), {-3, 4}));
}

TEST_CASE("cover counit cone matches the wedge decomposition") {
  long l = 2;
  for (long a : {0L, 1L, 2L, 3L}) {
    Module m = line_free(a);
    Map eps = theta_counit(m, l, {-4, 5});
    Complex cn = cone(eps);
    HTable got = homology_table(cn, {-3, 6});
    // expected: sum over i = 1..l-1 of right(i) applied to left(-i) of m
    HTable want;
    for (long i = 1; i < l; ++i) {
      GC parts = wedge_left(-i, m, l, {-8, 8});
      for (const auto& [k, tab] : parts) {
        Module placed = wedge_right(i, tab, l);
        for (const auto& [d, g] : piece_table(placed, {-3, 6})) {
          auto& slot = want[k][d];
          slot = direct_sum(slot, g);
        }
      }
    }
    CHECK(got == want);
  }
}

TEST_CASE("kernel transform along a free kernel") {
  // the free rank one kernel pushes to the structure sheaf transform
  Module k = free_module(hyper(2), {{{0, 0}}});
  ResolutionCert cert;
  Complex c = fm_transform(k, line_free(0), {-3, 4}, 6, &cert);
  CHECK(cert.terminated);
  HTable h = homology_table(c, {-3, 4});
  REQUIRE(h.count(0) == 1);
  CHECK(h.size() == 1);
  CHECK(h.at(0) == piece_table(line_free(0), {-3, 4}));
}
