#include "gmod/tau.hpp"

#include <stdexcept>

namespace gmod {

namespace {

void check_range(long l, long n, long m) {
  if (!(0 <= n && n <= m && m <= l - 1))
    throw std::invalid_argument("tau indices need 0 <= n <= m <= l-1");
}

// x^(m-b) y^b as a monomial element.
RElem ideal_gen_monomial(const Ring& h, long m, long b) {
  return relem(h, Monomial{{m - b, b}}, 1);
}

}  // namespace

Module ideal_power_module(long l, long n, const Window& w) {
  Ring h = hyper(l);
  Module free1 = free_module(h, {{{0, 0}}});
  Module src = free_module(h, [&] {
    std::vector<Degree> gens;
    for (long b = 0; b <= n; ++b) gens.push_back(reduce_degree(h, {{n, b}}));
    return gens;
  }());
  std::vector<std::vector<RElem>> mat;
  for (long b = 0; b <= n; ++b) mat.push_back({ideal_gen_monomial(h, n, b)});
  Map incl = make_map(src, free1, {{0, 0}}, mat);
  return submodule_presentation(incl, w).module;
}

Module cover_power_module(long l, long m) {
  Ring h = hyper(l);
  Module t;
  t.ring = h;
  for (long j = 0; j < l; ++j) t.gens.push_back(reduce_degree(h, {{m, j}}));
  for (long j = 0; j < l; ++j) {
    std::vector<RElem> col(t.gens.size());
    col[j] = relem_var(h, 1);                              // y g_j
    long jn = (j + 1) % l;
    col[jn] = add(col[jn], scale(relem_var(h, 0), -1));    // - x g_(j+1)
    t.rels.push_back(col);
    t.rel_degs.push_back(reduce_degree(h, {{m + 1, j + 1}}));
  }
  return t;
}

Map delta_map(long l, long m, const Window& w) {
  Ring h = hyper(l);
  Module src = ideal_power_module(l, m, w);
  Module dst = cover_power_module(l, m);
  std::vector<std::vector<RElem>> mat;
  for (long b = 0; b <= m; ++b) {
    std::vector<RElem> row(dst.ngens());
    row[b % l] = relem_const(h, 1);
    mat.push_back(row);
  }
  return make_map(std::move(src), std::move(dst), {{0, 0}}, std::move(mat));
}

Map ideal_inclusion(long l, long n, long m, const Window& w) {
  if (n > m) throw std::invalid_argument("ideal_inclusion: needs n <= m");
  Ring h = hyper(l);
  Module src = ideal_power_module(l, m, w);
  Module dst = ideal_power_module(l, n, w);
  std::vector<std::vector<RElem>> mat;
  for (long b = 0; b <= m; ++b) {
    std::vector<RElem> row(dst.ngens());
    if (b <= n)
      row[b] = relem(h, Monomial{{m - n, 0}}, 1);          // x^(m-n) G_b
    else
      row[n] = relem(h, Monomial{{m - b, b - n}}, 1);      // x^(m-b) y^(b-n) G_n
    mat.push_back(row);
  }
  return make_map(std::move(src), std::move(dst), {{0, 0}}, std::move(mat));
}

Module tau_module(long l, long n, long m, const Window& w) {
  check_range(l, n, m);
  Map dl = delta_map(l, m, w);
  Map inc = ideal_inclusion(l, n, m, w);
  SumResult s = direct_sum({dl.dst, inc.dst});
  std::vector<std::vector<RElem>> mat;
  for (int b = 0; b < dl.src.ngens(); ++b) {
    std::vector<RElem> row(s.sum.ngens());
    for (int i = 0; i < dl.dst.ngens(); ++i) row[i] = dl.mat[b][i];
    for (int i = 0; i < inc.dst.ngens(); ++i)
      row[dl.dst.ngens() + i] = scale(inc.mat[b][i], -1);
    mat.push_back(row);
  }
  Map anti = make_map(dl.src, s.sum, {{0, 0}}, std::move(mat));
  return quotient_by_image(anti);
}

namespace {

// tau presentations share their generator layout: l cover generators first,
// then n+1 ideal generators. Build a map between two tau modules from the
// componentwise blocks.
Map tau_map(Module src, Module dst, long l, long src_n, long dst_n,
            const std::vector<std::vector<RElem>>& cover_blk,
            const std::vector<std::vector<RElem>>& ideal_blk) {
  std::vector<std::vector<RElem>> mat;
  for (long j = 0; j < l; ++j) {
    std::vector<RElem> row(dst.ngens());
    for (long i = 0; i < l; ++i) row[i] = cover_blk[j][i];
    mat.push_back(row);
  }
  for (long b = 0; b <= src_n; ++b) {
    std::vector<RElem> row(dst.ngens());
    for (long c = 0; c <= dst_n; ++c) row[l + c] = ideal_blk[b][c];
    mat.push_back(row);
  }
  Degree z = zero_degree(src.ring);
  return make_map(std::move(src), std::move(dst), z, std::move(mat));
}

}  // namespace

Map tau_step_t(long l, long n, long m, const Window& w) {
  check_range(l, n, m);
  if (m < 1 || n > m - 1)
    throw std::invalid_argument("tau_step_t: needs n <= m-1");
  Ring h = hyper(l);
  Module src = tau_module(l, n, m, w);
  Module dst = tau_module(l, n, m - 1, w);
  // cover part: g^m_j = x g^(m-1)_j; ideal part: identity
  std::vector<std::vector<RElem>> cb(l, std::vector<RElem>(l));
  for (long j = 0; j < l; ++j) cb[j][j] = relem_var(h, 0);
  std::vector<std::vector<RElem>> ib(n + 1, std::vector<RElem>(n + 1));
  for (long b = 0; b <= n; ++b) ib[b][b] = relem_const(h, 1);
  return tau_map(std::move(src), std::move(dst), l, n, n, cb, ib);
}

Map tau_step_i(long l, long n, long m, const Window& w) {
  check_range(l, n + 1, m);
  Ring h = hyper(l);
  Module src = tau_module(l, n + 1, m, w);
  Module dst = tau_module(l, n, m, w);
  std::vector<std::vector<RElem>> cb(l, std::vector<RElem>(l));
  for (long j = 0; j < l; ++j) cb[j][j] = relem_const(h, 1);
  // ideal part: inclusion (x,y)^(n+1) into (x,y)^n on generators
  std::vector<std::vector<RElem>> ib(n + 2, std::vector<RElem>(n + 1));
  for (long b = 0; b <= n + 1; ++b) {
    if (b <= n)
      ib[b][b] = relem(h, Monomial{{1, 0}}, 1);
    else
      ib[b][n] = relem(h, Monomial{{0, 1}}, 1);
  }
  return tau_map(std::move(src), std::move(dst), l, n + 1, n, cb, ib);
}

Table tau_step_t_coker(long l, long m) {
  Ring h = hyper(l);
  Table t;
  for (long j = m; j <= l - 1; ++j)
    t[reduce_degree(h, {{m - 1, j}})] = free_group(1);
  return t;
}

Table tau_step_i_coker(long l, long n) {
  Ring h = hyper(l);
  Table t;
  for (long i = 0; i <= n; ++i)
    t[reduce_degree(h, {{n, i}})] = free_group(1);
  return t;
}

}  // namespace gmod
