#include "gmod/charts.hpp"

#include <stdexcept>

namespace gmod {

Module group_module(const Ring& r, const FGAbelianGroup& a, const Degree& d) {
  Module m;
  m.ring = r;
  Degree dd = reduce_degree(r, d);
  int ng = int(a.free_rank + a.torsion.size());
  for (int j = 0; j < ng; ++j) m.gens.push_back(dd);
  for (size_t k = 0; k < a.torsion.size(); ++k) {
    std::vector<RElem> col(ng);
    col[a.free_rank + k] = relem_const(r, a.torsion[k]);
    m.rel_degs.push_back(dd);
    m.rels.push_back(col);
  }
  validate(m);
  return m;
}

Module chart_theta_pull(const FGAbelianGroup& a, long l, long n) {
  Ring r = chart(l, n);
  return group_module(r, a, zero_degree(r));
}

FGAbelianGroup chart_theta_push(const Module& m) {
  if (m.ring.kind != RingKind::Chart)
    throw std::invalid_argument("chart_theta_push: expects a chart module");
  return degree_piece(m, zero_degree(m.ring));
}

Module chart_div_line(long i, long l, long n) {
  Ring r = chart_div(l, n);
  return free_module(r, {reduce_degree(r, Degree{{i}})});
}

FGAbelianGroup chart_gerbe_push(const Module& m) {
  if (m.ring.kind != RingKind::ChartDiv)
    throw std::invalid_argument("chart_gerbe_push: expects a divisor gerbe module");
  return degree_piece(m, zero_degree(m.ring));
}

Module chart_wedge_right(long i, const FGAbelianGroup& a, long l, long n) {
  Ring r = chart(l, n);
  Module m = group_module(r, a, Degree{{i}});
  Degree up = reduce_degree(r, Degree{{i + 1}});
  for (int j = 0; j < m.ngens(); ++j) {
    std::vector<RElem> col(m.ngens());
    col[j] = relem_var(r, 0);
    m.rel_degs.push_back(up);
    m.rels.push_back(col);
  }
  validate(m);
  return m;
}

std::map<int, FGAbelianGroup> chart_wedge_left(long i, const Module& m) {
  if (m.ring.kind != RingKind::Chart)
    throw std::invalid_argument("chart_wedge_left: expects a chart module");
  const Ring& r = m.ring;
  Degree dc = reduce_degree(r, Degree{{-i}});
  Degree dp = reduce_degree(r, Degree{{-i - 1}});
  PieceBasis pb = piece_basis(m, dc), ppb = piece_basis(m, dp);
  IntMat rb = relations_at(m, dc, pb);
  IntMat rp = relations_at(m, dp, ppb);
  IntMat au = action_matrix(m, relem_var(r, 0), ppb, pb, dc);
  std::map<int, FGAbelianGroup> out;
  FGAbelianGroup h0 = cokernel(au.hcat(rb));
  if (!h0.is_trivial()) out[0] = h0;
  FGAbelianGroup h1 = subquotient(au, rb, IntMat(ppb.size(), 0), rp);
  if (!h1.is_trivial()) out[-1] = h1;
  return out;
}

}  // namespace gmod
