#include "gmod/functors.hpp"

#include <sstream>
#include <stdexcept>

namespace gmod {

GT gt_twist(const GT& a, long i) {
  GT out;
  for (const auto& [d, g] : a) out[d + i] = g;
  return out;
}

GT bt_pull(const GT& a, long l) {
  GT out;
  for (const auto& [d, g] : a) out[d * l] = g;
  return out;
}

GT bt_push(const GT& a, long l) {
  GT out;
  for (const auto& [d, g] : a)
    if (d % l == 0) out[d / l] = g;
  return out;
}

bool gt_equal(const GT& a, const GT& b) { return a == b; }

std::string gt_str(const GT& a) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, g] : a) {
    if (!first) os << ", ";
    os << d << ":" << g.str();
    first = false;
  }
  return first ? "empty" : os.str();
}

std::string gc_str(const GC& a) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, t] : a) {
    if (!first) os << "; ";
    os << "H^" << k << "{" << gt_str(t) << "}";
    first = false;
  }
  return first ? "zero" : os.str();
}

Module gt_to_module(const GT& a) {
  Ring r = point_g();
  Module m;
  m.ring = r;
  for (const auto& [d, g] : a) {
    for (long i = 0; i < g.free_rank; ++i) m.gens.push_back({{d}});
    for (size_t i = 0; i < g.torsion.size(); ++i) m.gens.push_back({{d}});
  }
  // second pass for torsion relations (columns need the final length)
  int gi = 0;
  for (const auto& [d, g] : a) {
    gi += int(g.free_rank);
    for (const Int& t : g.torsion) {
      std::vector<RElem> col(m.gens.size());
      col[gi] = relem_const(r, t);
      m.rels.push_back(col);
      m.rel_degs.push_back({{d}});
      ++gi;
    }
  }
  return m;
}

GT module_to_gt(const Module& m, const Window& w) {
  GT out;
  for (const Degree& d : window_degrees(m.ring, w)) {
    FGAbelianGroup g = degree_piece(m, d);
    if (!g.is_trivial()) out[d.c[0]] = g;
  }
  return out;
}

Table gt_to_table(const GT& a) {
  Table t;
  for (const auto& [d, g] : a) t[Degree{{d}}] = g;
  return t;
}

HTable gc_to_htable(const GC& a) {
  HTable out;
  for (const auto& [k, t] : a)
    if (!t.empty()) out[k] = gt_to_table(t);
  return out;
}

GC li_star(const Module& m, const Window& w) {
  if (m.ring.kind != RingKind::LineR)
    throw std::invalid_argument("li_star: expects a Z[x]-module");
  GC out;
  RElem x = relem_var(m.ring, 0);
  for (long d = w.lo; d <= w.hi; ++d) {
    Degree dc{{d}}, dp{{d - 1}};
    PieceBasis pb = piece_basis(m, dc), ppb = piece_basis(m, dp);
    IntMat rb = relations_at(m, dc, pb);
    IntMat rp = relations_at(m, dp, ppb);
    IntMat ax = action_matrix(m, x, ppb, pb, dc);
    FGAbelianGroup h0 = cokernel(ax.hcat(rb));
    if (!h0.is_trivial()) out[0][d] = h0;
    FGAbelianGroup h1 = subquotient(ax, rb, IntMat(ppb.size(), 0), rp);
    if (!h1.is_trivial()) out[-1][d] = h1;
  }
  return out;
}

Module wedge_right(long i, const GT& a, long l) {
  Ring r = line_r();
  GT placed = gt_twist(bt_pull(a, l), i);
  Module m;
  m.ring = r;
  std::vector<std::pair<long, Int>> torsion_of;  // per generator: 0 for free
  for (const auto& [d, g] : placed) {
    for (long k = 0; k < g.free_rank; ++k) {
      m.gens.push_back({{d}});
      torsion_of.emplace_back(d, 0);
    }
    for (const Int& t : g.torsion) {
      m.gens.push_back({{d}});
      torsion_of.emplace_back(d, t);
    }
  }
  for (int gi = 0; gi < m.ngens(); ++gi) {
    auto [d, t] = torsion_of[gi];
    if (t != 0) {
      std::vector<RElem> col(m.gens.size());
      col[gi] = relem_const(r, t);
      m.rels.push_back(col);
      m.rel_degs.push_back({{d}});
    }
    std::vector<RElem> col(m.gens.size());
    col[gi] = relem_var(r, 0);
    m.rels.push_back(col);
    m.rel_degs.push_back({{d + 1}});
  }
  return m;
}

GC wedge_left(long i, const Module& m, long l, const Window& w) {
  GC rest = li_star(m, w);
  GC out;
  for (const auto& [k, t] : rest) {
    GT pushed = bt_push(gt_twist(t, i), l);
    if (!pushed.empty()) out[k] = pushed;
  }
  return out;
}

Module theta_pull(const Module& m, long l) {
  if (m.ring.kind != RingKind::LineR)
    throw std::invalid_argument("theta_pull: expects a Z[x]-module");
  Module out;
  out.ring = m.ring;
  for (const Degree& g : m.gens) out.gens.push_back({{g.c[0] * l}});
  for (int k = 0; k < m.nrels(); ++k) {
    std::vector<RElem> col;
    for (const RElem& e : m.rels[k]) {
      RElem sub;
      for (const auto& [mo, c] : e) sub[Monomial{{mo.e[0] * l}}] = c;
      col.push_back(sub);
    }
    out.rels.push_back(col);
    out.rel_degs.push_back({{m.rel_degs[k].c[0] * l}});
  }
  return out;
}

namespace {

// Windowed presentation of a Z[x]-module given its pieces on consecutive
// levels and the matrices of the degree-raising action: one generator per
// piece-basis element, the piece relations, and columns x g - (action of g).
struct LevelData {
  long lo = 0;
  std::vector<IntMat> rel;  // per level
  std::vector<IntMat> act;  // act[k]: level lo+k -> level lo+k+1
};

Module module_from_levels(const LevelData& ld) {
  Ring r = line_r();
  Module m;
  m.ring = r;
  std::vector<int> off;
  for (size_t k = 0; k < ld.rel.size(); ++k) {
    off.push_back(m.ngens());
    for (int j = 0; j < ld.rel[k].rows(); ++j)
      m.gens.push_back({{ld.lo + long(k)}});
  }
  for (size_t k = 0; k < ld.rel.size(); ++k) {
    long deg = ld.lo + long(k);
    for (int c = 0; c < ld.rel[k].cols(); ++c) {
      std::vector<RElem> col(m.gens.size());
      bool nonzero = false;
      for (int j = 0; j < ld.rel[k].rows(); ++j) {
        col[off[k] + j] = relem_const(r, ld.rel[k].at(j, c));
        nonzero |= ld.rel[k].at(j, c) != 0;
      }
      if (!nonzero) continue;
      m.rels.push_back(col);
      m.rel_degs.push_back({{deg}});
    }
    if (k + 1 < ld.rel.size()) {
      for (int j = 0; j < ld.rel[k].rows(); ++j) {
        std::vector<RElem> col(m.gens.size());
        col[off[k] + j] = relem_var(r, 0);
        for (int i = 0; i < ld.rel[k + 1].rows(); ++i)
          col[off[k + 1] + i] = relem_const(r, -ld.act[k].at(i, j));
        m.rels.push_back(col);
        m.rel_degs.push_back({{deg + 1}});
      }
    }
  }
  return m;
}

}  // namespace

Module theta_push(const Module& m, long l, const Window& w) {
  RElem xl = relem_var(m.ring, 0, l);
  LevelData ld;
  ld.lo = w.lo;
  std::vector<PieceBasis> pbs;
  for (long e = w.lo; e <= w.hi + 1; ++e)
    pbs.push_back(piece_basis(m, {{e * l}}));
  for (long e = w.lo; e <= w.hi + 1; ++e) {
    size_t k = size_t(e - w.lo);
    ld.rel.push_back(relations_at(m, {{e * l}}, pbs[k]));
    if (e <= w.hi)
      ld.act.push_back(
          action_matrix(m, xl, pbs[k], pbs[k + 1], {{(e + 1) * l}}));
  }
  return module_from_levels(ld);
}

Map theta_counit(const Module& m, long l, const Window& w) {
  Module push = theta_push(m, l, w);
  Module src = theta_pull(push, l);
  // Generators of the pulled-back pushforward correspond to piece-basis
  // elements of m at degrees l e; evaluate each to its element of m.
  std::vector<std::vector<RElem>> mat;
  for (long e = w.lo; e <= w.hi + 1; ++e) {
    PieceBasis pb = piece_basis(m, {{e * l}});
    for (const auto& [g, mo] : pb.elems) {
      std::vector<RElem> row(m.ngens());
      row[g] = relem(m.ring, mo, 1);
      mat.push_back(row);
    }
  }
  return make_map(std::move(src), m, {{0}}, std::move(mat));
}

Module alpha1_pull(const Module& m, long l) {
  if (m.ring.kind != RingKind::LineR)
    throw std::invalid_argument("alpha1_pull: expects a Z[x]-module");
  Ring h = hyper(l);
  Module out;
  out.ring = h;
  for (const Degree& g : m.gens) out.gens.push_back({{g.c[0], 0}});
  for (int k = 0; k < m.nrels(); ++k) {
    std::vector<RElem> col;
    for (const RElem& e : m.rels[k]) {
      RElem sub;
      for (const auto& [mo, c] : e) sub[Monomial{{mo.e[0], 0}}] = c;
      col.push_back(sub);
    }
    out.rels.push_back(col);
    out.rel_degs.push_back({{m.rel_degs[k].c[0], 0}});
  }
  return out;
}

namespace {

Degree diag_degree(const Ring& h, long d) { return reduce_degree(h, {{d, d}}); }

}  // namespace

Module alpha2_push(const Module& m, const Window& w) {
  if (m.ring.kind != RingKind::Hyper)
    throw std::invalid_argument("alpha2_push: expects a hypersurface module");
  const Ring& h = m.ring;
  RElem y = relem_var(h, 1);
  LevelData ld;
  ld.lo = w.lo;
  std::vector<PieceBasis> pbs;
  for (long d = w.lo; d <= w.hi + 1; ++d)
    pbs.push_back(piece_basis(m, diag_degree(h, d)));
  for (long d = w.lo; d <= w.hi + 1; ++d) {
    size_t k = size_t(d - w.lo);
    ld.rel.push_back(relations_at(m, diag_degree(h, d), pbs[k]));
    if (d <= w.hi)
      ld.act.push_back(
          action_matrix(m, y, pbs[k], pbs[k + 1], diag_degree(h, d + 1)));
  }
  return module_from_levels(ld);
}

Map alpha2_push_map(const Map& f, const Window& w) {
  if (!(f.shift == zero_degree(f.src.ring)))
    throw std::invalid_argument("alpha2_push_map: degree shift must be zero");
  Module src = alpha2_push(f.src, w);
  Module dst = alpha2_push(f.dst, w);
  const Ring& h = f.src.ring;
  Ring r = line_r();
  std::vector<std::vector<RElem>> mat(src.ngens(),
                                      std::vector<RElem>(dst.ngens()));
  int soff = 0, doff = 0;
  for (long d = w.lo; d <= w.hi + 1; ++d) {
    PieceBasis spb = piece_basis(f.src, diag_degree(h, d));
    PieceBasis dpb = piece_basis(f.dst, diag_degree(h, d));
    IntMat blk = map_matrix_at(f, diag_degree(h, d), spb, dpb);
    for (int j = 0; j < spb.size(); ++j)
      for (int i = 0; i < dpb.size(); ++i)
        mat[soff + j][doff + i] = relem_const(r, blk.at(i, j));
    soff += spb.size();
    doff += dpb.size();
  }
  return make_map(std::move(src), std::move(dst), {{0}}, std::move(mat));
}

Complex fm_transform(const Module& k, const Module& m, const Window& w,
                     int max_depth, ResolutionCert* cert) {
  if (k.ring.kind != RingKind::Hyper)
    throw std::invalid_argument("fm_transform: kernel must be a hypersurface module");
  Module a = alpha1_pull(m, k.ring.l);
  // The resolution must be exact wherever tensoring against `a` can reach
  // inside the output window, so widen by the generator span of `a`.
  long amin = 0, amax = 0;
  for (const Degree& g : a.gens) {
    amin = std::min(amin, g.c[0]);
    amax = std::max(amax, g.c[0]);
  }
  Window wres{w.lo - amax - 1, w.hi + 1 - amin};
  Resolution res = free_resolution(k, wres, max_depth);
  if (cert) *cert = res.cert;
  Complex out;
  for (size_t i = 0; i < res.f.size(); ++i)
    out.term[-int(i)] = alpha2_push(tensor(res.f[i], a), w);
  for (size_t i = 0; i < res.d.size(); ++i)
    out.diff[-int(i) - 1] = alpha2_push_map(tensor_map(res.d[i], a), w);
  return out;
}

ComplexMap fm_transform_map(const Map& f, const Module& m, const Window& w,
                            int max_depth) {
  if (f.src.ring.kind != RingKind::Hyper)
    throw std::invalid_argument("fm_transform_map: kernels must be hypersurface modules");
  Module a = alpha1_pull(m, f.src.ring.l);
  long amin = 0, amax = 0;
  for (const Degree& g : a.gens) {
    amin = std::min(amin, g.c[0]);
    amax = std::max(amax, g.c[0]);
  }
  Window wres{w.lo - amax - 1, w.hi + 1 - amin};
  Resolution rs = free_resolution(f.src, wres, max_depth);
  Resolution rd = free_resolution(f.dst, wres, max_depth);
  std::vector<Map> lift = lift_to_resolutions(f, rs, rd);
  ComplexMap out;
  auto build = [&](const Resolution& r, Complex& c) {
    for (size_t i = 0; i < r.f.size(); ++i)
      c.term[-int(i)] = alpha2_push(tensor(r.f[i], a), w);
    for (size_t i = 0; i < r.d.size(); ++i)
      c.diff[-int(i) - 1] = alpha2_push_map(tensor_map(r.d[i], a), w);
  };
  build(rs, out.src);
  build(rd, out.dst);
  size_t n = std::min(lift.size(), rd.f.size());
  for (size_t i = 0; i < n; ++i)
    out.comp[-int(i)] = alpha2_push_map(tensor_map(lift[i], a), w);
  return out;
}

}  // namespace gmod
