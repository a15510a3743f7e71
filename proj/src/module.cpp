#include "gmod/module.hpp"

#include <sstream>
#include <stdexcept>

namespace gmod {

Module free_module(const Ring& r, const std::vector<Degree>& gens) {
  Module m;
  m.ring = r;
  for (const Degree& d : gens) m.gens.push_back(reduce_degree(r, d));
  return m;
}

void validate(const Module& m) {
  if (m.rels.size() != m.rel_degs.size())
    throw std::invalid_argument("module: relation count mismatch");
  for (const Degree& g : m.gens)
    if (int(g.c.size()) != m.ring.grank())
      throw std::invalid_argument("module: generator degree rank");
  for (size_t k = 0; k < m.rels.size(); ++k) {
    if (int(m.rels[k].size()) != m.ngens())
      throw std::invalid_argument("module: relation column length");
    for (int j = 0; j < m.ngens(); ++j) {
      Degree d;
      if (!is_homogeneous(m.ring, m.rels[k][j], &d))
        throw std::invalid_argument("module: inhomogeneous relation entry");
      if (!m.rels[k][j].empty() &&
          add_degree(m.ring, d, m.gens[j]) != reduce_degree(m.ring, m.rel_degs[k]))
        throw std::invalid_argument("module: relation entry degree mismatch");
    }
  }
}

int PieceBasis::index_of(int gen, const Monomial& m) const {
  auto it = idx.find({gen, m});
  return it == idx.end() ? -1 : it->second;
}

PieceBasis piece_basis(const Module& m, const Degree& d0) {
  Degree d = reduce_degree(m.ring, d0);
  PieceBasis pb;
  for (int j = 0; j < m.ngens(); ++j) {
    for (const Monomial& mo : monomial_basis(m.ring, sub_degree(m.ring, d, m.gens[j]))) {
      pb.idx[{j, mo}] = pb.size();
      pb.elems.emplace_back(j, mo);
    }
  }
  return pb;
}

std::vector<Int> expand_column(const Module& m, const std::vector<RElem>& col,
                               const Degree& d, const PieceBasis& pb) {
  std::vector<Int> out(pb.size());
  for (int j = 0; j < int(col.size()); ++j) {
    for (const auto& [mo, c] : col[j]) {
      int ix = pb.index_of(j, mo);
      if (ix < 0)
        throw std::invalid_argument("expand_column: entry outside degree " + d.str());
      out[ix] += c;
    }
  }
  return out;
}

IntMat relations_at(const Module& m, const Degree& d0, const PieceBasis& pb) {
  Degree d = reduce_degree(m.ring, d0);
  std::vector<std::vector<Int>> cols;
  for (int k = 0; k < m.nrels(); ++k) {
    for (const Monomial& mo :
         monomial_basis(m.ring, sub_degree(m.ring, d, m.rel_degs[k]))) {
      RElem mu = relem(m.ring, mo, 1);
      std::vector<RElem> col(m.ngens());
      for (int j = 0; j < m.ngens(); ++j)
        col[j] = multiply(m.ring, mu, m.rels[k][j]);
      cols.push_back(expand_column(m, col, d, pb));
    }
  }
  IntMat out = from_columns(pb.size(), cols);
  Int ch = m.ring.characteristic();
  if (ch != 0) {
    IntMat chm(pb.size(), pb.size());
    for (int i = 0; i < pb.size(); ++i) chm.at(i, i) = ch;
    out = out.hcat(chm);
  }
  return out;
}

FGAbelianGroup degree_piece(const Module& m, const Degree& d) {
  PieceBasis pb = piece_basis(m, d);
  return cokernel(relations_at(m, d, pb));
}

std::vector<Degree> window_degrees(const Ring& r, const Window& w) {
  std::vector<Degree> out;
  switch (r.grank()) {
    case 0:
      out.push_back(Degree{{}});
      break;
    case 1:
      if (r.has_free_coord()) {
        for (long d = w.lo; d <= w.hi; ++d) out.push_back(Degree{{d}});
      } else {
        for (long j = 0; j < r.moduli()[0]; ++j) out.push_back(Degree{{j}});
      }
      break;
    case 2:
      for (long d = w.lo; d <= w.hi; ++d)
        for (long j = 0; j < r.moduli()[1]; ++j) out.push_back(Degree{{d, j}});
      break;
  }
  return out;
}

Table piece_table(const Module& m, const Window& w) {
  Table t;
  for (const Degree& d : window_degrees(m.ring, w)) {
    FGAbelianGroup g = degree_piece(m, d);
    if (!g.is_trivial()) t[d] = g;
  }
  return t;
}

std::string table_str(const Ring& r, const Table& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, g] : t) {
    if (!first) os << ", ";
    os << d.str() << ":" << g.str();
    first = false;
  }
  return first ? "empty" : os.str();
}

IntMat map_matrix_at(const Map& f, const Degree& d, const PieceBasis& src_pb,
                     const PieceBasis& dst_pb) {
  Degree dd = add_degree(f.src.ring, reduce_degree(f.src.ring, d), f.shift);
  (void)dd;
  std::vector<std::vector<Int>> cols;
  for (const auto& [j, mo] : src_pb.elems) {
    RElem mu = relem(f.src.ring, mo, 1);
    std::vector<RElem> col(f.dst.ngens());
    for (int i = 0; i < f.dst.ngens(); ++i)
      col[i] = multiply(f.src.ring, mu, f.mat[j][i]);
    cols.push_back(expand_column(f.dst, col,
                                 add_degree(f.src.ring, d, f.shift), dst_pb));
  }
  return from_columns(dst_pb.size(), cols);
}

Map make_map(Module src, Module dst, Degree shift,
             std::vector<std::vector<RElem>> mat) {
  Map f;
  f.src = std::move(src);
  f.dst = std::move(dst);
  f.shift = reduce_degree(f.src.ring, std::move(shift));
  f.mat = std::move(mat);
  const Ring& r = f.src.ring;
  if (!(r == f.dst.ring)) throw std::invalid_argument("map: ring mismatch");
  if (int(f.mat.size()) != f.src.ngens())
    throw std::invalid_argument("map: matrix row count");
  for (int j = 0; j < f.src.ngens(); ++j) {
    if (int(f.mat[j].size()) != f.dst.ngens())
      throw std::invalid_argument("map: matrix column count");
    for (int i = 0; i < f.dst.ngens(); ++i) {
      Degree d;
      if (!is_homogeneous(r, f.mat[j][i], &d))
        throw std::invalid_argument("map: inhomogeneous entry");
      if (!f.mat[j][i].empty() &&
          add_degree(r, d, f.dst.gens[i]) !=
              add_degree(r, f.src.gens[j], f.shift))
        throw std::invalid_argument("map: entry degree mismatch");
    }
  }
  // Well-definedness: the image of each source relation must lie in the
  // target's relation submodule.
  for (int k = 0; k < f.src.nrels(); ++k) {
    std::vector<RElem> img(f.dst.ngens());
    for (int i = 0; i < f.dst.ngens(); ++i)
      for (int j = 0; j < f.src.ngens(); ++j)
        img[i] = add(img[i], multiply(r, f.src.rels[k][j], f.mat[j][i]));
    Degree d = add_degree(r, f.src.rel_degs[k], f.shift);
    PieceBasis pb = piece_basis(f.dst, d);
    std::vector<Int> v = expand_column(f.dst, img, d, pb);
    if (!in_column_lattice(relations_at(f.dst, d, pb), v))
      throw std::invalid_argument("map: relation " + std::to_string(k) +
                                  " not respected");
  }
  return f;
}

Map zero_map(Module src, Module dst, Degree shift) {
  std::vector<std::vector<RElem>> mat(src.ngens(),
                                      std::vector<RElem>(dst.ngens()));
  return make_map(std::move(src), std::move(dst), std::move(shift),
                  std::move(mat));
}

Map identity_map(const Module& m) {
  std::vector<std::vector<RElem>> mat(m.ngens(),
                                      std::vector<RElem>(m.ngens()));
  for (int j = 0; j < m.ngens(); ++j) mat[j][j] = relem_const(m.ring, 1);
  return make_map(m, m, zero_degree(m.ring), std::move(mat));
}

Map compose(const Map& g, const Map& f) {
  if (!(f.dst.ring == g.src.ring))
    throw std::invalid_argument("compose: ring mismatch");
  const Ring& r = f.src.ring;
  std::vector<std::vector<RElem>> mat(f.src.ngens(),
                                      std::vector<RElem>(g.dst.ngens()));
  for (int j = 0; j < f.src.ngens(); ++j)
    for (int i = 0; i < g.dst.ngens(); ++i)
      for (int k = 0; k < f.dst.ngens(); ++k)
        mat[j][i] = add(mat[j][i], multiply(r, f.mat[j][k], g.mat[k][i]));
  return make_map(f.src, g.dst, add_degree(r, f.shift, g.shift), std::move(mat));
}

bool is_zero_map(const Map& f) {
  for (int j = 0; j < f.src.ngens(); ++j) {
    Degree d = add_degree(f.src.ring, f.src.gens[j], f.shift);
    PieceBasis pb = piece_basis(f.dst, d);
    std::vector<Int> v = expand_column(f.dst, f.mat[j], d, pb);
    if (!in_column_lattice(relations_at(f.dst, d, pb), v)) return false;
  }
  return true;
}

bool is_injective(const Map& f, const Window& w) {
  for (const Degree& d : window_degrees(f.src.ring, w)) {
    PieceBasis spb = piece_basis(f.src, d);
    if (spb.size() == 0) continue;
    Degree dd = add_degree(f.src.ring, d, f.shift);
    PieceBasis dpb = piece_basis(f.dst, dd);
    IntMat beta = map_matrix_at(f, d, spb, dpb);
    IntMat rc = relations_at(f.dst, dd, dpb);
    IntMat rb = relations_at(f.src, d, spb);
    FGAbelianGroup ker = subquotient(beta, rc, IntMat(spb.size(), 0), rb);
    if (!ker.is_trivial()) return false;
  }
  return true;
}

bool is_surjective(const Map& f, const Window& w) {
  for (const Degree& d : window_degrees(f.src.ring, w)) {
    PieceBasis spb = piece_basis(f.src, d);
    Degree dd = add_degree(f.src.ring, d, f.shift);
    PieceBasis dpb = piece_basis(f.dst, dd);
    IntMat beta = map_matrix_at(f, d, spb, dpb);
    if (!cokernel(beta.hcat(relations_at(f.dst, dd, dpb))).is_trivial())
      return false;
  }
  return true;
}

bool equal_tables(const Module& a, const Module& b, const Window& w) {
  return piece_table(a, w) == piece_table(b, w);
}

Module twist(const Module& m, const Degree& a) {
  Module out = m;
  for (Degree& g : out.gens) g = add_degree(m.ring, g, a);
  for (Degree& d : out.rel_degs) d = add_degree(m.ring, d, a);
  return out;
}

Map twist(const Map& f, const Degree& a) {
  Map out = f;
  out.src = twist(f.src, a);
  out.dst = twist(f.dst, a);
  return out;
}

Module tensor(const Module& a, const Module& b) {
  if (!(a.ring == b.ring)) throw std::invalid_argument("tensor: ring mismatch");
  const Ring& r = a.ring;
  Module out;
  out.ring = r;
  for (int i = 0; i < a.ngens(); ++i)
    for (int j = 0; j < b.ngens(); ++j)
      out.gens.push_back(add_degree(r, a.gens[i], b.gens[j]));
  auto pos = [&](int i, int j) { return i * b.ngens() + j; };
  for (int k = 0; k < a.nrels(); ++k)
    for (int j = 0; j < b.ngens(); ++j) {
      std::vector<RElem> col(out.ngens());
      for (int i = 0; i < a.ngens(); ++i) col[pos(i, j)] = a.rels[k][i];
      out.rels.push_back(std::move(col));
      out.rel_degs.push_back(add_degree(r, a.rel_degs[k], b.gens[j]));
    }
  for (int k = 0; k < b.nrels(); ++k)
    for (int i = 0; i < a.ngens(); ++i) {
      std::vector<RElem> col(out.ngens());
      for (int j = 0; j < b.ngens(); ++j) col[pos(i, j)] = b.rels[k][j];
      out.rels.push_back(std::move(col));
      out.rel_degs.push_back(add_degree(r, b.rel_degs[k], a.gens[i]));
    }
  return out;
}

Map tensor_map(const Map& f, const Module& n) {
  Module src = tensor(f.src, n);
  Module dst = tensor(f.dst, n);
  std::vector<std::vector<RElem>> mat(src.ngens(),
                                      std::vector<RElem>(dst.ngens()));
  for (int j = 0; j < f.src.ngens(); ++j)
    for (int h = 0; h < n.ngens(); ++h)
      for (int i = 0; i < f.dst.ngens(); ++i)
        mat[j * n.ngens() + h][i * n.ngens() + h] = f.mat[j][i];
  return make_map(std::move(src), std::move(dst), f.shift, std::move(mat));
}

SumResult direct_sum(const std::vector<Module>& parts) {
  SumResult res;
  if (parts.empty()) throw std::invalid_argument("direct_sum: empty");
  const Ring& r = parts[0].ring;
  res.sum.ring = r;
  std::vector<int> offs;
  for (const Module& p : parts) {
    offs.push_back(res.sum.ngens());
    for (const Degree& g : p.gens) res.sum.gens.push_back(g);
  }
  for (size_t pi = 0; pi < parts.size(); ++pi) {
    const Module& p = parts[pi];
    for (int k = 0; k < p.nrels(); ++k) {
      std::vector<RElem> col(res.sum.gens.size());
      for (int j = 0; j < p.ngens(); ++j) col[offs[pi] + j] = p.rels[k][j];
      res.sum.rels.push_back(std::move(col));
      res.sum.rel_degs.push_back(p.rel_degs[k]);
    }
  }
  for (size_t pi = 0; pi < parts.size(); ++pi) {
    const Module& p = parts[pi];
    std::vector<std::vector<RElem>> mat(p.ngens(),
                                        std::vector<RElem>(res.sum.ngens()));
    for (int j = 0; j < p.ngens(); ++j)
      mat[j][offs[pi] + j] = relem_const(r, 1);
    res.inject.push_back(make_map(p, res.sum, zero_degree(r), std::move(mat)));
  }
  return res;
}

Map direct_sum_map(const std::vector<Map>& fs) {
  if (fs.empty()) throw std::invalid_argument("direct_sum_map: empty");
  std::vector<Module> srcs, dsts;
  for (const Map& f : fs) {
    srcs.push_back(f.src);
    dsts.push_back(f.dst);
    if (!(f.shift == fs[0].shift))
      throw std::invalid_argument("direct_sum_map: shift mismatch");
  }
  Module src = direct_sum(srcs).sum, dst = direct_sum(dsts).sum;
  std::vector<std::vector<RElem>> mat(src.ngens(),
                                      std::vector<RElem>(dst.ngens()));
  int so = 0, to = 0;
  for (const Map& f : fs) {
    for (int j = 0; j < f.src.ngens(); ++j)
      for (int i = 0; i < f.dst.ngens(); ++i) mat[so + j][to + i] = f.mat[j][i];
    so += f.src.ngens();
    to += f.dst.ngens();
  }
  return make_map(std::move(src), std::move(dst), fs[0].shift, std::move(mat));
}

Module quotient_by_image(const Map& f) {
  Module out = f.dst;
  for (int j = 0; j < f.src.ngens(); ++j) {
    out.rels.push_back(f.mat[j]);
    out.rel_degs.push_back(
        add_degree(f.src.ring, f.src.gens[j], f.shift));
  }
  return out;
}

IntMat action_matrix(const Module& n, const RElem& r, const PieceBasis& from,
                     const PieceBasis& to, const Degree& to_deg) {
  std::vector<std::vector<Int>> cols;
  for (const auto& [h, mo] : from.elems) {
    std::vector<RElem> col(n.ngens());
    col[h] = multiply(n.ring, relem(n.ring, mo, 1), r);
    cols.push_back(expand_column(n, col, to_deg, to));
  }
  return from_columns(to.size(), cols);
}

FGAbelianGroup hom_group(const Module& m, const Module& n, const Degree& shift0) {
  const Ring& r = m.ring;
  Degree shift = reduce_degree(r, shift0);
  // A degree-preserving map m -> n(shift) is a tuple of target elements
  // v_j in n_(g_j + shift), modulo target relations, subject to every source
  // relation mapping into the target relation submodule.
  std::vector<PieceBasis> bpb(m.ngens()), cpb(m.nrels());
  std::vector<IntMat> brel, crel;
  std::vector<Degree> bdeg(m.ngens()), cdeg(m.nrels());
  int bsize = 0, csize = 0;
  for (int j = 0; j < m.ngens(); ++j) {
    bdeg[j] = add_degree(r, m.gens[j], shift);
    bpb[j] = piece_basis(n, bdeg[j]);
    brel.push_back(relations_at(n, bdeg[j], bpb[j]));
    bsize += bpb[j].size();
  }
  for (int k = 0; k < m.nrels(); ++k) {
    cdeg[k] = add_degree(r, m.rel_degs[k], shift);
    cpb[k] = piece_basis(n, cdeg[k]);
    crel.push_back(relations_at(n, cdeg[k], cpb[k]));
    csize += cpb[k].size();
  }
  IntMat beta(csize, bsize);
  int co = 0;
  for (int k = 0; k < m.nrels(); ++k) {
    int bo = 0;
    for (int j = 0; j < m.ngens(); ++j) {
      IntMat blk = action_matrix(n, m.rels[k][j], bpb[j], cpb[k], cdeg[k]);
      for (int i = 0; i < blk.rows(); ++i)
        for (int jj = 0; jj < blk.cols(); ++jj)
          beta.at(co + i, bo + jj) = blk.at(i, jj);
      bo += bpb[j].size();
    }
    co += cpb[k].size();
  }
  return subquotient(beta, diag_join(crel), IntMat(bsize, 0), diag_join(brel));
}

namespace {

IntMat syzygy_span(const Module& src, const std::vector<Syzygy>& syz,
                   const Degree& d, const PieceBasis& pb) {
  const Ring& r = src.ring;
  std::vector<std::vector<Int>> cols;
  for (const Syzygy& s : syz) {
    for (const Monomial& mo : monomial_basis(r, sub_degree(r, d, s.deg))) {
      RElem mu = relem(r, mo, 1);
      std::vector<RElem> col(src.ngens());
      for (int j = 0; j < src.ngens(); ++j)
        col[j] = multiply(r, mu, s.col[j]);
      cols.push_back(expand_column(src, col, d, pb));
    }
  }
  IntMat out = from_columns(pb.size(), cols);
  Int ch = r.characteristic();
  if (ch != 0) {
    IntMat chm(pb.size(), pb.size());
    for (int i = 0; i < pb.size(); ++i) chm.at(i, i) = ch;
    out = out.hcat(chm);
  }
  return out;
}

}  // namespace

std::vector<Syzygy> syzygies(const Map& f, const Window& w) {
  if (f.src.nrels() != 0)
    throw std::invalid_argument("syzygies: source must be free");
  const Ring& r = f.src.ring;
  std::vector<Syzygy> syz;
  // Group window degrees by their free coordinate (all together for purely
  // finite gradings) and sweep each group to a fixed point: a syzygy in one
  // torsion slot can force one in another via unit-degree monomials.
  std::vector<std::vector<Degree>> groups;
  long cur = 0;
  bool have_cur = false;
  for (const Degree& d : window_degrees(r, w)) {
    if (r.has_free_coord()) {
      if (!have_cur || d.c[0] != cur) {
        groups.emplace_back();
        cur = d.c[0];
        have_cur = true;
      }
      groups.back().push_back(d);
    } else {
      if (groups.empty()) groups.emplace_back();
      groups[0].push_back(d);
    }
  }
  for (const auto& group : groups) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Degree& d : group) {
        PieceBasis spb = piece_basis(f.src, d);
        if (spb.size() == 0) continue;
        Degree dd = add_degree(r, d, f.shift);
        PieceBasis dpb = piece_basis(f.dst, dd);
        IntMat beta = map_matrix_at(f, d, spb, dpb);
        IntMat rc = relations_at(f.dst, dd, dpb);
        IntMat ker = kernel_basis(beta.hcat(rc)).top_rows(spb.size());
        IntMat kb = column_lattice_basis(ker);
        IntMat span = syzygy_span(f.src, syz, d, spb);
        for (int j = 0; j < kb.cols(); ++j) {
          std::vector<Int> v = kb.col_vec(j);
          if (in_column_lattice(span, v)) continue;
          Syzygy s;
          s.deg = d;
          s.col.resize(f.src.ngens());
          for (int i = 0; i < spb.size(); ++i) {
            auto [g, mo] = spb.elems[i];
            s.col[g] = add(s.col[g], relem(r, mo, v[i]));
          }
          syz.push_back(std::move(s));
          span = span.hcat(from_columns(spb.size(), {v}));
          changed = true;
        }
      }
    }
  }
  // Minimize: the sweep can adopt a vector that later turns out to be a
  // monomial multiple of a generator found in another torsion slot.
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (size_t s = 0; s < syz.size(); ++s) {
      std::vector<Syzygy> others;
      for (size_t t = 0; t < syz.size(); ++t)
        if (t != s) others.push_back(syz[t]);
      PieceBasis pb = piece_basis(f.src, syz[s].deg);
      IntMat span = syzygy_span(f.src, others, syz[s].deg, pb);
      if (in_column_lattice(span,
                            expand_column(f.src, syz[s].col, syz[s].deg, pb))) {
        syz.erase(syz.begin() + s);
        pruned = true;
        break;
      }
    }
  }
  return syz;
}

Presented submodule_presentation(const Map& f, const Window& w) {
  const Ring& r = f.src.ring;
  Map g = make_map(free_module(r, f.src.gens), f.dst, f.shift, f.mat);
  std::vector<Syzygy> syz = syzygies(g, w);
  Presented out;
  out.module.ring = r;
  for (const Degree& gd : f.src.gens)
    out.module.gens.push_back(add_degree(r, gd, f.shift));
  for (const Syzygy& s : syz) {
    out.module.rels.push_back(s.col);
    out.module.rel_degs.push_back(add_degree(r, s.deg, f.shift));
  }
  // Relations of degree <= window top are exhaustive by construction, so all
  // pieces inside the window are exact.
  out.complete = true;
  return out;
}

}  // namespace gmod
