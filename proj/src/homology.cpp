#include "gmod/homology.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace gmod {

void validate(const Complex& c) {
  for (const auto& [k, f] : c.diff) {
    if (!c.term.count(k) || !c.term.count(k + 1))
      throw std::invalid_argument("complex: differential off the support");
    if (!(f.shift == zero_degree(f.src.ring)))
      throw std::invalid_argument("complex: differential must preserve degree");
    if (c.diff.count(k + 1) && !is_zero_map(compose(c.diff.at(k + 1), f)))
      throw std::invalid_argument("complex: d after d nonzero at " +
                                  std::to_string(k));
  }
}

Complex complex_of(const Module& m, int pos) {
  Complex c;
  c.term[pos] = m;
  return c;
}

Complex complex_of_map(const Map& f, int src_pos) {
  Complex c;
  c.term[src_pos] = f.src;
  c.term[src_pos + 1] = f.dst;
  c.diff[src_pos] = f;
  return c;
}

Complex shift_complex(const Complex& c, int by) {
  Complex out;
  for (const auto& [k, m] : c.term) out.term[k + by] = m;
  for (const auto& [k, f] : c.diff) out.diff[k + by] = f;
  return out;
}

FGAbelianGroup homology_at(const Complex& c, int k, const Degree& d) {
  auto it = c.term.find(k);
  if (it == c.term.end()) return {};
  const Module& mid = it->second;
  PieceBasis pb = piece_basis(mid, d);
  if (pb.size() == 0) return {};
  IntMat rb = relations_at(mid, d, pb);
  IntMat beta(0, pb.size()), rc(0, 0), alpha(pb.size(), 0);
  if (auto dn = c.diff.find(k); dn != c.diff.end()) {
    const Module& nxt = c.term.at(k + 1);
    PieceBasis npb = piece_basis(nxt, d);
    beta = map_matrix_at(dn->second, d, pb, npb);
    rc = relations_at(nxt, d, npb);
  }
  if (auto dp = c.diff.find(k - 1); dp != c.diff.end()) {
    const Module& prv = c.term.at(k - 1);
    PieceBasis ppb = piece_basis(prv, d);
    alpha = map_matrix_at(dp->second, d, ppb, pb);
  }
  return subquotient(beta, rc, alpha, rb);
}

HTable homology_table(const Complex& c, const Window& w) {
  HTable out;
  if (c.term.empty()) return out;
  const Ring& r = c.term.begin()->second.ring;
  for (const auto& [k, m] : c.term) {
    Table t;
    for (const Degree& d : window_degrees(r, w)) {
      FGAbelianGroup g = homology_at(c, k, d);
      if (!g.is_trivial()) t[d] = g;
    }
    if (!t.empty()) out[k] = t;
  }
  return out;
}

std::string htable_str(const Ring& r, const HTable& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, tab] : t) {
    if (!first) os << "; ";
    os << "H^" << k << "{" << table_str(r, tab) << "}";
    first = false;
  }
  return first ? "zero" : os.str();
}

Complex cone(const ComplexMap& f) {
  Complex out;
  std::set<int> spots;
  for (const auto& [k, m] : f.src.term) spots.insert(k - 1);
  for (const auto& [k, m] : f.dst.term) spots.insert(k);
  if (spots.empty()) return out;
  const Ring& r = (f.src.term.empty() ? f.dst.term.begin()->second
                                      : f.src.term.begin()->second)
                      .ring;
  Module zero = free_module(r, {});
  auto src_at = [&](int k) {
    auto it = f.src.term.find(k);
    return it == f.src.term.end() ? zero : it->second;
  };
  auto dst_at = [&](int k) {
    auto it = f.dst.term.find(k);
    return it == f.dst.term.end() ? zero : it->second;
  };
  for (int k : spots) out.term[k] = direct_sum({src_at(k + 1), dst_at(k)}).sum;
  for (int k : spots) {
    if (!spots.count(k + 1)) continue;
    const Module& a = src_at(k + 1);
    const Module& b = dst_at(k);
    const Module& a2 = src_at(k + 2);
    const Module& b2 = dst_at(k + 1);
    std::vector<std::vector<RElem>> mat(
        out.term[k].ngens(), std::vector<RElem>(out.term[k + 1].ngens()));
    // block [-d_src ; f]  on the src part, [0 ; d_dst] on the dst part
    auto put = [&](int row0, int col0, const Map& g, const Int& sgn) {
      for (int j = 0; j < g.src.ngens(); ++j)
        for (int i = 0; i < g.dst.ngens(); ++i)
          mat[row0 + j][col0 + i] = scale(g.mat[j][i], sgn);
    };
    if (auto it = f.src.diff.find(k + 1); it != f.src.diff.end())
      put(0, 0, it->second, Int(-1));
    if (auto it = f.comp.find(k + 1); it != f.comp.end())
      put(0, int(a2.ngens()), it->second, Int(1));
    if (auto it = f.dst.diff.find(k); it != f.dst.diff.end())
      put(int(a.ngens()), int(a2.ngens()), it->second, Int(1));
    (void)b;
    (void)b2;
    out.diff[k] = make_map(out.term[k], out.term[k + 1], zero_degree(r), mat);
  }
  validate(out);
  return out;
}

Complex cone(const Map& f) {
  ComplexMap cm;
  cm.src = complex_of(f.src);
  cm.dst = complex_of(f.dst);
  cm.comp[0] = f;
  return cone(cm);
}

namespace {

// Signature of a resolution layer, used for the finite-grading periodicity
// probe: generator degrees plus the differential columns rendered to text.
std::string layer_signature(const Module& f, const Map& d) {
  std::ostringstream os;
  for (const Degree& g : f.gens) os << g.str() << "|";
  os << "//";
  for (const auto& row : d.mat) {
    for (const RElem& e : row) os << relem_str(d.src.ring, e) << ",";
    os << ";";
  }
  return os.str();
}

}  // namespace

Resolution free_resolution(const Module& m, const Window& w0, int max_depth) {
  const Ring& r = m.ring;
  // The syzygy scan must reach every degree where the target carries
  // generators or relations, or termination could be claimed spuriously.
  Window w = w0;
  if (r.has_free_coord()) {
    for (const Degree& d : m.gens)
      w.lo = std::min(w.lo, d.c[0]), w.hi = std::max(w.hi, d.c[0] + 1);
    for (const Degree& d : m.rel_degs)
      w.lo = std::min(w.lo, d.c[0]), w.hi = std::max(w.hi, d.c[0] + 1);
  }
  Resolution res;
  res.target = m;
  res.f.push_back(free_module(r, m.gens));
  {
    std::vector<std::vector<RElem>> mat(m.ngens(),
                                        std::vector<RElem>(m.ngens()));
    for (int j = 0; j < m.ngens(); ++j) mat[j][j] = relem_const(r, 1);
    res.aug = make_map(res.f[0], m, zero_degree(r), mat);
  }
  Map cur = res.aug;
  std::vector<std::string> sigs;
  for (int depth = 0; depth < max_depth; ++depth) {
    std::vector<Syzygy> syz = syzygies(cur, w);
    if (syz.empty()) {
      res.cert.terminated = true;
      break;
    }
    Module next = res.f.back();
    Module fnew;
    fnew.ring = r;
    std::vector<std::vector<RElem>> mat;
    for (const Syzygy& s : syz) {
      fnew.gens.push_back(s.deg);
      mat.push_back(s.col);
    }
    Map d = make_map(fnew, res.f.back(), zero_degree(r), mat);
    res.f.push_back(fnew);
    res.d.push_back(d);
    sigs.push_back(layer_signature(fnew, d));
    cur = d;
  }
  res.cert.depth = int(res.d.size());
  res.cert.window_complete = true;
  if (!res.cert.terminated && sigs.size() >= 4) {
    size_t n = sigs.size();
    res.cert.periodic = sigs[n - 1] == sigs[n - 3] && sigs[n - 2] == sigs[n - 4];
  }
  return res;
}

std::vector<Map> lift_to_resolutions(const Map& f, const Resolution& src,
                                     const Resolution& dst) {
  const Ring& r = f.dst.ring;
  std::vector<Map> comp;
  comp.push_back(make_map(src.f[0], dst.f[0], f.shift, f.mat));
  for (size_t k = 0; k < src.d.size(); ++k) {
    const Module& fs = src.f[k + 1];
    if (k + 1 >= dst.f.size()) {
      Module zero;
      zero.ring = r;
      comp.push_back(zero_map(fs, dst.f.size() > k + 1 ? dst.f[k + 1] : zero,
                              f.shift));
      continue;
    }
    const Module& fd = dst.f[k + 1];
    std::vector<std::vector<RElem>> mat;
    for (int j = 0; j < fs.ngens(); ++j) {
      Degree e = add_degree(r, fs.gens[j], f.shift);
      // v = comp[k](src.d[k](gen j)) as a column over dst.f[k].
      std::vector<RElem> v(dst.f[k].ngens());
      for (int a = 0; a < src.f[k].ngens(); ++a) {
        const RElem& c = src.d[k].mat[j][a];
        if (c.empty()) continue;
        for (int b = 0; b < dst.f[k].ngens(); ++b)
          v[b] = add(v[b], multiply(r, c, comp[k].mat[a][b]));
      }
      PieceBasis pbS = piece_basis(fd, e);
      PieceBasis pbT = piece_basis(dst.f[k], e);
      IntMat a = map_matrix_at(dst.d[k], e, pbS, pbT);
      IntMat rel = relations_at(dst.f[k], e, pbT);
      std::vector<Int> b = expand_column(dst.f[k], v, e, pbT);
      auto x = solve(a.hcat(rel), b);
      if (!x)
        throw std::logic_error("lift_to_resolutions: no lift on a piece");
      std::vector<RElem> col(fd.ngens());
      for (int t = 0; t < pbS.size(); ++t) {
        if ((*x)[t] == 0) continue;
        auto [g, mono] = pbS.elems[t];
        col[g][mono] += (*x)[t];
      }
      mat.push_back(col);
    }
    comp.push_back(make_map(fs, fd, f.shift, mat));
  }
  return comp;
}

Complex derived_tensor(const Module& k, const Module& m, const Window& w,
                       int max_depth, ResolutionCert* cert) {
  Resolution res = free_resolution(k, w, max_depth);
  if (cert) *cert = res.cert;
  Complex c;
  for (size_t i = 0; i < res.f.size(); ++i)
    c.term[-int(i)] = tensor(res.f[i], m);
  for (size_t i = 0; i < res.d.size(); ++i)
    c.diff[-int(i) - 1] = tensor_map(res.d[i], m);
  return c;
}

FGAbelianGroup graded_ext(const Module& m, const Module& n, int i,
                          const Degree& shift0, const Window& w, int max_depth,
                          bool* certified) {
  if (i < 0) return {};
  const Ring& r = m.ring;
  Degree shift = reduce_degree(r, shift0);
  int depth = std::max(max_depth, i + 1);
  Resolution res = free_resolution(m, w, depth);
  if (certified)
    *certified = res.cert.terminated || !r.has_free_coord();
  if (i >= int(res.f.size()) && res.cert.terminated) return {};
  auto hom_block = [&](int k, std::vector<PieceBasis>& pbs,
                       std::vector<Degree>& degs, IntMat& rel) {
    const Module& f = res.f[k];
    pbs.resize(f.ngens());
    degs.resize(f.ngens());
    std::vector<IntMat> rels;
    for (int j = 0; j < f.ngens(); ++j) {
      degs[j] = add_degree(r, f.gens[j], shift);
      pbs[j] = piece_basis(n, degs[j]);
      rels.push_back(relations_at(n, degs[j], pbs[j]));
    }
    rel = diag_join(rels);
  };
  auto hom_diff = [&](int k, const std::vector<PieceBasis>& from,
                      const std::vector<PieceBasis>& to,
                      const std::vector<Degree>& to_degs) {
    // precomposition with d[k]: block (j', i') acts by d[k].mat[j'][i']
    const Map& d = res.d[k];
    int rows = 0, cols = 0;
    std::vector<int> roff, coff;
    for (const auto& pb : to) roff.push_back(rows), rows += pb.size();
    for (const auto& pb : from) coff.push_back(cols), cols += pb.size();
    IntMat out(rows, cols);
    for (int jp = 0; jp < d.src.ngens(); ++jp)
      for (int ip = 0; ip < d.dst.ngens(); ++ip) {
        if (d.mat[jp][ip].empty()) continue;
        IntMat blk =
            action_matrix(n, d.mat[jp][ip], from[ip], to[jp], to_degs[jp]);
        for (int a = 0; a < blk.rows(); ++a)
          for (int b = 0; b < blk.cols(); ++b)
            out.at(roff[jp] + a, coff[ip] + b) += blk.at(a, b);
      }
    return out;
  };
  int top = int(res.f.size()) - 1;
  std::vector<PieceBasis> pb_i, pb_n, pb_p;
  std::vector<Degree> dg_i, dg_n, dg_p;
  IntMat rel_i, rel_n, rel_p;
  if (i > top) {
    // truncated resolution too short and not terminated: best effort zero
    return {};
  }
  hom_block(i, pb_i, dg_i, rel_i);
  int bsize = rel_i.rows();
  IntMat beta(0, bsize), rc(0, 0), alpha(bsize, 0);
  if (i + 1 <= top) {
    hom_block(i + 1, pb_n, dg_n, rel_n);
    beta = hom_diff(i, pb_i, pb_n, dg_n);
    rc = rel_n;
  }
  if (i >= 1) {
    hom_block(i - 1, pb_p, dg_p, rel_p);
    alpha = hom_diff(i - 1, pb_p, pb_i, dg_i);
  }
  return subquotient(beta, rc, alpha, rel_i);
}

}  // namespace gmod
