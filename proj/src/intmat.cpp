#include "gmod/intmat.hpp"

#include <sstream>
#include <stdexcept>

namespace gmod {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_triples(int rows, int cols,
                            const std::vector<std::tuple<int, int, Int>>& t) {
  IntMat m(rows, cols);
  for (const auto& [i, j, v] : t) m.at(i, j) += v;
  return m;
}

IntMat IntMat::mul(const IntMat& other) const {
  if (c_ != other.r_) throw std::invalid_argument("IntMat::mul shape mismatch");
  IntMat out(r_, other.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.c_; ++j) out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

IntMat IntMat::hcat(const IntMat& other) const {
  if (r_ != other.r_) {
    if (r_ == 0 && c_ == 0) return other;
    if (other.r_ == 0 && other.c_ == 0) return *this;
    throw std::invalid_argument("IntMat::hcat shape mismatch");
  }
  IntMat out(r_, c_ + other.c_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) out.at(i, j) = at(i, j);
    for (int j = 0; j < other.c_; ++j) out.at(i, c_ + j) = other.at(i, j);
  }
  return out;
}

IntMat IntMat::vcat(const IntMat& other) const {
  if (c_ != other.c_) throw std::invalid_argument("IntMat::vcat shape mismatch");
  IntMat out(r_ + other.r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out.at(i, j) = at(i, j);
  for (int i = 0; i < other.r_; ++i)
    for (int j = 0; j < c_; ++j) out.at(r_ + i, j) = other.at(i, j);
  return out;
}

IntMat IntMat::negated() const {
  IntMat out(r_, c_);
  for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = -a_[k];
  return out;
}

IntMat IntMat::transposed() const {
  IntMat out(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
  return out;
}

IntMat IntMat::top_rows(int k) const {
  IntMat out(k, c_);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < c_; ++j) out.at(i, j) = at(i, j);
  return out;
}

IntMat IntMat::column(int j) const {
  IntMat out(r_, 1);
  for (int i = 0; i < r_; ++i) out.at(i, 0) = at(i, j);
  return out;
}

std::vector<Int> IntMat::col_vec(int j) const {
  std::vector<Int> v(r_);
  for (int i = 0; i < r_; ++i) v[i] = at(i, j);
  return v;
}

bool IntMat::is_zero() const {
  for (const Int& v : a_)
    if (v != 0) return false;
  return true;
}

std::string IntMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < c_; ++j) os << (j ? "," : "") << at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

void IntMat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < c_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < r_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMat::add_row_multiple(int dst, int src, const Int& f) {
  if (f == 0) return;
  for (int k = 0; k < c_; ++k) at(dst, k) += f * at(src, k);
}

void IntMat::add_col_multiple(int dst, int src, const Int& f) {
  if (f == 0) return;
  for (int k = 0; k < r_; ++k) at(k, dst) += f * at(k, src);
}

void IntMat::negate_row(int i) {
  for (int k = 0; k < c_; ++k) at(i, k) = -at(i, k);
}

void IntMat::negate_col(int j) {
  for (int k = 0; k < r_; ++k) at(k, j) = -at(k, j);
}

IntMat diag_join(const std::vector<IntMat>& blocks) {
  int r = 0, c = 0;
  for (const auto& b : blocks) r += b.rows(), c += b.cols();
  IntMat out(r, c);
  int ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) out.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows(), co += b.cols();
  }
  return out;
}

IntMat from_columns(int rows, const std::vector<std::vector<Int>>& cols) {
  IntMat out(rows, int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (int(cols[j].size()) != rows)
      throw std::invalid_argument("from_columns: bad column length");
    for (int i = 0; i < rows; ++i) out.at(i, int(j)) = cols[j][i];
  }
  return out;
}

namespace {

// Pivot choice is part of the determinism contract: smallest |value|, ties
// broken by lowest (row, col).
bool find_pivot(const IntMat& m, int k, int& pi, int& pj) {
  bool found = false;
  Int best;
  for (int i = k; i < m.rows(); ++i)
    for (int j = k; j < m.cols(); ++j) {
      const Int& v = m.at(i, j);
      if (v == 0) continue;
      Int a = abs(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMat& m) {
  SmithResult res;
  res.d = m;
  res.u = IntMat::identity(m.rows());
  res.u_inv = IntMat::identity(m.rows());
  res.v = IntMat::identity(m.cols());
  IntMat& d = res.d;
  int n = std::min(m.rows(), m.cols());

  auto row_op = [&](int dst, int src, const Int& f) {
    d.add_row_multiple(dst, src, f);
    res.u.add_row_multiple(dst, src, f);
    res.u_inv.add_col_multiple(src, dst, -f);
  };
  // Unimodular transform on rows (k, i): (r_k, r_i) <- (s r_k + t r_i,
  // x r_i - y r_k), with s a + t b = g, x = a/g, y = b/g.  Determinant is
  // s x + t y = 1; the inverse acts on columns of u_inv.
  auto rows2 = [](IntMat& mm, int k, int i, const Int& s, const Int& t,
                  const Int& x, const Int& y) {
    for (int j = 0; j < mm.cols(); ++j) {
      Int rk = s * mm.at(k, j) + t * mm.at(i, j);
      Int ri = x * mm.at(i, j) - y * mm.at(k, j);
      mm.at(k, j) = rk;
      mm.at(i, j) = ri;
    }
  };
  auto cols2 = [](IntMat& mm, int k, int j, const Int& s, const Int& t,
                  const Int& x, const Int& y) {
    for (int i = 0; i < mm.rows(); ++i) {
      Int ck = s * mm.at(i, k) + t * mm.at(i, j);
      Int cj = x * mm.at(i, j) - y * mm.at(i, k);
      mm.at(i, k) = ck;
      mm.at(i, j) = cj;
    }
  };
  auto cols2_inv = [](IntMat& mm, int k, int i, const Int& s, const Int& t,
                      const Int& x, const Int& y) {
    for (int r = 0; r < mm.rows(); ++r) {
      Int ck = x * mm.at(r, k) + y * mm.at(r, i);
      Int ci = s * mm.at(r, i) - t * mm.at(r, k);
      mm.at(r, k) = ck;
      mm.at(r, i) = ci;
    }
  };
  // Zero d(i, k) against the pivot d(k, k) in a single unimodular step.  An
  // exact quotient keeps the pivot; otherwise the pivot becomes the gcd, which
  // keeps intermediate entries small (no Euclid ping-pong through the matrix).
  auto kill_row = [&](int k, int i) {
    const Int a = d.at(k, k), b = d.at(i, k);
    if (b == 0) return;
    if (a != 0 && b % a == 0) {
      row_op(i, k, -b / a);
      return;
    }
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    Int x = a / g, y = b / g;
    rows2(d, k, i, s, t, x, y);
    rows2(res.u, k, i, s, t, x, y);
    cols2_inv(res.u_inv, k, i, s, t, x, y);
  };
  auto kill_col = [&](int k, int j) {
    const Int a = d.at(k, k), b = d.at(k, j);
    if (b == 0) return;
    if (a != 0 && b % a == 0) {
      Int f = -b / a;
      d.add_col_multiple(j, k, f);
      res.v.add_col_multiple(j, k, f);
      return;
    }
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    Int x = a / g, y = b / g;
    cols2(d, k, j, s, t, x, y);
    cols2(res.v, k, j, s, t, x, y);
  };
  // Clear row and column k; a gcd step in one direction can reintroduce
  // entries in the other, but each such step shrinks |pivot|, so this ends.
  auto clear_cross = [&](int k) {
    for (;;) {
      for (int i = k + 1; i < d.rows(); ++i) kill_row(k, i);
      for (int j = k + 1; j < d.cols(); ++j) kill_col(k, j);
      bool clear = true;
      for (int i = k + 1; i < d.rows(); ++i) clear &= (d.at(i, k) == 0);
      if (clear) break;
    }
  };

  int k = 0;
  for (; k < n; ++k) {
    int pi, pj;
    if (!find_pivot(d, k, pi, pj)) break;
    d.swap_rows(k, pi);
    res.u.swap_rows(k, pi);
    res.u_inv.swap_cols(k, pi);
    d.swap_cols(k, pj);
    res.v.swap_cols(k, pj);
    clear_cross(k);
    // Divisibility fixup: fold any non-divisible entry into the pivot block.
    for (;;) {
      bool fixed = true;
      for (int i = k + 1; i < d.rows() && fixed; ++i)
        for (int j = k + 1; j < d.cols() && fixed; ++j)
          if (d.at(i, j) % d.at(k, k) != 0) {
            row_op(k, i, 1);
            fixed = false;
          }
      if (fixed) break;
      clear_cross(k);
    }
    if (d.at(k, k) < 0) {
      d.negate_row(k);
      res.u.negate_row(k);
      res.u_inv.negate_col(k);
    }
  }
  res.rank = k;
  return res;
}

FGAbelianGroup free_group(long rank) { return FGAbelianGroup{rank, {}}; }

FGAbelianGroup cyclic_group(const Int& n) {
  Int a = abs(n);
  if (a == 0) return free_group(1);
  if (a == 1) return {};
  return FGAbelianGroup{0, {a}};
}

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  // Recompute invariant factors of the union via a diagonal presentation.
  int n = int(a.torsion.size() + b.torsion.size());
  IntMat d(n, n);
  int k = 0;
  for (const Int& t : a.torsion) d.at(k, k) = t, ++k;
  for (const Int& t : b.torsion) d.at(k, k) = t, ++k;
  FGAbelianGroup out = cokernel(d);
  out.free_rank += a.free_rank + b.free_rank;
  return out;
}

FGAbelianGroup cokernel(const IntMat& m) {
  SmithResult s = smith_normal_form(m);
  FGAbelianGroup g;
  g.free_rank = m.rows() - s.rank;
  for (int i = 0; i < s.rank; ++i)
    if (s.d.at(i, i) > 1) g.torsion.push_back(s.d.at(i, i));
  return g;
}

std::string FGAbelianGroup::str() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) os << "Z", first = false;
  else if (free_rank > 1) os << "Z^" << free_rank, first = false;
  for (const Int& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.get_str();
    first = false;
  }
  return os.str();
}

IntMat kernel_basis(const IntMat& m) {
  SmithResult s = smith_normal_form(m);
  IntMat out(m.cols(), m.cols() - s.rank);
  for (int j = s.rank; j < m.cols(); ++j)
    for (int i = 0; i < m.cols(); ++i) out.at(i, j - s.rank) = s.v.at(i, j);
  return out;
}

std::optional<std::vector<Int>> solve(const IntMat& m, const std::vector<Int>& b) {
  auto x = solve_matrix(m, from_columns(m.rows(), {b}));
  if (!x) return std::nullopt;
  return x->col_vec(0);
}

std::optional<IntMat> solve_matrix(const IntMat& m, const IntMat& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve shape mismatch");
  SmithResult s = smith_normal_form(m);
  IntMat y = s.u.mul(b);
  IntMat x0(m.cols(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    for (int i = 0; i < s.rank; ++i) {
      if (y.at(i, j) % s.d.at(i, i) != 0) return std::nullopt;
      x0.at(i, j) = y.at(i, j) / s.d.at(i, i);
    }
    for (int i = s.rank; i < m.rows(); ++i)
      if (y.at(i, j) != 0) return std::nullopt;
  }
  return s.v.mul(x0);
}

bool in_column_lattice(const IntMat& m, const std::vector<Int>& b) {
  return solve(m, b).has_value();
}

IntMat column_lattice_basis(const IntMat& m) {
  SmithResult s = smith_normal_form(m);
  // Lattice = u_inv * d * Z^c; basis vectors are d[i] * (col i of u_inv).
  IntMat out(m.rows(), s.rank);
  for (int j = 0; j < s.rank; ++j)
    for (int i = 0; i < m.rows(); ++i)
      out.at(i, j) = s.u_inv.at(i, j) * s.d.at(j, j);
  return out;
}

FGAbelianGroup subquotient(const IntMat& beta, const IntMat& rel_c,
                           const IntMat& alpha, const IntMat& rel_b) {
  int b = beta.cols();
  if (alpha.rows() != b && alpha.cols() > 0)
    throw std::invalid_argument("subquotient: alpha shape");
  if (rel_b.rows() != b && rel_b.cols() > 0)
    throw std::invalid_argument("subquotient: rel_b shape");
  // Numerator: { v : beta v lies in the lattice of rel_c }, as the projection
  // of ker[beta | rel_c] to the first block.
  IntMat big = beta.hcat(rel_c);
  IntMat ker = kernel_basis(big);
  IntMat proj = ker.top_rows(b);
  IntMat basis = column_lattice_basis(proj);
  // Denominator expressed in numerator coordinates.
  IntMat denom = alpha.hcat(rel_b);
  auto w = solve_matrix(basis, denom);
  if (!w)
    throw std::logic_error("subquotient: denominator not inside numerator");
  return cokernel(*w);
}

}  // namespace gmod
