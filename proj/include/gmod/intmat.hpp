#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace gmod {

using Int = mpz_class;

// Dense matrix of arbitrary-precision integers. Sizes stay small (desk scale),
// so dense storage with exact arithmetic is the right tradeoff; sparse input
// is accepted as coordinate triples.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}

  static IntMat identity(int n);
  static IntMat from_triples(int rows, int cols,
                             const std::vector<std::tuple<int, int, Int>>& t);

  int rows() const { return r_; }
  int cols() const { return c_; }
  const Int& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }
  Int& at(int i, int j) { return a_[size_t(i) * c_ + j]; }

  IntMat mul(const IntMat& other) const;
  IntMat hcat(const IntMat& other) const;   // [this | other]
  IntMat vcat(const IntMat& other) const;
  IntMat negated() const;
  IntMat transposed() const;
  IntMat top_rows(int k) const;
  IntMat column(int j) const;
  std::vector<Int> col_vec(int j) const;
  bool is_zero() const;
  bool operator==(const IntMat& other) const = default;
  std::string str() const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void add_row_multiple(int dst, int src, const Int& f);  // row dst += f*row src
  void add_col_multiple(int dst, int src, const Int& f);
  void negate_row(int i);
  void negate_col(int j);

 private:
  int r_ = 0, c_ = 0;
  std::vector<Int> a_;
};

IntMat diag_join(const std::vector<IntMat>& blocks);  // block diagonal
IntMat from_columns(int rows, const std::vector<std::vector<Int>>& cols);

// d = u * m * v with d diagonal, d[i] | d[i+1], entries nonnegative.
// u_inv satisfies u_inv * d * v^{-1} = m (u_inv tracked so lattice bases can
// be read off directly).
struct SmithResult {
  IntMat u, d, v, u_inv;
  int rank = 0;
};
SmithResult smith_normal_form(const IntMat& m);

// Finitely generated abelian group in invariant-factor form: Z^free_rank plus
// Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
struct FGAbelianGroup {
  long free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const FGAbelianGroup&) const = default;
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string str() const;
};

FGAbelianGroup free_group(long rank);
FGAbelianGroup cyclic_group(const Int& n);  // n=0 gives Z
FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);

// Cokernel of the column span: rows index generators, columns index relations.
FGAbelianGroup cokernel(const IntMat& m);

// Columns form a basis of ker(m) as a lattice (saturated: every integer
// kernel vector is an integer combination).
IntMat kernel_basis(const IntMat& m);

// One integer solution of m x = b, if any.
std::optional<std::vector<Int>> solve(const IntMat& m, const std::vector<Int>& b);
// Columnwise solve of m X = b.
std::optional<IntMat> solve_matrix(const IntMat& m, const IntMat& b);

bool in_column_lattice(const IntMat& m, const std::vector<Int>& b);

// Independent columns spanning the same column lattice as m.
IntMat column_lattice_basis(const IntMat& m);

// The group  { v in Z^b : beta v in colspan(rel_c) } / (colspan(alpha) + colspan(rel_b)).
// beta : Z^b -> Z^c, rel_c has c rows, alpha and rel_b have b rows.
// Requires colspan(alpha)+colspan(rel_b) to land in the numerator (checked).
FGAbelianGroup subquotient(const IntMat& beta, const IntMat& rel_c,
                           const IntMat& alpha, const IntMat& rel_b);

}  // namespace gmod
