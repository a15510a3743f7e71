#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "gmod/intmat.hpp"

namespace gmod {

// Grading degree: one coordinate per grading factor, torsion coordinates kept
// reduced to [0, modulus).
struct Degree {
  std::vector<long> c;
  auto operator<=>(const Degree&) const = default;
  std::string str() const;
};

// The closed family of base rings. Every graded piece of each ring is free of
// rank <= 1 over Z, which is what makes the piecewise linear algebra exact.
enum class RingKind { BaseZ, PointG, LineR, LineT, Hyper, Chart, ChartDiv, DivZ };

struct Ring {
  RingKind kind = RingKind::BaseZ;
  long l = 0;  // torsion grading modulus, where applicable
  long n = 0;  // coefficient characteristic / chart parameter N

  bool operator==(const Ring&) const = default;

  int grank() const;                 // number of grading coordinates
  std::vector<long> moduli() const;  // per coordinate; 0 means free (Z)
  bool has_free_coord() const;
  int nvars() const;                 // ring generators over Z
  Degree var_degree(int v) const;
  Int characteristic() const;        // 0, or N for Z/N coefficient rings
  std::string name() const;
};

Ring base_z();
Ring point_g();                 // Z graded by Z, concentrated in degree 0
Ring line_r();                  // Z[x], deg x = 1
Ring line_t(long l);            // Z[x,t]/(t^l - 1), deg x=(1,0), deg t=(0,1)
Ring hyper(long l);             // Z[x,y]/(x^l - y^l), deg x=(1,0), deg y=(1,1)
Ring chart(long l, long n);     // Z[u]/(u^l - n), Z/l-graded, deg u = 1
Ring chart_div(long l, long n); // Z/n with Z/l grading, degree 0 only
Ring div_z(long n);             // Z/n, trivial grading

Degree reduce_degree(const Ring& r, Degree d);
Degree add_degree(const Ring& r, const Degree& a, const Degree& b);
Degree sub_degree(const Ring& r, const Degree& a, const Degree& b);
Degree zero_degree(const Ring& r);

// Monomial in normal form: exponent per ring variable.
struct Monomial {
  std::vector<long> e;
  auto operator<=>(const Monomial&) const = default;
};

Monomial one_monomial(const Ring& r);
// Reduce raw exponents (t^l -> 1, y^l -> x^l, u^l -> N); returns the normal
// monomial and the integer factor picked up by the reduction.
std::pair<Monomial, Int> normal_form(const Ring& r, Monomial m);
Degree degree_of(const Ring& r, const Monomial& m);
// All normal-form monomials of the given degree (size 0 or 1 in this family).
std::vector<Monomial> monomial_basis(const Ring& r, const Degree& d);
std::string monomial_str(const Ring& r, const Monomial& m);

// Ring element: normal-form monomials with integer coefficients.
using RElem = std::map<Monomial, Int>;

RElem relem(const Ring& r, const Monomial& m, const Int& c);
RElem relem_const(const Ring& r, const Int& c);
RElem relem_var(const Ring& r, int v, long power = 1);
RElem add(const RElem& a, const RElem& b);
RElem scale(const RElem& a, const Int& c);
RElem multiply(const Ring& r, const RElem& a, const RElem& b);
bool is_zero(const RElem& a);
// True when all monomials share one degree (the zero element is homogeneous of
// any degree); sets *deg when nonzero and homogeneous.
bool is_homogeneous(const Ring& r, const RElem& a, Degree* deg = nullptr);
std::string relem_str(const Ring& r, const RElem& a);

}  // namespace gmod
