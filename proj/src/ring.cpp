#include "gmod/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace gmod {

std::string Degree::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << "]";
  return os.str();
}

int Ring::grank() const {
  switch (kind) {
    case RingKind::BaseZ:
    case RingKind::DivZ:
      return 0;
    case RingKind::PointG:
    case RingKind::LineR:
    case RingKind::Chart:
    case RingKind::ChartDiv:
      return 1;
    case RingKind::LineT:
    case RingKind::Hyper:
      return 2;
  }
  return 0;
}

std::vector<long> Ring::moduli() const {
  switch (kind) {
    case RingKind::BaseZ:
    case RingKind::DivZ:
      return {};
    case RingKind::PointG:
    case RingKind::LineR:
      return {0};
    case RingKind::Chart:
    case RingKind::ChartDiv:
      return {l};
    case RingKind::LineT:
    case RingKind::Hyper:
      return {0, l};
  }
  return {};
}

bool Ring::has_free_coord() const {
  auto m = moduli();
  return !m.empty() && m[0] == 0;
}

int Ring::nvars() const {
  switch (kind) {
    case RingKind::LineR:
    case RingKind::Chart:
      return 1;
    case RingKind::LineT:
    case RingKind::Hyper:
      return 2;
    default:
      return 0;
  }
}

Degree Ring::var_degree(int v) const {
  switch (kind) {
    case RingKind::LineR:
      return {{1}};
    case RingKind::Chart:
      return {{1 % l}};
    case RingKind::LineT:
      return v == 0 ? Degree{{1, 0}} : Degree{{0, 1 % l}};
    case RingKind::Hyper:
      return v == 0 ? Degree{{1, 0}} : Degree{{1, 1 % l}};
    default:
      throw std::invalid_argument("var_degree: ring has no variables");
  }
}

Int Ring::characteristic() const {
  if (kind == RingKind::DivZ || kind == RingKind::ChartDiv) return Int(n);
  return Int(0);
}

std::string Ring::name() const {
  std::ostringstream os;
  switch (kind) {
    case RingKind::BaseZ: return "Z";
    case RingKind::PointG: return "Z@BGm";
    case RingKind::LineR: return "Z[x]";
    case RingKind::LineT: os << "Z[x,t]/(t^" << l << "-1)"; return os.str();
    case RingKind::Hyper: os << "Z[x,y]/(x^" << l << "-y^" << l << ")"; return os.str();
    case RingKind::Chart: os << "Z[u]/(u^" << l << "-" << n << ")"; return os.str();
    case RingKind::ChartDiv: os << "Z/" << n << "@Bmu" << l; return os.str();
    case RingKind::DivZ: os << "Z/" << n; return os.str();
  }
  return "?";
}

Ring base_z() { return {RingKind::BaseZ, 0, 0}; }
Ring point_g() { return {RingKind::PointG, 0, 0}; }
Ring line_r() { return {RingKind::LineR, 0, 0}; }
Ring line_t(long l) { return {RingKind::LineT, l, 0}; }
Ring hyper(long l) { return {RingKind::Hyper, l, 0}; }
Ring chart(long l, long n) { return {RingKind::Chart, l, n}; }
Ring chart_div(long l, long n) { return {RingKind::ChartDiv, l, n}; }
Ring div_z(long n) { return {RingKind::DivZ, 0, n}; }

namespace {
long pos_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}
}  // namespace

Degree reduce_degree(const Ring& r, Degree d) {
  auto m = r.moduli();
  if (d.c.size() != m.size())
    throw std::invalid_argument("degree rank mismatch for " + r.name());
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) d.c[i] = pos_mod(d.c[i], m[i]);
  return d;
}

Degree add_degree(const Ring& r, const Degree& a, const Degree& b) {
  Degree out = a;
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
  return reduce_degree(r, out);
}

Degree sub_degree(const Ring& r, const Degree& a, const Degree& b) {
  Degree out = a;
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] -= b.c[i];
  return reduce_degree(r, out);
}

Degree zero_degree(const Ring& r) {
  return Degree{std::vector<long>(r.grank(), 0)};
}

Monomial one_monomial(const Ring& r) {
  return Monomial{std::vector<long>(r.nvars(), 0)};
}

std::pair<Monomial, Int> normal_form(const Ring& r, Monomial m) {
  if (int(m.e.size()) != r.nvars())
    throw std::invalid_argument("monomial arity mismatch");
  for (long e : m.e)
    if (e < 0) throw std::invalid_argument("negative exponent");
  Int coeff = 1;
  switch (r.kind) {
    case RingKind::LineT:
      m.e[1] = pos_mod(m.e[1], r.l);
      break;
    case RingKind::Hyper:
      while (m.e[1] >= r.l) {
        m.e[1] -= r.l;
        m.e[0] += r.l;
      }
      break;
    case RingKind::Chart: {
      long q = m.e[0] / r.l;
      m.e[0] %= r.l;
      for (long i = 0; i < q; ++i) coeff *= r.n;
      break;
    }
    default:
      break;
  }
  return {m, coeff};
}

Degree degree_of(const Ring& r, const Monomial& m) {
  switch (r.kind) {
    case RingKind::BaseZ:
    case RingKind::DivZ:
      return {{}};
    case RingKind::PointG:
      return {{0}};
    case RingKind::ChartDiv:
      return {{0}};
    case RingKind::LineR:
      return {{m.e[0]}};
    case RingKind::Chart:
      return {{pos_mod(m.e[0], r.l)}};
    case RingKind::LineT:
      return {{m.e[0], pos_mod(m.e[1], r.l)}};
    case RingKind::Hyper:
      return {{m.e[0] + m.e[1], pos_mod(m.e[1], r.l)}};
  }
  return {{}};
}

std::vector<Monomial> monomial_basis(const Ring& r, const Degree& d0) {
  Degree d = reduce_degree(r, d0);
  switch (r.kind) {
    case RingKind::BaseZ:
    case RingKind::DivZ:
      return {Monomial{{}}};
    case RingKind::PointG:
      return d.c[0] == 0 ? std::vector<Monomial>{Monomial{{}}}
                         : std::vector<Monomial>{};
    case RingKind::ChartDiv:
      return d.c[0] == 0 ? std::vector<Monomial>{Monomial{{}}}
                         : std::vector<Monomial>{};
    case RingKind::LineR:
      return d.c[0] >= 0 ? std::vector<Monomial>{Monomial{{d.c[0]}}}
                         : std::vector<Monomial>{};
    case RingKind::Chart:
      return {Monomial{{d.c[0]}}};
    case RingKind::LineT:
      return d.c[0] >= 0 ? std::vector<Monomial>{Monomial{{d.c[0], d.c[1]}}}
                         : std::vector<Monomial>{};
    case RingKind::Hyper:
      // x^(a-q) y^q with q = second coordinate; needs a >= q.
      return d.c[0] >= d.c[1]
                 ? std::vector<Monomial>{Monomial{{d.c[0] - d.c[1], d.c[1]}}}
                 : std::vector<Monomial>{};
  }
  return {};
}

std::string monomial_str(const Ring& r, const Monomial& m) {
  static const char* names[2][2] = {{"x", "?"}, {"x", "t"}};
  std::vector<std::string> vars;
  switch (r.kind) {
    case RingKind::LineR: vars = {"x"}; break;
    case RingKind::Chart: vars = {"u"}; break;
    case RingKind::LineT: vars = {"x", "t"}; break;
    case RingKind::Hyper: vars = {"x", "y"}; break;
    default: return "1";
  }
  (void)names;
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (any) os << "*";
    os << vars[i];
    if (m.e[i] != 1) os << "^" << m.e[i];
    any = true;
  }
  return any ? os.str() : "1";
}

RElem relem(const Ring& r, const Monomial& m, const Int& c) {
  if (c == 0) return {};
  auto [nm, f] = normal_form(r, m);
  Int v = c * f;
  if (v == 0) return {};
  return RElem{{nm, v}};
}

RElem relem_const(const Ring& r, const Int& c) {
  return relem(r, one_monomial(r), c);
}

RElem relem_var(const Ring& r, int v, long power) {
  Monomial m = one_monomial(r);
  m.e.at(v) = power;
  return relem(r, m, 1);
}

RElem add(const RElem& a, const RElem& b) {
  RElem out = a;
  for (const auto& [m, c] : b) {
    Int& v = out[m];
    v += c;
    if (v == 0) out.erase(m);
  }
  return out;
}

RElem scale(const RElem& a, const Int& c) {
  RElem out;
  if (c == 0) return out;
  for (const auto& [m, v] : a) out[m] = v * c;
  return out;
}

RElem multiply(const Ring& r, const RElem& a, const RElem& b) {
  RElem out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m;
      m.e.resize(ma.e.size());
      for (size_t i = 0; i < m.e.size(); ++i) m.e[i] = ma.e[i] + mb.e[i];
      auto [nm, f] = normal_form(r, m);
      Int& v = out[nm];
      v += ca * cb * f;
      if (v == 0) out.erase(nm);
    }
  return out;
}

bool is_zero(const RElem& a) { return a.empty(); }

bool is_homogeneous(const Ring& r, const RElem& a, Degree* deg) {
  if (a.empty()) return true;
  Degree d = degree_of(r, a.begin()->first);
  for (const auto& [m, c] : a)
    if (degree_of(r, m) != d) return false;
  if (deg) *deg = d;
  return true;
}

std::string relem_str(const Ring& r, const RElem& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a) {
    Int cc = c;
    if (first) {
      if (cc < 0) os << "-", cc = -cc;
    } else {
      os << (cc < 0 ? " - " : " + ");
      if (cc < 0) cc = -cc;
    }
    std::string ms = monomial_str(r, m);
    if (cc != 1 || ms == "1") {
      os << cc.get_str();
      if (ms != "1") os << "*";
    }
    if (ms != "1") os << ms;
    first = false;
  }
  return os.str();
}

}  // namespace gmod
