#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gmod/ring.hpp"

namespace gmod {

// Finitely presented graded module: generators with degrees, homogeneous
// relation columns. rels[k][j] is the coefficient of generator j in relation
// k; rel_degs[k] is the common degree of the entries (entry degree =
// rel_deg - gen_deg).
struct Module {
  Ring ring;
  std::vector<Degree> gens;
  std::vector<Degree> rel_degs;
  std::vector<std::vector<RElem>> rels;

  int ngens() const { return int(gens.size()); }
  int nrels() const { return int(rels.size()); }
};

Module free_module(const Ring& r, const std::vector<Degree>& gens);
void validate(const Module& m);  // throws on malformed presentations

// Basis of the underlying free cover in one degree: (generator, monomial).
struct PieceBasis {
  std::vector<std::pair<int, Monomial>> elems;
  std::map<std::pair<int, Monomial>, int> idx;
  int index_of(int gen, const Monomial& m) const;  // -1 if absent
  int size() const { return int(elems.size()); }
};

PieceBasis piece_basis(const Module& m, const Degree& d);
// Relation columns of the degree-d piece, expanded over the piece basis;
// includes monomial multiples of relations and characteristic columns.
IntMat relations_at(const Module& m, const Degree& d, const PieceBasis& pb);
FGAbelianGroup degree_piece(const Module& m, const Degree& d);

// Expand a vector of ring elements (one per generator) over the piece basis
// of its degree; entries must be homogeneous of degree d - gens[j].
std::vector<Int> expand_column(const Module& m, const std::vector<RElem>& col,
                               const Degree& d, const PieceBasis& pb);

struct Window {
  long lo = 0, hi = 0;
};

// All degrees probed by windowed computations: free coordinate in [lo, hi],
// torsion coordinates exhausted. Rings with purely finite grading ignore the
// bounds.
std::vector<Degree> window_degrees(const Ring& r, const Window& w);

using Table = std::map<Degree, FGAbelianGroup>;  // trivial pieces omitted

Table piece_table(const Module& m, const Window& w);
std::string table_str(const Ring& r, const Table& t);

// Degree-homogeneous module map. mat[j] is the image of source generator j as
// a coefficient vector over target generators; entry degrees are
// src.gens[j] + shift - dst.gens[i].
struct Map {
  Module src, dst;
  Degree shift;
  std::vector<std::vector<RElem>> mat;
};

// Builds a map and verifies well-definedness: every source relation must map
// into the target's relation submodule. Throws std::invalid_argument if not.
Map make_map(Module src, Module dst, Degree shift,
             std::vector<std::vector<RElem>> mat);
Map zero_map(Module src, Module dst, Degree shift);
Map identity_map(const Module& m);

// Matrix of f on the degree-d piece of the source (target degree d + shift).
IntMat map_matrix_at(const Map& f, const Degree& d, const PieceBasis& src_pb,
                     const PieceBasis& dst_pb);

Map compose(const Map& g, const Map& f);  // g after f
bool is_zero_map(const Map& f);           // images lie in target relations
bool is_injective(const Map& f, const Window& w);     // on window pieces
bool is_surjective(const Map& f, const Window& w);
bool equal_tables(const Module& a, const Module& b, const Window& w);

Module twist(const Module& m, const Degree& a);  // twist(m,a)_d = m_(d-a)
Map twist(const Map& f, const Degree& a);
Module tensor(const Module& a, const Module& b);
Map tensor_map(const Map& f, const Module& n);  // f (x) id_n
struct SumResult {
  Module sum;
  std::vector<Map> inject;
};
SumResult direct_sum(const std::vector<Module>& parts);
Map direct_sum_map(const std::vector<Map>& fs);  // blockwise, equal shifts
Module quotient_by_image(const Map& f);          // coker(f) presented on dst gens

// Matrix of multiplication by a homogeneous ring element r between the piece
// bases of module n in two degrees (to_deg = from degree + deg r).
IntMat action_matrix(const Module& n, const RElem& r, const PieceBasis& from,
                     const PieceBasis& to, const Degree& to_deg);

// Hom group of degree-preserving maps m -> n(shift), computed exactly from
// the presentations (finite once m is finitely presented).
FGAbelianGroup hom_group(const Module& m, const Module& n, const Degree& shift);

// Syzygies of a map from a free module, scanned degree by degree across the
// window (plus torsion sweeps); returns generating columns for ker(f) within
// the window.
struct Syzygy {
  Degree deg;
  std::vector<RElem> col;  // over f.src generators
};
std::vector<Syzygy> syzygies(const Map& f, const Window& w);

// Presentation of the image of f: generators = images of source generators.
struct Presented {
  Module module;
  bool complete = false;  // relations certified complete within the window
};
Presented submodule_presentation(const Map& f, const Window& w);

}  // namespace gmod
