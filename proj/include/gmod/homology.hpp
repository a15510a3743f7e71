#pragma once

#include "gmod/module.hpp"

namespace gmod {

// Cochain complex of modules; diff[k] maps term[k] to term[k+1] with zero
// degree shift. Absent positions are zero.
struct Complex {
  std::map<int, Module> term;
  std::map<int, Map> diff;
};

void validate(const Complex& c);  // shapes and d after d = 0
Complex complex_of(const Module& m, int pos = 0);
Complex complex_of_map(const Map& f, int src_pos = -1);
Complex shift_complex(const Complex& c, int by);  // term[k] <- term[k-by]

// Degreewise homology groups, spot -> degree -> group (trivial omitted).
using HTable = std::map<int, Table>;
FGAbelianGroup homology_at(const Complex& c, int k, const Degree& d);
HTable homology_table(const Complex& c, const Window& w);
std::string htable_str(const Ring& r, const HTable& t);

// Componentwise map of complexes (zero degree shift).
struct ComplexMap {
  Complex src, dst;
  std::map<int, Map> comp;
};

// cone(f)^k = src^(k+1) (+) dst^k with the usual differential.
Complex cone(const ComplexMap& f);
Complex cone(const Map& f);

struct ResolutionCert {
  bool terminated = false;      // syzygies exhausted: globally exact
  bool window_complete = false; // exact on all window degrees at computed spots
  bool periodic = false;        // finite-grading tail repeats with period 2
  int depth = 0;
};

// Chain of free modules f[0] <- f[1] <- ... resolving target; d[k] maps
// f[k+1] to f[k], aug maps f[0] onto target.
struct Resolution {
  Module target;
  std::vector<Module> f;
  std::vector<Map> d;
  Map aug;
  ResolutionCert cert;
};

Resolution free_resolution(const Module& m, const Window& w, int max_depth);

// Lift a map of resolved modules to a chain map of their resolutions; each
// component is solved degreewise (possible wherever the resolutions are exact
// in the window). comp[k]: src.f[k] -> dst.f[k].
std::vector<Map> lift_to_resolutions(const Map& f, const Resolution& src,
                                     const Resolution& dst);

// K (|x|^L) M as a complex in nonpositive spots, from a free resolution of k.
Complex derived_tensor(const Module& k, const Module& m, const Window& w,
                       int max_depth, ResolutionCert* cert = nullptr);

// Ext^i of degree-shift maps m -> n, via the hom complex of a resolution.
// *certified is set when the resolution argument makes the answer exact
// (terminated resolution, or purely finite grading).
FGAbelianGroup graded_ext(const Module& m, const Module& n, int i,
                          const Degree& shift, const Window& w, int max_depth,
                          bool* certified = nullptr);

}  // namespace gmod
