#pragma once

#include "gmod/homology.hpp"

namespace gmod {

// Objects over the graded point: one finitely generated group per integer
// degree (trivial entries omitted). Two-spot homology of derived functors is
// a GC: spot -> table.
using GT = std::map<long, FGAbelianGroup>;
using GC = std::map<int, GT>;

GT gt_twist(const GT& a, long i);     // degree d becomes d + i
GT bt_pull(const GT& a, long l);      // degree d becomes l d
GT bt_push(const GT& a, long l);      // keep multiples of l, divide by l
bool gt_equal(const GT& a, const GT& b);
std::string gt_str(const GT& a);
std::string gc_str(const GC& a);

Module gt_to_module(const GT& a);               // presentation over the graded point
GT module_to_gt(const Module& m, const Window& w);
Table gt_to_table(const GT& a);
HTable gc_to_htable(const GC& a);

// Derived restriction to the origin of a Z[x]-module:
// H^0_d = coker(x: M_(d-1) -> M_d), H^-1_d = ker of the same map.
GC li_star(const Module& m, const Window& w);

// Point-side table placed on the line at degrees l j + i with x acting as 0.
Module wedge_right(long i, const GT& a, long l);
// Composite bt_push . (twist by i) . li_star.
GC wedge_left(long i, const Module& m, long l, const Window& w);

// Degree-l cover of the line: base change x -> x^l (flat, so exact).
Module theta_pull(const Module& m, long l);
// Pushforward along the cover: pieces at multiples of l, x acting by x^l;
// returns a presentation valid inside the window.
Module theta_push(const Module& m, long l, const Window& w);
// theta_pull(theta_push(m)) -> m, the canonical evaluation map.
Map theta_counit(const Module& m, long l, const Window& w);

// The correspondence legs: pull a Z[x]-module to the hypersurface ring, and
// push a hypersurface module down its diagonal (x acting through y).
Module alpha1_pull(const Module& m, long l);
Module alpha2_push(const Module& m, const Window& w);
Map alpha2_push_map(const Map& f, const Window& w);

// Kernel transform: resolve k over the hypersurface ring, tensor with the
// pulled-back argument, push the diagonal down; a complex of Z[x]-modules in
// nonpositive spots whose homology is the transform of m along k.
Complex fm_transform(const Module& k, const Module& m, const Window& w,
                     int max_depth, ResolutionCert* cert = nullptr);
// Transform of a map between kernels: lifts f to the resolutions and pushes
// the lifted chain map through the correspondence.
ComplexMap fm_transform_map(const Map& f, const Module& m, const Window& w,
                            int max_depth);

}  // namespace gmod
