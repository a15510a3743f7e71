#pragma once

#include "gmod/homology.hpp"

namespace gmod {

// Arithmetic chart of the degree-l cyclotomic cover u^l = N, with its order-N
// branch divisor. Objects downstairs are plain finitely generated groups;
// objects on the chart are Chart(l, N)-modules graded by Z/l; objects on the
// branch divisor with its mu_l stabilizer are ChartDiv(l, N)-modules.

// Module with the given group sitting in one degree (torsion relations
// included, everything else free).
Module group_module(const Ring& r, const FGAbelianGroup& a, const Degree& d);

// Base change along the chart: the group a placed in residue 0 with u acting
// freely. Each residue piece of the result is a again.
Module chart_theta_pull(const FGAbelianGroup& a, long l, long n);

// Invariants of the chart action: the residue-0 piece as a plain group.
FGAbelianGroup chart_theta_push(const Module& m);

// Tautological line bundle power on the stabilizer gerbe of the divisor:
// free rank one over Z/N in residue i.
Module chart_div_line(long i, long l, long n);

// Pushforward from the stabilizer gerbe down to the divisor: residue-0 piece.
FGAbelianGroup chart_gerbe_push(const Module& m);

// Right adjoint-side insertion: the group a placed on the chart in residue i
// with u acting by zero (a twisted skyscraper along the divisor).
Module chart_wedge_right(long i, const FGAbelianGroup& a, long l, long n);

// Left-side extraction: derived u-restriction to the divisor in residue -i.
// Spot 0 is coker(u) and spot -1 is ker(u) on the relevant residue pieces.
std::map<int, FGAbelianGroup> chart_wedge_left(long i, const Module& m);

}  // namespace gmod
