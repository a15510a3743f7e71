#pragma once

#include "gmod/functors.hpp"

namespace gmod {

// Building blocks over the hypersurface ring Z[x,y]/(x^l - y^l), 0 <= n,m < l.

// (x,y)^n as an abstract module: generators x^(n-b) y^b with the relations
// computed from the embedding into the rank-one free module (window-exact).
Module ideal_power_module(long l, long n, const Window& w);

// x^m translate of the degree-l cyclic cover sheaf: generators g_j at degree
// (m, j) for j mod l, relations y g_j = x g_(j+1).
Module cover_power_module(long l, long m);

// Diagonal embedding of (x,y)^m into the cover translate: x^(m-b) y^b -> g_b.
Map delta_map(long l, long m, const Window& w);

// Inclusion (x,y)^m into (x,y)^n for n <= m, in the generator presentations.
Map ideal_inclusion(long l, long n, long m, const Window& w);

// Interpolation kernel: (cover_power(m) (+) ideal_power(n)) modulo the
// antidiagonal copy of ideal_power(m), for 0 <= n <= m <= l-1. At m = n it is
// the cover translate; at m = l-1 it is the ideal power.
Module tau_module(long l, long n, long m, const Window& w);

// Step maps of the two inclusion families, both canonical injections:
//   step_t: tau(n, m) -> tau(n, m-1)   (cover index decreases)
//   step_i: tau(n+1, m) -> tau(n, m)   (ideal index decreases)
Map tau_step_t(long l, long n, long m, const Window& w);
Map tau_step_i(long l, long n, long m, const Window& w);

// Cokernel tables of the step maps: sums of rank-one skyscrapers.
//   step_t: Z at (m-1, j) for j = m..l-1
//   step_i: Z at (n, i)   for i = 0..n
Table tau_step_t_coker(long l, long m);
Table tau_step_i_coker(long l, long n);

}  // namespace gmod
