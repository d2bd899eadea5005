#pragma once

#include "fracl/piecewise_linear.hpp"

namespace fracl {

/// Entropy solution of the inviscid Burgers equation u_t + (u^2/2)_x = 0 with
/// initial datum u0 = 1_{[-3,-2]} - 1_{[2,3]}.  Left box: rarefaction fan
/// (x+3)/t capped at 1, shock first at -2 + t/2 (while the plateau lasts,
/// t <= 2), then -3 + sqrt(2t), frozen at 0 once the two shocks merge
/// (t >= 4.5).  The right box is the mirror image.  Values lie in [-1,1] and
/// the support stays inside [-3,3].
double exact_inviscid_burgers(double t, double x);

/// The same profile at fixed t as a piecewise-linear function (exact nodes at
/// the kinks and shocks).
PwLinear exact_inviscid_profile(double t);

}  // namespace fracl
