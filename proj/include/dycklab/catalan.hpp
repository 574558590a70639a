#pragma once

#include "dycklab/qtpoly.hpp"
#include "dycklab/seq.hpp"

namespace dycklab {

/// Sum of q^area t^dinv over all ordinary Dyck sequences of length n.
/// Throws ResourceLimitError when n exceeds the cap.
QtPoly brute_force_catalan(int n, int cap = 12);

}  // namespace dycklab
