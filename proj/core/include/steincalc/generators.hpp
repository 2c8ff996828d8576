#pragma once

#include "steincalc/document.hpp"

namespace steincalc {

/// (Sigma_{g,b}, tau_boundary): word "tau_boundary", a bounding declaration for
/// the whole page and, for g > 0 and b > 1, the baseline sigma = -1.
Document generate_tau_boundary(int genus, int boundary);

/// tau_boundary on Sigma_{0,4} plus the lantern curves, the lantern relator
/// and the word "lantern_right".
Document generate_lantern();

/// The n-chain on its minimal surface: words "tau_delta" and "chain_power",
/// the chain relator and a bounding declaration for the chain neighborhood.
Document generate_chain(int n);

/// The non-standard relator on Sigma_{1,3}: words "rns_left" and "rns_right".
Document generate_r_ns();

}  // namespace steincalc
