#pragma once

#include <cstdint>

#include "gkit/module.hpp"

namespace gkit {

// Ideal of (n-i)-minors of the relation matrix (n = number of generators).
Ideal fitting_ideal(const PresentedModule& m, size_t i);
// Same ideal of minors for an explicit relation matrix with n columns.
Ideal minor_ideal(const RMatrix& rel, size_t k);

// Image in R of ∩^s N evaluated at the restricted coordinate functionals,
// for the presentation R^s → Z with kernel N.
Ideal characteristic_ideal(const PresentedModule& z);

// Ann_R(M) by linear solving.
Ideal annihilator_module(const PresentedModule& m);
// Ann_R(M) by enumerating R (requires |R| <= bound).
Ideal annihilator_module_enumerated(const PresentedModule& m, uint64_t bound = 65536);

// All elements of R, for rings with |R| <= bound.
std::vector<RingElement> enumerate_ring(const Ring& ring, uint64_t bound = 65536);

}  // namespace gkit
