#pragma once

#include <vector>

#include "gkit/bidual.hpp"
#include "gkit/fitting.hpp"

namespace gkit {

// F0 = R^d (degree 0) → F1 = R^e (degree 1), phi the d × e matrix of images
// of the basis of F0 (maps act on row vectors).
class QuadraticComplex {
public:
    QuadraticComplex() = default;
    QuadraticComplex(Ring ring, size_t d, size_t e, RMatrix phi);

    const Ring& ring() const { return phi_.ring(); }
    size_t d() const { return d_; }
    size_t e() const { return e_; }
    const RMatrix& phi() const { return phi_; }
    long rank() const { return static_cast<long>(d_) - static_cast<long>(e_); }

    Submodule h0() const { return kernel(phi_); }
    PresentedModule h1() const { return PresentedModule(ring(), e_, phi_); }
    // H^0 as a presented module together with its generators in R^d.
    Subquotient h0_module() const;
    // coker(phi^T) ≅ H^0(C)^* over a self-injective ring.
    PresentedModule h0_dual_by_transpose() const { return PresentedModule(ring(), d_, phi_.transpose()); }

    QuadraticComplex reduced_to(const Ring& target) const;

private:
    size_t d_ = 0;
    size_t e_ = 0;
    RMatrix phi_;
};

// Elements of Det(C) are scalars relative to (e_1∧…∧e_d) ⊗ (f_1^*∧…∧f_e^*).
// ϑ(a) = (-1)^{r e}·(∧_i (f_i∘phi))(a), returned in Λ^r R^d coordinates.
// NonpositiveRank if r <= 0.
RVec theta(const QuadraticComplex& c, const RingElement& a);
// As theta, also allowing r = 0.
RVec theta_unchecked(const QuadraticComplex& c, const RingElement& a);

// Image of ∩^r H^0(C) in Λ^r R^d.
Submodule h0_bidual(const QuadraticComplex& c, size_t r);

Ideal evaluation_ideal(const QuadraticComplex& c);

// quotient: e × r_Y matrix of a surjection F1 → Y = R^{r_Y} vanishing on
// im(phi) (columns give the coordinates in the ordered basis of Y).
RVec theta_with_quotient(const QuadraticComplex& c, const RMatrix& quotient, const RingElement& a);

// Fitt^{i+r}(H^0(C)^*) == Fitt^i(ker(H^1 → Y)) with r = r_Y + d - e.
bool fitting_shift_check(const QuadraticComplex& c, const RMatrix& quotient, size_t i);

struct Extension {
    QuadraticComplex complex;  // generators of R^n placed before those of F0
    RVec lower;                // ϑ_phi of the image of the basis of Det(D)
    RVec upper;                // (-1)^{rn} (∧_{i∈[n]} f_i)(ϑ_psi(basis)), restricted to F0
    bool extraneous_zero = false;
    bool commutes = false;
};

// D: R^n ⊕ F0 → F1 sending the new generators to the given columns.
Extension extend_by_free(const QuadraticComplex& c, const std::vector<RVec>& columns);
// Adjoin n generators mapping to zero (used to raise the Euler characteristic).
QuadraticComplex pad_with_free(const QuadraticComplex& c, size_t n);

struct EagonNorthcott {
    QuadraticComplex source;
    size_t r = 0;
    std::vector<size_t> ranks;         // terms in order of increasing degree
    std::vector<int> degrees;          // last term has degree 0
    std::vector<RMatrix> differentials;  // differentials[j]: term j → term j+1
    bool is_complex = false;
};

// Exponent vectors of degree k in e variables, in degree-lexicographic order
// (largest first).
std::vector<std::vector<size_t>> sym_monomials(size_t e, size_t k);

EagonNorthcott eagon_northcott(const QuadraticComplex& c);

struct CohomologyGroup {
    int degree = 0;
    Submodule cycles;
    Submodule boundaries;
    PresentedModule module;
};

std::vector<CohomologyGroup> en_cohomology(const EagonNorthcott& en);
bool en_annihilation_check(const EagonNorthcott& en);

}  // namespace gkit

namespace gkit {

// The map Fitt^0(H^1)^* ⊗ Det(C) → ∩^r H^0(C). Over a self-injective ring
// Fitt^0(H^1)^* = R/Ann(Fitt^0(H^1)), so the map is 1 ↦ ϑ(1).
struct ThetaTilde {
    Ideal fitting;            // Fitt^0(H^1(C))
    RVec theta_basis;         // ϑ(1)
    bool injective = false;   // Ann(ϑ(1)) == Ann(Fitt^0)
    bool cokernel_killed = false;  // Fitt^0 · ∩^r H^0 ⊆ R·ϑ(1)
};
ThetaTilde theta_tilde(const QuadraticComplex& c);

// ϑ followed by reduction to R/(p^j) equals ϑ of the reduced complex.
bool theta_base_change_check(const QuadraticComplex& c, int j);

// ϑ computed from the representative with an added identity block
// [[phi, 0], [0, I_k]], read back in R^d.
RVec theta_with_identity_block(const QuadraticComplex& c, size_t k, const RingElement& a);

RVec reduce_vector(const RVec& v, const Ring& target);

}  // namespace gkit
