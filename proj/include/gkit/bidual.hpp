#pragma once

#include <vector>

#include "gkit/module.hpp"

namespace gkit {

// ∩^r M = Hom(Λ^r M^*, R). With φ_1..φ_s the chosen generators of M^*, an
// element a is stored as its values a(φ_I) on the wedge monomials φ_I
// (I an r-subset of [s], lexicographic order), so ∩^r M sits inside R^{C(s,r)}.
class ExteriorBidual {
public:
    ExteriorBidual() = default;
    ExteriorBidual(DualModule dual, size_t r);
    static ExteriorBidual of(const PresentedModule& m, size_t r);

    const DualModule& dual() const { return dual_; }
    const PresentedModule& base() const { return dual_.source; }
    size_t rank() const { return r_; }
    size_t dual_rank() const { return dual_.functionals.size(); }
    size_t width() const;

    const Submodule& space() const { return space_; }
    PresentedModule as_module() const;
    std::vector<RVec> generators() const { return space_.minimal_generators(); }
    bool contains(const RVec& a) const { return space_.contains(a); }

    // Canonical map Λ^r M → ∩^r M: a(φ_I) = det(φ_{I_k}(m_l)).
    RVec from_wedge(const std::vector<ModuleElement>& ms) const;
    // a(f) for f given by coefficients over the r-subsets of [s].
    RingElement evaluate(const RVec& a, const RVec& f) const;

private:
    DualModule dual_;
    size_t r_ = 0;
    Submodule space_;
};

// Value of the functional with dual coordinates c (length s) at m.
RingElement apply_functional(const RVec& values_on_gens, const RVec& m);

// Coefficients over k-subsets of [t] of the wedge of k functionals, each
// given by coordinates of length t.
RVec wedge_coordinates(const Ring& ring, size_t t, const std::vector<RVec>& fs);

// Matrix of a ↦ f(a) where (f a)_K = a(f ∧ φ_K): rows indexed by r-subsets,
// columns by (r-s)-subsets of [t]; f has coefficients over s-subsets.
RMatrix contraction_matrix(const Ring& ring, size_t t, size_t r, const RVec& f, size_t s);

// Rank reduction; RankTooLarge if s > r.
RVec rank_reduce(const RVec& a, size_t t, size_t r, const RVec& f, size_t s);

// Matrix sending values on ψ-monomials (dual generators of N) to values on
// φ-monomials (dual generators of M), given each φ_k restricted to N written
// in ψ-coordinates.
RMatrix restriction_transpose_compound(const Ring& ring, const std::vector<RVec>& restricted, size_t t, size_t r);

// Image of ∩^r W → Λ^r R^n = R^{C(n,r)} for a submodule W ⊆ R^n.
Submodule embedded_bidual(const Submodule& w, size_t r);

// The set {a ∈ Λ^r R^n : e_J^*(a) ∈ W for every (r-1)-subset J}.
Submodule contraction_criterion(const Submodule& w, size_t r);

Ideal image_of_element(const RVec& a);
Ideal annihilator_of_element(const RVec& a);

struct KernelBidual {
    ExteriorBidual bidual_m;
    ExteriorBidual bidual_n;
    KernelData kernel;
    RMatrix injection;        // ∩^r N → ∩^r M on value coordinates
    Submodule image_of_n;     // image of the injection
    Submodule diagonal_kernel;  // ker of a ↦ (f_i(a))_i on ∩^r M
    Submodule criterion;      // a with φ_J(a) in the image of N^{**} for all J
    RVec wedge_f;             // ∧ f_i in φ-monomial coordinates
    bool injective = false;
    bool exact = false;
    bool criterion_matches = false;
    bool reduced_lands_in_n = false;
    bool self_contraction_vanishes = false;
};

// Data 0 → N → M → R^s with coordinate maps f_i (given by values on the
// generators of M). NotExact if some f_i is not a functional on M.
KernelBidual kernel_bidual_map(const PresentedModule& m, const std::vector<RVec>& fs, size_t r);

}  // namespace gkit
