#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gkit/complex.hpp"

namespace gkit {

// Subsets of the vertex set Q = {0 ≺ 1 ≺ ... ≺ q-1} as bit masks.
using VertexSet = uint32_t;

std::vector<size_t> vertex_list(VertexSet s);
size_t vertex_count(VertexSet s);

// sgn(S', S): (∧_{S'∖S} v) ∧ (∧_S v) = sgn(S', S)·∧_{S'} v. NotASubset unless S ⊆ S'.
int stark_sign(VertexSet sprime, VertexSet s);

// Column-adjunction family: C_S = [phi0; h_v (v ∈ S, in ≺ order)] : R^{d0+|S|} → R^e.
struct StarkFamily {
    QuadraticComplex base;
    std::vector<RVec> columns;

    const Ring& ring() const { return base.ring(); }
    size_t vertices() const { return columns.size(); }
    VertexSet top() const { return static_cast<VertexSet>((1u << columns.size()) - 1); }
    long rank() const { return base.rank(); }
    size_t width(VertexSet s) const { return base.d() + vertex_count(s); }
    // Row of vertex v in C_S.
    size_t position(VertexSet s, size_t v) const;
    QuadraticComplex complex(VertexSet s) const;
};

void validate_family(const StarkFamily& f);

// ∩^r ker(phi) inside Λ^r R^d: the a whose contractions e_J^*(a) all lie in ker(phi).
Submodule bidual_of_kernel(const RMatrix& phi, size_t r);

// sgn(S', S)·(∧_{v∈S'∖S} f_v) on Λ^{r+|S'|} R^{n_{S'}} → Λ^{r+|S|} R^{n_S}.
RMatrix stark_transition(const StarkFamily& f, VertexSet sprime, VertexSet s);

// Indexed by vertex set.
using StarkSystem = std::vector<RVec>;

struct StarkSpace {
    std::vector<size_t> offsets;  // start of each component in the product
    size_t width = 0;
    Submodule space;              // systems inside ⊕_S Λ^{r+|S|} R^{n_S}
    std::vector<StarkSystem> generators;
};

// Faithful solve of the compatibility system over the whole lattice.
StarkSpace stark_space_lattice(const StarkFamily& f);
// Every system is determined by its top component.
StarkSpace stark_space(const StarkFamily& f);

StarkSystem stark_from_top(const StarkFamily& f, const RVec& top);
RVec flatten(const StarkSpace& sp, const StarkSystem& c);
bool is_stark_system(const StarkFamily& f, const StarkSystem& c);

// Transition isomorphism Det(C_{S'}) → Det(C_S) on canonical bases.
int det_transition_sign(const StarkFamily& f, VertexSet sprime, VertexSet s);
// a indexed by vertex set; IncompatibleFamily if the a_S do not match.
StarkSystem det_to_stark(const StarkFamily& f, const std::vector<RingElement>& a);

// psi[v] is a functional on R^{n_Q}; restricted to R^{n_S} it acts on M_S.
StarkSystem regulator(const StarkFamily& f, const std::vector<RVec>& psi, const StarkSystem& eps);

// (P5) for every covering pair S ⊂ S ∪ {v}.
bool family_exactness_check(const StarkFamily& f);

// Per-family data shared by the core checks.
class StarkCore {
public:
    explicit StarkCore(StarkFamily f);

    const StarkFamily& family() const { return f_; }
    const StarkSpace& space() const { return space_; }
    VertexSet stabilizing() const { return stab_; }
    const Ideal& char_omega() const { return char_omega_; }

    struct Report {
        VertexSet stabilizing = 0;
        bool stabilizer_found = false;
        bool fitting_kills_kernel = false;
        bool image_in_char = false;
        bool theta_bound = false;
        bool fitting_bound = false;
        bool ok() const { return stabilizer_found && fitting_kills_kernel && image_in_char && theta_bound && fitting_bound; }
    };
    Report verify(const StarkSystem& eps) const;

private:
    StarkFamily f_;
    StarkSpace space_;
    VertexSet stab_ = 0;
    bool stab_found_ = false;
    bool kernel_killed_ = false;
    Ideal char_omega_;
    Ideal fitt_top_;     // Fitt^0(H^1(C_∅)/Ω) = Fitt^0(H^1(C_Q))
    Ideal fitt_base_;    // Fitt^0(H^1(C_∅))
    Submodule theta_line_;
};

}  // namespace gkit
