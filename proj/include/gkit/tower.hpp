#pragma once

#include <vector>

#include "gkit/module.hpp"

namespace gkit {

// R_i = (Z/p^i)[G] for 1 <= i <= m_max, linked by coefficient reduction.
class RingTower {
public:
    RingTower() = default;
    // DepthExceeded unless 1 <= m_max <= 4.
    RingTower(int p, int m_max, GroupSpec group);
    explicit RingTower(const Ring& top);

    int depth() const { return static_cast<int>(levels_.size()); }
    const Ring& level(int i) const;
    const Ring& top() const { return levels_.back(); }

private:
    std::vector<Ring> levels_;
};

RVec project_vec(const RVec& v, const Ring& target);

// M over the top level and M_i = M ⊗ R_i.
class ModuleTower {
public:
    ModuleTower() = default;
    ModuleTower(RingTower rings, PresentedModule top);

    const RingTower& rings() const { return rings_; }
    const PresentedModule& level(int i) const;
    // M_{i+1} ⊗ R_i has the same relation span as M_i for every i.
    bool consistent() const;

private:
    RingTower rings_;
    std::vector<PresentedModule> levels_;
};

struct FittingTowerReport {
    bool containment = true;   // image of Fitt^r(M_{i+1}) ⊆ Fitt^r(M_i)
    bool base_change = true;   // Fitt^r(M ⊗ R_i) = image of Fitt^r(M)
    bool ok() const { return containment && base_change; }
};

FittingTowerReport fitting_tower_check(const ModuleTower& t, size_t r);

// 1 ↦ p, the smallest generator of R_{n+1}[p^n].
RingElement default_embedding(const Ring& upper);

struct TorsionDual {
    PresentedModule torsion;      // M[p^n] as an R_n-module
    PresentedModule torsion_dual; // (M[p^n])^*
    PresentedModule dual_mod;     // M^*/p^n M^*
    ModuleMap map;                // restriction, divided through the embedding
    bool bijective = false;
};

// m over R_{n+1}, lower = R_n; BadEmbedding unless the embedding generates
// R_{n+1}[p^n] with annihilator p^n R_{n+1}.
TorsionDual torsion_dual(const PresentedModule& m, const Ring& lower, const RingElement& embedding);
bool torsion_dual_check(const PresentedModule& m, const Ring& lower, const RingElement& embedding);

// Tor_1^R(M, R/J) for the presentation of m, as cycles/boundaries in R^{relations}.
struct TorGroup {
    Submodule cycles;
    Submodule boundaries;
    Subquotient group;
};

TorGroup tor1(const PresentedModule& m, const Ideal& j);
// Subquotient built from explicit cycles and boundaries.
TorGroup make_tor(const Submodule& cycles, const Submodule& boundaries);
// J·R^n.
Submodule ideal_times_free(const Ideal& j, size_t n);
// Coordinates of a cycle in terms of t.group.generators.
RVec tor_coordinates(const TorGroup& t, const RVec& cycle);

struct TorTransitionReport {
    bool well_defined = true;
    bool cardinality_match = true;  // Tor^{R_n}(M_n, S_n) computed over R_n and via lifts
    bool square_commutes = true;
    bool cokernel_match = true;     // |coker transition| = |coker α|
    bool fitting_kills = true;      // Fitt^0(M_i)·Tor_1(M_i, S_i) = 0
    std::vector<int64_t> tor_log_sizes;  // by level, 1..depth
    bool ok() const { return well_defined && cardinality_match && square_commutes && cokernel_match && fitting_kills; }
};

// S_i = R_i / (image of j_top).
TorTransitionReport tor_transition_check(const ModuleTower& t, const std::vector<RingElement>& j_top);

}  // namespace gkit
