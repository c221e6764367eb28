#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gkit/submodule.hpp"

namespace gkit {

class ModuleElement;

// M = R^b / (row span of the relation matrix). Copies share immutable state.
class PresentedModule {
public:
    PresentedModule() = default;
    PresentedModule(Ring ring, size_t gens, RMatrix relations);
    static PresentedModule free(const Ring& ring, size_t n);
    // Relation rows are chosen as minimal generators of rel.
    static PresentedModule from_relations(const Ring& ring, size_t gens, const Submodule& rel);
    // R/I.
    static PresentedModule cyclic(const Ideal& ideal);

    const Ring& ring() const;
    size_t gens() const;
    const RMatrix& relations() const;
    const Submodule& relation_span() const;

    // log_p |M|.
    int64_t log_size() const;
    std::optional<uint64_t> cardinality() const;
    bool is_zero() const { return log_size() == 0; }
    // dim over F_p of M ⊗ F_p.
    size_t min_generators() const;

    ModuleElement element(const RVec& v) const;
    ModuleElement zero() const;
    ModuleElement generator(size_t i) const;

    // Same generators with extra relations.
    PresentedModule quotient(const std::vector<RVec>& extra) const;
    // M ⊗ R' for a coefficient quotient R' of the ring.
    PresentedModule base_change(const Ring& target) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

class ModuleElement {
public:
    ModuleElement() = default;
    ModuleElement(PresentedModule m, const RVec& v);

    const PresentedModule& module() const { return m_; }
    // Coordinates in normal form.
    const RVec& coords() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }

    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement operator-(const ModuleElement& o) const;
    ModuleElement scaled(const RingElement& r) const;
    bool operator==(const ModuleElement& o) const { return v_ == o.v_; }
    bool operator!=(const ModuleElement& o) const { return !(*this == o); }

private:
    PresentedModule m_;
    RVec v_;
};

class ModuleMap {
public:
    ModuleMap() = default;
    // Throws NotExact if a source relation does not map into the target relations.
    ModuleMap(PresentedModule source, PresentedModule target, RMatrix matrix);

    const PresentedModule& source() const { return src_; }
    const PresentedModule& target() const { return tgt_; }
    const RMatrix& matrix() const { return a_; }

    ModuleElement apply(const ModuleElement& x) const;
    // Image as a submodule of R^{b_target}, containing the target relations.
    Submodule image_lift() const;
    int64_t image_log_size() const;
    bool is_surjective() const;
    bool is_injective() const;
    bool is_bijective() const { return is_injective() && is_surjective(); }
    ModuleMap then(const ModuleMap& g) const;

private:
    PresentedModule src_, tgt_;
    RMatrix a_;
};

struct Subquotient {
    std::vector<RVec> generators;  // in R^n, generating W/U
    PresentedModule module;
};

// Presentation of W/U for U ⊆ W ⊆ R^n.
Subquotient present_subquotient(const Submodule& w, const Submodule& u);

struct KernelData {
    std::vector<ModuleElement> generators;
    PresentedModule presentation;
    Submodule lift;  // preimage of ker f in R^{b_source}
};

KernelData kernel_module(const ModuleMap& f);

struct DualModule {
    PresentedModule source;
    // Generators of Hom(M, R), each given by its values on the generators of M.
    std::vector<RVec> functionals;
    Submodule span;  // all functionals, as a submodule of R^b
    PresentedModule module;
};

DualModule dual(const PresentedModule& m);
// Express a functional (values on generators of M) in terms of d.functionals.
RVec dual_coordinates(const DualModule& d, const RVec& functional);
ModuleMap biduality_map(const PresentedModule& m);

PresentedModule exterior_power(const PresentedModule& m, size_t r);
PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b);
PresentedModule tensor(const PresentedModule& a, const PresentedModule& b);
PresentedModule hom(const PresentedModule& a, const PresentedModule& b);

// Some r with r·x != 0 and g·r·x = 0 for each maximal-ideal generator g.
RingElement socle_multiplier(const ModuleElement& x);

// Direct sum of submodules (block placement).
Submodule direct_sum(const std::vector<Submodule>& parts);

}  // namespace gkit
