#include "gkit/tower.hpp"

#include "gkit/error.hpp"
#include "gkit/fitting.hpp"

namespace gkit {

RingTower::RingTower(int p, int m_max, GroupSpec group) {
    require(m_max >= 1 && m_max <= 4, ErrorCode::DepthExceeded, "tower depth must lie in [1, 4]");
    Ring top = Ring::make(p, m_max, std::move(group));
    for (int i = 1; i <= m_max; ++i) levels_.push_back(top.quotient(i));
}

RingTower::RingTower(const Ring& top) : RingTower(top.p(), top.m(), top.group()) {}

const Ring& RingTower::level(int i) const {
    require(i >= 1 && i <= depth(), ErrorCode::DepthExceeded, "tower level out of range");
    return levels_[static_cast<size_t>(i - 1)];
}

RVec project_vec(const RVec& v, const Ring& target) {
    std::vector<int64_t> flat = v.flat();
    for (auto& x : flat) x %= target.modulus();
    return RVec(target, v.size(), std::move(flat));
}

ModuleTower::ModuleTower(RingTower rings, PresentedModule top) : rings_(std::move(rings)) {
    require(top.ring() == rings_.top(), ErrorCode::RingMismatch, "module must live over the top level");
    for (int i = 1; i < rings_.depth(); ++i) levels_.push_back(top.base_change(rings_.level(i)));
    levels_.push_back(top);
}

const PresentedModule& ModuleTower::level(int i) const {
    require(i >= 1 && i <= rings_.depth(), ErrorCode::DepthExceeded, "tower level out of range");
    return levels_[static_cast<size_t>(i - 1)];
}

bool ModuleTower::consistent() const {
    for (int i = 1; i < rings_.depth(); ++i) {
        PresentedModule down = level(i + 1).base_change(rings_.level(i));
        if (down.gens() != level(i).gens() || down.relation_span() != level(i).relation_span()) return false;
    }
    return true;
}

FittingTowerReport fitting_tower_check(const ModuleTower& t, size_t r) {
    FittingTowerReport rep;
    const int depth = t.rings().depth();
    Ideal top = fitting_ideal(t.level(depth), r);
    std::vector<Ideal> fitt(static_cast<size_t>(depth) + 1);
    for (int i = 1; i <= depth; ++i) fitt[static_cast<size_t>(i)] = fitting_ideal(t.level(i), r);
    for (int i = 1; i < depth; ++i) {
        const Ring& ri = t.rings().level(i);
        if (!fitt[static_cast<size_t>(i)].contains(fitt[static_cast<size_t>(i + 1)].image_in(ri))) rep.containment = false;
        if (fitt[static_cast<size_t>(i)] != top.image_in(ri)) rep.base_change = false;
    }
    return rep;
}

RingElement default_embedding(const Ring& upper) { return upper.constant(upper.p()); }

namespace {

int64_t ipow(int64_t b, int e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

RVec single(const RingElement& x) { return RVec::from_elements(x.ring(), {x}); }

}  // namespace

TorsionDual torsion_dual(const PresentedModule& m, const Ring& lower, const RingElement& embedding) {
    const Ring& upper = m.ring();
    const int n = lower.m();
    require(upper.m() == n + 1 && upper.group() == lower.group() && upper.p() == lower.p(), ErrorCode::RingMismatch,
            "lower ring must be the level directly below");
    require(embedding.ring() == upper, ErrorCode::RingMismatch, "embedding must live in the upper ring");
    const RingElement pn = upper.constant(ipow(upper.p(), n));
    Ideal target_ideal = Ideal::generated(upper, {embedding});
    if (target_ideal != annihilator_of({pn}, upper) || annihilator_of({embedding}, upper) != Ideal::generated(upper, {pn}))
        fail(ErrorCode::BadEmbedding, "embedding image is not the p^n-torsion of the upper ring");

    const size_t b = m.gens();
    TorsionDual out;
    Submodule torsion_lift = preimage(RMatrix::identity(upper, b).scaled(pn), m.relation_span());
    Subquotient tors = present_subquotient(torsion_lift, m.relation_span());
    out.torsion = tors.module.base_change(lower);
    DualModule dn = dual(out.torsion);
    DualModule dm = dual(m);
    out.torsion_dual = dn.module;
    out.dual_mod = dm.module.base_change(lower);
    const size_t s = tors.generators.size();
    std::vector<RVec> rows;
    for (const auto& f : dm.functionals) {
        RVec restricted(lower, s);
        for (size_t k = 0; k < s; ++k) {
            RingElement val = upper.zero();
            for (size_t j = 0; j < b; ++j) val += tors.generators[k].at(j) * f.at(j);
            auto y = solve_combination(upper, 1, {single(embedding)}, single(val));
            require(y.has_value(), ErrorCode::BadEmbedding, "restricted functional leaves the embedded image");
            restricted.set(k, lower.project(y->at(0)));
        }
        rows.push_back(dual_coordinates(dn, restricted));
    }
    out.map = ModuleMap(out.dual_mod, out.torsion_dual, RMatrix::from_rows(lower, dn.functionals.size(), rows));
    out.bijective = out.map.is_bijective() && out.dual_mod.log_size() == out.torsion_dual.log_size();
    return out;
}

bool torsion_dual_check(const PresentedModule& m, const Ring& lower, const RingElement& embedding) {
    return torsion_dual(m, lower, embedding).bijective;
}

Submodule ideal_times_free(const Ideal& j, size_t n) {
    const Ring& ring = j.ring();
    std::vector<RVec> gens;
    for (const auto& g : j.generators())
        for (size_t k = 0; k < n; ++k) gens.push_back(RVec::unit(ring, n, k).scaled(g));
    return Submodule::span(ring, n, gens);
}

TorGroup make_tor(const Submodule& cycles, const Submodule& boundaries) {
    TorGroup t;
    t.cycles = cycles;
    t.boundaries = boundaries;
    t.group = present_subquotient(cycles, boundaries);
    return t;
}

TorGroup tor1(const PresentedModule& m, const Ideal& j) {
    const RMatrix& rel = m.relations();
    const size_t a = rel.rows();
    return make_tor(preimage(rel, ideal_times_free(j, m.gens())), kernel(rel) + ideal_times_free(j, a));
}

RVec tor_coordinates(const TorGroup& t, const RVec& cycle) {
    std::vector<RVec> gens = t.group.generators;
    const size_t s = gens.size();
    for (const auto& z : t.boundaries.zgenerators()) gens.push_back(z);
    auto c = solve_combination(cycle.ring(), cycle.size(), gens, cycle);
    require(c.has_value(), ErrorCode::NotExact, "vector is not a cycle");
    std::vector<size_t> head(s);
    for (size_t i = 0; i < s; ++i) head[i] = i;
    return c->select(head);
}

namespace {

Ideal ideal_image(const std::vector<RingElement>& gens, const Ring& ring) {
    std::vector<RingElement> xs;
    for (const auto& g : gens) xs.push_back(ring.project(g));
    return Ideal::generated(ring, xs);
}

// Map between subquotients given by a matrix on lifts.
ModuleMap induced(const TorGroup& src, const TorGroup& dst, const RMatrix& on_lifts) {
    std::vector<RVec> rows;
    for (const auto& g : src.group.generators) rows.push_back(tor_coordinates(dst, on_lifts.left_multiply(g)));
    return ModuleMap(src.group.module, dst.group.module,
                     RMatrix::from_rows(dst.cycles.ring(), dst.group.generators.size(), rows));
}

}  // namespace

TorTransitionReport tor_transition_check(const ModuleTower& t, const std::vector<RingElement>& j_top) {
    TorTransitionReport rep;
    const int depth = t.rings().depth();
    for (int i = 1; i <= depth; ++i) {
        const Ring& ri = t.rings().level(i);
        const PresentedModule& mi = t.level(i);
        TorGroup ti = tor1(mi, ideal_image(j_top, ri));
        rep.tor_log_sizes.push_back(ti.group.module.log_size());
        Ideal f0 = fitting_ideal(mi, 0);
        for (const auto& f : f0.generators())
            for (const auto& g : ti.group.generators)
                if (!ti.boundaries.contains(g.scaled(f))) rep.fitting_kills = false;
    }
    for (int n = 1; n < depth; ++n) {
        const Ring& up = t.rings().level(n + 1);
        const Ring& lo = t.rings().level(n);
        const PresentedModule& m_up = t.level(n + 1);
        const RMatrix& rel = m_up.relations();
        const size_t a = rel.rows();
        const size_t b = m_up.gens();
        Ideal j_up = ideal_image(j_top, up);
        Ideal j_lo = ideal_image(j_top, lo);
        Ideal pn = Ideal::generated(up, {up.constant(ipow(up.p(), n))});
        Ideal jp = j_up + pn;

        TorGroup top = tor1(m_up, j_up);
        // An independent presentation at the lower level and its comparison matrix.
        PresentedModule m_lo = PresentedModule::from_relations(lo, b, m_up.base_change(lo).relation_span());
        const RMatrix& rel_lo = m_lo.relations();
        std::vector<RVec> crow;
        for (size_t i = 0; i < a; ++i) {
            auto c = solve_combination(lo, b, rel_lo.row_list(), project_vec(rel.row(i), lo));
            require(c.has_value(), ErrorCode::NotExact, "comparison matrix does not exist");
            crow.push_back(*c);
        }
        RMatrix cmp = RMatrix::from_rows(lo, rel_lo.rows(), crow);
        TorGroup bottom = tor1(m_lo, j_lo);

        // Lift-based descriptions inside R_{n+1}^a.
        TorGroup bottom_lift = make_tor(preimage(rel, ideal_times_free(jp, b)),
                                        preimage(rel, ideal_times_free(pn, b)) + ideal_times_free(jp, a));
        TorGroup alpha_src = make_tor(preimage(rel, ideal_times_free(pn, b)), kernel(rel) + ideal_times_free(pn, a));
        TorGroup alpha_dst = make_tor(preimage(rel, ideal_times_free(jp, b)),
                                      preimage(rel, ideal_times_free(j_up, b)) + ideal_times_free(jp, a));
        if (bottom_lift.group.module.log_size() != bottom.group.module.log_size()) rep.cardinality_match = false;

        ModuleMap trans, alpha, trans_lift;
        try {
            // Reduce coordinates then compare presentations.
            std::vector<RVec> rows;
            for (const auto& g : top.group.generators) rows.push_back(tor_coordinates(bottom, cmp.left_multiply(project_vec(g, lo))));
            // Tor_{n+1} is mapped through Tor_{n+1} ⊗ R_n, which has the same image.
            trans = ModuleMap(top.group.module.base_change(lo), bottom.group.module,
                              RMatrix::from_rows(lo, bottom.group.generators.size(), rows));
            alpha = induced(alpha_src, alpha_dst, RMatrix::identity(up, a));
            trans_lift = induced(top, bottom_lift, RMatrix::identity(up, a));
        } catch (const Error&) {
            rep.well_defined = false;
            continue;
        }

        // H^0(P ⊗ S_{n+1}) → Tor_{n+1} → Tor_n against H^0(P ⊗ S_{n+1}) → H^0(P' ⊗ S_n) → Tor_n.
        for (const auto& z : top.cycles.zgenerators()) {
            RVec via_top = trans.apply(trans.source().element(project_vec(tor_coordinates(top, z), lo))).coords();
            RVec direct = tor_coordinates(bottom, cmp.left_multiply(project_vec(z, lo)));
            if (bottom.group.module.element(via_top) != bottom.group.module.element(direct)) rep.square_commutes = false;
        }

        int64_t coker_trans = bottom.group.module.log_size() - trans.image_log_size();
        int64_t coker_lift = bottom_lift.group.module.log_size() - trans_lift.image_log_size();
        int64_t coker_alpha = alpha_dst.group.module.log_size() - alpha.image_log_size();
        if (coker_trans != coker_alpha || coker_lift != coker_alpha) rep.cokernel_match = false;
    }
    return rep;
}

}  // namespace gkit
