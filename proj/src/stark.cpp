#include "gkit/stark.hpp"

#include <bit>

#include "gkit/error.hpp"
#include "gkit/exterior.hpp"

namespace gkit {

std::vector<size_t> vertex_list(VertexSet s) {
    std::vector<size_t> out;
    for (size_t v = 0; v < 32; ++v)
        if (s & (1u << v)) out.push_back(v);
    return out;
}

size_t vertex_count(VertexSet s) { return static_cast<size_t>(std::popcount(s)); }

int stark_sign(VertexSet sprime, VertexSet s) {
    require((s & ~sprime) == 0, ErrorCode::NotASubset, "sgn(S', S) needs S ⊆ S'");
    return merge_sign(vertex_list(sprime & ~s), vertex_list(s));
}

size_t StarkFamily::position(VertexSet s, size_t v) const {
    require(s & (1u << v), ErrorCode::NotASubset, "vertex not in the set");
    return base.d() + vertex_count(s & ((1u << v) - 1));
}

QuadraticComplex StarkFamily::complex(VertexSet s) const {
    std::vector<RVec> rows;
    for (size_t i = 0; i < base.d(); ++i) rows.push_back(base.phi().row(i));
    for (size_t v : vertex_list(s)) rows.push_back(columns[v]);
    return QuadraticComplex(ring(), rows.size(), base.e(), RMatrix::from_rows(ring(), base.e(), rows));
}

void validate_family(const StarkFamily& f) {
    require(f.rank() >= 0, ErrorCode::ShapeMismatch, "family needs d0 >= e");
    require(f.vertices() <= 16, ErrorCode::ShapeMismatch, "too many vertices");
    for (const auto& h : f.columns) {
        require(h.ring() == f.ring(), ErrorCode::RingMismatch, "column over another ring");
        require(h.size() == f.base.e(), ErrorCode::ShapeMismatch, "column length must be e");
    }
}

Submodule bidual_of_kernel(const RMatrix& phi, size_t r) {
    const Ring& ring = phi.ring();
    const size_t d = phi.rows();
    const size_t width = binomial(d, r);
    if (r == 0) return Submodule::full(ring, 1);
    if (r > d) return Submodule::zero(ring, 0);
    if (phi.cols() == 0) return Submodule::full(ring, width);
    const auto& js = subsets(d, r - 1);
    RMatrix big(ring, width, 0);
    for (size_t j = 0; j < js.size(); ++j) {
        RMatrix c = contraction_matrix(ring, d, r, RVec::unit(ring, js.size(), j), r - 1);
        big = big.hstack(c * phi);
    }
    return kernel(big);
}

RMatrix stark_transition(const StarkFamily& f, VertexSet sprime, VertexSet s) {
    int sg = stark_sign(sprime, s);
    const Ring& ring = f.ring();
    const size_t r = static_cast<size_t>(f.rank());
    const size_t nbig = f.width(sprime), nsmall = f.width(s);
    const size_t kbig = r + vertex_count(sprime), ksmall = r + vertex_count(s);
    // Positions in the S' numbering of the coordinates of R^{n_S}.
    std::vector<size_t> embed(nsmall);
    for (size_t i = 0; i < f.base.d(); ++i) embed[i] = i;
    for (size_t v : vertex_list(s)) embed[f.position(s, v)] = f.position(sprime, v);
    Subset removed;
    for (size_t v : vertex_list(sprime & ~s)) removed.push_back(f.position(sprime, v));

    const auto& small = subsets(nsmall, ksmall);
    RMatrix t(ring, binomial(nbig, kbig), small.size());
    for (size_t k = 0; k < small.size(); ++k) {
        Subset kb;
        for (size_t x : small[k]) kb.push_back(embed[x]);
        int sign = sg * merge_sign(removed, kb);
        size_t row = subset_rank(nbig, set_union(removed, kb));
        t.set(row, k, sign > 0 ? ring.one() : -ring.one());
    }
    return t;
}

namespace {

StarkSpace empty_layout(const StarkFamily& f) {
    StarkSpace sp;
    const size_t r = static_cast<size_t>(f.rank());
    for (VertexSet s = 0; s <= f.top(); ++s) {
        sp.offsets.push_back(sp.width);
        sp.width += binomial(f.width(s), r + vertex_count(s));
    }
    return sp;
}

StarkSystem split(const StarkSpace& sp, const StarkFamily& f, const RVec& flat) {
    StarkSystem out;
    for (VertexSet s = 0; s <= f.top(); ++s) {
        size_t start = sp.offsets[s], end = s + 1 < sp.offsets.size() ? sp.offsets[s + 1] : sp.width;
        std::vector<size_t> idx;
        for (size_t i = start; i < end; ++i) idx.push_back(i);
        out.push_back(flat.select(idx));
    }
    return out;
}

Submodule component(const StarkFamily& f, VertexSet s) {
    return bidual_of_kernel(f.complex(s).phi(), static_cast<size_t>(f.rank()) + vertex_count(s));
}

}  // namespace

RVec flatten(const StarkSpace& sp, const StarkSystem& c) {
    RVec out(c.front().ring(), 0);
    for (const auto& x : c) out = out.concat(x);
    require(out.size() == sp.width, ErrorCode::ShapeMismatch, "system does not match the layout");
    return out;
}

StarkSpace stark_space_lattice(const StarkFamily& f) {
    validate_family(f);
    const Ring& ring = f.ring();
    StarkSpace sp = empty_layout(f);
    std::vector<Submodule> parts;
    for (VertexSet s = 0; s <= f.top(); ++s) parts.push_back(component(f, s));
    Submodule product = direct_sum(parts);

    // Block column per covering pair S ⊂ S ∪ {v}: T(c_{S∪v}) - c_S.
    RMatrix constraints(ring, sp.width, 0);
    for (VertexSet s = 0; s <= f.top(); ++s)
        for (size_t v = 0; v < f.vertices(); ++v) {
            if (s & (1u << v)) continue;
            VertexSet sp2 = s | (1u << v);
            RMatrix t = stark_transition(f, sp2, s);
            RMatrix block(ring, sp.width, t.cols());
            for (size_t i = 0; i < t.rows(); ++i)
                for (size_t j = 0; j < t.cols(); ++j) block.set(sp.offsets[sp2] + i, j, t.at(i, j));
            for (size_t j = 0; j < t.cols(); ++j) block.set(sp.offsets[s] + j, j, block.at(sp.offsets[s] + j, j) - ring.one());
            constraints = constraints.hstack(block);
        }
    sp.space = constraints.cols() == 0 ? product : kernel(constraints).intersect(product);
    for (const auto& g : sp.space.minimal_generators()) sp.generators.push_back(split(sp, f, g));
    return sp;
}

StarkSystem stark_from_top(const StarkFamily& f, const RVec& top) {
    StarkSystem out;
    for (VertexSet s = 0; s <= f.top(); ++s)
        out.push_back(s == f.top() ? top : stark_transition(f, f.top(), s).left_multiply(top));
    return out;
}

StarkSpace stark_space(const StarkFamily& f) {
    validate_family(f);
    StarkSpace sp = empty_layout(f);
    Submodule top = component(f, f.top());
    std::vector<RVec> flat;
    for (const auto& g : top.minimal_generators()) {
        StarkSystem c = stark_from_top(f, g);
        sp.generators.push_back(c);
        flat.push_back(flatten(sp, c));
    }
    sp.space = Submodule::span(f.ring(), sp.width, flat);
    return sp;
}

bool is_stark_system(const StarkFamily& f, const StarkSystem& c) {
    if (c.size() != static_cast<size_t>(f.top()) + 1) return false;
    for (VertexSet s = 0; s <= f.top(); ++s)
        if (!component(f, s).contains(c[s])) return false;
    for (VertexSet s = 0; s <= f.top(); ++s)
        for (size_t v = 0; v < f.vertices(); ++v) {
            if (s & (1u << v)) continue;
            VertexSet s2 = s | (1u << v);
            if (stark_transition(f, s2, s).left_multiply(c[s2]) != c[s]) return false;
        }
    return true;
}

int det_transition_sign(const StarkFamily& f, VertexSet sprime, VertexSet s) {
    require((s & ~sprime) == 0, ErrorCode::NotASubset, "transition needs S ⊆ S'");
    return (f.base.d() * vertex_count(sprime & ~s)) % 2 == 1 ? -1 : 1;
}

StarkSystem det_to_stark(const StarkFamily& f, const std::vector<RingElement>& a) {
    require(a.size() == static_cast<size_t>(f.top()) + 1, ErrorCode::ShapeMismatch, "one determinant element per vertex set");
    for (VertexSet s = 0; s <= f.top(); ++s)
        for (size_t v = 0; v < f.vertices(); ++v) {
            if (s & (1u << v)) continue;
            VertexSet s2 = s | (1u << v);
            RingElement image = det_transition_sign(f, s2, s) > 0 ? a[s2] : -a[s2];
            require(image == a[s], ErrorCode::IncompatibleFamily, "determinant family is not compatible");
        }
    StarkSystem out;
    for (VertexSet s = 0; s <= f.top(); ++s) out.push_back(theta(f.complex(s), a[s]));
    return out;
}

StarkSystem regulator(const StarkFamily& f, const std::vector<RVec>& psi, const StarkSystem& eps) {
    require(psi.size() == f.vertices(), ErrorCode::ShapeMismatch, "one functional per vertex");
    const Ring& ring = f.ring();
    const size_t r = static_cast<size_t>(f.rank());
    StarkSystem out;
    for (VertexSet s = 0; s <= f.top(); ++s) {
        const size_t n = f.width(s);
        std::vector<size_t> coords;
        for (size_t i = 0; i < f.base.d(); ++i) coords.push_back(i);
        for (size_t v : vertex_list(s)) coords.push_back(f.position(f.top(), v));
        std::vector<RVec> fs;
        for (size_t v : vertex_list(s)) fs.push_back(psi[v].select(coords));
        RVec w = wedge_coordinates(ring, n, fs);
        out.push_back(rank_reduce(eps[s], n, r + vertex_count(s), w, vertex_count(s)));
    }
    return out;
}

bool family_exactness_check(const StarkFamily& f) {
    const Ring& ring = f.ring();
    for (VertexSet s = 0; s <= f.top(); ++s)
        for (size_t v = 0; v < f.vertices(); ++v) {
            if (s & (1u << v)) continue;
            VertexSet s2 = s | (1u << v);
            QuadraticComplex cs = f.complex(s), cs2 = f.complex(s2);
            Submodule ms = cs.h0(), ms2 = cs2.h0();
            size_t p = f.position(s2, v);
            // M_S ↪ M_{S'} as the vectors with zero v-coordinate.
            std::vector<RVec> emb;
            for (const auto& g : ms.minimal_generators()) {
                RVec x(ring, f.width(s2));
                for (size_t i = 0, j = 0; i < f.width(s2); ++i)
                    if (i != p) x.set(i, g.at(j++));
                emb.push_back(x);
            }
            Submodule ms_in = Submodule::span(ring, f.width(s2), emb);
            RMatrix fv(ring, f.width(s2), 1);
            fv.set(p, 0, ring.one());
            if (ms_in != ms2.intersect(kernel(fv))) return false;
            // im(f_v) = ker(g_{S,v}: R → Z_S).
            Ideal im_f(image(ms2, fv));
            Submodule rel = image(cs.phi());
            Ideal ker_g(preimage(RMatrix::from_rows(ring, f.base.e(), {f.columns[v]}), rel));
            if (im_f != ker_g) return false;
            // |M_S|·|R|·|Z_{S'}| = |M_{S'}|·|Z_S|·... alternating product.
            int64_t lhs = ms.log_size() + ring.log_cardinality() + cs2.h1().log_size();
            int64_t rhs = ms2.log_size() + cs.h1().log_size();
            if (lhs != rhs) return false;
        }
    return true;
}

StarkCore::StarkCore(StarkFamily f) : f_(std::move(f)) {
    space_ = stark_space(f_);
    const Ring& ring = f_.ring();
    const size_t e = f_.base.e();
    const size_t r = static_cast<size_t>(f_.rank());
    Submodule base_rel = image(f_.base.phi());
    auto span_with = [&](VertexSet s) {
        std::vector<RVec> gens = base_rel.minimal_generators();
        for (size_t v : vertex_list(s)) gens.push_back(f_.columns[v]);
        return Submodule::span(ring, e, gens);
    };
    Submodule omega_full = span_with(f_.top());
    // Smallest S (by size, then value) whose columns already span Ω.
    stab_found_ = false;
    for (size_t k = 0; k <= f_.vertices() && !stab_found_; ++k)
        for (VertexSet s = 0; s <= f_.top(); ++s)
            if (vertex_count(s) == k && span_with(s) == omega_full) {
                stab_ = s;
                stab_found_ = true;
                break;
            }
    for (VertexSet s = stab_; stab_found_ && s <= f_.top(); ++s)
        if ((s & stab_) == stab_ && span_with(s) != omega_full) stab_found_ = false;

    // Fitt^{r+|S|}(M_S^*) kills ker(SS^r → ∩^{r+|S|} M_S).
    Submodule top = component(f_, f_.top());
    Submodule ker = stab_ == f_.top() ? Submodule::zero(ring, top.ambient())
                                      : top.intersect(kernel(stark_transition(f_, f_.top(), stab_)));
    QuadraticComplex cs = f_.complex(stab_);
    Ideal fitt = fitting_ideal(cs.h0_dual_by_transpose(), r + vertex_count(stab_));
    kernel_killed_ = true;
    for (const auto& z : fitt.generators())
        if (!ker.scaled(z).is_zero()) kernel_killed_ = false;

    auto omega = present_subquotient(omega_full, base_rel);
    char_omega_ = characteristic_ideal(omega.module);
    fitt_top_ = fitting_ideal(f_.complex(f_.top()).h1(), 0);
    fitt_base_ = fitting_ideal(f_.base.h1(), 0);
    theta_line_ = Submodule::span(ring, binomial(f_.base.d(), r), {theta(f_.base, ring.one())});
}

StarkCore::Report StarkCore::verify(const StarkSystem& eps) const {
    Report rep;
    rep.stabilizing = stab_;
    rep.stabilizer_found = stab_found_;
    rep.fitting_kills_kernel = kernel_killed_;
    const RVec& c0 = eps.front();
    Ideal im = image_of_element(c0);
    rep.image_in_char = char_omega_.contains(im);
    rep.theta_bound = true;
    for (const auto& z : fitt_top_.generators())
        if (!theta_line_.contains(c0.scaled(z))) rep.theta_bound = false;
    Ideal reflexive = fitt_base_.annihilator().annihilator();
    rep.fitting_bound = reflexive.contains(fitt_top_ * im);
    return rep;
}

}  // namespace gkit
