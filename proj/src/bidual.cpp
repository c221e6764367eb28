#include "gkit/bidual.hpp"

#include "gkit/error.hpp"
#include "gkit/exterior.hpp"

namespace gkit {

ExteriorBidual::ExteriorBidual(DualModule dual, size_t r) : dual_(std::move(dual)), r_(r) {
    PresentedModule lam = exterior_power(dual_.module, r_);
    space_ = kernel(lam.relations().transpose());
}

ExteriorBidual ExteriorBidual::of(const PresentedModule& m, size_t r) { return ExteriorBidual(gkit::dual(m), r); }

size_t ExteriorBidual::width() const { return binomial(dual_rank(), r_); }

PresentedModule ExteriorBidual::as_module() const {
    return present_subquotient(space_, Submodule::zero(space_.ring(), space_.ambient())).module;
}

RingElement apply_functional(const RVec& values_on_gens, const RVec& m) {
    require(values_on_gens.size() == m.size(), ErrorCode::ShapeMismatch, "functional length");
    const Ring& ring = m.ring();
    RingElement acc = ring.zero();
    std::vector<int64_t> out(ring.group_order(), 0);
    for (size_t j = 0; j < m.size(); ++j) ring_mul_acc(ring, m.ptr(j), values_on_gens.ptr(j), out.data());
    return RingElement(ring, std::move(out));
}

RVec ExteriorBidual::from_wedge(const std::vector<ModuleElement>& ms) const {
    require(ms.size() == r_, ErrorCode::ShapeMismatch, "wedge length must equal the rank");
    const Ring& ring = base().ring();
    const size_t s = dual_rank();
    RMatrix vals(ring, s, r_);
    for (size_t k = 0; k < s; ++k)
        for (size_t l = 0; l < r_; ++l) vals.set(k, l, apply_functional(dual_.functionals[k], ms[l].coords()));
    const auto& mons = subsets(s, r_);
    RVec a(ring, mons.size());
    std::vector<size_t> all(r_);
    for (size_t l = 0; l < r_; ++l) all[l] = l;
    for (size_t i = 0; i < mons.size(); ++i) a.set(i, determinant(vals.submatrix(mons[i], all)));
    return a;
}

RingElement ExteriorBidual::evaluate(const RVec& a, const RVec& f) const {
    require(a.size() == width() && f.size() == width(), ErrorCode::ShapeMismatch, "bidual evaluation shape");
    return apply_functional(f, a);
}

RVec wedge_coordinates(const Ring& ring, size_t t, const std::vector<RVec>& fs) {
    const size_t k = fs.size();
    RMatrix c = RMatrix::from_rows(ring, t, fs);
    const auto& mons = subsets(t, k);
    RVec out(ring, mons.size());
    std::vector<size_t> rows(k);
    for (size_t i = 0; i < k; ++i) rows[i] = i;
    for (size_t j = 0; j < mons.size(); ++j) out.set(j, determinant(c.submatrix(rows, mons[j])));
    return out;
}

RMatrix contraction_matrix(const Ring& ring, size_t t, size_t r, const RVec& f, size_t s) {
    require(s <= r, ErrorCode::RankTooLarge, "contraction degree exceeds the rank");
    const auto& top = subsets(t, r);
    const auto& js = subsets(t, s);
    const auto& ks = subsets(t, r - s);
    require(f.size() == js.size(), ErrorCode::ShapeMismatch, "functional coordinates length");
    RMatrix out(ring, top.size(), ks.size());
    for (size_t jj = 0; jj < js.size(); ++jj) {
        RingElement c = f.at(jj);
        if (c.is_zero()) continue;
        for (size_t kk = 0; kk < ks.size(); ++kk) {
            if (!disjoint(js[jj], ks[kk])) continue;
            size_t row = subset_rank(t, set_union(js[jj], ks[kk]));
            RingElement cur = out.at(row, kk);
            out.set(row, kk, merge_sign(js[jj], ks[kk]) > 0 ? cur + c : cur - c);
        }
    }
    return out;
}

RVec rank_reduce(const RVec& a, size_t t, size_t r, const RVec& f, size_t s) {
    require(s <= r, ErrorCode::RankTooLarge, "cannot contract by a wedge of larger degree");
    return contraction_matrix(a.ring(), t, r, f, s).left_multiply(a);
}

RMatrix restriction_transpose_compound(const Ring& ring, const std::vector<RVec>& restricted, size_t t, size_t r) {
    RMatrix c = RMatrix::from_rows(ring, t, restricted);
    return compound(c, r).transpose();
}

namespace {

// Restrictions of the given functionals on the ambient generators to the
// module presented by sq (generators in ambient coordinates), as ψ-coordinates.
std::vector<RVec> restrict_to(const DualModule& dn, const std::vector<RVec>& gens_in_ambient,
                              const std::vector<RVec>& ambient_functionals) {
    const Ring& ring = dn.source.ring();
    std::vector<RVec> out;
    for (const auto& phi : ambient_functionals) {
        RVec vals(ring, gens_in_ambient.size());
        for (size_t j = 0; j < gens_in_ambient.size(); ++j) vals.set(j, apply_functional(phi, gens_in_ambient[j]));
        out.push_back(dual_coordinates(dn, vals));
    }
    return out;
}

}  // namespace

Submodule embedded_bidual(const Submodule& w, size_t r) {
    const Ring& ring = w.ring();
    const size_t n = w.ambient();
    auto sq = present_subquotient(w, Submodule::zero(ring, n));
    ExteriorBidual bn = ExteriorBidual::of(sq.module, r);
    std::vector<RVec> coords;
    for (size_t i = 0; i < n; ++i) coords.push_back(RVec::unit(ring, n, i));
    auto restricted = restrict_to(bn.dual(), sq.generators, coords);
    RMatrix p = restriction_transpose_compound(ring, restricted, bn.dual_rank(), r);
    return image(bn.space(), p);
}

Submodule contraction_criterion(const Submodule& w, size_t r) {
    const Ring& ring = w.ring();
    const size_t n = w.ambient();
    const size_t width = binomial(n, r);
    if (r == 0) return Submodule::full(ring, 1);
    Submodule out = Submodule::full(ring, width);
    const auto& js = subsets(n, r - 1);
    for (size_t j = 0; j < js.size(); ++j) {
        RVec f = RVec::unit(ring, js.size(), j);
        out = out.intersect(preimage(contraction_matrix(ring, n, r, f, r - 1), w));
    }
    return out;
}

Ideal image_of_element(const RVec& a) { return Ideal::of_entries(a); }

Ideal annihilator_of_element(const RVec& a) { return annihilator_of(a.elements(), a.ring()); }

KernelBidual kernel_bidual_map(const PresentedModule& m, const std::vector<RVec>& fs, size_t r) {
    const Ring& ring = m.ring();
    const size_t s = fs.size();
    KernelBidual out;
    out.bidual_m = ExteriorBidual::of(m, r);
    const DualModule& dm = out.bidual_m.dual();
    for (const auto& f : fs)
        require(f.size() == m.gens() && dm.span.contains(f), ErrorCode::NotExact, "coordinate map is not a functional");
    RMatrix fmat = s > 0 ? RMatrix::from_rows(ring, m.gens(), fs).transpose() : RMatrix(ring, m.gens(), 0);
    out.kernel = kernel_module(ModuleMap(m, PresentedModule::free(ring, s), fmat));
    std::vector<RVec> ngens;
    for (const auto& g : out.kernel.generators) ngens.push_back(g.coords());
    out.bidual_n = ExteriorBidual::of(out.kernel.presentation, r);
    const size_t t = dm.functionals.size();

    auto pushforward = [&](const ExteriorBidual& bn, size_t rank) {
        auto restricted = restrict_to(bn.dual(), ngens, dm.functionals);
        return restriction_transpose_compound(ring, restricted, bn.dual_rank(), rank);
    };
    out.injection = pushforward(out.bidual_n, r);
    out.image_of_n = image(out.bidual_n.space(), out.injection);
    out.injective = out.image_of_n.log_size() == out.bidual_n.space().log_size();

    std::vector<RVec> fcoords;
    for (const auto& f : fs) fcoords.push_back(dual_coordinates(dm, f));
    const size_t width = binomial(t, r);
    if (r >= 1 && s > 0) {
        RMatrix diag(ring, width, 0);
        for (const auto& fc : fcoords) diag = diag.hstack(contraction_matrix(ring, t, r, fc, 1));
        out.diagonal_kernel = kernel(diag).intersect(out.bidual_m.space());
    } else {
        out.diagonal_kernel = out.bidual_m.space();
    }
    out.exact = out.diagonal_kernel == out.image_of_n;

    // Membership criterion through the image of N^{**} in M^{**}.
    if (r >= 1) {
        ExteriorBidual n1(out.bidual_n.dual(), 1);
        Submodule n_bidual_image = image(n1.space(), pushforward(n1, 1));
        Submodule crit = out.bidual_m.space();
        const auto& js = subsets(t, r - 1);
        for (size_t j = 0; j < js.size(); ++j) {
            RVec f = RVec::unit(ring, js.size(), j);
            crit = crit.intersect(preimage(contraction_matrix(ring, t, r, f, r - 1), n_bidual_image));
        }
        out.criterion = crit;
    } else {
        out.criterion = out.image_of_n;
    }
    out.criterion_matches = out.criterion == out.image_of_n;

    out.wedge_f = wedge_coordinates(ring, t, fcoords);
    out.reduced_lands_in_n = true;
    out.self_contraction_vanishes = true;
    if (s <= r) {
        ExteriorBidual nlow(out.bidual_n.dual(), r - s);
        Submodule low_image = image(nlow.space(), pushforward(nlow, r - s));
        RMatrix red = contraction_matrix(ring, t, r, out.wedge_f, s);
        Submodule reduced = image(out.bidual_m.space(), red);
        out.reduced_lands_in_n = low_image.contains(reduced);
        if (r - s >= 1) {
            for (const auto& fc : fcoords) {
                Submodule again = image(reduced, contraction_matrix(ring, t, r - s, fc, 1));
                if (!again.is_zero()) out.self_contraction_vanishes = false;
            }
        }
    }
    return out;
}

}  // namespace gkit
