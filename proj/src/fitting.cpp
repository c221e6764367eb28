#include "gkit/fitting.hpp"

#include "gkit/bidual.hpp"
#include "gkit/error.hpp"
#include "gkit/exterior.hpp"

namespace gkit {

Ideal minor_ideal(const RMatrix& rel, size_t k) {
    const Ring& ring = rel.ring();
    if (k == 0) return Ideal::whole(ring);
    if (k > rel.cols() || k > rel.rows()) return Ideal::zero(ring);
    const auto& rs = subsets(rel.rows(), k);
    const auto& cs = subsets(rel.cols(), k);
    ZMatrix acc(ring.zmod(), 0, ring.group_order());
    HowellBasis basis(acc);
    std::vector<RVec> batch;
    auto flush = [&]() {
        if (batch.empty()) return;
        basis = HowellBasis(basis.matrix().vstack(expand_span(ring, 1, batch)));
        batch.clear();
    };
    for (const auto& r : rs) {
        for (const auto& c : cs) {
            RingElement d = determinant(rel.submatrix(r, c));
            if (d.is_zero()) continue;
            if (d.is_unit()) return Ideal::whole(ring);
            if (basis.contains(d.coeffs())) continue;
            batch.push_back(RVec::from_elements(ring, {d}));
            if (batch.size() >= 16) flush();
        }
    }
    flush();
    return Ideal(Submodule::from_zspan(ring, 1, basis.matrix()));
}

Ideal fitting_ideal(const PresentedModule& m, size_t i) {
    const size_t n = m.gens();
    if (i >= n) return Ideal::whole(m.ring());
    return minor_ideal(m.relations(), n - i);
}

Ideal characteristic_ideal(const PresentedModule& z) {
    const Ring& ring = z.ring();
    const size_t s = z.gens();
    if (s == 0) return Ideal::whole(ring);
    const Submodule& n = z.relation_span();
    auto sq = present_subquotient(n, Submodule::zero(ring, s));
    ExteriorBidual top = ExteriorBidual::of(sq.module, s);
    const DualModule& dn = top.dual();
    const size_t t = dn.functionals.size();
    if (t < s) return Ideal::zero(ring);
    std::vector<RVec> fcoords;
    for (size_t i = 0; i < s; ++i) {
        RVec vals(ring, sq.generators.size());
        for (size_t j = 0; j < sq.generators.size(); ++j) vals.set(j, sq.generators[j].at(i));
        fcoords.push_back(dual_coordinates(dn, vals));
    }
    RVec wedge = wedge_coordinates(ring, t, fcoords);
    std::vector<RingElement> values;
    for (const auto& a : top.space().zgenerators()) values.push_back(top.evaluate(a, wedge));
    return Ideal::generated(ring, values);
}

Ideal annihilator_module(const PresentedModule& m) {
    const Ring& ring = m.ring();
    const size_t b = m.gens();
    if (b == 0) return Ideal::whole(ring);
    // r kills M iff r·e_j lies in Rel for every j.
    Submodule out = Submodule::full(ring, 1);
    for (size_t j = 0; j < b; ++j) {
        RMatrix unit(ring, 1, b);
        unit.set(0, j, ring.one());
        out = out.intersect(preimage(unit, m.relation_span()));
    }
    return Ideal(out);
}

std::vector<RingElement> enumerate_ring(const Ring& ring, uint64_t bound) {
    const size_t g = ring.group_order();
    const int64_t n = ring.modulus();
    uint64_t total = 1;
    for (size_t i = 0; i < g; ++i) {
        total *= static_cast<uint64_t>(n);
        require(total <= bound, ErrorCode::InvalidArgument, "ring exceeds the enumeration bound");
    }
    std::vector<RingElement> out;
    out.reserve(total);
    std::vector<int64_t> c(g, 0);
    for (uint64_t k = 0; k < total; ++k) {
        uint64_t x = k;
        for (size_t i = 0; i < g; ++i) {
            c[i] = static_cast<int64_t>(x % static_cast<uint64_t>(n));
            x /= static_cast<uint64_t>(n);
        }
        out.emplace_back(ring, c);
    }
    return out;
}

Ideal annihilator_module_enumerated(const PresentedModule& m, uint64_t bound) {
    const Ring& ring = m.ring();
    std::vector<RingElement> kill;
    for (const auto& r : enumerate_ring(ring, bound)) {
        bool ok = true;
        for (size_t j = 0; j < m.gens() && ok; ++j)
            if (!m.relation_span().contains(RVec::unit(ring, m.gens(), j).scaled(r))) ok = false;
        if (ok) kill.push_back(r);
    }
    return Ideal::generated(ring, kill);
}

}  // namespace gkit
