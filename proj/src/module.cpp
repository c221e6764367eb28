#include "gkit/module.hpp"

#include "gkit/error.hpp"
#include "gkit/exterior.hpp"

namespace gkit {

struct PresentedModule::Impl {
    Ring ring;
    size_t gens = 0;
    RMatrix relations;
    Submodule span;
};

PresentedModule::PresentedModule(Ring ring, size_t gens, RMatrix relations) {
    check_same_ring(ring, relations.ring());
    require(relations.cols() == gens, ErrorCode::ShapeMismatch, "relation matrix width must equal the generator count");
    auto impl = std::make_shared<Impl>();
    impl->ring = ring;
    impl->gens = gens;
    impl->span = image(relations);
    impl->relations = std::move(relations);
    impl_ = std::move(impl);
}

PresentedModule PresentedModule::free(const Ring& ring, size_t n) { return PresentedModule(ring, n, RMatrix(ring, 0, n)); }

PresentedModule PresentedModule::from_relations(const Ring& ring, size_t gens, const Submodule& rel) {
    require(rel.ambient() == gens, ErrorCode::ShapeMismatch, "relation module ambient rank");
    auto impl = std::make_shared<Impl>();
    impl->ring = ring;
    impl->gens = gens;
    impl->relations = RMatrix::from_rows(ring, gens, rel.minimal_generators());
    impl->span = rel;
    PresentedModule m;
    m.impl_ = std::move(impl);
    return m;
}

PresentedModule PresentedModule::cyclic(const Ideal& ideal) {
    return from_relations(ideal.ring(), 1, ideal.submodule());
}

const Ring& PresentedModule::ring() const { return impl_->ring; }
size_t PresentedModule::gens() const { return impl_->gens; }
const RMatrix& PresentedModule::relations() const { return impl_->relations; }
const Submodule& PresentedModule::relation_span() const { return impl_->span; }

int64_t PresentedModule::log_size() const {
    return static_cast<int64_t>(gens()) * ring().log_cardinality() - relation_span().log_size();
}

std::optional<uint64_t> PresentedModule::cardinality() const {
    uint64_t c = 1;
    for (int64_t i = 0; i < log_size(); ++i) {
        if (c > (uint64_t{1} << 62) / static_cast<uint64_t>(ring().p())) return std::nullopt;
        c *= static_cast<uint64_t>(ring().p());
    }
    return c;
}

size_t PresentedModule::min_generators() const {
    const RMatrix& rel = relations();
    ZMod fp(ring().p(), 1);
    ZMatrix a(fp, rel.rows(), gens());
    for (size_t i = 0; i < rel.rows(); ++i)
        for (size_t j = 0; j < gens(); ++j) a.at(i, j) = fp.reduce(rel.at(i, j).augmentation());
    return gens() - HowellBasis(a).size();
}

ModuleElement PresentedModule::element(const RVec& v) const { return ModuleElement(*this, v); }
ModuleElement PresentedModule::zero() const { return element(RVec(ring(), gens())); }
ModuleElement PresentedModule::generator(size_t i) const { return element(RVec::unit(ring(), gens(), i)); }

PresentedModule PresentedModule::quotient(const std::vector<RVec>& extra) const {
    return PresentedModule(ring(), gens(), relations().vstack(RMatrix::from_rows(ring(), gens(), extra)));
}

PresentedModule PresentedModule::base_change(const Ring& target) const {
    return PresentedModule(target, gens(), relations().reduced_to(target));
}

ModuleElement::ModuleElement(PresentedModule m, const RVec& v) : m_(std::move(m)) {
    require(v.size() == m_.gens(), ErrorCode::ShapeMismatch, "element length must equal the generator count");
    v_ = m_.relation_span().reduce(v);
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const { return ModuleElement(m_, v_ + o.v_); }
ModuleElement ModuleElement::operator-(const ModuleElement& o) const { return ModuleElement(m_, v_ - o.v_); }
ModuleElement ModuleElement::scaled(const RingElement& r) const { return ModuleElement(m_, v_.scaled(r)); }

ModuleMap::ModuleMap(PresentedModule source, PresentedModule target, RMatrix matrix)
    : src_(std::move(source)), tgt_(std::move(target)), a_(std::move(matrix)) {
    check_same_ring(src_.ring(), tgt_.ring());
    require(a_.rows() == src_.gens() && a_.cols() == tgt_.gens(), ErrorCode::ShapeMismatch, "module map shape");
    Submodule img = image(src_.relation_span(), a_);
    require(tgt_.relation_span().contains(img), ErrorCode::NotExact, "map is not well defined on relations");
}

ModuleElement ModuleMap::apply(const ModuleElement& x) const { return tgt_.element(a_.left_multiply(x.coords())); }

Submodule ModuleMap::image_lift() const { return image(a_) + tgt_.relation_span(); }

int64_t ModuleMap::image_log_size() const { return image_lift().log_size() - tgt_.relation_span().log_size(); }

bool ModuleMap::is_surjective() const { return image_log_size() == tgt_.log_size(); }

bool ModuleMap::is_injective() const { return image_log_size() == src_.log_size(); }

ModuleMap ModuleMap::then(const ModuleMap& g) const { return ModuleMap(src_, g.tgt_, a_ * g.a_); }

Subquotient present_subquotient(const Submodule& w, const Submodule& u) {
    const Ring& ring = w.ring();
    Subquotient out;
    out.generators = w.minimal_generators_mod(u);
    const size_t s = out.generators.size();
    if (s == 0) {
        out.module = PresentedModule::free(ring, 0);
        return out;
    }
    RMatrix g = RMatrix::from_rows(ring, w.ambient(), out.generators);
    out.module = PresentedModule::from_relations(ring, s, preimage(g, u));
    return out;
}

KernelData kernel_module(const ModuleMap& f) {
    KernelData k;
    k.lift = preimage(f.matrix(), f.target().relation_span());
    auto sq = present_subquotient(k.lift, f.source().relation_span());
    for (const auto& v : sq.generators) k.generators.push_back(f.source().element(v));
    k.presentation = sq.module;
    return k;
}

DualModule dual(const PresentedModule& m) {
    DualModule d;
    d.source = m;
    d.span = kernel(m.relations().transpose());
    auto sq = present_subquotient(d.span, Submodule::zero(m.ring(), m.gens()));
    d.functionals = std::move(sq.generators);
    d.module = sq.module;
    return d;
}

RVec dual_coordinates(const DualModule& d, const RVec& functional) {
    auto c = solve_combination(d.source.ring(), d.source.gens(), d.functionals, functional);
    if (!c) fail(ErrorCode::NoSolution, "vector is not a functional on the module");
    return *c;
}

ModuleMap biduality_map(const PresentedModule& m) {
    DualModule d1 = dual(m);
    DualModule d2 = dual(d1.module);
    const Ring& ring = m.ring();
    const size_t s = d1.functionals.size();
    std::vector<RVec> rows;
    for (size_t j = 0; j < m.gens(); ++j) {
        RVec ev(ring, s);
        for (size_t k = 0; k < s; ++k) ev.set(k, d1.functionals[k].at(j));
        rows.push_back(dual_coordinates(d2, ev));
    }
    return ModuleMap(m, d2.module, RMatrix::from_rows(ring, d2.functionals.size(), rows));
}

PresentedModule exterior_power(const PresentedModule& m, size_t r) {
    const Ring& ring = m.ring();
    const size_t b = m.gens();
    if (r == 0) return PresentedModule::free(ring, 1);
    const auto& mons = subsets(b, r);
    const auto& lower = subsets(b, r - 1);
    const RMatrix& rel = m.relations();
    RMatrix out(ring, rel.rows() * lower.size(), mons.size());
    size_t row = 0;
    for (size_t i = 0; i < rel.rows(); ++i) {
        for (const auto& t : lower) {
            for (size_t j = 0; j < b; ++j) {
                if (!disjoint({j}, t)) continue;
                RingElement x = rel.at(i, j);
                if (x.is_zero()) continue;
                size_t col = subset_rank(b, set_union({j}, t));
                RingElement cur = out.at(row, col);
                out.set(row, col, merge_sign({j}, t) > 0 ? cur + x : cur - x);
            }
            ++row;
        }
    }
    return PresentedModule(ring, mons.size(), out);
}

Submodule direct_sum(const std::vector<Submodule>& parts) {
    require(!parts.empty(), ErrorCode::InvalidArgument, "empty direct sum");
    const Ring& ring = parts.front().ring();
    const size_t g = ring.group_order();
    size_t n = 0;
    for (const auto& p : parts) n += p.ambient();
    ZMatrix z(ring.zmod(), 0, n * g);
    size_t off = 0;
    std::vector<int64_t> row(n * g);
    for (const auto& p : parts) {
        const ZMatrix& h = p.basis().matrix();
        for (size_t i = 0; i < h.rows(); ++i) {
            std::fill(row.begin(), row.end(), 0);
            std::copy(h.row(i).begin(), h.row(i).end(), row.begin() + static_cast<long>(off * g));
            z.append_row(row);
        }
        off += p.ambient();
    }
    return Submodule::from_zspan(ring, n, z);
}

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b) {
    check_same_ring(a.ring(), b.ring());
    const Ring& ring = a.ring();
    RMatrix rel(ring, a.relations().rows() + b.relations().rows(), a.gens() + b.gens());
    for (size_t i = 0; i < a.relations().rows(); ++i)
        for (size_t j = 0; j < a.gens(); ++j) rel.set(i, j, a.relations().at(i, j));
    for (size_t i = 0; i < b.relations().rows(); ++i)
        for (size_t j = 0; j < b.gens(); ++j) rel.set(a.relations().rows() + i, a.gens() + j, b.relations().at(i, j));
    return PresentedModule(ring, a.gens() + b.gens(), rel);
}

PresentedModule tensor(const PresentedModule& a, const PresentedModule& b) {
    check_same_ring(a.ring(), b.ring());
    const Ring& ring = a.ring();
    const size_t ba = a.gens(), bb = b.gens();
    std::vector<RVec> rows;
    for (size_t i = 0; i < a.relations().rows(); ++i)
        for (size_t j = 0; j < bb; ++j) {
            RVec v(ring, ba * bb);
            for (size_t k = 0; k < ba; ++k) v.set(k * bb + j, a.relations().at(i, k));
            rows.push_back(v);
        }
    for (size_t i = 0; i < b.relations().rows(); ++i)
        for (size_t k = 0; k < ba; ++k) {
            RVec v(ring, ba * bb);
            for (size_t j = 0; j < bb; ++j) v.set(k * bb + j, b.relations().at(i, j));
            rows.push_back(v);
        }
    return PresentedModule(ring, ba * bb, RMatrix::from_rows(ring, ba * bb, rows));
}

PresentedModule hom(const PresentedModule& a, const PresentedModule& b) {
    check_same_ring(a.ring(), b.ring());
    const Ring& ring = a.ring();
    const size_t ba = a.gens(), bb = b.gens(), na = a.relations().rows();
    // A (ba × bb, flattened row-major) ↦ (ρ_i·A)_i.
    RMatrix phi(ring, ba * bb, na * bb);
    for (size_t i = 0; i < na; ++i)
        for (size_t k = 0; k < ba; ++k)
            for (size_t j = 0; j < bb; ++j) phi.set(k * bb + j, i * bb + j, a.relations().at(i, k));
    Submodule w = Submodule::full(ring, ba * bb);
    if (na > 0) w = preimage(phi, direct_sum(std::vector<Submodule>(na, b.relation_span())));
    Submodule u = ba > 0 ? direct_sum(std::vector<Submodule>(ba, b.relation_span())) : Submodule::zero(ring, 0);
    return present_subquotient(w, u).module;
}

RingElement socle_multiplier(const ModuleElement& x) {
    require(!x.is_zero(), ErrorCode::ZeroElement, "socle multiplier of zero");
    const Ring& ring = x.module().ring();
    RingElement r = ring.one();
    auto gens = ring.maximal_ideal_generators();
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto& g : gens) {
            RingElement t = g * r;
            if (!x.scaled(t).is_zero()) {
                r = t;
                moved = true;
                break;
            }
        }
    }
    return r;
}

}  // namespace gkit
