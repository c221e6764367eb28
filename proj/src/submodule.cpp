#include "gkit/submodule.hpp"

#include <sstream>

#include "gkit/error.hpp"

namespace gkit {

Submodule Submodule::zero(const Ring& ring, size_t n) { return from_zspan(ring, n, ZMatrix(ring.zmod(), 0, n * ring.group_order())); }

Submodule Submodule::full(const Ring& ring, size_t n) {
    return from_zspan(ring, n, ZMatrix::identity(ring.zmod(), n * ring.group_order()));
}

Submodule Submodule::span(const Ring& ring, size_t n, const std::vector<RVec>& gens) {
    return from_zspan(ring, n, expand_span(ring, n, gens));
}

Submodule Submodule::from_zspan(const Ring& ring, size_t n, const ZMatrix& rows) {
    require(rows.cols() == n * ring.group_order(), ErrorCode::ShapeMismatch, "expanded width");
    Submodule s;
    s.ring_ = ring;
    s.n_ = n;
    s.h_ = HowellBasis(rows);
    return s;
}

bool Submodule::contains(const RVec& v) const {
    check_same_ring(ring_, v.ring());
    require(v.size() == n_, ErrorCode::ShapeMismatch, "vector length");
    return h_.contains(v.flat());
}

bool Submodule::contains(const Submodule& o) const {
    check_same_ring(ring_, o.ring_);
    require(o.n_ == n_, ErrorCode::ShapeMismatch, "ambient ranks differ");
    return h_.contains(o.h_);
}

RVec Submodule::reduce(const RVec& v) const {
    check_same_ring(ring_, v.ring());
    return RVec(ring_, n_, h_.reduce(v.flat()));
}

Submodule Submodule::operator+(const Submodule& o) const {
    check_same_ring(ring_, o.ring_);
    require(o.n_ == n_, ErrorCode::ShapeMismatch, "ambient ranks differ");
    return from_zspan(ring_, n_, h_.matrix().vstack(o.h_.matrix()));
}

Submodule Submodule::intersect(const Submodule& o) const {
    check_same_ring(ring_, o.ring_);
    require(o.n_ == n_, ErrorCode::ShapeMismatch, "ambient ranks differ");
    const ZMatrix& a = h_.matrix();
    const ZMatrix& b = o.h_.matrix();
    if (a.rows() == 0 || b.rows() == 0) return zero(ring_, n_);
    ZMatrix k = kernel(a.vstack(b));
    ZMatrix u(ring_.zmod(), 0, a.rows());
    for (size_t i = 0; i < k.rows(); ++i) u.append_row(k.row(i).subspan(0, a.rows()));
    return from_zspan(ring_, n_, u * a);
}

Submodule Submodule::scaled(const RingElement& r) const {
    std::vector<RVec> rows;
    for (auto& z : zgenerators()) rows.push_back(z.scaled(r));
    ZMatrix m(ring_.zmod(), 0, n_ * ring_.group_order());
    for (auto& v : rows) m.append_row(v.flat());
    return from_zspan(ring_, n_, m);
}

Submodule Submodule::maximal_multiple() const {
    ZMatrix m(ring_.zmod(), 0, n_ * ring_.group_order());
    auto zs = zgenerators();
    for (const auto& x : ring_.maximal_ideal_generators())
        for (const auto& z : zs) m.append_row(z.scaled(x).flat());
    return from_zspan(ring_, n_, m);
}

std::vector<RVec> Submodule::zgenerators() const {
    std::vector<RVec> out;
    for (size_t i = 0; i < h_.size(); ++i) {
        auto r = h_.matrix().row(i);
        out.emplace_back(ring_, n_, std::vector<int64_t>(r.begin(), r.end()));
    }
    return out;
}

std::vector<RVec> Submodule::minimal_generators() const { return minimal_generators_mod(zero(ring_, n_)); }

std::vector<RVec> Submodule::minimal_generators_mod(const Submodule& base) const {
    Submodule cur = maximal_multiple() + base;
    std::vector<RVec> chosen;
    if (cur.contains(*this)) return chosen;
    for (const auto& z : zgenerators()) {
        if (cur.contains(z)) continue;
        chosen.push_back(z);
        cur = from_zspan(ring_, n_, cur.h_.matrix().vstack(expand_span(ring_, n_, {z})));
        if (cur.contains(*this)) break;
    }
    return chosen;
}

Submodule image(const Submodule& w, const RMatrix& a) {
    check_same_ring(w.ring(), a.ring());
    require(w.ambient() == a.rows(), ErrorCode::ShapeMismatch, "image shape");
    const ZMatrix& rows = w.basis().matrix();
    if (rows.rows() == 0) return Submodule::zero(a.ring(), a.cols());
    return Submodule::from_zspan(a.ring(), a.cols(), rows * a.expand());
}

Submodule image(const RMatrix& a) { return Submodule::from_zspan(a.ring(), a.cols(), a.expand()); }

Submodule preimage(const RMatrix& a, const Submodule& w) {
    check_same_ring(w.ring(), a.ring());
    require(w.ambient() == a.cols(), ErrorCode::ShapeMismatch, "preimage shape");
    const Ring& ring = a.ring();
    const size_t kg = a.rows() * ring.group_order();
    if (kg == 0) return Submodule::zero(ring, 0);
    ZMatrix k = kernel(a.expand().vstack(w.basis().matrix()));
    ZMatrix u(ring.zmod(), 0, kg);
    for (size_t i = 0; i < k.rows(); ++i) u.append_row(k.row(i).subspan(0, kg));
    return Submodule::from_zspan(ring, a.rows(), u);
}

Submodule kernel(const RMatrix& a) { return preimage(a, Submodule::zero(a.ring(), a.cols())); }

std::optional<RVec> solve_combination(const Ring& ring, size_t n, const std::vector<RVec>& gens, const RVec& target) {
    const size_t g = ring.group_order();
    const size_t s = gens.size();
    ZMatrix e(ring.zmod(), s * g, n * g);
    for (size_t k = 0; k < s; ++k) {
        require(gens[k].size() == n, ErrorCode::ShapeMismatch, "generator length");
        for (size_t t = 0; t < g; ++t)
            for (size_t i = 0; i < n; ++i) {
                const int64_t* x = gens[k].ptr(i);
                for (size_t h = 0; h < g; ++h) e.at(k * g + t, i * g + ring.add_index(t, h)) = x[h];
            }
    }
    if (s == 0) {
        if (target.is_zero()) return RVec(ring, 0);
        return std::nullopt;
    }
    auto x = try_solve(e, target.flat());
    if (!x) return std::nullopt;
    return RVec(ring, s, *x);
}

Ideal::Ideal(Submodule s) : s_(std::move(s)) {
    require(s_.ambient() == 1, ErrorCode::ShapeMismatch, "an ideal is a submodule of R^1");
}

Ideal Ideal::generated(const Ring& ring, const std::vector<RingElement>& gens) {
    std::vector<RVec> vs;
    for (const auto& x : gens) {
        check_same_ring(ring, x.ring());
        vs.push_back(RVec::from_elements(ring, {x}));
    }
    return Ideal(Submodule::span(ring, 1, vs));
}

Ideal Ideal::zero(const Ring& ring) { return Ideal(Submodule::zero(ring, 1)); }
Ideal Ideal::whole(const Ring& ring) { return Ideal(Submodule::full(ring, 1)); }

Ideal Ideal::of_entries(const RVec& v) { return generated(v.ring(), v.elements()); }

bool Ideal::contains(const RingElement& x) const { return s_.contains(RVec::from_elements(x.ring(), {x})); }

bool Ideal::is_whole() const { return contains(ring().one()); }

Ideal Ideal::operator+(const Ideal& o) const { return Ideal(s_ + o.s_); }

Ideal Ideal::operator*(const Ideal& o) const {
    check_same_ring(ring(), o.ring());
    std::vector<RingElement> prods;
    auto a = generators();
    auto b = o.generators();
    for (const auto& x : a)
        for (const auto& y : b) prods.push_back(x * y);
    return generated(ring(), prods);
}

Ideal Ideal::intersect(const Ideal& o) const { return Ideal(s_.intersect(o.s_)); }

Ideal Ideal::annihilator() const { return annihilator_of(generators(), ring()); }

Ideal Ideal::image_in(const Ring& quotient) const {
    std::vector<RingElement> gs;
    for (const auto& x : generators()) gs.push_back(quotient.project(x));
    return generated(quotient, gs);
}

std::vector<RingElement> Ideal::generators() const {
    std::vector<RingElement> out;
    for (const auto& v : s_.minimal_generators()) out.push_back(v.at(0));
    return out;
}

std::vector<RingElement> Ideal::zgenerators() const {
    std::vector<RingElement> out;
    for (const auto& v : s_.zgenerators()) out.push_back(v.at(0));
    return out;
}

std::string Ideal::to_string() const {
    std::ostringstream os;
    os << "(";
    auto gs = generators();
    for (size_t i = 0; i < gs.size(); ++i) os << (i ? ", " : "") << gs[i].to_string();
    os << ")";
    return os.str();
}

Ideal annihilator_of(const std::vector<RingElement>& xs, const Ring& ring) {
    if (xs.empty()) return Ideal::whole(ring);
    RMatrix a(ring, 1, xs.size());
    for (size_t j = 0; j < xs.size(); ++j) a.set(0, j, xs[j]);
    return Ideal(kernel(a));
}

Ideal socle(const Ring& ring) {
    Ideal s = annihilator_of(ring.maximal_ideal_generators(), ring);
    require(s.log_size() == 1, ErrorCode::SocleNotSimple, "socle is not one-dimensional");
    return s;
}

}  // namespace gkit
