#include <doctest.h>

#include <random>

#include "gkit/error.hpp"
#include "gkit/exterior.hpp"
#include "gkit/stark.hpp"

using namespace gkit;

namespace {

RingElement random_element(const Ring& ring, std::mt19937_64& rng) {
    std::vector<int64_t> c(ring.group_order());
    for (auto& x : c) x = static_cast<int64_t>(rng() % static_cast<uint64_t>(ring.modulus()));
    RingElement e(ring, c);
    if (rng() % 2) {
        auto gens = ring.maximal_ideal_generators();
        e = e * gens[rng() % gens.size()];
    }
    return e;
}

RVec random_vec(const Ring& ring, size_t n, std::mt19937_64& rng) {
    RVec v(ring, n);
    for (size_t i = 0; i < n; ++i) v.set(i, random_element(ring, rng));
    return v;
}

StarkFamily random_family(const Ring& ring, size_t d0, size_t e, size_t q, std::mt19937_64& rng) {
    StarkFamily f;
    RMatrix phi(ring, d0, e);
    for (size_t i = 0; i < d0; ++i)
        for (size_t j = 0; j < e; ++j) phi.set(i, j, random_element(ring, rng));
    f.base = QuadraticComplex(ring, d0, e, phi);
    for (size_t v = 0; v < q; ++v) f.columns.push_back(random_vec(ring, e, rng));
    return f;
}

RVec random_combination(const Ring& ring, const std::vector<RVec>& gens, size_t n, std::mt19937_64& rng) {
    RVec out(ring, n);
    for (const auto& g : gens) out += g.scaled(random_element(ring, rng));
    return out;
}

}  // namespace

TEST_CASE("stark sign examples") {
    CHECK(stark_sign(0b11, 0b11) == 1);
    CHECK(stark_sign(0b11, 0b01) == -1);
    CHECK(stark_sign(0b11, 0b10) == 1);
    CHECK_THROWS_AS(stark_sign(0b01, 0b10), Error);
}

TEST_CASE("stark sign cocycle identity") {
    // sgn(S'',S)·merge(S''∖S', S'∖S) = sgn(S'',S')·sgn(S',S).
    int literal_failures = 0;
    for (VertexSet a = 0; a < 16; ++a)
        for (VertexSet b = 0; b < 16; ++b)
            for (VertexSet c = 0; c < 16; ++c) {
                if ((a & ~b) || (b & ~c)) continue;
                int lhs = stark_sign(c, a) * merge_sign(vertex_list(c & ~b), vertex_list(b & ~a));
                CHECK(lhs == stark_sign(c, b) * stark_sign(b, a));
                if (stark_sign(c, a) != stark_sign(c, b) * stark_sign(b, a)) ++literal_failures;
            }
    // Plain multiplicativity fails, e.g. ∅ ⊂ {v1} ⊂ {v1, v2}.
    CHECK(stark_sign(0b11, 0) != stark_sign(0b11, 0b01) * stark_sign(0b01, 0));
    CHECK(literal_failures > 0);
}

TEST_CASE("stark space examples") {
    Ring r = Ring::make(2, 2, {{}});
    std::mt19937_64 rng(1);
    // Q = ∅.
    StarkFamily f0 = random_family(r, 3, 1, 0, rng);
    auto sp0 = stark_space(f0);
    CHECK(sp0.space == bidual_of_kernel(f0.base.phi(), 2));

    // H^1 = 0 and all columns zero: SS^r ≅ ∩^r ker(phi0).
    StarkFamily f1;
    RMatrix phi(r, 3, 1);
    phi.set(0, 0, r.one());
    phi.set(1, 0, r.constant(2));
    f1.base = QuadraticComplex(r, 3, 1, phi);
    f1.columns = {RVec(r, 1), RVec(r, 1)};
    auto sp1 = stark_space(f1);
    Submodule bottom = bidual_of_kernel(phi, 2);
    // The projection to c_∅ is an isomorphism onto ∩^2 ker(phi0).
    std::vector<RVec> c0s;
    for (const auto& g : sp1.generators) c0s.push_back(g.front());
    CHECK(Submodule::span(r, bottom.ambient(), c0s) == bottom);
    CHECK(sp1.space.log_size() == bottom.log_size());
    CHECK(stark_space_lattice(f1).space == sp1.space);

    // One vertex with a unit column.
    StarkFamily f2 = random_family(r, 2, 1, 1, rng);
    f2.columns[0] = RVec::from_elements(r, {r.one()});
    auto sp2 = stark_space(f2);
    auto lat2 = stark_space_lattice(f2);
    CHECK(sp2.space == lat2.space);
    for (const auto& c : sp2.generators) {
        RMatrix t = stark_transition(f2, 1, 0);
        CHECK(t.left_multiply(c[1]) == c[0]);
    }
}

TEST_CASE("lattice solve agrees with the top-component parametrization") {
    std::mt19937_64 rng(2);
    std::vector<Ring> rings{Ring::make(2, 2, {{}}), Ring::make(3, 1, {{3}}), Ring::make(2, 2, {{2}})};
    for (const auto& ring : rings)
        for (int trial = 0; trial < 4; ++trial) {
            size_t e = 1 + rng() % 2, d0 = e + 1 + rng() % 2, q = 1 + rng() % 2;
            if (ring.group_order() > 1) d0 = e + 1;
            StarkFamily f = random_family(ring, d0, e, q, rng);
            auto fast = stark_space(f);
            auto lat = stark_space_lattice(f);
            CHECK(fast.space == lat.space);
            for (const auto& g : fast.generators) CHECK(is_stark_system(f, g));
            CHECK(family_exactness_check(f));
        }
}

TEST_CASE("det_to_stark") {
    std::mt19937_64 rng(3);
    Ring r = Ring::make(2, 2, {{}});
    StarkFamily f = random_family(r, 2, 1, 1, rng);
    StarkSystem zero = det_to_stark(f, {r.zero(), r.zero()});
    for (const auto& c : zero) CHECK(c.is_zero());
    StarkFamily f0 = random_family(r, 3, 1, 0, rng);
    CHECK(det_to_stark(f0, {r.constant(3)}).front() == theta(f0.base, r.constant(3)));
    CHECK_THROWS_AS(det_to_stark(f, {r.one(), r.constant(2)}), Error);

    std::vector<Ring> rings{Ring::make(2, 2, {{}}), Ring::make(2, 3, {{}}), Ring::make(3, 1, {{3}}), Ring::make(2, 2, {{2}})};
    for (const auto& ring : rings)
        for (int trial = 0; trial < 6; ++trial) {
            size_t e = rng() % 3, d0 = e + 1 + rng() % 2, q = 1 + rng() % 3;
            StarkFamily g = random_family(ring, d0, e, q, rng);
            RingElement a = random_element(ring, rng);
            std::vector<RingElement> as;
            for (VertexSet s = 0; s <= g.top(); ++s) {
                int sign = det_transition_sign(g, g.top(), s);
                as.push_back(sign > 0 ? a : -a);
            }
            StarkSystem c = det_to_stark(g, as);
            CHECK(is_stark_system(g, c));
        }
}

TEST_CASE("regulator examples") {
    std::mt19937_64 rng(4);
    Ring r = Ring::make(2, 2, {{2}});
    StarkFamily f = random_family(r, 3, 1, 2, rng);
    auto sp = stark_space(f);
    size_t ntop = f.width(f.top());
    for (int trial = 0; trial < 5; ++trial) {
        RVec top(r, sp.generators.front().back().size());
        StarkSystem eps = stark_from_top(f, random_combination(r, {sp.generators.front().back()}, top.size(), rng));
        // ψ_v = f_v reproduces eps_∅ at every S.
        std::vector<RVec> coords;
        for (size_t v = 0; v < f.vertices(); ++v) coords.push_back(RVec::unit(r, ntop, f.position(f.top(), v)));
        StarkSystem reg = regulator(f, coords, eps);
        CHECK(reg[0] == eps[0]);
        for (VertexSet s = 1; s <= f.top(); ++s) {
            // The result is eps_∅ placed on the base coordinates of R^{n_S}.
            const auto& ks = subsets(f.width(s), static_cast<size_t>(f.rank()));
            for (size_t k = 0; k < ks.size(); ++k) {
                bool old = ks[k].empty() || ks[k].back() < f.base.d();
                if (!old) CHECK(reg[s].at(k).is_zero());
                else CHECK(reg[s].at(k) == eps[0].at(subset_rank(f.base.d(), ks[k])));
            }
        }
        // ψ_v = 0 for one vertex kills every S containing it.
        coords[1] = RVec(r, ntop);
        StarkSystem reg0 = regulator(f, coords, eps);
        for (VertexSet s = 0; s <= f.top(); ++s)
            if (s & 2u) CHECK(reg0[s].is_zero());
    }
}

TEST_CASE("core theorem checks") {
    std::mt19937_64 rng(5);
    Ring r = Ring::make(2, 2, {{}});
    // H^1(C_∅) = 0.
    StarkFamily triv;
    RMatrix phi(r, 2, 1);
    phi.set(0, 0, r.one());
    triv.base = QuadraticComplex(r, 2, 1, phi);
    triv.columns = {random_vec(r, 1, rng)};
    StarkCore core0(triv);
    for (const auto& g : core0.space().generators) CHECK(core0.verify(g).ok());

    // Columns spanning H^1 after one vertex.
    StarkFamily one;
    RMatrix phi1(r, 2, 1);
    phi1.set(0, 0, r.constant(2));
    one.base = QuadraticComplex(r, 2, 1, phi1);
    one.columns = {RVec::from_elements(r, {r.one()}), RVec::from_elements(r, {r.constant(2)})};
    StarkCore core1(one);
    CHECK(vertex_count(core1.stabilizing()) == 1);

    Ring s = Ring::make(2, 2, {{2}});
    for (int fam = 0; fam < 3; ++fam) {
        StarkFamily f = random_family(s, 2, 1, 2, rng);
        StarkCore core(f);
        std::vector<RVec> tops;
        for (const auto& g : core.space().generators) tops.push_back(g.back());
        size_t w = binomial(f.width(f.top()), static_cast<size_t>(f.rank()) + 2);
        for (int k = 0; k < 50; ++k) {
            StarkSystem eps = stark_from_top(f, random_combination(s, tops, w, rng));
            auto rep = core.verify(eps);
            CHECK(rep.stabilizer_found);
            CHECK(rep.fitting_kills_kernel);
            CHECK(rep.image_in_char);
            CHECK(rep.theta_bound);
            CHECK(rep.fitting_bound);
        }
    }
}
