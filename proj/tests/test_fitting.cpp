#include <doctest.h>

#include <random>

#include "gkit/exterior.hpp"
#include "gkit/fitting.hpp"
#include "oracle.hpp"

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

RMatrix random_matrix(const Ring& ring, size_t r, size_t c, std::mt19937_64& rng) {
    RMatrix a(ring, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) a.set(i, j, random_element(ring, rng));
    return a;
}

std::vector<Ring> small_rings() {
    return {Ring::make(2, 2, {{}}), Ring::make(2, 3, {{}}), Ring::make(3, 1, {{3}}), Ring::make(2, 2, {{2}})};
}

}  // namespace

TEST_CASE("determinant paths agree with the Leibniz formula") {
    std::mt19937_64 rng(3);
    for (const auto& ring : small_rings())
        for (size_t n = 1; n <= 6; ++n)
            for (int t = 0; t < 3; ++t) {
                RMatrix a = random_matrix(ring, n, n, rng);
                RingElement ref = oracle::leibniz(a);
                CHECK(determinant_subsets(a) == ref);
                if (n <= 5) CHECK(determinant_cofactor(a) == ref);
                CHECK(determinant(a) == ref);
            }
}

TEST_CASE("fitting ideal examples") {
    Ring r = Ring::make(2, 2, {{}});
    auto free1 = PresentedModule::free(r, 1);
    CHECK(fitting_ideal(free1, 0).is_zero());
    CHECK(fitting_ideal(free1, 1).is_whole());
    auto m = PresentedModule(r, 1, RMatrix::from_elements(r, 1, 1, {r.constant(2)}));
    CHECK(fitting_ideal(m, 0) == Ideal::generated(r, {r.constant(2)}));

    // R/(2) ⊕ R presented three ways.
    RingElement z = r.zero(), one = r.one(), two = r.constant(2);
    PresentedModule a(r, 2, RMatrix::from_elements(r, 1, 2, {two, z}));
    PresentedModule b(r, 2, RMatrix::from_elements(r, 1, 2, {two, two}));
    PresentedModule c(r, 3, RMatrix::from_elements(r, 2, 3, {two, z, z, one, one, -one}));
    CHECK(a.cardinality() == b.cardinality());
    CHECK(a.cardinality() == c.cardinality());
    for (size_t i = 0; i < 3; ++i) {
        CHECK(fitting_ideal(a, i) == fitting_ideal(b, i));
        CHECK(fitting_ideal(a, i) == fitting_ideal(c, i));
    }
    CHECK(fitting_ideal(a, 1) == Ideal::generated(r, {two}));
}

TEST_CASE("characteristic ideal examples") {
    Ring r = Ring::make(2, 2, {{}});
    PresentedModule zero(r, 1, RMatrix::identity(r, 1));
    CHECK(characteristic_ideal(zero).is_whole());
    auto m = PresentedModule(r, 1, RMatrix::from_elements(r, 1, 1, {r.constant(2)}));
    CHECK(characteristic_ideal(m) == Ideal::generated(r, {r.constant(2)}));
    CHECK(characteristic_ideal(PresentedModule::free(r, 1)).is_zero());
}

TEST_CASE("annihilator examples") {
    Ring r = Ring::make(2, 2, {{}});
    CHECK(annihilator_module(PresentedModule::free(r, 1)).is_zero());
    auto m = PresentedModule(r, 1, RMatrix::from_elements(r, 1, 1, {r.constant(2)}));
    CHECK(annihilator_module(m) == Ideal::generated(r, {r.constant(2)}));
    Ring s = Ring::make(2, 2, {{2}});
    auto q = PresentedModule(s, 1, RMatrix::from_elements(s, 1, 1, {s.one() - s.generator(0)}));
    Ideal solved = annihilator_module(q), enumerated = annihilator_module_enumerated(q);
    CHECK(solved == enumerated);
    CHECK(solved == Ideal::generated(s, {s.one() - s.generator(0)}));
}

TEST_CASE("random fitting ideals: oracle and axioms") {
    std::mt19937_64 rng(5);
    for (const auto& ring : small_rings()) {
        for (int trial = 0; trial < 10; ++trial) {
            size_t b = 1 + rng() % 3, a = rng() % 4;
            PresentedModule m(ring, b, random_matrix(ring, a, b, rng));
            for (size_t i = 0; i <= b; ++i) {
                Ideal f = fitting_ideal(m, i);
                CHECK(oracle::ideal_set(f) == oracle::fitting(m, i));
                if (i > 0) CHECK(f.contains(fitting_ideal(m, i - 1)));
            }
            // Quotient by an extra relation is a surjective image.
            std::vector<RVec> extra{RVec::from_elements(ring, std::vector<RingElement>(b, random_element(ring, rng)))};
            auto q = m.quotient(extra);
            for (size_t i = 0; i <= b; ++i) CHECK(fitting_ideal(q, i).contains(fitting_ideal(m, i)));
            // Direct sum formula.
            PresentedModule n(ring, 1, random_matrix(ring, rng() % 2, 1, rng));
            auto s = direct_sum(m, n);
            for (size_t i = 0; i <= b + 1; ++i) {
                Ideal sum = Ideal::zero(ring);
                for (size_t j = 0; j <= i; ++j) sum = sum + fitting_ideal(m, j) * fitting_ideal(n, i - j);
                CHECK(fitting_ideal(s, i) == sum);
            }
            // Base change.
            for (int j = 1; j < ring.m(); ++j) {
                Ring t = ring.quotient(j);
                for (size_t i = 0; i <= b; ++i)
                    CHECK(fitting_ideal(m, i).image_in(t) == fitting_ideal(m.base_change(t), i));
            }
            // Fitt^j kills Λ^i for j < i.
            for (size_t i = 1; i <= b; ++i) {
                auto lam = exterior_power(m, i);
                for (size_t j = 0; j < i; ++j)
                    for (const auto& z : fitting_ideal(m, j).generators())
                        for (size_t g = 0; g < lam.gens(); ++g) CHECK(lam.generator(g).scaled(z).is_zero());
            }
            // char = Ann (two ways), Fitt^0 ⊆ char.
            Ideal ch = characteristic_ideal(m);
            CHECK(ch == annihilator_module(m));
            CHECK(ch == annihilator_module_enumerated(m));
            CHECK(ch.contains(fitting_ideal(m, 0)));
        }
    }
}
