#include <doctest.h>

#include <random>

#include "gkit/bidual.hpp"
#include "gkit/error.hpp"
#include "gkit/exterior.hpp"
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

// |∩^r M| by enumerating R-valued functions on the wedge monomials of M^*
// that respect every relation of Λ^r M^*.
size_t bidual_size_by_enumeration(const ExteriorBidual& b) {
    PresentedModule lam = exterior_power(b.dual().module, b.rank());
    return oracle::kernel(lam.relations().transpose()).size();
}

}  // namespace

TEST_CASE("exterior bidual examples") {
    Ring r = Ring::make(2, 2, {{}});
    for (size_t n = 0; n <= 3; ++n)
        for (size_t k = 0; k <= n; ++k) {
            auto b = ExteriorBidual::of(PresentedModule::free(r, n), k);
            CHECK(b.space().log_size() == static_cast<int64_t>(binomial(n, k)) * r.log_cardinality());
        }
    PresentedModule m(r, 1, RMatrix::from_elements(r, 1, 1, {r.constant(2)}));
    CHECK(ExteriorBidual::of(m, 0).space() == Submodule::full(r, 1));
    auto b1 = ExteriorBidual::of(m, 1);
    CHECK(b1.as_module().cardinality() == 2);
    CHECK(bidual_size_by_enumeration(b1) == 2);
    // Λ^1 M → ∩^1 M is bijective: the image of the generator spans.
    RVec img = b1.from_wedge({m.generator(0)});
    CHECK(Submodule::span(r, b1.width(), {img}) == b1.space());
}

TEST_CASE("rank reduction examples") {
    Ring r = Ring::make(2, 2, {{}});
    for (size_t k = 1; k <= 3; ++k) {
        RVec a = RVec::unit(r, 1, 0);
        RVec f = RVec::unit(r, 1, 0);
        CHECK(rank_reduce(a, k, k, f, k) == RVec::unit(r, 1, 0));
    }
    RVec a = RVec::from_elements(r, {r.constant(2)});
    CHECK(rank_reduce(a, 2, 2, RVec(r, 2), 1).is_zero());
    // a = 2(e_1∧e_2), f = e_1^*: values g ↦ a(e_1^* ∧ g) on e_1^*, e_2^*.
    RVec red = rank_reduce(a, 2, 2, RVec::unit(r, 2, 0), 1);
    CHECK(red == RVec::from_elements(r, {r.zero(), r.constant(2)}));
    CHECK_THROWS_AS(rank_reduce(RVec::unit(r, 2, 0), 2, 1, RVec::unit(r, 1, 0), 2), Error);
}

TEST_CASE("rank reduction is functorial up to the wedge sign") {
    std::mt19937_64 rng(9);
    Ring r = Ring::make(3, 1, {{3}});
    size_t t = 4;
    for (int trial = 0; trial < 20; ++trial) {
        size_t rr = 2 + rng() % 3;
        RVec a(r, binomial(t, rr));
        for (size_t i = 0; i < a.size(); ++i) a.set(i, random_element(r, rng));
        RVec f(r, t), g(r, t);
        for (size_t i = 0; i < t; ++i) {
            f.set(i, random_element(r, rng));
            g.set(i, random_element(r, rng));
        }
        RVec two = rank_reduce(rank_reduce(a, t, rr, f, 1), t, rr - 1, g, 1);
        RVec fg = wedge_coordinates(r, t, {f, g});
        CHECK(two == rank_reduce(a, t, rr, fg, 2));
    }
}

TEST_CASE("kernel bidual examples") {
    Ring r = Ring::make(2, 2, {{}});
    auto m2 = PresentedModule::free(r, 2);
    auto id = kernel_bidual_map(m2, {}, 1);
    CHECK(id.exact);
    CHECK(id.injective);
    CHECK(id.image_of_n == id.bidual_m.space());

    auto split = kernel_bidual_map(m2, {RVec::unit(r, 2, 1)}, 2);
    CHECK(split.injective);
    CHECK(split.exact);
    CHECK(split.reduced_lands_in_n);

    auto two = kernel_bidual_map(m2, {RVec::from_elements(r, {r.constant(2), r.zero()})}, 1);
    RMatrix red = contraction_matrix(r, 2, 1, two.wedge_f, 1);
    Submodule image_in_r = image(two.bidual_m.space(), red);
    CHECK(Ideal(image_in_r) == Ideal::generated(r, {r.constant(2)}));
    CHECK(two.reduced_lands_in_n);

    PresentedModule m(r, 1, RMatrix::from_elements(r, 1, 1, {r.constant(2)}));
    CHECK_THROWS_AS(kernel_bidual_map(m, {RVec::unit(r, 1, 0)}, 1), Error);
}

TEST_CASE("image of element examples") {
    Ring r = Ring::make(2, 2, {{}});
    CHECK(image_of_element(RVec(r, 3)).is_zero());
    CHECK(image_of_element(RVec::unit(r, 3, 1)).is_whole());
    RVec two = RVec::from_elements(r, {r.constant(2)});
    Ideal im = image_of_element(two);
    CHECK(im == Ideal::generated(r, {r.constant(2)}));
    auto ann = oracle::annihilator(r, {two.flat()});
    auto annann = oracle::annihilator(r, ann);
    CHECK(oracle::ideal_set(im) == annann);
}

TEST_CASE("random biduals: exactness, criterion, im = Ann Ann") {
    std::mt19937_64 rng(13);
    std::vector<Ring> rings{Ring::make(2, 2, {{}}), Ring::make(2, 3, {{}}), Ring::make(3, 1, {{3}}), Ring::make(2, 2, {{2}})};
    for (const auto& ring : rings) {
        for (int trial = 0; trial < 8; ++trial) {
            size_t b = 2 + rng() % 2, a = rng() % 3;
            if (ring.group_order() > 1) b = 2;
            PresentedModule m(ring, b, random_matrix(ring, a, b, rng));
            auto dm = dual(m);
            std::vector<RVec> fs;
            size_t s = rng() % 2 + 1;
            for (size_t i = 0; i < s; ++i) {
                RVec f(ring, b);
                for (const auto& g : dm.functionals) f += g.scaled(random_element(ring, rng));
                fs.push_back(f);
            }
            for (size_t r = 1; r <= 2; ++r) {
                auto kb = kernel_bidual_map(m, fs, r);
                CHECK(kb.injective);
                CHECK(kb.exact);
                CHECK(kb.criterion_matches);
                CHECK(kb.reduced_lands_in_n);
                CHECK(kb.self_contraction_vanishes);
                if (ring.log_cardinality() <= 3 && kb.bidual_m.width() <= 2)
                    CHECK(static_cast<int64_t>(bidual_size_by_enumeration(kb.bidual_m)) ==
                          oracle::ipow(ring.p(), static_cast<size_t>(kb.bidual_m.space().log_size())));
                for (const auto& x : kb.bidual_m.generators()) {
                    Ideal im = image_of_element(x);
                    auto ann = oracle::annihilator(ring, oracle::ideal_set(im));
                    CHECK(oracle::ideal_set(im) == oracle::annihilator(ring, ann));
                    CHECK(im == annihilator_of_element(x).annihilator());
                }
            }
        }
    }
}
