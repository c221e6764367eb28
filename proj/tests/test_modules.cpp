#include <doctest.h>

#include <random>

#include "gkit/error.hpp"
#include "gkit/exterior.hpp"
#include "gkit/module.hpp"
#include "oracle.hpp"

using namespace gkit;

namespace {

Ring z4() { return Ring::make(2, 2, {{}}); }
Ring z4c2() { return Ring::make(2, 2, {{2}}); }

PresentedModule cyclic(const Ring& r, const RingElement& x) {
    return PresentedModule(r, 1, RMatrix::from_elements(r, 1, 1, {x}));
}

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

}  // namespace

TEST_CASE("kernel_module examples") {
    Ring r = z4();
    auto free1 = PresentedModule::free(r, 1);
    CHECK(kernel_module(ModuleMap(free1, free1, RMatrix::identity(r, 1))).presentation.is_zero());
    auto k2 = kernel_module(ModuleMap(free1, free1, RMatrix::from_elements(r, 1, 1, {r.constant(2)})));
    CHECK(k2.presentation.cardinality() == 2);

    Ring s = z4c2();
    auto f1 = PresentedModule::free(s, 1);
    RingElement t = s.generator(0);
    RMatrix mult = RMatrix::from_elements(s, 1, 1, {s.one() - t});
    auto k = kernel_module(ModuleMap(f1, f1, mult));
    // a + bτ is killed by 1 - τ iff a = b, so the kernel is R·(1+τ) with 4 elements.
    CHECK(oracle::kernel(mult).size() == 4);
    CHECK(k.presentation.cardinality() == 4);
    CHECK(k.lift.contains(RVec::from_elements(s, {s.one() + t})));
    CHECK(!k.lift.contains(RVec::from_elements(s, {s.constant(2)})));
    for (const auto& v : oracle::kernel(mult)) CHECK(k.lift.contains(RVec(s, 1, v)));
}

TEST_CASE("dual examples") {
    Ring r = z4();
    CHECK(dual(PresentedModule::free(r, 3)).module.cardinality() == PresentedModule::free(r, 3).cardinality());
    auto m = cyclic(r, r.constant(2));
    auto d = dual(m);
    CHECK(d.module.cardinality() == 2);
    // Hom(R/(2), R) = {x : 2x = 0}.
    int brute = 0;
    for (int x = 0; x < 4; ++x) brute += (2 * x) % 4 == 0;
    CHECK(brute == 2);
    auto zero = PresentedModule(r, 1, RMatrix::identity(r, 1));
    CHECK(dual(zero).module.is_zero());
}

TEST_CASE("biduality examples") {
    Ring r = z4();
    CHECK(biduality_map(PresentedModule::free(r, 1)).is_bijective());
    auto m = cyclic(r, r.constant(2));
    auto b = biduality_map(m);
    CHECK(b.is_bijective());
    CHECK(b.target().cardinality() == 2);
    auto zero = PresentedModule(r, 1, RMatrix::identity(r, 1));
    CHECK(biduality_map(zero).is_bijective());
}

TEST_CASE("exterior power examples") {
    Ring r = z4();
    CHECK(exterior_power(PresentedModule::free(r, 2), 2).cardinality() == 4);
    CHECK(exterior_power(cyclic(r, r.constant(2)), 2).is_zero());
    auto m = direct_sum(cyclic(r, r.constant(2)), cyclic(r, r.constant(2)));
    auto l2 = exterior_power(m, 2);
    CHECK(l2.cardinality() == 2);
    CHECK(oracle::module_cardinality(l2) == 2);
    CHECK(exterior_power(m, 0).cardinality() == 4);
}

TEST_CASE("socle_multiplier examples") {
    Ring s = z4c2();
    auto f = PresentedModule::free(s, 1);
    RingElement soc = socle_multiplier(f.generator(0));
    CHECK(socle(s).contains(soc));
    CHECK(!soc.is_zero());
    auto m = cyclic(s, s.constant(2));
    RingElement x = socle_multiplier(m.generator(0));
    CHECK(!m.generator(0).scaled(x).is_zero());
    for (const auto& g : s.maximal_ideal_generators()) CHECK(m.generator(0).scaled(g * x).is_zero());
    // An element already in the socle needs multiplier 1.
    auto socle_elem = f.element(RVec::from_elements(s, {soc}));
    CHECK(socle_multiplier(socle_elem) == s.one());
    CHECK_THROWS_AS(socle_multiplier(f.zero()), Error);
}

TEST_CASE("direct sum, tensor, hom examples") {
    Ring r = z4();
    auto zero = PresentedModule(r, 1, RMatrix::identity(r, 1));
    CHECK(direct_sum(PresentedModule::free(r, 1), zero).cardinality() == 4);
    auto m = cyclic(r, r.constant(2));
    CHECK(tensor(m, m).cardinality() == 2);
    CHECK(oracle::module_cardinality(tensor(m, m)) == 2);
    auto n = direct_sum(m, PresentedModule::free(r, 1));
    CHECK(hom(PresentedModule::free(r, 1), n).cardinality() == n.cardinality());
    Ring other = z4c2();
    CHECK_THROWS_AS(direct_sum(m, PresentedModule::free(other, 1)), Error);
}

TEST_CASE("random modules: duality, biduality, kernels, socle") {
    std::mt19937_64 rng(11);
    std::vector<Ring> rings{Ring::make(2, 2, {{}}), Ring::make(2, 3, {{}}), Ring::make(3, 1, {{3}}),
                            Ring::make(2, 2, {{2}}), Ring::make(2, 1, {{2, 2}})};
    for (const auto& ring : rings) {
        for (int trial = 0; trial < 12; ++trial) {
            size_t b = 1 + rng() % 2, a = rng() % 3;
            if (ring.log_cardinality() > 3) b = 1;
            auto m = PresentedModule(ring, b, random_matrix(ring, a, b, rng));
            CHECK(m.cardinality() == oracle::module_cardinality(m));
            auto d = dual(m);
            CHECK(d.module.cardinality() == m.cardinality());
            CHECK(biduality_map(m).is_bijective());

            auto n = PresentedModule(ring, 1, random_matrix(ring, rng() % 2, 1, rng));
            // Maps from m to n: image of generators chosen freely then checked.
            RMatrix f = random_matrix(ring, b, 1, rng);
            try {
                ModuleMap map(m, n, f);
                auto k = kernel_module(map);
                for (const auto& g : k.generators) CHECK(map.apply(g).is_zero());
                CHECK(k.presentation.log_size() + map.image_log_size() == m.log_size());
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::NotExact);
            }
            // Socle multipliers for a few elements.
            for (int k = 0; k < 3; ++k) {
                std::vector<RingElement> xs;
                for (size_t i = 0; i < b; ++i) xs.push_back(random_element(ring, rng));
                auto x = m.element(RVec::from_elements(ring, xs));
                if (x.is_zero()) continue;
                RingElement s = socle_multiplier(x);
                CHECK(!x.scaled(s).is_zero());
                for (const auto& g : ring.maximal_ideal_generators()) CHECK(x.scaled(g * s).is_zero());
            }
        }
    }
}

TEST_CASE("exterior power of free module is free of binomial rank") {
    Ring r = Ring::make(3, 1, {{3}});
    for (size_t n = 0; n <= 3; ++n)
        for (size_t k = 0; k <= n + 1; ++k) {
            auto e = exterior_power(PresentedModule::free(r, n), k);
            size_t rank = k <= n ? binomial(n, k) : 0;
            CHECK(e.log_size() == static_cast<int64_t>(rank) * r.log_cardinality());
        }
}
