#include <doctest.h>

#include <random>

#include "gkit/error.hpp"
#include "gkit/kolyvagin.hpp"
#include "oracle.hpp"

using namespace gkit;

namespace {

RingElement random_element(const Ring& ring, std::mt19937_64& rng) {
    std::vector<int64_t> c(ring.group_order());
    for (auto& x : c) x = static_cast<int64_t>(rng() % static_cast<uint64_t>(ring.modulus()));
    return RingElement(ring, c);
}

RVec random_vec(const Ring& ring, size_t n, std::mt19937_64& rng) {
    RVec v(ring, n);
    for (size_t i = 0; i < n; ++i) v.set(i, random_element(ring, rng));
    return v;
}

KappaPrime random_kappa(const Ring& ring, Modulus n, size_t w, std::mt19937_64& rng) {
    KappaPrime k;
    for (Modulus d = 0; d <= n; ++d)
        if ((d & n) == d) k[d] = random_vec(ring, w, rng);
    return k;
}

TransitionTable random_table(const Ring& ring, size_t primes, std::mt19937_64& rng) {
    TransitionTable t(ring, primes);
    for (size_t l = 0; l < primes; ++l)
        for (size_t q = 0; q < primes; ++q)
            if (l != q) t.set(l, q, random_element(ring, rng));
    return t;
}

// Brute force over all self-maps of the support; sign from the cycle count.
RVec kappa_oracle(const KappaPrime& kappa, const TransitionTable& x, Modulus n) {
    std::vector<size_t> v;
    for (size_t q = 0; q < 32; ++q)
        if (n & (1u << q)) v.push_back(q);
    const size_t k = v.size();
    RVec total = kappa.at(n).scaled(x.ring().zero());
    size_t maps = 1;
    for (size_t i = 0; i < k; ++i) maps *= k;
    for (size_t code = 0; code < maps; ++code) {
        std::vector<size_t> img(k);
        size_t c = code;
        for (size_t i = 0; i < k; ++i) { img[i] = c % k; c /= k; }
        std::vector<bool> hit(k, false);
        bool bij = true;
        for (size_t i : img) { if (hit[i]) bij = false; hit[i] = true; }
        if (!bij) continue;
        std::vector<bool> seen(k, false);
        size_t cycles = 0;
        for (size_t i = 0; i < k; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (size_t j = i; !seen[j]; j = img[j]) seen[j] = true;
        }
        bool odd = (k - cycles) % 2;
        RingElement prod = x.ring().one();
        Modulus fixed = 0;
        for (size_t i = 0; i < k; ++i) {
            if (img[i] == i) fixed |= 1u << v[i];
            else prod = prod * x.at(v[img[i]], v[i]);
        }
        RVec term = kappa.at(fixed).scaled(prod);
        total = odd ? total - term : total + term;
    }
    return total;
}

}  // namespace

TEST_CASE("derivative operator telescopes") {
    for (int n = 1; n <= 16; ++n) CHECK(telescoping_check(n));
    auto d = derivative_operator(3);
    CHECK(d.coeffs == std::vector<int64_t>{0, 1, 2});
    CHECK(telescoping_check(1));
    CHECK_THROWS_AS(derivative_operator(0), Error);
}

TEST_CASE("derivative product coefficients") {
    auto d = derivative_product({3, 4});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) CHECK(d.coeffs[d.index({i, j})] == i * j);
    // (σ_1 - 1)·D_n = (n_1 - N_1)·D_2
    std::vector<int> o{3, 4};
    auto lhs = (IntGroupElement::generator_power(o, 0, 1) - IntGroupElement::constant(o, 1)) * d;
    auto d2 = IntGroupElement::zero(o);
    for (int j = 1; j < 4; ++j) d2 = d2 + IntGroupElement::generator_power(o, 1, j) * IntGroupElement::constant(o, j);
    auto rhs = (IntGroupElement::constant(o, 3) - IntGroupElement::norm(o, 0)) * d2;
    CHECK(lhs == rhs);
}

TEST_CASE("kolyvagin combination small cases") {
    Ring ring = Ring::make(3, 1, {{3}});
    std::mt19937_64 rng(11);
    auto x = random_table(ring, 2, rng);
    auto kappa = random_kappa(ring, 0b11, 2, rng);
    CHECK(kolyvagin_combination(kappa, x, 0b01) == kappa[0b01]);
    RVec expect = kappa[0b11] - kappa[0b00].scaled(x.at(1, 0) * x.at(0, 1));
    CHECK(kolyvagin_combination(kappa, x, 0b11) == expect);
    KappaPrime partial = kappa;
    partial.erase(0b00);
    try {
        kolyvagin_combination(partial, x, 0b11);
        FAIL("expected MissingDivisor");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MissingDivisor);
    }
}

TEST_CASE("kolyvagin combination matches brute force and rearrangement") {
    std::mt19937_64 rng(5);
    std::vector<Ring> rings{Ring::make(2, 2, {{}}), Ring::make(3, 1, {{3}}), Ring::make(2, 2, {{2}})};
    for (const auto& ring : rings)
        for (int trial = 0; trial < 6; ++trial)
            for (Modulus n : {0b1u, 0b101u, 0b111u, 0b1111u, 0b11010u}) {
                auto x = random_table(ring, 5, rng);
                auto kappa = random_kappa(ring, n, 2, rng);
                CHECK(kolyvagin_combination(kappa, x, n) == kappa_oracle(kappa, x, n));
                for (size_t q = 0; q < 5; ++q)
                    if (n & (1u << q)) CHECK(stabilizer_rearrangement_check(kappa, x, n, q));
            }
}

TEST_CASE("kolyvagin combination is linear in kappa'") {
    Ring ring = Ring::make(2, 3, {{}});
    std::mt19937_64 rng(8);
    auto x = random_table(ring, 3, rng);
    auto a = random_kappa(ring, 0b111, 3, rng);
    auto b = random_kappa(ring, 0b111, 3, rng);
    KappaPrime s;
    for (auto& [d, v] : a) s[d] = v + b[d];
    CHECK(kolyvagin_combination(s, x, 0b111) == kolyvagin_combination(a, x, 0b111) + kolyvagin_combination(b, x, 0b111));
}

TEST_CASE("cofactor identity") {
    std::mt19937_64 rng(3);
    for (const auto& ring : std::vector<Ring>{Ring::make(2, 2, {{2}}), Ring::make(3, 1, {{3}}), Ring::make(2, 3, {{}})})
        for (size_t n = 1; n <= 3; ++n)
            for (int t = 0; t < 5; ++t) {
                RMatrix f(ring, n, n);
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = 0; j < n; ++j) f.set(i, j, random_element(ring, rng));
                RMatrix c = cofactor(f);
                RMatrix dI = RMatrix::identity(ring, n).scaled(determinant(f));
                CHECK(f * c == dI);
                CHECK(c * f == dI);
            }
}

TEST_CASE("cofactor iso on Z/4 unipotent") {
    Ring ring = Ring::make(2, 2, {{}});
    RMatrix tau = RMatrix::from_elements(ring, 2, 2, {ring.constant(1), ring.constant(1), ring.constant(0), ring.constant(1)});
    auto iso = cofactor_iso(tau);
    CHECK(iso.lands_in_fixed);
    CHECK(iso.bijective);
    CHECK(oracle::module_cardinality(iso.source) == 4);
    CHECK(oracle::kernel(RMatrix::identity(ring, 2) - tau).size() == 4);
}

TEST_CASE("cofactor iso preconditions") {
    Ring ring = Ring::make(2, 2, {{}});
    try {
        cofactor_iso(RMatrix::identity(ring, 2));
        FAIL("expected CorankNotOne");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CorankNotOne);
    }
    // 1 - τ = diag(2, 1): corank one but det = 2.
    RMatrix tau = RMatrix::from_elements(ring, 2, 2, {ring.constant(-1), ring.constant(0), ring.constant(0), ring.constant(0)});
    try {
        cofactor_iso(tau);
        FAIL("expected NonzeroDeterminant");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonzeroDeterminant);
    }
    auto iso = cofactor_iso(RMatrix::identity(ring, 1));
    CHECK(iso.bijective);
}

TEST_CASE("cofactor iso on random corank-one instances") {
    std::mt19937_64 rng(21);
    for (const auto& ring : std::vector<Ring>{Ring::make(2, 2, {{2}}), Ring::make(3, 1, {{3}}), Ring::make(2, 3, {{}})})
        for (size_t n = 1; n <= 3; ++n)
            for (int t = 0; t < 4; ++t) {
                // f = P·diag(0, 1, ..., 1)·Q with P, Q unipotent.
                RMatrix p = RMatrix::identity(ring, n), q = RMatrix::identity(ring, n), d = RMatrix::identity(ring, n);
                d.set(0, 0, ring.zero());
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = i + 1; j < n; ++j) {
                        p.set(i, j, random_element(ring, rng));
                        q.set(j, i, random_element(ring, rng));
                    }
                RMatrix f = p * d * q;
                RMatrix tau = RMatrix::identity(ring, n) - f;
                auto iso = cofactor_iso(tau);
                CHECK(iso.lands_in_fixed);
                CHECK(iso.bijective);
                CHECK(oracle::module_cardinality(iso.source) == oracle::kernel(f).size());
            }
}
