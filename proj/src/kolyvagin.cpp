#include "gkit/kolyvagin.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gkit/error.hpp"

namespace gkit {

namespace {

size_t group_size(const std::vector<int>& orders) {
    size_t n = 1;
    for (int o : orders) n *= static_cast<size_t>(o);
    return n;
}

std::vector<int> exps_of(const std::vector<int>& orders, size_t idx) {
    std::vector<int> e(orders.size());
    for (size_t i = orders.size(); i-- > 0;) {
        e[i] = static_cast<int>(idx % static_cast<size_t>(orders[i]));
        idx /= static_cast<size_t>(orders[i]);
    }
    return e;
}

}  // namespace

IntGroupElement IntGroupElement::zero(std::vector<int> orders) {
    IntGroupElement x;
    x.coeffs.assign(group_size(orders), 0);
    x.orders = std::move(orders);
    return x;
}

IntGroupElement IntGroupElement::constant(std::vector<int> orders, int64_t c) {
    IntGroupElement x = zero(std::move(orders));
    x.coeffs[0] = c;
    return x;
}

IntGroupElement IntGroupElement::generator_power(std::vector<int> orders, size_t factor, int j) {
    IntGroupElement x = zero(std::move(orders));
    std::vector<int> e(x.orders.size(), 0);
    e[factor] = ((j % x.orders[factor]) + x.orders[factor]) % x.orders[factor];
    x.coeffs[x.index(e)] = 1;
    return x;
}

IntGroupElement IntGroupElement::norm(std::vector<int> orders, size_t factor) {
    IntGroupElement x = zero(orders);
    for (int j = 0; j < orders[factor]; ++j) x = x + generator_power(orders, factor, j);
    return x;
}

size_t IntGroupElement::index(const std::vector<int>& exps) const {
    size_t idx = 0;
    for (size_t i = 0; i < orders.size(); ++i) idx = idx * static_cast<size_t>(orders[i]) + static_cast<size_t>(exps[i]);
    return idx;
}

IntGroupElement IntGroupElement::operator+(const IntGroupElement& o) const {
    require(orders == o.orders, ErrorCode::RingMismatch, "group rings differ");
    IntGroupElement x = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) x.coeffs[i] += o.coeffs[i];
    return x;
}

IntGroupElement IntGroupElement::operator-(const IntGroupElement& o) const {
    require(orders == o.orders, ErrorCode::RingMismatch, "group rings differ");
    IntGroupElement x = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) x.coeffs[i] -= o.coeffs[i];
    return x;
}

IntGroupElement IntGroupElement::operator*(const IntGroupElement& o) const {
    require(orders == o.orders, ErrorCode::RingMismatch, "group rings differ");
    IntGroupElement x = zero(orders);
    for (size_t a = 0; a < coeffs.size(); ++a) {
        if (coeffs[a] == 0) continue;
        auto ea = exps_of(orders, a);
        for (size_t b = 0; b < o.coeffs.size(); ++b) {
            if (o.coeffs[b] == 0) continue;
            auto eb = exps_of(orders, b);
            for (size_t i = 0; i < orders.size(); ++i) eb[i] = (ea[i] + eb[i]) % orders[i];
            x.coeffs[x.index(eb)] += coeffs[a] * o.coeffs[b];
        }
    }
    return x;
}

IntGroupElement derivative_operator(int order) {
    require(order >= 1, ErrorCode::InvalidArgument, "group order must be positive");
    std::vector<int> orders{order};
    IntGroupElement d = IntGroupElement::zero(orders);
    for (int j = 1; j < order; ++j) d.coeffs[static_cast<size_t>(j)] = j;
    return d;
}

bool telescoping_check(int order) {
    std::vector<int> orders{order};
    IntGroupElement d = derivative_operator(order);
    IntGroupElement lhs = (IntGroupElement::generator_power(orders, 0, 1) - IntGroupElement::constant(orders, 1)) * d;
    IntGroupElement rhs = IntGroupElement::constant(orders, order) - IntGroupElement::norm(orders, 0);
    return lhs == rhs;
}

IntGroupElement derivative_product(const std::vector<int>& orders) {
    IntGroupElement out = IntGroupElement::constant(orders, 1);
    for (size_t i = 0; i < orders.size(); ++i) {
        IntGroupElement d = IntGroupElement::zero(orders);
        for (int j = 1; j < orders[i]; ++j) d = d + IntGroupElement::generator_power(orders, i, j) * IntGroupElement::constant(orders, j);
        out = out * d;
    }
    return out;
}

TransitionTable::TransitionTable(Ring ring, size_t primes) : ring_(ring), k_(primes), x_(primes * primes, ring.zero()) {}

namespace {

std::vector<size_t> primes_of(Modulus n) {
    std::vector<size_t> out;
    for (size_t q = 0; q < 32; ++q)
        if (n & (1u << q)) out.push_back(q);
    return out;
}

const RVec& lookup(const KappaPrime& kappa, Modulus d) {
    auto it = kappa.find(d);
    require(it != kappa.end(), ErrorCode::MissingDivisor, "kappa' missing at a divisor");
    return it->second;
}

int perm_sign(const std::vector<size_t>& perm) {
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
    return inv % 2 ? -1 : 1;
}

// Visit every permutation of `support` (as images), with sign.
void for_each_permutation(const std::vector<size_t>& support,
                          const std::function<void(const std::vector<size_t>&, int)>& visit) {
    std::vector<size_t> idx(support.size());
    std::iota(idx.begin(), idx.end(), 0);
    do {
        std::vector<size_t> image(support.size());
        for (size_t i = 0; i < idx.size(); ++i) image[i] = support[idx[i]];
        visit(image, perm_sign(idx));
    } while (std::next_permutation(idx.begin(), idx.end()));
}

// Π_{l moved} x_{τ(l)}^{(l)} and the mask of fixed points.
RingElement transition_product(const TransitionTable& x, const std::vector<size_t>& support, const std::vector<size_t>& image,
                               Modulus& fixed) {
    RingElement prod = x.ring().one();
    fixed = 0;
    for (size_t i = 0; i < support.size(); ++i) {
        if (image[i] == support[i]) fixed |= 1u << support[i];
        else prod = prod * x.at(image[i], support[i]);
    }
    return prod;
}

}  // namespace

RVec kolyvagin_combination(const KappaPrime& kappa, const TransitionTable& x, Modulus n) {
    RVec total = lookup(kappa, n).scaled(x.ring().zero());
    auto support = primes_of(n);
    for_each_permutation(support, [&](const std::vector<size_t>& image, int sign) {
        Modulus fixed = 0;
        RingElement prod = transition_product(x, support, image, fixed);
        RVec term = lookup(kappa, fixed).scaled(prod);
        total = sign > 0 ? total + term : total - term;
    });
    return total;
}

RVec stabilizer_rearrangement(const KappaPrime& kappa, const TransitionTable& x, Modulus n, size_t q) {
    require(n & (1u << q), ErrorCode::InvalidArgument, "q must divide n");
    RVec total = lookup(kappa, n).scaled(x.ring().zero());
    auto support = primes_of(n);
    for_each_permutation(support, [&](const std::vector<size_t>& image, int sign) {
        size_t qpos = static_cast<size_t>(std::find(support.begin(), support.end(), q) - support.begin());
        if (image[qpos] != q) return;  // σ ∈ U_q(n)
        Modulus dsigma = 0;
        RingElement prod = transition_product(x, support, image, dsigma);
        // λ_σ = κ'_{d_σ} + Σ over cycles ρ through q inside V(d_σ).
        RVec lambda = lookup(kappa, dsigma);
        auto fixed = primes_of(dsigma);
        for_each_permutation(fixed, [&](const std::vector<size_t>& rho, int rsign) {
            // ρ must be a single cycle containing q (all other points fixed).
            size_t fq = static_cast<size_t>(std::find(fixed.begin(), fixed.end(), q) - fixed.begin());
            if (rho[fq] == q) return;
            std::vector<bool> in_cycle(fixed.size(), false);
            size_t cur = fq;
            while (!in_cycle[cur]) {
                in_cycle[cur] = true;
                cur = static_cast<size_t>(std::find(fixed.begin(), fixed.end(), rho[cur]) - fixed.begin());
            }
            for (size_t i = 0; i < fixed.size(); ++i)
                if (!in_cycle[i] && rho[i] != fixed[i]) return;
            Modulus drho = 0;
            RingElement rprod = transition_product(x, fixed, rho, drho);
            RVec term = lookup(kappa, drho).scaled(rprod);
            lambda = rsign > 0 ? lambda + term : lambda - term;
        });
        RVec term = lambda.scaled(prod);
        total = sign > 0 ? total + term : total - term;
    });
    return total;
}

bool stabilizer_rearrangement_check(const KappaPrime& kappa, const TransitionTable& x, Modulus n, size_t q) {
    return kolyvagin_combination(kappa, x, n) == stabilizer_rearrangement(kappa, x, n, q);
}

RMatrix cofactor(const RMatrix& f) {
    require(f.rows() == f.cols(), ErrorCode::ShapeMismatch, "cofactor needs a square matrix");
    return adjugate(f);
}

CofactorIso cofactor_iso(const RMatrix& tau) {
    require(tau.rows() == tau.cols(), ErrorCode::ShapeMismatch, "tau must be square");
    const Ring& ring = tau.ring();
    const size_t n = tau.rows();
    RMatrix f = RMatrix::identity(ring, n) - tau;
    CofactorIso out;
    out.source = PresentedModule(ring, n, f);
    require(out.source.min_generators() == 1, ErrorCode::CorankNotOne, "residual corank of tau - 1 is not one");
    require(determinant(f).is_zero(), ErrorCode::NonzeroDeterminant, "det(1 - tau) must vanish");
    RMatrix c = cofactor(f);
    Submodule fixed = kernel(f);
    out.target = present_subquotient(fixed, Submodule::zero(ring, n));
    out.lands_in_fixed = (c * f).is_zero();
    RMatrix coords(ring, n, out.target.generators.size());
    for (size_t i = 0; i < n; ++i) {
        auto sol = solve_combination(ring, n, out.target.generators, c.row(i));
        require(sol.has_value(), ErrorCode::NotExact, "cofactor image outside the fixed points");
        for (size_t k = 0; k < sol->size(); ++k) coords.set(i, k, sol->at(k));
    }
    out.map = ModuleMap(out.source, out.target.module, coords);
    out.bijective = out.map.is_bijective() && out.source.log_size() == fixed.log_size();
    return out;
}

}  // namespace gkit
