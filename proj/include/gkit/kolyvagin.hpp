#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gkit/module.hpp"

namespace gkit {

// Element of the integral group ring Z[C_{n_1} × ... × C_{n_k}], coefficients
// indexed like Ring group elements (first factor most significant).
struct IntGroupElement {
    std::vector<int> orders;
    std::vector<int64_t> coeffs;

    static IntGroupElement zero(std::vector<int> orders);
    static IntGroupElement constant(std::vector<int> orders, int64_t c);
    // σ_i^j for the generator of factor i.
    static IntGroupElement generator_power(std::vector<int> orders, size_t factor, int j);
    // Norm element of factor i.
    static IntGroupElement norm(std::vector<int> orders, size_t factor);

    size_t index(const std::vector<int>& exps) const;
    IntGroupElement operator+(const IntGroupElement& o) const;
    IntGroupElement operator-(const IntGroupElement& o) const;
    IntGroupElement operator*(const IntGroupElement& o) const;
    bool operator==(const IntGroupElement& o) const = default;
};

// D_q = Σ_{j=1}^{n-1} j σ^j in Z[C_n].
IntGroupElement derivative_operator(int order);
// (σ - 1)·D_q == n - N_G.
bool telescoping_check(int order);
// D_n = Π_q D_q in Z[Π_q C_{n_q}].
IntGroupElement derivative_product(const std::vector<int>& orders);

// Prime symbols are 0..k-1 in the global order ≺; a modulus is a bit mask.
using Modulus = uint32_t;

// x(l, q) = x_l^{(q)} for distinct l, q.
class TransitionTable {
public:
    TransitionTable() = default;
    TransitionTable(Ring ring, size_t primes);
    size_t primes() const { return k_; }
    const Ring& ring() const { return ring_; }
    const RingElement& at(size_t l, size_t q) const { return x_[l * k_ + q]; }
    void set(size_t l, size_t q, const RingElement& v) { x_[l * k_ + q] = v; }

private:
    Ring ring_;
    size_t k_ = 0;
    std::vector<RingElement> x_;
};

// κ'_d for divisors d, each a vector in a free coefficient module R^w.
using KappaPrime = std::map<Modulus, RVec>;

// Σ_τ sgn(τ)·Π_{q moved by τ} x_{τ(q)}^{(q)}·κ'_{d_τ}; MissingDivisor if some κ'_d is absent.
RVec kolyvagin_combination(const KappaPrime& kappa, const TransitionTable& x, Modulus n);

// The right-hand side of the rearrangement through the stabiliser U_q(n).
RVec stabilizer_rearrangement(const KappaPrime& kappa, const TransitionTable& x, Modulus n, size_t q);
bool stabilizer_rearrangement_check(const KappaPrime& kappa, const TransitionTable& x, Modulus n, size_t q);

// Adjugate: f·c_f = c_f·f = det(f)·I.
RMatrix cofactor(const RMatrix& f);

struct CofactorIso {
    PresentedModule source;   // A/(τ-1)A
    Subquotient target;       // A^{τ=1}
    ModuleMap map;
    bool lands_in_fixed = false;
    bool bijective = false;
};

// A = R^n with τ acting on row vectors; uses f = 1 - τ.
// CorankNotOne unless A/(τ-1)A ⊗ F_p has dimension one; NonzeroDeterminant if det(f) != 0.
CofactorIso cofactor_iso(const RMatrix& tau);

}  // namespace gkit
