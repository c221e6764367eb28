#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gkit/linalg.hpp"

namespace gkit {

struct GroupSpec {
    std::vector<int> cyclic_orders;

    size_t order() const;
    bool operator==(const GroupSpec&) const = default;
};

class RingElement;

// The group ring (Z/p^m)[G] of a finite abelian p-group G. Group elements are
// indexed by their exponent tuples in lexicographic order (first cyclic
// factor most significant). Copies share immutable state.
class Ring {
public:
    Ring() = default;

    // Throws NonPrimeModulus / NonLocalGroup on invalid input.
    static Ring make(int p, int m, GroupSpec group);

    bool valid() const { return impl_ != nullptr; }
    int p() const;
    int m() const;
    int64_t modulus() const;
    const ZMod& zmod() const;
    const GroupSpec& group() const;
    size_t group_order() const;
    // log_p |R|.
    int64_t log_cardinality() const { return static_cast<int64_t>(m()) * static_cast<int64_t>(group_order()); }

    size_t add_index(size_t a, size_t b) const;
    size_t neg_index(size_t a) const;
    std::vector<int> exponents(size_t index) const;
    size_t index_of(const std::vector<int>& exponents) const;

    RingElement zero() const;
    RingElement one() const;
    RingElement constant(int64_t c) const;
    RingElement group_element(size_t index) const;
    // The generator of the i-th cyclic factor.
    RingElement generator(size_t factor) const;
    // {p} followed by {g_i - 1}.
    std::vector<RingElement> maximal_ideal_generators() const;

    // (Z/p^i)[G] for 1 <= i <= m; DepthExceeded otherwise.
    Ring quotient(int i) const;
    // Reduce the coefficients of x (an element of a ring over the same group
    // with larger or equal m) into this ring.
    RingElement project(const RingElement& x) const;
    // Element of this ring with the same integer coefficients as x (any m).
    RingElement lift(const RingElement& x) const;

    std::string describe() const;

    bool operator==(const Ring& o) const;
    bool operator!=(const Ring& o) const { return !(*this == o); }

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

class RingElement {
public:
    RingElement() = default;
    RingElement(Ring ring, std::vector<int64_t> coeffs);

    const Ring& ring() const { return ring_; }
    const std::vector<int64_t>& coeffs() const { return c_; }
    int64_t operator[](size_t i) const { return c_[i]; }

    bool is_zero() const;
    // Sum of coefficients.
    int64_t augmentation() const;
    // Units are exactly the elements with augmentation prime to p.
    bool is_unit() const;
    RingElement inverse() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    RingElement scaled(int64_t k) const;
    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);

    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Ring ring_;
    std::vector<int64_t> c_;
};

void check_same_ring(const Ring& a, const Ring& b);

// Matrix of y -> y·x on the group basis (row g holds the coefficients of g·x).
ZMatrix regular_rep(const RingElement& x);

// Raw convolution used by hot loops: out += a * b.
void ring_mul_acc(const Ring& r, const int64_t* a, const int64_t* b, int64_t* out);

bool is_prime(int64_t n);

}  // namespace gkit
