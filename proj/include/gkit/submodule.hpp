#pragma once

#include <optional>
#include <vector>

#include "gkit/rmatrix.hpp"

namespace gkit {

// An R-submodule of R^n, held in canonical form as the Howell basis of its
// expanded Z/p^m span.
class Submodule {
public:
    Submodule() = default;
    static Submodule zero(const Ring& ring, size_t n);
    static Submodule full(const Ring& ring, size_t n);
    static Submodule span(const Ring& ring, size_t n, const std::vector<RVec>& gens);
    // rows must already span an R-stable set over Z/p^m.
    static Submodule from_zspan(const Ring& ring, size_t n, const ZMatrix& rows);

    const Ring& ring() const { return ring_; }
    size_t ambient() const { return n_; }
    const HowellBasis& basis() const { return h_; }

    bool contains(const RVec& v) const;
    bool contains(const Submodule& o) const;
    bool operator==(const Submodule& o) const { return ring_ == o.ring_ && n_ == o.n_ && h_ == o.h_; }
    bool operator!=(const Submodule& o) const { return !(*this == o); }
    RVec reduce(const RVec& v) const;
    // log_p of the cardinality.
    int64_t log_size() const { return h_.log_size(); }
    bool is_zero() const { return h_.size() == 0; }

    Submodule operator+(const Submodule& o) const;
    Submodule intersect(const Submodule& o) const;
    Submodule scaled(const RingElement& r) const;
    // m·W for the maximal ideal m.
    Submodule maximal_multiple() const;

    // Howell rows viewed as vectors; they span W over Z/p^m.
    std::vector<RVec> zgenerators() const;
    // A minimal R-generating set (a lift of a basis of W/mW).
    std::vector<RVec> minimal_generators() const;
    // Minimal generators of W/(W ∩ base) given base ⊆ W.
    std::vector<RVec> minimal_generators_mod(const Submodule& base) const;

private:
    Ring ring_;
    size_t n_ = 0;
    HowellBasis h_;
};

// {wA : w ∈ W} for A of shape k × n and W ⊆ R^k.
Submodule image(const Submodule& w, const RMatrix& a);
Submodule image(const RMatrix& a);
// {x ∈ R^k : xA ∈ W}.
Submodule preimage(const RMatrix& a, const Submodule& w);
Submodule kernel(const RMatrix& a);

// Coefficients c with Σ c_i gens_i = target, if any.
std::optional<RVec> solve_combination(const Ring& ring, size_t n, const std::vector<RVec>& gens, const RVec& target);

class Ideal {
public:
    Ideal() = default;
    explicit Ideal(Submodule s);
    static Ideal generated(const Ring& ring, const std::vector<RingElement>& gens);
    static Ideal zero(const Ring& ring);
    static Ideal whole(const Ring& ring);
    // Ideal generated by the coordinates of v.
    static Ideal of_entries(const RVec& v);

    const Ring& ring() const { return s_.ring(); }
    const Submodule& submodule() const { return s_; }
    const HowellBasis& canonical_basis() const { return s_.basis(); }

    bool contains(const RingElement& x) const;
    bool contains(const Ideal& o) const { return s_.contains(o.s_); }
    bool is_whole() const;
    bool is_zero() const { return s_.is_zero(); }
    int64_t log_size() const { return s_.log_size(); }

    Ideal operator+(const Ideal& o) const;
    Ideal operator*(const Ideal& o) const;
    Ideal intersect(const Ideal& o) const;
    Ideal annihilator() const;
    // Image under the coefficient reduction onto a quotient ring.
    Ideal image_in(const Ring& quotient) const;

    std::vector<RingElement> generators() const;
    std::vector<RingElement> zgenerators() const;

    bool operator==(const Ideal& o) const { return s_ == o.s_; }
    bool operator!=(const Ideal& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Submodule s_;
};

Ideal socle(const Ring& ring);
// Ideal generated by a set, Ann of a single element, etc.
Ideal annihilator_of(const std::vector<RingElement>& xs, const Ring& ring);

}  // namespace gkit
