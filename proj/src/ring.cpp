#include "gkit/ring.hpp"

#include <numeric>
#include <sstream>

#include "gkit/error.hpp"

namespace gkit {

size_t GroupSpec::order() const {
    size_t n = 1;
    for (int c : cyclic_orders) n *= static_cast<size_t>(c);
    return n;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct Ring::Impl {
    int p = 0;
    int m = 0;
    ZMod zmod;
    GroupSpec group;
    size_t order = 1;
    std::vector<size_t> strides;
    std::vector<size_t> add;
    std::vector<size_t> neg;
};

Ring Ring::make(int p, int m, GroupSpec group) {
    require(is_prime(p), ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
    require(m >= 1, ErrorCode::InvalidArgument, "m must be positive");
    for (int c : group.cyclic_orders) {
        require(c > 1, ErrorCode::NonLocalGroup, "cyclic order must exceed 1");
        int x = c;
        while (x % p == 0) x /= p;
        require(x == 1, ErrorCode::NonLocalGroup, std::to_string(c) + " is not a power of " + std::to_string(p));
    }
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->zmod = ZMod(p, m);
    impl->group = group;
    impl->order = group.order();
    const size_t k = group.cyclic_orders.size();
    impl->strides.assign(k, 1);
    for (size_t i = k; i-- > 1;) impl->strides[i - 1] = impl->strides[i] * static_cast<size_t>(group.cyclic_orders[i]);
    const size_t n = impl->order;
    impl->add.resize(n * n);
    impl->neg.resize(n);
    Ring tmp;
    tmp.impl_ = impl;
    for (size_t a = 0; a < n; ++a) {
        auto ea = tmp.exponents(a);
        std::vector<int> en(k);
        for (size_t i = 0; i < k; ++i) en[i] = (group.cyclic_orders[i] - ea[i]) % group.cyclic_orders[i];
        impl->neg[a] = tmp.index_of(en);
        for (size_t b = 0; b < n; ++b) {
            auto eb = tmp.exponents(b);
            std::vector<int> es(k);
            for (size_t i = 0; i < k; ++i) es[i] = (ea[i] + eb[i]) % group.cyclic_orders[i];
            impl->add[a * n + b] = tmp.index_of(es);
        }
    }
    return tmp;
}

int Ring::p() const { return impl_->p; }
int Ring::m() const { return impl_->m; }
int64_t Ring::modulus() const { return impl_->zmod.modulus(); }
const ZMod& Ring::zmod() const { return impl_->zmod; }
const GroupSpec& Ring::group() const { return impl_->group; }
size_t Ring::group_order() const { return impl_->order; }

size_t Ring::add_index(size_t a, size_t b) const { return impl_->add[a * impl_->order + b]; }
size_t Ring::neg_index(size_t a) const { return impl_->neg[a]; }

std::vector<int> Ring::exponents(size_t index) const {
    const auto& orders = impl_->group.cyclic_orders;
    std::vector<int> e(orders.size());
    for (size_t i = 0; i < orders.size(); ++i) {
        e[i] = static_cast<int>((index / impl_->strides[i]) % static_cast<size_t>(orders[i]));
    }
    return e;
}

size_t Ring::index_of(const std::vector<int>& exponents) const {
    const auto& orders = impl_->group.cyclic_orders;
    require(exponents.size() == orders.size(), ErrorCode::ShapeMismatch, "exponent tuple length");
    size_t idx = 0;
    for (size_t i = 0; i < orders.size(); ++i) {
        int e = ((exponents[i] % orders[i]) + orders[i]) % orders[i];
        idx += static_cast<size_t>(e) * impl_->strides[i];
    }
    return idx;
}

RingElement Ring::zero() const { return RingElement(*this, std::vector<int64_t>(group_order(), 0)); }

RingElement Ring::one() const { return constant(1); }

RingElement Ring::constant(int64_t c) const {
    std::vector<int64_t> v(group_order(), 0);
    v[0] = c;
    return RingElement(*this, std::move(v));
}

RingElement Ring::group_element(size_t index) const {
    std::vector<int64_t> v(group_order(), 0);
    v.at(index) = 1;
    return RingElement(*this, std::move(v));
}

RingElement Ring::generator(size_t factor) const {
    std::vector<int> e(group().cyclic_orders.size(), 0);
    e.at(factor) = 1;
    return group_element(index_of(e));
}

std::vector<RingElement> Ring::maximal_ideal_generators() const {
    std::vector<RingElement> g{constant(p())};
    for (size_t i = 0; i < group().cyclic_orders.size(); ++i) g.push_back(generator(i) - one());
    return g;
}

Ring Ring::quotient(int i) const {
    require(i >= 1 && i <= m(), ErrorCode::DepthExceeded, "quotient depth " + std::to_string(i) + " exceeds m");
    if (i == m()) return *this;
    return make(p(), i, group());
}

RingElement Ring::project(const RingElement& x) const {
    require(x.ring().p() == p() && x.ring().group() == group() && x.ring().m() >= m(), ErrorCode::RingMismatch,
            "projection between incompatible rings");
    return RingElement(*this, x.coeffs());
}

RingElement Ring::lift(const RingElement& x) const {
    require(x.ring().p() == p() && x.ring().group() == group(), ErrorCode::RingMismatch, "lift between incompatible rings");
    return RingElement(*this, x.coeffs());
}

std::string Ring::describe() const {
    std::ostringstream os;
    os << "(Z/" << modulus() << ")[";
    if (group().cyclic_orders.empty()) os << "1";
    for (size_t i = 0; i < group().cyclic_orders.size(); ++i) os << (i ? "x" : "") << "C" << group().cyclic_orders[i];
    os << "]";
    return os.str();
}

bool Ring::operator==(const Ring& o) const {
    if (impl_ == o.impl_) return true;
    if (!impl_ || !o.impl_) return false;
    return impl_->p == o.impl_->p && impl_->m == o.impl_->m && impl_->group == o.impl_->group;
}

void check_same_ring(const Ring& a, const Ring& b) {
    require(a.valid() && b.valid() && a == b, ErrorCode::RingMismatch, "operands live in different rings");
}

RingElement::RingElement(Ring ring, std::vector<int64_t> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
    require(ring_.valid(), ErrorCode::InvalidArgument, "element of an invalid ring");
    require(c_.size() == ring_.group_order(), ErrorCode::ShapeMismatch, "coefficient vector length must equal |G|");
    for (auto& x : c_) x = ring_.zmod().reduce(x);
}

bool RingElement::is_zero() const {
    for (auto x : c_)
        if (x != 0) return false;
    return true;
}

int64_t RingElement::augmentation() const {
    int64_t s = 0;
    for (auto x : c_) s += x;
    return ring_.zmod().reduce(s);
}

bool RingElement::is_unit() const { return augmentation() % ring_.p() != 0; }

RingElement RingElement::inverse() const {
    require(is_unit(), ErrorCode::InvalidArgument, "element is not a unit");
    auto one = ring_.one();
    auto y = try_solve(regular_rep(*this), one.coeffs());
    if (!y) fail(ErrorCode::NoSolution, "unit without inverse");
    return RingElement(ring_, *y);
}

RingElement RingElement::operator+(const RingElement& o) const {
    RingElement r = *this;
    r += o;
    return r;
}

RingElement RingElement::operator-(const RingElement& o) const {
    RingElement r = *this;
    r -= o;
    return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    check_same_ring(ring_, o.ring_);
    const int64_t n = ring_.modulus();
    for (size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % n;
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    check_same_ring(ring_, o.ring_);
    const int64_t n = ring_.modulus();
    for (size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + n - o.c_[i]) % n;
    return *this;
}

RingElement RingElement::operator-() const {
    RingElement r = *this;
    for (auto& x : r.c_) x = ring_.zmod().neg(x);
    return r;
}

RingElement RingElement::scaled(int64_t k) const {
    RingElement r = *this;
    for (auto& x : r.c_) x = ring_.zmod().mul(x, ring_.zmod().reduce(k));
    return r;
}

void ring_mul_acc(const Ring& r, const int64_t* a, const int64_t* b, int64_t* out) {
    const size_t n = r.group_order();
    const int64_t mod = r.modulus();
    if (n == 1) {
        out[0] = (out[0] + a[0] * b[0]) % mod;
        return;
    }
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            size_t k = r.add_index(i, j);
            out[k] = (out[k] + a[i] * b[j]) % mod;
        }
    }
}

RingElement RingElement::operator*(const RingElement& o) const {
    check_same_ring(ring_, o.ring_);
    std::vector<int64_t> out(c_.size(), 0);
    ring_mul_acc(ring_, c_.data(), o.c_.data(), out.data());
    return RingElement(ring_, std::move(out));
}

bool RingElement::operator==(const RingElement& o) const { return ring_ == o.ring_ && c_ == o.c_; }

std::string RingElement::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << "]";
    return os.str();
}

ZMatrix regular_rep(const RingElement& x) {
    const Ring& r = x.ring();
    const size_t n = r.group_order();
    ZMatrix a(r.zmod(), n, n);
    for (size_t g = 0; g < n; ++g)
        for (size_t h = 0; h < n; ++h) a.at(g, r.add_index(g, h)) = x[h];
    return a;
}

}  // namespace gkit
