// Properties of the ring, linalg, modules and fitting suites.
#include <set>

#include "gkit/error.hpp"
#include "gkit/exterior.hpp"
#include "gkit/fitting.hpp"
#include "gkit/verify.hpp"

namespace gkit::verify {

namespace {

Outcome expect(bool cond, const std::string& what) { return cond ? Outcome{} : Outcome{false, false, what}; }

// |R|^k if it fits below bound.
bool enumerable(const Ring& r, size_t k, uint64_t bound) {
    uint64_t total = 1;
    for (size_t i = 0; i < k * r.group_order(); ++i) {
        total *= static_cast<uint64_t>(r.modulus());
        if (total > bound) return false;
    }
    return true;
}

json encode_module(const PresentedModule& m) { return {{"gens", m.gens()}, {"relations", encode(m.relations())}}; }

PresentedModule decode_module(const Ring& r, const json& j) {
    return PresentedModule(r, j.at("gens").get<size_t>(), decode_matrix(r, j.at("relations")));
}

PresentedModule random_module(const Ring& r, Rng& rng, size_t max_gens) {
    if (r.log_cardinality() > 4) max_gens = std::min<size_t>(max_gens, 2);
    size_t b = rng.range(1, max_gens), a = rng.range(0, b + 1);
    return PresentedModule(r, b, random_matrix(r, a, b, rng));
}

json elements(const std::vector<RingElement>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(encode(x));
    return out;
}

std::vector<RingElement> decode_elements(const Ring& r, const json& j) {
    std::vector<RingElement> out;
    for (const auto& x : j) out.push_back(decode_element(r, x));
    return out;
}

std::vector<RingElement> random_elements(const Ring& r, Rng& rng, size_t lo, size_t hi) {
    std::vector<RingElement> out;
    size_t n = rng.range(lo, hi);
    for (size_t i = 0; i < n; ++i) out.push_back(random_element(r, rng));
    return out;
}

// Additive closure of integer row vectors; empty result if it grows past limit.
std::set<std::vector<int64_t>> zspan(const ZMatrix& a, size_t limit) {
    const size_t c = a.cols();
    std::set<std::vector<int64_t>> seen{std::vector<int64_t>(c, 0)};
    std::vector<std::vector<int64_t>> frontier{std::vector<int64_t>(c, 0)};
    while (!frontier.empty()) {
        std::vector<std::vector<int64_t>> nxt;
        for (const auto& v : frontier)
            for (size_t i = 0; i < a.rows(); ++i) {
                std::vector<int64_t> w(c);
                for (size_t k = 0; k < c; ++k) w[k] = a.mod().add(v[k], a(i, k));
                if (seen.insert(w).second) {
                    if (seen.size() > limit) return {};
                    nxt.push_back(std::move(w));
                }
            }
        frontier = std::move(nxt);
    }
    return seen;
}

ZMatrix random_zmatrix(const Ring& ring, Rng& rng) {
    const ZMod& mod = ring.zmod();
    size_t rows = rng.range(1, 4), cols = rng.range(1, 4);
    ZMatrix a(mod, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k) {
            int64_t x = static_cast<int64_t>(rng.below(static_cast<uint64_t>(mod.modulus())));
            if (rng.coin()) x = mod.mul(x, mod.p());
            a.at(i, k) = x;
        }
    return a;
}

json encode_z(const ZMatrix& a) { return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", a.entries()}}; }

ZMatrix decode_z(const Ring& ring, const json& j) {
    return ZMatrix(ring.zmod(), j.at("rows").get<size_t>(), j.at("cols").get<size_t>(), j.at("entries").get<std::vector<int64_t>>());
}

// A submodule N = R·x ⊆ M together with N and M/N.
struct Sub {
    PresentedModule n, quotient;
};

Sub submodule_of(const PresentedModule& m, const std::vector<RVec>& xs) {
    std::vector<RVec> gens = xs;
    for (const auto& r : m.relations().row_list()) gens.push_back(r);
    Submodule w = Submodule::span(m.ring(), m.gens(), gens);
    return {present_subquotient(w, m.relation_span()).module, m.quotient(xs)};
}

// ---- ring ----

void ring_props(std::vector<Property>& out) {
    out.push_back({"ring.locality", "every element is a unit or lies in the maximal ideal, not both",
                   [](const Ring& r, Rng& rng) { return json{{"x", encode(random_element(r, rng))}}; },
                   [](const Ring& r, const json& j, uint64_t) {
                       RingElement x = decode_element(r, j.at("x"));
                       bool in_m = Ideal::generated(r, r.maximal_ideal_generators()).contains(x);
                       return expect(x.is_unit() != in_m, "unit/maximal-ideal dichotomy fails");
                   }});
    out.push_back({"ring.socle_simple", "dim_Fp socle(R) = 1 and socle = Ann(m)",
                   [](const Ring&, Rng&) { return json::object(); },
                   [](const Ring& r, const json&, uint64_t) {
                       Ideal s = socle(r);
                       if (s.log_size() != 1) return expect(false, "socle is not one-dimensional");
                       return expect(s == annihilator_of(r.maximal_ideal_generators(), r), "socle differs from Ann(m)");
                   }});
    out.push_back({"ring.ann_ann", "Ann(Ann(I)) = I; Ann(I) agrees with enumeration",
                   [](const Ring& r, Rng& rng) { return json{{"gens", elements(random_elements(r, rng, 1, 2))}}; },
                   [](const Ring& r, const json& j, uint64_t bound) {
                       auto gens = decode_elements(r, j.at("gens"));
                       Ideal i = Ideal::generated(r, gens);
                       Ideal ann = i.annihilator();
                       if (ann.annihilator() != i) return expect(false, "Ann(Ann(I)) != I");
                       if (enumerable(r, 1, bound))
                           for (const auto& x : enumerate_ring(r, bound)) {
                               bool kills = true;
                               for (const auto& g : gens) kills = kills && (x * g).is_zero();
                               if (kills != ann.contains(x)) return expect(false, "Ann(I) disagrees with enumeration at " + x.to_string());
                           }
                       return Outcome{};
                   }});
    out.push_back({"ring.regular_rep", "regular_rep is additive and multiplicative",
                   [](const Ring& r, Rng& rng) {
                       return json{{"x", encode(random_element(r, rng))}, {"y", encode(random_element(r, rng))}};
                   },
                   [](const Ring& r, const json& j, uint64_t) {
                       RingElement x = decode_element(r, j.at("x")), y = decode_element(r, j.at("y"));
                       ZMatrix a = regular_rep(x), b = regular_rep(y);
                       if (!(regular_rep(x * y) == a * b)) return expect(false, "rep(xy) != rep(x) rep(y)");
                       ZMatrix s = regular_rep(x + y);
                       for (size_t i = 0; i < s.rows(); ++i)
                           for (size_t k = 0; k < s.cols(); ++k)
                               if (s(i, k) != r.zmod().add(a(i, k), b(i, k))) return expect(false, "rep(x+y) != rep(x)+rep(y)");
                       return Outcome{};
                   }});
    out.push_back({"ring.ideal_chain", "I·J ⊆ I ∩ J ⊆ I ⊆ I + J",
                   [](const Ring& r, Rng& rng) {
                       return json{{"i", elements(random_elements(r, rng, 1, 2))}, {"j", elements(random_elements(r, rng, 1, 2))}};
                   },
                   [](const Ring& r, const json& j, uint64_t) {
                       Ideal a = Ideal::generated(r, decode_elements(r, j.at("i")));
                       Ideal b = Ideal::generated(r, decode_elements(r, j.at("j")));
                       Ideal meet = a.intersect(b);
                       return expect(meet.contains(a * b) && a.contains(meet) && (a + b).contains(a) && b.contains(meet),
                                     "ideal chain broken");
                   }});
}

// ---- linalg ----

void linalg_props(std::vector<Property>& out) {
    out.push_back({"linalg.howell", "Howell form is idempotent and preserves the row span",
                   [](const Ring& r, Rng& rng) { return json{{"a", encode_z(random_zmatrix(r, rng))}}; },
                   [](const Ring& r, const json& j, uint64_t bound) {
                       ZMatrix a = decode_z(r, j.at("a"));
                       ZMatrix h = howell_form(a);
                       if (!(howell_form(h) == h)) return expect(false, "howell_form not idempotent");
                       HowellBasis ha(a), hh(h);
                       if (!(ha == hh)) return expect(false, "canonical bases differ");
                       size_t limit = static_cast<size_t>(std::min<uint64_t>(bound, 4096));
                       auto sa = zspan(a, limit);
                       if (sa.empty()) return Outcome{};
                       auto sh = zspan(h, limit);
                       if (sa != sh) return expect(false, "row spans differ by enumeration");
                       int64_t expected = 1;
                       for (int64_t k = 0; k < ha.log_size(); ++k) expected *= r.p();
                       return expect(static_cast<int64_t>(sa.size()) == expected, "log_size disagrees with enumeration");
                   }});
    out.push_back({"linalg.kernel_closure", "kernel rows annihilate A and ker(ker(A)^T) contains the columns of A",
                   [](const Ring& r, Rng& rng) { return json{{"a", encode_z(random_zmatrix(r, rng))}}; },
                   [](const Ring& r, const json& j, uint64_t bound) {
                       ZMatrix a = decode_z(r, j.at("a"));
                       ZMatrix k = kernel(a);
                       if (!(k * a).is_zero()) return expect(false, "kernel row does not annihilate A");
                       HowellBasis closure(kernel(k.transpose()));
                       ZMatrix at = a.transpose();
                       for (size_t i = 0; i < at.rows(); ++i)
                           if (!closure.contains(at.row(i))) return expect(false, "column of A outside the double kernel");
                       // Kernel cardinality by enumeration.
                       uint64_t total = 1;
                       for (size_t i = 0; i < a.rows(); ++i) total *= static_cast<uint64_t>(r.modulus());
                       if (total > bound) return Outcome{};
                       uint64_t count = 0;
                       std::vector<int64_t> x(a.rows(), 0);
                       for (uint64_t c = 0; c < total; ++c) {
                           uint64_t t = c;
                           for (auto& xi : x) {
                               xi = static_cast<int64_t>(t % static_cast<uint64_t>(r.modulus()));
                               t /= static_cast<uint64_t>(r.modulus());
                           }
                           auto y = a.left_multiply(x);
                           if (std::all_of(y.begin(), y.end(), [](int64_t v) { return v == 0; })) ++count;
                       }
                       int64_t expected = 1;
                       for (int64_t e = 0; e < HowellBasis(k).log_size(); ++e) expected *= r.p();
                       return expect(static_cast<int64_t>(count) == expected, "kernel size disagrees with enumeration");
                   }});
    out.push_back({"linalg.solve", "solve succeeds on the row span and its witness verifies",
                   [](const Ring& r, Rng& rng) {
                       size_t n = rng.range(1, 3), k = rng.range(1, 3);
                       std::vector<RVec> gens;
                       for (size_t i = 0; i < k; ++i) gens.push_back(random_vec(r, n, rng));
                       return json{{"a", encode_z(random_zmatrix(r, rng))},
                                   {"gens", encode_vecs(gens)},
                                   {"x", rng.next()}};
                   },
                   [](const Ring& r, const json& j, uint64_t) {
                       ZMatrix a = decode_z(r, j.at("a"));
                       Rng rng(j.at("x").get<uint64_t>());
                       std::vector<int64_t> x(a.rows());
                       for (auto& xi : x) xi = static_cast<int64_t>(rng.below(static_cast<uint64_t>(r.modulus())));
                       auto b = a.left_multiply(x);
                       auto sol = try_solve(a, b);
                       if (!sol || a.left_multiply(*sol) != b) return expect(false, "integer solve failed");
                       auto gens = decode_vecs(r, j.at("gens"));
                       RVec target(r, gens.front().size());
                       std::vector<RingElement> coeffs;
                       for (const auto& g : gens) {
                           coeffs.push_back(random_element(r, rng));
                           target += g.scaled(coeffs.back());
                       }
                       auto c = solve_combination(r, target.size(), gens, target);
                       if (!c) return expect(false, "ring solve failed on the span");
                       RVec back(r, target.size());
                       for (size_t i = 0; i < gens.size(); ++i) back += gens[i].scaled(c->at(i));
                       return expect(back == target, "ring solve witness does not verify");
                   }});
}

// ---- modules ----

void module_props(std::vector<Property>& out) {
    out.push_back({"modules.dual_size", "|M^*| = |M|, with |M| checked by enumeration when small",
                   [](const Ring& r, Rng& rng) { return json{{"m", encode_module(random_module(r, rng, 2))}}; },
                   [](const Ring& r, const json& j, uint64_t bound) {
                       PresentedModule m = decode_module(r, j.at("m"));
                       if (dual(m).module.log_size() != m.log_size()) return expect(false, "|M^*| != |M|");
                       if (!enumerable(r, m.gens(), bound)) return Outcome{};
                       ZMatrix rows = expand_span(r, m.gens(), m.relations().row_list());
                       auto rel = zspan(rows, static_cast<size_t>(bound) + 1);
                       uint64_t total = 1;
                       for (size_t i = 0; i < m.gens() * r.group_order(); ++i) total *= static_cast<uint64_t>(r.modulus());
                       int64_t expected = 1;
                       for (int64_t k = 0; k < m.log_size(); ++k) expected *= r.p();
                       return expect(!rel.empty() && total / rel.size() == static_cast<uint64_t>(expected), "|M| disagrees with enumeration");
                   }});
    out.push_back({"modules.biduality", "the biduality map M → M^** is bijective",
                   [](const Ring& r, Rng& rng) { return json{{"m", encode_module(random_module(r, rng, 2))}}; },
                   [](const Ring& r, const json& j, uint64_t) {
                       return expect(biduality_map(decode_module(r, j.at("m"))).is_bijective(), "biduality map not bijective");
                   }});
    out.push_back({"modules.exterior_free", "Λ^k of a free module of rank n is free of rank C(n, k)",
                   [](const Ring&, Rng& rng) {
                       size_t n = rng.range(0, 3);
                       return json{{"n", n}, {"k", rng.range(0, n + 1)}};
                   },
                   [](const Ring& r, const json& j, uint64_t) {
                       size_t n = j.at("n").get<size_t>(), k = j.at("k").get<size_t>();
                       auto e = exterior_power(PresentedModule::free(r, n), k);
                       size_t rank = k <= n ? binomial(n, k) : 0;
                       return expect(e.log_size() == static_cast<int64_t>(rank) * r.log_cardinality() && e.min_generators() == rank,
                                     "exterior power of a free module has the wrong size");
                   }});
    out.push_back({"modules.kernel_exact", "kernel generators map to zero and |ker f|·|im f| = |M|",
                   [](const Ring& r, Rng& rng) {
                       PresentedModule m = random_module(r, rng, 2);
                       size_t c = rng.range(1, 2);
                       RMatrix f = random_matrix(r, m.gens(), c, rng);
                       RMatrix nrel = random_matrix(r, rng.range(0, 1), c, rng);
                       return json{{"m", encode_module(m)}, {"f", encode(f)}, {"n_relations", encode(nrel)}};
                   },
                   [](const Ring& r, const json& j, uint64_t) {
                       PresentedModule m = decode_module(r, j.at("m"));
                       RMatrix f = decode_matrix(r, j.at("f"));
                       // Enlarge the target relations so that f is well defined.
                       std::vector<RVec> rel = decode_matrix(r, j.at("n_relations")).row_list();
                       for (const auto& row : (m.relations() * f).row_list()) rel.push_back(row);
                       PresentedModule n = PresentedModule::from_relations(r, f.cols(), Submodule::span(r, f.cols(), rel));
                       ModuleMap map(m, n, f);
                       auto k = kernel_module(map);
                       for (const auto& g : k.generators)
                           if (!map.apply(g).is_zero()) return expect(false, "kernel generator has nonzero image");
                       return expect(k.presentation.log_size() + map.image_log_size() == m.log_size(), "|ker|·|im| != |M|");
                   }});
    out.push_back({"modules.socle_multiplier", "r·x ≠ 0 and m·r·x = 0 for the returned multiplier r",
                   [](const Ring& r, Rng& rng) {
                       PresentedModule m = random_module(r, rng, 2);
                       return json{{"m", encode_module(m)}, {"x", encode(random_vec(r, m.gens(), rng))}};
                   },
                   [](const Ring& r, const json& j, uint64_t) {
                       PresentedModule m = decode_module(r, j.at("m"));
                       auto x = m.element(decode_vec(r, j.at("x")));
                       if (x.is_zero()) return Outcome{};
                       RingElement s = socle_multiplier(x);
                       if (x.scaled(s).is_zero()) return expect(false, "r·x vanishes");
                       for (const auto& g : r.maximal_ideal_generators())
                           if (!x.scaled(g * s).is_zero()) return expect(false, "r·x is not in the socle");
                       return Outcome{};
                   }});
}

// ---- fitting ----

json module_instance(const Ring& r, Rng& rng) {
    PresentedModule m = random_module(r, rng, 3);
    return {{"m", encode_module(m)}, {"x", encode(random_vec(r, m.gens(), rng))}};
}

void fitting_props(std::vector<Property>& out) {
    out.push_back({"fitting.surjection", "M ↠ N gives Fitt^i(M) ⊆ Fitt^i(N)", module_instance,
                   [](const Ring& r, const json& j, uint64_t) {
                       PresentedModule m = decode_module(r, j.at("m"));
                       auto q = m.quotient({decode_vec(r, j.at("x"))});
                       for (size_t i = 0; i <= m.gens(); ++i)
                           if (!fitting_ideal(q, i).contains(fitting_ideal(m, i))) return expect(false, "containment fails at i = " + std::to_string(i));
                       return Outcome{};
                   }});
    out.push_back({"fitting.subquotient_product", "Fitt^i(N)·Fitt^j(M/N) ⊆ Fitt^{i+j}(M)", module_instance,
                   [](const Ring& r, const json& j, uint64_t) {
                       PresentedModule m = decode_module(r, j.at("m"));
                       Sub s = submodule_of(m, {decode_vec(r, j.at("x"))});
                       for (size_t a = 0; a <= s.n.gens(); ++a)
                           for (size_t b = 0; b <= m.gens(); ++b)
                               if (!fitting_ideal(m, a + b).contains(fitting_ideal(s.n, a) * fitting_ideal(s.quotient, b)))
                                   return expect(false, "product containment fails at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
                       return Outcome{};
                   }});
    out.push_back({"fitting.direct_sum", "Fitt^i(M ⊕ N) = Σ_a Fitt^a(M)·Fitt^{i-a}(N)",
                   [](const Ring& r, Rng& rng) {
                       return json{{"m", encode_module(random_module(r, rng, 2))}, {"n", encode_module(random_module(r, rng, 1))}};
                   },
                   [](const Ring& r, const json& j, uint64_t) {
                       PresentedModule m = decode_module(r, j.at("m")), n = decode_module(r, j.at("n"));
                       auto s = direct_sum(m, n);
                       for (size_t i = 0; i <= s.gens(); ++i) {
                           Ideal sum = Ideal::zero(r);
                           for (size_t a = 0; a <= i; ++a) sum = sum + fitting_ideal(m, a) * fitting_ideal(n, i - a);
                           if (fitting_ideal(s, i) != sum) return expect(false, "direct sum formula fails at i = " + std::to_string(i));
                       }
                       return Outcome{};
                   }});
    out.push_back({"fitting.base_change", "Fitt^i(M ⊗ R/(p^j)) is the image of Fitt^i(M)", module_instance,
                   [](const Ring& r, const json& j, uint64_t) {
                       PresentedModule m = decode_module(r, j.at("m"));
                       for (int k = 1; k < r.m(); ++k) {
                           Ring t = r.quotient(k);
                           for (size_t i = 0; i <= m.gens(); ++i)
                               if (fitting_ideal(m, i).image_in(t) != fitting_ideal(m.base_change(t), i))
                                   return expect(false, "base change fails at i = " + std::to_string(i));
                       }
                       return Outcome{};
                   }});
    out.push_back({"fitting.annihilation", "Fitt^j(M) kills Λ^i M for j < i", module_instance,
                   [](const Ring& r, const json& j, uint64_t) {
                       PresentedModule m = decode_module(r, j.at("m"));
                       for (size_t i = 1; i <= m.gens(); ++i) {
                           auto lam = exterior_power(m, i);
                           for (size_t k = 0; k < i; ++k)
                               for (const auto& z : fitting_ideal(m, k).generators())
                                   for (size_t g = 0; g < lam.gens(); ++g)
                                       if (!lam.generator(g).scaled(z).is_zero())
                                           return expect(false, "Fitt^" + std::to_string(k) + " does not kill Λ^" + std::to_string(i));
                       }
                       return Outcome{};
                   }});
    out.push_back({"fitting.char_ann", "char(M) = Ann(M), with Ann(M) also found by enumerating R", module_instance,
                   [](const Ring& r, const json& j, uint64_t bound) {
                       PresentedModule m = decode_module(r, j.at("m"));
                       Ideal ch = characteristic_ideal(m);
                       if (ch != annihilator_module(m)) return expect(false, "char != Ann");
                       if (!enumerable(r, 1, bound)) return Outcome{true, true, "ring above the enumeration bound"};
                       return expect(ch == annihilator_module_enumerated(m, bound), "char != enumerated Ann");
                   }});
    out.push_back({"fitting.fitt0_in_char", "Fitt^0(M) ⊆ char(M), with equality for free M",
                   [](const Ring& r, Rng& rng) {
                       json inst = module_instance(r, rng);
                       inst["free"] = rng.below(4) == 0;
                       return inst;
                   },
                   [](const Ring& r, const json& j, uint64_t) {
                       PresentedModule m = decode_module(r, j.at("m"));
                       if (j.value("free", false)) m = PresentedModule::free(r, m.gens());
                       Ideal ch = characteristic_ideal(m), f0 = fitting_ideal(m, 0);
                       if (!ch.contains(f0)) return expect(false, "Fitt^0 not inside char");
                       if (j.value("free", false) && ch != f0) return expect(false, "equality fails for a free module");
                       return Outcome{};
                   }});
    out.push_back({"fitting.char_subobject", "char(M) ⊆ char(N) ∩ char(M/N)", module_instance,
                   [](const Ring& r, const json& j, uint64_t) {
                       PresentedModule m = decode_module(r, j.at("m"));
                       Sub s = submodule_of(m, {decode_vec(r, j.at("x"))});
                       Ideal both = characteristic_ideal(s.n).intersect(characteristic_ideal(s.quotient));
                       return expect(both.contains(characteristic_ideal(m)), "char(M) not inside char(N) ∩ char(M/N)");
                   }});
}

}  // namespace

void register_algebra(std::vector<Property>& out) {
    ring_props(out);
    linalg_props(out);
    module_props(out);
    fitting_props(out);
}

}  // namespace gkit::verify
