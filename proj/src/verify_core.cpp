#include "gkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "gkit/error.hpp"

namespace gkit::verify {

uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t Rng::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

uint64_t instance_seed(uint64_t seed, std::string_view property, std::string_view ring, uint64_t index) {
    uint64_t s = mix64(seed ^ fnv1a(property));
    s = mix64(s ^ fnv1a(ring));
    return mix64(s ^ index);
}

namespace {

// Whole-token positive integer; UsageError otherwise.
int parse_positive(std::string_view tok, const std::string& text) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    require(ec == std::errc() && ptr == tok.data() + tok.size() && v >= 1, ErrorCode::UsageError,
            "malformed ring: " + text);
    return v;
}

}  // namespace

RingSpec parse_ring_spec(const std::string& text) {
    RingSpec s;
    bool have_p = false, have_m = false, have_g = false;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto eq = part.find('=');
        require(eq != std::string::npos, ErrorCode::UsageError, "ring field without '=': " + part);
        std::string key = part.substr(0, eq), val = part.substr(eq + 1);
        bool* seen = key == "p" ? &have_p : key == "m" ? &have_m : key == "g" ? &have_g : nullptr;
        require(seen != nullptr, ErrorCode::UsageError, "unknown ring field: " + key);
        require(!*seen, ErrorCode::UsageError, "repeated ring field: " + key);
        *seen = true;
        if (key == "p") {
            s.p = parse_positive(val, text);
        } else if (key == "m") {
            s.m = parse_positive(val, text);
        } else if (!val.empty()) {
            std::stringstream gs(val + ":");
            std::string o;
            while (std::getline(gs, o, ':')) s.orders.push_back(parse_positive(o, text));
        }
    }
    require(have_p && have_m, ErrorCode::UsageError, "ring needs p and m: " + text);
    return s;
}

std::string format_ring_spec(const RingSpec& s) {
    std::string g;
    for (size_t i = 0; i < s.orders.size(); ++i) g += (i ? ":" : "") + std::to_string(s.orders[i]);
    return "p=" + std::to_string(s.p) + ",m=" + std::to_string(s.m) + ",g=" + g;
}

Ring make_ring(const RingSpec& s) { return Ring::make(s.p, s.m, GroupSpec{s.orders}); }

std::vector<RingSpec> default_grid() {
    return {{2, 2, {}}, {2, 3, {}}, {3, 1, {3}}, {2, 2, {2}}, {3, 2, {3}}};
}

json encode_ring(const Ring& r) { return {{"p", r.p()}, {"m", r.m()}, {"g", r.group().cyclic_orders}}; }

Ring decode_ring(const json& j) {
    return Ring::make(j.at("p").get<int>(), j.at("m").get<int>(), GroupSpec{j.at("g").get<std::vector<int>>()});
}

json encode(const RingElement& x) { return x.coeffs(); }

json encode(const RVec& v) {
    json out = json::array();
    for (size_t i = 0; i < v.size(); ++i) out.push_back(encode(v.at(i)));
    return out;
}

json encode(const RMatrix& a) {
    json rows = json::array();
    for (size_t i = 0; i < a.rows(); ++i) rows.push_back(encode(a.row(i)));
    return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", rows}};
}

RingElement decode_element(const Ring& r, const json& j) {
    auto c = j.get<std::vector<int64_t>>();
    require(c.size() == r.group_order(), ErrorCode::ParseError, "element has the wrong number of coefficients");
    for (auto& x : c) x = ((x % r.modulus()) + r.modulus()) % r.modulus();
    return RingElement(r, c);
}

RVec decode_vec(const Ring& r, const json& j) {
    std::vector<RingElement> xs;
    for (const auto& e : j) xs.push_back(decode_element(r, e));
    if (xs.empty()) return RVec(r, 0);
    return RVec::from_elements(r, xs);
}

RMatrix decode_matrix(const Ring& r, const json& j) {
    size_t rows = j.at("rows").get<size_t>(), cols = j.at("cols").get<size_t>();
    RMatrix a(r, rows, cols);
    const auto& e = j.at("entries");
    require(e.size() == rows, ErrorCode::ParseError, "matrix row count mismatch");
    for (size_t i = 0; i < rows; ++i) {
        require(e[i].size() == cols, ErrorCode::ParseError, "matrix column count mismatch");
        for (size_t k = 0; k < cols; ++k) a.set(i, k, decode_element(r, e[i][k]));
    }
    return a;
}

json encode_vecs(const std::vector<RVec>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(encode(v));
    return out;
}

std::vector<RVec> decode_vecs(const Ring& r, const json& j) {
    std::vector<RVec> out;
    for (const auto& v : j) out.push_back(decode_vec(r, v));
    return out;
}

RingElement random_element(const Ring& r, Rng& rng) {
    std::vector<int64_t> c(r.group_order());
    for (auto& x : c) x = static_cast<int64_t>(rng.below(static_cast<uint64_t>(r.modulus())));
    RingElement e(r, c);
    if (rng.coin()) {
        auto gens = r.maximal_ideal_generators();
        e = e * gens[rng.below(gens.size())];
    }
    return e;
}

RVec random_vec(const Ring& r, size_t n, Rng& rng) {
    RVec v(r, n);
    for (size_t i = 0; i < n; ++i) v.set(i, random_element(r, rng));
    return v;
}

RMatrix random_matrix(const Ring& r, size_t rows, size_t cols, Rng& rng) {
    RMatrix a(r, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k) a.set(i, k, random_element(r, rng));
    return a;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ring",  "linalg", "modules",   "fitting", "biduals",
                                                "complexes", "stark",  "kolyvagin", "limits",  "all"};
    return names;
}

const std::vector<Property>& registry() {
    static const std::vector<Property> props = [] {
        std::vector<Property> out;
        register_algebra(out);
        register_homological(out);
        register_arithmetic(out);
        std::sort(out.begin(), out.end(), [](const Property& a, const Property& b) { return a.name < b.name; });
        return out;
    }();
    return props;
}

std::string_view stream_key(const Property& p) {
    // The quadratic-complex properties share one stream of complexes.
    static const std::set<std::string, std::less<>> shared = {
        "complexes.base_change", "complexes.evaluation_ideal", "complexes.theta_in_bidual", "complexes.theta_tilde"};
    if (shared.count(p.name)) return "complexes.quadratic";
    return p.name;
}

const Property& find_property(const std::string& name) {
    for (const auto& p : registry())
        if (p.name == name) return p;
    fail(ErrorCode::UsageError, "unknown property: " + name);
}

std::vector<const Property*> suite_properties(const std::string& suite) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        fail(ErrorCode::UsageError, "unknown suite: " + suite);
    std::vector<const Property*> out;
    for (const auto& p : registry())
        if (suite == "all" || p.name.rfind(suite + ".", 0) == 0) out.push_back(&p);
    return out;
}

size_t thread_budget() {
    size_t hw = std::max<size_t>(1, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("GORENSTEIN_KIT_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v >= 1) return std::min<size_t>(v, hw);
    }
    return hw;
}

namespace {

Outcome run_check(const Property& p, const Ring& ring, const json& instance, uint64_t bound) {
    try {
        return p.check(ring, instance, bound);
    } catch (const std::exception& e) {
        return {false, false, std::string("exception: ") + e.what()};
    }
}

struct Task {
    size_t prop;
    size_t ring;
    size_t index;
};

struct TaskResult {
    Outcome outcome;
    json instance;
    double seconds = 0;
};

}  // namespace

RunResult run_suite(const SuiteConfig& cfg) {
    require(cfg.count >= 1, ErrorCode::UsageError, "count must be at least 1");
    auto props = suite_properties(cfg.suite);
    if (!cfg.only.empty()) {
        for (const auto& name : cfg.only) find_property(name);
        std::erase_if(props, [&](const Property* p) {
            return std::find(cfg.only.begin(), cfg.only.end(), p->name) == cfg.only.end();
        });
    }
    std::vector<RingSpec> specs = cfg.rings.empty() ? default_grid() : cfg.rings;
    std::vector<Ring> rings;
    std::vector<std::string> labels;
    for (const auto& s : specs) {
        try {
            rings.push_back(make_ring(s));
        } catch (const Error& e) {
            fail(ErrorCode::UsageError, std::string("invalid ring: ") + e.what());
        }
        labels.push_back(format_ring_spec(s));
    }

    std::vector<Task> tasks;
    for (size_t p = 0; p < props.size(); ++p)
        for (size_t r = 0; r < rings.size(); ++r)
            for (size_t i = 0; i < cfg.count; ++i) tasks.push_back({p, r, i});
    std::vector<TaskResult> results(tasks.size());

    auto start = std::chrono::steady_clock::now();
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t t = next++; t < tasks.size(); t = next++) {
            const Task& task = tasks[t];
            const Property& p = *props[task.prop];
            auto t0 = std::chrono::steady_clock::now();
            Rng rng(instance_seed(cfg.seed, stream_key(p), labels[task.ring], task.index));
            TaskResult& res = results[t];
            try {
                res.instance = p.generate(rings[task.ring], rng);
                res.outcome = run_check(p, rings[task.ring], res.instance, cfg.bound);
            } catch (const std::exception& e) {
                res.outcome = {false, false, std::string("generation failed: ") + e.what()};
            }
            res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    size_t nthreads = std::max<size_t>(1, std::min(cfg.threads ? cfg.threads : thread_budget(), tasks.size()));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    RunResult out;
    json properties = json::array();
    json timing_props = json::object();
    size_t total_instances = 0;
    // Tasks are ordered by (property, ring, index), so the first failure seen is canonical.
    for (size_t p = 0; p < props.size(); ++p) {
        size_t instances = 0, failures = 0, skipped = 0;
        double secs = 0;
        json first = nullptr;
        for (size_t t = 0; t < tasks.size(); ++t) {
            if (tasks[t].prop != p) continue;
            const auto& res = results[t];
            secs += res.seconds;
            if (res.outcome.skipped) {
                ++skipped;
                continue;
            }
            ++instances;
            if (!res.outcome.ok) {
                ++failures;
                if (first.is_null())
                    first = {{"property", props[p]->name},
                             {"ring", encode_ring(rings[tasks[t].ring])},
                             {"index", tasks[t].index},
                             {"instance", res.instance},
                             {"detail", res.outcome.detail}};
            }
        }
        total_instances += instances;
        out.failures += failures;
        properties.push_back({{"name", props[p]->name},
                              {"anchor", props[p]->anchor},
                              {"instances", instances},
                              {"skipped", skipped},
                              {"failures", failures},
                              {"first_counterexample", first}});
        timing_props[props[p]->name] = secs;
    }
    json ring_list = json::array();
    for (const auto& l : labels) ring_list.push_back(l);
    out.report = {{"schema", 1},
                  {"suite", cfg.suite},
                  {"seed", cfg.seed},
                  {"count", cfg.count},
                  {"bound", cfg.bound},
                  {"rings", ring_list},
                  {"properties", properties},
                  {"total_instances", total_instances},
                  {"total_failures", out.failures},
                  {"timing", {{"wall_seconds", wall}, {"threads", nthreads}, {"property_seconds", timing_props}}}};
    return out;
}

json strip_timing(const json& report) {
    json r = report;
    r.erase("timing");
    return r;
}

Outcome replay(const json& record, uint64_t bound) {
    const Property& p = find_property(record.at("property").get<std::string>());
    Ring ring = decode_ring(record.at("ring"));
    return run_check(p, ring, record.at("instance"), bound);
}

}  // namespace gkit::verify
