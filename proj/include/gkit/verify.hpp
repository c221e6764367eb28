#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gkit/rmatrix.hpp"

namespace gkit::verify {

using json = nlohmann::json;

// splitmix64: state += 0x9E3779B97F4A7C15, output mix64(state).
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next();
    // next() % n; n >= 1.
    uint64_t below(uint64_t n) { return next() % n; }
    // Uniform in [lo, hi].
    size_t range(size_t lo, size_t hi) { return lo + static_cast<size_t>(below(hi - lo + 1)); }
    bool coin() { return next() & 1; }

private:
    uint64_t state_;
};

uint64_t mix64(uint64_t z);
uint64_t fnv1a(std::string_view s);
// Seed of one instance stream, independent of scheduling.
uint64_t instance_seed(uint64_t seed, std::string_view property, std::string_view ring, uint64_t index);

struct RingSpec {
    int p = 2;
    int m = 1;
    std::vector<int> orders;
};

// "p=<p>,m=<m>,g=<c1:c2:...>" (g may be empty); UsageError on malformed input.
RingSpec parse_ring_spec(const std::string& text);
std::string format_ring_spec(const RingSpec& s);
Ring make_ring(const RingSpec& s);
std::vector<RingSpec> default_grid();

json encode_ring(const Ring& r);
Ring decode_ring(const json& j);
json encode(const RingElement& x);
json encode(const RVec& v);
json encode(const RMatrix& a);
RingElement decode_element(const Ring& r, const json& j);
RVec decode_vec(const Ring& r, const json& j);
RMatrix decode_matrix(const Ring& r, const json& j);
json encode_vecs(const std::vector<RVec>& vs);
std::vector<RVec> decode_vecs(const Ring& r, const json& j);

// Half the draws are uniform, half are uniform times a random maximal-ideal generator.
RingElement random_element(const Ring& r, Rng& rng);
RVec random_vec(const Ring& r, size_t n, Rng& rng);
RMatrix random_matrix(const Ring& r, size_t rows, size_t cols, Rng& rng);

struct Outcome {
    bool ok = true;
    bool skipped = false;  // enumeration bound exceeded
    std::string detail;
};

struct Property {
    std::string name;    // "<suite>.<property>"
    std::string anchor;  // the statement being checked
    std::function<json(const Ring&, Rng&)> generate;
    std::function<Outcome(const Ring&, const json&, uint64_t bound)> check;
};

// Key used for instance seeds. Properties with the same key see identical
// instances; most properties use their own name.
std::string_view stream_key(const Property& p);

const std::vector<std::string>& suite_names();
// All properties, sorted by name.
const std::vector<Property>& registry();
const Property& find_property(const std::string& name);
// UsageError for unknown suites.
std::vector<const Property*> suite_properties(const std::string& suite);

struct SuiteConfig {
    std::string suite = "all";
    uint64_t seed = 0;
    size_t count = 1;
    std::vector<RingSpec> rings;
    uint64_t bound = 65536;
    size_t threads = 0;  // 0: GORENSTEIN_KIT_THREADS or hardware concurrency
    std::vector<std::string> only;  // restrict to these property names
};

struct RunResult {
    json report;
    size_t failures = 0;
};

size_t thread_budget();
RunResult run_suite(const SuiteConfig& cfg);
// Report without the timing field.
json strip_timing(const json& report);
// record: {"property", "ring", "instance"} as found under first_counterexample.
Outcome replay(const json& record, uint64_t bound);

// Registration hooks, one per source file.
void register_algebra(std::vector<Property>& out);
void register_homological(std::vector<Property>& out);
void register_arithmetic(std::vector<Property>& out);

}  // namespace gkit::verify
