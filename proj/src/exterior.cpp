#include "gkit/exterior.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace gkit {

size_t binomial(size_t n, size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    size_t r = 1;
    for (size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

const std::vector<Subset>& subsets(size_t n, size_t k) {
    static std::mutex mu;
    static std::map<std::pair<size_t, size_t>, std::vector<Subset>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Subset> out;
    if (k <= n) {
        Subset s(k);
        for (size_t i = 0; i < k; ++i) s[i] = i;
        while (true) {
            out.push_back(s);
            size_t i = k;
            while (i > 0 && s[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++s[i - 1];
            for (size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
        }
    }
    return cache.emplace(key, std::move(out)).first->second;
}

size_t subset_rank(size_t n, const Subset& s) {
    const size_t k = s.size();
    size_t rank = 0;
    size_t prev = 0;
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = (i == 0 ? 0 : prev + 1); j < s[i]; ++j) rank += binomial(n - 1 - j, k - 1 - i);
        prev = s[i];
    }
    return rank;
}

Subset complement(size_t n, const Subset& s) {
    Subset c;
    size_t t = 0;
    for (size_t i = 0; i < n; ++i) {
        if (t < s.size() && s[t] == i) {
            ++t;
            continue;
        }
        c.push_back(i);
    }
    return c;
}

int merge_sign(const Subset& a, const Subset& b) {
    size_t inv = 0;
    for (size_t x : a)
        for (size_t y : b)
            if (x > y) ++inv;
    return inv % 2 ? -1 : 1;
}

bool disjoint(const Subset& a, const Subset& b) {
    for (size_t x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) return false;
    return true;
}

Subset set_union(const Subset& a, const Subset& b) {
    Subset u = a;
    u.insert(u.end(), b.begin(), b.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

}  // namespace gkit
