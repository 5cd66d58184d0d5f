#include "cctk/distance.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "cctk/trellis.hpp"

namespace cctk {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

// Weight of the single-impulse response, minimized over input rows: an
// achievable codeword-prefix weight at every depth, hence a pruning bound.
int impulse_bound(const GeneratorMatrix& G) {
    int best = kInf;
    for (int i = 0; i < G.k(); ++i) {
        int w = 0;
        for (int j = 0; j < G.n(); ++j) w += std::popcount(G.entry(i, j));
        best = std::min(best, w);
    }
    return best;
}

// Dense layer-by-layer minimum-weight propagation for small state spaces.
Profile cdf_dense(const Encoder& enc, int L, int ub) {
    size_t states = static_cast<size_t>(enc.state_count());
    std::vector<uint8_t> cur(states, 0xff), nxt(states, 0xff);  // 0xff = unreachable
    Profile d(L + 1, kInf);
    for (uint32_t u = 1; u < (uint32_t(1) << enc.k()); ++u) {
        auto [s, v] = enc.step(0, u);
        int w = std::popcount(v);
        if (w <= ub && w < cur[s]) cur[s] = static_cast<uint8_t>(w);
        d[0] = std::min(d[0], w);
    }
    for (int l = 1; l <= L; ++l) {
        std::fill(nxt.begin(), nxt.end(), 0xff);
        int minw = kInf;
        for (size_t s = 0; s < states; ++s) {
            if (cur[s] == 0xff) continue;
            for (uint32_t u = 0; u < (uint32_t(1) << enc.k()); ++u) {
                auto [s2, v] = enc.step(s, u);
                int w = cur[s] + std::popcount(v);
                if (w > ub) continue;
                if (w < nxt[s2]) nxt[s2] = static_cast<uint8_t>(w);
                minw = std::min(minw, w);
            }
        }
        d[l] = minw;
        cur.swap(nxt);
    }
    return d;
}

// Weight-capped pass over reachable states only.  Exact for every l with
// d_l <= W; the final layer is empty iff d_L > W.
Profile cdf_capped(const Encoder& enc, int L, int W) {
    std::unordered_map<uint64_t, int> cur, nxt;
    Profile d(L + 1, kInf);
    for (uint32_t u = 1; u < (uint32_t(1) << enc.k()); ++u) {
        auto [s, v] = enc.step(0, u);
        int w = std::popcount(v);
        if (w > W) continue;
        d[0] = std::min(d[0], w);
        auto it = cur.find(s);
        if (it == cur.end() || w < it->second) cur[s] = w;
    }
    for (int l = 1; l <= L; ++l) {
        nxt.clear();
        nxt.reserve(cur.size() * 2);
        int minw = kInf;
        for (auto [s, w0] : cur) {
            for (uint32_t u = 0; u < (uint32_t(1) << enc.k()); ++u) {
                auto [s2, v] = enc.step(s, u);
                int w = w0 + std::popcount(v);
                if (w > W) continue;
                minw = std::min(minw, w);
                auto it = nxt.find(s2);
                if (it == nxt.end() || w < it->second) nxt[s2] = w;
            }
        }
        d[l] = minw;
        cur.swap(nxt);
    }
    return d;
}

}  // namespace

Profile cdf(const GeneratorMatrix& G, int L) {
    if (L < 0) throw std::invalid_argument("negative cdf depth");
    for (int i = 0; i < G.k(); ++i)
        if (G.row_is_zero(i)) return Profile(L + 1, 0);
    int deg = std::max(0, G.effective_degree());
    Encoder enc(G, deg);
    int ub = impulse_bound(G);
    Profile d;
    if (enc.state_bits() <= 16) {
        d = cdf_dense(enc, L, ub);
    } else {
        // Iterative deepening on the weight cap: the frontier of states with
        // accumulated weight <= W stays small, and a nonempty final layer
        // certifies every value (d_l is nondecreasing, so d_l <= d_L <= W).
        for (int W = std::min(ub, 2 + L / 8);; W = std::min(ub, W + std::max(2, W / 3))) {
            d = cdf_capped(enc, L, W);
            if (d[L] < kInf) break;
            if (W >= ub) throw std::logic_error("cdf exceeded its achievable bound");
        }
    }
    // The pruning bound is achievable, so every layer keeps a witness.
    for (int v : d)
        if (v >= kInf) throw std::logic_error("cdf lost all paths");
    return d;
}

Profile bcdf(const GeneratorMatrix& G, int L) {
    Profile f = cdf(G, L), b = cdf(reverse(G), L);
    for (int i = 0; i <= L; ++i) f[i] = std::min(f[i], b[i]);
    return f;
}

Profile dp(const GeneratorMatrix& G) { return cdf(G, G.m()); }

Profile bdp(const GeneratorMatrix& G, int s) {
    if (s > G.m()) throw std::invalid_argument("shortening exceeds memory");
    return bcdf(G, G.m() - s);
}

Ordering compare_profiles(const Profile& a, const Profile& b) {
    if (a.size() != b.size()) throw std::invalid_argument("profile length mismatch");
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return Ordering::Better;
        if (a[i] < b[i]) return Ordering::Worse;
    }
    return Ordering::Equal;
}

int griesmer_bound(int k, int n, int m) {
    if (k < 1 || n <= k || m < 0) throw std::invalid_argument("bad code parameters");
    auto holds = [&](long long d) {
        for (long long i = 1;; ++i) {
            long long lhs = 0;
            for (long long l = 0; l < k * i; ++l) {
                long long div = (l < 63) ? (1LL << l) : (1LL << 62);
                lhs += (d + div - 1) / div;
            }
            if (lhs > (m + i) * n) return false;
            if (k * (i - 1) >= 62 || (1LL << (k * (i - 1))) >= d) return true;
        }
    };
    long long d = 1;
    while (holds(d + 1)) ++d;
    return static_cast<int>(d);
}

uint64_t poly_gcd(uint64_t a, uint64_t b) {
    auto deg = [](uint64_t p) { return 63 - __builtin_clzll(p); };
    while (b != 0) {
        if (a == 0) std::swap(a, b);
        if (b == 0) break;
        while (a != 0 && deg(a) >= deg(b)) a ^= b << (deg(a) - deg(b));
        std::swap(a, b);
    }
    return a;
}

bool is_catastrophic(const GeneratorMatrix& G) {
    if (G.k() == 1) {
        uint64_t g = 0;
        for (int j = 0; j < G.n(); ++j) g = poly_gcd(g, G.entry(0, j));
        return !(g != 0 && std::popcount(g) == 1);  // catastrophic unless gcd = D^a
    }
    int deg = std::max(0, G.effective_degree());
    Encoder enc(G, deg);
    if (enc.state_bits() > 24) throw std::invalid_argument("state graph too large for catastrophic test");
    size_t states = static_cast<size_t>(enc.state_count());
    // Cycle search over zero-output branches between nonzero states.
    std::vector<uint8_t> color(states, 0);  // 0 white, 1 on stack, 2 done
    std::vector<std::pair<uint64_t, uint32_t>> stack;
    for (uint64_t s0 = 1; s0 < states; ++s0) {
        if (color[s0] != 0) continue;
        stack.push_back({s0, 0});
        color[s0] = 1;
        while (!stack.empty()) {
            auto& [s, u] = stack.back();
            if (u >= (uint32_t(1) << enc.k())) {
                color[s] = 2;
                stack.pop_back();
                continue;
            }
            auto [s2, v] = enc.step(s, u);
            ++u;
            if (v != 0 || s2 == 0) continue;
            if (color[s2] == 1) return true;
            if (color[s2] == 0) {
                stack.push_back({s2, 0});
                color[s2] = 1;
            }
        }
    }
    return false;
}

}  // namespace cctk
