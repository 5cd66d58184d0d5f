#include "cctk/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "cctk/trellis.hpp"

namespace cctk {

std::string BigCount::str() const {
    if (v == 0) return "0";
    std::string s;
    unsigned __int128 x = v;
    while (x != 0) {
        s += static_cast<char>('0' + static_cast<int>(x % 10));
        x /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

BigCount BigCount::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty count");
    BigCount r;
    for (char ch : s) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("bad count '" + s + "'");
        r = r * 10;
        r += BigCount(static_cast<uint64_t>(ch - '0'));
    }
    return r;
}

namespace {

struct Cell {
    BigCount cnt, infw;
};

// Divide each row by its common power of D.  A row delay changes the
// encoder realization but not the code, and event counting must run on the
// minimal realization or composite paths get counted as single events.
GeneratorMatrix normalize_row_delays(const GeneratorMatrix& G) {
    std::vector<uint64_t> g(G.entries());
    bool changed = false;
    for (int i = 0; i < G.k(); ++i) {
        uint64_t all = 0;
        for (int j = 0; j < G.n(); ++j) all |= G.entry(i, j);
        if (all == 0) continue;
        int shift = std::countr_zero(all);
        if (shift == 0) continue;
        changed = true;
        for (int j = 0; j < G.n(); ++j) g[static_cast<size_t>(i) * G.n() + j] >>= shift;
    }
    return changed ? GeneratorMatrix(G.k(), G.n(), G.m(), std::move(g)) : G;
}

int impulse_weight(const GeneratorMatrix& G) {
    int best = 1 << 20;
    for (int i = 0; i < G.k(); ++i) {
        int w = 0;
        for (int j = 0; j < G.n(); ++j) w += std::popcount(G.entry(i, j));
        best = std::min(best, w);
    }
    return best;
}

// Layered per-path-length iteration, used when events are restricted to a
// block window.  Keys pack (state, weight).
std::vector<Cell> census_layered(const Encoder& enc, int cap, const CensusOptions& opts) {
    uint64_t max_steps = opts.max_steps;
    if (max_steps == 0) max_steps = static_cast<uint64_t>(cap + 2) * (enc.memory() + 2) * 4 + 1000;
    std::vector<Cell> events(cap + 1);
    std::unordered_map<uint64_t, Cell> cur, nxt;
    auto key = [](uint64_t s, int w) { return s << 7 | static_cast<uint64_t>(w); };
    for (uint32_t u = 1; u < (uint32_t(1) << enc.k()); ++u) {
        auto [s, v] = enc.step(0, u);
        int w = std::popcount(v);
        if (w > cap) continue;
        int iw = std::popcount(u);
        Cell& c = (s == 0) ? events[w] : cur[key(s, w)];
        c.cnt += 1;
        c.infw += static_cast<uint64_t>(iw);
    }
    uint64_t steps = 0;
    while (!cur.empty()) {
        if (opts.window_blocks > 0 && steps + 1 >= static_cast<uint64_t>(opts.window_blocks)) break;
        if (++steps > max_steps)
            throw std::runtime_error("error-event enumeration did not terminate (catastrophic encoder?)");
        nxt.clear();
        nxt.reserve(cur.size() * 2);
        for (const auto& [sk, cell] : cur) {
            uint64_t s = sk >> 7;
            int w0 = static_cast<int>(sk & 0x7f);
            for (uint32_t u = 0; u < (uint32_t(1) << enc.k()); ++u) {
                auto [s2, v] = enc.step(s, u);
                int w = w0 + std::popcount(v);
                if (w > cap) continue;
                uint64_t uw = static_cast<uint64_t>(std::popcount(u));
                Cell& c = (s2 == 0) ? events[w] : nxt[key(s2, w)];
                c.cnt += cell.cnt;
                c.infw += cell.infw;
                if (uw != 0) c.infw += cell.cnt * uw;
            }
        }
        cur.swap(nxt);
    }
    return events;
}

// Single sweep in (weight, zero-output topological order): every (state,
// weight) cell is fully accumulated before it is expanded, since incoming
// branches either carry positive weight or are zero-output edges, which form
// a DAG over nonzero states for non-catastrophic encoders.
std::vector<Cell> census_sweep(const Encoder& enc, int cap) {
    size_t states = static_cast<size_t>(enc.state_count());
    uint32_t inputs = uint32_t(1) << enc.k();

    // reverse postorder of the zero-output subgraph
    std::vector<uint32_t> order;
    order.reserve(states);
    {
        std::vector<uint8_t> color(states, 0);
        std::vector<std::pair<uint64_t, uint32_t>> stack;
        for (uint64_t s0 = 1; s0 < states; ++s0) {
            if (color[s0] != 0) continue;
            stack.push_back({s0, 0});
            color[s0] = 1;
            while (!stack.empty()) {
                auto& [s, u] = stack.back();
                if (u >= inputs) {
                    color[s] = 2;
                    order.push_back(static_cast<uint32_t>(s));
                    stack.pop_back();
                    continue;
                }
                auto [s2, v] = enc.step(s, u);
                ++u;
                if (v != 0 || s2 == 0) continue;
                if (color[s2] == 1) throw std::runtime_error("zero-output cycle (catastrophic encoder)");
                if (color[s2] == 0) {
                    stack.push_back({s2, 0});
                    color[s2] = 1;
                }
            }
        }
        std::reverse(order.begin(), order.end());
    }

    std::vector<Cell> events(cap + 1);
    std::vector<Cell> cells(states * static_cast<size_t>(cap + 1));
    auto at = [&](uint64_t s, int w) -> Cell& { return cells[s * (cap + 1) + w]; };
    for (uint32_t u = 1; u < inputs; ++u) {
        auto [s, v] = enc.step(0, u);
        int w = std::popcount(v);
        if (w > cap) continue;
        Cell& c = (s == 0) ? events[w] : at(s, w);
        c.cnt += 1;
        c.infw += static_cast<uint64_t>(std::popcount(u));
    }
    for (int w = 0; w <= cap; ++w)
        for (uint32_t s : order) {
            Cell& cell = at(s, w);
            if (cell.cnt.v == 0) continue;
            for (uint32_t u = 0; u < inputs; ++u) {
                auto [s2, v] = enc.step(s, u);
                int w2 = w + std::popcount(v);
                if (w2 > cap) continue;
                uint64_t uw = static_cast<uint64_t>(std::popcount(u));
                Cell& c = (s2 == 0) ? events[w2] : at(s2, w2);
                c.cnt += cell.cnt;
                c.infw += cell.infw;
                if (uw != 0) c.infw += cell.cnt * uw;
            }
        }
    return events;
}

std::vector<Cell> census(const GeneratorMatrix& G, int cap, const CensusOptions& opts) {
    if (cap > 127) throw std::invalid_argument("weight cap beyond 127");
    int deg = std::max(0, G.effective_degree());
    Encoder enc(G, deg);
    if (opts.window_blocks > 0) return census_layered(enc, cap, opts);
    size_t cell_budget = size_t(1) << 23;
    if (enc.state_bits() > 22 || enc.state_count() * static_cast<uint64_t>(cap + 1) > cell_budget)
        return census_layered(enc, cap, opts);
    return census_sweep(enc, cap);
}

}  // namespace

int free_distance(const GeneratorMatrix& G) {
    if (is_catastrophic(G)) throw CatastrophicError();
    GeneratorMatrix N = normalize_row_delays(G);
    int cap = impulse_weight(N);  // the impulse event is achievable
    std::vector<Cell> ev = census(N, cap, {});
    for (int d = 0; d <= cap; ++d)
        if (ev[d].cnt.v != 0) return d;
    throw std::logic_error("no error event within the achievable cap");
}

Spectrum spectra(const GeneratorMatrix& G, int terms, const CensusOptions& opts) {
    if (terms < 1) throw std::invalid_argument("terms must be positive");
    Spectrum s;
    s.d_free = free_distance(G);
    std::vector<Cell> ev = census(normalize_row_delays(G), s.d_free + terms - 1, opts);
    for (int d = s.d_free; d <= s.d_free + terms - 1; ++d) {
        s.a.push_back(ev[d].cnt);
        s.c.push_back(ev[d].infw);
    }
    return s;
}

Ordering compare_spectra(const Spectrum& x, const Spectrum& y) {
    int lo = std::min(x.d_free, y.d_free);
    int hi = std::max(x.d_free + static_cast<int>(x.c.size()), y.d_free + static_cast<int>(y.c.size()));
    auto at = [&](const Spectrum& s, int d) -> BigCount {
        int i = d - s.d_free;
        if (i < 0 || i >= static_cast<int>(s.c.size())) return BigCount(0);
        return s.c[static_cast<size_t>(i)];
    };
    for (int d = lo; d < hi; ++d) {
        BigCount cx = at(x, d), cy = at(y, d);
        if (cx < cy) return Ordering::Better;
        if (cy < cx) return Ordering::Worse;
    }
    return Ordering::Equal;
}

std::string format_spectrum(const Spectrum& s) {
    std::string out = std::to_string(s.d_free) + " : ";
    for (size_t i = 0; i < s.a.size(); ++i) out += (i ? "," : "") + s.a[i].str();
    out += " : ";
    for (size_t i = 0; i < s.c.size(); ++i) out += (i ? "," : "") + s.c[i].str();
    return out;
}

}  // namespace cctk
