#include "cctk/polymat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cctk {

namespace {

uint64_t reverse_window(uint64_t poly, int m) {
    uint64_t r = 0;
    for (int l = 0; l <= m; ++l)
        if (poly >> l & 1) r |= uint64_t(1) << (m - l);
    return r;
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(int k, int n, int m, std::vector<uint64_t> entries)
    : k_(k), n_(n), m_(m), g_(std::move(entries)) {
    if (k < 1 || n <= k) throw std::invalid_argument("generator matrix needs 1 <= k < n");
    if (m < 0 || m > 62) throw std::invalid_argument("memory out of range");
    if (g_.size() != static_cast<size_t>(k) * n) throw std::invalid_argument("entry count mismatch");
    for (uint64_t e : g_)
        if (m < 63 && (e >> (m + 1)) != 0) throw std::invalid_argument("entry degree exceeds declared memory");
}

uint64_t GeneratorMatrix::word(int i, int j) const { return reverse_window(entry(i, j), m_); }

std::vector<uint64_t> GeneratorMatrix::packed_words() const {
    std::vector<uint64_t> w;
    w.reserve(g_.size());
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < n_; ++j) w.push_back(word(i, j));
    return w;
}

int GeneratorMatrix::effective_degree() const {
    int d = -1;
    for (uint64_t e : g_)
        if (e != 0) d = std::max(d, 63 - static_cast<int>(__builtin_clzll(e)));
    return d;
}

bool GeneratorMatrix::row_is_zero(int i) const {
    for (int j = 0; j < n_; ++j)
        if (entry(i, j) != 0) return false;
    return true;
}

Permutation Permutation::identity(int l) {
    Permutation p;
    p.map.resize(l);
    for (int i = 0; i < l; ++i) p.map[i] = i;
    return p;
}

bool Permutation::is_valid() const {
    std::vector<bool> seen(map.size(), false);
    for (int v : map) {
        if (v < 0 || v >= static_cast<int>(map.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<Permutation> all_permutations(int l) {
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(l);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.map.begin(), p.map.end()));
    return out;
}

GeneratorMatrix parse_octal(const std::string& words, int k, int n, int m) {
    std::istringstream is(words);
    std::vector<std::string> ws;
    std::string w;
    while (is >> w) ws.push_back(w);
    if (ws.size() != static_cast<size_t>(k) * n)
        throw std::invalid_argument("expected " + std::to_string(k * n) + " octal words, got " +
                                    std::to_string(ws.size()));
    std::vector<uint64_t> g;
    g.reserve(ws.size());
    for (const std::string& word : ws) {
        if (3 * static_cast<int>(word.size()) < m + 1)
            throw std::invalid_argument("octal word '" + word + "' too short for memory " + std::to_string(m));
        uint64_t poly = 0;
        for (size_t t = 0; t < word.size(); ++t) {
            char ch = word[t];
            if (ch < '0' || ch > '7') throw std::invalid_argument("non-octal digit in '" + word + "'");
            int digit = ch - '0';
            for (int b = 0; b < 3; ++b) {
                int l = static_cast<int>(3 * t) + b;  // degree index, left-aligned
                if (digit >> (2 - b) & 1) {
                    if (l > m)
                        throw std::invalid_argument("set bit beyond degree " + std::to_string(m) + " in '" + word +
                                                    "'");
                    poly |= uint64_t(1) << l;
                }
            }
        }
        g.push_back(poly);
    }
    GeneratorMatrix G(k, n, m, std::move(g));
    for (int i = 0; i < k; ++i)
        if (G.row_is_zero(i)) throw std::invalid_argument("all-zero generator row");
    return G;
}

std::string format_octal(const GeneratorMatrix& G) {
    int digits = (G.m() + 1 + 2) / 3;
    std::string out;
    for (int i = 0; i < G.k(); ++i)
        for (int j = 0; j < G.n(); ++j) {
            if (!out.empty()) out += ' ';
            uint64_t poly = G.entry(i, j);
            for (int t = 0; t < digits; ++t) {
                int d = 0;
                for (int b = 0; b < 3; ++b) {
                    int l = 3 * t + b;
                    if (l <= G.m() && (poly >> l & 1)) d |= 1 << (2 - b);
                }
                out += static_cast<char>('0' + d);
            }
        }
    return out;
}

GeneratorMatrix parse_code_line(const std::string& line) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected 'k n m : words'");
    std::istringstream head(line.substr(0, colon));
    int k, n, m;
    if (!(head >> k >> n >> m)) throw std::invalid_argument("bad k n m header in code line");
    std::string rest;
    if (head >> rest) throw std::invalid_argument("trailing tokens in code line header");
    return parse_octal(line.substr(colon + 1), k, n, m);
}

std::string format_code_line(const GeneratorMatrix& G) {
    return std::to_string(G.k()) + " " + std::to_string(G.n()) + " " + std::to_string(G.m()) + " : " +
           format_octal(G);
}

GeneratorMatrix reverse(const GeneratorMatrix& G) {
    std::vector<uint64_t> g;
    g.reserve(G.entries().size());
    for (uint64_t e : G.entries()) g.push_back(reverse_window(e, G.m()));
    return {G.k(), G.n(), G.m(), std::move(g)};
}

GeneratorMatrix prefix(const GeneratorMatrix& G, int p) {
    if (p < 0 || p > G.m()) throw std::invalid_argument("prefix degree out of range");
    uint64_t mask = (p == 63) ? ~uint64_t(0) : ((uint64_t(1) << (p + 1)) - 1);
    std::vector<uint64_t> g;
    g.reserve(G.entries().size());
    for (uint64_t e : G.entries()) g.push_back(e & mask);
    return {G.k(), G.n(), p, std::move(g)};
}

GeneratorMatrix permute(const GeneratorMatrix& G, const Permutation& pi, const Permutation& rho) {
    if (pi.size() != G.k() || rho.size() != G.n() || !pi.is_valid() || !rho.is_valid())
        throw std::invalid_argument("bad permutation");
    std::vector<uint64_t> g(G.entries().size());
    for (int i = 0; i < G.k(); ++i)
        for (int j = 0; j < G.n(); ++j) g[static_cast<size_t>(i) * G.n() + j] = G.entry(pi(i), rho(j));
    return {G.k(), G.n(), G.m(), std::move(g)};
}

namespace {

// Row i as a word vector; column j likewise.
std::vector<uint64_t> row_words(const GeneratorMatrix& G, int i) {
    std::vector<uint64_t> v(G.n());
    for (int j = 0; j < G.n(); ++j) v[j] = G.word(i, j);
    return v;
}

std::vector<uint64_t> col_words(const GeneratorMatrix& G, int j) {
    std::vector<uint64_t> v(G.k());
    for (int i = 0; i < G.k(); ++i) v[i] = G.word(i, j);
    return v;
}

}  // namespace

bool has_sorted_rows(const GeneratorMatrix& G) {
    for (int i = 0; i + 1 < G.k(); ++i)
        if (row_words(G, i) > row_words(G, i + 1)) return false;
    return true;
}

bool has_sorted_cols(const GeneratorMatrix& G) {
    for (int j = 0; j + 1 < G.n(); ++j)
        if (col_words(G, j) > col_words(G, j + 1)) return false;
    return true;
}

bool has_sorted_rows_cols(const GeneratorMatrix& G) { return has_sorted_rows(G) && has_sorted_cols(G); }

GeneratorMatrix canonicalize(const GeneratorMatrix& G) {
    GeneratorMatrix cur = G;
    for (int pass = 0; pass < 200; ++pass) {
        if (has_sorted_rows_cols(cur)) return cur;
        Permutation pi = Permutation::identity(cur.k());
        std::stable_sort(pi.map.begin(), pi.map.end(),
                         [&](int a, int b) { return row_words(cur, a) < row_words(cur, b); });
        cur = permute(cur, pi, Permutation::identity(cur.n()));
        Permutation rho = Permutation::identity(cur.n());
        std::stable_sort(rho.map.begin(), rho.map.end(),
                         [&](int a, int b) { return col_words(cur, a) < col_words(cur, b); });
        cur = permute(cur, Permutation::identity(cur.k()), rho);
    }
    throw std::runtime_error("canonicalize did not reach a fixed point");
}

bool matrix_less(const GeneratorMatrix& A, const GeneratorMatrix& B) {
    return A.packed_words() < B.packed_words();
}

bool trivially_equivalent(const GeneratorMatrix& A, const GeneratorMatrix& B) {
    if (A.k() != B.k() || A.n() != B.n() || A.m() != B.m()) return false;
    GeneratorMatrix Brev = reverse(B);
    for (const Permutation& pi : all_permutations(A.k()))
        for (const Permutation& rho : all_permutations(A.n())) {
            if (permute(B, pi, rho) == A) return true;
            if (permute(Brev, pi, rho) == A) return true;
        }
    return false;
}

GeneratorMatrix concat_halves(const GeneratorMatrix& Gf, const GeneratorMatrix& Gb, int m,
                              const std::optional<GeneratorMatrix>& middle, const Permutation& pi,
                              const Permutation& rho) {
    int k = Gf.k(), n = Gf.n();
    if (Gb.k() != k || Gb.n() != n) throw std::invalid_argument("half dimensions differ");
    bool odd = m % 2 != 0;
    if (odd) {
        int p = (m - 1) / 2;
        if (Gf.m() != p || Gb.m() != p || middle)
            throw std::invalid_argument("odd memory wants halves of degree (m-1)/2 and no middle");
    } else if (middle) {
        int p = m / 2 - 1;
        if (Gf.m() != p || Gb.m() != p) throw std::invalid_argument("even memory wants halves of degree m/2-1");
        if (middle->k() != k || middle->n() != n || middle->m() != 0)
            throw std::invalid_argument("middle must be a k x n coefficient matrix");
    } else {
        if (Gf.m() != m / 2 || Gb.m() != m / 2 - 1)
            throw std::invalid_argument("accelerated even memory wants degrees m/2 and m/2-1");
    }
    std::vector<uint64_t> g(static_cast<size_t>(k) * n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) {
            uint64_t e = Gf.entry(i, j);
            if (middle) e |= middle->entry(i, j) << (m / 2);
            uint64_t back = Gb.entry(pi(i), rho(j));
            for (int l = 0; l <= Gb.m(); ++l)
                if (back >> l & 1) e |= uint64_t(1) << (m - l);
            g[static_cast<size_t>(i) * n + j] = e;
        }
    return {k, n, m, std::move(g)};
}

}  // namespace cctk
