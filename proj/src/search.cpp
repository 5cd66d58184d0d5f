#include "cctk/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace cctk {

namespace {

int profile_depth(int m, int s, const SearchConfig& cfg) {
    if (s == kShorteningCdf) return cfg.cdf_depth >= 0 ? cfg.cdf_depth : 3 * m;
    if (s < 0 || s > m) throw std::invalid_argument("shortening out of range");
    return m - s;
}

// Keep only the best-profile bucket, set semantics.
struct Retention {
    Profile best;
    std::vector<GeneratorMatrix> members;

    void offer(const GeneratorMatrix& G, const Profile& p) {
        if (members.empty()) {
            best = p;
            members.push_back(G);
            return;
        }
        switch (compare_profiles(p, best)) {
            case Ordering::Better:
                best = p;
                members.clear();
                members.push_back(G);
                break;
            case Ordering::Equal:
                for (const GeneratorMatrix& M : members)
                    if (M == G) return;
                members.push_back(G);
                break;
            case Ordering::Worse:
                break;
        }
    }
};

void sort_members(std::vector<GeneratorMatrix>& ms) {
    std::sort(ms.begin(), ms.end(), matrix_less);
}

std::vector<GeneratorMatrix> coefficient_matrices(int k, int n) {
    std::vector<GeneratorMatrix> out;
    uint32_t total = uint32_t(1) << (k * n);
    out.reserve(total);
    for (uint32_t mask = 0; mask < total; ++mask) {
        std::vector<uint64_t> g(static_cast<size_t>(k) * n);
        for (int idx = 0; idx < k * n; ++idx) g[idx] = mask >> idx & 1;
        out.emplace_back(k, n, 0, std::move(g));
    }
    return out;
}

CodeSet exhaustive_bdp_search(int k, int n, int m, int s, const SearchConfig& cfg) {
    int depth = profile_depth(m, s, cfg);
    Retention keep;
    uint64_t total = uint64_t(1) << (k * n * (m + 1));
    uint64_t entry_mask = (uint64_t(1) << (m + 1)) - 1;
    for (uint64_t bits = 0; bits < total; ++bits) {
        std::vector<uint64_t> g(static_cast<size_t>(k) * n);
        for (int idx = 0; idx < k * n; ++idx) g[idx] = bits >> (idx * (m + 1)) & entry_mask;
        GeneratorMatrix G(k, n, m, std::move(g));
        if (!has_sorted_rows_cols(G)) continue;  // one representative per relabeling class
        if (is_catastrophic(G)) continue;
        keep.offer(G, bcdf(G, depth));
    }
    CodeSet set{k, n, m, s, keep.best, keep.members};
    sort_members(set.members);
    return set;
}

}  // namespace

std::map<int, CodeSet> odp_sets(int k, int n, int m_max) {
    if (k < 1 || n <= k || m_max < 0) throw std::invalid_argument("bad search parameters");
    std::map<int, CodeSet> sets;
    std::vector<GeneratorMatrix> coeffs = coefficient_matrices(k, n);
    for (int m = 0; m <= m_max; ++m) {
        Retention keep;
        auto extend = [&](const GeneratorMatrix* pre) {
            for (const GeneratorMatrix& cm : coeffs) {
                std::vector<uint64_t> g(static_cast<size_t>(k) * n);
                for (int idx = 0; idx < k * n; ++idx) {
                    uint64_t low = pre ? pre->entries()[idx] : 0;
                    g[idx] = low | cm.entries()[idx] << m;
                }
                GeneratorMatrix G(k, n, m, std::move(g));
                if (!has_sorted_rows_cols(G)) continue;
                keep.offer(G, cdf(G, m));
            }
        };
        if (m > 0)
            for (const GeneratorMatrix& pre : sets[m - 1].members) extend(&pre);
        else
            extend(nullptr);
        CodeSet set{k, n, m, 0, keep.best, keep.members};
        sort_members(set.members);
        sets[m] = std::move(set);
    }
    return sets;
}

CodeSet obdp_set(int k, int n, int m, int s, const std::map<int, CodeSet>& stage1, const SearchConfig& cfg) {
    if (s != kShorteningCdf && m < std::max(1, 2 * s - 1))
        throw std::invalid_argument("shortened search needs m >= max(1, 2s-1)");
    if (m < 1) throw std::invalid_argument("bidirectional search needs m >= 1");
    int depth = profile_depth(m, s, cfg);
    int p = (m - 1) / 2;

    auto stage = [&](int mm) -> const CodeSet& {
        auto it = stage1.find(mm);
        if (it == stage1.end()) throw std::invalid_argument("stage-I set missing for memory " + std::to_string(mm));
        return it->second;
    };

    std::vector<Permutation> row_perms = all_permutations(k);
    std::vector<Permutation> col_perms = all_permutations(n);

    Retention keep;
    bool any_noncat = false;
    auto offer_concats = [&](const std::vector<GeneratorMatrix>& fwd, const std::vector<GeneratorMatrix>& bwd,
                             const std::vector<GeneratorMatrix>* middles) {
        for (const GeneratorMatrix& Gf : fwd)
            for (const GeneratorMatrix& Gb : bwd)
                for (const Permutation& pi : row_perms)
                    for (const Permutation& rho : col_perms) {
                        if (!middles) {
                            GeneratorMatrix G = concat_halves(Gf, Gb, m, std::nullopt, pi, rho);
                            if (is_catastrophic(G)) continue;
                            any_noncat = true;
                            keep.offer(G, bcdf(G, depth));
                        } else {
                            for (const GeneratorMatrix& mid : *middles) {
                                GeneratorMatrix G = concat_halves(Gf, Gb, m, mid, pi, rho);
                                if (is_catastrophic(G)) continue;
                                any_noncat = true;
                                keep.offer(G, bcdf(G, depth));
                            }
                        }
                    }
    };

    bool even = m % 2 == 0;
    bool done = false;
    if (even && cfg.accelerated_even) {
        // Halves of degree m/2 and m/2-1 pin the forward profile to the
        // stage-I optimum through index m/2.  Valid whenever the best
        // bidirectional profile found reaches that optimum at index m/2,
        // which is its provable ceiling; otherwise redo the full loop.
        offer_concats(stage(m / 2).members, stage(m / 2 - 1).members, nullptr);
        if (any_noncat) {
            const Profile& dstar = stage(m / 2).achieved;
            if (depth >= m / 2 && keep.best[m / 2] == dstar[m / 2]) done = true;
        }
        if (!done) {
            keep = Retention();
            any_noncat = false;
        }
    }
    if (!done) {
        std::vector<GeneratorMatrix> middles;
        if (even) middles = coefficient_matrices(k, n);
        offer_concats(stage(p).members, stage(p).members, even ? &middles : nullptr);
    }
    if (!any_noncat) {
        // Every concatenation was catastrophic; for m = 1 search everything.
        if (m == 1) return dedup_trivial_equiv(exhaustive_bdp_search(k, n, m, s, cfg));
        throw std::runtime_error("no non-catastrophic concatenation found");
    }
    CodeSet set{k, n, m, s, keep.best, keep.members};
    sort_members(set.members);
    return dedup_trivial_equiv(set);
}

CodeSet dedup_trivial_equiv(const CodeSet& set) {
    CodeSet out{set.k, set.n, set.m, set.s, set.achieved, {}};
    std::vector<GeneratorMatrix> sorted = set.members;
    sort_members(sorted);  // keep the lexicographically lower of every pair
    for (const GeneratorMatrix& G : sorted) {
        bool dup = false;
        for (const GeneratorMatrix& kept : out.members)
            if (trivially_equivalent(kept, G)) {
                dup = true;
                break;
            }
        if (!dup) out.members.push_back(G);
    }
    return out;
}

std::vector<GeneratorMatrix> select_best_spectrum(const CodeSet& set, int terms) {
    std::vector<GeneratorMatrix> best;
    Spectrum best_spec;
    for (const GeneratorMatrix& G : set.members) {
        Spectrum sp = spectra(G, terms);
        if (best.empty()) {
            best_spec = sp;
            best.push_back(G);
            continue;
        }
        switch (compare_spectra(sp, best_spec)) {
            case Ordering::Better:
                best_spec = sp;
                best.clear();
                best.push_back(G);
                break;
            case Ordering::Equal:
                best.push_back(G);
                break;
            case Ordering::Worse:
                break;
        }
    }
    sort_members(best);
    return best;
}

}  // namespace cctk
