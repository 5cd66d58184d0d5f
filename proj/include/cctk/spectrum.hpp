#ifndef CCTK_SPECTRUM_HPP
#define CCTK_SPECTRUM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cctk/distance.hpp"
#include "cctk/polymat.hpp"

namespace cctk {

/// Unsigned 128-bit counter with overflow-checked arithmetic.  Table counts
/// reach ~1e14 within 16 terms and grow geometrically with deeper requests;
/// overflow raises instead of wrapping.
struct BigCount {
    unsigned __int128 v = 0;

    BigCount() = default;
    BigCount(uint64_t x) : v(x) {}

    BigCount& operator+=(const BigCount& o) {
        unsigned __int128 r = v + o.v;
        if (r < v) throw std::overflow_error("spectrum count overflow");
        v = r;
        return *this;
    }
    BigCount operator*(uint64_t x) const {
        if (v != 0 && x != 0 && ~(unsigned __int128)0 / v < x) throw std::overflow_error("spectrum count overflow");
        BigCount r;
        r.v = v * x;
        return r;
    }
    bool operator==(const BigCount& o) const { return v == o.v; }
    auto operator<=>(const BigCount& o) const { return v <=> o.v; }

    std::string str() const;
    static BigCount parse(const std::string& s);
};

/// Free distance plus the aligned count sequences: a[i] error events of
/// codeword weight d_free+i, c[i] total information weight of those events.
struct Spectrum {
    int d_free = 0;
    std::vector<BigCount> a, c;
};

struct CatastrophicError : std::runtime_error {
    CatastrophicError() : std::runtime_error("catastrophic encoder has no finite distance spectrum") {}
};

struct CensusOptions {
    uint64_t max_steps = 0;  // 0: derive from the weight cap and memory
    int window_blocks = 0;   // 0: unlimited event length
};

/// Minimum codeword weight over error events (paths leaving the zero state
/// at the start and returning only at the end).  Events are counted on the
/// minimal encoder, i.e. the state space of the matrix's effective degree.
int free_distance(const GeneratorMatrix& G);

/// Exact a_d and c_d for d in [d_free, d_free+terms-1] by breadth iteration
/// over the weight-capped state graph.
Spectrum spectra(const GeneratorMatrix& G, int terms, const CensusOptions& opts = {});

/// Lexicographic comparison of information spectra aligned on the absolute
/// weight axis (zero-padded below the larger d_free); lower c is Better.
Ordering compare_spectra(const Spectrum& x, const Spectrum& y);

/// "d_free : a0,a1,... : c0,c1,..."
std::string format_spectrum(const Spectrum& s);

}  // namespace cctk

#endif
