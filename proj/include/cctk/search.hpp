#ifndef CCTK_SEARCH_HPP
#define CCTK_SEARCH_HPP

#include <climits>
#include <map>
#include <vector>

#include "cctk/distance.hpp"
#include "cctk/polymat.hpp"
#include "cctk/spectrum.hpp"

namespace cctk {

/// Shortening value that selects the full bidirectional CDF instead of a
/// length-(m-s+1) profile.
constexpr int kShorteningCdf = INT_MIN;

/// All matrices sharing one optimal profile.
struct CodeSet {
    int k = 0, n = 0, m = 0;
    int s = kShorteningCdf;
    Profile achieved;
    std::vector<GeneratorMatrix> members;
};

struct SearchConfig {
    /// Depth the bidirectional CDF is compared to when s selects the CDF
    /// (approximation knob: the profile beyond index m is compared to this
    /// depth).  <0 means 3m.
    int cdf_depth = -1;
    int spectrum_terms = 16;
    /// Even memories: concatenate halves of degree m/2 and m/2-1 instead of
    /// looping over all middle coefficient matrices; falls back to the full
    /// loop when the shortcut's optimality check fails.
    bool accelerated_even = true;
};

/// Stage I: distance-profile-optimal code sets for memories 0..m_max, each
/// built by extending the previous set's prefixes with every degree-m
/// coefficient matrix (sorted rows/columns only).  Catastrophic matrices are
/// not excluded here.
std::map<int, CodeSet> odp_sets(int k, int n, int m_max);

/// Stage II: profile-optimal bidirectional sets from concatenations of
/// stage-I halves over all row/column relabelings of the backward half,
/// excluding catastrophic encoders, deduplicated up to trivial equivalence.
/// m = 1 falls back to exhaustive enumeration when every concatenation is
/// catastrophic.
CodeSet obdp_set(int k, int n, int m, int s, const std::map<int, CodeSet>& stage1,
                 const SearchConfig& cfg = {});

/// Remove the lexicographically higher member of every trivially equivalent
/// pair.
CodeSet dedup_trivial_equiv(const CodeSet& set);

/// Members attaining the minimum information distance spectrum; several
/// survivors are possible and all are returned.
std::vector<GeneratorMatrix> select_best_spectrum(const CodeSet& set, int terms);

}  // namespace cctk

#endif
