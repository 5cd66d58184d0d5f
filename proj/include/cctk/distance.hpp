#ifndef CCTK_DISTANCE_HPP
#define CCTK_DISTANCE_HPP

#include <vector>

#include "cctk/polymat.hpp"

namespace cctk {

/// d_0..d_L sequence of a column distance function / distance profile.
using Profile = std::vector<int>;

enum class Ordering { Better, Equal, Worse };

/// Column distance function to depth L: d_l is the minimum Hamming weight of
/// the first l+1 output blocks over inputs with a nonzero first block.
/// Exact; prunes paths whose accumulated weight exceeds an impulse-response
/// upper bound, so large memories stay tractable.
Profile cdf(const GeneratorMatrix& G, int L);

/// Elementwise minimum of the CDFs of G and its reverse code, to depth L.
Profile bcdf(const GeneratorMatrix& G, int L);

/// Distance profile d_[0,m].
Profile dp(const GeneratorMatrix& G);

/// Shortened bidirectional distance profile: min(d_l, d_rev_l) for
/// l = 0..m-s.  s <= m.
Profile bdp(const GeneratorMatrix& G, int s);

/// Lexicographic profile order: at the first differing index, the larger
/// value is Better.  Profiles must have equal length.
Ordering compare_profiles(const Profile& a, const Profile& b);

/// Largest d satisfying sum_{l=0}^{ki-1} ceil(d/2^l) <= (m+i) n for all
/// i >= 1 (checked up to the smallest i with 2^(k(i-1)) >= d, beyond which
/// the left side grows by k per i against n > k on the right).
int griesmer_bound(int k, int n, int m);

/// True if some cycle of nonzero encoder states has zero output weight on
/// every branch.  k = 1 uses the gcd test (gcd of the generators must be a
/// power of D); k > 1 walks the zero-output state subgraph.
bool is_catastrophic(const GeneratorMatrix& G);

/// gcd of binary polynomials; gcd(0, g) = g.
uint64_t poly_gcd(uint64_t a, uint64_t b);

}  // namespace cctk

#endif
