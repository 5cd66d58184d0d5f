#ifndef CCTK_POLYMAT_HPP
#define CCTK_POLYMAT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cctk {

/// k x n matrix of binary polynomials in D, each entry stored as a bit mask
/// with bit l holding the coefficient of D^l.  `m` is the declared degree
/// bound: a full code object has an entry of degree m, a prefix object may
/// not.  Values are immutable after construction.
class GeneratorMatrix {
public:
    GeneratorMatrix(int k, int n, int m, std::vector<uint64_t> entries);

    int k() const { return k_; }
    int n() const { return n_; }
    int m() const { return m_; }

    uint64_t entry(int i, int j) const { return g_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<uint64_t>& entries() const { return g_; }

    /// Packed comparison view of entry (i,j): coefficient of D^0 in the most
    /// significant position, so polynomial lexicographic order (0 < 1,
    /// low-degree coefficients first) is plain integer order on words.
    uint64_t word(int i, int j) const;

    /// Row-major sequence of words; lexicographic matrix order for dedup.
    std::vector<uint64_t> packed_words() const;

    /// Largest degree attained by any entry (-1 for the all-zero matrix).
    int effective_degree() const;

    bool row_is_zero(int i) const;

    bool operator==(const GeneratorMatrix& o) const {
        return k_ == o.k_ && n_ == o.n_ && m_ == o.m_ && g_ == o.g_;
    }

private:
    int k_, n_, m_;
    std::vector<uint64_t> g_;
};

struct Permutation {
    std::vector<int> map;  // image of index i is map[i]

    static Permutation identity(int l);
    bool is_valid() const;
    int size() const { return static_cast<int>(map.size()); }
    int operator()(int i) const { return map[i]; }
};

/// All permutations of {0..l-1} in lexicographic order.
std::vector<Permutation> all_permutations(int l);

/// Parse whitespace-separated octal words, row-major, left-aligned: the word
/// is the bit string g^(0) g^(1) ... g^(m) zero-padded on the right to a
/// multiple of 3 and read as octal digits most significant first.
/// Rejects wrong word counts, non-octal digits, set bits beyond degree m and
/// all-zero rows.
GeneratorMatrix parse_octal(const std::string& words, int k, int n, int m);

/// Inverse of parse_octal, minimal word length for the declared m.
std::string format_octal(const GeneratorMatrix& G);

/// Interchange line format: "k n m : w11 w12 ... wkn".
GeneratorMatrix parse_code_line(const std::string& line);
std::string format_code_line(const GeneratorMatrix& G);

/// Reverse code generator: coefficient l of the result is g^(m-l).
GeneratorMatrix reverse(const GeneratorMatrix& G);

/// Coefficients 0..p retained; the result declares degree bound p.
GeneratorMatrix prefix(const GeneratorMatrix& G, int p);

/// Relabel inputs/outputs: result(i,j) = G(pi(i), rho(j)).
GeneratorMatrix permute(const GeneratorMatrix& G, const Permutation& pi, const Permutation& rho);

bool has_sorted_rows(const GeneratorMatrix& G);
bool has_sorted_cols(const GeneratorMatrix& G);
bool has_sorted_rows_cols(const GeneratorMatrix& G);

/// Sort rows, then columns, repeatedly until both are sorted.  Each pass
/// strictly lowers the packed word sequence, so the iteration terminates;
/// the result is idempotent.
GeneratorMatrix canonicalize(const GeneratorMatrix& G);

/// Row-major packed word order ("lexicographically lower" matrix).
bool matrix_less(const GeneratorMatrix& A, const GeneratorMatrix& B);

/// True if some row/column relabeling maps B (or the reverse of B) onto A.
bool trivially_equivalent(const GeneratorMatrix& A, const GeneratorMatrix& B);

/// Concatenation of a forward half, an optional middle coefficient matrix
/// and a reversed backward half into a memory-m generator matrix:
///   odd m:  deg bounds (m-1)/2 for both halves, no middle;
///   even m: bounds m/2-1 for both halves plus a middle 0/1 matrix, or
///           (accelerated) forward bound m/2, backward bound m/2-1, no middle.
/// The backward half is row/column relabeled by (pi, rho) before reversal.
GeneratorMatrix concat_halves(const GeneratorMatrix& Gf, const GeneratorMatrix& Gb, int m,
                              const std::optional<GeneratorMatrix>& middle,
                              const Permutation& pi, const Permutation& rho);

}  // namespace cctk

#endif
