#ifndef CCTK_TRELLIS_HPP
#define CCTK_TRELLIS_HPP

#include <cstdint>
#include <vector>

#include "cctk/polymat.hpp"

namespace cctk {

/// Shift-register state: the last m input blocks, k bits each, newest block
/// in the least significant position.  The all-zero value is the start and
/// end state of every frame.
using EncoderState = uint64_t;

struct Frame {
    int K = 0;                       // information bits
    std::vector<uint8_t> info_bits;  // K bits
    std::vector<uint8_t> code_bits;  // (K/k + m) * n bits, zero terminated
};

/// Encoder step/output functions for a fixed generator matrix.  Outputs are
/// computed on the fly from per-output tap masks; no 2^(km) tables are built,
/// so memories up to the 64-bit state limit are fine.
class Encoder {
public:
    explicit Encoder(const GeneratorMatrix& G);
    /// Treat G as having the given memory (>= effective degree).  Used to run
    /// a declared-memory-m matrix on its effective-degree state space.
    Encoder(const GeneratorMatrix& G, int memory);

    int k() const { return k_; }
    int n() const { return n_; }
    int memory() const { return m_; }
    int state_bits() const { return k_ * m_; }
    uint64_t state_count() const { return uint64_t(1) << state_bits(); }

    /// One block step: returns the successor state and the n output bits
    /// packed with output j in bit j.
    std::pair<EncoderState, uint32_t> step(EncoderState s, uint32_t u) const;

    uint32_t output(EncoderState s, uint32_t u) const;
    EncoderState next_state(EncoderState s, uint32_t u) const;

private:
    int k_, n_, m_;
    uint64_t state_mask_;
    std::vector<uint64_t> out_mask_;  // per output j, taps over [u | state << k]
};

/// Zero-terminated frame encoding: K/k data steps followed by m zero steps.
Frame encode(const GeneratorMatrix& G, const std::vector<uint8_t>& info_bits);

}  // namespace cctk

#endif
