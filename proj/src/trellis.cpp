#include "cctk/trellis.hpp"

#include <bit>
#include <stdexcept>

namespace cctk {

Encoder::Encoder(const GeneratorMatrix& G) : Encoder(G, G.m()) {}

Encoder::Encoder(const GeneratorMatrix& G, int memory) : k_(G.k()), n_(G.n()), m_(memory) {
    if (memory < G.effective_degree()) throw std::invalid_argument("encoder memory below matrix degree");
    if (k_ * (m_ + 1) > 64) throw std::invalid_argument("state plus input exceeds 64 bits");
    state_mask_ = state_bits() == 64 ? ~uint64_t(0) : (uint64_t(1) << state_bits()) - 1;
    out_mask_.assign(n_, 0);
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < k_; ++i) {
            uint64_t poly = G.entry(i, j);
            for (int l = 0; l <= G.m(); ++l)
                if (poly >> l & 1) out_mask_[j] |= uint64_t(1) << (l * k_ + i);
        }
}

uint32_t Encoder::output(EncoderState s, uint32_t u) const {
    uint64_t w = u | (s << k_);
    uint32_t v = 0;
    for (int j = 0; j < n_; ++j) v |= static_cast<uint32_t>(std::popcount(w & out_mask_[j]) & 1) << j;
    return v;
}

EncoderState Encoder::next_state(EncoderState s, uint32_t u) const { return ((s << k_) | u) & state_mask_; }

std::pair<EncoderState, uint32_t> Encoder::step(EncoderState s, uint32_t u) const {
    return {next_state(s, u), output(s, u)};
}

Frame encode(const GeneratorMatrix& G, const std::vector<uint8_t>& info_bits) {
    int k = G.k(), n = G.n(), m = G.m();
    int K = static_cast<int>(info_bits.size());
    if (K % k != 0) throw std::invalid_argument("info length not divisible by k");
    Encoder enc(G);
    Frame f;
    f.K = K;
    f.info_bits = info_bits;
    int blocks = K / k + m;
    f.code_bits.reserve(static_cast<size_t>(blocks) * n);
    EncoderState s = 0;
    for (int t = 0; t < blocks; ++t) {
        uint32_t u = 0;
        if (t < K / k)
            for (int i = 0; i < k; ++i) u |= static_cast<uint32_t>(info_bits[static_cast<size_t>(t) * k + i]) << i;
        auto [s2, v] = enc.step(s, u);
        s = s2;
        for (int j = 0; j < n; ++j) f.code_bits.push_back(static_cast<uint8_t>(v >> j & 1));
    }
    return f;
}

}  // namespace cctk
