#include <doctest.h>

#include <random>

#include "cctk/trellis.hpp"

using namespace cctk;

TEST_CASE("single step convolution for 5 7") {
    GeneratorMatrix G = parse_octal("5 7", 1, 2, 2);
    Encoder enc(G);
    auto [s, v] = enc.step(0, 1);
    CHECK(v == 0b11);  // both outputs 1
    CHECK(s == 0b01);  // newest block in the low bits

    auto [s2, v2] = enc.step(0, 0);
    CHECK(v2 == 0);
    CHECK(s2 == 0);
}

TEST_CASE("g1 = D delays the input by one block") {
    GeneratorMatrix G = parse_octal("2 6", 1, 2, 1);
    Encoder enc(G);
    auto [s, v] = enc.step(0, 1);
    CHECK((v & 1) == 0);  // output 1 sees only the previous block
    CHECK((v >> 1 & 1) == 1);
    CHECK(s == 1);
}

TEST_CASE("encode 5 7 by hand") {
    GeneratorMatrix G = parse_octal("5 7", 1, 2, 2);
    Frame f = encode(G, {1, 0});
    CHECK(f.code_bits == std::vector<uint8_t>{1, 1, 0, 1, 1, 1, 0, 0});
}

TEST_CASE("all-zero input gives the all-zero codeword") {
    GeneratorMatrix G = parse_octal("54 64", 1, 2, 3);
    Frame f = encode(G, std::vector<uint8_t>(16, 0));
    for (uint8_t b : f.code_bits) CHECK(b == 0);
    CHECK(f.code_bits.size() == (16 + 3) * 2);
}

TEST_CASE("impulse response weight equals the generator row weight") {
    GeneratorMatrix G = parse_octal("5 7", 1, 2, 2);
    std::vector<uint8_t> e1(8, 0);
    e1[0] = 1;
    Frame f = encode(G, e1);
    int w = 0;
    for (uint8_t b : f.code_bits) w += b;
    CHECK(w == 5);  // w(1+D^2) + w(1+D+D^2)
}

TEST_CASE("encoding is linear and zero terminated") {
    std::mt19937_64 rng(3);
    GeneratorMatrix G = parse_octal("2 5 7 7 2 7", 2, 3, 2);
    Encoder enc(G);
    for (int t = 0; t < 200; ++t) {
        std::vector<uint8_t> u(12), w(12), x(12);
        for (size_t i = 0; i < u.size(); ++i) {
            u[i] = rng() & 1;
            w[i] = rng() & 1;
            x[i] = u[i] ^ w[i];
        }
        Frame fu = encode(G, u), fw = encode(G, w), fx = encode(G, x);
        for (size_t i = 0; i < fu.code_bits.size(); ++i)
            CHECK(static_cast<int>(fx.code_bits[i]) == (fu.code_bits[i] ^ fw.code_bits[i]));

        // final state is zero: re-run the steps
        EncoderState s = 0;
        for (int b = 0; b < 6 + 2; ++b) {
            uint32_t in = 0;
            if (b < 6) in = static_cast<uint32_t>(u[2 * b]) | static_cast<uint32_t>(u[2 * b + 1]) << 1;
            s = enc.next_state(s, in);
        }
        CHECK(s == 0);
    }
    CHECK_THROWS(encode(G, std::vector<uint8_t>(13, 0)));  // K not divisible by k
}
