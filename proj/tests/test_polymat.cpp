#include <doctest.h>

#include <random>

#include "cctk/polymat.hpp"

using namespace cctk;

namespace {

GeneratorMatrix random_matrix(std::mt19937_64& rng, int k, int n, int m) {
    uint64_t mask = (uint64_t(1) << (m + 1)) - 1;
    while (true) {
        std::vector<uint64_t> g(static_cast<size_t>(k) * n);
        for (auto& e : g) e = rng() & mask;
        GeneratorMatrix G(k, n, m, g);
        bool zero_row = false;
        for (int i = 0; i < k; ++i) zero_row |= G.row_is_zero(i);
        if (!zero_row) return G;
    }
}

}  // namespace

TEST_CASE("octal parsing follows the left-aligned convention") {
    GeneratorMatrix G = parse_octal("2 6", 1, 2, 1);
    CHECK(G.entry(0, 0) == 0b10);  // D
    CHECK(G.entry(0, 1) == 0b11);  // 1 + D

    GeneratorMatrix G2 = parse_octal("5 7", 1, 2, 2);
    CHECK(G2.entry(0, 0) == 0b101);  // 1 + D^2
    CHECK(G2.entry(0, 1) == 0b111);  // 1 + D + D^2

    GeneratorMatrix G3 = parse_octal("4 4", 1, 2, 0);
    CHECK(G3.entry(0, 0) == 1);
    CHECK(G3.entry(0, 1) == 1);
}

TEST_CASE("octal parsing rejects malformed input") {
    CHECK_THROWS(parse_octal("2", 1, 2, 1));          // word count
    CHECK_THROWS(parse_octal("2 6 4", 1, 2, 1));      // word count
    CHECK_THROWS(parse_octal("2 8", 1, 2, 1));        // non-octal digit
    CHECK_THROWS(parse_octal("2 7", 1, 2, 1));        // set bit beyond degree 1
    CHECK_THROWS(parse_octal("2 6", 1, 2, 5));        // word too short for m
    CHECK_THROWS(parse_octal("0 0 6 6", 2, 3, 1));    // word count (needs 6)
    CHECK_THROWS(parse_octal("0 0 4 4", 2, 2, 0));    // k == n
    CHECK_THROWS(parse_octal("0 0 0 6 6 4", 2, 3, 1));  // all-zero row
}

TEST_CASE("format_octal inverts parse_octal with minimal words") {
    CHECK(format_octal(parse_octal("2 6", 1, 2, 1)) == "2 6");
    CHECK(format_octal(parse_octal("4 4", 1, 2, 0)) == "4 4");
    CHECK(format_octal(parse_octal("54 64", 1, 2, 3)) == "54 64");
    CHECK(format_code_line(parse_code_line("1 2 2 : 5 7")) == "1 2 2 : 5 7");
}

TEST_CASE("round-trip over every rate-1/2 memory-3 matrix") {
    for (uint32_t a = 0; a < 16; ++a)
        for (uint32_t b = 0; b < 16; ++b) {
            if (a == 0 && b == 0) continue;  // zero row is rejected by parse
            GeneratorMatrix G(1, 2, 3, {a, b});
            CHECK(parse_octal(format_octal(G), 1, 2, 3) == G);
        }
}

TEST_CASE("reverse flips coefficient order") {
    GeneratorMatrix G = parse_octal("5 7", 1, 2, 2);
    CHECK(reverse(G) == G);  // palindromic coefficients

    // 54 = 1011 -> 1101 = 64; 64 = 1101 -> 1011 = 54 (left-aligned words)
    GeneratorMatrix H = parse_octal("54 64", 1, 2, 3);
    CHECK(format_octal(reverse(H)) == "64 54");
    CHECK(reverse(reverse(H)) == H);
}

TEST_CASE("reverse is an involution and commutes with permutation") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 1000; ++t) {
        int k = 1 + static_cast<int>(rng() % 2);
        int n = k + 1 + static_cast<int>(rng() % 2);
        int m = static_cast<int>(rng() % 6);
        GeneratorMatrix G = random_matrix(rng, k, n, m);
        CHECK(reverse(reverse(G)) == G);
        auto perms_r = all_permutations(k);
        auto perms_c = all_permutations(n);
        const Permutation& pi = perms_r[rng() % perms_r.size()];
        const Permutation& rho = perms_c[rng() % perms_c.size()];
        CHECK(reverse(permute(G, pi, rho)) == permute(reverse(G), pi, rho));
    }
}

TEST_CASE("prefix keeps low coefficients and its own bound") {
    GeneratorMatrix G = parse_octal("564 774", 1, 2, 6);
    CHECK(prefix(G, 6) == G);
    // coefficient strings 1011101 / 1111111 truncate to 101 / 111 and 1011 / 1111
    GeneratorMatrix P = prefix(G, 2);
    CHECK(P.m() == 2);
    CHECK(format_octal(P) == "5 7");
    CHECK(format_octal(prefix(G, 3)) == "54 74");
    GeneratorMatrix Z = prefix(G, 0);
    for (int j = 0; j < 2; ++j) CHECK(Z.entry(0, j) <= 1);
    CHECK_THROWS(prefix(G, 7));
    CHECK_THROWS(prefix(G, -1));
}

TEST_CASE("sorted rows and columns per the polynomial order") {
    CHECK(has_sorted_rows_cols(parse_octal("5 7", 1, 2, 2)));
    CHECK_FALSE(has_sorted_rows_cols(parse_octal("7 5", 1, 2, 2)));
    Permutation swap{{1, 0}};
    CHECK(format_octal(permute(parse_octal("7 5", 1, 2, 2), Permutation::identity(1), swap)) == "5 7");

    // rows (2 5 7 / 7 2 7): rows ordered, and columns (2,7) < (5,2) < (7,7)
    GeneratorMatrix A = parse_octal("2 5 7 7 2 7", 2, 3, 2);
    CHECK(has_sorted_rows(A));
    CHECK(has_sorted_cols(A));
    GeneratorMatrix B = parse_octal("5 2 7 2 7 7", 2, 3, 2);
    CHECK_FALSE(has_sorted_rows(B));
    CHECK_FALSE(has_sorted_cols(B));
}

TEST_CASE("word view makes lexicographic polynomial order an integer order") {
    GeneratorMatrix G = parse_octal("2 4 6", 1, 3, 1);
    // 0 < D < 1 < 1+D with g^(0) most significant
    CHECK(G.word(0, 0) < G.word(0, 1));
    CHECK(G.word(0, 1) < G.word(0, 2));
}

TEST_CASE("canonicalize reaches a sorted fixed point and is idempotent") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 1000; ++t) {
        int k = 1 + static_cast<int>(rng() % 3);
        int n = k + 1 + static_cast<int>(rng() % (4 - k));
        int m = static_cast<int>(rng() % 5);
        GeneratorMatrix G = random_matrix(rng, k, n, m);
        GeneratorMatrix C = canonicalize(G);
        CHECK(has_sorted_rows_cols(C));
        CHECK(canonicalize(C) == C);
        CHECK(trivially_equivalent(C, G));
    }
}

TEST_CASE("concat_halves rebuilds table codes from their halves") {
    // 54 64 (m=3): forward half coefficients (1,1),(0,1); backward (1,1),(1,0)
    GeneratorMatrix Gf(1, 2, 1, {0b01, 0b11});
    GeneratorMatrix Gb(1, 2, 1, {0b11, 0b01});
    Permutation id1 = Permutation::identity(1), id2 = Permutation::identity(2);
    GeneratorMatrix G = concat_halves(Gf, Gb, 3, std::nullopt, id1, id2);
    CHECK(format_octal(G) == "54 64");
    CHECK(prefix(G, 1) == Gf);

    // 5 7 (m=2): constant halves plus middle (0,1)
    GeneratorMatrix Cf(1, 2, 0, {1, 1});
    GeneratorMatrix Cb(1, 2, 0, {1, 1});
    GeneratorMatrix mid(1, 2, 0, {0, 1});
    CHECK(format_octal(concat_halves(Cf, Cb, 2, mid, id1, id2)) == "5 7");

    // backward = forward half => self-reverse result (odd m)
    GeneratorMatrix S = concat_halves(Gf, Gf, 3, std::nullopt, id1, id2);
    CHECK(reverse(S) == S);

    CHECK_THROWS(concat_halves(Gf, Gb, 4, std::nullopt, id1, id2));  // parity mismatch
    CHECK_THROWS(concat_halves(Cf, Cb, 2, std::nullopt, id1, id2));  // missing middle
}

TEST_CASE("trivial equivalence spots column swaps and reversal") {
    GeneratorMatrix A = parse_octal("5 7", 1, 2, 2);
    GeneratorMatrix B = parse_octal("7 5", 1, 2, 2);
    CHECK(trivially_equivalent(A, B));
    GeneratorMatrix C = parse_octal("54 64", 1, 2, 3);
    CHECK(trivially_equivalent(C, reverse(C)));
    CHECK_FALSE(trivially_equivalent(A, parse_octal("5 6", 1, 2, 2)));
    CHECK(matrix_less(A, B));
}
