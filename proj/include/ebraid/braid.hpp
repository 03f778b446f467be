#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ebraid/errors.hpp"

namespace ebraid {

/// A braid word on `strands` strands. Letter l stands for the generator
/// sigma_{|l|}, crossing sign = sign(l); 1 <= |l| <= strands-1. The empty
/// word is the identity braid.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> ls);  // validates

    int crossings() const { return static_cast<int>(letters.size()); }
};

/// Parse a whitespace-separated list of signed integers.
/// Throws MalformedBraid on non-integer tokens, zero letters, or |l| >= n.
BraidWord parse_braid(const std::string& text, int strands);

std::string render(const BraidWord& b);

int writhe(const BraidWord& b);
int positive_crossings(const BraidWord& b);
int negative_crossings(const BraidWord& b);

/// Bijection of {0..n-1} (0-based images).
struct Permutation {
    std::vector<int> image;
    int cycles() const;
};

Permutation underlying_permutation(const BraidWord& b);

/// Number of link components of the trace closure = cycles of the
/// underlying permutation.
int closure_components(const BraidWord& b);

/// Deterministic splittable RNG so braid sampling is reproducible
/// independently of the standard library's distribution internals.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform value in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n);
    /// Uniform int in [lo, hi] inclusive.
    int range(int lo, int hi);

  private:
    std::uint64_t state_;
};

/// Uniform letters over {+-1 .. +-(n-1)}; deterministic for a fixed seed.
BraidWord random_braid(int strands, int len, std::uint64_t seed);

// Individual Markov moves. Each output closes to a link isotopic to b's closure.
BraidWord conjugate_by(const BraidWord& b, int letter);       // letter, b, letter^-1
BraidWord stabilize(const BraidWord& b, int sign);            // append sigma_n^{+-1}, n+1 strands
BraidWord rotate_letters(const BraidWord& b, int k);          // cyclic shift

/// `count` variants of b, each produced by a short random sequence of
/// conjugations, stabilizations and rotations.
std::vector<BraidWord> markov_variants(const BraidWord& b, std::uint64_t seed, int count);

}  // namespace ebraid
