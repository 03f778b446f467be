#include "ebraid/braid.hpp"

#include <numeric>
#include <sstream>

namespace ebraid {

namespace {

void check_letter(int letter, int strands) {
    if (letter == 0) throw MalformedBraid("zero is not a braid letter");
    int idx = letter > 0 ? letter : -letter;
    if (idx > strands - 1)
        throw MalformedBraid("letter " + std::to_string(letter) + " needs at least " +
                             std::to_string(idx + 1) + " strands, have " + std::to_string(strands));
}

}  // namespace

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
    if (n < 1) throw MalformedBraid("strand count must be >= 1");
    for (int l : letters) check_letter(l, strands);
}

BraidWord parse_braid(const std::string& text, int strands) {
    if (strands < 1) throw MalformedBraid("strand count must be >= 1");
    std::vector<int> letters;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw MalformedBraid("not an integer token: '" + tok + "'");
        }
        if (pos != tok.size()) throw MalformedBraid("not an integer token: '" + tok + "'");
        check_letter(value, strands);
        letters.push_back(value);
    }
    return BraidWord(strands, std::move(letters));
}

std::string render(const BraidWord& b) {
    std::ostringstream out;
    for (std::size_t i = 0; i < b.letters.size(); ++i) {
        if (i) out << ' ';
        out << b.letters[i];
    }
    return out.str();
}

int writhe(const BraidWord& b) {
    int w = 0;
    for (int l : b.letters) w += l > 0 ? 1 : -1;
    return w;
}

int positive_crossings(const BraidWord& b) {
    int c = 0;
    for (int l : b.letters) c += l > 0;
    return c;
}

int negative_crossings(const BraidWord& b) {
    int c = 0;
    for (int l : b.letters) c += l < 0;
    return c;
}

int Permutation::cycles() const {
    std::vector<char> seen(image.size(), 0);
    int count = 0;
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (seen[i]) continue;
        ++count;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image[j])) seen[j] = 1;
    }
    return count;
}

Permutation underlying_permutation(const BraidWord& b) {
    Permutation p;
    p.image.resize(b.strands);
    std::iota(p.image.begin(), p.image.end(), 0);
    // Follow each strand bottom to top: sigma_i transposes positions i-1, i.
    for (int l : b.letters) {
        int i = (l > 0 ? l : -l) - 1;
        std::swap(p.image[i], p.image[i + 1]);
    }
    // p.image[pos] = strand that ends at pos; invert to get bottom -> top.
    Permutation inv;
    inv.image.resize(b.strands);
    for (int pos = 0; pos < b.strands; ++pos) inv.image[p.image[pos]] = pos;
    return inv;
}

int closure_components(const BraidWord& b) { return underlying_permutation(b).cycles(); }

std::uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
    // Rejection sampling keeps the draw exactly uniform.
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
}

int SplitMix64::range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

BraidWord random_braid(int strands, int len, std::uint64_t seed) {
    if (strands < 2) throw MalformedBraid("random_braid needs >= 2 strands");
    if (len < 0) throw MalformedBraid("random_braid needs len >= 0");
    SplitMix64 rng(seed);
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        int idx = rng.range(1, strands - 1);
        letters.push_back(rng.below(2) ? idx : -idx);
    }
    return BraidWord(strands, std::move(letters));
}

BraidWord conjugate_by(const BraidWord& b, int letter) {
    BraidWord r(b.strands, {});
    r.letters.reserve(b.letters.size() + 2);
    r.letters.push_back(letter);
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    r.letters.push_back(-letter);
    return BraidWord(b.strands, std::move(r.letters));
}

BraidWord stabilize(const BraidWord& b, int sign) {
    std::vector<int> letters = b.letters;
    letters.push_back(sign >= 0 ? b.strands : -b.strands);
    return BraidWord(b.strands + 1, std::move(letters));
}

BraidWord rotate_letters(const BraidWord& b, int k) {
    if (b.letters.empty()) return b;
    int m = b.crossings();
    k = ((k % m) + m) % m;
    std::vector<int> letters;
    letters.reserve(b.letters.size());
    letters.insert(letters.end(), b.letters.begin() + k, b.letters.end());
    letters.insert(letters.end(), b.letters.begin(), b.letters.begin() + k);
    return BraidWord(b.strands, std::move(letters));
}

std::vector<BraidWord> markov_variants(const BraidWord& b, std::uint64_t seed, int count) {
    SplitMix64 rng(seed);
    std::vector<BraidWord> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int v = 0; v < count; ++v) {
        BraidWord cur = b;
        int moves = rng.range(1, 3);
        for (int s = 0; s < moves; ++s) {
            switch (rng.below(cur.strands >= 2 ? 4 : 2)) {
                case 0:
                    cur = stabilize(cur, rng.below(2) ? 1 : -1);
                    break;
                case 1:
                    if (cur.crossings() > 0) cur = rotate_letters(cur, rng.range(0, cur.crossings() - 1));
                    break;
                default: {
                    int idx = rng.range(1, cur.strands - 1);
                    cur = conjugate_by(cur, rng.below(2) ? idx : -idx);
                    break;
                }
            }
        }
        out.push_back(std::move(cur));
    }
    return out;
}

}  // namespace ebraid
