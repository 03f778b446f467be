#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ebraid/corpus.hpp"

namespace ebraid {

struct VerifyOptions {
    int trials = 100;
    int max_strands = 4;
    int max_crossings = 8;
    std::uint64_t seed = 1;
};

struct VerifyReport {
    int checks = 0;
    int failures = 0;
    std::vector<std::string> messages;  // one per failure

    bool ok() const { return failures == 0; }
    void fail(std::string msg) {
        ++failures;
        messages.push_back(std::move(msg));
    }
};

/// Markov invariance of jhat: random braids against random Markov variants,
/// exact equality.
VerifyReport verify_markov(const VerifyOptions& opts);

/// graded_euler(C(B)) = jhat(B) for the corpus and random braids, bundled with
/// the structural checks (d^2 = 0, degree preservation, face anticommutativity,
/// q+tau = 0 mod 4 on homology generators).
VerifyReport verify_euler(const VerifyOptions& opts, const std::vector<CorpusEntry>& corpus);

/// Three-method agreement: state sum = TL closure = tensor-calculus oracle,
/// exhaustively on short words and randomly beyond.
VerifyReport verify_oracle(const VerifyOptions& opts);

/// Covering checks: sign system solvable and verified, pi=+1 complex equals
/// the even complex matrix-for-matrix, mod-2 homology dimensions agree between
/// pi = +-1.
VerifyReport verify_signs(const VerifyOptions& opts, const std::vector<CorpusEntry>& corpus);

}  // namespace ebraid
