#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ebraid/braid.hpp"
#include "ebraid/scalar.hpp"

namespace ebraid {

struct CorpusEntry {
    std::string name;
    int strands = 1;
    std::string word;
    std::optional<TauLaurent> expected_jhat;

    BraidWord braid() const { return parse_braid(word, strands); }
};

/// The shipped corpus: unknot, unlinks, Hopf link and its mirror, trefoil and
/// its mirror, figure-eight in both braid presentations. Expected values were
/// frozen from the three independently agreeing evaluation routes.
const std::vector<CorpusEntry>& builtin_corpus();

/// Parse {"terms":[{"c":..,"tau":..,"q":..},...]}.
TauLaurent polynomial_from_json(const std::string& text);

/// JSON-lines corpus file; one {"name","strands","word"[,"expected_jhat"]} per line.
std::vector<CorpusEntry> load_corpus(const std::string& path);
std::string corpus_to_jsonl(const std::vector<CorpusEntry>& entries);

}  // namespace ebraid
