#include "ebraid/corpus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ebraid {

namespace {

TauLaurent poly_from_json_value(const nlohmann::json& j) {
    TauLaurent p;
    for (const auto& term : j.at("terms"))
        p += TauLaurent::monomial(term.at("tau").get<int>(), term.at("q").get<int>(),
                                  Int(term.at("c").get<long>()));
    return p;
}

CorpusEntry make_entry(std::string name, int strands, std::string word, const char* expected_json) {
    CorpusEntry e;
    e.name = std::move(name);
    e.strands = strands;
    e.word = std::move(word);
    if (expected_json) e.expected_jhat = polynomial_from_json(expected_json);
    return e;
}

}  // namespace

TauLaurent polynomial_from_json(const std::string& text) {
    return poly_from_json_value(nlohmann::json::parse(text));
}

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = [] {
        std::vector<CorpusEntry> c;
        c.push_back(make_entry("unknot", 1, "",
                               R"({"terms":[{"c":1,"tau":1,"q":-1},{"c":1,"tau":3,"q":1}]})"));
        c.push_back(make_entry("unlink2", 2, "",
                               R"({"terms":[{"c":1,"tau":2,"q":-2},{"c":2,"tau":0,"q":0},{"c":1,"tau":2,"q":2}]})"));
        c.push_back(make_entry("unlink3", 3, "",
                               R"({"terms":[{"c":1,"tau":3,"q":-3},{"c":3,"tau":1,"q":-1},{"c":3,"tau":3,"q":1},{"c":1,"tau":1,"q":3}]})"));
        c.push_back(make_entry("hopf_pos", 2, "1 1",
                               R"({"terms":[{"c":1,"tau":0,"q":0},{"c":1,"tau":2,"q":2},{"c":1,"tau":0,"q":4},{"c":1,"tau":2,"q":6}]})"));
        c.push_back(make_entry("hopf_neg", 2, "-1 -1",
                               R"({"terms":[{"c":1,"tau":2,"q":-6},{"c":1,"tau":0,"q":-4},{"c":1,"tau":2,"q":-2},{"c":1,"tau":0,"q":0}]})"));
        c.push_back(make_entry("trefoil", 2, "1 1 1",
                               R"({"terms":[{"c":1,"tau":3,"q":1},{"c":1,"tau":1,"q":3},{"c":1,"tau":3,"q":5},{"c":-1,"tau":3,"q":9}]})"));
        c.push_back(make_entry("trefoil_mirror", 2, "-1 -1 -1",
                               R"({"terms":[{"c":-1,"tau":1,"q":-9},{"c":1,"tau":1,"q":-5},{"c":1,"tau":3,"q":-3},{"c":1,"tau":1,"q":-1}]})"));
        c.push_back(make_entry("figure8", 3, "1 -2 1 -2",
                               R"({"terms":[{"c":1,"tau":1,"q":-5},{"c":1,"tau":3,"q":5}]})"));
        c.push_back(make_entry("figure8_flip", 3, "-1 2 -1 2",
                               R"({"terms":[{"c":1,"tau":1,"q":-5},{"c":1,"tau":3,"q":5}]})"));
        return c;
    }();
    return corpus;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    std::vector<CorpusEntry> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        CorpusEntry e;
        e.name = j.at("name").get<std::string>();
        e.strands = j.at("strands").get<int>();
        e.word = j.at("word").get<std::string>();
        if (j.contains("expected_jhat")) e.expected_jhat = poly_from_json_value(j.at("expected_jhat"));
        e.braid();  // validates
        entries.push_back(std::move(e));
    }
    return entries;
}

std::string corpus_to_jsonl(const std::vector<CorpusEntry>& entries) {
    std::ostringstream out;
    for (const CorpusEntry& e : entries) {
        out << R"({"name":")" << e.name << R"(","strands":)" << e.strands << R"(,"word":")" << e.word
            << "\"";
        if (e.expected_jhat) out << R"(,"expected_jhat":)" << e.expected_jhat->to_json();
        out << "}\n";
    }
    return out.str();
}

}  // namespace ebraid
