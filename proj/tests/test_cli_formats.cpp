#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ebraid/corpus.hpp"
#include "ebraid/rep.hpp"
#include "ebraid/skein.hpp"

using namespace ebraid;

TEST_CASE("builtin corpus entries parse and carry correct expected values") {
    const auto& corpus = builtin_corpus();
    REQUIRE(corpus.size() >= 8);
    for (const CorpusEntry& e : corpus) {
        BraidWord b = e.braid();
        REQUIRE(e.expected_jhat.has_value());
        CHECK(jhat(b) == *e.expected_jhat);
        CHECK(jhat_via_tl(b) == *e.expected_jhat);
        CHECK(jhat_oracle(b) == *e.expected_jhat);
    }
}

TEST_CASE("corpus covers the named links with both mirrors") {
    const auto& corpus = builtin_corpus();
    auto find = [&corpus](const std::string& name) -> const CorpusEntry* {
        for (const CorpusEntry& e : corpus)
            if (e.name == name) return &e;
        return nullptr;
    };
    REQUIRE(find("unknot"));
    REQUIRE(find("hopf_pos"));
    REQUIRE(find("hopf_neg"));
    REQUIRE(find("trefoil"));
    REQUIRE(find("trefoil_mirror"));
    REQUIRE(find("figure8"));
    CHECK(find("trefoil")->word == "1 1 1");
    CHECK(closure_components(find("hopf_pos")->braid()) == 2);
    CHECK(closure_components(find("figure8")->braid()) == 1);
}

TEST_CASE("corpus jsonl round trip") {
    const auto& corpus = builtin_corpus();
    std::string path = "test_corpus_roundtrip.jsonl";
    {
        std::ofstream out(path);
        out << corpus_to_jsonl(corpus);
    }
    std::vector<CorpusEntry> loaded = load_corpus(path);
    std::remove(path.c_str());
    REQUIRE(loaded.size() == corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(loaded[i].name == corpus[i].name);
        CHECK(loaded[i].strands == corpus[i].strands);
        CHECK(loaded[i].word == corpus[i].word);
        REQUIRE(loaded[i].expected_jhat.has_value() == corpus[i].expected_jhat.has_value());
        if (loaded[i].expected_jhat) CHECK(*loaded[i].expected_jhat == *corpus[i].expected_jhat);
    }
}

TEST_CASE("polynomial json parsing inverts rendering") {
    TauLaurent p = jhat(parse_braid("1 -2 1 -2", 3));
    CHECK(polynomial_from_json(p.to_json()) == p);
}

TEST_CASE("corpus loading validates words") {
    std::string path = "test_corpus_bad.jsonl";
    {
        std::ofstream out(path);
        out << R"({"name":"bad","strands":2,"word":"3 1"})" << "\n";
    }
    CHECK_THROWS_AS(load_corpus(path), MalformedBraid);
    std::remove(path.c_str());
}

TEST_CASE("renderings are byte-stable across repeated evaluation") {
    BraidWord b = parse_braid("1 -2 1 -2", 3);
    CHECK(jhat(b).to_json() == jhat(b).to_json());
    CHECK(jhat(b).to_text() == jhat(b).to_text());
    // The documented trefoil CLI line.
    CHECK(jhat(parse_braid("1 1 1", 2)).to_text() ==
          "1*t^3*q^1 + 1*t^1*q^3 + 1*t^3*q^5 + -1*t^3*q^9");
    CHECK(jhat(parse_braid("", 1)).to_text() == "1*t^1*q^-1 + 1*t^3*q^1");
}
