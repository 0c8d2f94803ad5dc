#include <doctest.h>

#include <random>

#include "akshar/anusaaraka.hpp"
#include "akshar/error.hpp"
#include "support/oracles.hpp"

using namespace akshar;

namespace {

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an akshar::Error");
    return ErrorKind::IoError;
}

const GlossResources& te_hi()
{
    static const GlossResources r = GlossResources::load(oracle::data_dir() / "anusaaraka/te-hi");
    return r;
}

const GlossResources& hi_en()
{
    static const GlossResources r = GlossResources::load(oracle::data_dir() / "anusaaraka/hi-en");
    return r;
}

std::vector<std::string> texts(const std::vector<SourceWord>& ws)
{
    std::vector<std::string> out;
    for (const auto& w : ws)
        out.push_back(w.text);
    return out;
}

const char* kParadigms = "@pair\txx\tyy\n@features\tpl q\ns\tpl\nka\tq\tnote.\n";
const char* kLexicon = "@pair\txx\tyy\ncat\tnoun\tbilli\nbank\tnoun\tkinaara|baink\n";
const char* kVibhakti = "@pair\txx\tyy\npl\teM\nq\tkyA|nA\n";

}  // namespace

TEST_CASE("tokenize")
{
    auto ws = tokenize("mIru pustakaM caduvutunnArA?");
    CHECK(texts(ws) == std::vector<std::string>{"mIru", "pustakaM", "caduvutunnArA"});
    CHECK(ws[2].punctuation == "?");
    CHECK(ws[0].punctuation.empty());
    CHECK(tokenize("").empty());
    CHECK(texts(tokenize("a  b")) == std::vector<std::string>{"a", "b"});
    auto multi = tokenize("what?! ,");
    CHECK(multi[0].punctuation == "?!");
    CHECK(multi[1].text.empty());
    CHECK(multi[1].punctuation == ",");
}

TEST_CASE("analyze")
{
    SUBCASE("Hindi ergative postposition")
    {
        auto a = hi_en().analyze("ne");
        CHECK(a.root.empty());
        REQUIRE(a.suffixes.size() == 1);
        CHECK(a.suffixes[0].suffix == "ne");
        CHECK(a.features() == std::vector<std::string>{"erg", "karta"});
        CHECK_FALSE(a.unknown);
    }
    SUBCASE("Telugu verb with two suffixes")
    {
        auto a = te_hi().analyze("caduvutunnArA");
        CHECK(a.root == "caduvu");
        REQUIRE(a.suffixes.size() == 2);
        CHECK(a.suffixes[0].suffix == "tunnA");
        CHECK(a.suffixes[1].suffix == "rA");
        CHECK(a.features() == std::vector<std::string>{"prog", "tam_pres_past", "q", "agr_2pl"});
        CHECK(a.pos == Pos::Verb);
        CHECK(a.surface() == "caduvutunnArA");
    }
    SUBCASE("a bare root")
    {
        auto a = te_hi().analyze("pustakaM");
        CHECK(a.root == "pustakaM");
        CHECK(a.suffixes.empty());
        CHECK(a.features().empty());
    }
    SUBCASE("unanalyzable words")
    {
        auto a = te_hi().analyze("zzz");
        CHECK(a.unknown);
        CHECK(a.root == "zzz");
        CHECK(a.features().empty());
        // suffixes strip but never reach a root
        auto b = te_hi().analyze("zzzrA");
        CHECK(b.unknown);
        CHECK(b.root == "zzzrA");
    }
}

TEST_CASE("transfer")
{
    SUBCASE("the Telugu verb")
    {
        CHECK(te_hi().transfer(te_hi().analyze("caduvutunnArA")).render() ==
              "paDha_raHA_[HE|thA]_kyA{23_ba.}");
    }
    SUBCASE("unknown roots pass through marked")
    {
        auto t = te_hi().transfer(te_hi().analyze("zzz"));
        CHECK(t.render() == "*zzz");
        CHECK(t.unknown);
    }
    SUBCASE("a single unambiguous root")
    {
        CHECK(te_hi().transfer(te_hi().analyze("pustakaM")).render() == "pustaka");
    }
    SUBCASE("multi-target roots and markers keep every option")
    {
        auto r = GlossResources::parse(kParadigms, kLexicon, kVibhakti);
        CHECK(r.gloss_sentence("banks cats catka") == "[kinaara|baink]_eM billi_eM billi_[kyA|nA]{note.}");
    }
}

TEST_CASE("gloss_sentence")
{
    CHECK(te_hi().gloss_sentence("mIru pustakaM caduvutunnArA?") ==
          "Apa pustaka paDha_raHA_[HE|thA]_kyA{23_ba.}?");
    CHECK(hi_en().gloss_sentence("rAma ne roTI khAI") == "Ram erg. bread ate");
    CHECK(te_hi().gloss_sentence("") == "");
    CHECK(te_hi().gloss_sentence("మీరు పుస్తకం చదువుతున్నారా?") ==
          "Apa pustaka paDha_raHA_[HE|thA]_kyA{23_ba.}?");
    CHECK(hi_en().gloss_sentence("राम ने रोटी खाई") == "Ram erg. bread ate");
}

TEST_CASE("resource validation")
{
    auto bad = [](const char* p, const char* l, const char* v) {
        return kind_of([&] { GlossResources::parse(p, l, v); });
    };
    CHECK(bad("@pair\txx\tzz\n@features\tpl q\n", kLexicon, kVibhakti) == ErrorKind::InvalidResource);
    CHECK(bad("@pair\txx\tyy\n@features\tpl q\ns\tdual\n", kLexicon, kVibhakti) ==
          ErrorKind::InvalidResource);
    CHECK(bad("@pair\txx\tyy\n@features\tpl q\ns\tpl\ns\tq\n", kLexicon, kVibhakti) ==
          ErrorKind::InvalidResource);
    CHECK(bad(kParadigms, "@pair\txx\tyy\ncat\tnoun\tbilli\ncat\tnoun\tmaarjaar\n", kVibhakti) ==
          ErrorKind::InvalidResource);
    CHECK(bad(kParadigms, "@pair\txx\tyy\ncat\tbeast\tbilli\n", kVibhakti) == ErrorKind::InvalidResource);
    CHECK(bad(kParadigms, "@pair\txx\tyy\ncat\tnoun\t\n", kVibhakti) == ErrorKind::InvalidResource);
    CHECK(bad(kParadigms, kLexicon, "@pair\txx\tyy\npl\teM\n") == ErrorKind::InvalidResource);
    CHECK(bad(kParadigms, kLexicon, "pl\teM\nq\tkyA\n") == ErrorKind::InvalidResource);
    // the same root may appear once per part of speech
    CHECK_NOTHROW(GlossResources::parse(kParadigms,
                                        "@pair\txx\tyy\nrun\tverb\tdauDa\nrun\tnoun\tdauD\n", kVibhakti));
    CHECK(kind_of([] { GlossResources::load("/nonexistent"); }) == ErrorKind::IoError);
}

TEST_CASE("properties over random sentences")
{
    std::vector<std::string> vocabulary;
    for (const auto* r : {&te_hi(), &hi_en()}) {
        for (const auto& e : r->lexicon()) {
            vocabulary.push_back(e.source_root);
            for (const auto& p : r->paradigms())
                vocabulary.push_back(e.source_root + p.suffix);
        }
        for (const auto& p : r->paradigms())
            vocabulary.push_back(p.suffix);
    }
    const char* punct[] = {"", "", "", "?", ".", ",", "!"};
    std::mt19937 rng(13);
    for (int i = 0; i < 300; ++i) {
        const auto& res = rng() % 2 ? te_hi() : hi_en();
        std::vector<std::string> words;
        std::string sentence;
        for (int n = rng() % 9; n > 0; --n) {
            std::string w = rng() % 4 == 0 ? "unk" + std::to_string(rng() % 100)
                                           : vocabulary[rng() % vocabulary.size()];
            w += punct[rng() % 7];
            words.push_back(w);
            sentence += (sentence.empty() ? "" : std::string(rng() % 3 + 1, ' ')) + w;
        }
        auto tokens = tokenize(sentence);
        REQUIRE(tokens.size() == words.size());
        std::vector<std::string> each;
        for (const auto& t : tokens) {
            auto a = res.analyze(t.text);
            CHECK(a.surface() == t.text);
            each.push_back(res.gloss_word(t).render());
        }
        std::string joined;
        for (const auto& g : each)
            joined += (joined.empty() ? "" : " ") + g;
        CHECK(res.gloss_sentence(sentence) == joined);
        CHECK(res.gloss_sentence(sentence) == res.gloss_sentence(sentence));
    }
}
