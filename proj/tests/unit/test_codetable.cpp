#include <doctest.h>

#include <algorithm>
#include <random>

#include "akshar/codetable.hpp"
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

const CodeTable& gb_table()
{
    static const CodeTable t = CodeTable::load(oracle::data_dir() / "tables/gb2312_hanzi.tsv");
    return t;
}

const CodeTable& indic_table()
{
    static const CodeTable t = CodeTable::load(oracle::data_dir() / "tables/indic.tsv");
    return t;
}

}  // namespace

TEST_CASE("code points carry lead and trail bytes 0xA0 + row/cell")
{
    CodePoint origin(1, 1);
    CHECK(origin.lead() == 0xA1);
    CHECK(origin.trail() == 0xA1);
    CHECK(origin.level() == Level::L1);

    CodePoint last(94, 94);
    CHECK(last.lead() == 0xFE);
    CHECK(last.trail() == 0xFE);
    CHECK(last.level() == Level::L2);

    CHECK(CodePoint(55, 94).level() == Level::L1);
    CHECK(CodePoint(56, 1).level() == Level::L2);
    CHECK(CodePoint::from_bytes(0xB0, 0xA1) == CodePoint(16, 1));

    CHECK(kind_of([] { CodePoint(0, 1); }) == ErrorKind::RowOutOfRange);
    CHECK(kind_of([] { CodePoint(1, 95); }) == ErrorKind::RowOutOfRange);
}

TEST_CASE("load_table examples")
{
    SUBCASE("one char at row 1 cell 1")
    {
        auto t = CodeTable::parse("1\t1\t4E00\tHan\tone\n");
        REQUIRE(t.size() == 1);
        auto p = t.lookup_char(0x4E00);
        CHECK(p.lead() == 0xA1);
        CHECK(p.trail() == 0xA1);
    }
    SUBCASE("two chars on one cell")
    {
        CHECK(kind_of([] { CodeTable::parse("1\t1\t4E00\tHan\ta\n1\t1\t4E01\tHan\tb\n"); }) ==
              ErrorKind::DuplicateCode);
    }
    SUBCASE("one char on two cells")
    {
        CHECK(kind_of([] { CodeTable::parse("1\t1\t4E00\tHan\ta\n1\t2\t4E00\tHan\ta\n"); }) ==
              ErrorKind::DuplicateChar);
    }
    SUBCASE("rows outside 1..94")
    {
        CHECK(kind_of([] { CodeTable::parse("95\t1\t4E00\tHan\ta\n"); }) == ErrorKind::RowOutOfRange);
        CHECK(kind_of([] { CodeTable::parse("1\t0\t4E00\tHan\ta\n"); }) == ErrorKind::RowOutOfRange);
    }
    SUBCASE("a different level split is rejected")
    {
        CHECK(kind_of([] { CodeTable::parse("@levels\t1-50\t51-94\n"); }) == ErrorKind::RowOutOfRange);
        CHECK_NOTHROW(CodeTable::parse("@levels\t1-55\t56-94\n"));
    }
    SUBCASE("overlapping banks")
    {
        CHECK(kind_of([] {
                  CodeTable::parse("@bank\tDevanagari\t16-20\n@bank\tBengali\t20-22\n");
              }) == ErrorKind::BankOverlap);
        // inferred banks overlap when two scripts interleave rows
        CHECK(kind_of([] {
                  CodeTable::parse("16\t1\t0915\tDevanagari\tka\n17\t1\t0995\tBengali\tka\n"
                                   "18\t1\t0916\tDevanagari\tkha\n");
              }) == ErrorKind::BankOverlap);
    }
    SUBCASE("an entry outside its script's bank")
    {
        CHECK(kind_of([] {
                  CodeTable::parse("@bank\tDevanagari\t16-17\n18\t1\t0915\tDevanagari\tka\n");
              }) == ErrorKind::RowOutOfRange);
    }
    SUBCASE("ASCII is never assigned")
    {
        CHECK(kind_of([] { CodeTable::parse("3\t33\t0041\tLatin\tA\n"); }) == ErrorKind::ParseError);
    }
    SUBCASE("malformed lines")
    {
        CHECK(kind_of([] { CodeTable::parse("1\t1\n"); }) == ErrorKind::ParseError);
        CHECK(kind_of([] { CodeTable::parse("x\t1\t4E00\tHan\ta\n"); }) == ErrorKind::ParseError);
        CHECK(kind_of([] { CodeTable::parse("1\t1\t4E00\tKlingon\ta\n"); }) == ErrorKind::ParseError);
    }
}

TEST_CASE("reference GB-style table reports 3755 + 3008 = 6763")
{
    const auto& t = gb_table();
    CHECK(t.level_size(Level::L1) == 3755);
    CHECK(t.level_size(Level::L2) == 3008);
    CHECK(t.size() == 6763);
}

TEST_CASE("lookup_char and lookup_code")
{
    const auto& t = indic_table();
    CHECK(kind_of([&] { t.lookup_char(U'A'); }) == ErrorKind::NotAssigned);

    // Devanagari starts at row 16 cell 1 in the reference table
    auto p = t.lookup_char(0x0900);
    CHECK(p == CodePoint(16, 1));
    CHECK(p.lead() == 0xB0);
    CHECK(p.trail() == 0xA1);
    CHECK(p.level() == Level::L1);

    CHECK(t.lookup_code(CodePoint(16, 22)).scalar == 0x0915);
    CHECK(kind_of([&] { t.lookup_code(CodePoint(1, 1)); }) == ErrorKind::UnassignedCode);

    // Bengali is the level 2 bank
    CHECK(t.lookup_char(0x0995).level() == Level::L2);
}

TEST_CASE("lookup round trip over every cell of both shipped tables")
{
    for (const auto* t : {&gb_table(), &indic_table()}) {
        std::size_t assigned = 0;
        for (int row = 1; row <= kRows; ++row)
            for (int cell = 1; cell <= kCells; ++cell) {
                CodePoint p(row, cell);
                CHECK(p.lead() >= 0xA1);
                CHECK(p.trail() <= 0xFE);
                if (const auto* ch = t->find_code(p)) {
                    ++assigned;
                    REQUIRE(t->lookup_char(ch->scalar) == p);
                }
            }
        CHECK(assigned == t->size());
        for (const auto& e : t->entries())
            REQUIRE(t->lookup_code(t->lookup_char(e.ch.scalar)).scalar == e.ch.scalar);
    }
}

TEST_CASE("reference tables agree with the file contents")
{
    auto raw = oracle::read_table(oracle::data_dir() / "tables/indic.tsv");
    const auto& t = indic_table();
    CHECK(raw.size() == t.size());
    for (const auto& [scalar, rc] : raw)
        CHECK(t.lookup_char(scalar) == CodePoint(rc.first, rc.second));
}

TEST_CASE("every assigned row lies in exactly one bank")
{
    for (const auto* t : {&gb_table(), &indic_table()})
        for (const auto& e : t->entries()) {
            auto n = std::count_if(t->banks().begin(), t->banks().end(),
                                   [&](const Bank& b) { return b.rows.contains(e.code.row()); });
            CHECK(n == 1);
        }
}

TEST_CASE("serialize then reload yields the same bijection")
{
    for (const auto* t : {&gb_table(), &indic_table()}) {
        auto again = CodeTable::parse(t->serialize());
        REQUIRE(again.size() == t->size());
        CHECK(again.banks() == t->banks());
        for (const auto& e : t->entries()) {
            CHECK(again.lookup_char(e.ch.scalar) == e.code);
            CHECK(again.lookup_code(e.code) == e.ch);
        }
    }
}

TEST_CASE("coverage")
{
    const auto& t = gb_table();
    std::u32string l1, l2;
    for (const auto& e : t.entries())
        (e.code.level() == Level::L1 ? l1 : l2) += e.ch.scalar;

    SUBCASE("all level 1")
    {
        auto c = t.coverage(l1.substr(0, 200));
        CHECK(c.l1_fraction == 1.0);
        CHECK(c.l2_fraction == 0.0);
        CHECK_FALSE(c.empty);
    }
    SUBCASE("95 level 1 tokens and 5 level 2 tokens")
    {
        auto corpus = l1.substr(0, 95) + l2.substr(0, 5);
        auto c = t.coverage(corpus);
        CHECK(c.l1_fraction == doctest::Approx(0.95));
        CHECK(c.l2_fraction == doctest::Approx(0.05));
        CHECK(c.unassigned_fraction == 0.0);
        CHECK(c.l1_count == 95);
        CHECK(c.l2_count == 5);
    }
    SUBCASE("empty corpus")
    {
        auto c = t.coverage(U"");
        CHECK(c.empty);
        CHECK(c.total == 0);
        CHECK(c.l1_fraction == 0.0);
        CHECK(c.l2_fraction == 0.0);
        CHECK(c.unassigned_fraction == 0.0);
    }
    SUBCASE("unassigned characters count but are not fatal")
    {
        auto c = t.coverage(U"ab" + l1.substr(0, 2));
        CHECK(c.unassigned_count == 2);
        CHECK(c.unassigned_fraction == doctest::Approx(0.5));
    }
    SUBCASE("fractions sum to one, independent of order, and match direct counting")
    {
        auto raw = oracle::read_table(oracle::data_dir() / "tables/gb2312_hanzi.tsv");
        std::mt19937 rng(7);
        for (int round = 0; round < 20; ++round) {
            std::u32string corpus;
            for (int i = 0; i < 500; ++i) {
                auto r = rng() % 10;
                corpus += r < 6 ? l1[rng() % l1.size()] : r < 9 ? l2[rng() % l2.size()] : U'x';
            }
            auto c = t.coverage(corpus);
            CHECK(c.l1_fraction + c.l2_fraction + c.unassigned_fraction ==
                  doctest::Approx(1.0).epsilon(1e-12));
            auto counts = oracle::count_levels(corpus, raw);
            CHECK(c.l1_count == counts.l1);
            CHECK(c.l2_count == counts.l2);
            CHECK(c.unassigned_count == counts.other);
            std::shuffle(corpus.begin(), corpus.end(), rng);
            auto d = t.coverage(corpus);
            CHECK(d.l1_fraction == c.l1_fraction);
            CHECK(d.l2_fraction == c.l2_fraction);
        }
    }
}
