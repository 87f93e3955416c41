#include <gtest/gtest.h>

#include "denominal/alphabet.hpp"
#include "denominal/error.hpp"
#include "support.hpp"

using namespace denominal;

TEST(Alphabet, HebrewFinalForms) {
    const auto& a = test_support::hebrew().alphabet();
    EXPECT_EQ(a.normalize("מלכ"), "מלך");
    EXPECT_EQ(a.normalize("מלך"), "מלך");
    EXPECT_EQ(a.definalize("מלך"), "מלכ");
    // a final letter inside a word is folded back
    EXPECT_EQ(a.normalize("ךלמ"), "כלם");
}

TEST(Alphabet, NormalizeIsIdempotent) {
    const auto& a = test_support::hebrew().alphabet();
    for (const char* w : {"מלכ", "ךךך", "חשבון", "חשבונ", "צ", "abc", ""}) {
        const auto once = a.normalize(w);
        EXPECT_EQ(a.normalize(once), once) << w;
    }
}

TEST(Alphabet, FreeVariantsFold) {
    const auto& a = test_support::translit().alphabet();
    EXPECT_EQ(a.normalize("xefbon"), "xefvon");
}

TEST(Alphabet, SymbolsUseLongestMatch) {
    Alphabet a({"t", "s", "ts", "a"}, {}, {}, {});
    EXPECT_EQ(a.symbols("tsat"), (std::vector<std::string>{"ts", "a", "t"}));
}

TEST(Alphabet, ValidationRejectsSelfMapsAndUnknownLetters) {
    EXPECT_THROW(Alphabet({"a", "b"}, {{"a", "a"}}, {}, {}), Error);
    EXPECT_THROW(Alphabet({"a", "b"}, {{"c", "C"}}, {}, {}), Error);
    EXPECT_THROW(Alphabet({"a", "b"}, {}, {{"x", "c"}}, {}), Error);
    EXPECT_THROW(Alphabet({"a", "b"}, {}, {}, {"s"}), Error);
    EXPECT_THROW(Alphabet({"a", "a"}, {}, {}, {}), Error);
}

TEST(Alphabet, SerializeRoundTrip) {
    const auto& a = test_support::hebrew().alphabet();
    EXPECT_EQ(Alphabet::parse(a.serialize()), a);
}
