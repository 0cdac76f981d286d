#include "gfcodes/bitword.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace gfcodes;

namespace {

Word W(const char* text) { return word_from_string(text); }

Word random_word(std::mt19937_64& rng, int n) {
    return Word::from_bits(n, rng() & low_mask(n));
}

}  // namespace

TEST(Word, ParsesWithLeftmostCharacterAsBitZero) {
    const Word w = W("010");
    EXPECT_EQ(w.length(), 3);
    EXPECT_EQ(w.bit(0), 0);
    EXPECT_EQ(w.bit(1), 1);
    EXPECT_EQ(w.bit(2), 0);
    EXPECT_EQ(w.bits(), 0b010u);

    EXPECT_EQ(W("1000").bits(), 1u);
    EXPECT_EQ(W("0000000"), Word::zeros(7));
    EXPECT_EQ(W("1111000").to_string(), "1111000");
}

TEST(Word, RoundTripsEveryShortString) {
    for (int n = 1; n <= 10; ++n) {
        for (const auto& s : oracle::all_strings(n)) EXPECT_EQ(W(s.c_str()).to_string(), s);
    }
    const std::string longest(63, '1');
    EXPECT_EQ(word_from_string(longest).to_string(), longest);
}

TEST(Word, ParseErrorsNameTheOffendingIndex) {
    EXPECT_THROW(word_from_string(""), ParseError);
    EXPECT_THROW(word_from_string(std::string(64, '0')), ParseError);
    try {
        word_from_string("01x1");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2u);
    }
}

TEST(Word, FromBitsRejectsStrayBits) {
    EXPECT_THROW(Word::from_bits(3, 0b1000), DimensionError);
    EXPECT_THROW(Word::from_bits(0, 0), RangeError);
    EXPECT_THROW(Word::from_bits(64, 0), RangeError);
    EXPECT_EQ(Word::ones(63).bits(), low_mask(63));
}

TEST(Word, XorAdd) {
    EXPECT_EQ(xor_add(W("010"), W("101")), W("111"));
    EXPECT_EQ(xor_add(W("1111000"), W("0001000")), W("1110000"));
    const Word x = W("0110101");
    EXPECT_EQ(xor_add(x, x), Word::zeros(7));
    EXPECT_THROW(xor_add(W("01"), W("011")), DimensionError);
}

TEST(Word, HammingDistance) {
    EXPECT_EQ(hamming_distance(W("010"), W("101")), 3);
    EXPECT_EQ(hamming_distance(W("000"), W("011")), 2);
    EXPECT_EQ(hamming_distance(W("1100"), W("1100")), 0);
    EXPECT_THROW(hamming_distance(W("0"), W("00")), DimensionError);
}

TEST(Word, Parity) {
    EXPECT_EQ(parity(Word::zeros(9)), 0);
    EXPECT_EQ(parity(W("111")), 1);
    EXPECT_EQ(parity(W("1100001")), 1);
}

TEST(Word, Concat) {
    EXPECT_EQ(concat(concat(W("0"), W("1")), W("0")), W("010"));
    EXPECT_EQ(concat(concat(W("111"), W("1")), W("000")), W("1111000"));
    EXPECT_THROW(concat(Word::zeros(40), Word::zeros(24)), DimensionError);
    EXPECT_EQ(concat(Word::zeros(40), Word::ones(23)).to_string(),
              std::string(40, '0') + std::string(23, '1'));
}

TEST(Word, Complement) {
    EXPECT_EQ(complement(W("000")), W("111"));
    EXPECT_EQ(complement(W("010")), W("101"));
    const Word x = W("1101001");
    EXPECT_EQ(complement(complement(x)), x);
}

TEST(Word, ContainsSubstring) {
    EXPECT_TRUE(contains_substring(W("0110111"), W("11")));
    EXPECT_FALSE(contains_substring(W("010"), W("11")));
    EXPECT_FALSE(contains_substring(W("101"), W("1111")));
    EXPECT_TRUE(contains_substring(W("101"), W("101")));
}

TEST(Word, MaxRunOnes) {
    EXPECT_EQ(max_run_ones(W("0110111")), 3);
    EXPECT_EQ(max_run_ones(Word::zeros(12)), 0);
    EXPECT_EQ(max_run_ones(W("1111000")), 4);
    EXPECT_EQ(max_run_ones(Word::ones(63)), 63);
}

TEST(Word, EnumerateWords) {
    std::vector<std::string> one;
    for (const Word w : enumerate_words(1)) one.push_back(w.to_string());
    EXPECT_EQ(one, (std::vector<std::string>{"0", "1"}));

    auto three = enumerate_words(3);
    EXPECT_EQ(std::ranges::distance(three), 8);
    EXPECT_EQ((*three.begin()).to_string(), "000");

    std::set<std::uint64_t> seen;
    std::uint64_t previous = 0;
    bool ascending = true;
    for (const Word w : enumerate_words(10)) {
        if (!seen.empty() && w.bits() <= previous) ascending = false;
        previous = w.bits();
        seen.insert(w.bits());
    }
    EXPECT_EQ(seen.size(), 1024u);
    EXPECT_TRUE(ascending);

    EXPECT_THROW(enumerate_words(0), RangeError);
    EXPECT_THROW(enumerate_words(64), RangeError);
}

// Properties against the string oracle.

TEST(WordProperties, MaxRunMatchesCharacterScan) {
    for (int n = 1; n <= 12; ++n) {
        for (const Word w : enumerate_words(n)) {
            ASSERT_EQ(max_run_ones(w), oracle::max_run(w.to_string())) << w.to_string();
        }
    }
}

TEST(WordProperties, ContainsSubstringMatchesSlidingWindow) {
    for (int ns = 1; ns <= 10; ++ns) {
        for (int nf = 1; nf <= 4; ++nf) {
            for (const Word f : enumerate_words(nf)) {
                const std::string fs = f.to_string();
                for (const Word s : enumerate_words(ns)) {
                    ASSERT_EQ(contains_substring(s, f), oracle::contains(s.to_string(), fs))
                        << s.to_string() << " / " << fs;
                }
            }
        }
    }
}

TEST(WordProperties, RunCharacterizesOnesPattern) {
    for (const Word w : enumerate_words(10)) {
        for (int s = 1; s <= 10; ++s) {
            ASSERT_EQ(contains_substring(w, Word::ones(s)), max_run_ones(w) >= s);
        }
    }
}

TEST(WordProperties, MetricAndParityLaws) {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 63);
        const Word a = random_word(rng, n), b = random_word(rng, n), c = random_word(rng, n);
        ASSERT_EQ(hamming_distance(a, b), std::popcount(xor_add(a, b).bits()));
        ASSERT_EQ(hamming_distance(a, b), hamming_distance(b, a));
        ASSERT_LE(hamming_distance(a, c), hamming_distance(a, b) + hamming_distance(b, c));
        ASSERT_EQ(parity(xor_add(a, b)), (parity(a) + parity(b)) % 2);
        ASSERT_EQ(xor_add(complement(a), a), Word::ones(n));

        const int m = 1 + static_cast<int>(rng() % 20);
        const int k = 1 + static_cast<int>(rng() % 20);
        const Word x = random_word(rng, std::min(n, 20)), y = random_word(rng, m),
                   z = random_word(rng, k);
        ASSERT_EQ(concat(concat(x, y), z), concat(x, concat(y, z)));
        ASSERT_EQ(parity(concat(x, y)), (parity(x) + parity(y)) % 2);
        ASSERT_EQ(concat(x, y).to_string(), x.to_string() + y.to_string());
    }
}
