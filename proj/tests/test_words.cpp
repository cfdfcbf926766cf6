#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmes/words.hpp"

#include <random>

using namespace cmes;

namespace {

LinComb lc(const Word& w, long c = 1) { return LinComb(w, Rational(c)); }

// every xy word over a bounded alphabet, lengths 1..len
std::vector<Word> all_xy_words(int len) {
    std::vector<Word> out;
    for (int L = 1; L <= len; ++L)
        for (int mask = 0; mask < (1 << L); ++mask) {
            std::string s;
            for (int i = 0; i < L; ++i) s += (mask >> i) & 1 ? 'y' : 'x';
            out.push_back(Word::xy(s));
        }
    return out;
}

}  // namespace

TEST_CASE("word parsing and printing") {
    CHECK(parse_word("z3 z2", Alphabet::z) == Word::z({3, 2}));
    CHECK(parse_word("z3_1 z2_0", Alphabet::zbi) == Word::zbi(BiIndex({3, 2}, {1, 0})));
    CHECK(parse_word("xxy", Alphabet::xy) == Word::xy("xxy"));
    CHECK(parse_word("1", Alphabet::z).empty());
    CHECK(Word::z({3, 2}).str() == "z3 z2");
    CHECK(Word::zbi(BiIndex({3}, {1})).str() == "z3_1");
    CHECK(Word::xy("xxy").str() == "xxy");
    CHECK_THROWS_AS(parse_word("z2_1", Alphabet::z), std::invalid_argument);
}

TEST_CASE("quasi-shuffle unit law and frozen examples") {
    Word one(Alphabet::z);
    Word w = Word::z({3, 2});
    CHECK(quasi_shuffle(one, w, Diamond::stuffle_z) == lc(w));
    CHECK(quasi_shuffle(w, one, Diamond::stuffle_z) == lc(w));

    // z1 * z1 = 2 z1z1 + z2
    LinComb expect = lc(Word::z({1, 1}), 2) + lc(Word::z({2}));
    CHECK(quasi_shuffle(Word::z({1}), Word::z({1}), Diamond::stuffle_z) == expect);

    // z2 * z3 = z2z3 + z3z2 + z5
    expect = lc(Word::z({2, 3})) + lc(Word::z({3, 2})) + lc(Word::z({5}));
    CHECK(quasi_shuffle(Word::z({2}), Word::z({3}), Diamond::stuffle_z) == expect);
}

TEST_CASE("hat diamond: z1_0 * z1_0 = 2 z1_0 z1_0 + z2_0 - z1_0") {
    Word u = Word::zbi(BiIndex({1}, {0}));
    LinComb expect = lc(Word::zbi(BiIndex({1, 1}, {0, 0})), 2) +
                     lc(Word::zbi(BiIndex({2}, {0}))) + lc(Word::zbi(BiIndex({1}, {0})), -1);
    CHECK(quasi_shuffle(u, u, Diamond::hat_zbi) == expect);
}

TEST_CASE("shuffle frozen examples") {
    // y sh y = 2 yy; x sh y = xy + yx
    CHECK(shuffle(Word::xy("y"), Word::xy("y")) == lc(Word::xy("yy"), 2));
    CHECK(shuffle(Word::xy("x"), Word::xy("y")) == lc(Word::xy("xy")) + lc(Word::xy("yx")));
    // xy sh xy = 2 xyxy + 4 xxyy
    LinComb expect = lc(Word::xy("xyxy"), 2) + lc(Word::xy("xxyy"), 4);
    CHECK(shuffle(Word::xy("xy"), Word::xy("xy")) == expect);
}

TEST_CASE("deconcatenation coproduct") {
    auto parts = deconcat_coproduct(Word(Alphabet::z));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first.empty());
    CHECK(parts[0].second.empty());

    Word w = Word::z({3, 2});
    parts = deconcat_coproduct(w);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == std::pair(Word(Alphabet::z), w));
    CHECK(parts[1] == std::pair(Word::z({3}), Word::z({2})));
    CHECK(parts[2] == std::pair(w, Word(Alphabet::z)));
}

TEST_CASE("antipode sum vanishes") {
    CHECK_THROWS_AS(antipode_sum(Word(Alphabet::z)), std::invalid_argument);
    CHECK(antipode_sum(Word::z({4})).is_zero());
    CHECK(antipode_sum(Word::z({1, 2})).is_zero());
    CHECK(antipode_sum(Word::xy("xyx")).is_zero());
    // every word of length <= 5 over small letter pools, each alphabet
    for (const Word& w : all_z_words(5, 5)) CHECK(antipode_sum(w).is_zero());
    for (const Word& w : all_zbi_words(4, 4)) CHECK(antipode_sum(w).is_zero());
    for (const Word& w : all_xy_words(5)) CHECK(antipode_sum(w).is_zero());
}

TEST_CASE("z <-> xy identification") {
    CHECK(z_to_xy(Word::z({3})) == Word::xy("xxy"));
    CHECK(z_to_xy(Word::z({2, 1})) == Word::xy("xyy"));
    CHECK(xy_to_z(Word::xy("yxy")) == Word::z({1, 2}));
    CHECK(xy_to_z(z_to_xy(Word::z({4, 1, 2}))) == Word::z({4, 1, 2}));
    CHECK_THROWS_AS(xy_to_z(Word::xy("yx")), std::invalid_argument);

    // shuffles of words ending in y stay in the image of the z-embedding
    for (const Word& u : all_z_words(4, 3))
        for (const Word& v : all_z_words(3, 2)) {
            LinComb sh = shuffle(z_to_xy(u), z_to_xy(v));
            for (const auto& [w, c] : sh.terms()) {
                REQUIRE(!w.empty());
                CHECK(w.letters().back().k == 1);  // ends in y
            }
        }
}

TEST_CASE("quasi-shuffle is commutative and associative (sampled)") {
    std::mt19937 rng(2024);
    auto zwords = all_z_words(4, 3);
    auto biwords = all_zbi_words(4, 2);
    std::uniform_int_distribution<size_t> zi(0, zwords.size() - 1), bi(0, biwords.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
        Word a = zwords[zi(rng)], b = zwords[zi(rng)], c = zwords[zi(rng)];
        if (a.weight() + b.weight() + c.weight() > 6) continue;
        for (Diamond d : {Diamond::stuffle_z, Diamond::zero_z}) {
            CHECK(quasi_shuffle(a, b, d) == quasi_shuffle(b, a, d));
            CHECK(quasi_shuffle(quasi_shuffle(a, b, d), lc(c), d) ==
                  quasi_shuffle(lc(a), quasi_shuffle(b, c, d), d));
        }
    }
    for (int trial = 0; trial < 20; ++trial) {
        Word a = biwords[bi(rng)], b = biwords[bi(rng)], c = biwords[bi(rng)];
        if (a.weight() + b.weight() + c.weight() > 6) continue;
        for (Diamond d : {Diamond::stuffle_zbi, Diamond::hat_zbi, Diamond::zero_zbi}) {
            CHECK(quasi_shuffle(a, b, d) == quasi_shuffle(b, a, d));
            CHECK(quasi_shuffle(quasi_shuffle(a, b, d), lc(c), d) ==
                  quasi_shuffle(lc(a), quasi_shuffle(b, c, d), d));
        }
    }
}

TEST_CASE("deconcatenation is compatible with the quasi-shuffle product") {
    // Delta(u * v) = Delta(u) * Delta(v), computed in the tensor square
    using Tensor = std::map<std::pair<Word, Word>, Rational>;
    auto add_tensor = [](Tensor& t, const Word& a, const Word& b, const Rational& c) {
        auto key = std::pair(a, b);
        auto [it, inserted] = t.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    };
    auto delta_of = [&](const LinComb& x) {
        Tensor t;
        for (const auto& [w, c] : x.terms())
            for (const auto& [a, b] : deconcat_coproduct(w)) add_tensor(t, a, b, c);
        return t;
    };
    auto words = all_z_words(4, 2);
    for (const Word& u : words)
        for (const Word& v : words) {
            if (u.weight() + v.weight() > 5) continue;
            Tensor lhs = delta_of(quasi_shuffle(u, v, Diamond::stuffle_z));
            Tensor rhs;
            for (const auto& [u1, u2] : deconcat_coproduct(u))
                for (const auto& [v1, v2] : deconcat_coproduct(v)) {
                    LinComb left = quasi_shuffle(u1, v1, Diamond::stuffle_z);
                    LinComb right = quasi_shuffle(u2, v2, Diamond::stuffle_z);
                    for (const auto& [a, ca] : left.terms())
                        for (const auto& [b, cb] : right.terms()) add_tensor(rhs, a, b, ca * cb);
                }
            CHECK(lhs == rhs);
        }
}
