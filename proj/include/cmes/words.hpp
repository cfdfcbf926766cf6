#pragma once

// Word algebras over the three alphabets in play:
//   z  : {z_k | k >= 1}
//   zbi: {z^k_d | k >= 1, d >= 0}
//   xy : {x, y}
// with the generic quasi-shuffle product for a commutative diamond product
// on letters, the deconcatenation coproduct, the shuffle antipode identity,
// and the identification z_k = x^{k-1} y.

#include "cmes/rational.hpp"
#include "cmes/truncation.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cmes {

enum class Alphabet { z, zbi, xy };

// For alphabet xy, k is 0 for x and 1 for y (d unused).
struct Letter {
    int k = 1;
    int d = 0;

    bool operator==(const Letter&) const = default;
    bool operator<(const Letter& o) const { return std::pair(k, d) < std::pair(o.k, o.d); }
};

class Word {
public:
    Word(Alphabet a, std::vector<Letter> ls = {});

    static Word z(std::vector<int> ks);
    static Word zbi(const BiIndex& idx);
    static Word xy(const std::string& s);  // e.g. "xxy"

    Alphabet alphabet() const { return alph_; }
    const std::vector<Letter>& letters() const { return ls_; }
    bool empty() const { return ls_.empty(); }
    int length() const { return static_cast<int>(ls_.size()); }
    int weight() const;  // z: sum k; zbi: sum k + sum d; xy: length
    int depth() const;   // letter count (z/zbi); for xy: number of y's

    BiIndex bi_index() const;            // zbi (or z) word -> BiIndex
    std::vector<int> z_index() const;    // z word -> (k_1..k_r)

    Word concat(const Word& o) const;
    Word prepend(const Letter& l) const;
    Word subword(int from, int to) const;  // letters [from, to)

    std::string str() const;  // "z3 z2", "z3_1 z2_0", "xxy"; empty word: "1"

    bool operator==(const Word&) const = default;
    bool operator<(const Word& o) const;

private:
    Alphabet alph_;
    std::vector<Letter> ls_;
};

// Finite rational combination of words over one alphabet; no zero terms kept.
class LinComb {
public:
    LinComb() = default;
    explicit LinComb(const Word& w, const Rational& c = Rational(1)) { add(w, c); }

    const std::map<Word, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(const Word& w, const Rational& c);
    LinComb& operator+=(const LinComb& o);
    LinComb& operator-=(const LinComb& o);
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    LinComb scale(const Rational& c) const;

    bool operator==(const LinComb&) const = default;

private:
    std::map<Word, Rational> t_;
};

// The named diamond products. zero_* make the quasi-shuffle a plain shuffle.
enum class Diamond {
    zero_z,
    zero_zbi,
    zero_xy,
    stuffle_z,    // z_i <> z_j = z_{i+j}
    stuffle_zbi,  // z^k1_d1 <> z^k2_d2 = z^{k1+k2}_{d1+d2}
    hat_zbi,      // the corrected product making the partition series a homomorphism
};

Alphabet diamond_alphabet(Diamond d);
const char* diamond_name(Diamond d);

// diamond product of two letters as a combination of single-letter words
LinComb diamond_of(Diamond d, const Letter& a, const Letter& b);

// a w * b v = a (w * b v) + b (a w * v) + (a<>b)(w * v); memoized.
LinComb quasi_shuffle(const Word& u, const Word& v, Diamond d);
LinComb quasi_shuffle(const LinComb& u, const LinComb& v, Diamond d);

// quasi-shuffle with the zero diamond of the words' alphabet
LinComb shuffle(const Word& u, const Word& v);
LinComb shuffle(const LinComb& u, const LinComb& v);

// all r+1 splittings u (x) v with uv = w, in order
std::vector<std::pair<Word, Word>> deconcat_coproduct(const Word& w);

// sum_{i=0}^{r} (-1)^i (a_i...a_1) sh (a_{i+1}...a_r); identically zero
LinComb antipode_sum(const Word& w);

// z_k = x^{k-1} y
Word z_to_xy(const Word& w);
Word xy_to_z(const Word& w);  // requires w empty or ending in y
LinComb map_words(const LinComb& c, const std::function<Word(const Word&)>& f);

// text syntax used by the CLI and tests
Word parse_word(const std::string& text, Alphabet a);

// enumeration helpers (ascending weight, then lex)
std::vector<Word> all_z_words(int max_weight, int max_depth);
std::vector<Word> all_zbi_words(int max_weight, int max_depth);

}  // namespace cmes
