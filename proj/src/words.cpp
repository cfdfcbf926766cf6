#include "cmes/words.hpp"

#include "cmes/bernoulli.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace cmes {

Word::Word(Alphabet a, std::vector<Letter> ls) : alph_(a), ls_(std::move(ls)) {
    for (const auto& l : ls_) {
        switch (alph_) {
            case Alphabet::z:
                if (l.k < 1 || l.d != 0) throw std::invalid_argument("Word: bad z letter");
                break;
            case Alphabet::zbi:
                if (l.k < 1 || l.d < 0) throw std::invalid_argument("Word: bad zbi letter");
                break;
            case Alphabet::xy:
                if ((l.k != 0 && l.k != 1) || l.d != 0)
                    throw std::invalid_argument("Word: bad xy letter");
                break;
        }
    }
}

Word Word::z(std::vector<int> ks) {
    std::vector<Letter> ls;
    ls.reserve(ks.size());
    for (int k : ks) ls.push_back({k, 0});
    return Word(Alphabet::z, std::move(ls));
}

Word Word::zbi(const BiIndex& idx) {
    std::vector<Letter> ls;
    ls.reserve(idx.k.size());
    for (size_t i = 0; i < idx.k.size(); ++i) ls.push_back({idx.k[i], idx.d[i]});
    return Word(Alphabet::zbi, std::move(ls));
}

Word Word::xy(const std::string& s) {
    std::vector<Letter> ls;
    ls.reserve(s.size());
    for (char c : s) {
        if (c == 'x')
            ls.push_back({0, 0});
        else if (c == 'y')
            ls.push_back({1, 0});
        else
            throw std::invalid_argument("Word: bad xy symbol");
    }
    return Word(Alphabet::xy, std::move(ls));
}

int Word::weight() const {
    int w = 0;
    for (const auto& l : ls_) {
        switch (alph_) {
            case Alphabet::z: w += l.k; break;
            case Alphabet::zbi: w += l.k + l.d; break;
            case Alphabet::xy: w += 1; break;
        }
    }
    return w;
}

int Word::depth() const {
    if (alph_ != Alphabet::xy) return length();
    int r = 0;
    for (const auto& l : ls_) r += l.k;  // y letters
    return r;
}

BiIndex Word::bi_index() const {
    if (alph_ == Alphabet::xy) throw std::invalid_argument("bi_index: xy word");
    std::vector<int> ks, ds;
    for (const auto& l : ls_) {
        ks.push_back(l.k);
        ds.push_back(l.d);
    }
    return BiIndex(std::move(ks), std::move(ds));
}

std::vector<int> Word::z_index() const {
    if (alph_ != Alphabet::z) throw std::invalid_argument("z_index: not a z word");
    std::vector<int> ks;
    for (const auto& l : ls_) ks.push_back(l.k);
    return ks;
}

Word Word::concat(const Word& o) const {
    if (o.alph_ != alph_) throw std::invalid_argument("concat: alphabet mismatch");
    std::vector<Letter> ls = ls_;
    ls.insert(ls.end(), o.ls_.begin(), o.ls_.end());
    return Word(alph_, std::move(ls));
}

Word Word::prepend(const Letter& l) const {
    std::vector<Letter> ls;
    ls.reserve(ls_.size() + 1);
    ls.push_back(l);
    ls.insert(ls.end(), ls_.begin(), ls_.end());
    return Word(alph_, std::move(ls));
}

Word Word::subword(int from, int to) const {
    return Word(alph_, std::vector<Letter>(ls_.begin() + from, ls_.begin() + to));
}

std::string Word::str() const {
    if (ls_.empty()) return "1";
    std::ostringstream os;
    if (alph_ == Alphabet::xy) {
        for (const auto& l : ls_) os << (l.k == 0 ? 'x' : 'y');
        return os.str();
    }
    for (size_t i = 0; i < ls_.size(); ++i) {
        if (i) os << ' ';
        os << 'z' << ls_[i].k;
        if (alph_ == Alphabet::zbi) os << '_' << ls_[i].d;
    }
    return os.str();
}

bool Word::operator<(const Word& o) const {
    return std::tuple(alph_, ls_.size(), ls_) < std::tuple(o.alph_, o.ls_.size(), o.ls_);
}

void LinComb::add(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

LinComb& LinComb::operator+=(const LinComb& o) {
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
    for (const auto& [w, c] : o.t_) add(w, -c);
    return *this;
}

LinComb LinComb::scale(const Rational& c) const {
    LinComb r;
    if (c.is_zero()) return r;
    for (const auto& [w, v] : t_) r.t_.emplace(w, v * c);
    return r;
}

Alphabet diamond_alphabet(Diamond d) {
    switch (d) {
        case Diamond::zero_z:
        case Diamond::stuffle_z: return Alphabet::z;
        case Diamond::zero_zbi:
        case Diamond::stuffle_zbi:
        case Diamond::hat_zbi: return Alphabet::zbi;
        case Diamond::zero_xy: return Alphabet::xy;
    }
    throw std::logic_error("diamond_alphabet");
}

const char* diamond_name(Diamond d) {
    switch (d) {
        case Diamond::zero_z: return "zero(z)";
        case Diamond::zero_zbi: return "zero(zbi)";
        case Diamond::zero_xy: return "zero(xy)";
        case Diamond::stuffle_z: return "stuffle(z)";
        case Diamond::stuffle_zbi: return "stuffle(zbi)";
        case Diamond::hat_zbi: return "hat(zbi)";
    }
    throw std::logic_error("diamond_name");
}

namespace {

// lambda^{k1,k2}_j, the depth-one correction coefficients of the hat product,
// computed from Bernoulli numbers and binomials on demand.
Rational hat_lambda(int k1, int k2, int j) {
    int n = k1 + k2 - j;
    Rational sign1 = Rational(k1 % 2 == 0 ? 1 : -1);
    Rational sign2 = Rational(k2 % 2 == 0 ? 1 : -1);
    Rational inner = sign1 * binomial(k1 + k2 - 1 - j, k2 - j) +
                     sign2 * binomial(k1 + k2 - 1 - j, k1 - j);
    return -(inner * bernoulli(n) * inv_factorial(n));
}

}  // namespace

LinComb diamond_of(Diamond d, const Letter& a, const Letter& b) {
    Alphabet alph = diamond_alphabet(d);
    LinComb r;
    switch (d) {
        case Diamond::zero_z:
        case Diamond::zero_zbi:
        case Diamond::zero_xy:
            return r;
        case Diamond::stuffle_z:
            r.add(Word(alph, {{a.k + b.k, 0}}), Rational(1));
            return r;
        case Diamond::stuffle_zbi:
            r.add(Word(alph, {{a.k + b.k, a.d + b.d}}), Rational(1));
            return r;
        case Diamond::hat_zbi: {
            r.add(Word(alph, {{a.k + b.k, a.d + b.d}}), Rational(1));
            for (int j = 1; j <= a.k + b.k - 1; ++j)
                r.add(Word(alph, {{j, a.d + b.d}}), hat_lambda(a.k, b.k, j));
            return r;
        }
    }
    throw std::logic_error("diamond_of");
}

namespace {
std::mutex memo_mutex;
std::map<std::tuple<Diamond, Word, Word>, LinComb> qsh_memo;
}  // namespace

LinComb quasi_shuffle(const Word& u, const Word& v, Diamond d) {
    Alphabet alph = diamond_alphabet(d);
    if (u.alphabet() != alph || v.alphabet() != alph)
        throw std::invalid_argument("quasi_shuffle: alphabet mismatch");
    if (u.empty()) return LinComb(v);
    if (v.empty()) return LinComb(u);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = qsh_memo.find({d, u, v});
        if (it != qsh_memo.end()) return it->second;
    }
    Letter a = u.letters().front();
    Letter b = v.letters().front();
    Word uw = u.subword(1, u.length());
    Word vw = v.subword(1, v.length());
    LinComb r;
    LinComb left = quasi_shuffle(uw, v, d);
    for (const auto& [w, c] : left.terms()) r.add(w.prepend(a), c);
    LinComb right = quasi_shuffle(u, vw, d);
    for (const auto& [w, c] : right.terms()) r.add(w.prepend(b), c);
    LinComb tail = quasi_shuffle(uw, vw, d);
    LinComb dia = diamond_of(d, a, b);
    for (const auto& [ab, cab] : dia.terms())
        for (const auto& [w, c] : tail.terms()) r.add(w.prepend(ab.letters()[0]), cab * c);
    std::lock_guard<std::mutex> lock(memo_mutex);
    qsh_memo.emplace(std::tuple(d, u, v), r);
    return r;
}

LinComb quasi_shuffle(const LinComb& u, const LinComb& v, Diamond d) {
    LinComb r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms())
            r += quasi_shuffle(wu, wv, d).scale(cu * cv);
    return r;
}

namespace {
Diamond zero_diamond_for(Alphabet a) {
    switch (a) {
        case Alphabet::z: return Diamond::zero_z;
        case Alphabet::zbi: return Diamond::zero_zbi;
        case Alphabet::xy: return Diamond::zero_xy;
    }
    throw std::logic_error("zero_diamond_for");
}
}  // namespace

LinComb shuffle(const Word& u, const Word& v) {
    if (u.alphabet() != v.alphabet())
        throw std::invalid_argument("shuffle: alphabet mismatch");
    return quasi_shuffle(u, v, zero_diamond_for(u.alphabet()));
}

LinComb shuffle(const LinComb& u, const LinComb& v) {
    LinComb r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms())
            r += shuffle(wu, wv).scale(cu * cv);
    return r;
}

std::vector<std::pair<Word, Word>> deconcat_coproduct(const Word& w) {
    std::vector<std::pair<Word, Word>> r;
    for (int i = 0; i <= w.length(); ++i)
        r.emplace_back(w.subword(0, i), w.subword(i, w.length()));
    return r;
}

LinComb antipode_sum(const Word& w) {
    if (w.empty())
        throw std::invalid_argument("antipode_sum: empty word");
    int r = w.length();
    LinComb acc;
    for (int i = 0; i <= r; ++i) {
        std::vector<Letter> rev(w.letters().begin(), w.letters().begin() + i);
        std::reverse(rev.begin(), rev.end());
        Word left(w.alphabet(), std::move(rev));
        Word right = w.subword(i, r);
        acc += shuffle(left, right).scale(Rational(i % 2 == 0 ? 1 : -1));
    }
    return acc;
}

Word z_to_xy(const Word& w) {
    if (w.alphabet() != Alphabet::z)
        throw std::invalid_argument("z_to_xy: not a z word");
    std::vector<Letter> ls;
    for (const auto& l : w.letters()) {
        for (int i = 0; i < l.k - 1; ++i) ls.push_back({0, 0});
        ls.push_back({1, 0});
    }
    return Word(Alphabet::xy, std::move(ls));
}

Word xy_to_z(const Word& w) {
    if (w.alphabet() != Alphabet::xy)
        throw std::invalid_argument("xy_to_z: not an xy word");
    if (!w.empty() && w.letters().back().k != 1)
        throw std::invalid_argument("xy_to_z: word does not end in y");
    std::vector<int> ks;
    int run = 0;
    for (const auto& l : w.letters()) {
        if (l.k == 0) {
            ++run;
        } else {
            ks.push_back(run + 1);
            run = 0;
        }
    }
    return Word::z(std::move(ks));
}

LinComb map_words(const LinComb& c, const std::function<Word(const Word&)>& f) {
    LinComb r;
    for (const auto& [w, v] : c.terms()) r.add(f(w), v);
    return r;
}

Word parse_word(const std::string& text, Alphabet a) {
    if (text == "1") return Word(a);
    if (a == Alphabet::xy) return Word::xy(text);
    std::istringstream is(text);
    std::vector<Letter> ls;
    std::string tok;
    while (is >> tok) {
        if (tok.empty() || tok[0] != 'z')
            throw std::invalid_argument("parse_word: expected z-letter, got '" + tok + "'");
        size_t us = tok.find('_');
        int k, d = 0;
        try {
            k = std::stoi(tok.substr(1, us == std::string::npos ? std::string::npos : us - 1));
            if (us != std::string::npos) d = std::stoi(tok.substr(us + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_word: bad letter '" + tok + "'");
        }
        if (us != std::string::npos && a == Alphabet::z)
            throw std::invalid_argument("parse_word: bi-letter in z word");
        ls.push_back({k, d});
    }
    return Word(a, std::move(ls));
}

namespace {
void compositions(int weight, int depth, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (depth == 0) {
        if (weight == 0) out.push_back(cur);
        return;
    }
    for (int k = 1; k + (depth - 1) <= weight; ++k) {
        cur.push_back(k);
        compositions(weight - k, depth - 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Word> all_z_words(int max_weight, int max_depth) {
    std::vector<Word> r;
    for (int w = 1; w <= max_weight; ++w)
        for (int depth = 1; depth <= std::min(w, max_depth); ++depth) {
            std::vector<std::vector<int>> comps;
            std::vector<int> cur;
            compositions(w, depth, cur, comps);
            for (auto& c : comps) r.push_back(Word::z(c));
        }
    return r;
}

std::vector<Word> all_zbi_words(int max_weight, int max_depth) {
    std::vector<Word> r;
    for (int w = 1; w <= max_weight; ++w)
        for (int depth = 1; depth <= std::min(w, max_depth); ++depth) {
            // split weight into k-part (>= depth) and d-part
            std::vector<std::vector<int>> kcomps, dcomps;
            std::vector<int> cur;
            for (int kw = depth; kw <= w; ++kw) {
                kcomps.clear();
                compositions(kw, depth, cur, kcomps);
                // d-part: weak composition of w - kw into depth parts
                dcomps.clear();
                compositions(w - kw + depth, depth, cur, dcomps);  // shift by 1 per slot
                for (const auto& ks : kcomps)
                    for (auto ds : dcomps) {
                        for (int& x : ds) x -= 1;
                        r.push_back(Word::zbi(BiIndex(ks, ds)));
                    }
            }
        }
    return r;
}

}  // namespace cmes
