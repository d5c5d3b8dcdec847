#include "hsa/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace hsa {

namespace {

void check_letter(Letter a) {
    if (a < 1 || a > kMaxLetter) throw std::invalid_argument("letter out of range: " + std::to_string(a));
}

}  // namespace

Word::Word(std::initializer_list<Letter> ls) {
    ls_.reserve(ls.size());
    for (Letter a : ls) {
        check_letter(a);
        ls_.push_back(static_cast<unsigned char>(a));
    }
}

Word Word::single(Letter a) {
    check_letter(a);
    Word w;
    w.ls_.push_back(static_cast<unsigned char>(a));
    return w;
}

Word Word::prefix(std::size_t n) const {
    Word w;
    w.ls_ = ls_.substr(0, n);
    return w;
}

Word Word::suffix(std::size_t i) const {
    Word w;
    w.ls_ = ls_.substr(std::min(i, ls_.size()));
    return w;
}

Word Word::concat(const Word& v) const {
    Word w;
    w.ls_ = ls_ + v.ls_;
    return w;
}

Word Word::prepend(Letter a) const {
    check_letter(a);
    Word w;
    w.ls_.reserve(ls_.size() + 1);
    w.ls_.push_back(static_cast<unsigned char>(a));
    w.ls_ += ls_;
    return w;
}

Word Word::append(Letter a) const {
    check_letter(a);
    Word w;
    w.ls_ = ls_;
    w.ls_.push_back(static_cast<unsigned char>(a));
    return w;
}

Letter Word::max_letter() const {
    Letter m = 0;
    for (unsigned char a : ls_) m = std::max<Letter>(m, a);
    return m;
}

std::size_t Word::hash() const {
    // FNV-1a over the letter bytes
    std::size_t h = 14695981039346656037ull;
    for (unsigned char a : ls_) {
        h ^= a;
        h *= 1099511628211ull;
    }
    return h;
}

std::string Word::str() const {
    if (ls_.empty()) return "e";
    if (max_letter() <= 9) {
        std::string s;
        s.reserve(ls_.size());
        for (unsigned char a : ls_) s.push_back(static_cast<char>('0' + a));
        return s;
    }
    std::string s;
    for (std::size_t i = 0; i < ls_.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(static_cast<unsigned>(ls_[i]));
    }
    return s;
}

Word Word::parse(const std::string& text) {
    Word w;
    if (text.empty() || text == "e") return w;
    if (text.find(',') == std::string::npos) {
        for (char ch : text) {
            if (ch < '1' || ch > '9') throw std::invalid_argument("bad word: " + text);
            w.ls_.push_back(static_cast<unsigned char>(ch - '0'));
        }
        return w;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string tok = text.substr(pos, next - pos);
        if (tok.empty()) throw std::invalid_argument("bad word: " + text);
        const unsigned long a = std::stoul(tok);
        check_letter(static_cast<Letter>(a));
        w.ls_.push_back(static_cast<unsigned char>(a));
        pos = next + 1;
    }
    return w;
}

Word concat(const Word& u, const Word& v) { return u.concat(v); }

bool word_canonical_less(const Word& u, const Word& v) {
    if (u.length() != v.length()) return u.length() < v.length();
    return u < v;
}

std::vector<Word> all_words(unsigned d, std::size_t n) {
    std::vector<Word> out;
    if (d < 1) return out;
    Word w;
    struct Rec {
        unsigned d;
        std::size_t n;
        std::vector<Word>* out;
        void go(Word& cur) {
            if (cur.length() == n) {
                out->push_back(cur);
                return;
            }
            for (Letter a = 1; a <= d; ++a) {
                Word next = cur.append(a);
                go(next);
            }
        }
    } rec{d, n, &out};
    rec.go(w);
    return out;
}

}  // namespace hsa
