#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hsa {

// 1-based letter index; 0 is never a letter.
using Letter = unsigned;

constexpr Letter kMaxLetter = 255;

// A word over the alphabet {1..d}. Letters are stored in a byte string so
// that short words (the desk-scale norm) live inline.
class Word {
public:
    Word() = default;
    explicit Word(std::initializer_list<Letter> ls);
    static Word single(Letter a);

    std::size_t length() const { return ls_.size(); }
    bool empty() const { return ls_.empty(); }
    Letter at(std::size_t i) const { return ls_[i]; }
    Letter front() const { return ls_.front(); }
    Letter back() const { return ls_.back(); }

    Word prefix(std::size_t n) const;  // first n letters
    Word suffix(std::size_t i) const;  // letters from position i on
    Word concat(const Word& v) const;
    Word prepend(Letter a) const;
    Word append(Letter a) const;

    Letter max_letter() const;  // 0 for the empty word

    bool operator==(const Word& o) const = default;
    auto operator<=>(const Word& o) const = default;  // plain lexicographic

    std::size_t hash() const;

    // "12321" for single-digit alphabets, "1,12,3" otherwise, "e" when empty
    std::string str() const;
    static Word parse(const std::string& text);

private:
    std::basic_string<unsigned char> ls_;
};

Word concat(const Word& u, const Word& v);

// canonical term order: by length, then lexicographically
bool word_canonical_less(const Word& u, const Word& v);

struct WordCanonicalLess {
    bool operator()(const Word& u, const Word& v) const { return word_canonical_less(u, v); }
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return w.hash(); }
};

// all d^n words of length n over {1..d}, in lexicographic order
std::vector<Word> all_words(unsigned d, std::size_t n);

}  // namespace hsa
