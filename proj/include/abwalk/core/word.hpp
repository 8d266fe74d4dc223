#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "abwalk/core/rng.hpp"

namespace abwalk {

/// Finite word over the alphabet {1, ..., l}.
///
/// Symbols are bit-packed with bit_width(l - 1) bits each and never straddle
/// a 64-bit block. A one-letter alphabet stores nothing.
class Word {
public:
    using Symbol = std::uint32_t;

    class const_iterator {
    public:
        using iterator_category = std::random_access_iterator_tag;
        using value_type = Symbol;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = Symbol;

        const_iterator() = default;
        const_iterator(const Word* word, std::size_t index) : word_(word), index_(index) {}

        Symbol operator*() const { return (*word_)[index_]; }
        Symbol operator[](difference_type n) const { return (*word_)[index_ + n]; }
        const_iterator& operator++() { ++index_; return *this; }
        const_iterator operator++(int) { auto tmp = *this; ++index_; return tmp; }
        const_iterator& operator--() { --index_; return *this; }
        const_iterator operator--(int) { auto tmp = *this; --index_; return tmp; }
        const_iterator& operator+=(difference_type n) { index_ += n; return *this; }
        const_iterator& operator-=(difference_type n) { index_ -= n; return *this; }
        friend const_iterator operator+(const_iterator it, difference_type n) { return it += n; }
        friend const_iterator operator+(difference_type n, const_iterator it) { return it += n; }
        friend const_iterator operator-(const_iterator it, difference_type n) { return it -= n; }
        friend difference_type operator-(const const_iterator& a, const const_iterator& b) {
            return static_cast<difference_type>(a.index_) - static_cast<difference_type>(b.index_);
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.index_ == b.index_; }
        friend auto operator<=>(const const_iterator& a, const const_iterator& b) { return a.index_ <=> b.index_; }

    private:
        const Word* word_ = nullptr;
        std::size_t index_ = 0;
    };

    /// Throws invalid_alphabet when alphabet == 0 or exceeds kMaxAlphabet.
    explicit Word(std::size_t alphabet);
    Word(std::size_t alphabet, const std::vector<Symbol>& symbols);

    static constexpr std::size_t kMaxAlphabet = 1u << 16;

    /// Digit string "1212..." for alphabets of at most nine letters.
    static Word parse(std::string_view digits, std::size_t alphabet);
    std::string to_string() const;

    std::size_t alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    unsigned bits_per_symbol() const noexcept { return bits_; }

    Symbol operator[](std::size_t i) const noexcept {
        if (bits_ == 0) return 1;
        const std::size_t block = i / per_block_;
        const unsigned shift = static_cast<unsigned>((i % per_block_) * bits_);
        return static_cast<Symbol>((blocks_[block] >> shift) & mask_) + 1;
    }
    Symbol at(std::size_t i) const;

    void push_back(Symbol symbol);
    void append(const Word& other);
    void reserve(std::size_t n);

    /// First n symbols (x|_n).
    Word prefix(std::size_t n) const;
    Word concat(const Word& other) const;
    std::vector<Symbol> symbols() const;

    const_iterator begin() const { return {this, 0}; }
    const_iterator end() const { return {this, size_}; }

    friend bool operator==(const Word& a, const Word& b);

private:
    std::size_t alphabet_;
    unsigned bits_;
    std::size_t per_block_;
    std::uint64_t mask_;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> blocks_;
};

/// Streaming i.i.d. uniform symbols; sample_word(seed, n, l) is its first n draws.
///
/// Power-of-two alphabets consume log2(l) bits of each 64-bit output, low bits
/// first; other alphabets take one bounded draw per symbol.
class WordSampler {
public:
    WordSampler(std::uint64_t seed, std::size_t alphabet);

    Word::Symbol next();

private:
    Xoshiro256ss rng_;
    std::size_t alphabet_;
    unsigned bits_;
    std::uint64_t buffer_ = 0;
    unsigned available_ = 0;
};

Word sample_word(std::uint64_t seed, std::size_t length, std::size_t alphabet);

/// 0 for equal words, 1 when the first symbols differ, otherwise 2^-k with k
/// the common-prefix length. Finite words are compared over their common
/// length; a proper prefix of the other word sits at distance 2^-|shorter|.
/// An empty word against a nonempty one shares no first symbol: distance 1.
double metric_distance(const Word& x, const Word& y);

}  // namespace abwalk
