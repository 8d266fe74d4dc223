#include "abwalk/core/word.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "abwalk/core/error.hpp"

namespace abwalk {
namespace {

unsigned symbol_bits(std::size_t alphabet) {
    return alphabet <= 1 ? 0u : static_cast<unsigned>(std::bit_width(alphabet - 1));
}

}  // namespace

Word::Word(std::size_t alphabet) : alphabet_(alphabet) {
    require(alphabet >= 1 && alphabet <= kMaxAlphabet, Errc::invalid_alphabet,
            "alphabet size must be between 1 and 65536");
    bits_ = symbol_bits(alphabet);
    per_block_ = bits_ == 0 ? 0 : 64 / bits_;
    mask_ = bits_ == 0 ? 0 : (std::uint64_t{1} << bits_) - 1;
}

Word::Word(std::size_t alphabet, const std::vector<Symbol>& symbols) : Word(alphabet) {
    reserve(symbols.size());
    for (Symbol s : symbols) push_back(s);
}

Word Word::parse(std::string_view digits, std::size_t alphabet) {
    require(alphabet >= 1 && alphabet <= 9, Errc::invalid_alphabet,
            "digit-string words need an alphabet of 1..9 letters");
    Word word(alphabet);
    word.reserve(digits.size());
    for (char c : digits) {
        require(c >= '1' && c <= '9', Errc::invalid_word, std::string("bad symbol character '") + c + "'");
        word.push_back(static_cast<Symbol>(c - '0'));
    }
    return word;
}

std::string Word::to_string() const {
    require(alphabet_ <= 9, Errc::invalid_alphabet, "digit-string form needs an alphabet of at most 9 letters");
    std::string out;
    out.reserve(size_);
    for (Symbol s : *this) out.push_back(static_cast<char>('0' + s));
    return out;
}

Word::Symbol Word::at(std::size_t i) const {
    require(i < size_, Errc::range, "symbol index out of range");
    return (*this)[i];
}

void Word::push_back(Symbol symbol) {
    require(symbol >= 1 && symbol <= alphabet_, Errc::invalid_word,
            "symbol " + std::to_string(symbol) + " outside {1.." + std::to_string(alphabet_) + "}");
    if (bits_ != 0) {
        const std::size_t block = size_ / per_block_;
        if (block == blocks_.size()) blocks_.push_back(0);
        const unsigned shift = static_cast<unsigned>((size_ % per_block_) * bits_);
        blocks_[block] |= static_cast<std::uint64_t>(symbol - 1) << shift;
    }
    ++size_;
}

void Word::append(const Word& other) {
    require(other.alphabet_ <= alphabet_, Errc::invalid_word, "cannot append a word over a larger alphabet");
    reserve(size_ + other.size_);
    for (Symbol s : other) push_back(s);
}

void Word::reserve(std::size_t n) {
    if (bits_ != 0) blocks_.reserve((n + per_block_ - 1) / per_block_);
}

Word Word::prefix(std::size_t n) const {
    require(n <= size_, Errc::range, "prefix longer than the word");
    Word out(alphabet_);
    out.size_ = n;
    if (bits_ != 0) {
        const std::size_t full = n / per_block_;
        const std::size_t rest = n % per_block_;
        out.blocks_.assign(blocks_.begin(), blocks_.begin() + static_cast<std::ptrdiff_t>(full));
        if (rest != 0) out.blocks_.push_back(blocks_[full] & ((std::uint64_t{1} << (rest * bits_)) - 1));
    }
    return out;
}

Word Word::concat(const Word& other) const {
    Word out(std::max(alphabet_, other.alphabet_));
    out.reserve(size_ + other.size_);
    for (Symbol s : *this) out.push_back(s);
    for (Symbol s : other) out.push_back(s);
    return out;
}

std::vector<Word::Symbol> Word::symbols() const { return {begin(), end()}; }

bool operator==(const Word& a, const Word& b) {
    if (a.size_ != b.size_) return false;
    if (a.alphabet_ == b.alphabet_) return a.blocks_ == b.blocks_;
    return std::equal(a.begin(), a.end(), b.begin());
}

WordSampler::WordSampler(std::uint64_t seed, std::size_t alphabet)
    : rng_(seed), alphabet_(alphabet), bits_(0) {
    require(alphabet >= 1 && alphabet <= Word::kMaxAlphabet, Errc::invalid_alphabet,
            "alphabet size must be between 1 and 65536");
    if (std::has_single_bit(alphabet)) bits_ = static_cast<unsigned>(std::countr_zero(alphabet));
}

Word::Symbol WordSampler::next() {
    if (alphabet_ == 1) return 1;
    if (bits_ != 0) {
        if (available_ < bits_) {
            buffer_ = rng_();
            available_ = 64 - 64 % bits_;
        }
        const auto s = static_cast<Word::Symbol>(buffer_ & ((std::uint64_t{1} << bits_) - 1));
        buffer_ >>= bits_;
        available_ -= bits_;
        return s + 1;
    }
    return static_cast<Word::Symbol>(rng_.below(alphabet_)) + 1;
}

Word sample_word(std::uint64_t seed, std::size_t length, std::size_t alphabet) {
    WordSampler sampler(seed, alphabet);
    Word word(alphabet);
    word.reserve(length);
    for (std::size_t i = 0; i < length; ++i) word.push_back(sampler.next());
    return word;
}

double metric_distance(const Word& x, const Word& y) {
    if (x.empty() && y.empty()) return 0.0;
    if (x.empty() || y.empty()) return 1.0;
    const std::size_t common = std::min(x.size(), y.size());
    std::size_t k = 0;
    while (k < common && x[k] == y[k]) ++k;
    if (k == 0) return 1.0;
    if (k == common && x.size() == y.size()) return 0.0;
    return std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(k, 1100)));
}

}  // namespace abwalk
