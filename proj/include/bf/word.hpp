#pragma once

// Free-group words over generators 1..k.
//
// Text form: a, b, c, d are generators 1..4 and their uppercase letters the
// inverses. [u,v] is the commutator u^-1 v^-1 u v, w^n a power (n may be
// negative, never zero), parentheses group, whitespace is ignored. The
// identity may be written as the empty string or "1".

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace bf {

struct Letter {
    int gen = 1;   // 1-based generator index
    int sign = 1;  // +1 or -1

    Letter inverse() const { return Letter{gen, -sign}; }
    bool operator==(const Letter&) const = default;
};

class Word;
Word free_reduce(const std::vector<Letter>& letters);

class Word {
public:
    Word() = default;
    // Freely reduces the given letters.
    explicit Word(std::vector<Letter> letters);

    static Word letter(int gen, int sign = 1) { return Word({Letter{gen, sign}}); }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const;
    Word pow(long long n) const;
    friend Word operator*(const Word& a, const Word& b);
    friend Word free_reduce(const std::vector<Letter>& letters);

    bool operator==(const Word&) const = default;

    // Lowercase/uppercase letters only.
    std::string str() const;

private:
    std::vector<Letter> letters_;
};

Word parse_word(std::string_view text, int k);

// Cancel adjacent inverse pairs until none remain.
Word free_reduce(const std::vector<Letter>& letters);

// Reduced u^-1 v^-1 u v.
Word word_commutator(const Word& u, const Word& v);

std::vector<long long> exponent_sums(const Word& w, int k);

// Explicit seeded state for word sampling.
class WordSampler {
public:
    explicit WordSampler(std::uint64_t seed) : rng_(seed) {}

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n);

    // Nonempty reduced word of length in [1, max_len].
    Word random_word(std::size_t max_len, int k);

    // Nontrivial element of the n-th term of the derived series: level 0 is
    // random_word, level n a commutator of two level n-1 samples.
    Word derived_word(int level, std::size_t base_len, int k);

private:
    std::mt19937_64 rng_;
};

std::vector<Word> derived_sample(int level, std::size_t count, std::uint64_t seed, std::size_t base_len, int k);

}  // namespace bf
