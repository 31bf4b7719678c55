#include "bf/word.hpp"

#include <cctype>

#include "bf/errors.hpp"
#include "bf/ring.hpp"

namespace bf {

Word::Word(std::vector<Letter> letters) : letters_(free_reduce(letters).letters_) {}

Word free_reduce(const std::vector<Letter>& letters) {
    std::vector<Letter> stack;
    stack.reserve(letters.size());
    for (const Letter& l : letters) {
        if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +1 or -1");
        if (!stack.empty() && stack.back() == l.inverse()) {
            stack.pop_back();
        } else {
            stack.push_back(l);
        }
    }
    Word w;
    w.letters_ = std::move(stack);
    return w;
}

Word Word::inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l.sign = -l.sign;
    Word w;
    w.letters_ = std::move(out);
    return w;
}

Word Word::pow(long long n) const {
    const Word base = n < 0 ? inverse() : *this;
    const unsigned long long m = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
    std::vector<Letter> out;
    out.reserve(base.length() * m);
    for (unsigned long long i = 0; i < m; ++i) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
    return Word(std::move(out));
}

Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
}

std::string Word::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (const Letter& l : letters_) {
        const char c = static_cast<char>('a' + l.gen - 1);
        s += l.sign > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return s;
}

Word word_commutator(const Word& u, const Word& v) { return u.inverse() * v.inverse() * u * v; }

std::vector<long long> exponent_sums(const Word& w, int k) {
    std::vector<long long> sums(static_cast<std::size_t>(k), 0);
    for (const Letter& l : w.letters()) {
        if (l.gen < 1 || l.gen > k) throw DomainError("letter outside the generator range");
        sums[static_cast<std::size_t>(l.gen - 1)] += l.sign;
    }
    return sums;
}

// ---------------------------------------------------------------- parser

namespace {

class WordParser {
public:
    WordParser(std::string_view text, int k) : text_(text), k_(k) {
        if (k < 1 || k > kMaxRank) throw DomainError("word alphabet size must be in [1, 4]");
    }

    Word run() {
        Word w = sequence();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_atom_start() {
        skip_ws();
        if (pos_ == text_.size()) return false;
        const char c = text_[pos_];
        return c == '(' || c == '[' || c == '1' || std::isalpha(static_cast<unsigned char>(c));
    }

    Word sequence() {
        Word acc;
        while (at_atom_start()) acc = acc * powered();
        return acc;
    }

    Word powered() {
        Word base = atom();
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != '^') break;
            ++pos_;
            skip_ws();
            const std::size_t start = pos_;
            if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
            const std::size_t digits = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == digits) fail("expected integer exponent");
            if (pos_ - digits > 6) fail("exponent too large");
            const long long n = std::stoll(std::string(text_.substr(start, pos_ - start)));
            if (n == 0) fail("zero exponent");
            base = base.pow(n);
        }
        return base;
    }

    Word atom() {
        skip_ws();
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Word inner = sequence();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
            ++pos_;
            return inner;
        }
        if (c == '[') {
            ++pos_;
            Word u = sequence();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ',') fail("malformed commutator, expected ','");
            ++pos_;
            Word v = sequence();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ']') fail("malformed commutator, expected ']'");
            ++pos_;
            return word_commutator(u, v);
        }
        if (c == '1') {
            ++pos_;
            return Word();
        }
        const bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
        const int gen = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
        if (gen < 1 || gen > k_) fail(std::string("unknown generator '") + c + "' for k = " + std::to_string(k_));
        ++pos_;
        return Word::letter(gen, upper ? -1 : 1);
    }

    std::string_view text_;
    int k_;
    std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, int k) { return WordParser(text, k).run(); }

// ---------------------------------------------------------------- sampling

std::uint64_t WordSampler::below(std::uint64_t n) {
    if (n == 0) throw DomainError("empty sampling range");
    // Rejection keeps the draw uniform and independent of the standard library.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
        r = rng_();
    } while (r >= limit);
    return r % n;
}

Word WordSampler::random_word(std::size_t max_len, int k) {
    if (max_len == 0) throw DomainError("word length bound must be positive");
    const std::size_t len = 1 + below(max_len);
    std::vector<Letter> letters;
    letters.reserve(len);
    while (letters.size() < len) {
        Letter l{static_cast<int>(1 + below(static_cast<std::uint64_t>(k))), below(2) ? 1 : -1};
        if (!letters.empty() && letters.back() == l.inverse()) continue;
        letters.push_back(l);
    }
    return Word(std::move(letters));
}

Word WordSampler::derived_word(int level, std::size_t base_len, int k) {
    if (level < 0) throw DomainError("derived level must be nonnegative");
    if (level == 0) return random_word(base_len, k);
    constexpr int kRetries = 1000;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        const Word u = derived_word(level - 1, base_len, k);
        const Word v = derived_word(level - 1, base_len, k);
        Word c = word_commutator(u, v);
        if (!c.empty()) return c;
    }
    throw DomainError("derived sampler exhausted its retry budget at level " + std::to_string(level));
}

std::vector<Word> derived_sample(int level, std::size_t count, std::uint64_t seed, std::size_t base_len, int k) {
    WordSampler sampler(seed);
    std::vector<Word> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.derived_word(level, base_len, k));
    return out;
}

}  // namespace bf
