#include "bf/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

namespace bf {

namespace {

constexpr char kNames[kMaxRank] = {'x', 'y', 'z', 'w'};

void sort_and_merge(std::vector<LaurentPoly::Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return GradedLex{}(a.first, b.first); });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Integer acc = std::move(terms[i].second);
        while (j < terms.size() && terms[j].first == terms[i].first) {
            acc += terms[j].second;
            ++j;
        }
        if (acc != 0) {
            terms[out].first = terms[i].first;
            terms[out].second = std::move(acc);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

}  // namespace

// ---------------------------------------------------------------- Ring

Ring::Ring(int k) : k_(k) {
    if (k < 1 || k > kMaxRank) {
        throw DomainError("ring rank must be in [1, " + std::to_string(kMaxRank) +
                          "], got " + std::to_string(k));
    }
}

char Ring::var_name(int slot) const {
    if (slot == k_) return 't';
    if (slot < 0 || slot > k_) throw DomainError("variable slot out of range");
    return kNames[slot];
}

int Ring::slot_of(char name) const {
    if (name == 't') return k_;
    for (int i = 0; i < k_; ++i) {
        if (kNames[i] == name) return i;
    }
    return -1;
}

// ---------------------------------------------------------------- ExpVec

ExpVec ExpVec::operator+(const ExpVec& o) const {
    ExpVec r;
    for (int i = 0; i < kMaxSlots; ++i) r[i] = (*this)[i] + o[i];
    return r;
}

ExpVec ExpVec::operator-(const ExpVec& o) const {
    ExpVec r;
    for (int i = 0; i < kMaxSlots; ++i) r[i] = (*this)[i] - o[i];
    return r;
}

ExpVec ExpVec::operator-() const {
    ExpVec r;
    for (int i = 0; i < kMaxSlots; ++i) r[i] = -(*this)[i];
    return r;
}

ExpVec ExpVec::scaled(std::int32_t n) const {
    ExpVec r;
    for (int i = 0; i < kMaxSlots; ++i) r[i] = (*this)[i] * n;
    return r;
}

long ExpVec::total_abs_degree() const {
    long d = 0;
    for (auto v : e) d += std::labs(v);
    return d;
}

bool ExpVec::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(Ring ring, const Integer& c) {
    return monomial(ring, ExpVec{}, c);
}

LaurentPoly LaurentPoly::monomial(Ring ring, const ExpVec& exps, const Integer& c) {
    LaurentPoly p(ring);
    for (int i = ring.var_count(); i < kMaxSlots; ++i) {
        if (exps[i] != 0) throw RingMismatch("exponent outside the ring's variables");
    }
    if (c != 0) p.terms_.emplace_back(exps, c);
    return p;
}

LaurentPoly LaurentPoly::variable(Ring ring, int slot, std::int32_t power) {
    if (slot < 0 || slot >= ring.var_count()) throw DomainError("variable slot out of range");
    ExpVec e;
    e[slot] = power;
    return monomial(ring, e, 1);
}

LaurentPoly LaurentPoly::from_terms(Ring ring, std::vector<Term> terms) {
    LaurentPoly p(ring);
    for (const auto& [e, c] : terms) {
        for (int i = ring.var_count(); i < kMaxSlots; ++i) {
            if (e[i] != 0) throw RingMismatch("exponent outside the ring's variables");
        }
    }
    sort_and_merge(terms);
    p.terms_ = std::move(terms);
    return p;
}

Integer LaurentPoly::coeff(const ExpVec& exps) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exps,
                               [](const Term& t, const ExpVec& e) { return GradedLex{}(t.first, e); });
    if (it != terms_.end() && it->first == exps) return it->second;
    return 0;
}

std::optional<UnitMonomial> LaurentPoly::as_unit() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = terms_.front();
    if (c == 1) return UnitMonomial(ring_, 1, e);
    if (c == -1) return UnitMonomial(ring_, -1, e);
    return std::nullopt;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.front().first.is_zero() && terms_.front().second == 1;
}

std::pair<std::int32_t, std::int32_t> LaurentPoly::degree_range(int slot) const {
    if (terms_.empty()) return {0, 0};
    std::int32_t lo = std::numeric_limits<std::int32_t>::max();
    std::int32_t hi = std::numeric_limits<std::int32_t>::min();
    for (const auto& t : terms_) {
        lo = std::min(lo, t.first[slot]);
        hi = std::max(hi, t.first[slot]);
    }
    return {lo, hi};
}

bool LaurentPoly::has_t() const {
    const int ts = ring_.t_slot();
    return std::any_of(terms_.begin(), terms_.end(), [ts](const Term& t) { return t.first[ts] != 0; });
}

void LaurentPoly::check_same_ring(const LaurentPoly& o) const {
    if (!(ring_ == o.ring_)) {
        throw RingMismatch("variable-count mismatch: " + std::to_string(ring_.var_count()) + " vs " +
                           std::to_string(o.ring_.var_count()));
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
    LaurentPoly r(ring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& shift) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.emplace_back(e + shift, c);
    // A shift can change total degrees unevenly, so the order must be rebuilt.
    return from_terms(ring_, std::move(out));
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly result = constant(ring_, 1);
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return result;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_ring(b);
    LaurentPoly r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    GradedLex less;
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && less(i->first, j->first))) {
            r.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || less(j->first, i->first)) {
            r.terms_.push_back(*j++);
        } else {
            Integer s = i->second + j->second;
            if (s != 0) r.terms_.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_ring(b);
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) out.emplace_back(ea + eb, ca * cb);
    }
    sort_and_merge(out);
    LaurentPoly r(a.ring_);
    r.terms_ = std::move(out);
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c < 0;
        Integer mag = neg ? Integer(-c) : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string vars;
        for (int s = 0; s < ring_.var_count(); ++s) {
            if (e[s] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += ring_.var_name(s);
            if (e[s] != 1) vars += "^" + std::to_string(e[s]);
        }
        if (vars.empty()) {
            out += mag.str();
        } else if (mag == 1) {
            out += vars;
        } else {
            out += mag.str() + "*" + vars;
        }
    }
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
public:
    PolyParser(Ring ring, std::string_view text) : ring_(ring), text_(text) {}

    LaurentPoly run() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty polynomial");
        LaurentPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) +
                         "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    LaurentPoly expr() {
        LaurentPoly acc(ring_);
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        LaurentPoly t = term();
        acc = negate ? -t : t;
        for (;;) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }

    LaurentPoly term() {
        LaurentPoly acc = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                acc = acc * factor();
            } else if (pos_ < text_.size() &&
                       (text_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(text_[pos_])))) {
                // Juxtaposition such as 3x or (1-x)(1-y).
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    long long signed_int() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected integer exponent");
        if (pos_ - digits > 9) fail("exponent too large");
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    LaurentPoly factor() {
        LaurentPoly base = primary();
        while (accept('^')) {
            const long long n = signed_int();
            if (n >= 0) {
                base = base.pow(static_cast<unsigned>(n));
            } else {
                auto u = base.as_unit();
                if (!u) fail("negative power of a non-unit");
                base = u->inverse().to_poly().pow(static_cast<unsigned>(-n));
            }
        }
        return base;
    }

    LaurentPoly primary() {
        skip_ws();
        if (pos_ == text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPoly inner = expr();
            if (!accept(')')) fail("missing ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return LaurentPoly::constant(ring_, parse_integer(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const int slot = ring_.slot_of(c);
            if (slot < 0) fail(std::string("unknown variable '") + c + "'");
            ++pos_;
            return LaurentPoly::variable(ring_, slot);
        }
        fail("unexpected character");
    }

    Ring ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(Ring ring, std::string_view text) { return PolyParser(ring, text).run(); }

// ---------------------------------------------------------------- UnitMonomial

UnitMonomial::UnitMonomial(Ring ring, int sign, const ExpVec& exps) : ring_(ring), sign_(sign), exps_(exps) {
    if (sign != 1 && sign != -1) throw DomainError("unit sign must be +1 or -1");
    for (int i = ring.var_count(); i < kMaxSlots; ++i) {
        if (exps[i] != 0) throw RingMismatch("exponent outside the ring's variables");
    }
}

UnitMonomial UnitMonomial::operator*(const UnitMonomial& o) const {
    if (!(ring_ == o.ring_)) throw RingMismatch("unit monomials from different rings");
    return UnitMonomial(ring_, sign_ * o.sign_, exps_ + o.exps_);
}

LaurentPoly UnitMonomial::to_poly() const { return LaurentPoly::monomial(ring_, exps_, sign_); }

// ---------------------------------------------------------------- operations

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

Integer augmentation_eps(const LaurentPoly& p) {
    Integer s = 0;
    for (const auto& t : p.terms()) s += t.second;
    return s;
}

LaurentPoly set_t_one(const LaurentPoly& p) {
    const int ts = p.ring().t_slot();
    std::vector<LaurentPoly::Term> out;
    out.reserve(p.size());
    for (const auto& [e, c] : p.terms()) {
        ExpVec f = e;
        f[ts] = 0;
        out.emplace_back(f, c);
    }
    return LaurentPoly::from_terms(p.ring(), std::move(out));
}

LaurentPoly cyc_element(int q, const UnitMonomial& u) {
    PrimePower::of(q);
    if (!u.positive()) throw DomainError("cyclotomic element needs a positive unit, got " + u.str());
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) terms.emplace_back(u.exps().scaled(i), Integer(1));
    return LaurentPoly::from_terms(u.ring(), std::move(terms));
}

std::map<std::int32_t, LaurentPoly> t_coefficients(const LaurentPoly& p) {
    const int ts = p.ring().t_slot();
    std::map<std::int32_t, std::vector<LaurentPoly::Term>> buckets;
    for (const auto& [e, c] : p.terms()) {
        ExpVec f = e;
        f[ts] = 0;
        buckets[e[ts]].emplace_back(f, c);
    }
    std::map<std::int32_t, LaurentPoly> out;
    for (auto& [n, terms] : buckets) out.emplace(n, LaurentPoly::from_terms(p.ring(), std::move(terms)));
    return out;
}

std::optional<LaurentPoly> divide_by_one_minus(const LaurentPoly& p, int slot) {
    if (slot < 0 || slot >= p.ring().var_count()) throw DomainError("variable slot out of range");
    // p = q * (1 - x) means c_n = q_n - q_(n-1) along x, so q_n is the running
    // sum of c along each line parallel to the x axis, and each line sums to 0.
    std::map<ExpVec, std::map<std::int32_t, Integer>> lines;
    for (const auto& [e, c] : p.terms()) {
        ExpVec key = e;
        key[slot] = 0;
        lines[key][e[slot]] += c;
    }
    std::vector<LaurentPoly::Term> out;
    for (const auto& [key, line] : lines) {
        Integer running = 0;
        const std::int32_t lo = line.begin()->first;
        const std::int32_t hi = line.rbegin()->first;
        auto it = line.begin();
        for (std::int32_t n = lo; n <= hi; ++n) {
            if (it != line.end() && it->first == n) {
                running += it->second;
                ++it;
            }
            if (n == hi) break;
            if (running != 0) {
                ExpVec e = key;
                e[slot] = n;
                out.emplace_back(e, running);
            }
        }
        if (running != 0) return std::nullopt;
    }
    return LaurentPoly::from_terms(p.ring(), std::move(out));
}

}  // namespace bf
