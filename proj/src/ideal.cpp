#include "bf/ideal.hpp"

#include <algorithm>
#include <iostream>
#include <stdexcept>

#include "bf/lattice_cache.hpp"

namespace bf {

// ---------------------------------------------------------------- IdealSpec

IdealSpec IdealSpec::sigma_pow(int m, bool extend_t) { return IdealSpec{IdealKind::SigmaPow, m, 0, extend_t}; }
IdealSpec IdealSpec::iq(int q, bool extend_t) { return IdealSpec{IdealKind::Iq, 0, q, extend_t}; }
IdealSpec IdealSpec::jq(int q, bool extend_t) { return IdealSpec{IdealKind::Jq, 0, q, extend_t}; }

void IdealSpec::validate() const {
    if (kind == IdealKind::SigmaPow) {
        if (m < 1) throw DomainError("Sigma^m needs m >= 1");
    } else {
        PrimePower::of(q);
    }
}

IdealSpec IdealSpec::without_t() const {
    IdealSpec s = *this;
    s.extend_t = false;
    return s;
}

std::string IdealSpec::key() const {
    std::string k;
    switch (kind) {
        case IdealKind::SigmaPow: k = "sigma-m" + std::to_string(m); break;
        case IdealKind::Iq: k = "iq-q" + std::to_string(q); break;
        case IdealKind::Jq: k = "jq-q" + std::to_string(q); break;
    }
    return extend_t ? k + "-t" : k;
}

std::string IdealSpec::str() const {
    std::string s;
    switch (kind) {
        case IdealKind::SigmaPow: s = "Sigma^" + std::to_string(m); break;
        case IdealKind::Iq: s = "I(" + std::to_string(q) + ")"; break;
        case IdealKind::Jq: s = "I(" + std::to_string(q) + ")Sigma"; break;
    }
    return extend_t ? s + "[t,t^-1]" : s;
}

// ---------------------------------------------------------------- Box

namespace {

// Largest |exponent| a generator (before shifting) can reach.
int generator_reach(const IdealSpec& spec, int d_unit) {
    switch (spec.kind) {
        case IdealKind::SigmaPow: return spec.m;
        case IdealKind::Iq:
        case IdealKind::Jq: return d_unit * (spec.q - 1) + 1;
    }
    return 0;
}

}  // namespace

void Box::validate_for(const IdealSpec& spec) const {
    spec.validate();
    if (d_unit < 0 || d_shift < 0 || window < 0) throw DomainError("box bounds must be nonnegative: " + str());
    if (window > 64) throw DomainError("window above 64 is not supported: " + str());
    const int need = generator_reach(spec, d_unit) + d_shift;
    if (window < need) {
        throw DomainError("window too small for " + spec.str() + ": " + str() + " needs window >= " +
                          std::to_string(need));
    }
}

bool Box::valid_for(const IdealSpec& spec) const {
    try {
        validate_for(spec);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

bool Box::contains(const Box& o) const { return d_unit >= o.d_unit && d_shift >= o.d_shift && window >= o.window; }

std::string Box::key() const {
    return "u" + std::to_string(d_unit) + "-s" + std::to_string(d_shift) + "-w" + std::to_string(window);
}

std::string Box::str() const {
    return "{d_unit=" + std::to_string(d_unit) + ", d_shift=" + std::to_string(d_shift) +
           ", window=" + std::to_string(window) + "}";
}

std::vector<Box> default_schedule(const IdealSpec& spec) {
    spec.validate();
    std::vector<Box> out;
    constexpr int kWindows[] = {4, 6, 8};
    for (int tier = 0; tier < 3; ++tier) {
        const int w = kWindows[tier];
        if (spec.kind == IdealKind::SigmaPow) {
            if (w >= spec.m) out.push_back(Box{0, w - spec.m, w});
            continue;
        }
        for (int du = tier + 1; du >= 1; --du) {
            const int ds = w - generator_reach(spec, du);
            if (ds >= 0) {
                out.push_back(Box{du, ds, w});
                break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- generators

std::vector<Generator> generators(const IdealSpec& spec, const Box& box, Ring ring) {
    spec.validate();
    const LaurentPoly one = LaurentPoly::constant(ring, 1);
    std::vector<Generator> out;
    if (spec.kind == IdealKind::SigmaPow) {
        const int k = ring.rank();
        // Multisets of size m over {1 - x_1, ..., 1 - x_k}, as nondecreasing index tuples.
        std::vector<int> idx(static_cast<std::size_t>(spec.m), 0);
        for (;;) {
            LaurentPoly g = one;
            std::vector<int> counts(static_cast<std::size_t>(k), 0);
            for (int i : idx) {
                g = g * (one - LaurentPoly::variable(ring, i));
                ++counts[static_cast<std::size_t>(i)];
            }
            std::string label;
            for (int i = 0; i < k; ++i) {
                const int c = counts[static_cast<std::size_t>(i)];
                if (c == 0) continue;
                if (!label.empty()) label += "*";
                label += std::string("(1 - ") + ring.var_name(i) + ")";
                if (c > 1) label += "^" + std::to_string(c);
            }
            out.push_back({std::move(g), std::move(label)});
            int pos = spec.m - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k - 1) --pos;
            if (pos < 0) break;
            const int next = idx[static_cast<std::size_t>(pos)] + 1;
            for (int i = pos; i < spec.m; ++i) idx[static_cast<std::size_t>(i)] = next;
        }
        return out;
    }

    if (ring.rank() != 2) throw DomainError("cyclotomic ideals are only implemented for k = 2");
    if (box.d_unit < 0) throw DomainError("d_unit must be nonnegative");
    std::vector<ExpVec> units;
    for (int i = -box.d_unit; i <= box.d_unit; ++i) {
        for (int j = -box.d_unit; j <= box.d_unit; ++j) {
            ExpVec e;
            e[0] = i;
            e[1] = j;
            units.push_back(e);
        }
    }
    std::sort(units.begin(), units.end(), GradedLex{});
    for (const ExpVec& e : units) {
        const UnitMonomial u(ring, 1, e);
        LaurentPoly c = cyc_element(spec.q, u);
        const std::string label = "cyc_" + std::to_string(spec.q) + "(" + u.str() + ")";
        if (spec.kind == IdealKind::Iq) {
            out.push_back({std::move(c), label});
        } else {
            out.push_back({c * (one - LaurentPoly::variable(ring, 0)), label + "*(1 - x)"});
            out.push_back({c * (one - LaurentPoly::variable(ring, 1)), label + "*(1 - y)"});
        }
    }
    return out;
}

LaurentPoly recombine(const std::vector<WitnessTerm>& witness, Ring ring) {
    LaurentPoly acc(ring);
    for (const auto& w : witness) acc += (w.generator_poly * w.shift.to_poly()).scaled(w.coeff);
    return acc;
}

// ---------------------------------------------------------------- verdicts

std::string Certificate::str() const {
    std::string s;
    if (kind == Kind::AugmentationValue) {
        s = "AugmentationValue(value=" + value.str() + ", modulus=" + modulus.str() + ")";
    } else {
        s = "RootOfUnity(q=" + std::to_string(q) + ", a=" + std::to_string(a) + ", b=" + std::to_string(b) +
            ", image=" + (image ? image->str() : std::string("?")) + ")";
    }
    if (t_power) s += " on t^" + std::to_string(*t_power) + " coefficient";
    return s;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Member: return "Member";
        case Verdict::NonMember: return "NonMember";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

MembershipVerdict MembershipVerdict::member(const LaurentPoly& target, std::vector<WitnessTerm> witness, Box box) {
    if (!(recombine(witness, target.ring()) == target)) {
        throw std::logic_error("membership witness does not recombine to " + target.str());
    }
    MembershipVerdict v;
    v.status_ = Verdict::Member;
    v.witness_ = std::move(witness);
    v.box_ = box;
    return v;
}

MembershipVerdict MembershipVerdict::nonmember(Certificate cert, Box box) {
    MembershipVerdict v;
    v.status_ = Verdict::NonMember;
    v.certificate_ = std::move(cert);
    v.box_ = box;
    return v;
}

MembershipVerdict MembershipVerdict::unknown(Box box, std::string reason) {
    MembershipVerdict v;
    v.status_ = Verdict::Unknown;
    v.box_ = box;
    v.reason_ = std::move(reason);
    return v;
}

std::string MembershipVerdict::str() const {
    switch (status_) {
        case Verdict::Member: {
            std::string s = "Member:";
            if (witness_.empty()) return s + " 0";
            bool first = true;
            for (const auto& w : witness_) {
                s += first ? " " : " + ";
                first = false;
                s += "(" + w.coeff.str() + ")";
                if (!w.shift.exps().is_zero()) s += "*" + w.shift.str();
                s += "*" + w.generator;
            }
            return s;
        }
        case Verdict::NonMember: return "NonMember: " + certificate_->str();
        case Verdict::Unknown:
            return "Unknown at box " + box_.str() + (reason_.empty() ? "" : " (" + reason_ + ")");
    }
    return "?";
}

// ---------------------------------------------------------------- lattices

std::vector<ExpVec> window_index(int window) {
    std::vector<ExpVec> idx;
    idx.reserve(static_cast<std::size_t>((2 * window + 1) * (2 * window + 1)));
    for (int i = -window; i <= window; ++i) {
        for (int j = -window; j <= window; ++j) {
            ExpVec e;
            e[0] = i;
            e[1] = j;
            idx.push_back(e);
        }
    }
    return idx;
}

long LatticeBasis::row_of(const ExpVec& e) const {
    const int w = box.window;
    for (int s = 2; s < kMaxSlots; ++s) {
        if (e[s] != 0) return -1;
    }
    if (e[0] < -w || e[0] > w || e[1] < -w || e[1] > w) return -1;
    return static_cast<long>(e[0] + w) * (2 * w + 1) + (e[1] + w);
}

SparseVec<Integer> LatticeBasis::column_vector(std::size_t col) const {
    const LatticeColumn& c = columns.at(col);
    const LaurentPoly p = gens.at(c.generator).poly.shifted(c.shift);
    SparseVec<Integer> v;
    v.reserve(p.size());
    for (const auto& [e, x] : p.terms()) {
        const long r = row_of(e);
        if (r < 0) throw DomainError("lattice column escapes its window");
        v.emplace_back(static_cast<std::uint32_t>(r), x);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

LatticeBasis build_lattice_uncached(const IdealSpec& spec_in, const Box& box) {
    const IdealSpec spec = spec_in.without_t();
    box.validate_for(spec);
    LatticeBasis lb;
    lb.spec = spec;
    lb.box = box;
    lb.monomial_index = window_index(box.window);
    lb.gens = generators(spec, box);

    std::vector<SparseVec<Integer>> cols;
    for (std::size_t g = 0; g < lb.gens.size(); ++g) {
        for (int a = -box.d_shift; a <= box.d_shift; ++a) {
            for (int b = -box.d_shift; b <= box.d_shift; ++b) {
                ExpVec shift;
                shift[0] = a;
                shift[1] = b;
                const LaurentPoly p = lb.gens[g].poly.shifted(shift);
                bool fits = true;
                for (const auto& t : p.terms()) {
                    if (lb.row_of(t.first) < 0) {
                        fits = false;
                        break;
                    }
                }
                if (!fits) {
                    ++lb.discarded;
                    continue;
                }
                lb.columns.push_back({static_cast<std::uint32_t>(g), shift});
                cols.push_back(lb.column_vector(lb.columns.size() - 1));
            }
        }
    }
    if (cols.empty()) throw DomainError("window too small to hold any shifted generator: " + box.str());
    lb.hnf = echelon_hnf(lb.monomial_index.size(), cols, HnfOptions{true, false});
    return lb;
}

std::optional<std::vector<Integer>> lattice_member(const std::vector<Integer>& v, const LatticeBasis& basis) {
    if (v.size() != basis.monomial_index.size()) {
        throw DomainError("vector length " + std::to_string(v.size()) + " does not match lattice dimension " +
                          std::to_string(basis.monomial_index.size()));
    }
    auto coeffs = solve_in_basis(basis.hnf, to_sparse(v));
    if (!coeffs) return std::nullopt;
    SparseVec<Integer> check;
    for (std::size_t i = 0; i < coeffs->size(); ++i) {
        if ((*coeffs)[i] != 0) check = detail::combine(Integer(1), check, (*coeffs)[i], basis.hnf.vectors[i]);
    }
    if (check != to_sparse(v)) throw std::logic_error("lattice solve does not reproduce the vector");
    return coeffs;
}

bool lattice_consistent(const LatticeBasis& basis) {
    if (basis.format_version != kLatticeFormatVersion) return false;
    if (basis.monomial_index != window_index(basis.box.window)) return false;
    if (basis.hnf.dim != basis.monomial_index.size()) return false;
    if (!is_hnf(basis.hnf)) return false;
    if (basis.hnf.combos.size() != basis.hnf.rank()) return false;
    std::vector<SparseVec<Integer>> cols(basis.columns.size());
    try {
        for (std::size_t i = 0; i < basis.hnf.rank(); ++i) {
            SparseVec<Integer> acc;
            for (const auto& [c, x] : basis.hnf.combos[i]) {
                if (c >= basis.columns.size()) return false;
                if (cols[c].empty()) cols[c] = basis.column_vector(c);
                acc = detail::combine(Integer(1), acc, x, cols[c]);
            }
            if (acc != basis.hnf.vectors[i]) return false;
        }
        // Every column must lie in the span, otherwise the basis is of a smaller lattice.
        for (std::size_t c = 0; c < basis.columns.size(); ++c) {
            if (cols[c].empty()) cols[c] = basis.column_vector(c);
            if (!solve_in_basis(basis.hnf, cols[c])) return false;
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

// ---------------------------------------------------------------- certificates

std::vector<CycInt> image_ideal_generators(const IdealSpec& spec, int q, int a, int b) {
    const CycInt one = CycInt::from_integer(q, 1);
    const CycInt da = one - CycInt::zeta_pow(q, a);
    const CycInt db = one - CycInt::zeta_pow(q, b);
    std::vector<CycInt> gens;
    switch (spec.kind) {
        case IdealKind::Iq: gens.push_back(CycInt::from_integer(q, q)); break;
        case IdealKind::Jq:
            gens.push_back(da.scaled(q));
            gens.push_back(db.scaled(q));
            break;
        case IdealKind::SigmaPow:
            for (int i = 0; i <= spec.m; ++i) {
                CycInt g = one;
                for (int n = 0; n < i; ++n) g = g * da;
                for (int n = i; n < spec.m; ++n) g = g * db;
                gens.push_back(g);
            }
            break;
    }
    return gens;
}

bool in_image_ideal(const CycInt& z, const std::vector<CycInt>& gens) {
    const int q = z.q();
    const auto dim = z.coeffs().size();
    std::vector<SparseVec<Integer>> cols;
    for (const CycInt& g : gens) {
        for (std::size_t i = 0; i < dim; ++i) {
            cols.push_back(to_sparse((g * CycInt::zeta_pow(q, static_cast<long long>(i))).coeffs()));
        }
    }
    const EchelonBasis b = echelon_hnf(dim, cols);
    return solve_in_basis(b, to_sparse(z.coeffs())).has_value();
}

std::optional<Certificate> certify_nonmember(const LaurentPoly& p, const IdealSpec& spec_in) {
    const IdealSpec spec = spec_in.without_t();
    spec.validate();
    if (p.has_t()) throw DomainError("certify_nonmember needs a t-free polynomial");
    const Integer eps = augmentation_eps(p);
    if (spec.kind == IdealKind::Iq) {
        if (eps % spec.q != 0) {
            Certificate c;
            c.value = eps;
            c.modulus = spec.q;
            return c;
        }
    } else if (eps != 0) {
        Certificate c;
        c.value = eps;
        c.modulus = 0;
        return c;
    }
    if (spec.kind == IdealKind::SigmaPow || p.ring().rank() != 2) return std::nullopt;
    const int q = spec.q;
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (a == 0 && b == 0) continue;
            CycInt image = eval_root_of_unity(p, q, a, b);
            if (!in_image_ideal(image, image_ideal_generators(spec, q, a, b))) {
                Certificate c;
                c.kind = Certificate::Kind::RootOfUnity;
                c.q = q;
                c.a = a;
                c.b = b;
                c.image = std::move(image);
                return c;
            }
        }
    }
    return std::nullopt;
}

bool verify_certificate(const LaurentPoly& p_in, const IdealSpec& spec_in, const Certificate& cert) {
    const IdealSpec spec = spec_in.without_t();
    LaurentPoly p = p_in;
    if (cert.t_power) {
        auto parts = t_coefficients(p_in);
        auto it = parts.find(*cert.t_power);
        if (it == parts.end()) return false;
        p = it->second;
    }
    if (p.has_t()) return false;
    if (cert.kind == Certificate::Kind::AugmentationValue) {
        Integer sum = 0;
        for (const auto& [e, c] : p.terms()) sum += c;
        if (sum != cert.value) return false;
        const Integer expected_mod = spec.kind == IdealKind::Iq ? Integer(spec.q) : Integer(0);
        if (cert.modulus != expected_mod) return false;
        return expected_mod == 0 ? sum != 0 : sum % expected_mod != 0;
    }
    if (spec.kind == IdealKind::SigmaPow || cert.q != spec.q) return false;
    if (cert.a < 0 || cert.b < 0 || cert.a >= cert.q || cert.b >= cert.q) return false;
    // Recompute the image term by term through zeta powers.
    const CycInt za = CycInt::zeta_pow(cert.q, cert.a);
    const CycInt zb = CycInt::zeta_pow(cert.q, cert.b);
    const CycInt za_inv = CycInt::zeta_pow(cert.q, -cert.a);
    const CycInt zb_inv = CycInt::zeta_pow(cert.q, -cert.b);
    CycInt image(cert.q);
    for (const auto& [e, c] : p.terms()) {
        CycInt term = CycInt::from_integer(cert.q, c);
        for (int n = 0; n < std::abs(e[0]); ++n) term = term * (e[0] > 0 ? za : za_inv);
        for (int n = 0; n < std::abs(e[1]); ++n) term = term * (e[1] > 0 ? zb : zb_inv);
        image = image + term;
    }
    if (!cert.image || !(image == *cert.image)) return false;
    return !in_image_ideal(image, image_ideal_generators(spec, cert.q, cert.a, cert.b));
}

// ---------------------------------------------------------------- engine

IdealEngine::IdealEngine(std::string cache_dir, WarningSink warn)
    : cache_dir_(std::move(cache_dir)), warn_(std::move(warn)) {}

void IdealEngine::warn(const std::string& msg) const {
    if (warn_) {
        warn_(msg);
    } else {
        std::cerr << "warning: " << msg << "\n";
    }
}

std::size_t IdealEngine::builds() const {
    std::lock_guard lock(mu_);
    return builds_;
}

std::shared_ptr<const LatticeBasis> IdealEngine::build_lattice(const IdealSpec& spec_in, const Box& box) {
    const IdealSpec spec = spec_in.without_t();
    box.validate_for(spec);
    const std::string key = spec.key() + "|" + box.key();
    // Single writer: construction happens under the lock, lookups after it are shared.
    std::lock_guard lock(mu_);
    if (auto it = memory_.find(key); it != memory_.end()) return it->second;
    std::shared_ptr<const LatticeBasis> lb;
    if (!cache_dir_.empty()) {
        if (auto loaded = cache_load(cache_dir_, spec, box, [this](const std::string& m) { warn(m); })) {
            lb = std::make_shared<const LatticeBasis>(std::move(*loaded));
        }
    }
    if (!lb) {
        lb = std::make_shared<const LatticeBasis>(build_lattice_uncached(spec, box));
        ++builds_;
        if (!cache_dir_.empty()) cache_store(cache_dir_, *lb, [this](const std::string& m) { warn(m); });
    }
    memory_.emplace(key, lb);
    return lb;
}

MembershipVerdict IdealEngine::member_t_free(const LaurentPoly& p, const IdealSpec& spec,
                                             const std::vector<Box>& boxes) {
    if (p.is_zero()) return MembershipVerdict::member(p, {}, boxes.front());
    if (auto cert = certify_nonmember(p, spec)) return MembershipVerdict::nonmember(std::move(*cert), boxes.front());

    std::string reason = "no valid box";
    Box last = boxes.front();
    const auto [xlo, xhi] = p.degree_range(0);
    const auto [ylo, yhi] = p.degree_range(1);
    for (const Box& box : boxes) {
        if (!box.valid_for(spec)) {
            reason = "box " + box.str() + " too small for " + spec.str();
            continue;
        }
        last = box;
        const int w = box.window;
        if (xhi - xlo > 2 * w || yhi - ylo > 2 * w) {
            reason = "support wider than the window";
            continue;
        }
        // Membership is invariant under unit multiples, so centre the support.
        ExpVec centre;
        centre[0] = -static_cast<std::int32_t>(floor_div(Integer(xlo + xhi), 2));
        centre[1] = -static_cast<std::int32_t>(floor_div(Integer(ylo + yhi), 2));
        const LaurentPoly moved = p.shifted(centre);
        const auto lb = build_lattice(spec, box);
        std::vector<Integer> v(lb->monomial_index.size(), 0);
        bool fits = true;
        for (const auto& [e, c] : moved.terms()) {
            const long r = lb->row_of(e);
            if (r < 0) {
                fits = false;
                break;
            }
            v[static_cast<std::size_t>(r)] = c;
        }
        if (!fits) {
            reason = "support wider than the window";
            continue;
        }
        auto coeffs = lattice_member(v, *lb);
        if (!coeffs) {
            reason = "not in the truncated lattice";
            continue;
        }
        std::map<std::uint32_t, Integer> by_column;
        for (std::size_t i = 0; i < coeffs->size(); ++i) {
            const Integer& ci = (*coeffs)[i];
            if (ci == 0) continue;
            for (const auto& [col, x] : lb->hnf.combos[i]) by_column[col] += ci * x;
        }
        std::vector<WitnessTerm> witness;
        for (const auto& [col, x] : by_column) {
            if (x == 0) continue;
            const LatticeColumn& c = lb->columns[col];
            const Generator& g = lb->gens[c.generator];
            witness.push_back({g.label, g.poly, UnitMonomial(p.ring(), 1, c.shift - centre), x});
        }
        return MembershipVerdict::member(p, std::move(witness), box);
    }
    return MembershipVerdict::unknown(last, reason);
}

MembershipVerdict IdealEngine::member(const LaurentPoly& p, const IdealSpec& spec, const Box& box, bool auto_grow) {
    spec.validate();
    if (p.ring().rank() != 2) throw DomainError("membership is only implemented for k = 2");
    std::vector<Box> boxes{box};
    if (auto_grow) {
        for (const Box& b : default_schedule(spec.without_t())) {
            if (!box.contains(b)) boxes.push_back(b);
        }
    }
    if (!spec.extend_t) {
        if (p.has_t()) throw DomainError("polynomial has t; use an extend_t ideal spec");
        return member_t_free(p, spec, boxes);
    }
    const IdealSpec base = spec.without_t();
    std::vector<WitnessTerm> witness;
    Box used = box;
    std::optional<MembershipVerdict> unknown;
    for (const auto& [n, coeff] : t_coefficients(p)) {
        MembershipVerdict v = member_t_free(coeff, base, boxes);
        if (v.status() == Verdict::NonMember) {
            Certificate c = *v.certificate();
            c.t_power = n;
            return MembershipVerdict::nonmember(std::move(c), v.box());
        }
        if (v.status() == Verdict::Unknown) {
            if (!unknown) unknown = v;
            continue;
        }
        if (v.box().window > used.window || (v.box().window == used.window && v.box().contains(used))) used = v.box();
        ExpVec tshift;
        tshift[p.ring().t_slot()] = n;
        for (const auto& w : v.witness()) {
            witness.push_back({w.generator, w.generator_poly,
                               UnitMonomial(p.ring(), 1, w.shift.exps() + tshift), w.coeff});
        }
    }
    if (unknown) return *unknown;
    return MembershipVerdict::member(p, std::move(witness), used);
}

IdealEngine& default_engine() {
    static IdealEngine engine;
    return engine;
}

std::shared_ptr<const LatticeBasis> build_lattice(const IdealSpec& spec, const Box& box) {
    return default_engine().build_lattice(spec, box);
}

MembershipVerdict member(const LaurentPoly& p, const IdealSpec& spec, const Box& box, bool auto_grow) {
    return default_engine().member(p, spec, box, auto_grow);
}

MinPowerReport min_power_in_iq(int q, int m_max, const Box& box, bool auto_grow, IdealEngine& engine) {
    PrimePower::of(q);
    MinPowerReport report;
    report.q = q;
    for (int m = 1; m <= m_max; ++m) {
        MinPowerReport::Level level;
        level.m = m;
        level.all_member = true;
        for (const Generator& g : generators(IdealSpec::sigma_pow(m), box)) {
            MembershipVerdict v = engine.member(g.poly, IdealSpec::iq(q), box, auto_grow);
            if (v.status() != Verdict::Member) level.all_member = false;
            level.verdicts.emplace_back(g.poly, std::move(v));
        }
        const bool done = level.all_member;
        report.levels.push_back(std::move(level));
        if (done) {
            report.m_star = m;
            break;
        }
    }
    return report;
}

}  // namespace bf
