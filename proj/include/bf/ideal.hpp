#pragma once

// Membership in the ideals Sigma^m, I(q) and J(q) = I(q) Sigma of
// R = Z[x^±, y^±].
//
// I(q) is generated by all q-cyclotomic elements 1 + u + ... + u^(q-1) over
// positive units u, so it is infinitely generated. Membership is decided
// semi-decidably: generators with bounded unit exponents, multiplied by
// bounded monomial shifts, are laid out as integer vectors over a square
// window of monomials and reduced to Hermite normal form. A polynomial in the
// span gets a Member verdict with an exact witness. Ring homomorphisms to Z
// and to Z[zeta_q] give NonMember certificates. Anything else is Unknown.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bf/cyclotomic.hpp"
#include "bf/hnf.hpp"
#include "bf/ring.hpp"

namespace bf {

enum class IdealKind { SigmaPow, Iq, Jq };

struct IdealSpec {
    IdealKind kind = IdealKind::Jq;
    int m = 0;              // SigmaPow exponent
    int q = 0;              // Iq / Jq prime power
    bool extend_t = false;  // test every t-coefficient separately

    static IdealSpec sigma_pow(int m, bool extend_t = false);
    static IdealSpec iq(int q, bool extend_t = false);
    static IdealSpec jq(int q, bool extend_t = false);

    void validate() const;
    IdealSpec without_t() const;
    // Stable identifier, e.g. "jq-q3" or "sigma-m2".
    std::string key() const;
    std::string str() const;

    bool operator==(const IdealSpec&) const = default;
};

struct Box {
    int d_unit = 1;   // max |exponent| of the units u
    int d_shift = 1;  // max |exponent| of monomial shift multipliers
    int window = 4;   // max |exponent| of the monomial support

    // Throws DomainError when generator supports cannot fit the window.
    void validate_for(const IdealSpec& spec) const;
    bool valid_for(const IdealSpec& spec) const;
    // Componentwise >=.
    bool contains(const Box& o) const;
    std::string key() const;
    std::string str() const;

    bool operator==(const Box&) const = default;
};

// Box escalation used by auto-grow: windows 4, 6, 8 paired with unit bounds
// 1, 2, 3 (shrunk until the shift bound is nonnegative), d_shift filling the
// rest of the window.
std::vector<Box> default_schedule(const IdealSpec& spec);

struct Generator {
    LaurentPoly poly;
    std::string label;
};

std::vector<Generator> generators(const IdealSpec& spec, const Box& box, Ring ring = Ring(2));

struct WitnessTerm {
    std::string generator;
    LaurentPoly generator_poly;
    UnitMonomial shift;
    Integer coeff;
};

// Sum of coeff * shift * generator.
LaurentPoly recombine(const std::vector<WitnessTerm>& witness, Ring ring);

struct Certificate {
    enum class Kind { AugmentationValue, RootOfUnity };

    Kind kind = Kind::AugmentationValue;
    // AugmentationValue: value is not in modulus * Z (modulus 0 means value != 0).
    Integer value = 0;
    Integer modulus = 0;
    // RootOfUnity: x -> zeta^a, y -> zeta^b sends p to `image`, outside the image of the ideal.
    int q = 0;
    int a = 0;
    int b = 0;
    std::optional<CycInt> image;
    // Set when the certificate is about one t-coefficient of the query.
    std::optional<std::int32_t> t_power;

    std::string str() const;
};

enum class Verdict { Member, NonMember, Unknown };

std::string to_string(Verdict v);

class MembershipVerdict {
public:
    // Throws std::logic_error unless the witness recombines to `target`.
    static MembershipVerdict member(const LaurentPoly& target, std::vector<WitnessTerm> witness, Box box);
    static MembershipVerdict nonmember(Certificate cert, Box box);
    static MembershipVerdict unknown(Box box, std::string reason = {});

    Verdict status() const { return status_; }
    const std::vector<WitnessTerm>& witness() const { return witness_; }
    const std::optional<Certificate>& certificate() const { return certificate_; }
    const Box& box() const { return box_; }
    const std::string& reason() const { return reason_; }

    std::string str() const;

private:
    MembershipVerdict() = default;

    Verdict status_ = Verdict::Unknown;
    std::vector<WitnessTerm> witness_;
    std::optional<Certificate> certificate_;
    Box box_;
    std::string reason_;
};

inline constexpr int kLatticeFormatVersion = 1;

struct LatticeColumn {
    std::uint32_t generator = 0;  // index into LatticeBasis::gens
    ExpVec shift;
};

struct LatticeBasis {
    IdealSpec spec;
    Box box;
    int format_version = kLatticeFormatVersion;
    std::vector<ExpVec> monomial_index;  // row order of the lattice vectors
    std::vector<Generator> gens;
    std::vector<LatticeColumn> columns;  // generator shifts that fit the window
    std::size_t discarded = 0;           // shifts escaping the window
    EchelonBasis hnf;                    // with combos over `columns`

    // Row of a monomial, or -1 outside the window.
    long row_of(const ExpVec& e) const;
    SparseVec<Integer> column_vector(std::size_t col) const;
};

// Monomials x^i y^j with |i|, |j| <= window in lattice row order.
std::vector<ExpVec> window_index(int window);

// Uncached construction.
LatticeBasis build_lattice_uncached(const IdealSpec& spec, const Box& box);

// Coefficients over the HNF basis vectors, or nullopt when v is outside the lattice.
std::optional<std::vector<Integer>> lattice_member(const std::vector<Integer>& v, const LatticeBasis& basis);

// Re-derives every HNF basis vector from its combination of columns and
// checks the HNF shape. Used to validate lattices loaded from disk.
bool lattice_consistent(const LatticeBasis& basis);

using WarningSink = std::function<void(const std::string&)>;

// Lattice construction with an in-memory cache and an optional directory of
// persisted lattices. Thread-safe.
class IdealEngine {
public:
    explicit IdealEngine(std::string cache_dir = {}, WarningSink warn = {});

    std::shared_ptr<const LatticeBasis> build_lattice(const IdealSpec& spec, const Box& box);

    MembershipVerdict member(const LaurentPoly& p, const IdealSpec& spec, const Box& box, bool auto_grow);

    const std::string& cache_dir() const { return cache_dir_; }
    std::size_t builds() const;
    void warn(const std::string& msg) const;

private:
    MembershipVerdict member_t_free(const LaurentPoly& p, const IdealSpec& spec, const std::vector<Box>& boxes);

    std::string cache_dir_;
    WarningSink warn_;
    mutable std::mutex mu_;
    std::map<std::string, std::shared_ptr<const LatticeBasis>> memory_;
    std::size_t builds_ = 0;
};

// Process-wide engine without disk persistence.
IdealEngine& default_engine();

std::shared_ptr<const LatticeBasis> build_lattice(const IdealSpec& spec, const Box& box);
MembershipVerdict member(const LaurentPoly& p, const IdealSpec& spec, const Box& box, bool auto_grow);

std::optional<Certificate> certify_nonmember(const LaurentPoly& p, const IdealSpec& spec);

// Independent re-check of a certificate; rebuilds the target lattice from scratch.
bool verify_certificate(const LaurentPoly& p, const IdealSpec& spec, const Certificate& cert);

// Generators of the image of the ideal in Z[zeta_q] under x -> zeta^a, y -> zeta^b.
std::vector<CycInt> image_ideal_generators(const IdealSpec& spec, int q, int a, int b);
// Whether z lies in the Z-span of {g zeta^i}.
bool in_image_ideal(const CycInt& z, const std::vector<CycInt>& gens);

struct MinPowerReport {
    int q = 0;
    struct Level {
        int m = 0;
        std::vector<std::pair<LaurentPoly, MembershipVerdict>> verdicts;
        bool all_member = false;
    };
    std::vector<Level> levels;
    std::optional<int> m_star;
};

MinPowerReport min_power_in_iq(int q, int m_max, const Box& box, bool auto_grow = true,
                               IdealEngine& engine = default_engine());

}  // namespace bf
