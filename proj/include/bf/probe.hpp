#pragma once

// Claim checks. Each check samples words or polynomials, asks the ideal
// engine, and folds the verdicts into a ClaimReport.
//
// Status rules: Fail only with a sound counter-witness (a NonMember
// certificate or an exact inequality), Inconclusive when some verdict is
// Unknown and nothing failed, Pass otherwise.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bf/ideal.hpp"
#include "bf/integer.hpp"
#include "bf/matrix.hpp"
#include "bf/word.hpp"

namespace bf {

struct ProbeConfig {
    int q = 2;
    Box box{1, 1, 4};
    bool auto_grow = true;
    std::uint64_t seed = 1;
    int sample_count = 20;
    int n_max = 4;
    int word_len = 6;
    // Base word lengths of sampled commutators and of derived-series samples.
    int commutator_len = 2;
    int depth_base_len = 1;
    // Longer derived-series words are reported Unknown without evaluation.
    int max_eval_len = 128;

    // Throws DomainError / NotPrimePower.
    void validate() const;
};

enum class ClaimStatus { Pass, Fail, Inconclusive };

std::string to_string(ClaimStatus s);

struct SampleResult {
    std::string subject;  // word, polynomial or matrix label
    std::string entry;    // e.g. "(1,2)"; empty when not per entry
    std::string verdict;  // Member, NonMember, Unknown, Equal, Differs, ...
    std::string note;
    std::optional<Box> box;
};

struct ClaimReport {
    std::string claim_id;
    ClaimStatus status = ClaimStatus::Pass;
    std::string summary;
    std::vector<SampleResult> details;
    Box box_used;
    double timing_ms = 0;
};

struct BoundsResult {
    int q = 0;
    int p = 0;
    int e = 0;
    int rhs = 0;
    int n = 0;
};

// rhs = e(p^e - p^(e-1)) + 1 and the least n with 2^n >= rhs.
BoundsResult class_bound(long long q);

// Every membership query a check makes, for consistency audits.
using VerdictSink = std::function<void(const LaurentPoly&, const IdealSpec&, const MembershipVerdict&)>;

struct ProbeContext {
    IdealEngine* engine = nullptr;  // default_engine() when null
    VerdictSink sink;

    IdealEngine& eng() const { return engine ? *engine : default_engine(); }
    MembershipVerdict member(const LaurentPoly& p, const IdealSpec& spec, const ProbeConfig& cfg) const;
};

ClaimReport bounds_check(const ProbeConfig& cfg);
ClaimReport metabelian_check(const ProbeConfig& cfg);
ClaimReport t_commute_check(const std::vector<int>& ks = {2, 3, 4});
ClaimReport generator_order_check(const ProbeConfig& cfg, const ProbeContext& ctx = {});
ClaimReport exponent_commutator_check(const ProbeConfig& cfg, const ProbeContext& ctx = {},
                                      const std::vector<Word>& extra = {});
ClaimReport square_check(const ProbeConfig& cfg, const ProbeContext& ctx = {});
ClaimReport prop1_entry_check();

struct DepthReport {
    std::optional<int> n_star;
    // Per level: Pass when every sample is trivial, Fail when some entry is
    // certified nontrivial, Inconclusive otherwise.
    std::vector<ClaimReport> per_level;
    std::optional<ClaimReport> confirmation;  // level n_star + 1
    BoundsResult bound;
    ClaimReport overall;
};

DepthReport derived_depth_probe(const ProbeConfig& cfg, const ProbeContext& ctx = {});

struct TheoremBReport {
    MinPowerReport powers;
    BoundsResult bound;
    ClaimReport overall;
};

TheoremBReport theorem_b_probe(const ProbeConfig& cfg, const ProbeContext& ctx = {});

// M1^j by the closed form [[1, (1-y)(1 + x + ... + x^(j-1))], [0, x^j]].
MatR m1_power_closed_form(int j);

// Folds a list of verdicts into a status.
ClaimStatus fold_status(bool any_fail, bool any_unknown);

}  // namespace bf
