#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bf/ideal.hpp"
#include "bf/matrix.hpp"
#include "bf/probe.hpp"
#include "bf/report.hpp"

using namespace bf;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 3;

struct Options {
    int q = 2;
    int k = 2;
    int d_unit = 1;
    int d_shift = 1;
    int window = 4;
    bool auto_grow = false;
    std::uint64_t seed = 1;
    int samples = 20;
    int n_max = 4;
    int word_len = 6;
    int base_len = 1;
    int max_eval_len = 128;
    int commutator_len = 2;
    int level = 0;
    std::string cache_dir;
    bool json_out = false;
    std::string ring = "R";
    std::string ideal = "jq";
    bool q_set = false;
    std::string input;
    std::vector<std::string> claims;
};

Box box_of(const Options& o) { return Box{o.d_unit, o.d_shift, o.window}; }

IdealSpec ideal_of(const Options& o, bool extend_t) {
    if (o.ideal == "iq") return IdealSpec::iq(o.q, extend_t);
    if (o.ideal == "jq") return IdealSpec::jq(o.q, extend_t);
    if (o.ideal.rfind("sigma^", 0) == 0) {
        const std::string m = o.ideal.substr(6);
        if (m.empty() || m.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError("bad ideal: " + o.ideal);
        }
        return IdealSpec::sigma_pow(std::stoi(m), extend_t);
    }
    throw ParseError("unknown ideal '" + o.ideal + "' (expected iq, jq or sigma^m)");
}

IdealEngine make_engine(const Options& o) {
    std::string dir = o.cache_dir;
    if (const char* env = std::getenv("BF_CACHE_DIR"); env && *env) dir = env;
    return IdealEngine(dir, [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; });
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json matrix_json(const MatR& m) { return m.to_strings(); }

int cmd_eval(const Options& o) {
    const GenSet kind = o.ring == "Rt" ? GenSet::FRt : o.ring == "R" ? GenSet::FR : throw ParseError("ring must be R or Rt");
    const Word w = parse_word(o.input, o.k);
    const GeneratorSet gens(kind, o.k);
    const MatR m = eval_word(w, gens);
    json j{{"word", w.str()}, {"ring", o.ring}, {"k", o.k}, {"matrix", matrix_json(m)}};
    int code = 0;
    if (o.q_set) {
        PrimePower::of(o.q);
        if (o.k != 2) throw DomainError("membership needs k = 2");
        IdealEngine engine = make_engine(o);
        const MatR d = m - MatR::identity(m.ring());
        const IdealSpec spec = IdealSpec::jq(o.q, d.has_t());
        json entries = json::array();
        for (int i = 0; i < 2; ++i) {
            for (int c = 0; c < 2; ++c) {
                const MembershipVerdict v = engine.member(d(i, c), spec, box_of(o), o.auto_grow);
                if (v.status() == Verdict::Unknown) code = 2;
                json e = to_json(v);
                e["entry"] = "(" + std::to_string(i + 1) + "," + std::to_string(c + 1) + ")";
                entries.push_back(std::move(e));
            }
        }
        j["ideal"] = spec.str();
        j["entries_minus_identity"] = std::move(entries);
    }
    if (o.json_out) {
        print_json(j);
    } else {
        std::cout << m.str() << "\n";
        if (j.contains("entries_minus_identity")) {
            for (const json& e : j["entries_minus_identity"]) {
                std::cout << e["entry"].get<std::string>() << " - I in " << j["ideal"].get<std::string>() << ": "
                          << e["status"].get<std::string>() << "\n";
            }
        }
    }
    return code;
}

int cmd_member(const Options& o) {
    const Ring ring(2);
    const LaurentPoly p = LaurentPoly::parse(ring, o.input);
    const IdealSpec spec = ideal_of(o, p.has_t());
    spec.validate();
    IdealEngine engine = make_engine(o);
    const MembershipVerdict v = engine.member(p, spec, box_of(o), o.auto_grow);
    if (o.json_out) {
        json j = to_json(v);
        j["polynomial"] = p.str();
        j["ideal"] = spec.str();
        print_json(j);
    } else {
        std::cout << p.str() << " in " << spec.str() << ": " << v.str() << "\n";
    }
    return v.status() == Verdict::Unknown ? 2 : 0;
}

int cmd_reduce_t(const Options& o) {
    const Word w = parse_word(o.input, o.k);
    const MatR full = eval_word(w, GeneratorSet(GenSet::FRt, o.k));
    const MatR reduced = mat_set_t_one(full);
    const MatR direct = eval_word(w, GeneratorSet(GenSet::FR, o.k));
    const bool same = reduced == direct;
    if (o.json_out) {
        print_json({{"word", w.str()},
                    {"matrix_Rt", matrix_json(full)},
                    {"t_set_to_one", matrix_json(reduced)},
                    {"matrix_R", matrix_json(direct)},
                    {"paths_equal", same}});
    } else {
        std::cout << "over R[t,t^-1]: " << full.str() << "\n";
        std::cout << "t -> 1:        " << reduced.str() << "\n";
        std::cout << "over R:        " << direct.str() << "\n";
        std::cout << (same ? "paths agree" : "paths differ") << "\n";
    }
    return 0;
}

int cmd_bounds(const Options& o) {
    const BoundsResult b = class_bound(o.q);
    if (o.json_out) {
        print_json({{"q", b.q}, {"p", b.p}, {"e", b.e}, {"rhs", b.rhs}, {"n", b.n}});
    } else {
        std::cout << "q=" << b.q << " p=" << b.p << " e=" << b.e << " rhs=" << b.rhs << " n=" << b.n << "\n";
    }
    return 0;
}

int cmd_verify(const Options& o) {
    ProbeConfig cfg;
    cfg.q = o.q;
    cfg.box = box_of(o);
    cfg.auto_grow = o.auto_grow;
    cfg.seed = o.seed;
    cfg.sample_count = o.samples;
    cfg.n_max = o.n_max;
    cfg.word_len = o.word_len;
    cfg.depth_base_len = o.base_len;
    cfg.commutator_len = o.commutator_len;
    cfg.max_eval_len = o.max_eval_len;
    cfg.validate();
    IdealEngine engine = make_engine(o);
    ProbeContext ctx;
    ctx.engine = &engine;
    const RunReport r = run_claims(o.claims, cfg, ctx);
    if (o.json_out) {
        print_json(to_json(r));
    } else {
        std::cout << render_text(r);
    }
    return r.exit_code();
}

int cmd_word(const Options& o) {
    std::vector<Word> words;
    if (o.level > 0) {
        words = derived_sample(o.level, static_cast<std::size_t>(o.samples), o.seed,
                               static_cast<std::size_t>(o.base_len), o.k);
    } else {
        words.push_back(parse_word(o.input, o.k));
    }
    json arr = json::array();
    for (const Word& w : words) {
        arr.push_back({{"word", w.str()}, {"length", w.length()}, {"exponent_sums", exponent_sums(w, o.k)}});
    }
    if (o.json_out) {
        print_json(arr);
    } else {
        for (const json& e : arr) {
            const std::string s = e["word"].get<std::string>();
            std::cout << (s.empty() ? "1" : s) << "  length " << e["length"].get<std::size_t>() << "  sums "
                      << e["exponent_sums"].dump() << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Laurent matrix groups and cyclotomic ideal membership"};
    app.require_subcommand(1);

    auto add_common = [&o](CLI::App* c) {
        c->add_option("--q", o.q, "prime power exponent");
        c->add_option("--k", o.k, "number of generators")->check(CLI::Range(1, 4));
        c->add_option("--d-unit", o.d_unit, "max unit exponent")->check(CLI::NonNegativeNumber);
        c->add_option("--d-shift", o.d_shift, "max shift exponent")->check(CLI::NonNegativeNumber);
        c->add_option("--window", o.window, "max support exponent")->check(CLI::Range(1, 64));
        c->add_flag("--auto-grow", o.auto_grow, "escalate through the default box schedule");
        c->add_option("--seed", o.seed, "sampling seed");
        c->add_option("--samples", o.samples, "sample count");
        c->add_option("--n-max", o.n_max, "derived-depth cap");
        c->add_option("--cache-dir", o.cache_dir, "lattice cache directory");
        c->add_flag("--json", o.json_out, "JSON output");
    };

    auto* eval = app.add_subcommand("eval", "evaluate a word as a matrix");
    add_common(eval);
    eval->add_option("word", o.input, "word, e.g. [a,b]^2")->required();
    eval->add_option("--ring", o.ring, "R or Rt")->check(CLI::IsMember({"R", "Rt"}));

    auto* mem = app.add_subcommand("member", "test ideal membership of a polynomial");
    add_common(mem);
    mem->add_option("poly", o.input, "polynomial, e.g. (1-x)*(1-y)")->required();
    mem->add_option("--ideal", o.ideal, "iq, jq or sigma^m");

    auto* red = app.add_subcommand("reduce-t", "compare t -> 1 with evaluation over R");
    add_common(red);
    red->add_option("word", o.input, "word")->required();

    auto* bounds = app.add_subcommand("bounds", "class bound for q");
    add_common(bounds);

    auto* verify = app.add_subcommand("verify", "run claim checks");
    add_common(verify);
    verify->add_option("claims", o.claims, "claims to run (default all)");
    verify->add_option("--word-len", o.word_len, "max sampled word length");
    verify->add_option("--base-len", o.base_len, "base length of derived samples");
    verify->add_option("--commutator-len", o.commutator_len, "base length of sampled commutators");
    verify->add_option("--max-eval-len", o.max_eval_len, "longest derived-series word to evaluate");

    auto* word = app.add_subcommand("word", "reduce a word or sample derived-series words");
    add_common(word);
    word->add_option("word", o.input, "word");
    word->add_option("--level", o.level, "sample words from this derived level");
    word->add_option("--base-len", o.base_len, "base length of derived samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    for (CLI::App* c : {eval, mem, red, bounds, verify, word}) {
        if (c->count("--q") > 0) o.q_set = true;
    }

    try {
        if (*eval) return cmd_eval(o);
        if (*mem) return cmd_member(o);
        if (*red) return cmd_reduce_t(o);
        if (*bounds) return cmd_bounds(o);
        if (*verify) return cmd_verify(o);
        if (*word) return cmd_word(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
