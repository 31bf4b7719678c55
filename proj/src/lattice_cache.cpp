#include "bf/lattice_cache.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>

namespace bf {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json spec_json(const IdealSpec& s) {
    switch (s.kind) {
        case IdealKind::SigmaPow: return {{"kind", "sigma"}, {"m", s.m}};
        case IdealKind::Iq: return {{"kind", "iq"}, {"q", s.q}};
        case IdealKind::Jq: return {{"kind", "jq"}, {"q", s.q}};
    }
    return {};
}

json box_json(const Box& b) { return {{"d_unit", b.d_unit}, {"d_shift", b.d_shift}, {"window", b.window}}; }

json sparse_json(const SparseVec<Integer>& v) {
    json arr = json::array();
    for (const auto& [i, x] : v) arr.push_back(json::array({i, x.str()}));
    return arr;
}

SparseVec<Integer> sparse_from(const json& arr) {
    SparseVec<Integer> v;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2) throw ParseError("sparse entry must be [index, value]");
        v.emplace_back(e.at(0).get<std::uint32_t>(), parse_integer(e.at(1).get<std::string>()));
    }
    return v;
}

}  // namespace

std::string cache_file_name(const IdealSpec& spec, const Box& box) {
    return "lattice-" + spec.without_t().key() + "-" + box.key() + "-v" + std::to_string(kLatticeFormatVersion) +
           ".json";
}

json lattice_to_json(const LatticeBasis& lb) {
    json j;
    j["format_version"] = lb.format_version;
    j["spec"] = spec_json(lb.spec);
    j["box"] = box_json(lb.box);
    json idx = json::array();
    for (const auto& e : lb.monomial_index) idx.push_back(json::array({e[0], e[1]}));
    j["monomial_index"] = std::move(idx);
    json cols = json::array();
    for (const auto& c : lb.columns) cols.push_back(json::array({c.generator, c.shift[0], c.shift[1]}));
    j["columns"] = std::move(cols);
    j["discarded"] = lb.discarded;
    json h = json::array();
    for (const auto& v : lb.hnf.vectors) h.push_back(sparse_json(v));
    j["hnf_matrix"] = std::move(h);
    json t = json::array();
    for (const auto& v : lb.hnf.combos) t.push_back(sparse_json(v));
    j["transform"] = std::move(t);
    return j;
}

std::optional<LatticeBasis> lattice_from_json(const json& j, const IdealSpec& spec_in, const Box& box,
                                              std::string* why) {
    const IdealSpec spec = spec_in.without_t();
    auto reject = [why](const std::string& r) -> std::optional<LatticeBasis> {
        if (why) *why = r;
        return std::nullopt;
    };
    try {
        if (!j.is_object()) return reject("not a JSON object");
        if (j.at("format_version").get<int>() != kLatticeFormatVersion) return reject("format version mismatch");
        if (j.at("spec") != spec_json(spec)) return reject("ideal does not match the cache key");
        if (j.at("box") != box_json(box)) return reject("box does not match the cache key");
        LatticeBasis lb;
        lb.spec = spec;
        lb.box = box;
        lb.format_version = kLatticeFormatVersion;
        for (const auto& e : j.at("monomial_index")) {
            ExpVec v;
            v[0] = e.at(0).get<std::int32_t>();
            v[1] = e.at(1).get<std::int32_t>();
            lb.monomial_index.push_back(v);
        }
        lb.gens = generators(spec, box);
        for (const auto& c : j.at("columns")) {
            LatticeColumn col;
            col.generator = c.at(0).get<std::uint32_t>();
            if (col.generator >= lb.gens.size()) return reject("column refers to an unknown generator");
            col.shift[0] = c.at(1).get<std::int32_t>();
            col.shift[1] = c.at(2).get<std::int32_t>();
            lb.columns.push_back(col);
        }
        lb.discarded = j.at("discarded").get<std::size_t>();
        lb.hnf.dim = lb.monomial_index.size();
        for (const auto& v : j.at("hnf_matrix")) {
            lb.hnf.vectors.push_back(sparse_from(v));
            if (lb.hnf.vectors.back().empty()) return reject("zero basis vector");
            lb.hnf.pivots.push_back(lb.hnf.vectors.back().front().first);
        }
        for (const auto& v : j.at("transform")) lb.hnf.combos.push_back(sparse_from(v));
        if (!lattice_consistent(lb)) return reject("basis fails the HNF and transform checks");
        return lb;
    } catch (const std::exception& e) {
        return reject(std::string("malformed cache: ") + e.what());
    }
}

void cache_store(const std::string& dir, const LatticeBasis& lb, const WarningSink& warn) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path target = fs::path(dir) / cache_file_name(lb.spec, lb.box);
    const std::string lock = target.string() + ".lock";
    const int fd = ::open(lock.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
    if (fd < 0) {
        if (warn) warn("lattice cache " + target.string() + " is locked by another writer; not storing");
        return;
    }
    ::close(fd);
    const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        out << lattice_to_json(lb).dump();
        if (!out) {
            if (warn) warn("could not write lattice cache " + tmp.string());
        }
    }
    fs::rename(tmp, target, ec);
    if (ec && warn) warn("could not move lattice cache into place: " + ec.message());
    fs::remove(lock, ec);
}

std::optional<LatticeBasis> cache_load(const std::string& dir, const IdealSpec& spec, const Box& box,
                                       const WarningSink& warn) {
    const fs::path target = fs::path(dir) / cache_file_name(spec, box);
    std::error_code ec;
    if (!fs::exists(target, ec)) return std::nullopt;
    std::string why;
    std::ifstream in(target);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) {
        why = "unparseable JSON";
    } else if (auto lb = lattice_from_json(j, spec, box, &why)) {
        return lb;
    }
    if (warn) warn("lattice cache " + target.string() + " rejected (" + why + "); rebuilding");
    return std::nullopt;
}

}  // namespace bf
