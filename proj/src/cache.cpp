#include "verify/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace verify {

namespace fs = std::filesystem;
using nlohmann::json;

const char* kToolVersion = "0.1.0";

std::string resolve_cache_dir(const std::string& explicit_dir) {
  if (!explicit_dir.empty()) return explicit_dir;
  const char* env = std::getenv("VERIFY_CACHE_DIR");
  if (env != nullptr && env[0] != '\0') return env;
  return "cache";
}

DiskCache::DiskCache(std::string root) : root_(std::move(root)) {}

namespace {

std::optional<json> read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  return j;
}

json poly_to_json(const PolyZ& p) {
  json coeffs = json::array();
  for (const auto& [c, e] : p.terms()) coeffs.push_back(json::array({c, e}));
  return coeffs;
}

PolyZ poly_from_json(const json& coeffs) {
  std::vector<std::pair<long long, long long>> terms;
  for (const auto& t : coeffs)
    terms.emplace_back(t.at(0).get<long long>(), t.at(1).get<long long>());
  return PolyZ::from_terms(terms);
}

json ivec_to_json(const IVec& v) {
  json out = json::array();
  for (long long x : v) out.push_back(x);
  return out;
}

IVec ivec_from_json(const json& j) {
  IVec out;
  for (const auto& x : j) out.push_back(x.get<long long>());
  return out;
}

json mat_to_json(const RatMat& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(rat_to_string(v));
    out.push_back(r);
  }
  return out;
}

RatMat mat_from_json(const json& j) {
  RatMat out;
  for (const auto& row : j) {
    RatVec r;
    for (const auto& v : row) r.push_back(Rat(v.get<std::string>()));
    out.push_back(r);
  }
  return out;
}

}  // namespace

std::string DiskCache::kl_path(const std::string& type, const std::string& y,
                               const std::string& w) const {
  std::string key = std::string(kToolVersion) + "|kl|" + type + "|" + y + "|" + w;
  return root_ + "/kl/" + type + "/" + fnv64_hex(key) + ".json";
}

std::string DiskCache::irrep_path(const std::string& type, const IVec& lambda) const {
  return root_ + "/irrep/" + type + "/" + ivec_to_string(lambda) + ".json";
}

void DiskCache::write_text(const std::string& path, const std::string& text) const {
  fs::path p(path);
  std::error_code ec;
  fs::create_directories(p.parent_path(), ec);
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    require(bool(out), "cannot write cache file: " + path);
    out << text;
  }
  fs::rename(tmp, p, ec);
  require(!ec, "cannot finalize cache file: " + path);
  ++stats.writes;
}

std::optional<PolyZ> DiskCache::load_kl(const std::string& type, const std::string& y,
                                        const std::string& w) const {
  auto j = read_json(kl_path(type, y, w));
  if (j && j->value("version", "") == kToolVersion && j->value("type", "") == type &&
      j->value("y", "") == y && j->value("w", "") == w && j->contains("coeffs")) {
    ++stats.hits;
    return poly_from_json((*j)["coeffs"]);
  }
  ++stats.misses;
  return std::nullopt;
}

void DiskCache::store_kl(const std::string& type, const std::string& y, const std::string& w,
                         const PolyZ& p) const {
  json j;
  j["version"] = kToolVersion;
  j["type"] = type;
  j["y"] = y;
  j["w"] = w;
  j["coeffs"] = poly_to_json(p);
  write_text(kl_path(type, y, w), j.dump());
}

std::optional<HWModule> DiskCache::load_module(const ChevalleyAlgebra& g,
                                               const IVec& lambda) const {
  auto j = read_json(irrep_path(g.d.cartan_type, lambda));
  if (!j || j->value("version", "") != kToolVersion ||
      j->value("type", "") != g.d.cartan_type || !j->contains("lambda") ||
      ivec_from_json((*j)["lambda"]) != lambda) {
    ++stats.misses;
    return std::nullopt;
  }
  try {
    std::map<IVec, HWModule::WtSpace> spaces;
    for (const auto& sj : j->at("spaces")) {
      HWModule::WtSpace sp;
      sp.mu = ivec_from_json(sj.at("mu"));
      sp.dim = sj.at("dim").get<int>();
      for (const auto& mon : sj.at("basis")) {
        Mon m;
        for (const auto& x : mon) m.push_back(x.get<int>());
        sp.basis.push_back(m);
      }
      sp.gram = mat_from_json(sj.at("gram"));
      spaces.emplace(sp.mu, std::move(sp));
    }
    auto tables = [&](const char* name) {
      std::vector<std::map<IVec, RatMat>> out(g.d.rank);
      const json& arr = j->at(name);
      require(static_cast<int>(arr.size()) == g.d.rank, "action table arity mismatch");
      for (int i = 0; i < g.d.rank; ++i)
        for (const auto& ej : arr.at(i))
          out[i].emplace(ivec_from_json(ej.at("mu")), mat_from_json(ej.at("m")));
      return out;
    };
    HWModule M(g, lambda, std::move(spaces), tables("e"), tables("f"));
    ++stats.hits;
    return M;
  } catch (const std::exception&) {
    ++stats.misses;
    return std::nullopt;
  }
}

void DiskCache::store_module(const HWModule& M) const {
  json j;
  j["version"] = kToolVersion;
  j["type"] = M.g.d.cartan_type;
  j["lambda"] = ivec_to_json(M.lambda);
  j["dim"] = M.dim();
  json spaces = json::array();
  for (const auto& [mu, sp] : M.spaces()) {
    json sj;
    sj["mu"] = ivec_to_json(mu);
    sj["dim"] = sp.dim;
    json basis = json::array();
    for (const Mon& m : sp.basis) {
      json mon = json::array();
      for (int x : m) mon.push_back(x);
      basis.push_back(mon);
    }
    sj["basis"] = basis;
    sj["gram"] = mat_to_json(sp.gram);
    spaces.push_back(sj);
  }
  j["spaces"] = spaces;
  for (const char* name : {"e", "f"}) {
    json arr = json::array();
    for (int i = 0; i < M.g.d.rank; ++i) {
      json per = json::array();
      for (const auto& [mu, sp] : M.spaces()) {
        (void)sp;
        json ej;
        ej["mu"] = ivec_to_json(mu);
        ej["m"] = mat_to_json(name[0] == 'e' ? M.e_matrix(i, mu) : M.f_matrix(i, mu));
        per.push_back(ej);
      }
      arr.push_back(per);
    }
    j[name] = arr;
  }
  write_text(irrep_path(M.g.d.cartan_type, M.lambda), j.dump());
}

PolyZ coset_kl_cached(const DiskCache* cache, const AffWeyl& W, const IVec& lambda,
                      const IVec& mu) {
  AffWeylElt nl = W.double_coset_max(lambda);
  AffWeylElt nm = W.double_coset_max(mu);
  std::string y = W.to_string(nm);
  std::string w = W.to_string(nl);
  if (cache != nullptr) {
    if (auto hit = cache->load_kl(W.d.cartan_type, y, w)) return *hit;
  }
  PolyZ p = kl_polynomial(W, nm, nl);
  if (cache != nullptr) cache->store_kl(W.d.cartan_type, y, w, p);
  return p;
}

PolyZ costalk_cached(const DiskCache* cache, const AffWeyl& W, const IVec& lambda,
                     const IVec& mu) {
  require(W.d.is_dominant(lambda) && W.d.is_dominant(mu),
          "costalk series needs dominant labels");
  if (!W.d.in_root_lattice(ivec_sub(lambda, mu))) return PolyZ::zero();
  return costalk_from_kl(W, lambda, mu, coset_kl_cached(cache, W, lambda, mu));
}

HWModule module_cached(const DiskCache* cache, const ChevalleyAlgebra& g, const IVec& lambda) {
  if (cache != nullptr) {
    if (auto hit = cache->load_module(g, lambda)) return *hit;
  }
  HWModule M(g, lambda);
  if (cache != nullptr) cache->store_module(M);
  return M;
}

}  // namespace verify
