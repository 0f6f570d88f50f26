#include "glgu/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace glgu::cache {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr char kMagic[8] = {'G', 'L', 'G', 'U', 'G', 'R', 'P', '\0'};

std::string header_descriptor(const GroupSpec& spec) {
  return spec.describe() + " | " + describe(group_ring(spec).descriptor());
}

template <class T>
void put(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& is) {
  T v{};
  if (!is.read(reinterpret_cast<char*>(&v), sizeof(T))) throw CacheError("truncated file");
  return v;
}

std::uint64_t ends_checksum(const std::vector<MatKey>& keys) {
  if (keys.empty()) return 0;
  const std::uint64_t h = fnv1a(&keys.front(), sizeof(MatKey));
  return fnv1a(&keys.back(), sizeof(MatKey), h);
}

std::optional<std::string> read_text(const fs::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<MatKey> rep_keys(const Group& G, const std::vector<Group::Index>& reps) {
  std::vector<MatKey> out;
  for (auto r : reps) out.push_back(G.keys()[r]);
  return out;
}

}  // namespace

std::optional<fs::path> resolve_dir(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv(kEnvVar); env && *env) return fs::path(env);
  return std::nullopt;
}

std::uint64_t fnv1a(const void* data, std::size_t size, std::uint64_t h) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string key(const GroupSpec& spec, std::optional<std::uint64_t> seed) {
  std::string text = header_descriptor(spec);
  if (seed) text += " seed=" + std::to_string(*seed);
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(text.data(), text.size());
  return os.str();
}

void write_group(const fs::path& file, const Group& G) {
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw CacheError("cannot write " + tmp.string());
    const std::string desc = header_descriptor(G.spec());
    os.write(kMagic, sizeof kMagic);
    put(os, kGroupFormatVersion);
    put(os, static_cast<std::uint32_t>(desc.size()));
    os.write(desc.data(), static_cast<std::streamsize>(desc.size()));
    put(os, static_cast<std::uint8_t>(G.kind()));
    put(os, static_cast<std::uint64_t>(G.order()));
    os.write(reinterpret_cast<const char*>(G.keys().data()),
             static_cast<std::streamsize>(G.keys().size() * sizeof(MatKey)));
    put(os, ends_checksum(G.keys()));
    if (!os) throw CacheError("write failed for " + tmp.string());
  }
  fs::rename(tmp, file);
}

Group read_group(const fs::path& file, const GroupSpec& spec) {
  std::ifstream is(file, std::ios::binary);
  if (!is) throw CacheError("cannot open " + file.string());
  char magic[sizeof kMagic];
  if (!is.read(magic, sizeof magic) || !std::equal(magic, magic + sizeof magic, kMagic))
    throw CacheError("bad magic");
  if (get<std::uint32_t>(is) != kGroupFormatVersion) throw CacheError("format version mismatch");
  const auto len = get<std::uint32_t>(is);
  if (len > 4096) throw CacheError("descriptor too long");
  std::string desc(len, '\0');
  if (!is.read(desc.data(), len)) throw CacheError("truncated file");
  if (desc != header_descriptor(spec)) throw CacheError("descriptor mismatch");
  if (get<std::uint8_t>(is) != static_cast<std::uint8_t>(spec.kind)) throw CacheError("kind mismatch");
  const auto order = get<std::uint64_t>(is);
  if (order != order_formula(spec.kind, spec.q(), spec.ell)) throw CacheError("order mismatch");
  std::vector<MatKey> keys(order);
  if (!is.read(reinterpret_cast<char*>(keys.data()), static_cast<std::streamsize>(order * sizeof(MatKey))))
    throw CacheError("truncated body");
  if (get<std::uint64_t>(is) != ends_checksum(keys)) throw CacheError("checksum mismatch");
  try {
    return Group::from_keys(spec, std::move(keys));
  } catch (const std::exception& e) {
    throw CacheError(std::string("invalid body: ") + e.what());
  }
}

fs::path Store::path_for(const GroupSpec& spec, const std::string& suffix, std::optional<std::uint64_t> seed) const {
  std::string name = std::string(to_string(spec.kind)) + "-" + std::string(glgu::to_string(spec.family)) + "-p" +
                     std::to_string(spec.p) + "-f" + std::to_string(spec.f) + "-l" + std::to_string(spec.ell) + "-" +
                     key(spec, seed) + suffix;
  return *dir_ / name;
}

void Store::write_text(const fs::path& file, const std::string& text) {
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) throw CacheError("cannot write " + tmp.string());
    os << text;
  }
  fs::rename(tmp, file);
}

Group Store::group(const GroupSpec& spec, std::uint64_t budget, Exec exec) {
  const std::uint64_t order = order_formula(spec.kind, spec.q(), spec.ell);
  if (order > budget) throw BudgetExceeded("enumeration of " + spec.describe(), order, budget);
  if (!dir_) return Group::enumerate(spec, budget, exec);
  fs::create_directories(*dir_);
  const fs::path file = path_for(spec, ".grp");
  if (fs::exists(file)) {
    try {
      return read_group(file, spec);
    } catch (const CacheError& e) {
      warn("cache entry " + file.filename().string() + " is damaged (" + e.what() + "); rebuilding");
    }
  }
  Group G = Group::enumerate(spec, budget, exec);
  write_group(file, G);
  return G;
}

GU2Classifier Store::gu2_labels(const Group& G, const ClassPartition& P) {
  if (!dir_) return GU2Classifier(G, P);
  fs::create_directories(*dir_);
  const fs::path file = path_for(G.spec(), ".labels.json");
  const auto reps = rep_keys(G, P.reps);
  if (auto text = read_text(file)) {
    try {
      const json j = json::parse(*text);
      if (j.at("descriptor") != header_descriptor(G.spec())) throw CacheError("descriptor mismatch");
      if (j.at("classReps").get<std::vector<MatKey>>() != reps) throw CacheError("class ordering mismatch");
      std::vector<GU2ClassRep> labels;
      std::vector<std::string> hits;
      for (const auto& c : j.at("labels")) {
        GU2ClassRep l;
        l.tag = c.at("tag").get<std::string>().at(0);
        l.i = c.at("i").get<unsigned>();
        l.beta = c.at("beta").get<Code>();
        l.x = c.at("x").get<Code>();
        l.y = c.at("y").get<Code>();
        labels.push_back(l);
        hits.push_back(c.at("hits").get<std::string>());
      }
      return GU2Classifier::restore(G, P, std::move(labels), std::move(hits), j.at("tuples").get<std::size_t>());
    } catch (const std::exception& e) {
      warn("cache entry " + file.filename().string() + " is damaged (" + e.what() + "); rebuilding");
    }
  }
  GU2Classifier C(G, P);
  json j;
  j["descriptor"] = header_descriptor(G.spec());
  j["classReps"] = reps;
  j["tuples"] = C.tuples_tested();
  j["labels"] = json::array();
  for (std::uint32_t c = 0; c < P.count(); ++c) {
    const auto& l = C.class_label(c);
    j["labels"].push_back({{"tag", std::string(1, l.tag)}, {"i", l.i}, {"beta", l.beta}, {"x", l.x}, {"y", l.y},
                           {"hits", C.tags_hitting(c)}});
  }
  write_text(file, j.dump());
  return C;
}

CharTable Store::character_table(const Group& G, const ClassData& data, std::uint64_t seed) {
  if (!dir_) {
    CharTable t = glgu::character_table(data, seed);
    fs_indicators(t, data);
    return t;
  }
  fs::create_directories(*dir_);
  const fs::path file = path_for(G.spec(), ".chartab.json", seed);
  const auto reps = rep_keys(G, data.reps);
  if (auto text = read_text(file)) {
    try {
      const json j = json::parse(*text);
      if (j.at("descriptor") != header_descriptor(G.spec())) throw CacheError("descriptor mismatch");
      if (j.at("seed").get<std::uint64_t>() != seed) throw CacheError("seed mismatch");
      if (j.at("classReps").get<std::vector<MatKey>>() != reps) throw CacheError("class ordering mismatch");
      CharTable t;
      t.modulus = j.at("modulus");
      t.zeta = j.at("zeta");
      t.exponent = j.at("exponent");
      t.primes_tried = j.at("primesTried");
      t.values = j.at("values").get<std::vector<std::vector<std::uint64_t>>>();
      t.degrees = j.at("degrees").get<std::vector<std::uint64_t>>();
      t.real_valued = j.at("realValued").get<std::vector<char>>();
      const auto fs_stored = j.at("fs").get<std::vector<int>>();
      if (t.exponent != data.exponent || t.degrees.size() != t.values.size())
        throw CacheError("inconsistent table shape");
      if (!is_prime(t.modulus) || t.modulus % t.exponent != 1) throw CacheError("bad modulus");
      for (const auto& row : t.values)
        if (row.size() != data.count()) throw CacheError("inconsistent table shape");
      if (auto why = orthogonality_failure(t, data)) throw CacheError(*why);
      fs_indicators(t, data);
      if (t.fs != fs_stored) throw CacheError("stored indicators disagree with the table");
      t.types.assign(t.count(), std::nullopt);
      t.tangible.assign(t.count(), std::nullopt);
      return t;
    } catch (const std::exception& e) {
      warn("cache entry " + file.filename().string() + " is damaged (" + e.what() + "); rebuilding");
    }
  }
  CharTable t = glgu::character_table(data, seed);
  fs_indicators(t, data);
  json j;
  j["descriptor"] = header_descriptor(G.spec());
  j["seed"] = seed;
  j["modulus"] = t.modulus;
  j["zeta"] = t.zeta;
  j["exponent"] = t.exponent;
  j["primesTried"] = t.primes_tried;
  j["classReps"] = reps;
  j["degrees"] = t.degrees;
  j["values"] = t.values;
  j["fs"] = t.fs;
  j["realValued"] = t.real_valued;
  write_text(file, j.dump());
  return t;
}

}  // namespace glgu::cache
