#include "scoreseq/cache.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "scoreseq/errors.hpp"

namespace scoreseq {

namespace {

std::size_t expected_length(SequenceKind kind, unsigned n_max) {
  return kind == SequenceKind::egz ? n_max : n_max + 1;
}

}  // namespace

std::string kind_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::egz:
      return "egz";
    case SequenceKind::scores:
      return "scores";
    case SequenceKind::strong:
      return "strong";
  }
  return "unknown";
}

std::optional<SequenceKind> parse_kind(const std::string& name) {
  if (name == "egz") return SequenceKind::egz;
  if (name == "scores") return SequenceKind::scores;
  if (name == "strong") return SequenceKind::strong;
  return std::nullopt;
}

std::string values_checksum(const std::vector<std::string>& values) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 unavailable");
  }
  for (const auto& v : values) {
    EVP_DigestUpdate(ctx.get(), v.data(), v.size());
    EVP_DigestUpdate(ctx.get(), "\n", 1);
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &length);
  std::ostringstream hex;
  for (unsigned i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

CacheFile CacheFile::make(SequenceKind kind, unsigned n_max, const std::vector<BigInt>& values) {
  CacheFile file;
  file.kind = kind;
  file.n_max = n_max;
  file.values.reserve(values.size());
  for (const auto& v : values) file.values.push_back(v.get_str());
  file.checksum = values_checksum(file.values);
  return file;
}

std::string CacheFile::to_json() const {
  nlohmann::json doc = {{"version", version},
                        {"kind", kind_name(kind)},
                        {"n_max", n_max},
                        {"values", values},
                        {"checksum", checksum}};
  return doc.dump() + "\n";
}

CacheFile CacheFile::from_json(const std::string& text) {
  try {
    auto doc = nlohmann::json::parse(text);
    CacheFile file;
    file.version = doc.at("version").get<int>();
    auto kind = parse_kind(doc.at("kind").get<std::string>());
    if (!kind) throw DomainError("cache file: unknown kind");
    file.kind = *kind;
    file.n_max = doc.at("n_max").get<unsigned>();
    file.values = doc.at("values").get<std::vector<std::string>>();
    file.checksum = doc.at("checksum").get<std::string>();
    return file;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("cache file: ") + e.what());
  }
}

bool CacheFile::checksum_valid() const { return values_checksum(values) == checksum; }

std::vector<BigInt> CacheFile::big_values() const {
  std::vector<BigInt> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    BigInt parsed;
    if (parsed.set_str(v, 10) != 0) throw DomainError("cache file: malformed integer " + v);
    out.push_back(std::move(parsed));
  }
  return out;
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv("SCORESEQ_CACHE_DIR"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

SequenceCache::SequenceCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

std::filesystem::path SequenceCache::path_for(SequenceKind kind) const {
  if (!dir_) throw DomainError("cache disabled");
  return *dir_ / (kind_name(kind) + ".json");
}

std::vector<BigInt> SequenceCache::get(SequenceKind kind, unsigned n_max, const Compute& compute) {
  last_hit_ = false;
  if (!dir_) return compute(n_max);
  const auto path = path_for(kind);
  std::ifstream in(path);
  if (in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      CacheFile file = CacheFile::from_json(buffer.str());
      if (file.version == CacheFile::kVersion && file.kind == kind && file.n_max >= n_max &&
          file.values.size() == expected_length(kind, file.n_max) && file.checksum_valid()) {
        std::vector<BigInt> values = file.big_values();
        values.resize(expected_length(kind, n_max));
        last_hit_ = true;
        return values;
      }
    } catch (const DomainError&) {
      // unreadable cache: fall through to recompute
    }
  }
  std::vector<BigInt> values = compute(n_max);
  std::filesystem::create_directories(*dir_);
  std::ofstream out(path, std::ios::trunc);
  out << CacheFile::make(kind, n_max, values).to_json();
  return values;
}

}  // namespace scoreseq
