#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scoreseq/exact.hpp"

namespace scoreseq {

// Cached sequences. Index ranges:
//   egz     N_1..N_{n_max}         (n_max values)
//   scores  S_0..S_{n_max}         (n_max + 1 values)
//   strong  S_{0,1}..S_{n_max,1}   (n_max + 1 values)
enum class SequenceKind { egz, scores, strong };

std::string kind_name(SequenceKind kind);
std::optional<SequenceKind> parse_kind(const std::string& name);

/// On-disk cache document:
///   {"version": 1, "kind": "scores", "n_max": 12,
///    "values": ["1", "1", ...], "checksum": "<hex>"}
/// The checksum is the lowercase hex SHA-256 of the values, each followed by
/// a single '\n', concatenated in order.
struct CacheFile {
  static constexpr int kVersion = 1;

  int version = kVersion;
  SequenceKind kind = SequenceKind::egz;
  unsigned n_max = 0;
  std::vector<std::string> values;
  std::string checksum;

  static CacheFile make(SequenceKind kind, unsigned n_max, const std::vector<BigInt>& values);

  std::string to_json() const;
  // Throws DomainError on malformed documents (not on checksum mismatch).
  static CacheFile from_json(const std::string& text);

  bool checksum_valid() const;
  std::vector<BigInt> big_values() const;
};

std::string values_checksum(const std::vector<std::string>& values);

// --cache-dir wins over SCORESEQ_CACHE_DIR; neither means no caching.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

/// Loads sequences from the cache directory or computes and stores them.
/// Files that are unreadable, corrupted, of another version, or too short
/// are recomputed and overwritten.
class SequenceCache {
 public:
  using Compute = std::function<std::vector<BigInt>(unsigned n_max)>;

  explicit SequenceCache(std::optional<std::filesystem::path> dir);

  std::vector<BigInt> get(SequenceKind kind, unsigned n_max, const Compute& compute);

  std::filesystem::path path_for(SequenceKind kind) const;
  bool enabled() const { return dir_.has_value(); }
  // Whether the most recent get() was served from disk.
  bool last_was_hit() const { return last_hit_; }

 private:
  std::optional<std::filesystem::path> dir_;
  bool last_hit_ = false;
};

}  // namespace scoreseq
