#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "scoreseq/cache.hpp"
#include "scoreseq/egz.hpp"
#include "scoreseq/errors.hpp"

using namespace scoreseq;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  std::random_device rd;
  fs::path dir = fs::temp_directory_path() / ("scoreseq_cache_" + tag + "_" + std::to_string(rd()));
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("checksum is sha256 of newline-terminated values") {
  // printf '1\n1\n4\n' | sha256sum
  CHECK(values_checksum({"1", "1", "4"}) ==
        "249889e73c46d3ce2b1b34d1fd385d3b8774c484863496d662ac3e52cae5a095");
  CHECK(values_checksum({}) == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("cache file round trip") {
  CacheFile f = CacheFile::make(SequenceKind::egz, 3, {1, 1, 4});
  CacheFile g = CacheFile::from_json(f.to_json());
  CHECK(g.version == 1);
  CHECK(g.kind == SequenceKind::egz);
  CHECK(g.n_max == 3);
  CHECK(g.values == std::vector<std::string>{"1", "1", "4"});
  CHECK(g.checksum_valid());
  CHECK(g.big_values() == std::vector<BigInt>{1, 1, 4});

  g.values[2] = "5";
  CHECK_FALSE(g.checksum_valid());
  CHECK_THROWS_AS(CacheFile::from_json("{not json"), DomainError);
  CHECK_THROWS_AS(CacheFile::from_json(R"({"version":1,"kind":"bogus","n_max":1,"values":[],"checksum":""})"),
                  DomainError);
  CHECK(parse_kind("strong") == SequenceKind::strong);
  CHECK_FALSE(parse_kind("nope").has_value());
}

TEST_CASE("sequence cache reuse and recovery") {
  fs::path dir = fresh_dir("reuse");
  int computed = 0;
  auto compute = [&](unsigned n) {
    ++computed;
    return egz_table(n).values();
  };

  SequenceCache cache(dir);
  auto first = cache.get(SequenceKind::egz, 30, compute);
  CHECK(computed == 1);
  CHECK_FALSE(cache.last_was_hit());
  CHECK(fs::exists(cache.path_for(SequenceKind::egz)));

  // prefix served from disk
  auto prefix = cache.get(SequenceKind::egz, 10, compute);
  CHECK(computed == 1);
  CHECK(cache.last_was_hit());
  CHECK(prefix == std::vector<BigInt>(first.begin(), first.begin() + 10));

  // a longer request recomputes
  cache.get(SequenceKind::egz, 40, compute);
  CHECK(computed == 2);

  // corrupt one value; checksum forces recomputation
  fs::path path = cache.path_for(SequenceKind::egz);
  std::string text = slurp(path);
  auto pos = text.find("\"76\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 4, "\"77\"");
  std::ofstream(path, std::ios::trunc) << text;
  auto recovered = cache.get(SequenceKind::egz, 40, compute);
  CHECK(computed == 3);
  CHECK(recovered == egz_table(40).values());
  CHECK(CacheFile::from_json(slurp(path)).checksum_valid());

  // garbage file
  std::ofstream(path, std::ios::trunc) << "garbage";
  CHECK(cache.get(SequenceKind::egz, 5, compute) == egz_table(5).values());
  CHECK(computed == 4);

  SequenceCache off(std::nullopt);
  CHECK_FALSE(off.enabled());
  off.get(SequenceKind::egz, 5, compute);
  CHECK(computed == 5);
  fs::remove_all(dir);
}

TEST_CASE("cache directory resolution") {
  ::setenv("SCORESEQ_CACHE_DIR", "/tmp/from_env", 1);
  CHECK(resolve_cache_dir(std::nullopt) == fs::path("/tmp/from_env"));
  CHECK(resolve_cache_dir(std::string("/tmp/flag")) == fs::path("/tmp/flag"));
  ::unsetenv("SCORESEQ_CACHE_DIR");
  CHECK_FALSE(resolve_cache_dir(std::nullopt).has_value());
}
