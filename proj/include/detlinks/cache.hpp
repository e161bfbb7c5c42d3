#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "detlinks/polar.hpp"

namespace detlinks {

/// Persistent store of polar profiles as JSON:
///   {"version": 1, "entries": {"m,n,r": {"values": ["6", ...], "raw_signs": [-1, ...]}}}
/// Integers are decimal strings so they survive any JSON reader unchanged.
class ProfileCache {
 public:
  static constexpr int kVersion = 1;
  static constexpr const char* kFileName = "polar_profiles.json";

  explicit ProfileCache(std::filesystem::path file) : file_(std::move(file)) {}

  /// $DETLINKS_CACHE, else $XDG_CACHE_HOME/detlinks, else ~/.cache/detlinks.
  static std::filesystem::path default_dir();
  static std::filesystem::path default_file() { return default_dir() / kFileName; }

  const std::filesystem::path& file() const { return file_; }

  /// Reads the file. A missing file is an empty cache; an unreadable,
  /// malformed or outdated file is dropped as a whole and reported through
  /// the returned warning.
  std::optional<std::string> load();
  /// Writes through a temporary file and rename. Returns an error message
  /// instead of throwing.
  std::optional<std::string> store();
  /// Removes the file; returns an error message on failure.
  std::optional<std::string> remove_file();

  std::optional<PolarProfile> find(int m, int n, int r) const;
  void put(const PolarProfile& p);
  const std::map<std::tuple<int, int, int>, PolarProfile>& entries() const { return entries_; }
  bool dirty() const { return dirty_; }

  static std::string key(int m, int n, int r);
  static std::string serialize(const std::map<std::tuple<int, int, int>, PolarProfile>& entries);
  /// Throws InvalidArgument on any structural or numeric defect.
  static std::map<std::tuple<int, int, int>, PolarProfile> parse(const std::string& text);

 private:
  std::filesystem::path file_;
  std::map<std::tuple<int, int, int>, PolarProfile> entries_;
  bool dirty_ = false;
};

/// Couples the on-disk cache with the in-process memo for one CLI run.
class ProfileStore {
 public:
  ProfileStore(ProfileCache* cache, bool verify) : cache_(cache), verify_(verify) {}

  /// Makes every requested profile available through polar_profile():
  /// cached ones are seeded (after recomputation when verifying, throwing
  /// ConsistencyError on a mismatch), the rest are computed in parallel.
  void prepare(const std::vector<std::tuple<int, int, int>>& needed);

  /// Copies every memoized profile into the cache and writes it if changed.
  std::optional<std::string> flush();

 private:
  ProfileCache* cache_;
  bool verify_;
};

}  // namespace detlinks
