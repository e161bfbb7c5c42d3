#include "detlinks/cache.hpp"

#include <cstdlib>
#include <exception>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "detlinks/errors.hpp"

namespace detlinks {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path ProfileCache::default_dir() {
  if (const char* dir = std::getenv("DETLINKS_CACHE"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "detlinks";
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".cache" / "detlinks";
  return fs::temp_directory_path() / "detlinks";
}

std::string ProfileCache::key(int m, int n, int r) {
  return std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r);
}

std::string ProfileCache::serialize(const std::map<std::tuple<int, int, int>, PolarProfile>& entries) {
  json doc;
  doc["version"] = kVersion;
  doc["entries"] = json::object();
  for (auto& [k, p] : entries) {
    json values = json::array();
    for (auto& v : p.values) values.push_back(v.get_str());
    doc["entries"][key(p.m, p.n, p.r)] = {{"values", values}, {"raw_signs", p.raw_signs}};
  }
  return doc.dump(1) + "\n";
}

std::map<std::tuple<int, int, int>, PolarProfile> ProfileCache::parse(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("version") || doc["version"] != kVersion)
    throw InvalidArgument("missing or unsupported version");
  if (!doc.contains("entries") || !doc["entries"].is_object())
    throw InvalidArgument("missing entries object");

  std::map<std::tuple<int, int, int>, PolarProfile> out;
  for (auto& [k, entry] : doc["entries"].items()) {
    PolarProfile p;
    char c1 = 0, c2 = 0;
    std::istringstream ks(k);
    if (!(ks >> p.m >> c1 >> p.n >> c2 >> p.r) || c1 != ',' || c2 != ',' || !ks.eof() ||
        key(p.m, p.n, p.r) != k)
      throw InvalidArgument("malformed key '" + k + "'");
    validate_polar(p.m, p.n, p.r);
    if (!entry.is_object() || !entry.contains("values") || !entry.contains("raw_signs") ||
        !entry["values"].is_array() || !entry["raw_signs"].is_array())
      throw InvalidArgument("entry " + k + " lacks values or raw_signs");
    for (auto& v : entry["values"]) {
      if (!v.is_string()) throw InvalidArgument("entry " + k + " has a non-string value");
      const std::string digits = v.get<std::string>();
      BigInt x;
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
          x.set_str(digits, 10) != 0)
        throw InvalidArgument("entry " + k + " has a malformed integer '" + digits + "'");
      p.values.push_back(x);
    }
    for (auto& s : entry["raw_signs"]) {
      if (!s.is_number_integer() || s.get<int>() < -1 || s.get<int>() > 1)
        throw InvalidArgument("entry " + k + " has a malformed sign");
      p.raw_signs.push_back(s.get<int>());
    }
    if (p.top() != polar_top(p.m, p.n, p.r) || p.raw_signs.size() != p.values.size())
      throw InvalidArgument("entry " + k + " has the wrong length");
    out[{p.m, p.n, p.r}] = std::move(p);
  }
  return out;
}

std::optional<std::string> ProfileCache::load() {
  entries_.clear();
  dirty_ = false;
  std::error_code ec;
  if (!fs::exists(file_, ec)) return std::nullopt;
  std::ifstream in(file_);
  if (!in) return "cannot read cache " + file_.string() + "; ignoring it";
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    entries_ = parse(buf.str());
  } catch (const std::exception& e) {
    return "ignoring cache " + file_.string() + ": " + e.what();
  }
  return std::nullopt;
}

std::optional<std::string> ProfileCache::store() {
  std::error_code ec;
  fs::create_directories(file_.parent_path(), ec);
  if (ec) return "cannot create " + file_.parent_path().string() + ": " + ec.message();
  const fs::path tmp = file_.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << serialize(entries_);
    if (!out) return "cannot write " + tmp.string();
  }
  fs::rename(tmp, file_, ec);
  if (ec) return "cannot replace " + file_.string() + ": " + ec.message();
  dirty_ = false;
  return std::nullopt;
}

std::optional<std::string> ProfileCache::remove_file() {
  std::error_code ec;
  fs::remove(file_, ec);
  entries_.clear();
  dirty_ = false;
  if (ec) return "cannot remove " + file_.string() + ": " + ec.message();
  return std::nullopt;
}

std::optional<PolarProfile> ProfileCache::find(int m, int n, int r) const {
  auto it = entries_.find({m, n, r});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ProfileCache::put(const PolarProfile& p) {
  auto& slot = entries_[{p.m, p.n, p.r}];
  if (slot == p) return;
  slot = p;
  dirty_ = true;
}

void ProfileStore::prepare(const std::vector<std::tuple<int, int, int>>& needed) {
  std::vector<std::tuple<int, int, int>> missing;
  for (auto& [m, n, r] : needed) {
    auto cached = cache_ ? cache_->find(m, n, r) : std::nullopt;
    if (!cached) {
      missing.emplace_back(m, n, r);
      continue;
    }
    if (verify_ && compute_polar_profile(m, n, r) != *cached)
      throw ConsistencyError("cached profile " + ProfileCache::key(m, n, r) +
                             " does not match recomputation");
    seed_polar_profile(*cached);
  }

  std::exception_ptr failure;
  const long count = static_cast<long>(missing.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      auto [m, n, r] = missing[static_cast<std::size_t>(i)];
      polar_profile(m, n, r);
    } catch (...) {
#pragma omp critical(detlinks_store_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::optional<std::string> ProfileStore::flush() {
  if (!cache_) return std::nullopt;
  for (auto& p : memoized_polar_profiles()) cache_->put(p);
  if (!cache_->dirty()) return std::nullopt;
  return cache_->store();
}

}  // namespace detlinks
