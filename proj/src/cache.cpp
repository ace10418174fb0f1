#include "demkit/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

namespace demkit {

namespace fs = std::filesystem;

namespace {

const char* kind_name(CacheKind k) {
  switch (k) {
  case CacheKind::demazure:
    return "demazure";
  case CacheKind::weyl:
    return "weyl";
  case CacheKind::affine_truncated:
    return "affine-truncated";
  }
  return "unknown";
}

bool graded_kind(CacheKind k) { return k != CacheKind::weyl; }

std::string weight_token(const Weight& w) {
  std::string out = "w";
  bool first = true;
  for (auto c : w) {
    if (!first)
      out += '_';
    first = false;
    out += std::to_string(c);
  }
  return out;
}

} // namespace

fs::path CacheKey::relative_path() const {
  fs::path p = "v" + std::to_string(format_version);
  p /= system;
  p /= kind_name(kind);
  std::string leaf;
  if (kind != CacheKind::weyl)
    leaf += "L" + std::to_string(level) + "-";
  if (kind == CacheKind::affine_truncated)
    leaf += "G" + std::to_string(truncation) + "-";
  leaf += weight_token(weight) + ".jsonl";
  return p / leaf;
}

fs::path resolve_cache_dir(const std::optional<std::string>& explicit_dir) {
  if (explicit_dir && !explicit_dir->empty())
    return *explicit_dir;
  if (const char* env = std::getenv("DEMKIT_CACHE"); env && *env)
    return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return fs::path(xdg) / "demkit";
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".cache" / "demkit";
  return fs::temp_directory_path() / "demkit-cache";
}

std::optional<GradedCharacter> Cache::load(const CacheKey& key) const {
  std::ifstream in(root_ / key.relative_path());
  if (!in)
    return std::nullopt;
  try {
    CharacterFile f = read_character(in);
    if (f.system->name() != key.system || f.graded != graded_kind(key.kind))
      return std::nullopt;
    return std::move(f.terms);
  } catch (const FormatError&) {
    return std::nullopt;
  }
}

void Cache::write_atomically(const CacheKey& key, const std::string& content) const {
  static std::atomic<unsigned> counter{0};
  const fs::path target = root_ / key.relative_path();
  fs::create_directories(target.parent_path());
  const fs::path temp = target.parent_path() / (".tmp-" + std::to_string(::getpid()) + "-" +
                                                std::to_string(counter++) + "-" + target.filename().string());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out)
      throw std::runtime_error("cannot write cache entry " + temp.string());
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw std::runtime_error("cannot install cache entry " + target.string());
  }
}

void Cache::store(const CacheKey& key, const GradedCharacter& x) const {
  std::ostringstream os;
  write_character(os, x);
  write_atomically(key, os.str());
}

void Cache::store(const CacheKey& key, const Character& x) const {
  std::ostringstream os;
  write_character(os, x);
  write_atomically(key, os.str());
}

std::size_t Cache::entries() const {
  const fs::path base = root_ / ("v" + std::to_string(cache_format_version));
  std::error_code ec;
  if (!fs::is_directory(base, ec))
    return 0;
  std::size_t n = 0;
  for (auto it = fs::recursive_directory_iterator(base, ec); !ec && it != fs::recursive_directory_iterator();
       it.increment(ec)) {
    const auto& p = it->path();
    if (it->is_regular_file() && p.extension() == ".jsonl" && p.filename().string().rfind(".tmp-", 0) != 0)
      ++n;
  }
  return n;
}

void Cache::clear() const {
  std::error_code ec;
  if (!fs::is_directory(root_, ec))
    return;
  for (const auto& entry : fs::directory_iterator(root_, ec)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_directory() && name.size() > 1 && name[0] == 'v' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos)
      fs::remove_all(entry.path());
  }
}

} // namespace demkit
