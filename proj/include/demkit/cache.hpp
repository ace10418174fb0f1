#ifndef DEMKIT_CACHE_HPP
#define DEMKIT_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "demkit/io.hpp"

namespace demkit {

inline constexpr int cache_format_version = 1;

enum class CacheKind { demazure, weyl, affine_truncated };

struct CacheKey {
  std::string system;
  CacheKind kind = CacheKind::demazure;
  int level = 0;
  Weight weight;
  int truncation = 0; // affine only
  int format_version = cache_format_version;

  /// v<version>/<system>/<kind>/... relative to the cache root.
  std::filesystem::path relative_path() const;
};

/// Resolution order: explicit directory, then $DEMKIT_CACHE, then
/// $XDG_CACHE_HOME/demkit, then ~/.cache/demkit.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& explicit_dir);

/*
  On-disk store of character files. Writes go to a temporary file in the
  target directory followed by a rename, so concurrent readers never see a
  partial entry. Reads re-validate the header and treat any mismatch or
  parse failure as a miss.
*/
class Cache {
public:
  explicit Cache(std::filesystem::path root) : root_(std::move(root)) {}

  const std::filesystem::path& root() const noexcept { return root_; }

  std::optional<GradedCharacter> load(const CacheKey& key) const;
  void store(const CacheKey& key, const GradedCharacter& x) const;
  void store(const CacheKey& key, const Character& x) const;

  /// Entries of the current format version.
  std::size_t entries() const;
  /// Removes every versioned subtree.
  void clear() const;

private:
  void write_atomically(const CacheKey& key, const std::string& content) const;

  std::filesystem::path root_;
};

} // namespace demkit

#endif
