#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "gwcb/integer.hpp"
#include "gwcb/verify.hpp"

namespace gwcb::cli {

/// Append-only JSON Lines store of exact values. Each line is
/// {"key": ..., "kind": ..., "value": "<decimal>"}; on load the last line for a
/// (kind, key) pair wins. Unreadable lines are skipped and counted.
class JsonlCache : public DegreeStore {
 public:
  explicit JsonlCache(std::filesystem::path path);

  std::optional<Integer> lookup(std::string_view kind, const std::string& key) override;
  void store(std::string_view kind, const std::string& key, const Integer& value) override;

  const std::filesystem::path& path() const { return path_; }
  std::size_t size() const;
  std::size_t skipped_lines() const { return skipped_; }

  static bool known_kind(std::string_view kind);

 private:
  static std::string slot(std::string_view kind, const std::string& key);

  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Integer> values_;
  std::ofstream out_;
  std::size_t skipped_ = 0;
};

}  // namespace gwcb::cli
