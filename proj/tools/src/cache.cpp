#include "gwcb_cli/cache.hpp"

#include <array>
#include <stdexcept>

#include <json.hpp>

namespace gwcb::cli {

namespace {

constexpr std::array<std::string_view, 6> kinds{"lr",      "qlr",     "flag_sc",
                                                "cb_rank", "cb_deg4", "gw_deg4"};

}  // namespace

bool JsonlCache::known_kind(std::string_view kind) {
  for (auto k : kinds) {
    if (k == kind) return true;
  }
  return false;
}

std::string JsonlCache::slot(std::string_view kind, const std::string& key) {
  std::string s(kind);
  s += '\t';
  s += key;
  return s;
}

JsonlCache::JsonlCache(std::filesystem::path path) : path_(std::move(path)) {
  if (std::ifstream in(path_); in) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        const auto record = nlohmann::json::parse(line);
        const auto kind = record.at("kind").get<std::string>();
        const auto value = record.at("value").get<std::string>();
        if (!known_kind(kind) || value.empty()) throw std::invalid_argument("bad record");
        values_[slot(kind, record.at("key").get<std::string>())] = Integer(value.c_str());
      } catch (const std::exception&) {
        ++skipped_;
      }
    }
  }
  out_.open(path_, std::ios::app);
  if (!out_) throw std::runtime_error("cannot open cache file " + path_.string());
}

std::optional<Integer> JsonlCache::lookup(std::string_view kind, const std::string& key) {
  std::lock_guard lock(mutex_);
  if (auto it = values_.find(slot(kind, key)); it != values_.end()) return it->second;
  return std::nullopt;
}

void JsonlCache::store(std::string_view kind, const std::string& key, const Integer& value) {
  if (!known_kind(kind)) throw std::invalid_argument("unknown cache kind " + std::string(kind));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = values_.try_emplace(slot(kind, key), value);
  if (!inserted) {
    if (it->second == value) return;
    it->second = value;
  }
  const nlohmann::json record{{"key", key}, {"kind", kind}, {"value", value.str()}};
  out_ << record.dump() << '\n';
  out_.flush();
}

std::size_t JsonlCache::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

}  // namespace gwcb::cli
