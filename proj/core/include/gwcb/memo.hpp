#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace gwcb {

/// Thread-safe memo table. Readers share a lock; a miss computes the value
/// outside any lock and then inserts it. Two threads racing on the same key
/// both compute, and the first insertion wins, so values must be pure
/// functions of their keys.
template <class Key, class Value, class Hash = std::hash<Key>>
class ConcurrentMemo {
 public:
  using ValuePtr = std::shared_ptr<const Value>;

  template <class Compute>
  ValuePtr get_or_compute(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    auto value = std::make_shared<const Value>(compute());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(key, std::move(value));
    return it->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, ValuePtr, Hash> table_;
};

inline void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace gwcb
