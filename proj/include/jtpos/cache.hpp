#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>

namespace jtpos {

// Write-once memo table. Concurrent fills of the same key are idempotent: the
// first stored value wins and every caller sees it.
template <class Key, class Value>
class WriteOnceCache {
public:
    std::optional<Value> find(const Key &k) const
    {
        std::shared_lock lock(mutex_);
        auto it = map_.find(k);
        if (it == map_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    const Value &insert(const Key &k, Value v)
    {
        std::unique_lock lock(mutex_);
        return map_.try_emplace(k, std::move(v)).first->second;
    }

    template <class F>
    Value get_or_compute(const Key &k, F &&compute)
    {
        if (auto hit = find(k)) {
            return *hit;
        }
        return insert(k, compute());
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Value> map_;
};

} // namespace jtpos
