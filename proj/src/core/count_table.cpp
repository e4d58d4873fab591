#include "core/count_table.hpp"

namespace cobweb {

void CountTable::add(const AttributeId& attr, const Value& value, std::int64_t k) {
    counts_[attr][value] += k;
}

void CountTable::add_instance(const Instance& inst) {
    for (const auto& [attr, value] : inst) {
        counts_[attr][value] += 1;
    }
}

void CountTable::add_table(const CountTable& other) {
    for (const auto& [attr, values] : other.counts_) {
        auto& mine = counts_[attr];
        for (const auto& [value, k] : values) {
            mine[value] += k;
        }
    }
}

std::int64_t CountTable::count(const AttributeId& attr, const Value& value) const {
    auto it = counts_.find(attr);
    if (it == counts_.end()) return 0;
    auto vit = it->second.find(value);
    return vit == it->second.end() ? 0 : vit->second;
}

std::int64_t CountTable::observed(const AttributeId& attr) const {
    auto it = counts_.find(attr);
    if (it == counts_.end()) return 0;
    std::int64_t total = 0;
    for (const auto& [value, k] : it->second) total += k;
    return total;
}

}  // namespace cobweb
