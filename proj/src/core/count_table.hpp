#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace cobweb {

using AttributeId = std::string;
using Value = std::string;

// A (possibly partial) observation: at most one value per attribute,
// attributes may be absent. The category label is an ordinary attribute.
using Instance = std::map<AttributeId, Value>;

// Per-concept frequency table: attribute -> value -> count. Counts are
// exact integers; probabilities are formed on demand as ratios.
class CountTable {
public:
    using ValueCounts = std::map<Value, std::int64_t>;

    void add(const AttributeId& attr, const Value& value, std::int64_t k = 1);
    void add_instance(const Instance& inst);
    void add_table(const CountTable& other);

    std::int64_t count(const AttributeId& attr, const Value& value) const;

    // Total observations of an attribute (sum over its value counts).
    std::int64_t observed(const AttributeId& attr) const;

    const std::map<AttributeId, ValueCounts>& counts() const { return counts_; }
    bool empty() const { return counts_.empty(); }

    bool operator==(const CountTable& other) const = default;

private:
    std::map<AttributeId, ValueCounts> counts_;
};

}  // namespace cobweb
