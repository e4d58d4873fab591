#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "core/count_table.hpp"

namespace cobweb {

// One concept in the hierarchy: a frequency table, the number of instances
// incorporated, and child concepts. Restructuring is owned by ConceptTree.
class ConceptNode {
public:
    ConceptNode() = default;

    std::int64_t n() const { return n_; }
    const CountTable& table() const { return table_; }
    const ConceptNode* parent() const { return parent_; }
    bool is_leaf() const { return children_.empty(); }
    std::size_t child_count() const { return children_.size(); }
    const ConceptNode& child(std::size_t i) const { return *children_[i]; }

    // True when the instance's observed values coincide with this (leaf)
    // node's table: identical attribute support, every attribute fully
    // concentrated on the instance's value.
    bool matches_exactly(const Instance& inst) const;

    std::size_t subtree_size() const;

private:
    friend class ConceptTree;

    void increment(const Instance& inst) {
        n_ += 1;
        table_.add_instance(inst);
    }
    void absorb(const ConceptNode& other) {
        n_ += other.n_;
        table_.add_table(other.table_);
    }
    ConceptNode& mutable_child(std::size_t i) { return *children_[i]; }

    // Deep copy of the node's data and subtree (parent left unset).
    std::unique_ptr<ConceptNode> clone() const;

    CountTable table_;
    std::int64_t n_ = 0;
    ConceptNode* parent_ = nullptr;
    std::vector<std::unique_ptr<ConceptNode>> children_;
};

}  // namespace cobweb
