#include "core/node.hpp"

namespace cobweb {

bool ConceptNode::matches_exactly(const Instance& inst) const {
    for (const auto& [attr, values] : table_.counts()) {
        std::int64_t total = 0;
        for (const auto& [value, k] : values) total += k;
        if (total == 0) continue;
        auto it = inst.find(attr);
        if (it == inst.end()) return false;
        if (table_.count(attr, it->second) != total) return false;
    }
    for (const auto& [attr, value] : inst) {
        if (table_.observed(attr) == 0) return false;
    }
    return true;
}

std::size_t ConceptNode::subtree_size() const {
    std::size_t total = 1;
    for (const auto& child : children_) total += child->subtree_size();
    return total;
}

std::unique_ptr<ConceptNode> ConceptNode::clone() const {
    auto copy = std::make_unique<ConceptNode>();
    copy->table_ = table_;
    copy->n_ = n_;
    for (const auto& child : children_) {
        auto child_copy = child->clone();
        child_copy->parent_ = copy.get();
        copy->children_.push_back(std::move(child_copy));
    }
    return copy;
}

}  // namespace cobweb
