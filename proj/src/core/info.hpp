#pragma once

#include "core/count_table.hpp"
#include "core/node.hpp"

namespace cobweb {

// Uncertainty/utility measures over count tables. Logarithms are natural by
// default; `log_scale` rescales to another base (1/ln 2 for bits). Every
// decision in the learner compares these quantities, so the base is a pure
// scaling and never changes an argmax.

// -sum_j P(x_j) log P(x_j) over the attribute's observed values. Zero when
// the attribute has no observations or a single observed value.
double attribute_uncertainty(const CountTable& table, const AttributeId& attr,
                             double log_scale = 1.0);

// Expected attribute uncertainty: sum over attributes of
// P(attribute observed) * attribute_uncertainty, where the presence weight
// is observed(attr) / n. Equals the plain entropy sum when every instance
// carried every attribute.
double table_uncertainty(const CountTable& table, std::int64_t n,
                         double log_scale = 1.0);

inline double node_uncertainty(const ConceptNode& node, double log_scale = 1.0) {
    return table_uncertainty(node.table(), node.n(), log_scale);
}

// P(c) * [U(parent) - U(c)]. Zero for the root (no parent). May be negative
// for an individual child; the weighted sum over a full partition is not.
double category_utility(const ConceptNode& node, double log_scale = 1.0);

}  // namespace cobweb
