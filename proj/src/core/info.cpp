#include "core/info.hpp"

#include <cmath>

namespace cobweb {

double attribute_uncertainty(const CountTable& table, const AttributeId& attr,
                             double log_scale) {
    auto it = table.counts().find(attr);
    if (it == table.counts().end()) return 0.0;
    std::int64_t total = 0;
    for (const auto& [value, k] : it->second) total += k;
    if (total <= 0) return 0.0;
    double h = 0.0;
    for (const auto& [value, k] : it->second) {
        if (k <= 0) continue;
        double p = static_cast<double>(k) / static_cast<double>(total);
        h -= p * std::log(p);
    }
    return h * log_scale;
}

double table_uncertainty(const CountTable& table, std::int64_t n,
                         double log_scale) {
    if (n <= 0) return 0.0;
    double u = 0.0;
    for (const auto& [attr, values] : table.counts()) {
        std::int64_t total = 0;
        for (const auto& [value, k] : values) total += k;
        if (total <= 0) continue;
        double presence = static_cast<double>(total) / static_cast<double>(n);
        u += presence * attribute_uncertainty(table, attr, log_scale);
    }
    return u;
}

double category_utility(const ConceptNode& node, double log_scale) {
    const ConceptNode* parent = node.parent();
    if (parent == nullptr || parent->n() <= 0) return 0.0;
    double p = static_cast<double>(node.n()) / static_cast<double>(parent->n());
    return p * (node_uncertainty(*parent, log_scale) - node_uncertainty(node, log_scale));
}

}  // namespace cobweb
