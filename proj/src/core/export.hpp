#pragma once

#include <string>

#include "core/tree.hpp"

namespace cobweb {

enum class ExportFormat { Structured, Dot };

// Emits the full hierarchy. The structured format is line oriented and
// round-trips through ConceptTree::from_structured:
//
//   cobweb-tree 1
//   node <id> <parent-id|-> <n>
//   # cu <category utility>
//     <attribute> <value> <count>
//
// Node ids are preorder indices. Attribute and value tokens must be free of
// whitespace. The DOT format is a valid digraph with per-node n, category
// utility, and counts in the label.
std::string export_tree(const ConceptTree& tree, ExportFormat format);

}  // namespace cobweb
