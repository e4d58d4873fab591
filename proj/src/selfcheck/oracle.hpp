#pragma once

#include <cstddef>
#include <vector>

#include "core/count_table.hpp"
#include "core/tree.hpp"

namespace cobweb::selfcheck {

// Verification-only scorer: every quantity is recomputed from raw instance
// bags, sharing no state with the incremental count tables it checks.

// A branch under evaluation. Each child is a bag of instances; a child with
// sub-bags is internal (its own bag must then be empty) so that Split can be
// scored. Learn-mode semantics apply: the parent is the union of all bags
// plus the incoming instance.
struct ChildFixture {
    std::vector<Instance> instances;
    std::vector<std::vector<Instance>> subchildren;

    bool is_internal() const { return !subchildren.empty(); }
    std::vector<Instance> all() const;
};

struct BranchFixture {
    std::vector<ChildFixture> children;
    Instance incoming;
};

// Mean over parts of P(part) * [U(parent) - U(part)], entropies built from
// scratch out of the instance lists.
double partition_score_from_instances(const std::vector<std::vector<Instance>>& parts,
                                      const std::vector<Instance>& parent_instances);

double oracle_add(const BranchFixture& fixture, std::size_t child_index);
double oracle_create(const BranchFixture& fixture);
double oracle_merge(const BranchFixture& fixture, std::size_t first, std::size_t second);
double oracle_split(const BranchFixture& fixture, std::size_t child_index);

// Same score for any candidate the tree implementation reports.
double oracle_score(const BranchFixture& fixture, const OperationChoice& choice);

// The equivalent live branch: a tree whose root has absorbed the incoming
// instance and whose children mirror the fixture.
ConceptTree materialize(const BranchFixture& fixture);

}  // namespace cobweb::selfcheck
