#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "core/node.hpp"
#include "core/rng.hpp"

namespace cobweb {

// One candidate restructuring at a branch, scored by the average category
// utility (Eq. 1-style mean over the simulated partition).
struct OperationChoice {
    enum class Kind { Add, Create, Merge, Split };
    Kind kind = Kind::Add;
    int target = -1;    // Add: receiving child; Merge: first child; Split: split child
    int target2 = -1;   // Merge: second child
    double score = 0.0;
};

struct EvaluationReport {
    std::vector<OperationChoice> candidates;
    std::size_t chosen = 0;
};

enum class EvalMode { Learn, Categorize };
enum class PredictionLevel { Leaf, Basic };

using Distribution = std::map<Value, double>;
using Path = std::vector<const ConceptNode*>;

// Incremental probabilistic concept hierarchy. `ingest` is the only
// mutating operation and requires exclusive access; every query leaves the
// stored concepts bit-identical and may run concurrently with other
// queries. Tie-breaking draws come from the learner's own stream during
// ingest and from the caller-supplied stream during queries, so distinct
// runs can share a trained tree without perturbing each other.
class ConceptTree {
public:
    // log_base rescales all uncertainties (0 selects the natural log).
    // Decisions are invariant to the base; it exists so that invariance is
    // testable and exported numbers can be read in bits if desired.
    explicit ConceptTree(std::uint64_t seed, double log_base = 0.0);

    ConceptTree(ConceptTree&&) noexcept = default;
    ConceptTree& operator=(ConceptTree&&) noexcept = default;

    // Explicit construction of a hierarchy from per-node instance payloads;
    // internal counts aggregate children plus any payload of their own.
    struct NodeLayout {
        std::vector<Instance> instances;
        std::vector<NodeLayout> children;
    };
    static ConceptTree from_layout(const NodeLayout& layout, std::uint64_t seed = 0,
                                   double log_base = 0.0);

    // Inverse of the structured text export.
    static ConceptTree from_structured(const std::string& text, std::uint64_t seed = 0);

    const ConceptNode& root() const { return *root_; }
    std::uint64_t seed() const { return seed_; }
    std::size_t node_count() const { return root_->subtree_size(); }

    // Sorts the instance from the root down, updating counts along the way
    // and restructuring greedily; returns the path of updated nodes.
    // Optionally records every branch evaluation into `trace`.
    Path ingest(const Instance& inst, std::vector<EvaluationReport>* trace = nullptr);

    // Pure descent following the best simulated insertion at every branch.
    Path categorize(const Instance& inst, Rng& rng) const;

    // The path node with maximal category utility, root excluded unless it
    // is the whole path. Ties go to the deepest contender.
    const ConceptNode* basic_level(const Path& path) const;

    // Relative value frequencies of `target` at the leaf or basic-level node
    // of the categorization path, backing off to the nearest ancestor on the
    // path that has observations for `target`.
    Distribution predict(const Instance& inst, const AttributeId& target,
                         PredictionLevel level, Rng& rng) const;

    double attribute_uncertainty(const ConceptNode& node, const AttributeId& attr) const;
    double node_uncertainty(const ConceptNode& node) const;
    double category_utility(const ConceptNode& node) const;

    // Mean category utility over a node's children. Throws InvalidArgument
    // for a leaf.
    double partition_utility(const ConceptNode& parent) const;

    // Score of the hypothetical partition in which `inst` is counted into
    // the given child. Never mutates.
    double simulate_add(const ConceptNode& parent, std::size_t child_index,
                        const Instance& inst) const;

    OperationChoice evaluate_operations(const ConceptNode& parent, const Instance& inst,
                                        EvalMode mode, Rng& rng) const;
    EvaluationReport evaluate_operations_detailed(const ConceptNode& parent,
                                                  const Instance& inst, EvalMode mode,
                                                  Rng& rng) const;

    // Hash of the stored structure and counts (not of any generator state);
    // equal hashes across a query barrage demonstrate purity.
    std::uint64_t structure_hash() const;

    // Structural equality of concepts (tables, counts, child order).
    bool same_structure(const ConceptTree& other) const;

private:
    struct ChildView {
        const CountTable* table;
        std::int64_t n;
    };

    double view_partition_score(const ConceptNode& parent,
                                const std::vector<ChildView>& views) const;
    std::size_t pick_best(const std::vector<double>& scores,
                          const std::vector<std::size_t>& order, Rng& rng) const;
    static std::unique_ptr<ConceptNode> build_layout(const NodeLayout& layout);

    ConceptNode* mutable_root() { return root_.get(); }

    std::unique_ptr<ConceptNode> root_;
    std::uint64_t seed_ = 0;
    double log_scale_ = 1.0;
    Rng learn_rng_;
};

// True when |a - b| is within relative tolerance 1e-9 (guarded near zero);
// the comparison used for every score tie.
bool scores_tied(double a, double b);

}  // namespace cobweb
