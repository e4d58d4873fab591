#include "core/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/errors.hpp"
#include "core/info.hpp"

namespace cobweb {

namespace {
constexpr double kTieRelTol = 1e-9;
}

bool scores_tied(double a, double b) {
    double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= kTieRelTol * scale;
}

ConceptTree::ConceptTree(std::uint64_t seed, double log_base)
    : root_(std::make_unique<ConceptNode>()),
      seed_(seed),
      log_scale_(log_base > 0.0 ? 1.0 / std::log(log_base) : 1.0),
      learn_rng_(Rng::mix({0x636f62776562ULL, seed})) {}

double ConceptTree::attribute_uncertainty(const ConceptNode& node,
                                          const AttributeId& attr) const {
    return cobweb::attribute_uncertainty(node.table(), attr, log_scale_);
}

double ConceptTree::node_uncertainty(const ConceptNode& node) const {
    return cobweb::node_uncertainty(node, log_scale_);
}

double ConceptTree::category_utility(const ConceptNode& node) const {
    return cobweb::category_utility(node, log_scale_);
}

double ConceptTree::partition_utility(const ConceptNode& parent) const {
    if (parent.is_leaf()) {
        throw InvalidArgument("partition_utility: node has no children");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < parent.child_count(); ++i) {
        total += category_utility(parent.child(i));
    }
    return total / static_cast<double>(parent.child_count());
}

double ConceptTree::view_partition_score(const ConceptNode& parent,
                                         const std::vector<ChildView>& views) const {
    if (views.empty()) {
        throw InvalidArgument("partition score over an empty child set");
    }
    if (parent.n() <= 0) return 0.0;
    const double u_parent = table_uncertainty(parent.table(), parent.n(), log_scale_);
    double total = 0.0;
    for (const auto& view : views) {
        double p = static_cast<double>(view.n) / static_cast<double>(parent.n());
        total += p * (u_parent - table_uncertainty(*view.table, view.n, log_scale_));
    }
    return total / static_cast<double>(views.size());
}

double ConceptTree::simulate_add(const ConceptNode& parent, std::size_t child_index,
                                 const Instance& inst) const {
    if (child_index >= parent.child_count()) {
        throw InvalidArgument("simulate_add: child index out of range");
    }
    CountTable boosted = parent.child(child_index).table();
    boosted.add_instance(inst);

    std::vector<ChildView> views;
    views.reserve(parent.child_count());
    for (std::size_t i = 0; i < parent.child_count(); ++i) {
        const ConceptNode& child = parent.child(i);
        if (i == child_index) {
            views.push_back({&boosted, child.n() + 1});
        } else {
            views.push_back({&child.table(), child.n()});
        }
    }
    return view_partition_score(parent, views);
}

std::size_t ConceptTree::pick_best(const std::vector<double>& scores,
                                   const std::vector<std::size_t>& order,
                                   Rng& rng) const {
    double best = scores[order.front()];
    for (std::size_t idx : order) best = std::max(best, scores[idx]);

    std::vector<std::size_t> tied;
    for (std::size_t idx : order) {
        if (scores[idx] >= best || scores_tied(scores[idx], best)) tied.push_back(idx);
    }
    if (tied.size() == 1) return tied.front();
    return tied[rng.bounded(tied.size())];
}

EvaluationReport ConceptTree::evaluate_operations_detailed(const ConceptNode& parent,
                                                           const Instance& inst,
                                                           EvalMode mode,
                                                           Rng& rng) const {
    const std::size_t s = parent.child_count();
    if (s == 0) {
        throw InvalidArgument("evaluate_operations: node has no children");
    }

    std::vector<double> add_scores(s);
    for (std::size_t i = 0; i < s; ++i) add_scores[i] = simulate_add(parent, i, inst);

    std::vector<std::size_t> all(s);
    std::iota(all.begin(), all.end(), std::size_t{0});
    const std::size_t best1 = pick_best(add_scores, all, rng);

    EvaluationReport report;
    report.candidates.push_back(
        {OperationChoice::Kind::Add, static_cast<int>(best1), -1, add_scores[best1]});
    if (mode == EvalMode::Categorize) {
        report.chosen = 0;
        return report;
    }

    {
        // Create: the existing children joined by a fresh singleton concept.
        CountTable fresh;
        fresh.add_instance(inst);
        std::vector<ChildView> views;
        views.reserve(s + 1);
        for (std::size_t i = 0; i < s; ++i) {
            views.push_back({&parent.child(i).table(), parent.child(i).n()});
        }
        views.push_back({&fresh, 1});
        report.candidates.push_back(
            {OperationChoice::Kind::Create, -1, -1, view_partition_score(parent, views)});
    }

    if (s >= 2) {
        // Merge the two best insertion targets and count the instance into
        // the combined concept.
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < s; ++i) {
            if (i != best1) rest.push_back(i);
        }
        const std::size_t best2 = pick_best(add_scores, rest, rng);

        CountTable merged = parent.child(best1).table();
        merged.add_table(parent.child(best2).table());
        merged.add_instance(inst);
        std::int64_t merged_n = parent.child(best1).n() + parent.child(best2).n() + 1;

        std::vector<ChildView> views;
        views.reserve(s - 1);
        for (std::size_t i = 0; i < s; ++i) {
            if (i == best1 || i == best2) continue;
            views.push_back({&parent.child(i).table(), parent.child(i).n()});
        }
        views.push_back({&merged, merged_n});
        report.candidates.push_back({OperationChoice::Kind::Merge, static_cast<int>(best1),
                                     static_cast<int>(best2),
                                     view_partition_score(parent, views)});
    }

    if (!parent.child(best1).is_leaf()) {
        // Split: remove the best child and promote its children.
        const ConceptNode& victim = parent.child(best1);
        std::vector<ChildView> views;
        views.reserve(s - 1 + victim.child_count());
        for (std::size_t i = 0; i < s; ++i) {
            if (i == best1) continue;
            views.push_back({&parent.child(i).table(), parent.child(i).n()});
        }
        for (std::size_t g = 0; g < victim.child_count(); ++g) {
            views.push_back({&victim.child(g).table(), victim.child(g).n()});
        }
        report.candidates.push_back({OperationChoice::Kind::Split, static_cast<int>(best1),
                                     -1, view_partition_score(parent, views)});
    }

    std::vector<double> scores;
    scores.reserve(report.candidates.size());
    for (const auto& cand : report.candidates) scores.push_back(cand.score);
    std::vector<std::size_t> idx(scores.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    report.chosen = pick_best(scores, idx, rng);
    return report;
}

OperationChoice ConceptTree::evaluate_operations(const ConceptNode& parent,
                                                 const Instance& inst, EvalMode mode,
                                                 Rng& rng) const {
    EvaluationReport report = evaluate_operations_detailed(parent, inst, mode, rng);
    return report.candidates[report.chosen];
}

Path ConceptTree::ingest(const Instance& inst, std::vector<EvaluationReport>* trace) {
    Path path;
    ConceptNode* cur = root_.get();
    bool skip_update = false;
    for (;;) {
        if (cur->is_leaf()) {
            if (cur->n() == 0 || cur->matches_exactly(inst)) {
                cur->increment(inst);
                path.push_back(cur);
                return path;
            }
            // Fringe split: the leaf turns into an internal node over a copy
            // of its old contents plus a fresh leaf for the instance.
            auto old_copy = cur->clone();
            old_copy->parent_ = cur;
            auto fresh = std::make_unique<ConceptNode>();
            fresh->increment(inst);
            fresh->parent_ = cur;
            const ConceptNode* fresh_raw = fresh.get();
            cur->children_.push_back(std::move(old_copy));
            cur->children_.push_back(std::move(fresh));
            cur->increment(inst);
            path.push_back(cur);
            path.push_back(fresh_raw);
            return path;
        }

        // Counts are updated before the operation is selected, so every
        // simulated partition is scored against the post-update node.
        if (!skip_update) {
            cur->increment(inst);
            path.push_back(cur);
        }
        skip_update = false;

        EvaluationReport report =
            evaluate_operations_detailed(*cur, inst, EvalMode::Learn, learn_rng_);
        if (trace) trace->push_back(report);
        const OperationChoice& op = report.candidates[report.chosen];

        switch (op.kind) {
            case OperationChoice::Kind::Add: {
                cur = cur->children_[static_cast<std::size_t>(op.target)].get();
                break;
            }
            case OperationChoice::Kind::Create: {
                auto leaf = std::make_unique<ConceptNode>();
                leaf->increment(inst);
                leaf->parent_ = cur;
                const ConceptNode* raw = leaf.get();
                cur->children_.push_back(std::move(leaf));
                path.push_back(raw);
                return path;
            }
            case OperationChoice::Kind::Merge: {
                auto merged = std::make_unique<ConceptNode>();
                merged->absorb(cur->child(static_cast<std::size_t>(op.target)));
                merged->absorb(cur->child(static_cast<std::size_t>(op.target2)));
                merged->parent_ = cur;
                auto a = std::move(cur->children_[static_cast<std::size_t>(op.target)]);
                auto b = std::move(cur->children_[static_cast<std::size_t>(op.target2)]);
                a->parent_ = merged.get();
                b->parent_ = merged.get();
                merged->children_.push_back(std::move(a));
                merged->children_.push_back(std::move(b));
                auto hi = std::max(op.target, op.target2);
                auto lo = std::min(op.target, op.target2);
                cur->children_.erase(cur->children_.begin() + hi);
                cur->children_.erase(cur->children_.begin() + lo);
                cur->children_.push_back(std::move(merged));
                cur = cur->children_.back().get();
                break;  // the merged concept is updated at the top of the loop
            }
            case OperationChoice::Kind::Split: {
                auto victim = std::move(cur->children_[static_cast<std::size_t>(op.target)]);
                cur->children_.erase(cur->children_.begin() + op.target);
                std::size_t pos = static_cast<std::size_t>(op.target);
                for (auto& grandchild : victim->children_) {
                    grandchild->parent_ = cur;
                    cur->children_.insert(cur->children_.begin() + pos, std::move(grandchild));
                    ++pos;
                }
                skip_update = true;  // this node was already counted
                break;
            }
        }
    }
}

Path ConceptTree::categorize(const Instance& inst, Rng& rng) const {
    if (root_->n() <= 0) {
        throw InvalidArgument("categorize: tree has no instances");
    }
    Path path;
    const ConceptNode* cur = root_.get();
    path.push_back(cur);
    while (!cur->is_leaf()) {
        EvaluationReport report =
            evaluate_operations_detailed(*cur, inst, EvalMode::Categorize, rng);
        cur = &cur->child(static_cast<std::size_t>(report.candidates[report.chosen].target));
        path.push_back(cur);
    }
    return path;
}

const ConceptNode* ConceptTree::basic_level(const Path& path) const {
    if (path.empty()) {
        throw InvalidArgument("basic_level of an empty path");
    }
    if (path.size() == 1) return path.front();

    double best = category_utility(*path[1]);
    for (std::size_t i = 2; i < path.size(); ++i) {
        best = std::max(best, category_utility(*path[i]));
    }
    // Deepest node within tie tolerance of the maximum.
    for (std::size_t i = path.size(); i-- > 1;) {
        double cu = category_utility(*path[i]);
        if (cu >= best || scores_tied(cu, best)) return path[i];
    }
    return path[1];
}

Distribution ConceptTree::predict(const Instance& inst, const AttributeId& target,
                                  PredictionLevel level, Rng& rng) const {
    if (inst.contains(target)) {
        throw InvalidArgument("predict: target attribute is observed in the instance");
    }
    Path path = categorize(inst, rng);
    const ConceptNode* node =
        level == PredictionLevel::Leaf ? path.back() : basic_level(path);

    auto it = std::find(path.begin(), path.end(), node);
    std::size_t idx = static_cast<std::size_t>(it - path.begin());

    // Back off toward the root until the target attribute has observations.
    for (std::size_t i = idx + 1; i-- > 0;) {
        const CountTable& table = path[i]->table();
        std::int64_t total = table.observed(target);
        if (total <= 0) continue;
        Distribution dist;
        for (const auto& [value, k] : table.counts().at(target)) {
            if (k > 0) {
                dist[value] = static_cast<double>(k) / static_cast<double>(total);
            }
        }
        return dist;
    }
    throw InvalidArgument("predict: no observations of target on the categorization path");
}

namespace {

void hash_bytes(std::uint64_t& h, const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;
    }
}

void hash_u64(std::uint64_t& h, std::uint64_t v) { hash_bytes(h, &v, sizeof(v)); }

void hash_string(std::uint64_t& h, const std::string& s) {
    hash_u64(h, s.size());
    hash_bytes(h, s.data(), s.size());
}

void hash_node(std::uint64_t& h, const ConceptNode& node) {
    hash_u64(h, 0x6eULL);
    hash_u64(h, static_cast<std::uint64_t>(node.n()));
    for (const auto& [attr, values] : node.table().counts()) {
        hash_string(h, attr);
        for (const auto& [value, k] : values) {
            hash_string(h, value);
            hash_u64(h, static_cast<std::uint64_t>(k));
        }
    }
    hash_u64(h, node.child_count());
    for (std::size_t i = 0; i < node.child_count(); ++i) {
        hash_node(h, node.child(i));
    }
}

bool nodes_equal(const ConceptNode& a, const ConceptNode& b) {
    if (a.n() != b.n() || !(a.table() == b.table())) return false;
    if (a.child_count() != b.child_count()) return false;
    for (std::size_t i = 0; i < a.child_count(); ++i) {
        if (!nodes_equal(a.child(i), b.child(i))) return false;
    }
    return true;
}

}  // namespace

std::uint64_t ConceptTree::structure_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    hash_node(h, *root_);
    return h;
}

std::unique_ptr<ConceptNode> ConceptTree::build_layout(const NodeLayout& layout) {
    auto node = std::make_unique<ConceptNode>();
    for (const auto& inst : layout.instances) node->increment(inst);
    for (const auto& child_layout : layout.children) {
        auto child = build_layout(child_layout);
        node->absorb(*child);
        child->parent_ = node.get();
        node->children_.push_back(std::move(child));
    }
    return node;
}

ConceptTree ConceptTree::from_layout(const NodeLayout& layout, std::uint64_t seed,
                                     double log_base) {
    ConceptTree tree(seed, log_base);
    auto built = build_layout(layout);
    built->parent_ = nullptr;
    tree.root_ = std::move(built);
    return tree;
}

bool ConceptTree::same_structure(const ConceptTree& other) const {
    return nodes_equal(*root_, *other.root_);
}

}  // namespace cobweb
