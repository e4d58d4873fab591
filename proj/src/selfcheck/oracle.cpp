#include "selfcheck/oracle.hpp"

#include <cmath>
#include <map>
#include <string>

#include "core/errors.hpp"

namespace cobweb::selfcheck {

namespace {

using RawCounts = std::map<std::string, std::map<std::string, long>>;

RawCounts tally(const std::vector<Instance>& instances) {
    RawCounts counts;
    for (const auto& inst : instances) {
        for (const auto& [attr, value] : inst) {
            counts[attr][value] += 1;
        }
    }
    return counts;
}

double uncertainty(const std::vector<Instance>& instances) {
    if (instances.empty()) return 0.0;
    const double n = static_cast<double>(instances.size());
    RawCounts counts = tally(instances);
    double u = 0.0;
    for (const auto& [attr, values] : counts) {
        long observed = 0;
        for (const auto& [value, k] : values) observed += k;
        if (observed == 0) continue;
        double h = 0.0;
        for (const auto& [value, k] : values) {
            if (k == 0) continue;
            double p = static_cast<double>(k) / static_cast<double>(observed);
            h -= p * std::log(p);
        }
        u += (static_cast<double>(observed) / n) * h;
    }
    return u;
}

std::vector<Instance> concat(const std::vector<std::vector<Instance>>& bags) {
    std::vector<Instance> out;
    for (const auto& bag : bags) out.insert(out.end(), bag.begin(), bag.end());
    return out;
}

std::vector<std::vector<Instance>> child_bags(const BranchFixture& fixture) {
    std::vector<std::vector<Instance>> bags;
    bags.reserve(fixture.children.size());
    for (const auto& child : fixture.children) bags.push_back(child.all());
    return bags;
}

std::vector<Instance> parent_bag(const BranchFixture& fixture) {
    auto all = concat(child_bags(fixture));
    all.push_back(fixture.incoming);
    return all;
}

}  // namespace

std::vector<Instance> ChildFixture::all() const {
    std::vector<Instance> out = instances;
    for (const auto& sub : subchildren) out.insert(out.end(), sub.begin(), sub.end());
    return out;
}

double partition_score_from_instances(const std::vector<std::vector<Instance>>& parts,
                                      const std::vector<Instance>& parent_instances) {
    if (parts.empty()) throw InvalidArgument("oracle: empty partition");
    if (parent_instances.empty()) return 0.0;
    const double n_parent = static_cast<double>(parent_instances.size());
    const double u_parent = uncertainty(parent_instances);
    double total = 0.0;
    for (const auto& part : parts) {
        double p = static_cast<double>(part.size()) / n_parent;
        total += p * (u_parent - uncertainty(part));
    }
    return total / static_cast<double>(parts.size());
}

double oracle_add(const BranchFixture& fixture, std::size_t child_index) {
    auto bags = child_bags(fixture);
    bags.at(child_index).push_back(fixture.incoming);
    return partition_score_from_instances(bags, parent_bag(fixture));
}

double oracle_create(const BranchFixture& fixture) {
    auto bags = child_bags(fixture);
    bags.push_back({fixture.incoming});
    return partition_score_from_instances(bags, parent_bag(fixture));
}

double oracle_merge(const BranchFixture& fixture, std::size_t first, std::size_t second) {
    if (first == second) throw InvalidArgument("oracle: merge targets must differ");
    auto bags = child_bags(fixture);
    std::vector<std::vector<Instance>> kept;
    std::vector<Instance> merged;
    for (std::size_t i = 0; i < bags.size(); ++i) {
        if (i == first || i == second) {
            merged.insert(merged.end(), bags[i].begin(), bags[i].end());
        } else {
            kept.push_back(bags[i]);
        }
    }
    merged.push_back(fixture.incoming);
    kept.push_back(merged);
    return partition_score_from_instances(kept, parent_bag(fixture));
}

double oracle_split(const BranchFixture& fixture, std::size_t child_index) {
    const ChildFixture& victim = fixture.children.at(child_index);
    if (!victim.is_internal()) throw InvalidArgument("oracle: cannot split a leaf child");
    if (!victim.instances.empty()) {
        throw InvalidArgument("oracle: internal child must not hold direct instances");
    }
    std::vector<std::vector<Instance>> bags;
    for (std::size_t i = 0; i < fixture.children.size(); ++i) {
        if (i == child_index) continue;
        bags.push_back(fixture.children[i].all());
    }
    for (const auto& sub : victim.subchildren) bags.push_back(sub);
    return partition_score_from_instances(bags, parent_bag(fixture));
}

double oracle_score(const BranchFixture& fixture, const OperationChoice& choice) {
    switch (choice.kind) {
        case OperationChoice::Kind::Add:
            return oracle_add(fixture, static_cast<std::size_t>(choice.target));
        case OperationChoice::Kind::Create:
            return oracle_create(fixture);
        case OperationChoice::Kind::Merge:
            return oracle_merge(fixture, static_cast<std::size_t>(choice.target),
                                static_cast<std::size_t>(choice.target2));
        case OperationChoice::Kind::Split:
            return oracle_split(fixture, static_cast<std::size_t>(choice.target));
    }
    throw InvalidArgument("oracle: unknown operation kind");
}

ConceptTree materialize(const BranchFixture& fixture) {
    ConceptTree::NodeLayout root;
    root.instances = {fixture.incoming};
    for (const auto& child : fixture.children) {
        ConceptTree::NodeLayout child_layout;
        child_layout.instances = child.instances;
        for (const auto& sub : child.subchildren) {
            ConceptTree::NodeLayout grand;
            grand.instances = sub;
            child_layout.children.push_back(std::move(grand));
        }
        root.children.push_back(std::move(child_layout));
    }
    return ConceptTree::from_layout(root);
}

}  // namespace cobweb::selfcheck
