#include "data/medin.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace cobweb::data {

using nlohmann::json;

namespace {

const std::set<int> kTrainingA = {4, 7, 15, 13, 5};
const std::set<int> kTrainingB = {12, 2, 14, 10};
const std::set<int> kTransferA = {1, 6, 9, 11};
const std::set<int> kTransferB = {3, 8, 16};

}  // namespace

const std::array<int, 16>& MedinDataset::table_order() {
    static const std::array<int, 16> order = {4,  7, 15, 13, 5, 12, 2,  14,
                                              10, 1, 6,  9,  11, 3, 8, 16};
    return order;
}

MedinDataset MedinDataset::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open dataset file: " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

MedinDataset MedinDataset::from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text, nullptr, true, true);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad dataset JSON: ") + e.what());
    }
    if (!doc.contains("stimuli") || !doc["stimuli"].is_array()) {
        throw ParseError("dataset JSON: missing \"stimuli\" array");
    }

    MedinDataset ds;
    for (const auto& entry : doc["stimuli"]) {
        MedinStimulus s;
        try {
            s.id = entry.at("id").get<int>();
            auto bits = entry.at("bits").get<std::vector<int>>();
            if (bits.size() != 4) {
                throw ValidationError("stimulus " + std::to_string(s.id) +
                                      ": expected 4 dimensions, got " +
                                      std::to_string(bits.size()));
            }
            std::copy(bits.begin(), bits.end(), s.bits.begin());
            auto cat = entry.at("category").get<std::string>();
            if (cat != "A" && cat != "B") {
                throw ValidationError("stimulus " + std::to_string(s.id) +
                                      ": category must be A or B");
            }
            s.label = cat[0];
            auto role = entry.at("role").get<std::string>();
            if (role == "training") {
                s.role = StimulusRole::Training;
            } else if (role == "transfer") {
                s.role = StimulusRole::Transfer;
            } else {
                throw ValidationError("stimulus " + std::to_string(s.id) +
                                      ": role must be training or transfer");
            }
            s.observed_geometric = entry.at("observed_geometric").get<double>();
            s.observed_faces = entry.at("observed_faces").get<double>();
        } catch (const json::exception& e) {
            throw ParseError(std::string("dataset JSON stimulus entry: ") + e.what());
        }
        ds.stimuli_.push_back(s);
    }
    ds.validate();
    return ds;
}

void MedinDataset::validate() const {
    if (stimuli_.size() != 16) {
        throw ValidationError("expected 16 stimuli, got " + std::to_string(stimuli_.size()));
    }
    std::set<int> ids;
    std::set<std::array<int, 4>> vectors;
    for (const auto& s : stimuli_) {
        if (s.id < 1 || s.id > 16) {
            throw ValidationError("stimulus id out of range: " + std::to_string(s.id));
        }
        if (!ids.insert(s.id).second) {
            throw ValidationError("duplicate stimulus id: " + std::to_string(s.id));
        }
        for (int b : s.bits) {
            if (b != 0 && b != 1) {
                throw ValidationError("stimulus " + std::to_string(s.id) +
                                      ": bits must be 0 or 1");
            }
        }
        if (!vectors.insert(s.bits).second) {
            throw ValidationError("stimulus " + std::to_string(s.id) +
                                  ": duplicate bit vector");
        }
        if (s.observed_geometric < 0 || s.observed_geometric > 1 ||
            s.observed_faces < 0 || s.observed_faces > 1) {
            throw ValidationError("stimulus " + std::to_string(s.id) +
                                  ": observed probabilities must lie in [0,1]");
        }

        const bool training = s.role == StimulusRole::Training;
        const std::set<int>& expected =
            training ? (s.label == 'A' ? kTrainingA : kTrainingB)
                     : (s.label == 'A' ? kTransferA : kTransferB);
        if (!expected.contains(s.id)) {
            throw ValidationError("stimulus " + std::to_string(s.id) +
                                  ": role/category disagrees with the 5-4 design");
        }
    }
    const MedinStimulus& proto = by_id(1);
    if (proto.bits != std::array<int, 4>{1, 1, 1, 1}) {
        throw ValidationError("stimulus 1 must be the category A prototype (1,1,1,1)");
    }
}

const MedinStimulus& MedinDataset::by_id(int id) const {
    for (const auto& s : stimuli_) {
        if (s.id == id) return s;
    }
    throw InvalidArgument("no stimulus with id " + std::to_string(id));
}

std::vector<int> MedinDataset::training_ids() const {
    std::vector<int> out;
    for (const auto& s : stimuli_) {
        if (s.role == StimulusRole::Training) out.push_back(s.id);
    }
    return out;
}

std::vector<int> MedinDataset::transfer_ids() const {
    std::vector<int> out;
    for (const auto& s : stimuli_) {
        if (s.role == StimulusRole::Transfer) out.push_back(s.id);
    }
    return out;
}

Instance MedinDataset::training_instance(int id) const {
    Instance inst = probe_instance(id);
    inst[kLabelAttribute] = std::string(1, by_id(id).label);
    return inst;
}

Instance MedinDataset::probe_instance(int id) const {
    const MedinStimulus& s = by_id(id);
    Instance inst;
    for (int d = 0; d < 4; ++d) {
        inst["d" + std::to_string(d + 1)] = std::to_string(s.bits[d]);
    }
    return inst;
}

std::string MedinDataset::serialize() const {
    json doc;
    doc["format"] = "medin-dataset 1";
    doc["label"] = kLabelAttribute;
    json list = json::array();
    for (int id : table_order()) {
        const MedinStimulus& s = by_id(id);
        json entry;
        entry["id"] = s.id;
        entry["bits"] = s.bits;
        entry["category"] = std::string(1, s.label);
        entry["role"] = s.role == StimulusRole::Training ? "training" : "transfer";
        entry["observed_geometric"] = s.observed_geometric;
        entry["observed_faces"] = s.observed_faces;
        list.push_back(entry);
    }
    doc["stimuli"] = list;
    return doc.dump(2) + "\n";
}

}  // namespace cobweb::data
