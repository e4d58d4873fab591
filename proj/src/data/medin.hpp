#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "core/count_table.hpp"

namespace cobweb::data {

enum class StimulusRole { Training, Transfer };

struct MedinStimulus {
    int id = 0;                     // 1..16
    std::array<int, 4> bits{};      // four binary dimensions
    char label = 'A';               // category used for scoring
    StimulusRole role = StimulusRole::Training;
    double observed_geometric = 0;  // human classification probability, geometric set
    double observed_faces = 0;      // human classification probability, face set
};

// The 5-4 category structure with its human reference probabilities. Both
// stimulus sets share one binary encoding, so a single stimulus list serves
// geometric and face comparisons.
class MedinDataset {
public:
    static MedinDataset load(const std::filesystem::path& file);
    static MedinDataset from_json_text(const std::string& text);

    const std::vector<MedinStimulus>& stimuli() const { return stimuli_; }
    const MedinStimulus& by_id(int id) const;

    std::vector<int> training_ids() const;
    std::vector<int> transfer_ids() const;

    // Bits plus the category label; what a training pass ingests.
    Instance training_instance(int id) const;
    // Bits only; what prediction sees when the label is hidden.
    Instance probe_instance(int id) const;

    std::string serialize() const;

    // Row order of the reference table (training A, training B, transfer).
    static const std::array<int, 16>& table_order();

    static constexpr const char* kLabelAttribute = "category";

private:
    void validate() const;

    std::vector<MedinStimulus> stimuli_;
};

}  // namespace cobweb::data
