#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "data/shepard.hpp"

namespace cobweb::data {

// Human accuracies for the six task types at the odd learning blocks
// 1, 3, ..., 23, loaded from a transcription CSV (type,block,accuracy).
class HumanCurves {
public:
    static HumanCurves load(const std::filesystem::path& file);
    static HumanCurves from_csv_text(const std::string& text);

    double accuracy(ShjType type, int block) const;
    const std::vector<int>& blocks() const;  // the twelve odd blocks

    // Accuracies for all six types at one block, in type order I..VI.
    std::vector<double> block_profile(int block) const;

    std::string serialize() const;

private:
    void validate() const;

    std::map<ShjType, std::map<int, double>> accuracy_;
};

}  // namespace cobweb::data
