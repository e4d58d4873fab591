#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "core/count_table.hpp"

namespace cobweb::data {

// The six category structures over three binary dimensions, Category A and
// B spanning four stimuli each.
enum class ShjType { I, II, III, IV, V, VI };

inline constexpr std::array<ShjType, 6> kShjTypes = {
    ShjType::I, ShjType::II, ShjType::III, ShjType::IV, ShjType::V, ShjType::VI};

std::string to_string(ShjType type);
ShjType shj_type_from_string(const std::string& name);

using Bits3 = std::array<int, 3>;
using Permutation3 = std::array<int, 3>;

int bits_to_index(const Bits3& bits);
Bits3 index_to_bits(int index);

using Assignment = std::array<char, 8>;  // index = b0*4 + b1*2 + b2, values 'A'/'B'

struct ShepardTask {
    ShjType type = ShjType::I;
    Permutation3 permutation = {0, 1, 2};
    Assignment assignment = {};

    char category_of(const Bits3& bits) const { return assignment[bits_to_index(bits)]; }
    std::vector<Bits3> stimuli_of(char category) const;

    bool operator==(const ShepardTask&) const = default;
};

// Structural predicates used by the loader and the test suite.
bool balanced_four_four(const Assignment& a);
bool is_type_i(const Assignment& a);    // one dimension fully diagnostic
bool is_type_ii(const Assignment& a);   // XOR of some pair, no single dimension informative
bool is_type_iv(const Assignment& a);   // Hamming-1 balls around opposite prototypes
bool is_type_vi(const Assignment& a);   // determined by 3-bit parity

// Category structure of the given type found in `a`, or structural error.
void validate_task(const ShepardTask& task);

// The six canonical structures. I, II, IV and VI are built from their
// defining rules; III and V come from the transcription file.
std::array<ShepardTask, 6> generate_shj_structures(const std::filesystem::path& types_file);

// Dimension reindexing: the permuted task reads dimension i of a stimulus
// where the base task read dimension perm[i].
ShepardTask permute_task(const ShepardTask& task, const Permutation3& perm);

std::array<Permutation3, 6> all_permutations3();
Permutation3 inverse_permutation(const Permutation3& perm);

// 6 types x 6 dimension permutations.
std::vector<ShepardTask> all_tasks(const std::array<ShepardTask, 6>& canonical);

// Attribute encoding used by the learner: d1..d3 plus optional "category".
Instance task_instance(const Bits3& bits);
Instance task_instance(const ShepardTask& task, const Bits3& bits);

// Semantic serialization of the transcription content (III and V); feeding
// it back to generate_shj_structures yields the same structures.
std::string serialize_types(const std::array<ShepardTask, 6>& canonical);

}  // namespace cobweb::data
