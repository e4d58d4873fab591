#include "data/shepard.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace cobweb::data {

using nlohmann::json;

std::string to_string(ShjType type) {
    switch (type) {
        case ShjType::I: return "I";
        case ShjType::II: return "II";
        case ShjType::III: return "III";
        case ShjType::IV: return "IV";
        case ShjType::V: return "V";
        case ShjType::VI: return "VI";
    }
    throw InvalidArgument("unknown task type");
}

ShjType shj_type_from_string(const std::string& name) {
    for (ShjType t : kShjTypes) {
        if (to_string(t) == name) return t;
    }
    throw ParseError("unknown task type name: " + name);
}

int bits_to_index(const Bits3& bits) {
    for (int b : bits) {
        if (b != 0 && b != 1) throw InvalidArgument("stimulus bits must be 0 or 1");
    }
    return bits[0] * 4 + bits[1] * 2 + bits[2];
}

Bits3 index_to_bits(int index) {
    return {(index >> 2) & 1, (index >> 1) & 1, index & 1};
}

std::vector<Bits3> ShepardTask::stimuli_of(char category) const {
    std::vector<Bits3> out;
    for (int i = 0; i < 8; ++i) {
        if (assignment[i] == category) out.push_back(index_to_bits(i));
    }
    return out;
}

bool balanced_four_four(const Assignment& a) {
    int n_a = 0;
    for (char c : a) {
        if (c == 'A') {
            ++n_a;
        } else if (c != 'B') {
            return false;
        }
    }
    return n_a == 4;
}

bool is_type_i(const Assignment& a) {
    for (int d = 0; d < 3; ++d) {
        bool diagnostic = true;
        for (int i = 0; i < 8 && diagnostic; ++i) {
            for (int j = 0; j < 8; ++j) {
                bool same_value = index_to_bits(i)[d] == index_to_bits(j)[d];
                if (same_value != (a[i] == a[j])) {
                    diagnostic = false;
                    break;
                }
            }
        }
        if (diagnostic) return true;
    }
    return false;
}

namespace {

bool dimension_informative(const Assignment& a, int d) {
    // A dimension is uninformative when each of its values splits 2-2
    // across the categories.
    int a_with_one = 0, ones = 0;
    for (int i = 0; i < 8; ++i) {
        if (index_to_bits(i)[d] == 1) {
            ++ones;
            if (a[i] == 'A') ++a_with_one;
        }
    }
    return !(ones == 4 && a_with_one == 2);
}

bool pair_xor_determines(const Assignment& a, int d, int e) {
    char for_equal = 0, for_diff = 0;
    for (int i = 0; i < 8; ++i) {
        Bits3 bits = index_to_bits(i);
        char& slot = bits[d] == bits[e] ? for_equal : for_diff;
        if (slot == 0) {
            slot = a[i];
        } else if (slot != a[i]) {
            return false;
        }
    }
    return for_equal != for_diff;
}

}  // namespace

bool is_type_ii(const Assignment& a) {
    if (is_type_i(a)) return false;
    for (int d = 0; d < 3; ++d) {
        if (dimension_informative(a, d)) return false;
    }
    for (int d = 0; d < 3; ++d) {
        for (int e = d + 1; e < 3; ++e) {
            if (pair_xor_determines(a, d, e)) return true;
        }
    }
    return false;
}

namespace {

int hamming(const Bits3& x, const Bits3& y) {
    int d = 0;
    for (int i = 0; i < 3; ++i) d += x[i] != y[i];
    return d;
}

}  // namespace

bool is_type_iv(const Assignment& a) {
    if (!balanced_four_four(a)) return false;
    for (int p = 0; p < 8; ++p) {
        Bits3 proto = index_to_bits(p);
        bool matches = true;
        for (int i = 0; i < 8 && matches; ++i) {
            bool in_ball = hamming(index_to_bits(i), proto) <= 1;
            matches = in_ball == (a[i] == a[p]);
        }
        if (matches) return true;
    }
    return false;
}

bool is_type_vi(const Assignment& a) {
    char even = 0, odd = 0;
    for (int i = 0; i < 8; ++i) {
        Bits3 bits = index_to_bits(i);
        int parity = (bits[0] + bits[1] + bits[2]) % 2;
        char& slot = parity == 0 ? even : odd;
        if (slot == 0) {
            slot = a[i];
        } else if (slot != a[i]) {
            return false;
        }
    }
    return even != odd;
}

void validate_task(const ShepardTask& task) {
    const Assignment& a = task.assignment;
    if (!balanced_four_four(a)) {
        throw ValidationError("task " + to_string(task.type) +
                              ": categories must split the stimuli 4-4");
    }
    switch (task.type) {
        case ShjType::I:
            if (!is_type_i(a)) throw ValidationError("type I: no fully diagnostic dimension");
            break;
        case ShjType::II:
            if (!is_type_ii(a)) throw ValidationError("type II: not an XOR structure");
            break;
        case ShjType::IV:
            if (!is_type_iv(a)) throw ValidationError("type IV: not a Hamming-ball pair");
            break;
        case ShjType::VI:
            if (!is_type_vi(a)) throw ValidationError("type VI: not parity structured");
            break;
        case ShjType::III:
        case ShjType::V:
            // Rule-plus-exception structures: checked only against the
            // other four shapes.
            if (is_type_i(a) || is_type_ii(a) || is_type_iv(a) || is_type_vi(a)) {
                throw ValidationError("type " + to_string(task.type) +
                                      ": assignment matches a different type's structure");
            }
            break;
    }
}

namespace {

Assignment assignment_from_a_set(const std::vector<std::string>& a_bits) {
    if (a_bits.size() != 4) {
        throw ValidationError("category A must list exactly 4 stimuli");
    }
    Assignment a;
    a.fill('B');
    for (const auto& s : a_bits) {
        if (s.size() != 3) throw ParseError("stimulus must have 3 bits: " + s);
        Bits3 bits;
        for (int i = 0; i < 3; ++i) {
            if (s[i] != '0' && s[i] != '1') throw ParseError("bad bit string: " + s);
            bits[i] = s[i] - '0';
        }
        int idx = bits_to_index(bits);
        if (a[idx] == 'A') throw ValidationError("duplicate stimulus in category A: " + s);
        a[idx] = 'A';
    }
    return a;
}

std::string bits_name(const Bits3& bits) {
    std::string s(3, '0');
    for (int i = 0; i < 3; ++i) s[i] = static_cast<char>('0' + bits[i]);
    return s;
}

}  // namespace

std::array<ShepardTask, 6> generate_shj_structures(const std::filesystem::path& types_file) {
    std::array<ShepardTask, 6> out;

    // Type I: the first dimension is fully diagnostic.
    out[0].type = ShjType::I;
    for (int i = 0; i < 8; ++i) {
        out[0].assignment[i] = index_to_bits(i)[0] == 1 ? 'A' : 'B';
    }
    // Type II: XOR over dimensions 1 and 2.
    out[1].type = ShjType::II;
    for (int i = 0; i < 8; ++i) {
        Bits3 bits = index_to_bits(i);
        out[1].assignment[i] = (bits[1] ^ bits[2]) == 1 ? 'A' : 'B';
    }
    // Type IV: Hamming balls around the opposite prototypes (1,1,1)/(0,0,0).
    out[3].type = ShjType::IV;
    for (int i = 0; i < 8; ++i) {
        out[3].assignment[i] = hamming(index_to_bits(i), {1, 1, 1}) <= 1 ? 'A' : 'B';
    }
    // Type VI: 3-bit parity.
    out[5].type = ShjType::VI;
    for (int i = 0; i < 8; ++i) {
        Bits3 bits = index_to_bits(i);
        out[5].assignment[i] = (bits[0] + bits[1] + bits[2]) % 2 == 0 ? 'A' : 'B';
    }

    // Types III and V are transcribed, not derivable from a compact rule.
    std::ifstream in(types_file);
    if (!in) {
        throw IoError("cannot open task transcription file: " + types_file.string());
    }
    json doc;
    try {
        doc = json::parse(in, nullptr, true, true);
    } catch (const json::exception& e) {
        throw ParseError("bad JSON in " + types_file.string() + ": " + e.what());
    }
    if (!doc.contains("types") || !doc["types"].is_object()) {
        throw ParseError(types_file.string() + ": missing \"types\" object");
    }
    for (const auto& name : {std::string("III"), std::string("V")}) {
        if (!doc["types"].contains(name)) {
            throw ParseError(types_file.string() + ": missing type " + name);
        }
        const auto& entry = doc["types"][name];
        if (!entry.contains("A") || !entry["A"].is_array()) {
            throw ParseError("type " + name + ": missing category A stimulus list");
        }
        ShepardTask task;
        task.type = shj_type_from_string(name);
        task.assignment = assignment_from_a_set(
            entry["A"].get<std::vector<std::string>>());
        out[name == "III" ? 2 : 4] = task;
    }

    for (const auto& task : out) validate_task(task);
    return out;
}

ShepardTask permute_task(const ShepardTask& task, const Permutation3& perm) {
    {
        Permutation3 sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != Permutation3{0, 1, 2}) {
            throw InvalidArgument("not a permutation of the three dimensions");
        }
    }
    ShepardTask out;
    out.type = task.type;
    for (int i = 0; i < 3; ++i) out.permutation[i] = task.permutation[perm[i]];
    for (int i = 0; i < 8; ++i) {
        Bits3 bits = index_to_bits(i);
        Bits3 reread;
        for (int d = 0; d < 3; ++d) reread[d] = bits[perm[d]];
        out.assignment[i] = task.assignment[bits_to_index(reread)];
    }
    return out;
}

std::array<Permutation3, 6> all_permutations3() {
    return {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
}

Permutation3 inverse_permutation(const Permutation3& perm) {
    Permutation3 inv{};
    for (int i = 0; i < 3; ++i) inv[perm[i]] = i;
    return inv;
}

std::vector<ShepardTask> all_tasks(const std::array<ShepardTask, 6>& canonical) {
    std::vector<ShepardTask> tasks;
    tasks.reserve(36);
    for (const auto& base : canonical) {
        for (const auto& perm : all_permutations3()) {
            tasks.push_back(permute_task(base, perm));
        }
    }
    return tasks;
}

Instance task_instance(const Bits3& bits) {
    Instance inst;
    for (int d = 0; d < 3; ++d) {
        inst["d" + std::to_string(d + 1)] = std::to_string(bits[d]);
    }
    return inst;
}

Instance task_instance(const ShepardTask& task, const Bits3& bits) {
    Instance inst = task_instance(bits);
    inst["category"] = std::string(1, task.category_of(bits));
    return inst;
}

std::string serialize_types(const std::array<ShepardTask, 6>& canonical) {
    json doc;
    doc["format"] = "shj-types 1";
    for (const auto& task : canonical) {
        if (task.type != ShjType::III && task.type != ShjType::V) continue;
        json a_list = json::array();
        for (const auto& bits : task.stimuli_of('A')) {
            a_list.push_back(bits_name(bits));
        }
        doc["types"][to_string(task.type)]["A"] = a_list;
    }
    return doc.dump(2) + "\n";
}

}  // namespace cobweb::data
