#include "data/curves.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace cobweb::data {

namespace {

const std::vector<int>& odd_blocks() {
    static const std::vector<int> blocks = {1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23};
    return blocks;
}

}  // namespace

HumanCurves HumanCurves::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open curves file: " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_csv_text(buffer.str());
}

HumanCurves HumanCurves::from_csv_text(const std::string& text) {
    HumanCurves curves;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "type,block,accuracy") {
                throw ParseError("curves CSV: expected header type,block,accuracy");
            }
            header_seen = true;
            continue;
        }
        std::istringstream ls(line);
        std::string type_tok, block_tok, acc_tok;
        if (!std::getline(ls, type_tok, ',') || !std::getline(ls, block_tok, ',') ||
            !std::getline(ls, acc_tok)) {
            throw ParseError("curves CSV line " + std::to_string(line_no) +
                             ": expected 3 fields");
        }
        ShjType type = shj_type_from_string(type_tok);
        int block = 0;
        double acc = 0;
        try {
            block = std::stoi(block_tok);
            acc = std::stod(acc_tok);
        } catch (const std::exception&) {
            throw ParseError("curves CSV line " + std::to_string(line_no) +
                             ": bad number");
        }
        if (curves.accuracy_[type].contains(block)) {
            throw ValidationError("curves CSV: duplicate entry for type " + type_tok +
                                  " block " + block_tok);
        }
        curves.accuracy_[type][block] = acc;
    }
    curves.validate();
    return curves;
}

void HumanCurves::validate() const {
    for (ShjType type : kShjTypes) {
        auto it = accuracy_.find(type);
        if (it == accuracy_.end()) {
            throw ValidationError("curves: missing type " + to_string(type));
        }
        if (it->second.size() != odd_blocks().size()) {
            throw ValidationError("curves: type " + to_string(type) + " must have " +
                                  std::to_string(odd_blocks().size()) + " blocks");
        }
        for (int block : odd_blocks()) {
            auto bit = it->second.find(block);
            if (bit == it->second.end()) {
                throw ValidationError("curves: type " + to_string(type) +
                                      " missing block " + std::to_string(block));
            }
            if (bit->second < 0.0 || bit->second > 1.0) {
                throw ValidationError("curves: accuracy out of [0,1] at type " +
                                      to_string(type) + " block " + std::to_string(block));
            }
        }
    }
}

double HumanCurves::accuracy(ShjType type, int block) const {
    auto it = accuracy_.find(type);
    if (it == accuracy_.end()) throw InvalidArgument("unknown type");
    auto bit = it->second.find(block);
    if (bit == it->second.end()) {
        throw InvalidArgument("no human data for block " + std::to_string(block));
    }
    return bit->second;
}

const std::vector<int>& HumanCurves::blocks() const { return odd_blocks(); }

std::vector<double> HumanCurves::block_profile(int block) const {
    std::vector<double> out;
    out.reserve(kShjTypes.size());
    for (ShjType type : kShjTypes) out.push_back(accuracy(type, block));
    return out;
}

std::string HumanCurves::serialize() const {
    std::ostringstream out;
    out << "type,block,accuracy\n";
    for (ShjType type : kShjTypes) {
        for (int block : odd_blocks()) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.3f", accuracy(type, block));
            out << to_string(type) << ',' << block << ',' << buf << '\n';
        }
    }
    return out.str();
}

}  // namespace cobweb::data
