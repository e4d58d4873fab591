#include "core/export.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

#include "core/errors.hpp"
#include "core/info.hpp"

namespace cobweb {

namespace {

void require_token(const std::string& token) {
    if (token.empty()) throw ParseError("empty identifier in tree text");
    for (char c : token) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '"') {
            throw ParseError("identifier contains whitespace or quotes: " + token);
        }
    }
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_structured(const ConceptTree& tree, const ConceptNode& node, int parent_id,
                      int& next_id, std::ostringstream& out) {
    const int id = next_id++;
    out << "node " << id << ' ';
    if (parent_id < 0) {
        out << '-';
    } else {
        out << parent_id;
    }
    out << ' ' << node.n() << '\n';
    out << "# cu " << format_double(tree.category_utility(node)) << '\n';
    for (const auto& [attr, values] : node.table().counts()) {
        require_token(attr);
        for (const auto& [value, k] : values) {
            require_token(value);
            if (k != 0) out << "  " << attr << ' ' << value << ' ' << k << '\n';
        }
    }
    for (std::size_t i = 0; i < node.child_count(); ++i) {
        write_structured(tree, node.child(i), id, next_id, out);
    }
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

void write_dot(const ConceptTree& tree, const ConceptNode& node, int parent_id,
               int& next_id, std::ostringstream& out) {
    const int id = next_id++;
    char cu[32];
    std::snprintf(cu, sizeof(cu), "%.3f", tree.category_utility(node));
    out << "  n" << id << " [label=\"n=" << node.n() << "\\ncu=" << cu;
    for (const auto& [attr, values] : node.table().counts()) {
        out << "\\n" << dot_escape(attr) << ":";
        bool first = true;
        for (const auto& [value, k] : values) {
            if (k == 0) continue;
            out << (first ? " " : ", ") << dot_escape(value) << " " << k;
            first = false;
        }
    }
    out << "\"];\n";
    if (parent_id >= 0) {
        out << "  n" << parent_id << " -> n" << id << ";\n";
    }
    for (std::size_t i = 0; i < node.child_count(); ++i) {
        write_dot(tree, node.child(i), id, next_id, out);
    }
}

}  // namespace

std::string export_tree(const ConceptTree& tree, ExportFormat format) {
    std::ostringstream out;
    int next_id = 0;
    if (format == ExportFormat::Structured) {
        out << "cobweb-tree 1\n";
        write_structured(tree, tree.root(), -1, next_id, out);
    } else {
        out << "digraph cobweb {\n  node [shape=box];\n";
        write_dot(tree, tree.root(), -1, next_id, out);
        out << "}\n";
    }
    return out.str();
}

ConceptTree ConceptTree::from_structured(const std::string& text, std::uint64_t seed) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "cobweb-tree 1") {
        throw ParseError("tree text missing 'cobweb-tree 1' header");
    }

    ConceptTree tree(seed);
    std::vector<ConceptNode*> by_id;
    ConceptNode* current = nullptr;

    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (line.rfind("node ", 0) == 0) {
            std::string tag, parent_tok;
            long id = 0;
            std::int64_t n = 0;
            if (!(ls >> tag >> id >> parent_tok >> n) || n < 0) {
                throw ParseError("malformed node line: " + line);
            }
            if (id != static_cast<long>(by_id.size())) {
                throw ParseError("node ids must be consecutive preorder indices");
            }
            ConceptNode* node = nullptr;
            if (parent_tok == "-") {
                if (id != 0) throw ParseError("only the first node may lack a parent");
                node = tree.root_.get();
            } else {
                std::size_t parent_id = 0;
                auto [ptr, ec] = std::from_chars(
                    parent_tok.data(), parent_tok.data() + parent_tok.size(), parent_id);
                if (ec != std::errc{} || parent_id >= by_id.size()) {
                    throw ParseError("unknown parent id in line: " + line);
                }
                auto child = std::make_unique<ConceptNode>();
                child->parent_ = by_id[parent_id];
                node = child.get();
                by_id[parent_id]->children_.push_back(std::move(child));
            }
            node->n_ = n;
            by_id.push_back(node);
            current = node;
        } else {
            if (current == nullptr) throw ParseError("count line before any node: " + line);
            std::string attr, value;
            std::int64_t k = 0;
            if (!(ls >> attr >> value >> k) || k < 0) {
                throw ParseError("malformed count line: " + line);
            }
            current->table_.add(attr, value, k);
        }
    }
    if (by_id.empty()) throw ParseError("tree text contains no nodes");
    return tree;
}

}  // namespace cobweb
