#include "grl/dot.hpp"

#include <sstream>

namespace grl {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string typing_text(const Context& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.arity(); ++i) out += (i ? ", " : "") + c.type_at(i).name();
    const auto extra = c.extra_support();
    if (!extra.empty()) {
        out += c.arity() ? " | " : "| ";
        for (std::size_t i = 0; i < extra.size(); ++i) out += (i ? ", " : "") + extra[i].name();
    }
    return out + ")";
}

std::string port_id(std::size_t shell, std::size_t k, std::size_t j) {
    return (shell == k ? std::string("out") : "s" + std::to_string(shell + 1)) + "_" + std::to_string(j + 1);
}

} // namespace

std::string emit_dot(const WiringDiagram& w, const std::string& name, const std::vector<std::string>& cell_labels) {
    const std::size_t k = w.shell_count();
    std::ostringstream out;
    out << "graph " << quoted(name) << " {\n";
    out << "  node [fontsize=10];\n";
    for (std::size_t s = 0; s <= k; ++s) {
        const bool outer = s == k;
        const Context& c = outer ? w.outer() : w.inner()[s];
        std::string label = outer ? "out" : std::to_string(s + 1);
        if (!outer && s < cell_labels.size() && !cell_labels[s].empty()) label += ": " + cell_labels[s];
        label += " " + typing_text(c);
        out << "  subgraph " << (outer ? std::string("cluster_out") : "cluster_s" + std::to_string(s + 1)) << " {\n";
        out << "    label=" << quoted(label) << ";\n";
        out << "    style=" << (outer ? "dashed" : "solid") << ";\n";
        for (std::size_t j = 0; j < c.arity(); ++j) {
            out << "    " << port_id(s, k, j) << " [label=" << quoted(std::to_string(j + 1)) << ", shape=box];\n";
        }
        out << "  }\n";
    }
    for (std::size_t d = 0; d < w.dot_count(); ++d) {
        out << "  d" << d + 1 << " [label=" << quoted(w.dot_types()[d].name())
            << ", shape=circle, style=filled, fillcolor=black, fontcolor=white];\n";
    }
    const auto white = w.white_labels();
    if (!white.empty()) {
        std::string label = "{";
        for (std::size_t i = 0; i < white.size(); ++i) label += (i ? "," : "") + white[i].name();
        out << "  white [label=" << quoted(label + "}") << ", shape=circle, style=solid];\n";
    }
    for (std::size_t s = 0; s <= k; ++s) {
        for (std::size_t j = 0; j < w.shell_arity(s); ++j) {
            out << "  " << port_id(s, k, j) << " -- d" << w.dot_at(s, j) + 1 << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string emit_dot(const GraphicalTerm& t, const std::string& name) {
    const GraphicalTerm flat = flatten(t);
    std::vector<std::string> labels;
    for (const auto& cell : flat.cells()) labels.push_back(std::get<PredicateRef>(cell).name);
    return emit_dot(flat.diagram(), name, labels);
}

} // namespace grl
