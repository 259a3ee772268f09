#ifndef GRL_DOT_HPP
#define GRL_DOT_HPP

#include "grl/term.hpp"
#include "grl/wiring.hpp"

#include <string>
#include <vector>

namespace grl {

/// Graphviz text for a diagram. Each shell is a cluster of numbered ports
/// joined to filled dot nodes labeled by type. An open node lists the support
/// not carried by any dot. `cell_labels`, when given, names the inner shells.
std::string emit_dot(const WiringDiagram& w, const std::string& name = "diagram",
                     const std::vector<std::string>& cell_labels = {});

/// The flattened term, with each shell labeled by its predicate.
std::string emit_dot(const GraphicalTerm& t, const std::string& name = "term");

} // namespace grl

#endif // GRL_DOT_HPP
