#ifndef GRL_DSL_HPP
#define GRL_DSL_HPP

#include "grl/context.hpp"
#include "grl/model.hpp"
#include "grl/term.hpp"
#include "grl/wiring.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace grl {

struct SourcePos {
    std::size_t line = 0;
    std::size_t col = 0;
};

struct DiagramDecl {
    std::string name;
    // Context names used in the header; empty entries were written as literals.
    std::vector<std::string> inner_names;
    std::string outer_name;
    WiringDiagram diagram;
    SourcePos pos;
};

struct TermDecl {
    std::string name;
    std::string diagram;            // empty for a bare predicate
    std::vector<std::string> args;  // predicate or term names, one per inner shell
    GraphicalTerm term;
    SourcePos pos;
};

/// Everything declared by one or more DSL sources. Every declaration is
/// validated when it is added; names of predicates, contexts, diagrams and
/// terms share one namespace.
struct Workspace {
    PredicateSignature signature;
    std::vector<std::pair<std::string, Context>> contexts;
    std::vector<DiagramDecl> diagrams;
    std::vector<TermDecl> terms;
    Domains domains;
    std::map<std::string, FinRelation> relations;

    bool has_model() const { return !domains.carriers().empty(); }
    /// Throws UnknownName when no domain has been declared.
    ModelInstance model() const;

    const Context* find_context(const std::string& name) const;
    const DiagramDecl* find_diagram(const std::string& name) const;
    const TermDecl* find_term(const std::string& name) const;
    bool name_taken(const std::string& name) const;
};

/// Parses `source` into `ws`. Relative CSV paths resolve against `base_dir`.
/// Errors carry "<origin>:<line>:<col>: " prefixes.
void parse_dsl(const std::string& source, Workspace& ws, const std::string& origin = "<input>",
               const std::string& base_dir = ".");
Workspace parse_dsl(const std::string& source);
/// Reads and parses a file.
void load_dsl_file(const std::string& path, Workspace& ws);

/// Loads CSV rows as tuples of a declared predicate. Rows are checked against
/// the domains; duplicates collapse. When `header` is set the first row is skipped.
void ingest_csv(Workspace& ws, const std::string& predicate, const std::string& path, bool header = false);

/// Canonical text: types, predicates, contexts, diagrams, terms, domains,
/// relations. Parsing the output and printing again reproduces it.
std::string print_workspace(const Workspace& ws);

std::string print_context(const Context& c);
std::string print_diagram(const std::string& name, const WiringDiagram& w,
                          const std::vector<std::string>& inner_names = {}, const std::string& outer_name = "");
std::string print_atom(const Atom& a);
std::string print_tuple(const Tuple& t);

} // namespace grl

#endif // GRL_DSL_HPP
