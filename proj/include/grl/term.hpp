#ifndef GRL_TERM_HPP
#define GRL_TERM_HPP

#include "grl/context.hpp"
#include "grl/wiring.hpp"

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace grl {

/// Types plus predicate symbols with their declared shells.
class PredicateSignature {
public:
    PredicateSignature() = default;
    explicit PredicateSignature(TypeSet types) : types_(std::move(types)) {}

    const TypeSet& types() const { return types_; }
    void add_type(const TypeSymbol& t) { types_.insert(t); }

    /// Throws UnknownType if the context uses an undeclared symbol.
    void add_predicate(const std::string& name, const Context& context);
    bool has_predicate(const std::string& name) const { return predicates_.count(name) != 0; }
    const Context& predicate(const std::string& name) const;
    const std::map<std::string, Context>& predicates() const { return predicates_; }

    friend bool operator==(const PredicateSignature&, const PredicateSignature&) = default;

private:
    TypeSet types_;
    std::map<std::string, Context> predicates_;
};

class GraphicalTerm;

struct PredicateRef {
    std::string name;
    friend bool operator==(const PredicateRef&, const PredicateRef&) = default;
};

/// An inner-shell annotation: a predicate symbol or a nested term.
using Cell = std::variant<PredicateRef, std::shared_ptr<const GraphicalTerm>>;

namespace detail {
// Assembles a term from parts already known to fit together.
GraphicalTerm make_term_unchecked(WiringDiagram diagram, std::vector<Cell> cells);
} // namespace detail

/// A wiring diagram whose inner shells are annotated by cells.
class GraphicalTerm {
public:
    const WiringDiagram& diagram() const { return diagram_; }
    const std::vector<Cell>& cells() const { return cells_; }
    const Context& outer() const { return diagram_.outer(); }
    bool is_flat() const;

    friend bool operator==(const GraphicalTerm& a, const GraphicalTerm& b);

private:
    friend GraphicalTerm mk_term(const PredicateSignature&, WiringDiagram, std::vector<Cell>);
    friend GraphicalTerm detail::make_term_unchecked(WiringDiagram, std::vector<Cell>);

    WiringDiagram diagram_;
    std::vector<Cell> cells_;
};

GraphicalTerm mk_term(const PredicateSignature& sig, WiringDiagram diagram, std::vector<Cell> cells);

Cell nested(GraphicalTerm t);

/// A single predicate in an identity diagram.
GraphicalTerm bare_term(const PredicateSignature& sig, const std::string& predicate);

/// Substitute every nested term into its slot, leaving only predicate cells.
GraphicalTerm flatten(const GraphicalTerm& t);

/// (t1, t2; mu) -- both terms merged along every port.
GraphicalTerm meet_term(const GraphicalTerm& a, const GraphicalTerm& b);

/// (; epsilon) -- no cells, one dot per outer port, the outer support asserted.
GraphicalTerm true_term(const Context& g);

/// Swap the outer blocks of a term whose outer shell is left + right.
GraphicalTerm transpose_term(const GraphicalTerm& t, const Context& left, const Context& right);

/// Remove inner shell `slot` (and its cell). Dots left without ports keep
/// their type in the support.
GraphicalTerm drop_cell(const GraphicalTerm& t, std::size_t slot);

struct FreeVariable {
    std::string name;
    TypeSymbol type;
};

/// A regular-logic rendering of a flat term: one variable per dot.
struct Formula {
    std::vector<FreeVariable> free;  // one per outer port
    std::string text;
};

Formula to_formula(const GraphicalTerm& t);

} // namespace grl

#endif // GRL_TERM_HPP
