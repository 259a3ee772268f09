#include "grl/term.hpp"

#include "grl/error.hpp"

#include <algorithm>

namespace grl {

void PredicateSignature::add_predicate(const std::string& name, const Context& context) {
    if (name.empty()) throw Error(ErrorKind::UnknownName, "predicate names must be nonempty");
    for (const auto& t : context.support()) types_.require(t);
    predicates_[name] = context;
}

const Context& PredicateSignature::predicate(const std::string& name) const {
    auto it = predicates_.find(name);
    if (it == predicates_.end()) throw Error(ErrorKind::UnknownName, "unknown predicate '" + name + "'");
    return it->second;
}

namespace detail {

GraphicalTerm make_term_unchecked(WiringDiagram diagram, std::vector<Cell> cells) {
    GraphicalTerm t;
    t.diagram_ = std::move(diagram);
    t.cells_ = std::move(cells);
    return t;
}

} // namespace detail

bool GraphicalTerm::is_flat() const {
    return std::all_of(cells_.begin(), cells_.end(),
                       [](const Cell& c) { return std::holds_alternative<PredicateRef>(c); });
}

bool operator==(const GraphicalTerm& a, const GraphicalTerm& b) {
    if (!(a.diagram_ == b.diagram_) || a.cells_.size() != b.cells_.size()) return false;
    for (std::size_t i = 0; i < a.cells_.size(); ++i) {
        const Cell& x = a.cells_[i];
        const Cell& y = b.cells_[i];
        if (x.index() != y.index()) return false;
        if (auto* p = std::get_if<PredicateRef>(&x)) {
            if (!(*p == std::get<PredicateRef>(y))) return false;
        } else if (!(*std::get<1>(x) == *std::get<1>(y))) {
            return false;
        }
    }
    return true;
}

GraphicalTerm mk_term(const PredicateSignature& sig, WiringDiagram diagram, std::vector<Cell> cells) {
    if (cells.size() != diagram.shell_count()) {
        throw Error(ErrorKind::BoundaryMismatch, "term has " + std::to_string(cells.size()) + " cells for " +
                                                     std::to_string(diagram.shell_count()) + " inner shells");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Context& shell = diagram.inner()[i];
        if (auto* p = std::get_if<PredicateRef>(&cells[i])) {
            const Context& declared = sig.predicate(p->name);
            if (declared != shell) {
                throw Error(ErrorKind::BoundaryMismatch, "predicate '" + p->name + "' is declared on " +
                                                             to_string(declared) + " but shell " +
                                                             std::to_string(i + 1) + " is " + to_string(shell));
            }
        } else {
            const auto& inner = std::get<1>(cells[i]);
            if (!inner) throw Error(ErrorKind::UnknownName, "null nested term");
            if (inner->outer() != shell) {
                throw Error(ErrorKind::BoundaryMismatch, "nested term on shell " + std::to_string(i + 1) +
                                                             " has outer shell " + to_string(inner->outer()));
            }
        }
    }
    for (const auto& t : diagram.support()) sig.types().require(t);
    return detail::make_term_unchecked(std::move(diagram), std::move(cells));
}

Cell nested(GraphicalTerm t) { return std::make_shared<const GraphicalTerm>(std::move(t)); }

GraphicalTerm bare_term(const PredicateSignature& sig, const std::string& predicate) {
    return mk_term(sig, identity_wd(sig.predicate(predicate)), {PredicateRef{predicate}});
}

GraphicalTerm flatten(const GraphicalTerm& t) {
    if (t.is_flat()) return t;
    WiringDiagram diagram = t.diagram();
    std::vector<Cell> cells = t.cells();
    // Right to left so earlier slot indices stay valid.
    for (std::size_t i = cells.size(); i-- > 0;) {
        if (std::holds_alternative<PredicateRef>(cells[i])) continue;
        GraphicalTerm inner = flatten(*std::get<1>(cells[i]));
        diagram = substitute(diagram, i, inner.diagram());
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), inner.cells().begin(), inner.cells().end());
    }
    return detail::make_term_unchecked(std::move(diagram), std::move(cells));
}

GraphicalTerm meet_term(const GraphicalTerm& a, const GraphicalTerm& b) {
    if (a.outer() != b.outer()) {
        throw Error(ErrorKind::BoundaryMismatch,
                    "meet of terms on " + to_string(a.outer()) + " and " + to_string(b.outer()));
    }
    const Context& g = a.outer();
    const std::size_t n = g.arity();
    DiagramData d;
    d.inner = {g, g};
    d.outer = g;
    d.dot_types = g.typing();
    for (std::size_t copy = 0; copy < 3; ++copy) {
        for (std::size_t i = 0; i < n; ++i) d.boundary.push_back(i);
    }
    return detail::make_term_unchecked(mk_wiring(std::move(d)), {nested(a), nested(b)});
}

GraphicalTerm true_term(const Context& g) {
    DiagramData d;
    d.outer = g;
    d.dot_types = g.typing();
    for (std::size_t i = 0; i < g.arity(); ++i) d.boundary.push_back(i);
    return detail::make_term_unchecked(mk_wiring(std::move(d)), {});
}

GraphicalTerm transpose_term(const GraphicalTerm& t, const Context& left, const Context& right) {
    return detail::make_term_unchecked(braid_outer(t.diagram(), left, right), t.cells());
}

GraphicalTerm drop_cell(const GraphicalTerm& t, std::size_t slot) {
    const WiringDiagram& w = t.diagram();
    if (slot >= w.shell_count()) throw Error(ErrorKind::OutOfRange, "no inner shell " + std::to_string(slot + 1));
    DiagramData d = w.data();
    d.inner.erase(d.inner.begin() + static_cast<std::ptrdiff_t>(slot));
    const auto from = static_cast<std::ptrdiff_t>(w.port_offset(slot));
    const auto to = static_cast<std::ptrdiff_t>(w.port_offset(slot + 1));
    d.boundary.erase(d.boundary.begin() + from, d.boundary.begin() + to);
    std::vector<Cell> cells = t.cells();
    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(slot));
    return detail::make_term_unchecked(mk_wiring(std::move(d)), std::move(cells));
}

Formula to_formula(const GraphicalTerm& t) {
    if (!t.is_flat()) throw Error(ErrorKind::BoundaryMismatch, "formula rendering needs a flat term");
    const WiringDiagram& w = t.diagram();
    auto var = [](std::size_t dot) { return "v" + std::to_string(dot + 1); };

    Formula f;
    std::vector<bool> is_free(w.dot_count(), false);
    std::vector<std::string> equalities;
    for (std::size_t j = 0; j < w.outer().arity(); ++j) {
        const std::size_t d = w.outer_dot(j);
        if (!is_free[d]) {
            is_free[d] = true;
            f.free.push_back({var(d), w.dot_types()[d]});
        } else {
            std::string alias = "u" + std::to_string(j + 1);
            f.free.push_back({alias, w.dot_types()[d]});
            equalities.push_back(alias + " = " + var(d));
        }
    }

    std::vector<std::string> conjuncts;
    for (std::size_t i = 0; i < w.shell_count(); ++i) {
        std::string atom = std::get<PredicateRef>(t.cells()[i]).name + "(";
        for (std::size_t j = 0; j < w.shell_arity(i); ++j) {
            if (j) atom += ",";
            atom += var(w.dot_at(i, j));
        }
        conjuncts.push_back(atom + ")");
    }
    conjuncts.insert(conjuncts.end(), equalities.begin(), equalities.end());
    if (conjuncts.empty()) conjuncts.push_back("true");
    std::size_t label = 0;
    for (const auto& s : w.white_labels()) {
        conjuncts.push_back("∃s" + std::to_string(++label) + ":" + s.name() + ".true");
    }

    std::string body;
    for (std::size_t i = 0; i < conjuncts.size(); ++i) {
        if (i) body += " ∧ ";
        body += conjuncts[i];
    }

    std::string prefix;
    for (std::size_t d = 0; d < w.dot_count(); ++d) {
        if (is_free[d]) continue;
        prefix += prefix.empty() ? "∃" : ",";
        prefix += var(d) + ":" + w.dot_types()[d].name();
    }
    f.text = prefix.empty() ? body : prefix + ". " + body;
    return f;
}

} // namespace grl
