#pragma once

// Hand-rolled random generators for contexts, morphisms, diagrams, terms and
// finite models. Everything is driven by an explicit std::mt19937 so failures
// reproduce from the seed.

#include "grl/context.hpp"
#include "grl/model.hpp"
#include "grl/term.hpp"
#include "grl/wiring.hpp"

#include <random>
#include <string>
#include <vector>

namespace grl::testing {

using Rng = std::mt19937;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline std::vector<TypeSymbol> type_pool(std::size_t n) {
    static const char* names[] = {"x", "y", "z", "w", "v"};
    return {names, names + n};
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
    return v[uniform(rng, 0, v.size() - 1)];
}

inline std::vector<TypeSymbol> random_subset(Rng& rng, const std::vector<TypeSymbol>& pool, double p) {
    std::vector<TypeSymbol> out;
    for (const auto& t : pool) {
        if (coin(rng, p)) out.push_back(t);
    }
    return out;
}

inline Context random_context(Rng& rng, const std::vector<TypeSymbol>& types, std::size_t max_arity,
                              double extra_p = 0.2) {
    std::vector<TypeSymbol> typing;
    const std::size_t n = uniform(rng, 0, max_arity);
    for (std::size_t i = 0; i < n; ++i) typing.push_back(pick(rng, types));
    return Context(typing, random_subset(rng, types, extra_p));
}

/// A random morphism out of `dom`: codomain ports pick domain ports, and the
/// codomain support is a random part of the domain support.
inline ContextMorphism random_morphism_from(Rng& rng, const Context& dom, std::size_t max_arity) {
    std::vector<std::size_t> map;
    std::vector<TypeSymbol> typing;
    if (dom.arity() > 0) {
        const std::size_t m = uniform(rng, 0, max_arity);
        for (std::size_t j = 0; j < m; ++j) {
            map.push_back(uniform(rng, 0, dom.arity() - 1));
            typing.push_back(dom.type_at(map.back()));
        }
    }
    Context cod(typing, random_subset(rng, dom.support(), 0.3));
    return ContextMorphism(dom, cod, map);
}

inline ContextMorphism random_morphism(Rng& rng, const std::vector<TypeSymbol>& types, std::size_t max_arity) {
    return random_morphism_from(rng, random_context(rng, types, max_arity), max_arity);
}

/// A random diagram with the given outer shell. Dots are drawn first, then
/// every port (inner and outer) picks a dot of its type or a fresh one.
inline WiringDiagram random_diagram_with_outer(Rng& rng, const std::vector<TypeSymbol>& types, const Context& outer,
                                               std::size_t max_shells, std::size_t max_arity,
                                               std::size_t max_dots = 4) {
    DiagramData d;
    d.outer = outer;
    const std::size_t seed_dots = uniform(rng, 0, max_dots);
    for (std::size_t i = 0; i < seed_dots; ++i) d.dot_types.push_back(pick(rng, types));

    auto dot_for = [&](const TypeSymbol& t) {
        std::vector<std::size_t> same;
        for (std::size_t i = 0; i < d.dot_types.size(); ++i) {
            if (d.dot_types[i] == t) same.push_back(i);
        }
        if (same.empty() || (d.dot_types.size() < max_dots && coin(rng, 0.3))) {
            d.dot_types.push_back(t);
            return d.dot_types.size() - 1;
        }
        return pick(rng, same);
    };

    std::vector<std::size_t> inner_ports;
    const std::size_t k = uniform(rng, 0, max_shells);
    for (std::size_t s = 0; s < k; ++s) {
        Context shell = random_context(rng, types, max_arity, 0.15);
        for (std::size_t j = 0; j < shell.arity(); ++j) inner_ports.push_back(dot_for(shell.type_at(j)));
        d.inner.push_back(std::move(shell));
    }
    d.boundary = inner_ports;
    for (std::size_t j = 0; j < outer.arity(); ++j) d.boundary.push_back(dot_for(outer.type_at(j)));
    d.extra_support = random_subset(rng, types, 0.15);
    return mk_wiring(std::move(d));
}

inline WiringDiagram random_diagram(Rng& rng, const std::vector<TypeSymbol>& types, std::size_t max_shells,
                                    std::size_t max_arity, std::size_t max_dots = 4) {
    return random_diagram_with_outer(rng, types, random_context(rng, types, max_arity, 0.15), max_shells, max_arity,
                                     max_dots);
}

/// Randomly merges dots of equal type (connect wires) and adds support
/// symbols: the result `c` satisfies c <= w.
inline WiringDiagram random_coarsening(Rng& rng, const WiringDiagram& w, const std::vector<TypeSymbol>& types) {
    DiagramData d = w.data();
    std::vector<std::size_t> target(w.dot_count());
    for (std::size_t i = 0; i < w.dot_count(); ++i) {
        target[i] = i;
        if (coin(rng, 0.4)) {
            for (std::size_t j = 0; j < i; ++j) {
                if (w.dot_types()[j] == w.dot_types()[i] && target[j] == j) {
                    target[i] = j;
                    break;
                }
            }
        }
    }
    for (auto& b : d.boundary) b = target[b];
    for (const auto& t : random_subset(rng, types, 0.2)) d.extra_support.push_back(t);
    return mk_wiring(std::move(d));
}

/// Signature with predicates over every context in `shells`, named P0, P1, ...
inline PredicateSignature signature_for(const std::vector<TypeSymbol>& types, const std::vector<Context>& shells) {
    PredicateSignature sig;
    for (const auto& t : types) sig.add_type(t);
    for (std::size_t i = 0; i < shells.size(); ++i) sig.add_predicate("P" + std::to_string(i), shells[i]);
    return sig;
}

/// A flat term whose cells are fresh predicates, one per inner shell.
inline GraphicalTerm term_with_fresh_predicates(PredicateSignature& sig, const WiringDiagram& w) {
    std::vector<Cell> cells;
    for (const auto& shell : w.inner()) {
        std::string name = "P" + std::to_string(sig.predicates().size());
        sig.add_predicate(name, shell);
        cells.push_back(PredicateRef{name});
    }
    return mk_term(sig, w, std::move(cells));
}

/// A flat term over an existing signature: each cell picks a predicate with a
/// matching shell, and shells are drawn from the predicate contexts.
inline GraphicalTerm random_term_over(Rng& rng, const PredicateSignature& sig, const Context& outer,
                                      std::size_t max_cells, std::size_t max_dots) {
    std::vector<std::pair<std::string, Context>> preds(sig.predicates().begin(), sig.predicates().end());
    std::vector<TypeSymbol> types(sig.types().begin(), sig.types().end());
    DiagramData d;
    d.outer = outer;
    auto dot_for = [&](const TypeSymbol& t) {
        std::vector<std::size_t> same;
        for (std::size_t i = 0; i < d.dot_types.size(); ++i) {
            if (d.dot_types[i] == t) same.push_back(i);
        }
        if (same.empty() || (d.dot_types.size() < max_dots && coin(rng, 0.4))) {
            d.dot_types.push_back(t);
            return d.dot_types.size() - 1;
        }
        return pick(rng, same);
    };
    std::vector<std::size_t> outer_ports;
    for (std::size_t j = 0; j < outer.arity(); ++j) outer_ports.push_back(dot_for(outer.type_at(j)));
    std::vector<Cell> cells;
    const std::size_t k = preds.empty() ? 0 : uniform(rng, 0, max_cells);
    for (std::size_t c = 0; c < k; ++c) {
        const auto& [name, shell] = pick(rng, preds);
        d.inner.push_back(shell);
        for (std::size_t j = 0; j < shell.arity(); ++j) d.boundary.push_back(dot_for(shell.type_at(j)));
        cells.push_back(PredicateRef{name});
    }
    d.boundary.insert(d.boundary.end(), outer_ports.begin(), outer_ports.end());
    if (!types.empty() && coin(rng, 0.2)) d.extra_support.push_back(pick(rng, types));
    return mk_term(sig, mk_wiring(std::move(d)), std::move(cells));
}

inline Domains random_domains(Rng& rng, const std::vector<TypeSymbol>& types, std::size_t max_size,
                              double empty_p = 0.1) {
    Domains dom;
    for (const auto& t : types) {
        std::size_t n = coin(rng, empty_p) ? 0 : uniform(rng, 1, max_size);
        std::vector<Atom> atoms;
        for (std::size_t i = 0; i < n; ++i) atoms.push_back(t.name() + std::to_string(i));
        dom.set(t, std::move(atoms));
    }
    return dom;
}

inline FinRelation random_relation(Rng& rng, const Context& g, const Domains& domains, double density = 0.5) {
    FinRelation r(g);
    for (auto& t : tuple_space(g, domains)) {
        if (coin(rng, density)) r.insert(std::move(t));
    }
    return r;
}

inline ModelInstance random_model(Rng& rng, const PredicateSignature& sig, std::size_t max_size,
                                  double empty_p = 0.1, double density = 0.5) {
    std::vector<TypeSymbol> types(sig.types().begin(), sig.types().end());
    ModelInstance m(sig, random_domains(rng, types, max_size, empty_p));
    for (const auto& [name, ctx] : sig.predicates()) m.set_relation(name, random_relation(rng, ctx, m.domains(), density));
    return m;
}

} // namespace grl::testing
