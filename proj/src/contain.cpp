#include "grl/contain.hpp"

#include "grl/error.hpp"

#include <map>

namespace grl {

namespace {

void collect(const GraphicalTerm& t, PredicateSignature& sig) {
    for (const auto& s : t.diagram().support()) sig.add_type(s);
    for (std::size_t i = 0; i < t.cells().size(); ++i) {
        const Cell& c = t.cells()[i];
        if (auto* p = std::get_if<PredicateRef>(&c)) {
            const Context& shell = t.diagram().inner()[i];
            if (sig.has_predicate(p->name)) {
                if (sig.predicate(p->name) != shell) {
                    throw Error(ErrorKind::BoundaryMismatch, "predicate '" + p->name + "' is used on " +
                                                                 to_string(sig.predicate(p->name)) + " and " +
                                                                 to_string(shell));
                }
            } else {
                for (const auto& s : shell.support()) sig.add_type(s);
                sig.add_predicate(p->name, shell);
            }
        } else {
            collect(*std::get<1>(c), sig);
        }
    }
}

std::string dot_atom(std::size_t d) { return "d" + std::to_string(d + 1); }

} // namespace

PredicateSignature signature_of(const std::vector<const GraphicalTerm*>& terms) {
    PredicateSignature sig;
    for (const auto* t : terms) collect(*t, sig);
    return sig;
}

CanonicalInstance canonical_instance(const GraphicalTerm& t) { return canonical_instance(t, signature_of({&t})); }

CanonicalInstance canonical_instance(const GraphicalTerm& t, const PredicateSignature& sig) {
    if (!t.is_flat()) throw Error(ErrorKind::BoundaryMismatch, "canonical instance needs a flat term");
    const WiringDiagram& w = t.diagram();

    std::map<TypeSymbol, std::vector<Atom>> carriers;
    for (std::size_t d = 0; d < w.dot_count(); ++d) carriers[w.dot_types()[d]].push_back(dot_atom(d));
    for (const auto& s : w.white_labels()) carriers[s].push_back("_" + s.name());
    Domains domains;
    for (const auto& ty : sig.types()) domains.set(ty, carriers[ty]);
    for (const auto& [ty, atoms] : carriers) sig.types().require(ty);

    ModelInstance m(sig, domains);
    std::map<std::string, FinRelation> rels;
    for (std::size_t i = 0; i < w.shell_count(); ++i) {
        const auto& name = std::get<PredicateRef>(t.cells()[i]).name;
        auto it = rels.try_emplace(name, FinRelation(sig.predicate(name))).first;
        Tuple row;
        for (std::size_t j = 0; j < w.shell_arity(i); ++j) row.push_back(dot_atom(w.dot_at(i, j)));
        it->second.insert(std::move(row));
    }
    for (auto& [name, r] : rels) m.set_relation(name, std::move(r));

    Tuple frozen;
    for (std::size_t j = 0; j < w.outer().arity(); ++j) frozen.push_back(dot_atom(w.outer_dot(j)));
    return {std::move(m), std::move(frozen)};
}

bool contains(const GraphicalTerm& t, const GraphicalTerm& t2) {
    if (t.outer() != t2.outer()) {
        throw Error(ErrorKind::BoundaryMismatch,
                    "containment between terms on " + to_string(t.outer()) + " and " + to_string(t2.outer()));
    }
    const GraphicalTerm a = flatten(t);
    const GraphicalTerm b = flatten(t2);
    const auto canon = canonical_instance(a, signature_of({&a, &b}));
    return eval(b, canon.instance).contains(canon.frozen);
}

GraphicalTerm minimize_core(const GraphicalTerm& t) {
    const GraphicalTerm original = flatten(t);
    GraphicalTerm current = original;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < current.cells().size(); ++i) {
            GraphicalTerm candidate = drop_cell(current, i);
            if (contains(candidate, original) && contains(original, candidate)) {
                current = std::move(candidate);
                changed = true;
                break;
            }
        }
    }
    return current;
}

} // namespace grl
