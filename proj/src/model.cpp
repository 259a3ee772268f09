#include "grl/model.hpp"

#include "grl/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace grl {

void Domains::set(const TypeSymbol& t, std::vector<Atom> atoms) {
    std::vector<Atom> unique;
    std::set<Atom> seen;
    for (auto& a : atoms) {
        if (seen.insert(a).second) unique.push_back(std::move(a));
    }
    carriers_[t] = std::move(unique);
}

const std::vector<Atom>& Domains::atoms(const TypeSymbol& t) const {
    static const std::vector<Atom> none;
    auto it = carriers_.find(t);
    return it == carriers_.end() ? none : it->second;
}

bool Domains::contains(const TypeSymbol& t, const Atom& a) const {
    const auto& v = atoms(t);
    return std::find(v.begin(), v.end(), a) != v.end();
}

bool Domains::inhabited(const Context& g) const {
    return std::all_of(g.support().begin(), g.support().end(), [&](const TypeSymbol& s) { return inhabited(s); });
}

FinRelation::FinRelation(Context context, std::set<Tuple> tuples)
    : context_(std::move(context)), tuples_(std::move(tuples)) {
    for (const auto& t : tuples_) {
        if (t.size() != context_.arity()) {
            throw Error(ErrorKind::BoundaryMismatch, "tuple of length " + std::to_string(t.size()) +
                                                         " in a relation of arity " +
                                                         std::to_string(context_.arity()));
        }
    }
}

void FinRelation::insert(Tuple t) {
    if (t.size() != context_.arity()) {
        throw Error(ErrorKind::BoundaryMismatch, "tuple of length " + std::to_string(t.size()) +
                                                     " in a relation of arity " + std::to_string(context_.arity()));
    }
    tuples_.insert(std::move(t));
}

bool FinRelation::subset_of(const FinRelation& other) const {
    if (context_ != other.context_) {
        throw Error(ErrorKind::BoundaryMismatch, "comparing relations on " + to_string(context_) + " and " +
                                                     to_string(other.context_));
    }
    return std::includes(other.tuples_.begin(), other.tuples_.end(), tuples_.begin(), tuples_.end());
}

void validate_relation(const FinRelation& r, const Domains& domains) {
    if (!r.empty() && !domains.inhabited(r.context())) {
        throw Error(ErrorKind::SupportViolation,
                    "relation on " + to_string(r.context()) + " is nonempty but its support is uninhabited");
    }
    for (const auto& t : r.tuples()) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (!domains.contains(r.context().type_at(i), t[i])) {
                throw Error(ErrorKind::TypeMismatch, "atom '" + t[i] + "' is not in the domain of type " +
                                                         r.context().type_at(i).name());
            }
        }
    }
}

ModelInstance::ModelInstance(PredicateSignature signature, Domains domains)
    : signature_(std::move(signature)), domains_(std::move(domains)) {
    for (const auto& [t, atoms] : domains_.carriers()) signature_.types().require(t);
}

void ModelInstance::set_relation(const std::string& predicate, FinRelation r) {
    const Context& declared = signature_.predicate(predicate);
    if (declared != r.context()) {
        throw Error(ErrorKind::BoundaryMismatch, "relation for '" + predicate + "' has context " +
                                                     to_string(r.context()) + ", declared " + to_string(declared));
    }
    validate_relation(r, domains_);
    relations_[predicate] = std::move(r);
}

FinRelation ModelInstance::relation(const std::string& predicate) const {
    auto it = relations_.find(predicate);
    if (it != relations_.end()) return it->second;
    return FinRelation(signature_.predicate(predicate));
}

std::vector<Tuple> tuple_space(const Context& g, const Domains& domains) {
    std::vector<Tuple> out;
    if (!domains.inhabited(g)) return out;
    Tuple current(g.arity());
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == g.arity()) {
            out.push_back(current);
            return;
        }
        for (const auto& a : domains.atoms(g.type_at(i))) {
            current[i] = a;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

namespace {

// Backtracking join over dot assignments. Atoms are interned per type.
class DiagramEvaluator {
public:
    DiagramEvaluator(const WiringDiagram& w, std::span<const FinRelation> cells, const Domains& domains)
        : w_(w), domains_(domains) {
        for (std::size_t d = 0; d < w.dot_count(); ++d) {
            const auto& ty = w.dot_types()[d];
            if (!index_.count(ty)) {
                auto& m = index_[ty];
                const auto& atoms = domains.atoms(ty);
                for (std::size_t i = 0; i < atoms.size(); ++i) m.emplace(atoms[i], i);
            }
        }
        encoded_.resize(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const Context& shell = w.inner()[c];
            for (const auto& t : cells[c].tuples()) {
                std::vector<std::size_t> row(t.size());
                bool ok = true;
                for (std::size_t j = 0; j < t.size() && ok; ++j) {
                    const auto& m = index_[shell.type_at(j)];
                    auto it = m.find(t[j]);
                    if (it == m.end()) {
                        ok = false;
                    } else {
                        row[j] = it->second;
                    }
                }
                if (ok) encoded_[c].push_back(std::move(row));
            }
        }
        order_.resize(cells.size());
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return encoded_[a].size() < encoded_[b].size(); });

        std::vector<bool> in_cell(w.dot_count(), false);
        for (std::size_t p = 0; p < w.port_offset(w.shell_count()); ++p) in_cell[w.boundary()[p]] = true;
        for (std::size_t j = 0; j < w.outer().arity(); ++j) {
            auto d = w.outer_dot(j);
            if (!in_cell[d] && std::find(free_outer_.begin(), free_outer_.end(), d) == free_outer_.end()) {
                free_outer_.push_back(d);
            }
        }
        assignment_.assign(w.dot_count(), kUnassigned);
    }

    FinRelation run() {
        FinRelation out(w_.outer());
        result_ = &out;
        join(0);
        return out;
    }

private:
    static constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

    void join(std::size_t step) {
        if (step == order_.size()) {
            enumerate_free(0);
            return;
        }
        const std::size_t c = order_[step];
        const std::size_t base = w_.port_offset(c);
        const std::size_t arity = w_.shell_arity(c);
        std::vector<std::size_t> bound;
        for (const auto& row : encoded_[c]) {
            bool ok = true;
            bound.clear();
            for (std::size_t j = 0; j < arity; ++j) {
                const std::size_t d = w_.boundary()[base + j];
                if (assignment_[d] == kUnassigned) {
                    assignment_[d] = row[j];
                    bound.push_back(d);
                } else if (assignment_[d] != row[j]) {
                    ok = false;
                    break;
                }
            }
            if (ok) join(step + 1);
            for (auto d : bound) assignment_[d] = kUnassigned;
        }
    }

    void enumerate_free(std::size_t i) {
        if (i == free_outer_.size()) {
            Tuple t(w_.outer().arity());
            for (std::size_t j = 0; j < t.size(); ++j) {
                const std::size_t d = w_.outer_dot(j);
                t[j] = domains_.atoms(w_.dot_types()[d])[assignment_[d]];
            }
            result_->insert(std::move(t));
            return;
        }
        const std::size_t d = free_outer_[i];
        const std::size_t n = domains_.atoms(w_.dot_types()[d]).size();
        for (std::size_t a = 0; a < n; ++a) {
            assignment_[d] = a;
            enumerate_free(i + 1);
        }
        assignment_[d] = kUnassigned;
    }

    const WiringDiagram& w_;
    const Domains& domains_;
    std::map<TypeSymbol, std::unordered_map<Atom, std::size_t>> index_;
    std::vector<std::vector<std::vector<std::size_t>>> encoded_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> free_outer_;
    std::vector<std::size_t> assignment_;
    FinRelation* result_ = nullptr;
};

} // namespace

FinRelation apply_diagram(const WiringDiagram& w, std::span<const FinRelation> cells, const Domains& domains) {
    if (cells.size() != w.shell_count()) {
        throw Error(ErrorKind::BoundaryMismatch, std::to_string(cells.size()) + " relations for " +
                                                     std::to_string(w.shell_count()) + " inner shells");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].context() != w.inner()[i]) {
            throw Error(ErrorKind::BoundaryMismatch, "relation on " + to_string(cells[i].context()) +
                                                         " placed in shell " + to_string(w.inner()[i]));
        }
    }
    for (const auto& s : w.support()) {
        if (!domains.inhabited(s)) return FinRelation(w.outer());
    }
    return DiagramEvaluator(w, cells, domains).run();
}

FinRelation eval(const GraphicalTerm& t, const ModelInstance& m) {
    std::vector<FinRelation> cells;
    cells.reserve(t.cells().size());
    for (std::size_t i = 0; i < t.cells().size(); ++i) {
        const Cell& c = t.cells()[i];
        if (auto* p = std::get_if<PredicateRef>(&c)) {
            FinRelation r = m.relation(p->name);
            if (r.context() != t.diagram().inner()[i]) {
                throw Error(ErrorKind::BoundaryMismatch, "predicate '" + p->name + "' is declared on " +
                                                             to_string(r.context()) + " in the model");
            }
            cells.push_back(std::move(r));
        } else {
            cells.push_back(eval(*std::get<1>(c), m));
        }
    }
    return apply_diagram(t.diagram(), cells, m.domains());
}

bool entails_in(const ModelInstance& m, const GraphicalTerm& a, const GraphicalTerm& b) {
    if (a.outer() != b.outer()) {
        throw Error(ErrorKind::BoundaryMismatch, "entailment between terms on " + to_string(a.outer()) + " and " +
                                                     to_string(b.outer()));
    }
    return eval(a, m).subset_of(eval(b, m));
}

FinRelation pushforward(const ContextMorphism& f, const FinRelation& r, [[maybe_unused]] const Domains& domains) {
    if (r.context() != f.dom()) {
        throw Error(ErrorKind::BoundaryMismatch, "pushforward expects a relation on " + to_string(f.dom()));
    }
    // Equal to P(graph_wd(f)) applied to r: each tuple is read through the
    // port map, and r nonempty already witnesses the support of dom f.
    FinRelation out(f.cod());
    for (const auto& t : r.tuples()) {
        Tuple s;
        s.reserve(f.map().size());
        for (auto i : f.map()) s.push_back(t[i]);
        out.insert(std::move(s));
    }
    return out;
}

FinRelation pullback_pred(const ContextMorphism& f, const FinRelation& r, const Domains& domains) {
    if (r.context() != f.cod()) {
        throw Error(ErrorKind::BoundaryMismatch, "pullback expects a relation on " + to_string(f.cod()));
    }
    FinRelation out(f.dom());
    if (!domains.inhabited(f.dom())) return out;

    const std::size_t n = f.dom().arity();
    std::vector<bool> constrained(n, false);
    for (auto i : f.map()) constrained[i] = true;
    std::vector<std::size_t> free_ports;
    for (std::size_t i = 0; i < n; ++i) {
        if (!constrained[i]) free_ports.push_back(i);
    }

    for (const auto& t : r.tuples()) {
        Tuple base(n);
        bool ok = true;
        std::vector<bool> set(n, false);
        for (std::size_t j = 0; j < t.size() && ok; ++j) {
            const std::size_t i = f.map()[j];
            if (set[i] && base[i] != t[j]) ok = false;
            base[i] = t[j];
            set[i] = true;
        }
        if (!ok) continue;
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (k == free_ports.size()) {
                out.insert(base);
                return;
            }
            const std::size_t i = free_ports[k];
            for (const auto& a : domains.atoms(f.dom().type_at(i))) {
                base[i] = a;
                self(self, k + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

FinRelation rho_lax(const FinRelation& a, const FinRelation& b) {
    FinRelation out(oplus(a.context(), b.context()));
    for (const auto& x : a.tuples()) {
        for (const auto& y : b.tuples()) {
            Tuple t = x;
            t.insert(t.end(), y.begin(), y.end());
            out.insert(std::move(t));
        }
    }
    return out;
}

std::pair<FinRelation, FinRelation> lambda_opl(const FinRelation& r, const Context& left, const Context& right) {
    if (oplus(left, right) != r.context()) {
        throw Error(ErrorKind::BoundaryMismatch,
                    to_string(r.context()) + " is not " + to_string(left) + " + " + to_string(right));
    }
    FinRelation l(left);
    FinRelation rr(right);
    const auto split = static_cast<std::ptrdiff_t>(left.arity());
    for (const auto& t : r.tuples()) {
        l.insert(Tuple(t.begin(), t.begin() + split));
        rr.insert(Tuple(t.begin() + split, t.end()));
    }
    return {std::move(l), std::move(rr)};
}

FinRelation meet_rel(const FinRelation& a, const FinRelation& b) {
    if (a.context() != b.context()) {
        throw Error(ErrorKind::BoundaryMismatch, "meet of relations on different contexts");
    }
    std::set<Tuple> both;
    std::set_intersection(a.tuples().begin(), a.tuples().end(), b.tuples().begin(), b.tuples().end(),
                          std::inserter(both, both.end()));
    return FinRelation(a.context(), std::move(both));
}

FinRelation true_rel(const Context& g, const Domains& domains) {
    auto space = tuple_space(g, domains);
    return FinRelation(g, std::set<Tuple>(space.begin(), space.end()));
}

} // namespace grl
