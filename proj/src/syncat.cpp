#include "grl/syncat.hpp"

#include "grl/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grl {

namespace {

std::vector<std::size_t> range(std::size_t from, std::size_t count) {
    std::vector<std::size_t> v(count);
    std::iota(v.begin(), v.end(), from);
    return v;
}

std::vector<std::size_t> concat(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<TypeSymbol> concat_types(std::initializer_list<const Context*> parts) {
    std::vector<TypeSymbol> out;
    for (const Context* c : parts) out.insert(out.end(), c->typing().begin(), c->typing().end());
    return out;
}

void require_same(const SynObject& a, const SynObject& b, const char* what) {
    if (!(a == b)) {
        throw Error(ErrorKind::BoundaryMismatch, std::string(what) + ": endpoint (" + to_string(a.context) + ", " +
                                                     std::to_string(a.predicate.size()) + " tuples) differs from (" +
                                                     to_string(b.context) + ", " + std::to_string(b.predicate.size()) +
                                                     " tuples)");
    }
}

// Γ₁ ⊕ Γ₂ -> Γ₁ ⊕ Γ₂ ⊕ Γ₁ (or ⊕ Γ₂): keep θ and copy one block.
ContextMorphism copy_block(const Context& g1, const Context& g2, bool left) {
    const std::size_t n1 = g1.arity();
    const std::size_t n2 = g2.arity();
    const Context dom = oplus(g1, g2);
    const Context cod = oplus(dom, left ? g1 : g2);
    return mk_morphism(dom, cod, concat(range(0, n1 + n2), left ? range(0, n1) : range(n1, n2)));
}

} // namespace

SyntacticCategory::SyntacticCategory(Domains domains) : domains_(std::move(domains)) {}

const WiringDiagram& SyntacticCategory::diagram(Shape shape, const Context& a, const Context& b,
                                                const Context& c) const {
    auto it = diagrams_.find(ShapeRef{shape, a, b, c});
    if (it != diagrams_.end()) return it->second;
    const std::size_t n1 = a.arity(), n2 = b.arity(), n3 = c.arity();
    DiagramData d;
    d.dot_types = concat_types({&a, &b, &c});
    switch (shape) {
    case Shape::Compose:
        // (a ⊕ b, b ⊕ c) -> a ⊕ c, joined along b.
        d.inner = {oplus(a, b), oplus(b, c)};
        d.outer = oplus(a, c);
        d.boundary = concat(concat(range(0, n1 + n2), range(n1, n2 + n3)), concat(range(0, n1), range(n1 + n2, n3)));
        break;
    case Shape::Determinism:
    case Shape::Pair:
        // (a ⊕ b, a ⊕ c) -> a ⊕ b ⊕ c, sharing a.
        d.inner = {oplus(a, b), oplus(a, c)};
        d.outer = oplus(oplus(a, b), c);
        d.boundary = concat(concat(range(0, n1 + n2), concat(range(0, n1), range(n1 + n2, n3))), range(0, n1 + n2 + n3));
        break;
    }
    return diagrams_.emplace(ShapeKey{shape, a, b, c}, mk_wiring(std::move(d))).first->second;
}

SynObject SyntacticCategory::object(const Context& g, FinRelation phi) const {
    if (phi.context() != g) {
        throw Error(ErrorKind::BoundaryMismatch,
                    "predicate on " + to_string(phi.context()) + " used as an object over " + to_string(g));
    }
    validate_relation(phi, domains_);
    return {g, std::move(phi)};
}

SynObject SyntacticCategory::top(const Context& g) const { return {g, true_rel(g, domains_)}; }

InternalRelation SyntacticCategory::mk_internal_relation(const SynObject& dom, const SynObject& cod,
                                                         FinRelation theta) const {
    object(dom.context, dom.predicate);
    object(cod.context, cod.predicate);
    const Context joint = oplus(dom.context, cod.context);
    if (theta.context() != joint) {
        throw Error(ErrorKind::BoundaryMismatch,
                    "relation on " + to_string(theta.context()) + " between objects over " + to_string(joint));
    }
    validate_relation(theta, domains_);
    const auto [left, right] = lambda_opl(theta, dom.context, cod.context);
    auto check = [](const FinRelation& marginal, const SynObject& end, const char* side) {
        for (const auto& t : marginal.tuples()) {
            if (end.predicate.contains(t)) continue;
            std::string row;
            for (const auto& a : t) row += (row.empty() ? "" : ",") + a;
            throw Error(ErrorKind::MarginalViolation,
                        std::string(side) + " marginal contains (" + row + ") outside its endpoint");
        }
    };
    check(left, dom, "left");
    check(right, cod, "right");
    return {dom, cod, std::move(theta)};
}

bool SyntacticCategory::satisfies_unit_law(const SynObject& dom, const SynObject& cod, const FinRelation& theta) const {
    // Typed compositions without the marginal check on θ.
    const InternalRelation raw{dom, cod, theta};
    const auto once = compose_ir(identity_ir(dom), raw);
    return compose_ir(once, identity_ir(cod)).theta == theta;
}

InternalRelation SyntacticCategory::compose_ir(const InternalRelation& a, const InternalRelation& b) const {
    require_same(a.cod, b.dom, "composition");
    const Context& g1 = a.dom.context;
    const Context& g2 = a.cod.context;
    const Context& g3 = b.cod.context;
    const FinRelation cells[] = {a.theta, b.theta};
    return {a.dom, b.cod, apply_diagram(diagram(Shape::Compose, g1, g2, g3), cells, domains_)};
}

InternalRelation SyntacticCategory::identity_ir(const SynObject& o) const {
    return {o, o, pushforward(diagonal_cm(o.context), o.predicate, domains_)};
}

InternalRelation SyntacticCategory::transpose_ir(const InternalRelation& a) const {
    const std::size_t n1 = a.dom.context.arity();
    FinRelation out(oplus(a.cod.context, a.dom.context));
    for (const auto& t : a.theta.tuples()) {
        Tuple s(t.begin() + static_cast<std::ptrdiff_t>(n1), t.end());
        s.insert(s.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(n1));
        out.insert(std::move(s));
    }
    return {a.cod, a.dom, std::move(out)};
}

bool SyntacticCategory::leq_ir(const InternalRelation& a, const InternalRelation& b) const {
    require_same(a.dom, b.dom, "order");
    require_same(a.cod, b.cod, "order");
    return a.theta.subset_of(b.theta);
}

InternalRelation SyntacticCategory::meet_ir(const InternalRelation& a, const InternalRelation& b) const {
    require_same(a.dom, b.dom, "meet");
    require_same(a.cod, b.cod, "meet");
    return {a.dom, a.cod, meet_rel(a.theta, b.theta)};
}

std::pair<FinRelation, FinRelation> SyntacticCategory::determinism_sides(const InternalRelation& a) const {
    const Context& g1 = a.dom.context;
    const Context& g2 = a.cod.context;
    const FinRelation cells[] = {a.theta, a.theta};
    FinRelation shared = apply_diagram(diagram(Shape::Determinism, g1, g2, g2), cells, domains_);
    FinRelation copied = pushforward(copy_block(g1, g2, false), a.theta, domains_);
    return {std::move(shared), std::move(copied)};
}

bool SyntacticCategory::RelationLess::operator()(const InternalRelation& l, const InternalRelation& r) const {
    auto key = [](const InternalRelation& x) {
        return std::tie(x.theta.context(), x.theta.tuples(), x.dom.context, x.dom.predicate.tuples(), x.cod.context,
                        x.cod.predicate.tuples());
    };
    return key(l) < key(r);
}

Classification SyntacticCategory::classify(const InternalRelation& a) const {
    if (auto it = classified_.find(a); it != classified_.end()) return it->second;
    Classification c;
    c.total = a.dom.predicate.subset_of(lambda_opl(a.theta, a.dom.context, a.cod.context).first);
    const auto [shared, copied] = determinism_sides(a);
    c.deterministic = shared.subset_of(copied);
    c.function = c.total && c.deterministic;

    // θ ⊣ θ†: unit id_φ₁ ⊆ θ ⊛ θ† and counit θ† ⊛ θ ⊆ id_φ₂.
    const auto t = transpose_ir(a);
    const bool unit = identity_ir(a.dom).theta.subset_of(compose_ir(a, t).theta);
    const bool counit = compose_ir(t, a).theta.subset_of(identity_ir(a.cod).theta);
    if ((unit && counit) != c.function || unit != c.total || counit != c.deterministic) {
        throw std::logic_error("function characterizations disagree");
    }
    if (classified_.size() >= 1 << 16) classified_.clear();
    classified_.emplace(a, c);
    return c;
}

SynObject SyntacticCategory::terminal_syn() const { return {Context(), FinRelation(Context(), {Tuple{}})}; }

InternalRelation SyntacticCategory::bang(const SynObject& o) const {
    object(o.context, o.predicate);
    return {o, terminal_syn(), FinRelation(oplus(o.context, Context()), o.predicate.tuples())};
}

void SyntacticCategory::require_function(const InternalRelation& t, const char* what) const {
    if (!classify(t).function) throw Error(ErrorKind::NotAFunction, std::string(what) + " needs internal functions");
}

PullbackSquare SyntacticCategory::pullback_ir(const InternalRelation& t1, const InternalRelation& t2) const {
    require_same(t1.cod, t2.cod, "pullback");
    require_function(t1, "pullback");
    require_function(t2, "pullback");
    const Context& g1 = t1.dom.context;
    const Context& g2 = t2.dom.context;
    // The join of θ₁ and θ₂ along the shared codomain wire.
    const SynObject apex{oplus(g1, g2), compose_ir(t1, transpose_ir(t2)).theta};
    auto p1 = mk_internal_relation(apex, t1.dom, pushforward(copy_block(g1, g2, true), apex.predicate, domains_));
    auto p2 = mk_internal_relation(apex, t2.dom, pushforward(copy_block(g1, g2, false), apex.predicate, domains_));
    return {apex, std::move(p1), std::move(p2)};
}

InternalRelation SyntacticCategory::pair(const PullbackSquare& pb, const InternalRelation& u1,
                                         const InternalRelation& u2) const {
    require_same(u1.dom, u2.dom, "pairing");
    require_same(u1.cod, pb.p1.cod, "pairing");
    require_same(u2.cod, pb.p2.cod, "pairing");
    const Context& q = u1.dom.context;
    const Context& g1 = u1.cod.context;
    const Context& g2 = u2.cod.context;
    const FinRelation cells[] = {u1.theta, u2.theta};
    return mk_internal_relation(u1.dom, pb.apex, apply_diagram(diagram(Shape::Pair, q, g1, g2), cells, domains_));
}

Equalizer SyntacticCategory::equalizer_ir(const InternalRelation& t1, const InternalRelation& t2) const {
    require_same(t1.dom, t2.dom, "equalizer");
    require_same(t1.cod, t2.cod, "equalizer");
    require_function(t1, "equalizer");
    require_function(t2, "equalizer");
    const Context& g1 = t1.dom.context;
    const SynObject e{g1, lambda_opl(meet_rel(t1.theta, t2.theta), g1, t1.cod.context).first};
    return {e, mk_internal_relation(e, t1.dom, identity_ir(e).theta)};
}

ImageFactorizationIR SyntacticCategory::image_ir(const InternalRelation& t) const {
    require_function(t, "image");
    const Context& g2 = t.cod.context;
    const SynObject im{g2, lambda_opl(t.theta, t.dom.context, g2).second};
    return {mk_internal_relation(t.dom, im, t.theta), im, mk_internal_relation(im, t.cod, identity_ir(im).theta)};
}

bool SyntacticCategory::is_mono_ir(const InternalRelation& t) const {
    require_function(t, "mono test");
    return compose_ir(t, transpose_ir(t)).theta == identity_ir(t.dom).theta;
}

bool SyntacticCategory::is_regular_epi_ir(const InternalRelation& t) const {
    require_function(t, "regular epi test");
    return t.cod.predicate.subset_of(lambda_opl(t.theta, t.dom.context, t.cod.context).second);
}

std::vector<SynObject> SyntacticCategory::subobjects(const SynObject& o) const {
    const std::vector<Tuple> elems(o.predicate.tuples().begin(), o.predicate.tuples().end());
    const std::size_t n = elems.size();
    if (n > 20) throw Error(ErrorKind::OutOfRange, "too many subobjects to enumerate");
    std::vector<std::vector<std::size_t>> picks;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> p;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) p.push_back(i);
        }
        picks.push_back(std::move(p));
    }
    std::sort(picks.begin(), picks.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<SynObject> out;
    for (const auto& p : picks) {
        FinRelation r(o.context);
        for (std::size_t i : p) r.insert(elems[i]);
        out.push_back({o.context, std::move(r)});
    }
    return out;
}

SynObject SyntacticCategory::tensor_obj(const SynObject& a, const SynObject& b) const {
    return {oplus(a.context, b.context), rho_lax(a.predicate, b.predicate)};
}

InternalRelation SyntacticCategory::tensor_ir(const InternalRelation& a, const InternalRelation& b) const {
    const std::size_t n1 = a.dom.context.arity();
    const std::size_t m1 = b.dom.context.arity();
    const Context ctx = oplus(oplus(a.dom.context, b.dom.context), oplus(a.cod.context, b.cod.context));
    FinRelation out(ctx);
    for (const auto& s : a.theta.tuples()) {
        for (const auto& t : b.theta.tuples()) {
            Tuple row(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n1));
            row.insert(row.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(m1));
            row.insert(row.end(), s.begin() + static_cast<std::ptrdiff_t>(n1), s.end());
            row.insert(row.end(), t.begin() + static_cast<std::ptrdiff_t>(m1), t.end());
            out.insert(std::move(row));
        }
    }
    return {tensor_obj(a.dom, b.dom), tensor_obj(a.cod, b.cod), std::move(out)};
}

InternalRelation SyntacticCategory::delta_ir(const SynObject& o) const {
    const Context& g = o.context;
    const std::size_t n = g.arity();
    const auto f = mk_morphism(g, oplus(g, oplus(g, g)), concat(range(0, n), concat(range(0, n), range(0, n))));
    return {o, tensor_obj(o, o), pushforward(f, o.predicate, domains_)};
}

InternalRelation SyntacticCategory::mu_ir(const SynObject& o) const { return transpose_ir(delta_ir(o)); }

InternalRelation SyntacticCategory::epsilon_ir(const SynObject& o) const { return bang(o); }

InternalRelation SyntacticCategory::eta_ir(const SynObject& o) const { return transpose_ir(bang(o)); }

InternalRelation SyntacticCategory::braid_ir(const SynObject& a, const SynObject& b) const {
    const Context& g = a.context;
    const Context& h = b.context;
    const std::size_t n = g.arity(), m = h.arity();
    const Context dom = oplus(g, h);
    const auto f = mk_morphism(dom, oplus(dom, oplus(h, g)), concat(range(0, n + m), concat(range(n, m), range(0, n))));
    return {tensor_obj(a, b), tensor_obj(b, a), pushforward(f, rho_lax(a.predicate, b.predicate), domains_)};
}

} // namespace grl
