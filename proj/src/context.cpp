#include "grl/context.hpp"

#include "grl/error.hpp"
#include "union_find.hpp"

#include <algorithm>
#include <map>

namespace grl {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::UnknownType: return "unknown type";
    case ErrorKind::UnknownName: return "unknown name";
    case ErrorKind::TypeMismatch: return "type mismatch";
    case ErrorKind::SupportViolation: return "support violation";
    case ErrorKind::BoundaryMismatch: return "boundary mismatch";
    case ErrorKind::OutOfRange: return "out of range";
    case ErrorKind::MarginalViolation: return "marginal violation";
    case ErrorKind::NotAFunction: return "not a function";
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::Io: return "i/o error";
    }
    return "error";
}

TypeSet::TypeSet(std::initializer_list<TypeSymbol> symbols) {
    for (const auto& t : symbols) insert(t);
}

void TypeSet::insert(const TypeSymbol& t) {
    if (t.name().empty()) throw Error(ErrorKind::UnknownType, "type symbols must be nonempty");
    symbols_.insert(t);
}

void TypeSet::require(const TypeSymbol& t) const {
    if (!contains(t)) throw Error(ErrorKind::UnknownType, "unknown type symbol '" + t.name() + "'");
}

Context::Context(std::vector<TypeSymbol> typing, const std::vector<TypeSymbol>& extra_support)
    : typing_(std::move(typing)) {
    support_ = typing_;
    support_.insert(support_.end(), extra_support.begin(), extra_support.end());
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
}

bool Context::in_support(const TypeSymbol& t) const {
    return std::binary_search(support_.begin(), support_.end(), t);
}

std::vector<TypeSymbol> Context::extra_support() const {
    std::vector<TypeSymbol> used = typing_;
    std::sort(used.begin(), used.end());
    std::vector<TypeSymbol> out;
    std::set_difference(support_.begin(), support_.end(), used.begin(), used.end(), std::back_inserter(out));
    return out;
}

std::string to_string(const Context& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.arity(); ++i) {
        if (i) s += ", ";
        s += c.type_at(i).name();
    }
    auto extra = c.extra_support();
    if (!extra.empty()) {
        s += c.arity() ? " | supp " : "| supp ";
        for (std::size_t i = 0; i < extra.size(); ++i) {
            if (i) s += ", ";
            s += extra[i].name();
        }
    }
    return s + ")";
}

Context mk_context(const TypeSet& types,
                   const std::vector<TypeSymbol>& typing,
                   const std::vector<TypeSymbol>& extra_support) {
    for (const auto& t : typing) types.require(t);
    for (const auto& t : extra_support) types.require(t);
    return Context(typing, extra_support);
}

Context terminal() { return Context(); }

Context unary(const TypeSymbol& t) { return Context({t}); }

Context support_ctx(const TypeSymbol& t) { return Context({}, {t}); }

Context support_ctx(const TypeSet& types, const TypeSymbol& t) {
    types.require(t);
    return support_ctx(t);
}

Context oplus(const Context& a, const Context& b) {
    std::vector<TypeSymbol> typing = a.typing();
    typing.insert(typing.end(), b.typing().begin(), b.typing().end());
    std::vector<TypeSymbol> support = a.support();
    support.insert(support.end(), b.support().begin(), b.support().end());
    return Context(std::move(typing), support);
}

Context oplus_all(const std::vector<Context>& parts) {
    Context out;
    for (const auto& p : parts) out = oplus(out, p);
    return out;
}

ContextMorphism::ContextMorphism(Context dom, Context cod, std::vector<std::size_t> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
    if (map_.size() != cod_.arity()) {
        throw Error(ErrorKind::BoundaryMismatch,
                    "underlying function has " + std::to_string(map_.size()) + " entries, codomain arity is " +
                        std::to_string(cod_.arity()));
    }
    for (std::size_t j = 0; j < map_.size(); ++j) {
        if (map_[j] >= dom_.arity()) {
            throw Error(ErrorKind::OutOfRange, "underlying function sends codomain port " + std::to_string(j + 1) +
                                                   " outside the domain");
        }
        if (dom_.type_at(map_[j]) != cod_.type_at(j)) {
            throw Error(ErrorKind::TypeMismatch, "codomain port " + std::to_string(j + 1) + " has type " +
                                                     cod_.type_at(j).name() + " but is fed by a port of type " +
                                                     dom_.type_at(map_[j]).name());
        }
    }
    for (const auto& s : cod_.support()) {
        if (!dom_.in_support(s)) {
            throw Error(ErrorKind::SupportViolation,
                        "codomain support symbol '" + s.name() + "' is not in the domain support");
        }
    }
}

std::string to_string(const ContextMorphism& f) {
    std::string s = to_string(f.dom()) + " -> " + to_string(f.cod()) + " [";
    for (std::size_t j = 0; j < f.map().size(); ++j) {
        if (j) s += ", ";
        s += std::to_string(f.map()[j] + 1);
    }
    return s + "]";
}

ContextMorphism mk_morphism(const Context& dom, const Context& cod, std::vector<std::size_t> map) {
    return ContextMorphism(dom, cod, std::move(map));
}

ContextMorphism identity_cm(const Context& c) {
    std::vector<std::size_t> map(c.arity());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
    return ContextMorphism(c, c, std::move(map));
}

ContextMorphism compose_cm(const ContextMorphism& f, const ContextMorphism& g) {
    if (f.cod() != g.dom()) {
        throw Error(ErrorKind::BoundaryMismatch,
                    "cannot compose: " + to_string(f.cod()) + " is not " + to_string(g.dom()));
    }
    std::vector<std::size_t> map(g.map().size());
    for (std::size_t j = 0; j < map.size(); ++j) map[j] = f.map()[g.map()[j]];
    return ContextMorphism(f.dom(), g.cod(), std::move(map));
}

bool is_mono(const ContextMorphism& f) {
    std::vector<bool> hit(f.dom().arity(), false);
    for (auto i : f.map()) hit[i] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_regular_epi(const ContextMorphism& f) {
    std::vector<bool> hit(f.dom().arity(), false);
    for (auto i : f.map()) {
        if (hit[i]) return false;
        hit[i] = true;
    }
    return f.dom().support() == f.cod().support();
}

ImageFactorization image_factor_cm(const ContextMorphism& f) {
    std::vector<std::size_t> image = f.map();
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());

    std::vector<TypeSymbol> typing;
    typing.reserve(image.size());
    for (auto i : image) typing.push_back(f.dom().type_at(i));
    Context mid(std::move(typing), f.dom().support());

    std::vector<std::size_t> corestricted(f.map().size());
    for (std::size_t j = 0; j < corestricted.size(); ++j) {
        corestricted[j] = static_cast<std::size_t>(
            std::lower_bound(image.begin(), image.end(), f.map()[j]) - image.begin());
    }
    return {ContextMorphism(f.dom(), mid, image), ContextMorphism(mid, f.cod(), std::move(corestricted))};
}

PullbackCone pullback_cm(const ContextMorphism& f, const ContextMorphism& g) {
    if (f.cod() != g.cod()) {
        throw Error(ErrorKind::BoundaryMismatch, "pullback legs do not share a codomain");
    }
    const std::size_t n1 = f.dom().arity();
    const std::size_t n2 = g.dom().arity();
    detail::UnionFind uf(n1 + n2);
    for (std::size_t j = 0; j < f.cod().arity(); ++j) uf.unite(f.map()[j], n1 + g.map()[j]);

    std::map<std::size_t, std::size_t> class_index;
    std::vector<TypeSymbol> typing;
    std::vector<std::size_t> cls(n1 + n2);
    for (std::size_t i = 0; i < n1 + n2; ++i) {
        auto root = uf.find(i);
        auto [it, fresh] = class_index.emplace(root, class_index.size());
        if (fresh) typing.push_back(i < n1 ? f.dom().type_at(i) : g.dom().type_at(i - n1));
        cls[i] = it->second;
    }
    std::vector<TypeSymbol> support = f.dom().support();
    support.insert(support.end(), g.dom().support().begin(), g.dom().support().end());
    Context apex(std::move(typing), support);

    std::vector<std::size_t> m1(cls.begin(), cls.begin() + static_cast<std::ptrdiff_t>(n1));
    std::vector<std::size_t> m2(cls.begin() + static_cast<std::ptrdiff_t>(n1), cls.end());
    ContextMorphism p1(apex, f.dom(), std::move(m1));
    ContextMorphism p2(apex, g.dom(), std::move(m2));
    return {apex, std::move(p1), std::move(p2)};
}

ContextMorphism diagonal_cm(const Context& g) {
    const std::size_t n = g.arity();
    std::vector<std::size_t> map(2 * n);
    for (std::size_t j = 0; j < 2 * n; ++j) map[j] = j % n;
    return ContextMorphism(g, oplus(g, g), std::move(map));
}

ContextMorphism proj1_cm(const Context& g, const Context& h) {
    std::vector<std::size_t> map(g.arity());
    for (std::size_t j = 0; j < map.size(); ++j) map[j] = j;
    return ContextMorphism(oplus(g, h), g, std::move(map));
}

ContextMorphism proj2_cm(const Context& g, const Context& h) {
    std::vector<std::size_t> map(h.arity());
    for (std::size_t j = 0; j < map.size(); ++j) map[j] = g.arity() + j;
    return ContextMorphism(oplus(g, h), h, std::move(map));
}

ContextMorphism bang_cm(const Context& g) { return ContextMorphism(g, terminal(), {}); }

ContextMorphism braid_cm(const Context& g, const Context& h) {
    const std::size_t n = g.arity();
    const std::size_t m = h.arity();
    std::vector<std::size_t> map(n + m);
    for (std::size_t j = 0; j < n + m; ++j) map[j] = j < m ? n + j : j - m;
    return ContextMorphism(oplus(g, h), oplus(h, g), std::move(map));
}

ContextMorphism oplus_cm(const ContextMorphism& f, const ContextMorphism& g) {
    std::vector<std::size_t> map = f.map();
    for (auto i : g.map()) map.push_back(f.dom().arity() + i);
    return ContextMorphism(oplus(f.dom(), g.dom()), oplus(f.cod(), g.cod()), std::move(map));
}

CanonicalMaps canonical_maps(const Context& g, const Context& h) {
    return {diagonal_cm(g), proj1_cm(g, h), proj2_cm(g, h), bang_cm(g), braid_cm(g, h)};
}

std::vector<ContextMorphism> all_morphisms(const Context& dom, const Context& cod) {
    std::vector<ContextMorphism> out;
    for (const auto& s : cod.support()) {
        if (!dom.in_support(s)) return out;
    }
    std::vector<std::vector<std::size_t>> choices(cod.arity());
    for (std::size_t j = 0; j < cod.arity(); ++j) {
        for (std::size_t i = 0; i < dom.arity(); ++i) {
            if (dom.type_at(i) == cod.type_at(j)) choices[j].push_back(i);
        }
        if (choices[j].empty()) return out;
    }
    std::vector<std::size_t> cursor(cod.arity(), 0);
    while (true) {
        std::vector<std::size_t> map(cod.arity());
        for (std::size_t j = 0; j < map.size(); ++j) map[j] = choices[j][cursor[j]];
        out.emplace_back(dom, cod, std::move(map));
        std::size_t j = cod.arity();
        while (j > 0) {
            --j;
            if (++cursor[j] < choices[j].size()) break;
            cursor[j] = 0;
            if (j == 0) return out;
        }
        if (cod.arity() == 0) return out;
    }
}

} // namespace grl
