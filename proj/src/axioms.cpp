// Bounded exhaustive verification of the regular-category structure. Objects
// and functions are enumerated in a dense form (tuple lists and index maps);
// every construction under test goes through SyntacticCategory and is read
// back into the dense form, where the universal properties are counted.

#include "grl/error.hpp"
#include "grl/syncat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grl {

bool AxiomReport::ok() const {
    return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.failures == 0; });
}

bool FundamentalReport::ok() const {
    return relations == expected_relations && functions == expected_functions && all_graphs && bijective;
}

namespace {

using Map = std::vector<std::size_t>;

struct Obj {
    SynObject syn;
    std::vector<Tuple> elems;
    std::map<Tuple, std::size_t> index;
};

Obj make_obj(SynObject syn) {
    Obj o{std::move(syn), {}, {}};
    for (const auto& t : o.syn.predicate.tuples()) {
        o.index.emplace(t, o.elems.size());
        o.elems.push_back(t);
    }
    return o;
}

std::size_t power(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

// Calls f on every map {0..a-1} -> {0..b-1}, in lexicographic order.
void for_each_map(std::size_t a, std::size_t b, const std::function<void(const Map&)>& f) {
    if (b == 0 && a > 0) return;
    Map m(a, 0);
    while (true) {
        f(m);
        std::size_t i = a;
        while (i > 0 && m[i - 1] + 1 == b) m[--i] = 0;
        if (i == 0) return;
        ++m[i - 1];
    }
}

std::vector<Map> all_maps(std::size_t a, std::size_t b) {
    std::vector<Map> out;
    for_each_map(a, b, [&](const Map& m) { out.push_back(m); });
    return out;
}

Map after(const Map& first, const Map& second) {
    Map out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
    return out;
}

bool injective(const Map& m) { return std::set<std::size_t>(m.begin(), m.end()).size() == m.size(); }

bool surjective(const Map& m, std::size_t cod) { return std::set<std::size_t>(m.begin(), m.end()).size() == cod; }

Tuple join(const Tuple& a, const Tuple& b) {
    Tuple t = a;
    t.insert(t.end(), b.begin(), b.end());
    return t;
}

FinRelation graph(const Obj& a, const Obj& b, const Map& f) {
    FinRelation r(oplus(a.syn.context, b.syn.context));
    for (std::size_t i = 0; i < f.size(); ++i) r.insert(join(a.elems[i], b.elems[f[i]]));
    return r;
}

// Reads a relation back as an index map; nullopt unless it is the graph of one.
std::optional<Map> as_map(const Obj& a, const Obj& b, const FinRelation& theta) {
    if (theta.context() != oplus(a.syn.context, b.syn.context)) return std::nullopt;
    const auto n = static_cast<std::ptrdiff_t>(a.syn.context.arity());
    std::vector<std::optional<std::size_t>> m(a.elems.size());
    for (const auto& t : theta.tuples()) {
        auto ia = a.index.find(Tuple(t.begin(), t.begin() + n));
        auto ib = b.index.find(Tuple(t.begin() + n, t.end()));
        if (ia == a.index.end() || ib == b.index.end() || m[ia->second]) return std::nullopt;
        m[ia->second] = ib->second;
    }
    Map out;
    for (const auto& v : m) {
        if (!v) return std::nullopt;
        out.push_back(*v);
    }
    return out;
}

std::string show(const Tuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i];
    return s + ")";
}

std::string show(const Obj& o) {
    std::string s = to_string(o.syn.context) + "{";
    for (std::size_t i = 0; i < o.elems.size(); ++i) s += (i ? " " : "") + show(o.elems[i]);
    return s + "}";
}

std::string show(const SynObject& o) { return show(make_obj(o)); }

std::string show(const Map& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + "]";
}

std::string show_rel(const FinRelation& r) {
    std::string s = "{";
    bool first = true;
    for (const auto& t : r.tuples()) {
        s += (first ? "" : " ") + show(t);
        first = false;
    }
    return s + "}";
}

class Law {
public:
    explicit Law(std::string name) { r_.law = std::move(name); }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++r_.cases;
        if (!ok) {
            if (r_.failures == 0) r_.witness = describe();
            ++r_.failures;
        }
    }
    // Runs `body`; an exception counts as a failed case.
    void guard(const std::function<void()>& body, const std::function<std::string()>& describe) {
        try {
            body();
        } catch (const std::exception& e) {
            check(false, [&] { return describe() + ": " + e.what(); });
        }
    }
    LawResult result() const { return r_; }

private:
    LawResult r_;
};

struct FnEntry {
    Map map;
    InternalRelation ir;
    bool regular_epi = false;  // as judged by the suite's test
    bool mono = false;
};

class Suite {
public:
    Suite(const ModelInstance& m, const AxiomBounds& bounds, Fault fault)
        : cat_(m), bounds_(bounds), fault_(fault) {
        build_universe(m);
        fns_.resize(objs_.size() * objs_.size());
        for (std::size_t a = 0; a < objs_.size(); ++a) {
            for (std::size_t b = 0; b < objs_.size(); ++b) {
                for (auto& f : all_maps(objs_[a].elems.size(), objs_[b].elems.size())) {
                    auto ir = cat_.mk_internal_relation(objs_[a].syn, objs_[b].syn, graph(objs_[a], objs_[b], f));
                    const bool epi = regular_epi(ir);
                    const bool mono = cat_.is_mono_ir(ir);
                    fns_[a * objs_.size() + b].push_back({std::move(f), std::move(ir), epi, mono});
                }
            }
        }
    }

    AxiomReport run() {
        AxiomReport report;
        report.objects = objs_.size();
        report.probes = probes_.size();
        auto add = [&](const Law& l) { report.laws.push_back(l.result()); };
        add(terminal());
        auto [commutes, universal, mediators, stable] = pullbacks();
        add(commutes);
        add(universal);
        add(mediators);
        add(stable);
        add(equalizers());
        auto [factor, minimal] = images();
        add(factor);
        add(minimal);
        add(orthogonality());
        add(hypergraph());
        auto [classes, discrete, unit_law] = classification();
        add(classes);
        add(discrete);
        add(unit_law);
        add(composition());
        add(subobjects());
        return report;
    }

private:
    const std::vector<FnEntry>& fns(std::size_t a, std::size_t b) const { return fns_[a * objs_.size() + b]; }

    void build_universe(const ModelInstance& m) {
        std::vector<TypeSymbol> types(m.signature().types().begin(), m.signature().types().end());
        if (types.empty()) {
            for (const auto& [t, atoms] : m.domains().carriers()) types.push_back(t);
        }
        std::vector<Context> contexts;
        // Arity 0 with every support; with many types only the singletons.
        const std::size_t k = types.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << std::min<std::size_t>(k, 16)); ++mask) {
            if (k > 4 && __builtin_popcountll(mask) > 1) continue;
            std::vector<TypeSymbol> supp;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask >> i & 1) supp.push_back(types[i]);
            }
            contexts.emplace_back(std::vector<TypeSymbol>{}, supp);
        }
        std::vector<std::vector<TypeSymbol>> layer = {{}};
        for (std::size_t n = 1; n <= bounds_.max_arity; ++n) {
            std::vector<std::vector<TypeSymbol>> next;
            for (const auto& t : layer) {
                for (const auto& ty : types) {
                    auto e = t;
                    e.push_back(ty);
                    contexts.emplace_back(e);
                    next.push_back(std::move(e));
                }
            }
            layer = std::move(next);
        }
        std::set<SynObject, bool (*)(const SynObject&, const SynObject&)> seen(
            [](const SynObject& a, const SynObject& b) {
                return std::tie(a.context, a.predicate.tuples()) < std::tie(b.context, b.predicate.tuples());
            });
        auto add = [&](SynObject o) {
            if (!seen.insert(o).second) return;
            const bool probe = o.context.arity() <= bounds_.probe_max_arity && o.predicate.size() <= bounds_.probe_max_pred_size;
            if (probe) probes_.push_back(objs_.size());
            objs_.push_back(make_obj(std::move(o)));
        };
        for (const auto& g : contexts) {
            const auto space = tuple_space(g, cat_.domains());
            for (std::size_t size = 0; size <= std::min(bounds_.max_pred_size, space.size()); ++size) {
                std::vector<bool> pick(space.size(), false);
                std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), true);
                do {
                    FinRelation r(g);
                    for (std::size_t i = 0; i < space.size(); ++i) {
                        if (pick[i]) r.insert(space[i]);
                    }
                    add({g, std::move(r)});
                } while (std::next_permutation(pick.begin(), pick.end()));
            }
        }
        // The model's own predicates are objects too when their context is small.
        for (const auto& [name, r] : m.relations()) {
            if (r.context().arity() <= bounds_.max_arity) add({r.context(), r});
        }
    }

    bool regular_epi(const InternalRelation& t) const {
        if (fault_ == Fault::RegularEpiBySupportOnly) return t.cod.predicate.empty() || !t.theta.empty();
        return cat_.is_regular_epi_ir(t);
    }

    Law terminal() {
        Law law("terminal");
        const Obj term = make_obj(cat_.terminal_syn());
        for (const auto& a : objs_) {
            law.guard(
                [&] {
                    const auto b = cat_.bang(a.syn);
                    const auto maps = all_maps(a.elems.size(), term.elems.size());
                    law.check(maps.size() == 1 && as_map(a, term, b.theta) == maps.front() && cat_.classify(b).function,
                              [&] { return "bang of " + show(a) + " is not the unique map"; });
                    // Every other relation into the terminal object fails to be a function.
                    for (std::size_t mask = 0; mask < (std::size_t{1} << a.elems.size()); ++mask) {
                        FinRelation r(oplus(a.syn.context, Context()));
                        for (std::size_t i = 0; i < a.elems.size(); ++i) {
                            if (mask >> i & 1) r.insert(a.elems[i]);
                        }
                        const auto ir = cat_.mk_internal_relation(a.syn, term.syn, r);
                        law.check(cat_.classify(ir).function == (ir == b),
                                  [&] { return "relation " + show_rel(r) + " into the terminal object"; });
                    }
                },
                [&] { return "terminal for " + show(a); });
        }
        return law;
    }

    std::tuple<Law, Law, Law, Law> pullbacks() {
        Law commutes("pullback.commutes");
        Law universal("pullback.universal");
        Law mediators("pullback.mediator");
        Law stable("regular_epi.pullback_stable");
        std::size_t tick = 0;
        for (std::size_t c = 0; c < objs_.size(); ++c) {
            for (std::size_t a = 0; a < objs_.size(); ++a) {
                for (std::size_t b = 0; b < objs_.size(); ++b) {
                    for (const auto& f : fns(a, c)) {
                        for (const auto& g : fns(b, c)) {
                            auto where = [&] {
                                return "cospan " + show(objs_[a]) + " -" + show(f.map) + "-> " + show(objs_[c]) +
                                       " <-" + show(g.map) + "- " + show(objs_[b]);
                            };
                            universal.guard(
                                [&] {
                                    const auto pb = cat_.pullback_ir(f.ir, g.ir);
                                    check_pullback(pb, a, b, f, g, commutes, universal, mediators, tick, where);
                                    if (f.regular_epi) {
                                        stable.check(regular_epi(pb.p2), [&] {
                                            return where() + ": pullback of the regular epi along the right leg has apex " +
                                                   show(pb.apex) + " and is not a regular epi";
                                        });
                                    }
                                },
                                where);
                        }
                    }
                }
            }
        }
        return {commutes, universal, mediators, stable};
    }

    void check_pullback(const PullbackSquare& pb, std::size_t a, std::size_t b, const FnEntry& f, const FnEntry& g,
                        Law& commutes, Law& universal, Law& mediators, std::size_t& tick,
                        const std::function<std::string()>& where) {
        const Obj apex = make_obj(pb.apex);
        const auto p1 = as_map(apex, objs_[a], pb.p1.theta);
        const auto p2 = as_map(apex, objs_[b], pb.p2.theta);
        commutes.check(p1 && p2 && after(*p1, f.map) == after(*p2, g.map),
                       [&] { return where() + ": projections are not a commuting square"; });
        if (!p1 || !p2) return;
        for (std::size_t q : probes_) {
            const Obj& probe = objs_[q];
            // Commuting cones over the probe, enumerated directly.
            std::set<std::pair<Map, Map>> cones;
            for (const auto& u1 : fns(q, a)) {
                for (const auto& u2 : fns(q, b)) {
                    if (after(u1.map, f.map) == after(u2.map, g.map)) cones.emplace(u1.map, u2.map);
                }
            }
            // Maps into the apex must hit each cone exactly once.
            std::set<std::pair<Map, Map>> hit;
            std::size_t count = 0;
            for_each_map(probe.elems.size(), apex.elems.size(), [&](const Map& h) {
                ++count;
                hit.emplace(after(h, *p1), after(h, *p2));
            });
            universal.check(hit.size() == count && hit == cones, [&] {
                return where() + ": probe " + show(probe) + " sees " + std::to_string(cones.size()) + " cones but " +
                       std::to_string(count) + " maps into the apex";
            });
            for (const auto& [u1, u2] : cones) {
                if (++tick % bounds_.api_stride != 0) continue;
                mediators.guard(
                    [&] {
                        const auto m = cat_.pair(pb, find(q, a, u1), find(q, b, u2));
                        const auto h = as_map(probe, apex, m.theta);
                        mediators.check(h && after(*h, *p1) == u1 && after(*h, *p2) == u2 && cat_.classify(m).function,
                                        [&] { return where() + ": pairing over " + show(probe) + " is wrong"; });
                    },
                    where);
            }
        }
    }

    const InternalRelation& find(std::size_t a, std::size_t b, const Map& m) const {
        for (const auto& e : fns(a, b)) {
            if (e.map == m) return e.ir;
        }
        throw std::logic_error("map outside the enumerated universe");
    }

    Law equalizers() {
        Law law("equalizer");
        for (std::size_t a = 0; a < objs_.size(); ++a) {
            for (std::size_t b = 0; b < objs_.size(); ++b) {
                for (const auto& f : fns(a, b)) {
                    for (const auto& g : fns(a, b)) {
                        auto where = [&] {
                            return "pair " + show(f.map) + ", " + show(g.map) + " : " + show(objs_[a]) + " -> " +
                                   show(objs_[b]);
                        };
                        law.guard(
                            [&] {
                                const auto eq = cat_.equalizer_ir(f.ir, g.ir);
                                const Obj e = make_obj(eq.object);
                                const auto inc = as_map(e, objs_[a], eq.inclusion.theta);
                                law.check(inc && injective(*inc) && after(*inc, f.map) == after(*inc, g.map) &&
                                              cat_.is_mono_ir(eq.inclusion),
                                          [&] { return where() + ": inclusion " + show(e) + " is wrong"; });
                                if (!inc) return;
                                for (std::size_t q : probes_) {
                                    std::set<Map> through;
                                    for (const auto& u : fns(q, a)) {
                                        if (after(u.map, f.map) == after(u.map, g.map)) through.insert(u.map);
                                    }
                                    std::set<Map> hit;
                                    std::size_t count = 0;
                                    for_each_map(objs_[q].elems.size(), e.elems.size(), [&](const Map& h) {
                                        ++count;
                                        hit.insert(after(h, *inc));
                                    });
                                    law.check(hit.size() == count && hit == through, [&] {
                                        return where() + ": probe " + show(objs_[q]) + " does not factor uniquely";
                                    });
                                }
                            },
                            where);
                    }
                }
            }
        }
        return law;
    }

    std::pair<Law, Law> images() {
        Law factor("image.factorization");
        Law minimal("image.minimal");
        for (std::size_t a = 0; a < objs_.size(); ++a) {
            for (std::size_t b = 0; b < objs_.size(); ++b) {
                for (const auto& f : fns(a, b)) {
                    auto where = [&] { return "map " + show(f.map) + " : " + show(objs_[a]) + " -> " + show(objs_[b]); };
                    factor.guard(
                        [&] {
                            const auto img = cat_.image_ir(f.ir);
                            const Obj im = make_obj(img.image);
                            const auto e = as_map(objs_[a], im, img.epi.theta);
                            const auto m = as_map(im, objs_[b], img.mono.theta);
                            factor.check(e && m && surjective(*e, im.elems.size()) && injective(*m) &&
                                             after(*e, *m) == f.map && regular_epi(img.epi) && cat_.is_mono_ir(img.mono) &&
                                             cat_.compose_ir(img.epi, img.mono) == f.ir,
                                         [&] { return where() + ": image " + show(im) + " does not factor it"; });
                            // The public predicates agree with surjectivity and injectivity.
                            factor.check(f.regular_epi == surjective(f.map, objs_[b].elems.size()) &&
                                             f.mono == injective(f.map),
                                         [&] { return where() + ": regular epi or mono test disagrees with the map"; });
                            const std::set<std::size_t> used(f.map.begin(), f.map.end());
                            for (const auto& s : cat_.subobjects(objs_[b].syn)) {
                                bool through = true;
                                for (std::size_t i : used) through = through && s.predicate.contains(objs_[b].elems[i]);
                                if (through) {
                                    minimal.check(im.syn.predicate.subset_of(s.predicate), [&] {
                                        return where() + ": image is not below " + show(s);
                                    });
                                }
                            }
                        },
                        where);
                }
            }
        }
        return {factor, minimal};
    }

    // Unique diagonal fill-ins for regular epi / mono squares among probes.
    Law orthogonality() {
        Law law("image.orthogonal");
        for (std::size_t x : probes_) {
            for (std::size_t y : probes_) {
                for (const auto& e : fns(x, y)) {
                    if (!e.regular_epi) continue;
                    for (std::size_t c : probes_) {
                        for (std::size_t d : probes_) {
                            for (const auto& m : fns(c, d)) {
                                if (!m.mono) continue;
                                for (const auto& u : fns(x, c)) {
                                    for (const auto& v : fns(y, d)) {
                                        if (after(u.map, m.map) != after(e.map, v.map)) continue;
                                        std::size_t fills = 0;
                                        for (const auto& dg : fns(y, c)) {
                                            fills += after(e.map, dg.map) == u.map && after(dg.map, m.map) == v.map;
                                        }
                                        law.check(fills == 1, [&] {
                                            return "square " + show(objs_[x]) + " -" + show(e.map) + "-> " +
                                                   show(objs_[y]) + " against mono " + show(m.map) + " into " +
                                                   show(objs_[d]) + " has " + std::to_string(fills) + " fill-ins";
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        return law;
    }

    Law hypergraph() {
        Law law("hypergraph");
        for (const auto& o : objs_) {
            law.guard(
                [&] {
                    const SynObject& x = o.syn;
                    const auto id = cat_.identity_ir(x);
                    const auto d = cat_.delta_ir(x);
                    const auto m = cat_.mu_ir(x);
                    const auto e = cat_.epsilon_ir(x);
                    const auto u = cat_.eta_ir(x);
                    auto c = [&](const InternalRelation& p, const InternalRelation& q) { return cat_.compose_ir(p, q); };
                    auto t = [&](const InternalRelation& p, const InternalRelation& q) { return cat_.tensor_ir(p, q); };
                    auto eq = [&](const char* name, const InternalRelation& l, const InternalRelation& r) {
                        law.check(l == r, [&] { return std::string(name) + " fails on " + show(o); });
                    };
                    auto le = [&](const char* name, const InternalRelation& l, const InternalRelation& r) {
                        law.check(cat_.leq_ir(l, r), [&] { return std::string(name) + " fails on " + show(o); });
                    };
                    eq("coassociativity", c(d, t(d, id)), c(d, t(id, d)));
                    eq("left counit", c(d, t(e, id)), id);
                    eq("right counit", c(d, t(id, e)), id);
                    eq("associativity", c(t(m, id), m), c(t(id, m), m));
                    eq("left unit", c(t(u, id), m), id);
                    eq("cocommutativity", c(d, cat_.braid_ir(x, x)), d);
                    eq("frobenius left", c(t(d, id), t(id, m)), c(m, d));
                    eq("frobenius right", c(t(id, d), t(m, id)), c(m, d));
                    eq("special", c(d, m), id);
                    le("copy unit", id, c(d, m));
                    le("copy counit", c(m, d), cat_.identity_ir(cat_.tensor_obj(x, x)));
                    le("discard unit", id, c(e, u));
                    le("discard counit", c(u, e), cat_.identity_ir(cat_.terminal_syn()));
                    eq("transpose of copy", cat_.transpose_ir(d), m);
                },
                [&] { return "structure maps of " + show(o); });
        }
        return law;
    }

    // Relations between universe objects and full relation spaces between
    // small contexts, classified publicly and by the set criterion.
    std::tuple<Law, Law, Law> classification() {
        Law classes("classification");
        Law discrete("functions.discrete");
        Law unit_law("internal_relation.unit_law");
        auto classify_all = [&](const Obj& a, const Obj& b, const std::vector<Tuple>& space) {
            std::vector<FinRelation> functions;
            for (std::size_t mask = 0; mask < (std::size_t{1} << space.size()); ++mask) {
                FinRelation r(oplus(a.syn.context, b.syn.context));
                for (std::size_t i = 0; i < space.size(); ++i) {
                    if (mask >> i & 1) r.insert(space[i]);
                }
                auto where = [&] { return show_rel(r) + " : " + show(a) + " -> " + show(b); };
                classes.guard(
                    [&] {
                        const auto ir = cat_.mk_internal_relation(a.syn, b.syn, r);
                        const auto got = cat_.classify(ir);
                        std::vector<std::size_t> outs(a.elems.size(), 0);
                        const auto n = static_cast<std::ptrdiff_t>(a.syn.context.arity());
                        for (const auto& t : r.tuples()) ++outs[a.index.at(Tuple(t.begin(), t.begin() + n))];
                        Classification want;
                        want.total = std::all_of(outs.begin(), outs.end(), [](std::size_t k) { return k >= 1; });
                        want.deterministic = std::all_of(outs.begin(), outs.end(), [](std::size_t k) { return k <= 1; });
                        want.function = want.total && want.deterministic;
                        classes.check(got == want, [&] { return where() + " is misclassified"; });
                        // Both entailments of the definition are equalities when they hold.
                        if (got.total) {
                            classes.check(lambda_opl(r, a.syn.context, b.syn.context).first == a.syn.predicate,
                                          [&] { return where() + ": total but marginal differs"; });
                        }
                        if (got.deterministic) {
                            const auto [shared, copied] = cat_.determinism_sides(ir);
                            classes.check(shared == copied, [&] { return where() + ": deterministic sides differ"; });
                        }
                        if (got.function) functions.push_back(r);
                    },
                    where);
            }
            for (const auto& f : functions) {
                for (const auto& g : functions) {
                    discrete.check(!f.subset_of(g) || f == g, [&] {
                        return "functions " + show_rel(f) + " below " + show_rel(g) + " from " + show(a);
                    });
                }
            }
        };
        for (const auto& a : objs_) {
            for (const auto& b : objs_) {
                std::vector<Tuple> space;
                for (const auto& x : a.elems) {
                    for (const auto& y : b.elems) space.push_back(join(x, y));
                }
                if (space.size() <= bounds_.max_relation_space) classify_all(a, b, space);
            }
        }
        // Every relation on small contexts: against the full objects, and the
        // marginal test against the unit law for every pair of endpoints.
        std::map<Context, std::vector<std::size_t>> by_context;
        for (std::size_t i = 0; i < objs_.size(); ++i) by_context[objs_[i].syn.context].push_back(i);
        for (const auto& [g1, objs1] : by_context) {
            for (const auto& [g2, objs2] : by_context) {
                const auto space = tuple_space(oplus(g1, g2), cat_.domains());
                if (space.size() > bounds_.max_relation_space) continue;
                const Obj top1 = make_obj(cat_.top(g1));
                const Obj top2 = make_obj(cat_.top(g2));
                classify_all(top1, top2, space);
                for (std::size_t mask = 0; mask < (std::size_t{1} << space.size()); ++mask) {
                    FinRelation r(oplus(g1, g2));
                    for (std::size_t i = 0; i < space.size(); ++i) {
                        if (mask >> i & 1) r.insert(space[i]);
                    }
                    for (std::size_t i : objs1) {
                        for (std::size_t j : objs2) {
                            const auto& a = objs_[i].syn;
                            const auto& b = objs_[j].syn;
                            bool valid = true;
                            try {
                                cat_.mk_internal_relation(a, b, r);
                            } catch (const Error& e) {
                                valid = e.kind() != ErrorKind::MarginalViolation;
                            }
                            unit_law.check(valid == cat_.satisfies_unit_law(a, b, r), [&] {
                                return show_rel(r) + " between " + show(a) + " and " + show(b) +
                                       ": marginal test and unit law disagree";
                            });
                        }
                    }
                }
            }
        }
        return {classes, discrete, unit_law};
    }

    // Unit, associativity, agreement with relational composition, and
    // monotonicity, over relations between probes.
    Law composition() {
        Law law("composition");
        struct Rel {
            std::size_t dom, cod;
            InternalRelation ir;
        };
        std::vector<Rel> rels;
        std::map<std::size_t, std::vector<std::size_t>> from;
        for (std::size_t a : probes_) {
            for (std::size_t b : probes_) {
                std::vector<Tuple> space;
                for (const auto& x : objs_[a].elems) {
                    for (const auto& y : objs_[b].elems) space.push_back(join(x, y));
                }
                if (space.size() > bounds_.max_relation_space) continue;
                for (std::size_t mask = 0; mask < (std::size_t{1} << space.size()); ++mask) {
                    FinRelation r(oplus(objs_[a].syn.context, objs_[b].syn.context));
                    for (std::size_t i = 0; i < space.size(); ++i) {
                        if (mask >> i & 1) r.insert(space[i]);
                    }
                    from[a].push_back(rels.size());
                    rels.push_back({a, b, cat_.mk_internal_relation(objs_[a].syn, objs_[b].syn, r)});
                }
            }
        }
        auto split = [&](const Rel& r) {
            std::set<std::pair<std::size_t, std::size_t>> out;
            const auto n = static_cast<std::ptrdiff_t>(objs_[r.dom].syn.context.arity());
            for (const auto& t : r.ir.theta.tuples()) {
                out.emplace(objs_[r.dom].index.at(Tuple(t.begin(), t.begin() + n)),
                            objs_[r.cod].index.at(Tuple(t.begin() + n, t.end())));
            }
            return out;
        };
        for (std::size_t i = 0; i < rels.size(); ++i) {
            const Rel& r1 = rels[i];
            const auto& next = from[r1.cod];
            const Rel& r2 = rels[next[(i * 7 + 3) % next.size()]];
            const auto& last = from[r2.cod];
            const Rel& r3 = rels[last[(i * 13 + 5) % last.size()]];
            auto where = [&] { return show_rel(r1.ir.theta) + " then " + show_rel(r2.ir.theta) + " then " + show_rel(r3.ir.theta); };
            law.guard(
                [&] {
                    law.check(cat_.compose_ir(cat_.identity_ir(r1.ir.dom), r1.ir) == r1.ir &&
                                  cat_.compose_ir(r1.ir, cat_.identity_ir(r1.ir.cod)) == r1.ir,
                              [&] { return where() + ": unit law"; });
                    const auto ab = cat_.compose_ir(r1.ir, r2.ir);
                    law.check(cat_.compose_ir(ab, r3.ir) == cat_.compose_ir(r1.ir, cat_.compose_ir(r2.ir, r3.ir)),
                              [&] { return where() + ": associativity"; });
                    std::set<std::pair<std::size_t, std::size_t>> want;
                    for (const auto& [x, y] : split(r1)) {
                        for (const auto& [y2, z] : split(r2)) {
                            if (y == y2) want.emplace(x, z);
                        }
                    }
                    law.check(split({r1.dom, r2.cod, ab}) == want, [&] { return where() + ": relational composite"; });
                    if (!r1.ir.theta.empty()) {
                        auto smaller = r1.ir;
                        FinRelation less(smaller.theta.context());
                        auto it = smaller.theta.tuples().begin();
                        for (++it; it != smaller.theta.tuples().end(); ++it) less.insert(*it);
                        smaller.theta = less;
                        law.check(cat_.leq_ir(cat_.compose_ir(smaller, r2.ir), ab), [&] { return where() + ": monotonicity"; });
                    }
                },
                where);
        }
        return law;
    }

    Law subobjects() {
        Law law("subobjects");
        for (const auto& o : objs_) {
            law.guard(
                [&] {
                    const auto subs = cat_.subobjects(o.syn);
                    law.check(subs.size() == power(2, o.elems.size()) && subs.back() == o.syn &&
                                  subs.front().predicate.empty(),
                              [&] { return "subobject count of " + show(o); });
                    std::set<std::set<Tuple>> images;
                    for (const auto& s : subs) {
                        const auto inc = cat_.mk_internal_relation(s, o.syn, cat_.identity_ir(s).theta);
                        law.check(cat_.is_mono_ir(inc), [&] { return "inclusion of " + show(s) + " is not mono"; });
                        images.insert(lambda_opl(inc.theta, s.context, o.syn.context).second.tuples());
                    }
                    law.check(images.size() == subs.size(), [&] { return "two subobjects of " + show(o) + " coincide"; });
                },
                [&] { return "subobjects of " + show(o); });
        }
        return law;
    }

    SyntacticCategory cat_;
    AxiomBounds bounds_;
    Fault fault_;
    std::vector<Obj> objs_;
    std::vector<std::size_t> probes_;
    std::vector<std::vector<FnEntry>> fns_;
};

} // namespace

AxiomReport check_regular_axioms(const ModelInstance& m, const AxiomBounds& bounds, Fault fault) {
    if (bounds.api_stride == 0) throw Error(ErrorKind::OutOfRange, "api stride must be positive");
    return Suite(m, bounds, fault).run();
}

FundamentalReport fundamental_check(const ModelInstance& m, const TypeSymbol& r, const TypeSymbol& r2) {
    const SyntacticCategory cat(m);
    const Obj a = make_obj(cat.top(unary(r)));
    const Obj b = make_obj(cat.top(unary(r2)));
    const std::size_t n = a.elems.size();
    const std::size_t k = b.elems.size();
    if (n * k > 16) throw Error(ErrorKind::OutOfRange, "fundamental check is limited to 16 tuples");

    FundamentalReport rep;
    rep.expected_relations = power(2, n * k);
    rep.expected_functions = power(k, n);
    std::set<Map> seen;
    for (std::size_t mask = 0; mask < rep.expected_relations; ++mask) {
        FinRelation theta(oplus(a.syn.context, b.syn.context));
        for (std::size_t i = 0; i < n * k; ++i) {
            if (mask >> i & 1) theta.insert(join(a.elems[i / k], b.elems[i % k]));
        }
        const auto ir = cat.mk_internal_relation(a.syn, b.syn, theta);
        ++rep.relations;
        if (!cat.classify(ir).function) continue;
        ++rep.functions;
        const auto f = as_map(a, b, theta);
        if (!f || graph(a, b, *f) != theta) {
            rep.all_graphs = false;
            continue;
        }
        rep.bijective = rep.bijective && seen.insert(*f).second;
    }
    rep.bijective = rep.bijective && seen.size() == rep.expected_functions;
    return rep;
}

} // namespace grl
