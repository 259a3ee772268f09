#include "grl/commands.hpp"

#include "grl/contain.hpp"
#include "grl/dot.hpp"
#include "grl/error.hpp"
#include "grl/syncat.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <sstream>

namespace grl {

namespace {

using nlohmann::json;

void arity(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
    if (args.size() != n + 1) throw Error(ErrorKind::Syntax, "usage: " + usage);
}

const DiagramDecl& diagram_arg(const Workspace& ws, const std::string& name) {
    const DiagramDecl* d = ws.find_diagram(name);
    if (!d) throw Error(ErrorKind::UnknownName, "unknown diagram '" + name + "'");
    return *d;
}

const GraphicalTerm& term_arg(const Workspace& ws, const std::string& name) {
    const TermDecl* t = ws.find_term(name);
    if (!t) throw Error(ErrorKind::UnknownName, "unknown term '" + name + "'");
    return t->term;
}

std::vector<std::string> type_names(const std::vector<TypeSymbol>& ts) {
    std::vector<std::string> out;
    for (const auto& t : ts) out.push_back(t.name());
    return out;
}

CommandResult verdict(bool holds, const CommandOptions& opts) {
    CommandResult r;
    r.code = holds ? kHolds : kFails;
    r.out = opts.json ? json{{"holds", holds}}.dump() + "\n" : std::string(holds ? "true\n" : "false\n");
    return r;
}

CommandResult text(std::string body, const CommandOptions& opts, const char* key = "text") {
    CommandResult r;
    r.out = opts.json ? json{{key, body}}.dump() + "\n" : std::move(body);
    return r;
}

std::string term_text(const std::string& name, const GraphicalTerm& t) {
    const std::string w = name + "_w";
    std::string out = print_diagram(w, t.diagram());
    out += "term " + name + " = " + w + "(";
    for (std::size_t i = 0; i < t.cells().size(); ++i) {
        out += (i ? ", " : "") + std::get<PredicateRef>(t.cells()[i]).name;
    }
    return out + ");\n";
}

CommandResult cmd_validate(const Workspace& ws, const std::vector<std::string>& args, const CommandOptions& opts) {
    arity(args, 0, "validate");
    json counts{{"types", ws.signature.types().size()},   {"predicates", ws.signature.predicates().size()},
                {"contexts", ws.contexts.size()},         {"diagrams", ws.diagrams.size()},
                {"terms", ws.terms.size()},               {"model", ws.has_model()}};
    if (ws.has_model()) ws.model();
    CommandResult r;
    if (opts.json) {
        r.out = json{{"valid", true}, {"counts", counts}}.dump() + "\n";
    } else {
        std::ostringstream s;
        s << "valid: " << counts["types"] << " types, " << counts["predicates"] << " predicates, "
          << counts["contexts"] << " contexts, " << counts["diagrams"] << " diagrams, " << counts["terms"]
          << " terms" << (ws.has_model() ? ", model" : "") << "\n";
        r.out = s.str();
    }
    return r;
}

CommandResult cmd_normalize(const Workspace& ws, const std::vector<std::string>& args, const CommandOptions& opts) {
    if (args.size() == 1) return text(print_workspace(ws), opts);
    arity(args, 1, "normalize [<diagram>]");
    const DiagramDecl& d = diagram_arg(ws, args[1]);
    return text(print_diagram(d.name, d.diagram, d.inner_names, d.outer_name), opts);
}

CommandResult cmd_compose(const Workspace& ws, const std::vector<std::string>& args, const CommandOptions& opts) {
    arity(args, 3, "compose <d1> <slot> <d2>");
    const DiagramDecl& outer = diagram_arg(ws, args[1]);
    const DiagramDecl& part = diagram_arg(ws, args[3]);
    std::size_t slot = 0;
    try {
        slot = std::stoul(args[2]);
    } catch (const std::exception&) {
        throw Error(ErrorKind::Syntax, "slot must be a positive number, got '" + args[2] + "'");
    }
    if (slot == 0 || slot > outer.diagram.shell_count()) {
        throw Error(ErrorKind::OutOfRange, "diagram " + outer.name + " has no inner shell " + args[2]);
    }
    const WiringDiagram w = substitute(outer.diagram, slot - 1, part.diagram);
    std::vector<std::string> names(outer.inner_names.begin(), outer.inner_names.begin() + (slot - 1));
    names.insert(names.end(), part.inner_names.begin(), part.inner_names.end());
    names.insert(names.end(), outer.inner_names.begin() + slot, outer.inner_names.end());
    return text(print_diagram(outer.name + "_" + args[2] + "_" + part.name, w, names, outer.outer_name), opts);
}

CommandResult cmd_leq(const Workspace& ws, const std::vector<std::string>& args, const CommandOptions& opts) {
    arity(args, 2, "leq <d1> <d2>");
    return verdict(leq_wd(diagram_arg(ws, args[1]).diagram, diagram_arg(ws, args[2]).diagram), opts);
}

CommandResult cmd_eval(const Workspace& ws, const std::vector<std::string>& args, const CommandOptions& opts) {
    arity(args, 1, "eval <term>");
    const FinRelation r = eval(term_arg(ws, args[1]), ws.model());
    CommandResult out;
    if (opts.json) {
        json tuples = json::array();
        for (const auto& t : r.tuples()) tuples.push_back(t);
        out.out = json{{"context", type_names(r.context().typing())},
                       {"support", type_names(r.context().support())},
                       {"tuples", tuples}}
                      .dump() +
                  "\n";
    } else {
        for (const auto& t : r.tuples()) out.out += print_tuple(t) + "\n";
    }
    return out;
}

CommandResult cmd_entail(const Workspace& ws, const std::vector<std::string>& args, const CommandOptions& opts) {
    arity(args, 2, "entail <t1> <t2>");
    return verdict(entails_in(ws.model(), term_arg(ws, args[1]), term_arg(ws, args[2])), opts);
}

CommandResult cmd_contains(const Workspace& ws, const std::vector<std::string>& args, const CommandOptions& opts) {
    arity(args, 2, "contains <t1> <t2>");
    return verdict(contains(term_arg(ws, args[1]), term_arg(ws, args[2])), opts);
}

CommandResult cmd_minimize(const Workspace& ws, const std::vector<std::string>& args, const CommandOptions& opts) {
    arity(args, 1, "minimize <term>");
    const GraphicalTerm core = minimize_core(term_arg(ws, args[1]));
    CommandResult r = text(term_text(args[1] + "_core", core), opts);
    return r;
}

CommandResult cmd_formula(const Workspace& ws, const std::vector<std::string>& args, const CommandOptions& opts) {
    arity(args, 1, "formula <term>");
    const Formula f = to_formula(flatten(term_arg(ws, args[1])));
    CommandResult r;
    if (opts.json) {
        json free = json::array();
        for (const auto& v : f.free) free.push_back({{"name", v.name}, {"type", v.type.name()}});
        r.out = json{{"free", free}, {"formula", f.text}}.dump() + "\n";
    } else {
        std::string head = args[1] + "(";
        for (std::size_t i = 0; i < f.free.size(); ++i) {
            head += (i ? ", " : "") + f.free[i].name + ":" + f.free[i].type.name();
        }
        r.out = head + ") := " + f.text + "\n";
    }
    return r;
}

CommandResult cmd_dot(const Workspace& ws, const std::vector<std::string>& args, const CommandOptions& opts) {
    arity(args, 1, "dot <diagram|term>");
    if (const DiagramDecl* d = ws.find_diagram(args[1])) return text(emit_dot(d->diagram, d->name), opts, "dot");
    return text(emit_dot(term_arg(ws, args[1]), args[1]), opts, "dot");
}

CommandResult cmd_axioms(const Workspace& ws, const std::vector<std::string>& args, const CommandOptions& opts) {
    arity(args, 0, "axioms");
    AxiomBounds bounds;
    if (opts.bound) bounds.max_arity = *opts.bound;
    const AxiomReport report = check_regular_axioms(ws.model(), bounds);
    CommandResult r;
    r.code = report.ok() ? kHolds : kFails;
    if (opts.json) {
        json laws = json::array();
        for (const auto& l : report.laws) {
            laws.push_back({{"law", l.law}, {"cases", l.cases}, {"failures", l.failures}, {"witness", l.witness}});
        }
        r.out = json{{"ok", report.ok()},
                     {"objects", report.objects},
                     {"probes", report.probes},
                     {"max_arity", bounds.max_arity},
                     {"laws", laws}}
                    .dump(2) +
                "\n";
    } else {
        std::ostringstream s;
        s << "objects " << report.objects << ", probes " << report.probes << ", max arity " << bounds.max_arity
          << "\n";
        for (const auto& l : report.laws) {
            s << (l.failures ? "FAIL " : "ok   ") << l.law << " (" << l.cases << " cases";
            if (l.failures) s << ", " << l.failures << " failures; first: " << l.witness;
            s << ")\n";
        }
        r.out = s.str();
    }
    return r;
}

CommandResult cmd_fundamental(const Workspace& ws, const std::vector<std::string>& args, const CommandOptions& opts) {
    arity(args, 2, "fundamental <r> <r'>");
    const ModelInstance m = ws.model();
    for (std::size_t i = 1; i <= 2; ++i) m.signature().types().require(args[i]);
    const FundamentalReport f = fundamental_check(m, args[1], args[2]);
    CommandResult r;
    r.code = f.ok() ? kHolds : kFails;
    if (opts.json) {
        r.out = json{{"ok", f.ok()},
                     {"relations", f.relations},
                     {"expected_relations", f.expected_relations},
                     {"functions", f.functions},
                     {"expected_functions", f.expected_functions},
                     {"all_graphs", f.all_graphs},
                     {"bijective", f.bijective}}
                    .dump() +
                "\n";
    } else {
        std::ostringstream s;
        s << "internal relations " << f.relations << " (expected " << f.expected_relations << ")\n"
          << "internal functions " << f.functions << " (expected " << f.expected_functions << ")\n"
          << "every function is a graph: " << (f.all_graphs ? "yes" : "no") << "\n"
          << "functions match set maps one to one: " << (f.bijective ? "yes" : "no") << "\n";
        r.out = s.str();
    }
    return r;
}

using Handler = std::function<CommandResult(const Workspace&, const std::vector<std::string>&, const CommandOptions&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h{
        {"validate", cmd_validate}, {"normalize", cmd_normalize}, {"compose", cmd_compose},
        {"leq", cmd_leq},           {"eval", cmd_eval},           {"entail", cmd_entail},
        {"contains", cmd_contains}, {"minimize", cmd_minimize},   {"formula", cmd_formula},
        {"dot", cmd_dot},           {"axioms", cmd_axioms},       {"fundamental", cmd_fundamental},
    };
    return h;
}

} // namespace

CommandResult run_command(const Workspace& ws, const std::vector<std::string>& args, const CommandOptions& opts) {
    CommandResult r;
    try {
        if (args.empty()) throw Error(ErrorKind::Syntax, "no command given");
        auto it = handlers().find(args[0]);
        if (it == handlers().end()) throw Error(ErrorKind::Syntax, "unknown command '" + args[0] + "'");
        return it->second(ws, args, opts);
    } catch (const Error& e) {
        r.code = kError;
        r.err = std::string("error (") + to_string(e.kind()) + "): " + e.what() + "\n";
    } catch (const std::exception& e) {
        r.code = kError;
        r.err = std::string("error: ") + e.what() + "\n";
    }
    return r;
}

} // namespace grl
