#include "grl/commands.hpp"
#include "grl/dsl.hpp"
#include "grl/error.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Graphical regular logic engine"};
    std::string file, model;
    std::vector<std::string> command;
    grl::CommandOptions opts;
    std::size_t bound = 0;
    app.add_option("file", file, "DSL workspace file")->required();
    app.add_option("command", command,
                   "validate | normalize [d] | compose d1 slot d2 | leq d1 d2 | eval t | entail t1 t2 | "
                   "contains t1 t2 | minimize t | formula t | dot x | axioms | fundamental r r'")
        ->required();
    app.add_option("--model", model, "DSL file with domain, relation and csv declarations");
    app.add_flag("--json", opts.json, "emit JSON");
    auto* bound_opt = app.add_option("--bound", bound, "search bound (largest context arity for axioms)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : grl::kError;
    }
    if (*bound_opt) opts.bound = bound;

    grl::Workspace ws;
    try {
        grl::load_dsl_file(file, ws);
        if (!model.empty()) grl::load_dsl_file(model, ws);
    } catch (const grl::Error& e) {
        std::cerr << "error (" << grl::to_string(e.kind()) << "): " << e.what() << "\n";
        return grl::kError;
    }
    const auto r = grl::run_command(ws, command, opts);
    std::cout << r.out;
    std::cerr << r.err;
    return r.code;
}
