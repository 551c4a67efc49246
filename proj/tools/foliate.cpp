#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "foliate/error.hpp"
#include "foliate/session.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "Exact calculator for derivations, differential ideals, trajectory descent,\n"
        "invariant open sets, projective leaf search, and constant-section extension.\n"
        "Reads a line-oriented script, prints one result line per command."};

    std::string input = "-";
    bool json = false;
    std::optional<unsigned> deg, rounds, jet_order;
    app.add_option("script", input, "script file; '-' (default) reads stdin");
    app.add_flag("--json", json, "mirror the report as a JSON document");
    app.add_option("--deg", deg, "default degree bound for trajectory descent");
    app.add_option("--rounds", rounds, "default round limit for trajectory descent");
    app.add_option("--jet-order", jet_order, "default jet truncation order for verify commands");
    CLI11_PARSE(app, argc, argv);

    std::string source;
    if (input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        source = ss.str();
    } else {
        std::ifstream f(input);
        if (!f) {
            std::cerr << "error: cannot open '" << input << "'\n";
            return 2;
        }
        std::ostringstream ss;
        ss << f.rdbuf();
        source = ss.str();
    }

    foliate::Session session;
    try {
        session.load(source);
    } catch (const foliate::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    foliate::RunOptions opts;
    opts.json = json;
    opts.deg = deg;
    opts.rounds = rounds;
    opts.jet_order = jet_order;
    foliate::RunResult res = session.run(opts);
    std::cout << res.text;
    return res.exit_code;
}
