#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_app.hpp"
#include "sumprod/error.hpp"

namespace {

using nlohmann::json;

struct Bound {
    CLI::Option* option;
    std::string key;
};

// Subcommand with string-valued options echoed verbatim into the inputs object.
class Command {
public:
    Command(CLI::App& app, const std::string& name, const std::string& help) : sub_(app.add_subcommand(name, help)) {}

    Command& opt(const std::string& names, const std::string& key, const std::string& help) {
        bound_.push_back({sub_->add_option(names, values_[key], help), key});
        return *this;
    }

    Command& positional(const std::string& key, const std::string& help) {
        bound_.push_back({sub_->add_option(key, values_[key], help)->required(), key});
        return *this;
    }

    CLI::App* app() const { return sub_; }

    json inputs() const {
        json out = json::object();
        for (const auto& b : bound_)
            if (b.option->count() > 0) out[b.key] = values_.at(b.key);
        return out;
    }

private:
    CLI::App* sub_;
    std::map<std::string, std::string> values_;
    std::vector<Bound> bound_;
};

void equation_options(Command& c) {
    c.opt("-a", "a", "progression step a (nonzero)")
        .opt("-b", "b", "progression offset b")
        .opt("-c", "c", "product step c")
        .opt("-k", "k", "power k >= 1")
        .opt("-l,--ell", "l", "number of product factors l >= 2");
}

}  // namespace

int main(int argc, char** argv) {
    namespace cli = sumprod::cli;
    CLI::App app{"Exact computations with power sums of arithmetic progressions and products of consecutive terms"};
    app.set_version_flag("--version", cli::tool_version);
    bool as_json = false, pretty = false;
    std::string manifest_path;
    app.add_flag("--json", as_json, "always print the JSON payload");
    app.add_flag("--pretty", pretty, "human-readable polynomials / indented JSON");
    app.add_option("--manifest", manifest_path, "write a replayable run manifest to PATH");
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::vector<std::unique_ptr<Command>> commands;
    auto add = [&](const std::string& name, const std::string& help) -> Command& {
        commands.push_back(std::make_unique<Command>(app, name, help));
        return *commands.back();
    };

    add("family", "construct a named polynomial family")
        .positional("family", "powersum | product | bernoulli | dickson | hat-product | hat-powersum | falling-plus-q")
        .opt("-a", "a", "progression step")
        .opt("-b", "b", "progression offset")
        .opt("-k", "k", "power")
        .opt("-c", "c", "product step")
        .opt("-l,--ell", "l", "number of factors")
        .opt("-n", "n", "Bernoulli index")
        .opt("--mu", "mu", "Dickson degree")
        .opt("--delta", "delta", "Dickson parameter (rational)")
        .opt("-m", "m", "hat-product degree")
        .opt("-v", "v", "hat-powersum degree")
        .opt("-q", "q", "constant added to the falling product (rational)");
    equation_options(add("classify", "classify S_{a,b}^k(x) = R_c^l(y) by regime"));
    {
        Command& c = add("search", "integer solutions with x in [from, to]");
        equation_options(c);
        c.opt("--from", "from", "smallest x").opt("--to", "to", "largest x");
    }
    add("power-search", "S_{a,b}^k(x) = y^l with x in [from, to]")
        .opt("-a", "a", "progression step (positive)")
        .opt("-b", "b", "progression offset")
        .opt("-k", "k", "power")
        .opt("-l,--ell", "l", "exponent l >= 2")
        .opt("--from", "from", "smallest x")
        .opt("--to", "to", "largest x");
    add("zeros", "multiplicity profile and real-root data")
        .opt("--poly", "poly", "coefficients c0,c1,...,cn")
        .opt("--family", "family", "bernoulli-shift | falling-plus-q")
        .opt("-k", "k", "Bernoulli index")
        .opt("-d", "d", "shift d (rational)")
        .opt("-l,--ell", "l", "number of factors")
        .opt("-q", "q", "constant q (rational)");
    add("decompose", "all functional decompositions up to equivalence").opt("--poly", "poly", "coefficients c0,c1,...,cn");
    add("pell", "u^2 - D v^2 = N: fundamental unit, bases and orbit")
        .opt("-D", "D", "positive nonsquare D")
        .opt("-N", "N", "right-hand side (default 1)")
        .opt("--count", "count", "orbit elements per base (default 3)");
    add("family-solutions", "solutions from the Pell-generated families")
        .opt("--family", "family", "pellian | nsw")
        .opt("-a", "a", "progression step")
        .opt("-b", "b", "progression offset")
        .opt("-c", "c", "product step")
        .opt("--count", "count", "number of solutions (default 5)");
    add("verify", "run the identity suites").opt("--replay", "replay", "re-run a manifest and compare outputs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const Command* chosen = nullptr;
    for (const auto& c : commands)
        if (c->app()->parsed()) chosen = c.get();
    const std::string name = chosen->app()->get_name();
    const json inputs = chosen->inputs();

    try {
        if (name == "verify" && inputs.contains("replay")) {
            const std::string path = inputs["replay"].get<std::string>();
            std::ifstream in(path);
            if (!in) throw cli::UsageError("cannot read manifest '" + path + "'");
            json manifest;
            try {
                in >> manifest;
            } catch (const json::exception&) {
                throw cli::UsageError("manifest '" + path + "' is not valid JSON");
            }
            const json result = cli::replay_manifest(manifest);
            std::cout << result.dump(pretty ? 2 : -1) << "\n";
            return result["reproduced"].get<bool>() ? 0 : 3;
        }

        const json outputs = cli::run_command(name, inputs);
        if (!manifest_path.empty()) {
            std::ofstream out(manifest_path);
            if (!out) throw cli::UsageError("cannot write manifest '" + manifest_path + "'");
            out << cli::make_manifest(name, inputs, outputs).dump(2) << "\n";
        }
        const std::string text = as_json ? std::string() : cli::render_text(name, outputs, pretty);
        std::cout << (text.empty() ? outputs.dump(pretty ? 2 : -1) : text) << "\n";
        if (name == "verify" && !outputs["all_pass"].get<bool>()) return 3;
        return 0;
    } catch (const cli::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const sumprod::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const sumprod::InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
