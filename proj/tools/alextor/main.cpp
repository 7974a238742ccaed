#include "commands.hpp"

#include "alextor/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace alextor;

int main(int argc, char** argv)
{
    CLI::App app{"Twisted Alexander invariants, Reidemeister torsion and related checks"};
    app.require_subcommand(1);
    app.fallthrough();
    cli::Global g;
    app.add_option("--precision-bits", g.precision_bits, "Bits for numeric magnitudes")
        ->check(CLI::Range(53u, 1u << 16));
    app.add_flag("--json", g.json, "Print the JSON report instead of text");

    std::function<cli::Output()> run;

    auto* ta = app.add_subcommand("twisted-alexander", "Twisted Alexander polynomial of a knot presentation");
    std::string pres, rep;
    std::size_t column = 0;
    ta->add_option("-p,--presentation", pres, "Presentation TOML")->required();
    ta->add_option("-r,--representation", rep, "Representation TOML")->required();
    ta->add_option("--column", column, "Generator column (1-based) for the determinant quotient");
    ta->callback([&] {
        run = [&] {
            return cli::twisted_alexander(pres, rep, column ? std::optional<std::size_t>(column) : std::nullopt, g);
        };
    });

    cli::Source src;
    std::string dual = "none";
    auto add_source = [&](CLI::App* sc) {
        sc->add_option("--complex", src.complex_path, "Complex JSON");
        sc->add_option("-p,--presentation", src.presentation_path, "Presentation TOML");
        sc->add_option("-r,--representation", src.representation_path, "Representation TOML");
    };
    auto* to = app.add_subcommand("torsion", "Reidemeister torsion, Alexander invariant and their difference");
    add_source(to);
    to->add_option("--dual", dual, "Dualize first: none, plain or unitary");
    to->callback([&] { run = [&] { return cli::torsion(src, dual, g); }; });

    auto* ho = app.add_subcommand("homology", "Homology as torsion modules and dimension checks");
    add_source(ho);
    ho->callback([&] { run = [&] { return cli::homology(src, g); }; });

    auto* mt = app.add_subcommand("mapping-torus", "Invariants of a mapping torus from its monodromy");
    std::string mono;
    mt->add_option("-f,--file", mono, "Monodromy TOML")->required();
    mt->callback([&] { run = [&] { return cli::mapping_torus(mono, g); }; });

    auto* ru = app.add_subcommand("ruelle", "Ruelle L-function predictions and truncated products");
    ru->require_subcommand(1);
    auto* rp = ru->add_subcommand("predict", "Order and leading constant at s = 0");
    std::vector<std::string> from;
    rp->add_option("--from", from, "mapping-torus FILE | knot PRESENTATION REPRESENTATION")->required()->expected(2, 3);
    rp->callback([&] { run = [&] { return cli::ruelle_predict(from, g); }; });
    auto* rt = ru->add_subcommand("truncate", "Partial Euler product over a length spectrum");
    std::string spectrum, s, max_length;
    rt->add_option("--spectrum", spectrum, "Spectrum CSV")->required();
    rt->add_option("-s", s, "Complex point RE,IM")->required();
    rt->add_option("--max-length", max_length, "Length cutoff")->required();
    rt->callback([&] { run = [&] { return cli::ruelle_truncate(spectrum, s, max_length, g); }; });

    auto* ve = app.add_subcommand("verify", "Randomized verification of the identities on seeded corpora");
    cli::VerifyArgs va;
    ve->add_option("--suite", va.suite, "all, complexes, monodromy, knots or fox");
    ve->add_option("--seed", va.seed, "Corpus seed");
    ve->add_option("--complexes", va.complexes, "Number of random complexes");
    ve->add_option("--monodromies", va.monodromies, "Number of semisimple monodromies");
    ve->add_option("--jordans", va.jordans, "Number of monodromies with a Jordan block at 1");
    ve->add_option("--knots", va.knots, "Number of knot cases");
    ve->add_option("--words", va.words, "Number of random words");
    ve->add_option("--threads", va.threads, "Worker threads (0: all cores)");
    ve->add_option("--artifacts", va.artifacts, "Directory for failing instances");
    ve->callback([&] { run = [&] { return cli::verify(va, g); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::input_error;
    }

    try {
        cli::Output out = run();
        if (g.json) std::cout << out.json.dump(2) << "\n";
        else std::cout << out.text;
        return out.exit_code;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::input_error;
    } catch (const HypothesisError& e) {
        std::cerr << "not applicable: " << e.what() << "\n";
        return cli::not_applicable;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return cli::invariant_violation;
    }
}
