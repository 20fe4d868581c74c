#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "aszeta/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"L-functions and point counts of curves y^2 + y = x R(x) over binary fields"};
    app.require_subcommand(1);

    std::string specfile;
    unsigned long n = 0, n_max = 0, seed = 1;
    unsigned dim_ceiling = 4096, brute_bound = 24, h = 1, corpus_size = 50, d_max = 3;
    std::string m_list = "1,2";
    bool inject_fault = false, cross_check = false;

    auto add_ceiling = [&](CLI::App* cmd) {
        cmd->add_option("--dim-ceiling", dim_ceiling,
                        "largest bilinear-form dimension the classifier may build")
            ->capture_default_str();
    };

    CLI::App* analyze =
        app.add_subcommand("analyze", "splitting degree, invariant tables, period, case tag");
    analyze->add_option("specfile", specfile, "curve spec file")->required();
    add_ceiling(analyze);

    CLI::App* lfunction =
        app.add_subcommand("lfunction", "full factored L-function report");
    lfunction->add_option("specfile", specfile, "curve spec file")->required();
    add_ceiling(lfunction);

    CLI::App* count = app.add_subcommand("count", "exponential sums and point counts");
    count->add_option("specfile", specfile, "curve spec file")->required();
    count->add_option("--n", n, "extension degree (start of range with --n-max)");
    count->add_option("--n-max", n_max, "end of the degree range");
    add_ceiling(count);

    CLI::App* verify =
        app.add_subcommand("verify", "diff the pipeline against independent oracles");
    verify->add_option("specfile", specfile, "curve spec file")->required();
    verify->add_option("--brute-bound", brute_bound,
                       "run enumeration oracles while m*n stays within this")
        ->capture_default_str();
    verify->add_flag("--inject-fault", inject_fault,
                     "corrupt one multiplicity to prove mismatches are detected");
    add_ceiling(verify);

    CLI::App* suzuki = app.add_subcommand("suzuki", "closed-form family tables");
    suzuki->set_help_flag("--help", "print help");  // frees -h for the parameter below
    suzuki->add_option("--h", h, "family parameter (q0 = 2^h)")->required();
    suzuki->add_option("--n-max", n_max, "table rows to print (default 10)");
    suzuki->add_flag("--cross-check", cross_check,
                     "diff the closed forms against the generic pipeline up to n = 100");
    add_ceiling(suzuki);

    CLI::App* corpus = app.add_subcommand("seed-corpus", "emit reproducible random specs");
    corpus->add_option("--seed", seed, "generator seed")->capture_default_str();
    corpus->add_option("--corpus-size", corpus_size, "number of specs")->capture_default_str();
    corpus->add_option("--m-list", m_list, "comma-separated base degrees to draw from")
        ->capture_default_str();
    corpus->add_option("--d-max", d_max, "largest 2-degree")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed())
            return aszeta::cmd_analyze(specfile, dim_ceiling, std::cout, std::cerr);
        if (lfunction->parsed())
            return aszeta::cmd_lfunction(specfile, dim_ceiling, std::cout, std::cerr);
        if (count->parsed())
            return aszeta::cmd_count(specfile, n, n_max, dim_ceiling, std::cout, std::cerr);
        if (verify->parsed()) {
            aszeta::VerifyOptions opt;
            opt.brute_bound = brute_bound;
            opt.dim_ceiling = dim_ceiling;
            opt.inject_fault = inject_fault;
            return aszeta::cmd_verify(specfile, opt, std::cout, std::cerr);
        }
        if (suzuki->parsed())
            return aszeta::cmd_suzuki(h, n_max, cross_check, dim_ceiling, std::cout, std::cerr);
        if (corpus->parsed())
            return aszeta::cmd_seed_corpus(seed, corpus_size, m_list, d_max, std::cout,
                                           std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
