#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tafverify/verify.hpp"

using tafverify::json;

namespace {

constexpr int exit_usage = 2;

void emit(json const & j)
{
    std::cout << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"exact verification of the abelian-surface and modular-form computations"};
    app.require_subcommand(1);

    long max_n = 10;
    std::string report_path;
    auto * verify = app.add_subcommand("verify-all", "run every check for squarefree N <= max-n");
    verify->add_option("--max-n", max_n, "largest N")->required()->check(CLI::PositiveNumber);
    verify->add_option("--report", report_path, "write the JSON report to this file");

    long n = 1;
    auto * classgroup = app.add_subcommand("classgroup", "class group, genus data and h(GU)");
    classgroup->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    auto * lattice = app.add_subcommand("lattice", "trace duals and the self-dual lattice");
    lattice->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    auto * cm = app.add_subcommand("cm", "CM matrices, polarization and automorphisms");
    cm->add_option("--n", n)->required()->check(CLI::PositiveNumber);

    long p = 0;
    std::vector<long> aux;
    auto * ht = app.add_subcommand("honda-tate", "F-linear isogeny classes of abelian surfaces");
    ht->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    ht->add_option("--p", p)->required();
    auto * aux_opt = ht->add_option("--aux", aux, "auxiliary m for Q(sqrt(-n), sqrt(-m))")->delimiter(',');

    long level = 1, max_weight = 24, max_denom = 2;
    auto * inv = app.add_subcommand("invariants", "invariant subrings of the level 1, 2, 3 rings");
    inv->add_option("--level", level)->required()->check(CLI::IsMember({1L, 2L, 3L}));
    auto * inv_p = inv->add_option("--p", p);
    inv->add_option("--max-weight", max_weight)->check(CLI::NonNegativeNumber);
    inv->add_option("--max-denom", max_denom)->check(CLI::NonNegativeNumber);

    long prec = 200;
    auto * qs = app.add_subcommand("qseries", "Delta by product and by Eisenstein series");
    qs->add_option("--prec", prec)->required()->check(CLI::PositiveNumber);

    auto * rep = app.add_subcommand("report", "theorem descriptor for N");
    rep->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    auto * rep_p = rep->add_option("--p", p);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*verify) {
            auto results = tafverify::verify_all(max_n);
            std::string text = tafverify::report_json(results).dump(2) + "\n";
            if (report_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream f(report_path, std::ios::binary);
                if (!f || !(f << text) || !(f.flush()))
                    throw std::ios_base::failure("cannot write report to " + report_path);
            }
            return tafverify::exit_status(results);
        }
        if (*classgroup)
            emit(tafverify::classgroup_json(n));
        else if (*lattice)
            emit(tafverify::lattice_json(n));
        else if (*cm)
            emit(tafverify::cm_json(n));
        else if (*ht)
            emit(tafverify::honda_tate_json(n, p, *aux_opt ? std::optional(aux) : std::nullopt));
        else if (*inv)
            emit(tafverify::invariants_json(level, *inv_p ? std::optional(p) : std::nullopt, max_weight, max_denom));
        else if (*qs)
            emit(tafverify::qseries_json(prec));
        else if (*rep)
            emit(tafverify::to_json(tafverify::report(n, *rep_p ? std::optional(p) : std::nullopt)));
    } catch (std::ios_base::failure const & e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return exit_usage;
    } catch (std::invalid_argument const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return 0;
}
