// polygram: exact counts of parallelogram polyominoes, parallelogram
// polycubes, and their d-dimensional relatives, with symbolic multiple zeta
// expansions of the associated Dirichlet generating functions.
//
// Subcommands:
//   table   emit a table of counts as CSV or JSON
//   expand  print the multiple zeta expansion for a given width
//   verify  run the built-in cross-check battery
//
// Exit codes: 0 success, 1 verification failure or internal inconsistency,
// 2 usage or configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <polygram/polygram.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace polygram;

struct TableArgs {
    std::string which;
    int max_k = 10;
    int max_n = 10;
    int max_m = 0;   // 0: not given
    int dim = 0;     // 0: not given
    std::string format = "csv";
};

void emit(const CountTable& t, const nlohmann::ordered_json& params, const std::string& format) {
    if (format == "json")
        std::cout << polygram::to_json(t, params).dump(2) << "\n";
    else
        std::cout << to_csv(t);
}

void emit(const CountTable3& t, const nlohmann::ordered_json& params, const std::string& format) {
    if (format == "json")
        std::cout << polygram::to_json(t, params).dump(2) << "\n";
    else
        std::cout << to_csv(t);
}

int run_table(const TableArgs& a) {
    nlohmann::ordered_json params;
    params["k"] = a.max_k;
    params["n"] = a.max_n;
    if (a.which != "s") {
        if (a.max_m != 0)
            throw std::invalid_argument("--m only applies to table s");
        if (a.dim != 0)
            throw std::invalid_argument("--d only applies to table s");
    }
    if (a.which == "b") {
        CountTable t = width_area_table(a.max_k, a.max_n);
        if (a.max_k >= 3 && a.max_n >= 8) t.notes.push_back(reference::width_area_erratum_note());
        emit(t, params, a.format);
        return 0;
    }
    if (a.which == "c") {
        emit(width_volume_table(a.max_k, a.max_n), params, a.format);
        return 0;
    }
    if (a.which == "g") {
        CountTable t("g", a.max_k, a.max_n);
        for (int k = 1; k <= a.max_k; ++k)
            for (int n = 1; n <= a.max_n; ++n) t.at(k, n) = count_width_height(k, n);
        emit(t, params, a.format);
        return 0;
    }
    // which == "s"
    const int dim = (a.dim == 0) ? 3 : a.dim;
    if (dim == 3) {
        if (a.max_m == 0)
            throw std::invalid_argument("table s with d = 3 requires --m");
        params["m"] = a.max_m;
        params["d"] = 3;
        CountTable3 t("s", a.max_k, a.max_n, a.max_m);
        for (int k = 1; k <= a.max_k; ++k)
            for (int n = 1; n <= a.max_n; ++n)
                for (int m = 1; m <= a.max_m; ++m) t.at(k, n, m) = count_width_height_depth(k, n, m);
        emit(t, params, a.format);
        return 0;
    }
    if (a.max_m != 0)
        throw std::invalid_argument("table s with d >= 4 takes equal heights; drop --m");
    params["d"] = dim;
    CountTable t("s", a.max_k, a.max_n);
    for (int k = 1; k <= a.max_k; ++k)
        for (int n = 1; n <= a.max_n; ++n) {
            std::vector<int> heights(static_cast<std::size_t>(dim) - 1, n);
            t.at(k, n) = count_hyper(HyperBoxSpec{dim, k, heights});
        }
    t.notes.push_back("d = " + std::to_string(dim) + ": cell (k, n) counts width-k objects with all " +
                      std::to_string(dim - 1) + " transverse heights equal to n");
    emit(t, params, a.format);
    return 0;
}

int run_expand(int width, bool count_only, int power) {
    ZetaExpansion e = dgf_expansion(width);  // throws past the width cap
    if (count_only) {
        std::cout << e.terms.size() << "\n";
        return 0;
    }
    if (power != 0) {
        if (power < 2) throw std::invalid_argument("--power takes a dimension >= 2");
        std::cout << "P_(" << power << "," << width << ") = (V_" << width << ")^" << (power - 1)
                  << "\n";
        std::cout << "V_" << width << " = " << render(e) << "\n";
        return 0;
    }
    std::cout << render(e) << "\n";
    return 0;
}

int run_verify(verify::VerifyOptions opts, bool quick) {
    if (quick) {
        opts.max_area = std::min(opts.max_area, 8);
        opts.max_volume = std::min(opts.max_volume, 6);
        opts.expansion_width = 3;
        opts.expansion_limit = 5;
    }
    int passed = 0, failed = 0, skipped = 0;
    for (const verify::CheckResult& r : verify::run_verification(opts)) {
        const char* status = "SKIP";
        if (r.status == verify::CheckResult::Status::pass) {
            status = "PASS";
            ++passed;
        } else if (r.status == verify::CheckResult::Status::fail) {
            status = "FAIL";
            ++failed;
        } else {
            ++skipped;
        }
        std::cout << status << " " << r.name << " — " << r.detail << "\n";
    }
    std::cout << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "polygram: exact counts of parallelogram polyominoes, polycubes, and "
        "d-dimensional relatives"};
    app.require_subcommand(1);

    TableArgs table_args;
    CLI::App* table_cmd = app.add_subcommand("table", "Emit a table of counts");
    table_cmd->add_option("which", table_args.which,
                          "Table family: b (width/area), c (width/volume), g (width/height), "
                          "s (width/height/depth)")
        ->required()
        ->check(CLI::IsMember({"b", "c", "g", "s"}));
    table_cmd->add_option("--k", table_args.max_k, "Maximum width (default 10)")
        ->check(CLI::PositiveNumber);
    table_cmd->add_option("--n", table_args.max_n, "Maximum second index (default 10)")
        ->check(CLI::PositiveNumber);
    table_cmd->add_option("--m", table_args.max_m, "Maximum depth (table s with d = 3)")
        ->check(CLI::PositiveNumber);
    table_cmd->add_option("--d", table_args.dim, "Dimension for table s (3..6, default 3)")
        ->check(CLI::Range(3, 6));
    table_cmd->add_option("--format", table_args.format, "Output format (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));

    int expand_width = 0;
    bool expand_count_only = false;
    int expand_power = 0;
    CLI::App* expand_cmd =
        app.add_subcommand("expand", "Print the multiple zeta expansion for a width");
    expand_cmd->add_option("--k", expand_width, "Width (number of columns)")
        ->required()
        ->check(CLI::PositiveNumber);
    expand_cmd->add_flag("--count-only", expand_count_only, "Print only the number of terms");
    expand_cmd->add_option("--power", expand_power,
                           "Annotate with the d-dimensional power identity (d >= 2)");

    verify::VerifyOptions verify_opts;
    bool verify_quick = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the built-in cross-check battery");
    verify_cmd->add_option("--max-area", verify_opts.max_area,
                           "Polyomino enumeration bound (default 10, at most 14)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-volume", verify_opts.max_volume,
                           "Polycube enumeration bound (default 8, at most 10)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--oeis-dir", verify_opts.oeis_dir,
                           "Directory of OEIS b-files (omit to skip those checks)");
    verify_cmd->add_flag("--quick", verify_quick, "Shrink the battery for a fast smoke run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table_cmd->parsed()) return run_table(table_args);
        if (expand_cmd->parsed()) return run_expand(expand_width, expand_count_only, expand_power);
        return run_verify(verify_opts, verify_quick);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
