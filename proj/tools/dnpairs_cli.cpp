#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dnpairs/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "dnpairs: count D(n)-pairs {a,c} (ac+n a perfect square) up to a bound T,\n"
        "classify them by the proper equivalence class of the attached quadratic\n"
        "form [a, 2*sqrt(ac+n), c], and compare against closed-form leading terms."};

    std::string n_list, t_list, format, out_path, config_path, verify_list;
    int workers = 0;
    bool no_b_zero = false, oracle = false;

    app.add_option("--n", n_list, "Comma-separated nonzero n values, e.g. --n=-1,5,1");
    app.add_option("--t", t_list, "Comma-separated count bounds T, e.g. --t=1000,100000");
    app.add_option("--format", format, "Output format: csv (default) or json");
    app.add_option("--out", out_path, "Write data to this path instead of stdout");
    app.add_option("--workers", workers, "Worker threads for counting (default 1)");
    app.add_flag("--no-b-zero", no_b_zero, "Exclude pairs with ac + n = 0");
    app.add_option("--verify", verify_list,
                   "Run verification suites (comma-separated): identities, volumes, oracle");
    app.add_flag("--oracle", oracle, "Use the quadratic-time reference enumerator");
    app.add_option("--config", config_path, "key = value config file (flags override it)");

    CLI11_PARSE(app, argc, argv);

    try {
        dnpairs::ExperimentConfig config;
        if (!config_path.empty()) dnpairs::load_config_file(config_path, config);
        if (!n_list.empty()) config.n_values = dnpairs::parse_int_list(n_list);
        if (!t_list.empty()) config.t_values = dnpairs::parse_int_list(t_list);
        if (!format.empty()) config.output_format = format;
        if (!out_path.empty()) config.output_path = out_path;
        if (workers > 0) config.workers = workers;
        if (no_b_zero) config.include_b_zero = false;
        if (oracle) config.use_bruteforce = true;

        if (!verify_list.empty()) {
            std::vector<std::string> suites;
            for (size_t pos = 0; pos < verify_list.size();) {
                size_t comma = verify_list.find(',', pos);
                if (comma == std::string::npos) comma = verify_list.size();
                if (comma > pos) suites.push_back(verify_list.substr(pos, comma - pos));
                pos = comma + 1;
            }
            int failures = dnpairs::run_verify(suites, std::cout);
            return failures == 0 ? 0 : 1;
        }

        if (config.output_format != "csv" && config.output_format != "json") {
            std::cerr << "error: unknown format '" << config.output_format << "'\n";
            return 2;
        }
        std::vector<dnpairs::ReportRow> rows = dnpairs::run_count(config);
        std::ostream* out = &std::cout;
        std::ofstream file;
        if (!config.output_path.empty()) {
            file.open(config.output_path);
            if (!file) {
                std::cerr << "error: cannot open output file " << config.output_path << "\n";
                return 2;
            }
            out = &file;
        }
        if (config.output_format == "csv")
            dnpairs::write_csv(rows, *out);
        else
            dnpairs::write_json(rows, *out);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
