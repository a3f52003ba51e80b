#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dnpairs {

struct ExperimentConfig {
    std::vector<long long> n_values;
    std::vector<long long> t_values;
    bool include_b_zero = true;
    int workers = 1;
    bool use_bruteforce = false;  // reference enumerator instead of the fast one
    std::string output_format = "csv";  // "csv" or "json"
    std::string output_path;            // empty = stdout
};

/// One output row; class_id is the canonical form "[a,b,c]" or "TOTAL".
struct ReportRow {
    long long n = 0;
    long long T = 0;
    std::string class_id;
    long long content = 0;  // 0 on TOTAL rows
    std::string regime;     // "definite", "indefinite" or "split"
    long long empirical = 0;
    double predicted = 0;
    double ratio = 0;
    bool operator==(const ReportRow&) const = default;
};

/// Count pairs for every (n, T) in the config and attach predictions.
/// Rows are ordered by (n, T, content, canonical form), TOTAL last per
/// (n, T). Progress goes to stderr.
std::vector<ReportRow> run_count(const ExperimentConfig& config);

/// Header "n,T,class,content,regime,empirical,predicted,ratio".
void write_csv(const std::vector<ReportRow>& rows, std::ostream& out);
std::vector<ReportRow> parse_csv(std::istream& in);

/// JSON array of objects with the same field names as the CSV columns.
void write_json(const std::vector<ReportRow>& rows, std::ostream& out);

/// Verification suites: "identities", "volumes", "oracle". Prints one line
/// per check to out; returns the number of failed checks.
int run_verify(const std::vector<std::string>& suites, std::ostream& out);

/// key = value file; recognized keys: n, t, format, out, workers, b_zero,
/// oracle. Later command-line flags override these values.
void load_config_file(const std::string& path, ExperimentConfig& config);

/// Comma-separated integer list ("-4,1,12").
std::vector<long long> parse_int_list(const std::string& text);

}  // namespace dnpairs
