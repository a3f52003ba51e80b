#include "dnpairs/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dnpairs/arith.hpp"
#include "dnpairs/classnum.hpp"
#include "dnpairs/pairs.hpp"
#include "dnpairs/pell.hpp"
#include "dnpairs/theory.hpp"
#include "dnpairs/volumes.hpp"

namespace dnpairs {

namespace {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::definite: return "definite";
        case Regime::indefinite: return "indefinite";
        case Regime::split: return "split";
    }
    return "?";
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

CountTable count_via_bruteforce(long long n, long long T, const ClassInventory& inv,
                                const EnumerateOptions& opts) {
    CountTable table;
    table.n = n;
    table.T = T;
    table.per_class.assign(inv.size(), 0);
    for (const PairRecord& r : enumerate_pairs_bruteforce(n, T, opts)) {
        int idx = inv.classify(Form64{r.a, r.b, r.c});
        if (idx < 0) throw std::logic_error("bruteforce count: pair form missed the inventory");
        ++table.per_class[static_cast<size_t>(idx)];
        ++table.total;
    }
    return table;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& v) {
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw std::invalid_argument("config: bad boolean value '" + v + "'");
}

}  // namespace

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        size_t pos = 0;
        long long v = std::stoll(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<ReportRow> run_count(const ExperimentConfig& config) {
    if (config.n_values.empty() || config.t_values.empty())
        throw std::invalid_argument("run_count: need at least one n and one T");
    for (long long n : config.n_values)
        if (n == 0) throw std::invalid_argument("run_count: n must be nonzero");
    std::vector<long long> ns = config.n_values;
    std::vector<long long> ts = config.t_values;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    EnumerateOptions opts;
    opts.include_b_zero = config.include_b_zero;
    opts.workers = config.workers;

    std::vector<ReportRow> rows;
    for (long long n : ns) {
        ClassInventory inv = class_representatives(n);
        Prediction total_pred = predict_total(n);
        for (long long T : ts) {
            std::cerr << "counting n=" << n << " T=" << T << " ..." << std::endl;
            CountTable table = config.use_bruteforce ? count_via_bruteforce(n, T, inv, opts)
                                                     : count_by_class(n, T, inv, opts);
            for (size_t i = 0; i < inv.size(); ++i) {
                const ClassEntry& e = inv.classes()[i];
                ReportRow row;
                row.n = n;
                row.T = T;
                row.class_id = e.canonical.str();
                row.content = e.content;
                row.regime = regime_name(e.regime);
                row.empirical = table.per_class[i];
                row.predicted = predict_class(n, e.content).value_at(static_cast<double>(T));
                row.ratio = row.predicted != 0 ? row.empirical / row.predicted
                                               : std::numeric_limits<double>::quiet_NaN();
                rows.push_back(std::move(row));
            }
            ReportRow total;
            total.n = n;
            total.T = T;
            total.class_id = "TOTAL";
            total.content = 0;
            total.regime = regime_name(inv.regime());
            total.empirical = table.total;
            total.predicted = total_pred.value_at(static_cast<double>(T));
            total.ratio = total.predicted != 0 ? total.empirical / total.predicted
                                               : std::numeric_limits<double>::quiet_NaN();
            rows.push_back(std::move(total));
        }
    }
    return rows;
}

void write_csv(const std::vector<ReportRow>& rows, std::ostream& out) {
    out << "n,T,class,content,regime,empirical,predicted,ratio\n";
    for (const ReportRow& r : rows) {
        out << r.n << ',' << r.T << ',' << '"' << r.class_id << '"' << ',' << r.content << ','
            << r.regime << ',' << r.empirical << ',' << format_double(r.predicted) << ','
            << format_double(r.ratio) << '\n';
    }
}

std::vector<ReportRow> parse_csv(std::istream& in) {
    std::vector<ReportRow> rows;
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("parse_csv: empty input");
    if (trim(line) != "n,T,class,content,regime,empirical,predicted,ratio")
        throw std::invalid_argument("parse_csv: unexpected header");
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::vector<std::string> fields;
        std::string cur;
        bool quoted = false;
        for (char ch : line) {
            if (ch == '"') {
                quoted = !quoted;
            } else if (ch == ',' && !quoted) {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        fields.push_back(cur);
        if (fields.size() != 8) throw std::invalid_argument("parse_csv: bad row '" + line + "'");
        ReportRow r;
        r.n = std::stoll(fields[0]);
        r.T = std::stoll(fields[1]);
        r.class_id = fields[2];
        r.content = std::stoll(fields[3]);
        r.regime = fields[4];
        r.empirical = std::stoll(fields[5]);
        r.predicted = std::stod(fields[6]);
        r.ratio = std::stod(fields[7]);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_json(const std::vector<ReportRow>& rows, std::ostream& out) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ReportRow& r : rows) {
        nlohmann::json obj;
        obj["n"] = r.n;
        obj["T"] = r.T;
        obj["class"] = r.class_id;
        obj["content"] = r.content;
        obj["regime"] = r.regime;
        obj["empirical"] = r.empirical;
        obj["predicted"] = r.predicted;
        obj["ratio"] = r.ratio;
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

namespace {

struct CheckReporter {
    std::ostream& out;
    int failures = 0;
    void operator()(const std::string& name, bool ok, const std::string& detail) {
        out << (ok ? "PASS" : "FAIL") << "  " << name;
        if (!detail.empty()) out << "  (" << detail << ")";
        out << '\n';
        if (!ok) ++failures;
    }
};

void verify_identities(CheckReporter& report) {
    {
        bool ok = true;
        long long worst_n = 0;
        double worst = 0;
        for (long long n = -200; n <= 200; ++n) {
            if (n == 0 || (n > 0 && is_square(n))) continue;
            double lhs, rhs;
            bool good = consistency_check(n, &lhs, &rhs);
            double rel = std::abs(lhs - rhs) / std::abs(rhs);
            if (rel > worst) {
                worst = rel;
                worst_n = n;
            }
            ok = ok && good;
        }
        std::ostringstream detail;
        detail << "class-sum vs total, |n| <= 200, worst rel err " << format_double(worst)
               << " at n=" << worst_n << ", tol 1e-9";
        report("identities.class_sum", ok, detail.str());
    }
    {
        bool ok = true;
        int checked = 0;
        for (long long d0 = -60; d0 <= 60; ++d0) {
            if (d0 == 0 || (d0 > 0 && is_square(d0))) continue;
            long long dm = ((d0 % 4) + 4) % 4;
            if (dm != 0 && dm != 1) continue;
            if (split_discriminant(d0).f != 1) continue;  // fundamental only
            for (long long f = 1; f <= 8; ++f) {
                ok = ok && ring_class_check(d0, f);
                ++checked;
            }
        }
        std::ostringstream detail;
        detail << "ring class number formula, " << checked << " (d0, f) pairs, exact";
        report("identities.ring_class_number", ok, detail.str());
    }
}

void verify_volumes(CheckReporter& report) {
    {
        double v = arcsin_constant();
        std::ostringstream detail;
        detail << "value " << format_double(v) << ", target 1 +- 1e-9";
        report("volumes.arcsin_constant", std::abs(v - 1.0) <= 1e-9, detail.str());
    }
    for (double M : {1e2, 1e3, 1e4}) {
        RegionVolume v = definite_volume(M);
        double dev = std::abs(v.ratio_to_leading - 1.0);
        std::ostringstream detail;
        detail << "M=" << format_double(M) << " ratio " << format_double(v.ratio_to_leading)
               << ", tol 10*M^-1/2";
        report("volumes.definite", dev <= 10.0 / std::sqrt(M), detail.str());
    }
    for (double M : {1e2, 1e3, 1e4}) {
        RegionVolume v = indefinite_volume(M);
        double dev = std::abs(v.ratio_to_leading - 1.0);
        std::ostringstream detail;
        detail << "M=" << format_double(M) << " ratio " << format_double(v.ratio_to_leading)
               << ", tol 10*M^-1/2";
        report("volumes.indefinite", dev <= 10.0 / std::sqrt(M), detail.str());
    }
    {
        bool ok = true;
        int checked = 0;
        for (long long dp = -200; dp <= 200; ++dp) {
            if (dp == 0) continue;
            long long dm = ((dp % 4) + 4) % 4;
            if (dm != 0 && dm != 1) continue;
            if (dp > 0 && is_square(dp)) continue;
            ok = ok && reassemble_class_coefficient(dp).ok;
            ++checked;
        }
        std::ostringstream detail;
        detail << checked << " discriminants |d'| <= 200, rel tol 1e-9";
        report("volumes.coefficient_reassembly", ok, detail.str());
    }
}

void verify_oracle(CheckReporter& report) {
    {
        bool ok = true;
        for (long long n = -12; n <= 12 && ok; ++n) {
            if (n == 0) continue;
            for (long long T : {10, 50, 200})
                if (collect_pairs(n, T) != enumerate_pairs_bruteforce(n, T)) ok = false;
        }
        report("oracle.enumerator_agreement", ok, "fast vs brute force, |n| <= 12, T <= 200");
    }
    {
        bool ok = true;
        for (long long n = -8; n <= 8 && ok; ++n) {
            if (n == 0) continue;
            ClassInventory inv = class_representatives(n);
            CountTable fast_counts = count_by_class(n, 50, inv);
            CountTable brute = count_via_bruteforce(n, 50, inv, {});
            if (fast_counts.per_class != brute.per_class) ok = false;
        }
        report("oracle.class_counts", ok, "per-class reduction vs reference, |n| <= 8, T = 50");
    }
}

}  // namespace

int run_verify(const std::vector<std::string>& suites, std::ostream& out) {
    CheckReporter report{out};
    for (const std::string& suite : suites) {
        if (suite == "identities")
            verify_identities(report);
        else if (suite == "volumes")
            verify_volumes(report);
        else if (suite == "oracle")
            verify_oracle(report);
        else
            throw std::invalid_argument("unknown verify suite '" + suite + "'");
    }
    return report.failures;
}

void load_config_file(const std::string& path, ExperimentConfig& config) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key == "n")
            config.n_values = parse_int_list(value);
        else if (key == "t")
            config.t_values = parse_int_list(value);
        else if (key == "format")
            config.output_format = value;
        else if (key == "out")
            config.output_path = value;
        else if (key == "workers")
            config.workers = static_cast<int>(std::stoll(value));
        else if (key == "b_zero")
            config.include_b_zero = parse_bool(value);
        else if (key == "oracle")
            config.use_bruteforce = parse_bool(value);
        else
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
}

}  // namespace dnpairs
