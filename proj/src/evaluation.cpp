#include "svlight/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "svlight/errors.hpp"

namespace svlight {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::kMatch: return "match";
        case Outcome::kAltMatch: return "alt-match";
        case Outcome::kMismatch: return "mismatch";
        case Outcome::kNoData: return "no-data";
    }
    return "?";
}

EvalReport evaluate(const CoocMatrix& m, const std::vector<TestCase>& cases, SvModel model) {
    EvalReport report;
    report.model = model;
    for (const auto& test : cases) {
        if (test.gold_svs.empty()) throw ContractError("test case without gold SVs");
        Ranking ranking = model == SvModel::kBasic ? sv_basic(m, test.nominal)
                                                   : sv_global(m, test.nominal);
        EvalRow row;
        row.source_text = test.source_text;
        row.full_verb = test.full_verb;
        if (ranking.no_data()) {
            row.outcome = Outcome::kNoData;
        } else {
            row.c1 = ranking.candidates[0].verb;
            if (ranking.candidates.size() > 1) row.c2 = ranking.candidates[1].verb;
            row.ratio = choice_ratio(ranking);
            if (*row.c1 == test.gold_svs.front()) {
                row.outcome = Outcome::kMatch;
            } else if (std::find(test.gold_svs.begin() + 1, test.gold_svs.end(), *row.c1) !=
                       test.gold_svs.end()) {
                row.outcome = Outcome::kAltMatch;
            } else {
                row.outcome = Outcome::kMismatch;
            }
            ++report.evaluable;
            if (row.outcome != Outcome::kMismatch) ++report.successes;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

double normal_upper_tail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

double log_choose(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

void check_counts(int success_a, int n_a, int success_b, int n_b) {
    if (n_a < 1 || n_b < 1) throw ContractError("significance: group size must be >= 1");
    if (success_a < 0 || success_a > n_a || success_b < 0 || success_b > n_b)
        throw ContractError("significance: successes out of range");
}

}  // namespace

double significance(int success_a, int n_a, int success_b, int n_b) {
    check_counts(success_a, n_a, success_b, n_b);
    double pa = double(success_a) / n_a;
    double pb = double(success_b) / n_b;
    double pooled = double(success_a + success_b) / (n_a + n_b);
    double variance = pooled * (1.0 - pooled) * (1.0 / n_a + 1.0 / n_b);
    double z = variance == 0.0 ? 0.0 : (pa - pb) / std::sqrt(variance);
    return normal_upper_tail(z);
}

double significance_fisher(int success_a, int n_a, int success_b, int n_b) {
    check_counts(success_a, n_a, success_b, n_b);
    int total_successes = success_a + success_b;
    int total = n_a + n_b;
    double log_denom = log_choose(total, total_successes);
    int lo = std::max(success_a, total_successes - n_b);
    int hi = std::min(n_a, total_successes);
    double p = 0.0;
    for (int k = lo; k <= hi; ++k)
        p += std::exp(log_choose(n_a, k) + log_choose(n_b, total_successes - k) - log_denom);
    return std::min(p, 1.0);
}

namespace {

std::string cell(const std::optional<std::string>& value) { return value ? *value : "N/A"; }

std::string ratio_cell(const std::optional<double>& ratio) {
    if (!ratio) return "N/A";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", *ratio);
    return buf;
}

}  // namespace

std::string render_report(const EvalReport& r, ReportFormat format) {
    std::string out;
    if (format == ReportFormat::kTable) {
        out += "source text | verb | C1 | C2 | ratio\n";
        for (const auto& row : r.rows) {
            out += row.source_text + " | " + row.full_verb + " | " + cell(row.c1) + " | " +
                   cell(row.c2) + " | " + ratio_cell(row.ratio) + "\n";
        }
    } else {
        out += "source_text\tfull_verb\tc1\tc2\tratio\toutcome\n";
        for (const auto& row : r.rows) {
            out += row.source_text + "\t" + row.full_verb + "\t" + cell(row.c1) + "\t" +
                   cell(row.c2) + "\t" + ratio_cell(row.ratio) + "\t" + outcome_name(row.outcome) +
                   "\n";
        }
    }
    return out;
}

std::vector<TestCase> load_test_cases(std::istream& in, const std::string& source_name) {
    std::vector<TestCase> cases;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            auto tab = line.find('\t', start);
            if (tab == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        if (fields.size() != 4 || fields[2].empty() || fields[3].empty())
            throw DataError("expected `source<TAB>verb<TAB>nominal<TAB>gold[|alt...]`",
                            source_name, line_no);
        TestCase test;
        test.source_text = fields[0];
        test.full_verb = fields[1];
        test.nominal = fields[2];
        start = 0;
        while (true) {
            auto bar = fields[3].find('|', start);
            if (bar == std::string::npos) {
                test.gold_svs.push_back(fields[3].substr(start));
                break;
            }
            test.gold_svs.push_back(fields[3].substr(start, bar - start));
            start = bar + 1;
        }
        for (const auto& gold : test.gold_svs)
            if (gold.empty()) throw DataError("empty gold SV", source_name, line_no);
        cases.push_back(std::move(test));
    }
    return cases;
}

}  // namespace svlight
