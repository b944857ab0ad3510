#ifndef SVLIGHT_EVALUATION_HPP
#define SVLIGHT_EVALUATION_HPP

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "svlight/cooc_matrix.hpp"
#include "svlight/sv_models.hpp"

namespace svlight {

// One gold test case: the first gold SV is the verb of the source text,
// later entries are accepted alternatives (e.g. cause for "do harm").
struct TestCase {
    std::string source_text;
    std::string full_verb;
    std::string nominal;
    std::vector<std::string> gold_svs;  // non-empty
};

enum class Outcome { kMatch, kAltMatch, kMismatch, kNoData };

const char* outcome_name(Outcome o);

struct EvalRow {
    std::string source_text;
    std::string full_verb;
    std::optional<std::string> c1;
    std::optional<std::string> c2;
    std::optional<double> ratio;
    Outcome outcome = Outcome::kNoData;
};

// Aggregates count matches and alt-matches as successes over the evaluable
// cases; no-data rows are excluded from the accuracy denominator.
struct EvalReport {
    SvModel model = SvModel::kGlobal;
    std::vector<EvalRow> rows;
    int successes = 0;
    int evaluable = 0;

    double accuracy() const { return evaluable == 0 ? 0.0 : double(successes) / evaluable; }
};

EvalReport evaluate(const CoocMatrix& m, const std::vector<TestCase>& cases, SvModel model);

// One-sided pooled two-proportion z-test p-value for H1: rate_a > rate_b.
double significance(int success_a, int n_a, int success_b, int n_b);

// One-sided Fisher exact p-value for the same hypothesis (small-sample
// alternative; reported next to the z-test, not in place of it).
double significance_fisher(int success_a, int n_a, int success_b, int n_b);

enum class ReportFormat { kTable, kTsv };

// Table rows are `source | verb | C1 | C2 | ratio` with N/A for absent
// cells and ratios at two decimals; TSV adds the outcome column.
std::string render_report(const EvalReport& r, ReportFormat format);

// TSV `source_text<TAB>full_verb<TAB>nominal<TAB>gold_sv[|alt_sv...]`.
std::vector<TestCase> load_test_cases(std::istream& in,
                                      const std::string& source_name = "<stream>");

}  // namespace svlight

#endif
