// svlight: support-verb identification from POS-tagged corpora.
// Subcommands cover the full pipeline: count governance events, rank
// candidate support verbs, evaluate against a gold test set, run indirect
// standardization on population tables, and maintain the nominalization
// lexicon.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "svlight/errors.hpp"
#include "svlight/evaluation.hpp"
#include "svlight/extractor.hpp"
#include "svlight/hash.hpp"
#include "svlight/lexicon.hpp"
#include "svlight/sv_models.hpp"
#include "svlight/standardization.hpp"
#include "svlight/tagged_corpus.hpp"

namespace {

using namespace svlight;

std::string basename_of(const std::string& path) {
    auto slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file", path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open file for writing", path);
    return out;
}

std::set<std::string> load_wordlist(const std::string& path) {
    auto in = open_input(path);
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        words.insert(to_lower_ascii(line));
    }
    return words;
}

SvModel parse_model(const std::string& name) {
    if (name == "basic") return SvModel::kBasic;
    if (name == "global") return SvModel::kGlobal;
    throw CLI::ValidationError("--model", "must be 'basic' or 'global'");
}

std::string format_double(const char* fmt, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, value);
    return buf;
}

struct CountOptions {
    std::vector<std::string> corpora;
    std::string out_path;
    std::string nouns_path;
    std::string lemma_rules_path;
    std::size_t np_span = 6;
    bool include_passive = false;
};

int run_count(const CountOptions& opt) {
    ExtractionConfig config;
    config.max_np_span = opt.np_span;
    config.exclude_passive = !opt.include_passive;
    if (!opt.nouns_path.empty()) {
        std::set<std::string> filter;
        auto in = open_input(opt.nouns_path);
        for (const auto& entry : load_lexicon(in, opt.nouns_path)) filter.insert(entry.noun);
        config.noun_filter = std::move(filter);
    }
    LemmaRules custom_rules = LemmaRules::defaults();
    if (!opt.lemma_rules_path.empty()) {
        auto in = open_input(opt.lemma_rules_path);
        custom_rules = LemmaRules::load(in, opt.lemma_rules_path);
    }

    CoocMatrix matrix;
    std::vector<std::string> comments;
    for (const auto& path : opt.corpora) {
        auto in = open_input(path);
        TaggedCorpusReader reader(in, basename_of(path));
        CoocMatrix counts = count_corpus(reader, config, custom_rules);
        std::cerr << "read " << reader.sentences_read() << " sentences from " << path << "\n";
        comments.push_back("corpus: " + basename_of(path) +
                           " sentences=" + std::to_string(reader.sentences_read()));
        matrix = CoocMatrix::merge(matrix, std::move(counts));
    }
    std::string config_line = "np_span=" + std::to_string(config.max_np_span);
    config_line += config.exclude_passive ? " passive=exclude" : " passive=include";
    config_line += config.noun_filter ? " nouns=" + std::to_string(config.noun_filter->size())
                                      : " nouns=all";
    comments.push_back("config: " + config_line);
    comments.push_back("config-hash: " + to_hex16(fnv1a64(config.describe())));

    if (opt.out_path.empty()) {
        matrix.save(std::cout, comments);
    } else {
        auto out = open_output(opt.out_path);
        matrix.save(out, comments);
    }
    return 0;
}

struct RankOptions {
    std::string counts_path;
    std::string noun;
    std::string model = "global";
    int iterate = 0;
};

int run_rank(const RankOptions& opt) {
    auto in = open_input(opt.counts_path);
    CoocMatrix matrix = CoocMatrix::load(in, opt.counts_path);
    SvModel model = parse_model(opt.model);
    std::string noun = to_lower_ascii(opt.noun);

    Ranking ranking;
    if (opt.iterate > 0) {
        if (model != SvModel::kGlobal)
            throw CLI::ValidationError("--iterate", "only applies to the global model");
        ranking = rank_with_weights(matrix, noun, iterate_global(matrix, opt.iterate));
    } else {
        ranking = model == SvModel::kBasic ? sv_basic(matrix, noun) : sv_global(matrix, noun);
    }

    std::cout << "noun: " << noun << "\n";
    std::cout << "model: " << opt.model;
    if (opt.iterate > 0) std::cout << " (iterated " << opt.iterate << ")";
    std::cout << "\n";
    if (ranking.no_data()) {
        std::cout << "N/A (no data)\n";
        return 0;
    }
    double score_sum = 0;
    for (const auto& c : ranking.candidates) score_sum += c.score;
    std::cout << "verb\traw\tscore\tnormalized\n";
    for (const auto& c : ranking.candidates) {
        std::cout << c.verb << '\t' << c.raw_count << '\t' << format_double("%.6g", c.score)
                  << '\t' << format_double("%.6f", score_sum == 0 ? 0.0 : c.score / score_sum)
                  << '\n';
    }
    return 0;
}

struct EvalOptions {
    std::string counts_path;
    std::string tests_path;
    std::string model = "global";
    std::string compare;
    std::string format = "table";
    bool fisher = false;
};

void print_report(const EvalReport& report, const std::string& model_name, ReportFormat format) {
    std::cout << "model: " << model_name << "\n";
    std::cout << render_report(report, format);
    int no_data = int(report.rows.size()) - report.evaluable;
    std::cout << "successes: " << report.successes << " of " << report.evaluable
              << " evaluable (accuracy " << format_double("%.3f", report.accuracy()) << ", "
              << no_data << " no-data)\n";
}

int run_eval(const EvalOptions& opt) {
    auto counts_in = open_input(opt.counts_path);
    CoocMatrix matrix = CoocMatrix::load(counts_in, opt.counts_path);
    auto tests_in = open_input(opt.tests_path);
    auto cases = load_test_cases(tests_in, opt.tests_path);
    ReportFormat format = opt.format == "tsv" ? ReportFormat::kTsv : ReportFormat::kTable;

    EvalReport main_report = evaluate(matrix, cases, parse_model(opt.model));
    print_report(main_report, opt.model, format);
    if (!opt.compare.empty()) {
        EvalReport other = evaluate(matrix, cases, parse_model(opt.compare));
        std::cout << "\n";
        print_report(other, opt.compare, format);
        if (main_report.evaluable == 0 || other.evaluable == 0) {
            std::cout << "\ncomparison skipped: no evaluable cases\n";
            return 0;
        }
        std::cout << "\ncomparison (" << opt.model << " vs " << opt.compare << "): "
                  << "z-test one-sided p = "
                  << format_double("%.6f", significance(main_report.successes,
                                                        main_report.evaluable, other.successes,
                                                        other.evaluable))
                  << "\n";
        if (opt.fisher) {
            std::cout << "comparison (" << opt.model << " vs " << opt.compare << "): "
                      << "fisher one-sided p = "
                      << format_double("%.6f",
                                       significance_fisher(main_report.successes,
                                                           main_report.evaluable, other.successes,
                                                           other.evaluable))
                      << "\n";
        }
    }
    return 0;
}

int run_standardize(const std::string& target_path, const std::string& standard_path) {
    auto target_in = open_input(target_path);
    PopulationTable target = PopulationTable::load(target_in, target_path);
    auto standard_in = open_input(standard_path);
    PopulationTable standard = PopulationTable::load(standard_in, standard_path);

    std::cout << "cdr_target: " << format_double("%.9g", crude_rate(target)) << "\n";
    std::cout << "cdr_standard: " << format_double("%.9g", crude_rate(standard)) << "\n";
    std::cout << "expected_events: "
              << format_double("%.9g", expected_events(category_rates(standard), target)) << "\n";
    std::cout << "smr: " << format_double("%.9g", smr(target, standard)) << "\n";
    std::cout << "isdr: " << format_double("%.9g", isdr(target, standard)) << "\n";
    return 0;
}

void write_lexicon(const std::vector<LexiconEntry>& entries, const std::string& out_path) {
    if (out_path.empty()) {
        save_lexicon(entries, std::cout);
    } else {
        auto out = open_output(out_path);
        save_lexicon(entries, out);
    }
}

std::vector<LexiconEntry> load_lexicon_file(const std::string& path) {
    if (path.empty()) return {};
    auto in = open_input(path);
    return load_lexicon(in, path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"support-verb identification from POS-tagged corpora"};
    app.require_subcommand(1);

    CountOptions count_opt;
    auto* count = app.add_subcommand("count", "extract governance counts from tagged corpora");
    count->add_option("--corpus", count_opt.corpora, "tagged corpus file (repeatable)")
        ->required()
        ->check(CLI::ExistingFile);
    count->add_option("--out", count_opt.out_path, "counts TSV output (default stdout)");
    count->add_option("--nouns", count_opt.nouns_path, "lexicon TSV restricting target nouns")
        ->check(CLI::ExistingFile);
    count->add_option("--np-span", count_opt.np_span, "max noun-phrase window (default 6)")
        ->check(CLI::PositiveNumber);
    count->add_flag("--include-passive", count_opt.include_passive,
                    "count passive VBN constructions too");
    count->add_option("--lemma-rules", count_opt.lemma_rules_path,
                      "override the built-in lemmatization table")
        ->check(CLI::ExistingFile);

    RankOptions rank_opt;
    auto* rank = app.add_subcommand("rank", "rank candidate support verbs for a noun");
    rank->add_option("--counts", rank_opt.counts_path, "counts TSV")->required()
        ->check(CLI::ExistingFile);
    rank->add_option("--noun", rank_opt.noun, "target nominalization")->required();
    rank->add_option("--model", rank_opt.model, "basic | global (default global)");
    rank->add_option("--iterate", rank_opt.iterate,
                     "rounds of weight regeneration (global model)")
        ->check(CLI::PositiveNumber);

    EvalOptions eval_opt;
    auto* eval = app.add_subcommand("eval", "run a gold test set against the counts");
    eval->add_option("--counts", eval_opt.counts_path, "counts TSV")->required()
        ->check(CLI::ExistingFile);
    eval->add_option("--tests", eval_opt.tests_path, "test-set TSV")->required()
        ->check(CLI::ExistingFile);
    eval->add_option("--model", eval_opt.model, "basic | global (default global)");
    eval->add_option("--compare", eval_opt.compare, "second model to compare against");
    eval->add_option("--format", eval_opt.format, "table | tsv (default table)")
        ->check(CLI::IsMember({"table", "tsv"}));
    eval->add_flag("--fisher", eval_opt.fisher, "also report the Fisher exact p-value");

    std::string std_target, std_standard;
    auto* standardize = app.add_subcommand("standardize", "crude rates, SMR and ISDR");
    standardize->add_option("--target", std_target, "target population TSV")->required()
        ->check(CLI::ExistingFile);
    standardize->add_option("--standard", std_standard, "standard population TSV")->required()
        ->check(CLI::ExistingFile);

    auto* lexicon = app.add_subcommand("lexicon", "build and maintain the nominalization list");
    lexicon->require_subcommand(1);

    std::string gen_nouns, gen_verbs, gen_rules, gen_out;
    auto* generate = lexicon->add_subcommand("generate", "propose stem verbs orthographically");
    generate->add_option("--nouns", gen_nouns, "noun wordlist (one lemma per line)")->required()
        ->check(CLI::ExistingFile);
    generate->add_option("--verbs", gen_verbs, "verb wordlist (one lemma per line)")->required()
        ->check(CLI::ExistingFile);
    generate->add_option("--rules", gen_rules, "suffix rule TSV (default built-in rules)")
        ->check(CLI::ExistingFile);
    generate->add_option("--out", gen_out, "lexicon TSV output (default stdout)");

    std::string fil_candidates, fil_decisions, fil_out, fil_pending;
    auto* filter = lexicon->add_subcommand("filter", "apply accept/reject decisions");
    filter->add_option("--candidates", fil_candidates, "candidate lexicon TSV")->required()
        ->check(CLI::ExistingFile);
    filter->add_option("--decisions", fil_decisions, "decision TSV (noun<TAB>accept|reject)")
        ->required()
        ->check(CLI::ExistingFile);
    filter->add_option("--out", fil_out, "accepted entries output (default stdout)");
    filter->add_option("--pending", fil_pending, "write undecided candidates here");

    std::string mrg_builtin, mrg_generated, mrg_manual, mrg_out;
    auto* merge = lexicon->add_subcommand("merge", "combine lexicon sources by precedence");
    merge->add_option("--builtin", mrg_builtin, "builtin lexicon TSV")->check(CLI::ExistingFile);
    merge->add_option("--generated", mrg_generated, "generated lexicon TSV")
        ->check(CLI::ExistingFile);
    merge->add_option("--manual", mrg_manual, "manually filtered lexicon TSV")
        ->check(CLI::ExistingFile);
    merge->add_option("--out", mrg_out, "merged lexicon output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (count->parsed()) return run_count(count_opt);
        if (rank->parsed()) return run_rank(rank_opt);
        if (eval->parsed()) return run_eval(eval_opt);
        if (standardize->parsed()) return run_standardize(std_target, std_standard);
        if (lexicon->parsed()) {
            if (generate->parsed()) {
                auto rules = gen_rules.empty() ? default_lexicon_rules() : [&] {
                    auto in = open_input(gen_rules);
                    return load_lexicon_rules(in, gen_rules);
                }();
                auto candidates =
                    generate_candidates(load_wordlist(gen_nouns), load_wordlist(gen_verbs), rules);
                write_lexicon(candidates, gen_out);
                return 0;
            }
            if (filter->parsed()) {
                auto candidates = load_lexicon_file(fil_candidates);
                auto decisions_in = open_input(fil_decisions);
                auto decisions = load_decisions(decisions_in, fil_decisions);
                FilterResult result = apply_manual_filter(candidates, decisions);
                for (const auto& warning : result.warnings)
                    std::cerr << "warning: " << warning << "\n";
                write_lexicon(result.accepted, fil_out);
                if (!fil_pending.empty()) {
                    auto out = open_output(fil_pending);
                    save_lexicon(result.pending, out);
                } else if (!result.pending.empty()) {
                    std::cerr << result.pending.size() << " candidates still pending\n";
                }
                return 0;
            }
            if (merge->parsed()) {
                auto merged =
                    merge_lexicons(load_lexicon_file(mrg_builtin),
                                   load_lexicon_file(mrg_generated), load_lexicon_file(mrg_manual));
                write_lexicon(merged, mrg_out);
                return 0;
            }
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
