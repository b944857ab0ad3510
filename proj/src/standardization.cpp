#include "svlight/standardization.hpp"

#include <set>

#include "svlight/errors.hpp"

namespace svlight {

PopulationTable::PopulationTable(std::vector<PopulationCategory> categories)
    : categories_(std::move(categories)) {
    std::set<std::string> seen;
    for (const auto& cat : categories_) {
        if (cat.label.empty()) throw ContractError("population category label is empty");
        if (!(cat.exposure > 0))
            throw ContractError("exposure must be positive in category '" + cat.label + "'");
        if (cat.events < 0)
            throw ContractError("events must be non-negative in category '" + cat.label + "'");
        if (!seen.insert(cat.label).second)
            throw ContractError("duplicate category label '" + cat.label + "'");
    }
}

double PopulationTable::total_exposure() const {
    double sum = 0;
    for (const auto& cat : categories_) sum += cat.exposure;
    return sum;
}

double PopulationTable::total_events() const {
    double sum = 0;
    for (const auto& cat : categories_) sum += cat.events;
    return sum;
}

PopulationTable PopulationTable::load(std::istream& in, const std::string& source_name) {
    std::vector<PopulationCategory> categories;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        auto tab1 = line.find('\t');
        auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
        if (tab2 == std::string::npos || line.find('\t', tab2 + 1) != std::string::npos)
            throw DataError("expected `label<TAB>exposure<TAB>events`", source_name, line_no);
        PopulationCategory cat;
        cat.label = line.substr(0, tab1);
        try {
            std::size_t used = 0;
            std::string exposure = line.substr(tab1 + 1, tab2 - tab1 - 1);
            cat.exposure = std::stod(exposure, &used);
            if (used != exposure.size()) throw std::invalid_argument(exposure);
            std::string events = line.substr(tab2 + 1);
            cat.events = std::stod(events, &used);
            if (used != events.size()) throw std::invalid_argument(events);
        } catch (const std::exception&) {
            throw DataError("bad numeric field", source_name, line_no);
        }
        categories.push_back(std::move(cat));
    }
    try {
        return PopulationTable(std::move(categories));
    } catch (const ContractError& e) {
        throw DataError(e.what(), source_name);
    }
}

void PopulationTable::save(std::ostream& out) const {
    for (const auto& cat : categories_) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s\t%.17g\t%.17g", cat.label.c_str(), cat.exposure,
                      cat.events);
        out << buf << '\n';
    }
}

PopulationTable PopulationTable::union_standard(const PopulationTable& a,
                                                const PopulationTable& b) {
    std::vector<PopulationCategory> merged = a.categories();
    for (const auto& cat : b.categories()) {
        bool found = false;
        for (auto& existing : merged) {
            if (existing.label == cat.label) {
                existing.exposure += cat.exposure;
                existing.events += cat.events;
                found = true;
                break;
            }
        }
        if (!found) merged.push_back(cat);
    }
    return PopulationTable(std::move(merged));
}

double crude_rate(const PopulationTable& p) {
    double exposure = p.total_exposure();
    if (!(exposure > 0)) throw ContractError("crude_rate: total exposure is zero");
    return p.total_events() / exposure;
}

std::map<std::string, double> category_rates(const PopulationTable& p) {
    std::map<std::string, double> rates;
    for (const auto& cat : p.categories()) rates[cat.label] = cat.events / cat.exposure;
    return rates;
}

double expected_events(const std::map<std::string, double>& standard_rates,
                       const PopulationTable& target) {
    double expected = 0;
    for (const auto& cat : target.categories()) {
        auto it = standard_rates.find(cat.label);
        if (it == standard_rates.end())
            throw DataError("no standard rate for category '" + cat.label + "'");
        expected += it->second * cat.exposure;
    }
    return expected;
}

double smr(const PopulationTable& target, const PopulationTable& standard) {
    // expected events with the division last, so self-standardization is an
    // exact 1 ((d*n)/n == d in floating point)
    std::map<std::string, const PopulationCategory*> std_by_label;
    for (const auto& cat : standard.categories()) std_by_label[cat.label] = &cat;
    double expected = 0;
    for (const auto& cat : target.categories()) {
        auto it = std_by_label.find(cat.label);
        if (it == std_by_label.end())
            throw DataError("no standard category for '" + cat.label + "'");
        expected += it->second->events * cat.exposure / it->second->exposure;
    }
    if (expected == 0) throw DataError("smr: expected events is zero");
    return target.total_events() / expected;
}

double isdr(const PopulationTable& target, const PopulationTable& standard) {
    return smr(target, standard) * crude_rate(standard);
}

}  // namespace svlight
