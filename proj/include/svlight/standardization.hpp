#ifndef SVLIGHT_STANDARDIZATION_HPP
#define SVLIGHT_STANDARDIZATION_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace svlight {

// Per-category exposure and event counts (e.g. age bracket, population
// size, deaths).  Events may exceed exposure (multi-period tallies);
// exposures must be positive and labels unique.
struct PopulationCategory {
    std::string label;
    double exposure = 0;  // n_x > 0
    double events = 0;    // d_x >= 0

    bool operator==(const PopulationCategory&) const = default;
};

class PopulationTable {
  public:
    PopulationTable() = default;
    explicit PopulationTable(std::vector<PopulationCategory> categories);

    const std::vector<PopulationCategory>& categories() const { return categories_; }
    double total_exposure() const;
    double total_events() const;

    // TSV `label<TAB>exposure<TAB>events`, `#` comments allowed.
    static PopulationTable load(std::istream& in, const std::string& source_name = "<stream>");
    void save(std::ostream& out) const;

    // Category-wise sum of two tables (the union standard population).
    static PopulationTable union_standard(const PopulationTable& a, const PopulationTable& b);

  private:
    std::vector<PopulationCategory> categories_;
};

// Total events over total exposure.
double crude_rate(const PopulationTable& p);

// Per-category event rates d_x / n_x.
std::map<std::string, double> category_rates(const PopulationTable& p);

// Events expected in `target` if it experienced `standard_rates`:
// sum over categories of rate * exposure.  Every target category label must
// appear in standard_rates.
double expected_events(const std::map<std::string, double>& standard_rates,
                       const PopulationTable& target);

// Standardized event ratio: actual target events over events expected under
// the standard population's category rates.
double smr(const PopulationTable& target, const PopulationTable& standard);

// Indirect standardized rate: smr * crude_rate(standard).
double isdr(const PopulationTable& target, const PopulationTable& standard);

}  // namespace svlight

#endif
