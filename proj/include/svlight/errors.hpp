#ifndef SVLIGHT_ERRORS_HPP
#define SVLIGHT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svlight {

// Malformed input data (corpus lines, counts files, lexicon files).
// Carries the source name and 1-based line number when known.
class DataError : public std::runtime_error {
  public:
    DataError(std::string message, std::string source = "", std::size_t line = 0)
        : std::runtime_error(format(message, source, line)),
          source_(std::move(source)),
          line_(line) {}

    const std::string& source() const { return source_; }
    std::size_t line() const { return line_; }

  private:
    static std::string format(const std::string& message, const std::string& source,
                              std::size_t line) {
        if (source.empty()) return message;
        std::string out = source;
        if (line > 0) out += ":" + std::to_string(line);
        out += ": " + message;
        return out;
    }

    std::string source_;
    std::size_t line_;
};

// Violation of an operation precondition (caller bug, not bad data).
class ContractError : public std::logic_error {
  public:
    explicit ContractError(const std::string& message) : std::logic_error(message) {}
};

}  // namespace svlight

#endif
