#pragma once
/* Exception types shared across the library. */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace foliate {

/* Raised on contract violations: ring mismatches, bad constructions,
   unsatisfied preconditions.  Carries a plain message. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Raised by the text parsers.  Position is 1-based. */
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t col, std::string found,
               std::vector<std::string> expected);

    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }
    const std::string& found() const { return found_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string compose(std::size_t line, std::size_t col,
                               const std::string& found,
                               const std::vector<std::string>& expected);

    std::size_t line_;
    std::size_t col_;
    std::string found_;
    std::vector<std::string> expected_;
};

}  // namespace foliate
