#pragma once
/* Command-script sessions: the line-oriented input language that drives the
 * library.
 *
 * Declarations introduce named objects; later lines reference earlier names
 * (names are unique per kind).  Result lines print as
 *     <command echo>: <value> [<status>]
 * and a run fails (exit 1) when a command errors, an assertion-style command
 * (is_differential, is_leaf, cf_laws, verify ...) comes back false, or a
 * closure hits its round limit.  Query commands carry a '?' suffix and never
 * fail on a false answer.
 *
 * load() throws ParseError on malformed input or an unknown name; run()
 * reports module errors with the offending command and keeps exact rational
 * output everywhere.  print() echoes the parsed session canonically; the
 * echo reparses to an identical session.
 */

#include <memory>
#include <optional>
#include <string>

namespace foliate {

struct RunOptions {
    bool json = false;                  // machine-readable mirror of the report
    std::optional<unsigned> deg;        // default degree bound for trajectory
    std::optional<unsigned> rounds;     // default round limit for trajectory
    std::optional<unsigned> jet_order;  // default jet order for verify commands
};

struct RunResult {
    std::string text;   // the report (JSON document when requested)
    int exit_code = 0;  // 0 ok, 1 command failure or error
};

class Session {
public:
    Session();
    ~Session();
    Session(Session&&) noexcept;
    Session& operator=(Session&&) noexcept;

    void load(const std::string& source);
    std::string print() const;
    RunResult run(const RunOptions& opts = {}) const;

private:
    struct Data;
    std::unique_ptr<Data> d_;
};

}  // namespace foliate
