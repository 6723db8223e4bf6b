#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semistar/ideal.hpp"

namespace semistar {

/// Result of a semi-decidable test.
struct Verdict {
    enum class Status { Holds, Fails, Unknown };

    Status status = Status::Unknown;
    /// What the answer is relative to: a pool, a probe list, a bound.
    std::string scope;
    std::string detail;
    /// Named ideals that replay the witness or counterexample.
    std::vector<std::pair<std::string, FracIdeal>> data;

    static Verdict holds(std::string scope, std::string detail = {})
    {
        return {Status::Holds, std::move(scope), std::move(detail), {}};
    }
    static Verdict fails(std::string detail, std::vector<std::pair<std::string, FracIdeal>> data = {})
    {
        return {Status::Fails, {}, std::move(detail), std::move(data)};
    }
    static Verdict unknown(std::string scope, std::string detail = {})
    {
        return {Status::Unknown, std::move(scope), std::move(detail), {}};
    }

    bool is_holds() const { return status == Status::Holds; }
    bool is_fails() const { return status == Status::Fails; }
    bool is_unknown() const { return status == Status::Unknown; }
};

/// "Holds", "Fails" or "UnknownAtBound".
const char* status_name(Verdict::Status s);

}  // namespace semistar
