#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semistar/config.hpp"
#include "semistar/function_rings.hpp"

namespace semistar {

struct QuerySpec {
    std::string name;
    std::string kind;
    ConfigBlock block;  ///< all arguments, including expect/provenance/quote
    std::string expected;
    std::string provenance;
    std::string quote;
};

/// A validated scenario.  Blocks: scenario, domain, overring, pool, star,
/// certificate, query.
struct ScenarioSpec {
    std::string name;
    std::string title;
    std::uint64_t seed = 1;
    unsigned pool_bound = 2;
    ConfigDoc source;

    StarEnv env;  ///< base domain, named overrings, named pools
    std::vector<std::pair<std::string, StarOp>> stars;
    Certificates certs;
    std::vector<std::string> cert_notes;
    FunctionRing fring;
    std::vector<QuerySpec> queries;

    const BaseDomain& domain() const { return env.domain; }
    /// A named star block, else a star term.
    StarOp star(const std::string& name_or_term) const;
    /// A named pool, or `default` for the bounded monomial pool.
    ProbePool pool(const std::string& name) const;
    /// A named overring; `D` is the base.
    NamedOverring overring(const std::string& name) const;
};

/// Grammar and semantic errors both surface as ParseError.
ScenarioSpec parse_config(std::string_view text);
/// `require_queries` is off for ad hoc contexts built by the CLI.
ScenarioSpec build_scenario(ConfigDoc doc, bool require_queries = true);

struct QueryOutcome {
    std::string name;
    std::string kind;
    std::string expected;
    std::string actual;
    bool pass = false;
    bool error = false;
    std::string witness;
    std::string detail;
    std::string provenance;
    std::string quote;
};

struct Report {
    std::string scenario;
    std::string title;
    std::uint64_t seed = 0;
    std::vector<std::string> pools;  ///< "name: size"
    std::vector<std::string> assumptions;
    std::vector<QueryOutcome> outcomes;
    double wall_ms = 0;

    /// 0 all match, 1 mismatch, 2 engine error.
    int exit_code() const;
};

/// Runs every query; engine errors are recorded per query.
Report run_scenario(const ScenarioSpec& spec, std::optional<std::uint64_t> seed = {});

enum class ReportFormat { Text, Json };

/// Text carries the wall time; JSON is deterministic for a fixed seed.
std::string emit_report(const Report& r, ReportFormat format);

/// SEMISTAR_SCENARIO_DIR, else the bundled directory.
std::filesystem::path scenario_dir();
/// A path to an existing file, or NAME resolved as NAME.cfg in scenario_dir().
std::filesystem::path resolve_scenario(const std::string& name_or_path);
/// Names of the bundled scenarios, sorted.
std::vector<std::string> list_scenarios();
ScenarioSpec load_scenario(const std::string& name_or_path);

}  // namespace semistar
