#ifndef SRG_REGISTRY_HPP
#define SRG_REGISTRY_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "srg/codes.hpp"
#include "srg/graph.hpp"
#include "srg/params.hpp"

namespace srg {

/// A matcher's accepted arguments plus the display string the provenance
/// line is composed from.  The complement wrapper chains to the recipe it
/// complements via `inner`.
struct Recipe {
    std::string entry_id;
    std::vector<long long> args;
    std::string provenance;
    std::shared_ptr<Recipe> inner;
};

/// One registered construction: a cheap parameter predicate and a builder.
/// Whenever the matcher accepts, the builder's output must pass the oracle
/// with exactly the requested parameters; lookup() enforces this on every
/// build.
struct ConstructionEntry {
    std::string id;
    int tier = 0;  // 1 geometry, 2 combinatorial, 3 codes, 4 sporadic, 5 complement
    std::function<std::optional<Recipe>(const SrgParams&)> matcher;
    std::function<Graph(const Recipe&)> builder;
};

enum class LookupStatus { Exists, Infeasible, Unknown };

struct LookupResult {
    LookupStatus status = LookupStatus::Unknown;
    std::optional<Graph> graph;   // set for Exists
    std::string detail;           // provenance or infeasibility reason
    bool degenerate = false;      // mu = 0 or mu = k tuple
    double elapsed_seconds = 0.0;
};

enum class Existence { True, False, Unknown };

struct ScanRow {
    SrgParams p;
    Existence status = Existence::Unknown;
    std::string detail;
};

/// Resolution order: $SRG_DATA_DIR, then the source-tree data directory.
std::string default_data_dir();

class Registry {
public:
    /// Empty registry with the nonexistence table and two-weight code
    /// database loaded from `data_dir`.
    explicit Registry(const std::string& data_dir = default_data_dir());

    /// Everything implemented: geometry, combinatorial, code-based and
    /// sporadic constructions plus the complement wrapper.
    static Registry with_defaults(const std::string& data_dir = default_data_dir());

    /// Throws std::invalid_argument on duplicate ids.
    void register_entry(ConstructionEntry entry);

    const std::vector<ConstructionEntry>& entries() const { return entries_; }
    const NonexistenceTable& nonexistence() const { return table_; }
    const CodeDbReport& code_db() const { return code_db_; }

    /// Build pipeline: derive mu when omitted, screen feasibility, try the
    /// matchers in tier order, oracle-verify the first hit.
    LookupResult lookup(long long n, long long k, long long lambda,
                        std::optional<long long> mu = std::nullopt) const;

    /// Same pipeline but answers from the matchers without building.
    Existence existence(long long n, long long k, long long lambda,
                        std::optional<long long> mu = std::nullopt) const;

    /// First matching recipe, if any (no build).
    std::optional<Recipe> match(const SrgParams& p) const;

    /// Run a recipe's builder (resolving complement chains).
    Graph build(const Recipe& r) const;

    /// Classify every identity+integrality-passing tuple with 4 <= n <= max_n.
    std::vector<ScanRow> scan(long long max_n) const;

    /// CSV "n,k,lambda,mu,status,detail" with status in
    /// {exists, nonexistent, unknown}.
    std::string scan_csv(long long max_n) const;

private:
    std::vector<ConstructionEntry> entries_;
    NonexistenceTable table_;
    CodeDbReport code_db_;
};

}  // namespace srg

#endif
