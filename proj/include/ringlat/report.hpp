#ifndef RINGLAT_REPORT_HPP
#define RINGLAT_REPORT_HPP

#include "ringlat/catalog.hpp"
#include "ringlat/pointwise.hpp"

namespace ringlat {

struct ReportOptions {
    ClosureOptions closure;
    bool with_lattice = true;
    std::uint64_t node_cap = 100000;
};

/// The full invariant bundle for one extension, as emitted by the CLI.
struct ExtensionReport {
    std::string id;
    Json document;  // the JSON form, built field by field
};

/// Computes conductor, crucial ideal, canonical chain, minimal type, the
/// three pointwise verdicts (both methods), the case label when certified,
/// and lattice statistics (finite fields, within the node cap).
ExtensionReport build_report(const ExtensionInstance& inst, const ReportOptions& opts = {});

/// One named theorem-check on one instance.
enum class CheckStatus { Pass, Fail, NotApplicable, Unconfirmed };

inline const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::NotApplicable: return "not-applicable";
        default: return "unconfirmed";
    }
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::NotApplicable;
    std::string detail;
};

/// Runs every applicable invariant check on the instance: dual-oracle
/// agreement for all three properties, the minimality oracles, the
/// implication chain, the length/dimension formulas, the co-pointwise
/// equivalences, the crucial-ideal and hereditary laws, the Jacobson-radical
/// law, tower profiles along maximal chains, and the independent-atom count.
/// When the instance carries "expected" metadata it is matched as well.
std::vector<CheckResult> run_checks(const ExtensionInstance& inst,
                                    const ReportOptions& opts = {});

struct HarnessSummary {
    std::uint64_t seed = 0;
    size_t instances = 0;
    size_t pass = 0, fail = 0, not_applicable = 0, unconfirmed = 0;
    std::vector<Json> certificates;  // failing instances with their check results
};

/// Seeded random-instance harness; instances run independently (optionally in
/// parallel) and aggregate in instance order. A nonzero fail count is a bug.
HarnessSummary run_harness(std::uint64_t seed, size_t count, const RandomProfile& profile,
                           unsigned threads = 1, const ReportOptions& opts = {});

/// The same aggregation over the named catalog.
HarnessSummary run_catalog_harness(unsigned threads = 1, const ReportOptions& opts = {});

Json summary_to_json(const HarnessSummary& s);

} // namespace ringlat

#endif
