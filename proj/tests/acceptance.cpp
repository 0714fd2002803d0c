// End-to-end acceptance suite: one pass/fail line per criterion, exit 0 only
// when everything passes. Criteria cover the curated catalog, lattice
// numerics, a 500-instance dual-oracle sweep, the dimension/length and
// co-pointwise equivalence laws, structural laws with seeded ideal-builder
// constructions, tower profiles, independent-atom counts, and byte-level
// determinism across reruns and thread counts.
#include <atomic>
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "ringlat/report.hpp"
#include "ringlat/ringstruct.hpp"

using namespace ringlat;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Tally {
    size_t pass = 0, fail = 0;
};

void tally_checks(std::map<std::string, Tally>& tallies,
                  const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks) {
        if (c.status == CheckStatus::Pass) ++tallies[c.name].pass;
        if (c.status == CheckStatus::Fail) ++tallies[c.name].fail;
    }
}

std::vector<std::vector<CheckResult>> run_all(const std::vector<ExtensionInstance>& v,
                                              unsigned threads, const ReportOptions& opts) {
    std::vector<std::vector<CheckResult>> results(v.size());
    if (threads <= 1) {
        for (size_t i = 0; i < v.size(); ++i) results[i] = run_checks(v[i], opts);
        return results;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < v.size(); i = next.fetch_add(1))
            results[i] = run_checks(v[i], opts);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    return results;
}

std::string serialize_results(const std::vector<std::vector<CheckResult>>& results) {
    std::ostringstream os;
    for (const auto& checks : results)
        for (const CheckResult& c : checks)
            os << c.name << "=" << check_status_name(c.status) << ";" << c.detail << "\n";
    return os.str();
}

bool all_ok = true;

void report(int n, const char* name, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << n << " (" << name << "): " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    all_ok = all_ok && ok;
}

} // namespace

int main() {
    const unsigned threads =
        std::max(1u, std::min(8u, std::thread::hardware_concurrency()));

    // ---- criterion 1: catalog exactness -------------------------------
    // every curated instance must certify its expected verdicts, case
    // labels, clause numbers, witnesses and adjunction types, quickly
    std::map<std::string, Tally> tallies;
    {
        const std::vector<std::string> names = {
            "ex1:2",  "ex2:3",  "ex2:2",      "split:3,2",   "split:4,2",
            "split:3,3", "ff:2,2", "ex5",     "remark7151",  "ex3-two-var"};
        ReportOptions opts;
        opts.closure.sample_budget = 8;  // keeps the rational-function scans fast
        bool ok = true;
        std::ostringstream detail;
        double worst = 0;
        for (const std::string& name : names) {
            auto t0 = Clock::now();
            ExtensionInstance inst = catalog_example(name);
            std::vector<CheckResult> checks = run_checks(inst, opts);
            worst = std::max(worst, seconds_since(t0));
            size_t expected_passes = 0;
            for (const CheckResult& c : checks) {
                if (c.status == CheckStatus::Fail) {
                    ok = false;
                    detail << name << ":" << c.name << " ";
                }
                if (c.name.rfind("expected-", 0) == 0) {
                    if (c.status != CheckStatus::Pass) {
                        ok = false;
                        detail << name << ":" << c.name << "!=pass ";
                    } else {
                        ++expected_passes;
                    }
                }
            }
            if (expected_passes == 0) {
                ok = false;
                detail << name << ":no-expectations ";
            }
            tally_checks(tallies, checks);
        }
        if (worst > 5.0) {
            ok = false;
            detail << "slowest instance " << worst << "s ";
        }
        report(1, "catalog exactness", ok, detail.str());
    }

    // ---- criterion 2: lattice numerics --------------------------------
    {
        bool ok = true;
        std::ostringstream detail;
        ExtensionInstance d3 = catalog_example("split:3,2");
        IntervalLattice l3 = enumerate_interval(d3.r, Subalgebra::full(d3.s));
        if (l3.nodes.size() != 5 || l3.atoms().size() != 3 || l3.length() != 2 ||
            !is_geometric(l3).ok) {
            ok = false;
            detail << "cube lattice: nodes=" << l3.nodes.size()
                   << " atoms=" << l3.atoms().size() << " length=" << l3.length() << " ";
        }
        ExtensionInstance d4 = catalog_example("split:4,2");
        IntervalLattice l4 = enumerate_interval(d4.r, Subalgebra::full(d4.s));
        if (l4.nodes.size() != 15 || l4.length() != 3 || is_geometric(l4).ok) {
            ok = false;
            detail << "4th-power lattice: nodes=" << l4.nodes.size()
                   << " length=" << l4.length() << " ";
        }
        report(2, "lattice numerics", ok, detail.str());
    }

    // ---- criterion 3: 500-instance dual-oracle sweep -------------------
    std::vector<std::vector<CheckResult>> random_results;
    {
        auto t0 = Clock::now();
        RandomProfile profile;
        profile.primes = {2, 3};
        profile.max_dim = 6;
        std::vector<ExtensionInstance> instances;
        for (size_t i = 0; i < 500; ++i)
            instances.push_back(random_extension(42 + i, profile));
        random_results = run_all(instances, threads, ReportOptions{});
        for (const auto& checks : random_results) tally_checks(tallies, checks);
        double elapsed = seconds_since(t0);
        bool ok = elapsed < 300.0;
        std::ostringstream detail;
        for (const char* name : {"dual-oracle-extension", "dual-oracle-pair",
                                 "dual-oracle-co-pointwise", "minimal-classifier-vs-oracle"}) {
            const Tally& t = tallies[name];
            if (t.fail > 0 || t.pass == 0) {
                ok = false;
                detail << name << ": pass=" << t.pass << " fail=" << t.fail << " ";
            }
        }
        detail << "elapsed " << elapsed << "s";
        report(3, "dual-oracle sweep", ok, detail.str());
    }

    // ---- criteria 4, 5, 7, 8: law tallies over suites 1-3 ---------------
    auto law = [&](int n, const char* label, const char* check) {
        const Tally& t = tallies[check];
        std::ostringstream detail;
        detail << "pass=" << t.pass << " fail=" << t.fail;
        report(n, label, t.fail == 0 && t.pass > 0, detail.str());
    };
    law(4, "dimension/length formulas", "length-dimension-formula");
    law(5, "co-pointwise equivalences", "co-pointwise-equivalences");

    // ---- criterion 6: structural laws + seeded ideal builder ------------
    {
        bool ok = true;
        std::ostringstream detail;
        for (const char* name : {"crucial-ideal-law", "hereditary-law", "jacobson-square-law"}) {
            const Tally& t = tallies[name];
            if (t.fail > 0 || t.pass == 0) {
                ok = false;
                detail << name << ": pass=" << t.pass << " fail=" << t.fail << " ";
            }
        }
        // 50 seeded constructions: adjoin a square-zero ideal to the base
        // field and certify the result pointwise minimal
        size_t built = 0;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            std::mt19937_64 rng(1000 + seed);
            unsigned m = 2 + static_cast<unsigned>(rng() % 3);
            bool products_vanish = rng() % 2 == 0;
            unsigned p = products_vanish && rng() % 2 ? 3 : 2;
            AlgebraPtr s = truncated_poly_algebra(
                Field::gf(p), m,
                products_vanish ? NilRelations::SquaresAndProducts
                                : NilRelations::SquaresOnly);
            Subalgebra r = Subalgebra::unitLine(s);
            Mat rows;
            if (products_vanish) {
                // any nonempty span of the variables is an ideal here
                size_t mask = 1 + rng() % ((1u << m) - 1);
                for (unsigned i = 0; i < m; ++i)
                    if (mask & (1u << i))
                        rows.push_back(s->basisElement(1 + i).coords());
            } else {
                // the principal ideal of one variable has square zero
                unsigned i = 1 + static_cast<unsigned>(rng() % m);
                for (size_t b = 0; b < s->dim(); ++b)
                    rows.push_back(s->mulCoords(s->basisElement(i).coords(),
                                                unit_vec(s->field(), s->dim(), b)));
            }
            IdealOf j(Subalgebra::full(s), Subspace(s, rows));
            JacobsonResult res = jacobson_builder(r, s, j);
            if (res.pw.verdict == Verdict::True && res.ring.dim() > r.dim()) {
                ++built;
            } else {
                ok = false;
                detail << "builder seed " << seed << " not certified ";
            }
        }
        detail << "builders=" << built << "/50";
        report(6, "structural laws + ideal builder", ok, detail.str());
    }

    law(7, "tower profiles", "tower-profile-law");
    law(8, "independent atom counts", "independent-atom-count");

    // ---- criterion 9: determinism across reruns and thread counts -------
    {
        bool ok = true;
        std::ostringstream detail;
        for (const std::string& name : {"ex1:2", "split:3,2", "ff:2,4", "ex5"}) {
            ExtensionInstance inst = catalog_example(name);
            std::string a = build_report(inst, ReportOptions{}).document.dump();
            std::string b = build_report(catalog_example(name), ReportOptions{}).document.dump();
            if (a != b) {
                ok = false;
                detail << name << ": report differs across reruns ";
            }
        }
        RandomProfile profile;
        profile.primes = {2, 3};
        profile.max_dim = 6;
        std::vector<ExtensionInstance> sample;
        for (size_t i = 0; i < 30; ++i) sample.push_back(random_extension(42 + i, profile));
        std::string one = serialize_results(run_all(sample, 1, ReportOptions{}));
        std::string four = serialize_results(run_all(sample, 4, ReportOptions{}));
        if (one != four) {
            ok = false;
            detail << "check results differ between 1 and 4 threads ";
        }
        std::string h1 = summary_to_json(run_harness(7, 30, profile, 1)).dump();
        std::string h4 = summary_to_json(run_harness(7, 30, profile, 4)).dump();
        if (h1 != h4) {
            ok = false;
            detail << "harness summary differs between 1 and 4 threads ";
        }
        report(9, "determinism", ok, detail.str());
    }

    return all_ok ? 0 : 1;
}
