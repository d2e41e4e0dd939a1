#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singlet/labels.hpp"
#include "singlet/ops.hpp"
#include "singlet/sqrt_rational.hpp"

namespace singlet::validate {

// One printed formula whose value differs from the exact (oracle) one, with
// enough context to reproduce the comparison.
struct DiscrepancyRecord {
    std::string formula;   // coefficient family / quantity id
    std::string group;     // "su2" | "su3"
    std::string op;        // operator text when applicable
    std::optional<Su3Label> label_su3;
    std::optional<Su2Label> label_su2;
    SqrtRational paper;    // value of the printed expression (0 when undefined)
    SqrtRational oracle;   // exact value shipped by the engine
    std::string paper_ref;
    std::string note;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first failure, or a summary count
    // True for checks of published claims rather than of the engine; a failed
    // claim check is reported and ledgered but does not make the engine wrong
    // (the engine and the oracle agree on the exact value).
    bool claim = false;
};

struct Report {
    std::vector<CheckResult> checks;
    std::vector<DiscrepancyRecord> ledger;

    // Engine-vs-oracle health; published-claim checks do not count here.
    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed && !c.claim) return false;
        return true;
    }

    bool claims_ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

int thread_budget();  // SINGLET_THREADS env var caps the fan-out

// Engine-vs-oracle suites.  Every closed-form coefficient is replayed against
// the Fock construction; `ledger` collects the published-formula mismatches.
Report verify_su2(int n_max);
Report verify_su3(int w_max);

// Shipped-engine-vs-oracle mismatches only (empty on a correct build).
std::vector<DiscrepancyRecord> against_oracle_su3(int w_max);

}  // namespace singlet::validate
