#pragma once

#include "elliptica/arithcond.hpp"
#include "elliptica/bounds.hpp"
#include "elliptica/exponents.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace elliptica {

inline constexpr int kCensusCap = 24;

struct CensusEntry {
    ExponentData data;
    InvariantReport invariants;
    SacReport sac;
    BoundsReport bounds;
    HilaliVerdict verdict;
};

/// Census order: formal dimension, then q, then b and a lexicographically.
bool census_less(const ExponentData& x, const ExponentData& y);

/// Every S.A.C. pair with 1 <= n_X <= max_formal_dim, in census order.
///
/// Candidates are restricted by consequences of S.A.C. (b_j >= 2, q >= r,
/// b_i >= 2 a_i in descending order, n_X >= sum b, n_X >= sum 2a,
/// n_X >= q + r) and then filtered with check_condition. Work is split by the
/// largest b-exponent; the output order does not depend on `threads`.
/// Throws CapExceeded above kCensusCap.
std::vector<ExponentData> enumerate_sac_data(int max_formal_dim, unsigned threads = 1);

CensusEntry make_entry(const ExponentData& d);

/// Streams full entries in census order.
void enumerate_sac(int max_formal_dim, unsigned threads, const std::function<void(const CensusEntry&)>& sink);
std::vector<CensusEntry> enumerate_sac(int max_formal_dim, unsigned threads = 1);

/// Problems found on one entry; empty when everything checks out.
std::vector<std::string> entry_violations(const CensusEntry& e);

struct CensusSummary {
    int max_formal_dim = 0;
    std::size_t total = 0;
    std::map<long, std::size_t> per_formal_dim;
    std::map<std::pair<int, int>, std::size_t> per_qr;
    std::size_t verified = 0;
    std::size_t bounds_consistent = 0;
    std::size_t pure_fail = 0;
    std::size_t not_applicable = 0;
    std::vector<std::string> violations;

    void add(const CensusEntry& e);
    /// A PureFail verdict or any violated bound is a mathematical alarm.
    bool alarm() const { return pure_fail > 0 || !violations.empty(); }
};

CensusSummary census_report(int max_formal_dim, unsigned threads = 1);

}  // namespace elliptica
