#include "elliptica/census.hpp"

#include "elliptica/errors.hpp"
#include "elliptica/parallel.hpp"

#include <algorithm>
#include <numeric>

namespace elliptica {

bool census_less(const ExponentData& x, const ExponentData& y) {
    const long nx = x.formal_dim(), ny = y.formal_dim();
    if (nx != ny) return nx < ny;
    if (x.q() != y.q()) return x.q() < y.q();
    if (x.b() != y.b()) return x.b() < y.b();
    return x.a() < y.a();
}

namespace {

struct Enumerator {
    int cap;
    std::vector<ExponentData>& out;
    std::vector<int> b_desc;
    std::vector<int> a_desc;
    int sum_b = 0;

    // a_desc is built under a_i <= b_i / 2; `excess` tracks sum(2a - 1), which
    // only grows, against the bound sum(2a - 1) <= sum b - q from n_X >= sum b.
    void grow_a(long excess) {
        const int q = static_cast<int>(b_desc.size());
        const int r = static_cast<int>(a_desc.size());
        consider(excess);
        if (r == q) return;
        const int hi = std::min(r == 0 ? b_desc[0] / 2 : a_desc.back(), b_desc[r] / 2);
        for (int a = 1; a <= hi; ++a) {
            const long next = excess + 2L * a - 1;
            if (next > sum_b - q) break;
            a_desc.push_back(a);
            grow_a(next);
            a_desc.pop_back();
        }
    }

    void consider(long excess) {
        const long q = static_cast<long>(b_desc.size());
        const long r = static_cast<long>(a_desc.size());
        const long n = 2L * sum_b - q - excess;
        if (n < 1 || n > cap) return;
        long sum_2a = 0;
        for (int a : a_desc) sum_2a += 2L * a;
        if (n < sum_b || n < sum_2a || n < q + r) return;
        ExponentData d(b_desc, a_desc);
        if (check_condition(d, ConditionMode::SAC).holds) out.push_back(std::move(d));
    }

    void grow_b() {
        grow_a(0);
        const int hi = std::min(b_desc.back(), cap - sum_b);
        for (int b = 2; b <= hi; ++b) {
            b_desc.push_back(b);
            sum_b += b;
            grow_b();
            sum_b -= b;
            b_desc.pop_back();
        }
    }
};

}  // namespace

std::vector<ExponentData> enumerate_sac_data(int max_formal_dim, unsigned threads) {
    if (max_formal_dim > kCensusCap)
        throw CapExceeded("census cap is n_X <= " + std::to_string(kCensusCap));
    if (max_formal_dim < 2) return {};

    // One bucket per largest b-exponent.
    const int buckets = max_formal_dim - 1;
    std::vector<std::vector<ExponentData>> parts(static_cast<std::size_t>(buckets));
    parallel_for(parts.size(), threads, [&](std::size_t i) {
        const int top = static_cast<int>(i) + 2;
        Enumerator en{max_formal_dim, parts[i], {top}, {}, top};
        en.grow_b();
    });

    std::vector<ExponentData> all;
    for (auto& p : parts) all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::sort(all.begin(), all.end(), census_less);
    return all;
}

CensusEntry make_entry(const ExponentData& d) {
    return CensusEntry{d, invariants(d), check_condition(d, ConditionMode::SAC), bounds_report(d), hilali_verdict(d)};
}

void enumerate_sac(int max_formal_dim, unsigned threads, const std::function<void(const CensusEntry&)>& sink) {
    const auto data = enumerate_sac_data(max_formal_dim, threads);
    constexpr std::size_t kChunk = 256;
    for (std::size_t start = 0; start < data.size(); start += kChunk) {
        const std::size_t len = std::min(kChunk, data.size() - start);
        std::vector<std::optional<CensusEntry>> chunk(len);
        parallel_for(len, threads, [&](std::size_t i) { chunk[i] = make_entry(data[start + i]); });
        for (auto& e : chunk) sink(*e);
    }
}

std::vector<CensusEntry> enumerate_sac(int max_formal_dim, unsigned threads) {
    std::vector<CensusEntry> out;
    enumerate_sac(max_formal_dim, threads, [&out](const CensusEntry& e) { out.push_back(e); });
    return out;
}

std::vector<std::string> entry_violations(const CensusEntry& e) {
    std::vector<std::string> v;
    const std::string tag = render(e.data) + ": ";
    if (!e.sac.holds) v.push_back(tag + "fails S.A.C.");
    if (e.verdict.kind == VerdictKind::PureFail)
        v.push_back(tag + "PureFail dim_pi=" + std::to_string(e.verdict.dim_pi) + " > dim_H=" + e.verdict.dim_H->get_str());
    if (e.verdict.kind == VerdictKind::NotApplicable) v.push_back(tag + "verdict not applicable");
    if (e.verdict.kind == VerdictKind::BoundsConsistent && !e.verdict.dim_pi_within_upper_bound)
        v.push_back(tag + "dim_pi exceeds the smallest upper bound on dim_H");
    if (e.invariants.chi_pi > 0) v.push_back(tag + "chi_pi > 0");
    if (e.data.is_pure() && sgn(e.invariants.chi) <= 0) v.push_back(tag + "chi is not a positive integer");
    if (!double_exponent_check(e.data)) v.push_back(tag + "b_i >= 2 a_i fails");
    for (const auto& c : inequality_suite(e.data))
        if (!c.holds) v.push_back(tag + "inequality " + c.name + " fails (" + c.lhs + " vs " + c.rhs + ")");
    for (const auto& c : e.bounds.ordering_checks)
        if (!c.holds) v.push_back(tag + "bound check " + c.name + " fails (" + c.lhs + " vs " + c.rhs + ")");
    return v;
}

void CensusSummary::add(const CensusEntry& e) {
    ++total;
    ++per_formal_dim[e.invariants.formal_dim];
    ++per_qr[{e.invariants.q, e.invariants.r}];
    switch (e.verdict.kind) {
        case VerdictKind::Verified: ++verified; break;
        case VerdictKind::PureFail: ++pure_fail; break;
        case VerdictKind::BoundsConsistent: ++bounds_consistent; break;
        case VerdictKind::NotApplicable: ++not_applicable; break;
    }
    auto v = entry_violations(e);
    violations.insert(violations.end(), v.begin(), v.end());
}

CensusSummary census_report(int max_formal_dim, unsigned threads) {
    CensusSummary s;
    s.max_formal_dim = max_formal_dim;
    enumerate_sac(max_formal_dim, threads, [&s](const CensusEntry& e) { s.add(e); });
    return s;
}

}  // namespace elliptica
