#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace play::metrics {

/// Per-problem stage counts. Gating requires c_play <= c_pass <= c_exec <= n.
struct SampleOutcomes {
    std::string problem_id;
    uint32_t n = 0;
    uint32_t c_exec = 0;
    uint32_t c_pass = 0;
    uint32_t c_play = 0;

    /// Throws DomainError when the gating monotonicity is violated.
    void check() const;
};

enum class Stage { Exec, Pass, Play };

const char* stage_name(Stage s);

struct LedgerCall {
    std::string call_id;
    uint64_t tokens_in = 0;
    uint64_t tokens_out = 0;
};

/// Token accounting over one evaluation scope. total() is always the sum of
/// the per-call entries; problems is the task count the averages divide by.
struct TokenLedger {
    std::vector<LedgerCall> per_call;
    uint64_t problems = 0;

    uint64_t total_tokens() const;
    void add(std::string call_id, uint64_t tokens_in, uint64_t tokens_out);
};

/// Probability that at least one of k draws (without replacement, out of n
/// samples of which c succeed) is a success: 1 - C(n-c,k)/C(n,k).
/// Computed in product form, so c == 0 gives exactly 0 and n-c < k gives
/// exactly 1, with no factorial overflow for large n.
double estimate_at_k(uint32_t n, uint32_t c, uint32_t k);

/// Mean of estimate_at_k over the records' counts for one stage. All
/// records must share the same n; the list must be non-empty; k <= n.
double aggregate_stage(const std::vector<SampleOutcomes>& records, Stage stage,
                       uint32_t k);

/// Effectiveness-to-cost ratio: play value (in percent) divided by average
/// tokens per problem in thousands.
double efficiency_at_k(double play_percent, const TokenLedger& ledger,
                       uint32_t k);

/// Two-sided t critical value at 97.5% (for the 95% interval). Bundled
/// table for df 1..100, normal quantile beyond.
double t_critical_975(uint32_t df);

struct Interval {
    double mean = 0.0;
    double half_width = 0.0;
};

/// mean +- t * s/sqrt(m) over repeated run means. Only level 0.95 is
/// supported; fewer than two values is a domain error.
Interval confidence_interval(const std::vector<double>& run_means,
                             double level = 0.95);

/// One metric's aggregate over repeated runs.
struct MetricSummary {
    std::vector<double> per_run;
    double mean = 0.0;
    double ci_half_width = 0.0;
};

/// Stage @k values and efficiency per requested k, aggregated over runs.
/// Values are fractions in [0,1] internally; rendering multiplies by 100.
struct MetricReport {
    std::vector<uint32_t> ks;
    // key: metric name such as "exec@1", "play@3", "efficiency@1"
    std::map<std::string, MetricSummary> metrics;
};

/// Fold per-run stage fractions and ledgers into a MetricReport. One entry
/// of runs_records / runs_ledgers per run.
MetricReport build_report(
    const std::vector<std::vector<SampleOutcomes>>& runs_records,
    const std::vector<TokenLedger>& runs_ledgers,
    const std::vector<uint32_t>& ks);

} // namespace play::metrics
