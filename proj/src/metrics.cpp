#include "play/metrics.hpp"

#include <cmath>

#include "play/error.hpp"

namespace play::metrics {

void SampleOutcomes::check() const {
    if (!(c_play <= c_pass && c_pass <= c_exec && c_exec <= n))
        throw DomainError("SampleOutcomes: gating monotonicity violated for " +
                          problem_id);
}

const char* stage_name(Stage s) {
    switch (s) {
        case Stage::Exec: return "exec";
        case Stage::Pass: return "pass";
        case Stage::Play: return "play";
    }
    return "?";
}

uint64_t TokenLedger::total_tokens() const {
    uint64_t t = 0;
    for (const auto& c : per_call) t += c.tokens_in + c.tokens_out;
    return t;
}

void TokenLedger::add(std::string call_id, uint64_t tokens_in,
                      uint64_t tokens_out) {
    per_call.push_back({std::move(call_id), tokens_in, tokens_out});
}

double estimate_at_k(uint32_t n, uint32_t c, uint32_t k) {
    if (k == 0) throw DomainError("estimate_at_k: k = 0");
    if (k > n) throw DomainError("estimate_at_k: k > n");
    if (c > n) throw DomainError("estimate_at_k: c > n");
    if (c == 0) return 0.0;
    if (n - c < k) return 1.0;
    // C(n-c,k)/C(n,k) = prod_{i=0..k-1} (n-c-i)/(n-i)
    double ratio = 1.0;
    for (uint32_t i = 0; i < k; ++i)
        ratio *= double(n - c - i) / double(n - i);
    return 1.0 - ratio;
}

double aggregate_stage(const std::vector<SampleOutcomes>& records, Stage stage,
                       uint32_t k) {
    if (records.empty()) throw DomainError("aggregate_stage: no records");
    uint32_t n = records.front().n;
    double sum = 0.0;
    for (const auto& r : records) {
        if (r.n != n) throw DomainError("aggregate_stage: mixed n");
        r.check();
        uint32_t c = stage == Stage::Exec   ? r.c_exec
                     : stage == Stage::Pass ? r.c_pass
                                            : r.c_play;
        sum += estimate_at_k(n, c, k);
    }
    return sum / double(records.size());
}

double efficiency_at_k(double play_percent, const TokenLedger& ledger,
                       uint32_t k) {
    (void)k;  // the token total already covers all generated samples
    if (ledger.problems == 0)
        throw DomainError("efficiency_at_k: ledger has no problems");
    uint64_t total = ledger.total_tokens();
    if (total == 0)
        throw DomainError("efficiency_at_k: zero token total");
    double avg_thousands =
        double(total) / (double(ledger.problems) * 1000.0);
    return play_percent / avg_thousands;
}

namespace {

// t.ppf(0.975, df) for df = 1..100
constexpr double kT975[100] = {
    12.706204736432, 4.302652729696, 3.182446305284, 2.776445105198, 2.570581835636,
    2.446911851145, 2.364624251593, 2.306004135204, 2.262157162854, 2.228138851965,
    2.200985160083, 2.178812829663, 2.160368656461, 2.144786687917, 2.131449545559,
    2.119905299221, 2.109815577833, 2.100922040241, 2.093024054408, 2.085963447266,
    2.079613844728, 2.073873067904, 2.068657610419, 2.063898561628, 2.059538552753,
    2.055529438643, 2.051830516480, 2.048407141795, 2.045229642133, 2.042272456301,
    2.039513446396, 2.036933343460, 2.034515297449, 2.032244509318, 2.030107928250,
    2.028094000980, 2.026192463029, 2.024394163912, 2.022690920037, 2.021075390306,
    2.019540970441, 2.018081702818, 2.016692199228, 2.015367574444, 2.014103388881,
    2.012895598919, 2.011740513730, 2.010634757624, 2.009575237129, 2.008559112101,
    2.007583770316, 2.006646805062, 2.005745995318, 2.004879288188, 2.004044783289,
    2.003240718848, 2.002465459291, 2.001717484145, 2.000995378088, 2.000297822014,
    1.999623584995, 1.998971517033, 1.998340542521, 1.997729654318, 1.997137908392,
    1.996564418952, 1.996008354025, 1.995468931430, 1.994945415107, 1.994437111771,
    1.993943367846, 1.993463566662, 1.992997125890, 1.992543495181, 1.992102154002,
    1.991672609645, 1.991254395388, 1.990847068812, 1.990450210230, 1.990063421254,
    1.989686323457, 1.989318557137, 1.988959780175, 1.988609666976, 1.988267907477,
    1.987934206239, 1.987608281589, 1.987289864831, 1.986978699506, 1.986674540704,
    1.986377154419, 1.986086316951, 1.985801814346, 1.985523441867, 1.985251003509,
    1.984984311531, 1.984723186027, 1.984467454427, 1.984216951509, 1.983971518450};

constexpr double kNormal975 = 1.959963984540;

} // namespace

double t_critical_975(uint32_t df) {
    if (df == 0) throw DomainError("t_critical_975: df = 0");
    if (df <= 100) return kT975[df - 1];
    return kNormal975;
}

Interval confidence_interval(const std::vector<double>& run_means,
                             double level) {
    if (level != 0.95)
        throw DomainError("confidence_interval: only level 0.95 supported");
    size_t m = run_means.size();
    if (m < 2) throw DomainError("confidence_interval: need >= 2 run means");
    double sum = 0.0;
    for (double v : run_means) sum += v;
    double mean = sum / double(m);
    double ss = 0.0;
    for (double v : run_means) ss += (v - mean) * (v - mean);
    double s = std::sqrt(ss / double(m - 1));
    double t = t_critical_975(uint32_t(m - 1));
    return {mean, t * s / std::sqrt(double(m))};
}

MetricReport build_report(
    const std::vector<std::vector<SampleOutcomes>>& runs_records,
    const std::vector<TokenLedger>& runs_ledgers,
    const std::vector<uint32_t>& ks) {
    if (runs_records.empty())
        throw DomainError("build_report: no runs");
    if (runs_records.size() != runs_ledgers.size())
        throw DomainError("build_report: records/ledgers run count mismatch");

    MetricReport report;
    report.ks = ks;

    auto summarize = [&](const std::string& name, std::vector<double> per_run) {
        MetricSummary ms;
        ms.per_run = std::move(per_run);
        if (ms.per_run.size() >= 2) {
            Interval iv = confidence_interval(ms.per_run);
            ms.mean = iv.mean;
            ms.ci_half_width = iv.half_width;
        } else {
            ms.mean = ms.per_run.front();
            ms.ci_half_width = 0.0;
        }
        report.metrics[name] = std::move(ms);
    };

    for (Stage stage : {Stage::Exec, Stage::Pass, Stage::Play}) {
        for (uint32_t k : ks) {
            std::vector<double> per_run;
            per_run.reserve(runs_records.size());
            for (const auto& records : runs_records)
                per_run.push_back(aggregate_stage(records, stage, k));
            summarize(std::string(stage_name(stage)) + "@" + std::to_string(k),
                      per_run);
        }
    }
    for (uint32_t k : ks) {
        std::vector<double> per_run;
        for (size_t r = 0; r < runs_records.size(); ++r) {
            double play =
                aggregate_stage(runs_records[r], Stage::Play, k) * 100.0;
            per_run.push_back(efficiency_at_k(play, runs_ledgers[r], k));
        }
        summarize("efficiency@" + std::to_string(k), per_run);
    }
    return report;
}

} // namespace play::metrics
