// walkmax: ensemble experiments and tail approximations for maxima of
// independent random walks, with named verification scenarios.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "walkmax/io.hpp"
#include "walkmax/law_spec.hpp"
#include "walkmax/ldtheory.hpp"
#include "walkmax/norming.hpp"
#include "walkmax/scenarios.hpp"
#include "walkmax/simulate.hpp"
#include "walkmax/stats.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace walkmax;

struct OutputOptions {
    std::string path;
    std::string format = "csv";
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--out", out.path, "output file path (stdout summary is always printed)");
    cmd->add_option("--format", out.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

void write_file(const std::string& path, const std::string& payload) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    f << payload;
}

void emit(const OutputOptions& out, const std::string& csv, const json& j) {
    if (out.path.empty()) return;
    write_file(out.path, out.format == "json" ? j.dump(2) + "\n" : csv);
}

json ensemble_json(const simulate::EnsembleSummary& s, std::uint32_t k) {
    json reps = json::array();
    for (std::size_t i = 0; i < s.reps.size(); ++i) {
        const auto& r = s.reps[i];
        json row;
        row["rep"] = i;
        row["top"] = r.top;
        if (!r.empty) row["min"] = r.min_value;
        row["argmax"] = r.argmax;
        row["empty"] = r.empty;
        reps.push_back(std::move(row));
    }
    return json{{"k", k}, {"empty_count", s.empty_count}, {"reps", std::move(reps)}};
}

norming::TailClass parse_class(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::map<std::string, double> kv;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            const auto comma = rest.find(',', pos);
            const std::string tok = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
            const auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("bad class token '" + tok + "' (expected key=value)");
            kv[tok.substr(0, eq)] = std::stod(tok.substr(eq + 1));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    const auto get = [&](const char* key, double fallback) {
        return kv.count(key) ? kv.at(key) : fallback;
    };
    if (name == "rv") {
        if (!kv.count("alpha")) throw std::invalid_argument("class rv needs alpha");
        if (kv.count("eps")) return norming::TailClass::regularly_varying(kv.at("alpha"), kv.at("eps"));
        return norming::TailClass::regularly_varying(kv.at("alpha"));
    }
    if (name == "ln")
        return norming::TailClass::lognormal_type(get("gamma", 2.0), get("lambda", 1.0), get("beta", 0.0),
                                                  get("xi", 0.0), get("c", 1.0));
    if (name == "we")
        return norming::TailClass::weibull_type(get("tau", 0.5), get("lambda", 1.0), get("beta", 0.0),
                                                get("c", 1.0));
    if (name == "light") return norming::TailClass::light_tail();
    if (name == "moment") {
        if (!kv.count("s")) throw std::invalid_argument("class moment needs s");
        return norming::TailClass::moment(kv.at("s"));
    }
    throw std::invalid_argument("unknown class '" + name +
                                "' (expected rv:alpha=A[,eps=E] | ln:gamma=G[...] | we:tau=T[...] | "
                                "light | moment:s=S)");
}

norming::Regime parse_regime(const std::string& name) {
    if (name == "gumbel-normal") return norming::Regime::gumbel_normal;
    if (name == "gumbel-subexp") return norming::Regime::gumbel_subexp;
    if (name == "frechet") return norming::Regime::frechet;
    throw std::invalid_argument("unknown regime '" + name +
                                "' (expected gumbel-normal, gumbel-subexp or frechet)");
}

int run_constants(const std::string& regime_name, const std::string& law_spec,
                  const std::string& class_spec, double p, double n, double m,
                  const std::string& slack_name, const OutputOptions& out) {
    json j;
    std::string csv = "quantity,value\n";
    const auto add = [&](const std::string& key, double v) {
        j[key] = v;
        csv += key + "," + io::format_double(v) + "\n";
        std::printf("%-16s %s\n", key.c_str(), io::format_double(v, 6).c_str());
    };
    if (!class_spec.empty()) {
        const auto cls = parse_class(class_spec);
        const auto slack = norming::slack_by_name(slack_name);
        if (cls.kind() != norming::TailClassKind::light_tail &&
            cls.kind() != norming::TailClassKind::moment) {
            const auto sep = norming::separating_sequences(cls, n, slack);
            add("xi_n", sep.xi);
            add("psi_n", sep.psi);
        }
        add("max_p", norming::max_p_bound(cls, n, slack));
        const auto block = norming::min_block_bound(cls, n);
        add("min_block", block.value);
        add("min_block_ratio_diverges", block.must_diverge ? 1.0 : 0.0);
        if (cls.kind() == norming::TailClassKind::lognormal_type && cls.gamma() <= 2.0)
            add("rozovskii_threshold", norming::rozovskii_threshold(cls.gamma(), cls.lambda(), n));
        emit(out, csv, j);
        return 0;
    }
    const auto regime = parse_regime(regime_name);
    norming::NormingPair pair;
    switch (regime) {
        case norming::Regime::gumbel_normal:
            pair = norming::gumbel_constants_normal(p);
            break;
        case norming::Regime::gumbel_subexp: {
            const StepLaw law = parse_law(law_spec);
            if (law.kind() == LawKind::std_lognormal)
                pair = norming::gumbel_constants_lognormal(n);
            else if (law.kind() == LawKind::weibull_type)
                pair = norming::gumbel_constants_weibull_type(n, {1.0, 0.0, 1.0, law.tau()});
            else
                throw std::invalid_argument(
                    "gumbel-subexp constants support lognormal and weibull laws only");
            break;
        }
        case norming::Regime::frechet:
            pair = norming::frechet_scale(parse_law(law_spec), m);
            break;
    }
    add("d", pair.center);
    add("c", pair.scale);
    j["regime"] = regime_name;
    csv += "regime," + regime_name + "\n";
    emit(out, csv, j);
    return 0;
}

void print_reports(const std::vector<stats::GofReport>& reports) {
    for (const auto& r : reports)
        std::printf("%-34s observed=%-12s threshold=%-10s m=%-7zu %s  [%s]\n", r.statistic.c_str(),
                    io::format_double(r.observed, 5).c_str(), io::format_double(r.threshold, 5).c_str(),
                    r.sample_size, r.target.c_str(), r.pass ? "pass" : "FAIL");
}

json report_json(const stats::GofReport& r) {
    return json{{"statistic", r.statistic}, {"observed", r.observed},   {"threshold", r.threshold},
                {"sample_size", r.sample_size}, {"target", r.target},   {"pass", r.pass}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ensemble maxima of independent random walks: simulation and verification"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file merged under explicit-flag precedence");
    app.get_config_formatter_base()->valueSeparator('=');

    unsigned workers = 0;
    app.add_option("--workers", workers, "worker threads (0 = WALKMAX_WORKERS or hardware)")
        ->envname("WALKMAX_WORKERS");

    // ---- constants ----
    std::string c_regime, c_law, c_class, c_slack = "loglog";
    double c_p = 0, c_n = 0, c_m = 0;
    OutputOptions c_out;
    auto* constants = app.add_subcommand("constants", "norming constants and regime-boundary bounds");
    constants->add_option("--regime", c_regime, "gumbel-normal | gumbel-subexp | frechet");
    constants->add_option("--law", c_law, "step law spec (subexp/frechet regimes)");
    constants->add_option("--class", c_class, "tail class for table bounds, e.g. rv:alpha=4");
    constants->add_option("--p", c_p, "ensemble index (gumbel-normal)");
    constants->add_option("--n", c_n, "sequence index (subexp constants, table bounds)");
    constants->add_option("--m", c_m, "index for the frechet scale");
    constants->add_option("--slack", c_slack, "slack sequence: loglog | log | sqrtlog");
    add_output_options(constants, c_out);

    // ---- tail-approx ----
    std::string t_kind, t_law;
    double t_n = 0, t_x = 0, t_gamma = 2.0, t_lambda = 1.0, t_beta = 0.0, t_xi = 0.0, t_c = 1.0;
    OutputOptions t_out;
    auto* tail = app.add_subcommand("tail-approx", "theoretical tail approximations");
    tail->add_option("--kind", t_kind, "nagaev | subexp | rozovskii")->required();
    tail->add_option("--law", t_law, "step law spec (nagaev/subexp)");
    tail->add_option("--n", t_n, "number of steps")->required();
    tail->add_option("--x", t_x, "threshold")->required();
    tail->add_option("--gamma", t_gamma, "rozovskii gamma in (1,2]");
    tail->add_option("--lambda", t_lambda, "rozovskii lambda");
    tail->add_option("--beta", t_beta, "rozovskii beta");
    tail->add_option("--xi", t_xi, "rozovskii xi");
    tail->add_option("--c", t_c, "rozovskii c");
    add_output_options(tail, t_out);

    // ---- mc-tail ----
    std::string m_law;
    std::uint64_t m_n = 0, m_R = 0, m_seed = 0;
    double m_x = 0;
    bool m_centered = false;
    OutputOptions m_out;
    auto* mc = app.add_subcommand("mc-tail", "Monte Carlo tail probability of a random walk sum");
    mc->add_option("--law", m_law, "step law spec")->required();
    mc->add_option("--n", m_n, "number of steps")->required();
    mc->add_option("--x", m_x, "threshold")->required();
    mc->add_option("--R", m_R, "replications (>= 1000)")->required();
    mc->add_option("--seed", m_seed, "random seed")->required();
    mc->add_flag("--centered", m_centered, "subtract n*mean before comparing");
    add_output_options(mc, m_out);

    // ---- ensemble subcommands ----
    struct EnsembleArgs {
        std::string law, regime = "gumbel-normal", index = "poisson";
        std::uint64_t n = 0, p = 0, R = 0, seed = 0, r = 0;
        std::uint32_t k = 1;
        OutputOptions out;
    };
    EnsembleArgs max_a, blk_a, ri_a;
    auto add_ensemble_options = [](CLI::App* cmd, EnsembleArgs& a, bool with_p) {
        cmd->add_option("--law", a.law, "step law spec")->required();
        cmd->add_option("--regime", a.regime, "gumbel-normal | gumbel-subexp | frechet");
        cmd->add_option("--n", a.n, "walk length")->required();
        if (with_p) cmd->add_option("--p", a.p, "ensemble size")->required();
        cmd->add_option("--k", a.k, "top-k depth");
        cmd->add_option("--R", a.R, "replications")->required();
        cmd->add_option("--seed", a.seed, "random seed")->required();
    };
    auto* maxima = app.add_subcommand("maxima", "top-k of an ensemble of independent walks");
    add_ensemble_options(maxima, max_a, true);
    add_output_options(maxima, max_a.out);

    auto* blocks = app.add_subcommand("blocks", "top-k of disjoint block sums of one walk");
    add_ensemble_options(blocks, blk_a, false);
    blocks->add_option("--r", blk_a.r, "block length")->required();
    add_output_options(blocks, blk_a.out);

    auto* rindex = app.add_subcommand("random-index", "ensemble with a random number of walks");
    add_ensemble_options(rindex, ri_a, true);
    rindex->add_option("--index", ri_a.index, "poisson | deterministic");
    add_output_options(rindex, ri_a.out);

    // ---- random-sum ----
    std::string rs_law;
    double rs_lambda_t = 0, rs_x = 0;
    std::uint64_t rs_R = 0, rs_seed = 0;
    OutputOptions rs_out;
    auto* rsum = app.add_subcommand("random-sum", "tail of a Poisson random sum of positive steps");
    rsum->add_option("--law", rs_law, "positive power-tail law, e.g. pareto:alpha=1.5,xm=1")->required();
    rsum->add_option("--lambda-t", rs_lambda_t, "mean of the Poisson count")->required();
    rsum->add_option("--x", rs_x, "threshold above the mean m(t)")->required();
    rsum->add_option("--R", rs_R, "replications")->required();
    rsum->add_option("--seed", rs_seed, "random seed")->required();
    add_output_options(rsum, rs_out);

    // ---- mv-maxima ----
    std::vector<std::string> mv_laws;
    std::uint64_t mv_n = 0, mv_p = 0, mv_R = 0, mv_seed = 0;
    OutputOptions mv_out;
    auto* mv = app.add_subcommand("mv-maxima", "componentwise maxima of multivariate walks");
    mv->add_option("--component", mv_laws, "component law spec (repeat per dimension)")->required();
    mv->add_option("--n", mv_n, "walk length")->required();
    mv->add_option("--p", mv_p, "ensemble size")->required();
    mv->add_option("--R", mv_R, "replications")->required();
    mv->add_option("--seed", mv_seed, "random seed")->required();
    add_output_options(mv, mv_out);

    // ---- hill ----
    std::string h_law;
    std::uint64_t h_n = 0, h_p = 0, h_seed = 0;
    std::size_t h_k = 0;
    bool h_centered = false;
    OutputOptions h_out;
    auto* hill = app.add_subcommand("hill", "Hill estimator over simulated walk sums");
    hill->add_option("--law", h_law, "step law spec")->required();
    hill->add_option("--n", h_n, "walk length")->required();
    hill->add_option("--p", h_p, "number of walks")->required();
    hill->add_option("--k", h_k, "top order statistics used")->required();
    hill->add_option("--seed", h_seed, "random seed")->required();
    hill->add_flag("--centered", h_centered, "subtract n*mean from each sum");
    add_output_options(hill, h_out);

    // ---- verify ----
    std::string v_scenario;
    std::uint64_t v_seed = 0;
    OutputOptions v_out;
    v_out.format = "json";
    std::string v_artifact;
    auto* verify = app.add_subcommand("verify", "run a named acceptance scenario end to end");
    verify->add_option("scenario", v_scenario, "scenario id (A1..A13) or name, or 'all'")->required();
    verify->add_option("--seed", v_seed, "random seed")->required();
    verify->add_option("--out", v_out.path, "write the scenario report (json)");
    verify->add_option("--artifact", v_artifact, "write the scenario data artifact (csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const ParallelConfig par{workers};
    try {
        if (*constants) return run_constants(c_regime, c_law, c_class, c_p, c_n, c_m, c_slack, c_out);

        if (*tail) {
            ldtheory::TailApprox approx;
            if (t_kind == "nagaev")
                approx = ldtheory::nagaev_approx(parse_law(t_law), t_n, t_x);
            else if (t_kind == "subexp")
                approx = ldtheory::subexp_approx(parse_law(t_law), t_n, t_x);
            else if (t_kind == "rozovskii")
                approx = ldtheory::rozovskii_ln_approx({t_gamma, t_lambda, t_beta, t_xi, t_c}, t_n, t_x);
            else
                throw std::invalid_argument("unknown kind '" + t_kind +
                                            "' (expected nagaev, subexp or rozovskii)");
            static const char* kRegimeNames[] = {"normal", "nagaev-two-term", "subexponential",
                                                 "rozovskii-below", "rozovskii-above"};
            const char* regime = kRegimeNames[static_cast<int>(approx.regime)];
            std::printf("value            %s\nregime           %s\n", io::format_double(approx.value, 6).c_str(),
                        regime);
            if (approx.has_psi)
                std::printf("psi_n            %s (x %s psi_n)\n", io::format_double(approx.psi, 6).c_str(),
                            approx.above_psi ? "above" : "below");
            std::string csv = "value,regime,normal_term,heavy_term,psi,above_psi\n";
            csv += io::format_double(approx.value) + "," + regime + "," +
                   io::format_double(approx.normal_term) + "," + io::format_double(approx.heavy_term) +
                   "," + (approx.has_psi ? io::format_double(approx.psi) : "") + "," +
                   (approx.has_psi ? (approx.above_psi ? "1" : "0") : "") + "\n";
            json j{{"value", approx.value},
                   {"regime", regime},
                   {"n", approx.n},
                   {"x", approx.x},
                   {"law", approx.label},
                   {"normal_term", approx.normal_term},
                   {"heavy_term", approx.heavy_term}};
            if (approx.has_psi) {
                j["psi"] = approx.psi;
                j["above_psi"] = approx.above_psi;
            }
            emit(t_out, csv, j);
            return 0;
        }

        if (*mc) {
            const auto est = ldtheory::mc_tail(parse_law(m_law), m_n, m_x, m_R, m_seed, m_centered, par);
            std::printf("p_hat            %s\nhits             %llu\nci99             [%s, %s]\n",
                        io::format_double(est.p_hat, 6).c_str(),
                        static_cast<unsigned long long>(est.hits),
                        io::format_double(est.ci_low, 6).c_str(),
                        io::format_double(est.ci_high, 6).c_str());
            std::string csv = "law,n,x,R,seed,centered,hits,p_hat,ci_low,ci_high\n";
            csv += parse_law(m_law).label() + "," + std::to_string(m_n) + "," + io::format_double(m_x) +
                   "," + std::to_string(m_R) + "," + std::to_string(m_seed) + "," +
                   (m_centered ? "1" : "0") + "," + std::to_string(est.hits) + "," +
                   io::format_double(est.p_hat) + "," + io::format_double(est.ci_low) + "," +
                   io::format_double(est.ci_high) + "\n";
            json j{{"law", parse_law(m_law).label()}, {"n", m_n},       {"x", m_x},
                   {"R", m_R},                        {"seed", m_seed}, {"centered", m_centered},
                   {"hits", est.hits},                {"p_hat", est.p_hat},
                   {"ci_low", est.ci_low},            {"ci_high", est.ci_high}};
            emit(m_out, csv, j);
            return 0;
        }

        const auto run_ensemble = [&](const EnsembleArgs& a, int mode) {
            simulate::ExperimentPlan plan;
            plan.law = parse_law(a.law);
            plan.n = a.n;
            plan.p = a.p;
            plan.k = a.k;
            plan.R = a.R;
            plan.seed = a.seed;
            const auto regime = parse_regime(a.regime);
            simulate::EnsembleSummary summary;
            bool with_total = false;
            if (mode == 1) {
                const std::uint64_t blocks_n = a.n / a.r;
                plan.block_len = a.r;
                plan.norming = simulate::default_norming(plan.law, regime, a.r, blocks_n);
                const auto bound = norming::min_block_bound(
                    plan.law.has_power_tail()
                        ? norming::TailClass::regularly_varying(plan.law.alpha())
                        : norming::TailClass::light_tail(),
                    static_cast<double>(a.n));
                if (static_cast<double>(a.r) < bound.value)
                    std::fprintf(stderr,
                                 "warning: block length %llu is below the admissible bound %s\n",
                                 static_cast<unsigned long long>(a.r),
                                 io::format_double(bound.value, 4).c_str());
                summary = simulate::block_maxima(plan, par);
                with_total = true;
            } else {
                plan.norming = simulate::default_norming(plan.law, regime, a.n, a.p);
                if (mode == 0) {
                    summary = simulate::ensemble_topk(plan, par);
                } else {
                    const auto law = a.index == "deterministic" ? simulate::IndexLaw::deterministic
                                                                : simulate::IndexLaw::poisson;
                    summary = simulate::random_index_maxima(plan, law, par);
                }
            }
            std::printf("replications     %zu\nempty            %llu\n", summary.reps.size(),
                        static_cast<unsigned long long>(summary.empty_count));
            emit(a.out, io::ensemble_csv(summary, plan.k, with_total), ensemble_json(summary, plan.k));
            return 0;
        };
        if (*maxima) return run_ensemble(max_a, 0);
        if (*blocks) return run_ensemble(blk_a, 1);
        if (*rindex) return run_ensemble(ri_a, 2);

        if (*rsum) {
            const auto est = simulate::random_sum_tail(rs_lambda_t, parse_law(rs_law), rs_x, rs_R,
                                                       rs_seed, par);
            std::printf("p_hat            %s\nhits             %llu\n",
                        io::format_double(est.p_hat, 6).c_str(),
                        static_cast<unsigned long long>(est.hits));
            std::string csv = "lambda_t,x,R,seed,hits,p_hat,ci_low,ci_high\n";
            csv += io::format_double(rs_lambda_t) + "," + io::format_double(rs_x) + "," +
                   std::to_string(rs_R) + "," + std::to_string(rs_seed) + "," + std::to_string(est.hits) +
                   "," + io::format_double(est.p_hat) + "," + io::format_double(est.ci_low) + "," +
                   io::format_double(est.ci_high) + "\n";
            json j{{"lambda_t", rs_lambda_t}, {"x", rs_x},          {"R", rs_R},
                   {"seed", rs_seed},         {"hits", est.hits},   {"p_hat", est.p_hat},
                   {"ci_low", est.ci_low},    {"ci_high", est.ci_high}};
            emit(rs_out, csv, j);
            return 0;
        }

        if (*mv) {
            std::vector<StepLaw> laws;
            for (const auto& spec : mv_laws) laws.push_back(parse_law(spec));
            const auto summary = simulate::mv_component_maxima(laws, mv_n, mv_p, mv_R, mv_seed, par);
            std::printf("replications     %zu\ncomponents       %zu\n", summary.rows.size(),
                        summary.scales.size());
            json j{{"scales", summary.scales}, {"centers", summary.centers}};
            json rows = json::array();
            for (const auto& row : summary.rows) rows.push_back(row);
            j["rows"] = std::move(rows);
            emit(mv_out, io::mv_csv(summary), j);
            return 0;
        }

        if (*hill) {
            const StepLaw law = parse_law(h_law);
            const double shift = h_centered ? static_cast<double>(h_n) * law.moments().mean : 0.0;
            RandomState rng = RandomState::substream(h_seed, 0);
            std::vector<double> sums;
            sums.reserve(h_p);
            for (std::uint64_t i = 0; i < h_p; ++i) {
                double s = 0.0;
                for (std::uint64_t t = 0; t < h_n; ++t) s += law.sample(rng);
                sums.push_back(s - shift);
            }
            std::vector<double> positive;
            for (const double v : sums)
                if (v > 0.0) positive.push_back(v);
            const double est = stats::hill(positive, h_k);
            const double est_alt = stats::hill(positive, h_k, stats::HillThreshold::order_k);
            std::printf("hill             %s\nhill_order_k     %s\npositive         %zu\n",
                        io::format_double(est, 6).c_str(), io::format_double(est_alt, 6).c_str(),
                        positive.size());
            std::string csv = "estimate,estimate_order_k,k,positive,p,n,centered\n";
            csv += io::format_double(est) + "," + io::format_double(est_alt) + "," + std::to_string(h_k) +
                   "," + std::to_string(positive.size()) + "," + std::to_string(h_p) + "," +
                   std::to_string(h_n) + "," + (h_centered ? "1" : "0") + "\n";
            json j{{"estimate", est},   {"estimate_order_k", est_alt}, {"k", h_k},
                   {"positive", positive.size()}, {"p", h_p},          {"n", h_n},
                   {"centered", h_centered}};
            emit(h_out, csv, j);
            return 0;
        }

        if (*verify) {
            std::vector<scenarios::ScenarioResult> results;
            if (v_scenario == "all")
                results = scenarios::run_all(v_seed, par);
            else
                results.push_back(scenarios::run(v_scenario, v_seed, par));
            bool all_pass = true;
            json jall = json::array();
            for (const auto& res : results) {
                std::printf("[%s] %s %s (%.1fs)\n", res.pass ? "PASS" : "FAIL", res.id.c_str(),
                            res.name.c_str(), res.seconds);
                print_reports(res.checks);
                all_pass = all_pass && res.pass;
                json jr{{"id", res.id}, {"name", res.name}, {"pass", res.pass}, {"seconds", res.seconds}};
                json checks = json::array();
                for (const auto& c : res.checks) checks.push_back(report_json(c));
                jr["checks"] = std::move(checks);
                jall.push_back(std::move(jr));
            }
            if (!v_out.path.empty()) write_file(v_out.path, jall.dump(2) + "\n");
            if (!v_artifact.empty()) {
                std::string payload;
                for (const auto& res : results) payload += res.artifact;
                write_file(v_artifact, payload);
            }
            return all_pass ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
