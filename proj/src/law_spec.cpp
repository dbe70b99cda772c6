#include "walkmax/law_spec.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace walkmax {

namespace {

[[noreturn]] void bad_spec(const std::string& spec, const std::string& why) {
    throw std::invalid_argument(
        "bad law spec '" + spec + "': " + why +
        "\nvalid forms: normal | pareto-sym:alpha=A[,p=P][,std] | pareto:alpha=A,xm=M | lognormal | "
        "weibull:tau=T | lognormal-type:gamma=G,lambda=L | exp-centered");
}

}  // namespace

StepLaw parse_law(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::map<std::string, double> kv;
    std::set<std::string> flags;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            const auto comma = rest.find(',', pos);
            const std::string tok = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
            if (tok.empty()) bad_spec(spec, "empty parameter token");
            const auto eq = tok.find('=');
            if (eq == std::string::npos) {
                flags.insert(tok);
            } else {
                try {
                    kv[tok.substr(0, eq)] = std::stod(tok.substr(eq + 1));
                } catch (const std::exception&) {
                    bad_spec(spec, "cannot parse number in '" + tok + "'");
                }
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    const auto need = [&](const char* key) {
        const auto it = kv.find(key);
        if (it == kv.end()) bad_spec(spec, std::string("missing required parameter '") + key + "'");
        return it->second;
    };
    try {
        if (name == "normal") return StepLaw::std_normal();
        if (name == "pareto-sym") {
            const double p_plus = kv.count("p") ? kv.at("p") : 0.5;
            return StepLaw::symmetric_pareto(need("alpha"), p_plus, flags.count("std") > 0);
        }
        if (name == "pareto") return StepLaw::pareto_positive(need("alpha"), need("xm"));
        if (name == "lognormal") return StepLaw::std_lognormal();
        if (name == "weibull") return StepLaw::weibull_type(need("tau"));
        if (name == "lognormal-type") return StepLaw::lognormal_type(need("gamma"), need("lambda"));
        if (name == "exp-centered") return StepLaw::centered_exponential();
    } catch (const std::invalid_argument& e) {
        bad_spec(spec, e.what());
    }
    bad_spec(spec, "unknown law name '" + name + "'");
}

}  // namespace walkmax
