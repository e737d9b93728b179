#include "sv/json_io.hpp"

namespace sv {

Json to_json(const GaussRat& q) { return to_string(q); }
Json to_json(const Rat& q) { return to_string(q); }

Json involution_to_json(const InvolutionParams& p) {
    Json j;
    if (p.is_plus()) {
        const auto& pp = p.plus_params();
        j["type"] = "plus";
        j["rho"] = to_string(pp.rho);
        j["beta"] = to_string(pp.beta);
        j["nu"] = to_string(pp.nu);
    } else {
        const auto& mp = p.minus_params();
        j["type"] = "minus";
        j["tau"] = to_string(mp.tau);
        j["r1"] = to_string(mp.r1);
        j["r2"] = to_string(mp.r2);
        j["sigma"] = to_string(mp.sigma);
    }
    return j;
}

InvolutionParams involution_from_json(const Json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "plus")
        return InvolutionParams::plus(parse_gauss(j.at("rho").get<std::string>()),
                                      parse_gauss(j.at("beta").get<std::string>()),
                                      parse_gauss(j.at("nu").get<std::string>()));
    if (type == "minus")
        return InvolutionParams::minus(parse_gauss(j.at("tau").get<std::string>()),
                                       parse_rat(j.at("r1").get<std::string>()),
                                       parse_rat(j.at("r2").get<std::string>()),
                                       parse_gauss(j.at("sigma").get<std::string>()));
    throw invalid_parameters("unknown involution type '" + type + "'");
}

InvolutionParams parse_involution_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw invalid_parameters("involution spec must look like 'plus:rho=...,beta=...,nu=...'");
    std::string family = spec.substr(0, colon);
    std::map<std::string, std::string> kv;
    std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw invalid_parameters("bad involution spec item '" + item + "'");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    auto want = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end())
            throw invalid_parameters("involution spec missing '" + key + "'");
        return it->second;
    };
    if (family == "plus")
        return InvolutionParams::plus(parse_gauss(want("rho")), parse_gauss(want("beta")),
                                      parse_gauss(want("nu")));
    if (family == "minus")
        return InvolutionParams::minus(parse_gauss(want("tau")), parse_rat(want("r1")),
                                       parse_rat(want("r2")), parse_gauss(want("sigma")));
    throw invalid_parameters("unknown involution family '" + family + "'");
}

namespace {

std::string kind_name(SeriesKind k) {
    switch (k) {
        case SeriesKind::Aab: return "Aab";
        case SeriesKind::Aalpha: return "Aalpha";
        case SeriesKind::Bbeta: return "Bbeta";
    }
    return "?";
}

} // namespace

Json series_to_json(const SeriesSpec& s) {
    Json inner;
    inner["kind"] = kind_name(s.kind);
    inner["a"] = to_string(s.a);
    inner["b"] = to_string(s.b);
    inner["aux"] = to_string(s.aux);
    Json j;
    j["series"] = inner;
    return j;
}

SeriesSpec series_from_json(const Json& j) {
    const Json& inner = j.contains("series") ? j.at("series") : j;
    std::string kind = inner.at("kind").get<std::string>();
    SeriesSpec s;
    if (kind == "Aab")
        s.kind = SeriesKind::Aab;
    else if (kind == "Aalpha")
        s.kind = SeriesKind::Aalpha;
    else if (kind == "Bbeta")
        s.kind = SeriesKind::Bbeta;
    else
        throw invalid_parameters("unknown series kind '" + kind + "'");
    if (inner.contains("a")) s.a = parse_gauss(inner.at("a").get<std::string>());
    if (inner.contains("b")) s.b = parse_gauss(inner.at("b").get<std::string>());
    if (inner.contains("aux")) s.aux = parse_gauss(inner.at("aux").get<std::string>());
    return s;
}

Json verma_spec_to_json(const Weight& wt, long long depth) {
    Json inner;
    inner["h"] = to_string(wt.h);
    inner["m"] = to_string(wt.m);
    inner["z"] = to_string(wt.z);
    inner["depth"] = depth;
    Json j;
    j["verma"] = inner;
    return j;
}

std::pair<Weight, long long> verma_spec_from_json(const Json& j) {
    const Json& inner = j.contains("verma") ? j.at("verma") : j;
    Weight wt{parse_rat(inner.at("h").get<std::string>()),
              parse_rat(inner.at("m").get<std::string>()),
              parse_rat(inner.at("z").get<std::string>())};
    return {wt, inner.at("depth").get<long long>()};
}

Json check_report_to_json(const CheckReport& rep) {
    Json j;
    j["passed"] = rep.passed;
    j["checks"] = rep.checks;
    j["violations"] = static_cast<std::uint64_t>(rep.violations.size());
    j["witnesses"] = rep.violations;
    return j;
}

Json gram_report_to_json(long long level, const Mat& g, const PositivityVerdict& verdict,
                         const std::vector<Vec>& radical) {
    Json j;
    j["level"] = level;
    j["dimension"] = g.size();
    Json matrix = Json::array();
    for (const auto& row : g) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(to_string(x));
        matrix.push_back(r);
    }
    j["matrix"] = matrix;
    j["verdict"] = to_string(verdict.tag);
    if (verdict.tag == PositivityVerdict::Tag::NonHermitian) {
        j["cell"] = Json::array({verdict.cell.first, verdict.cell.second});
    } else {
        j["radical_dim"] = static_cast<std::uint64_t>(radical.size());
        Json rad = Json::array();
        for (const auto& v : radical) {
            Json r = Json::array();
            for (const auto& x : v) r.push_back(to_string(x));
            rad.push_back(r);
        }
        j["radical"] = rad;
        Json w = Json::array();
        if (verdict.tag == PositivityVerdict::Tag::Indefinite)
            for (const auto& x : verdict.witness) w.push_back(to_string(x));
        j["witness"] = w;
    }
    return j;
}

Json extension_report_to_json(const ExtensionSystem& sys, const std::vector<Vec>& basis,
                              const ReplayReport* replay) {
    Json j;
    j["unknowns"] = static_cast<std::uint64_t>(sys.unknowns.size());
    j["rows"] = static_cast<std::uint64_t>(sys.rows.size());
    Json tags = Json::object();
    {
        std::map<std::string, std::uint64_t> counts;
        for (const auto& r : sys.rows) ++counts[r.tag];
        for (const auto& [tag, n] : counts) tags[tag] = n;
    }
    j["rows_by_tag"] = tags;
    j["nullity"] = static_cast<std::uint64_t>(basis.size());
    Json b = Json::array();
    for (const auto& v : basis) {
        Json r = Json::array();
        for (const auto& x : v) r.push_back(to_string(x));
        b.push_back(r);
    }
    j["basis"] = b;
    Json stages = Json::array();
    if (replay) {
        for (const auto& s : replay->stages) {
            Json st;
            st["name"] = s.name;
            st["ok"] = s.ok;
            st["zeroed"] = static_cast<std::uint64_t>(s.zeroed.size());
            st["note"] = s.note;
            stages.push_back(st);
        }
    }
    j["stages"] = stages;
    return j;
}

} // namespace sv
