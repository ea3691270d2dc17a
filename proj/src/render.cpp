#include <algorithm>
#include <stdexcept>

#include "antnorm/reports.hpp"

namespace antnorm {

using nlohmann::ordered_json;

std::string decimal4(const Rational& q) {
    // round half away from zero to 4 places, in exact integer arithmetic
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    const bool negative = num < 0;
    if (negative)
        num = -num;
    mpz_class scaled = num * 10000 * 2 + den;
    mpz_class units = scaled / (2 * den);
    mpz_class ip = units / 10000;
    mpz_class fp = units % 10000;
    std::string frac = fp.get_str();
    frac.insert(0, 4 - frac.size(), '0');
    return (negative ? "-" : "") + ip.get_str() + "." + frac;
}

std::string rational_cell(const Rational& q) {
    return q.get_str() + " (" + decimal4(q) + ")";
}

static uint64_t parse_u64(const std::string& tok, const char* flag) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(std::string(flag) + ": '" + tok +
                                    "' is not a nonnegative integer");
    try {
        return std::stoull(tok);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument(std::string(flag) + ": '" + tok + "' is out of range");
    }
}

std::vector<uint64_t> parse_spec_list(const std::string& spec, const char* flag) {
    std::vector<uint64_t> out;
    if (spec.empty())
        throw std::invalid_argument(std::string(flag) + ": empty value");
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t comma = spec.find(',', pos);
        std::string tok =
            spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty())
            throw std::invalid_argument(std::string(flag) + ": empty element in '" + spec + "'");
        size_t dots = tok.find("..");
        if (dots == std::string::npos) {
            uint64_t v = parse_u64(tok, flag);
            if (std::find(out.begin(), out.end(), v) == out.end())
                out.push_back(v);
        } else {
            uint64_t lo = parse_u64(tok.substr(0, dots), flag);
            uint64_t hi = parse_u64(tok.substr(dots + 2), flag);
            if (lo > hi)
                throw std::invalid_argument(std::string(flag) + ": range '" + tok +
                                            "' is descending");
            for (uint64_t v = lo; v <= hi; ++v) {
                if (std::find(out.begin(), out.end(), v) == out.end())
                    out.push_back(v);
            }
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (out.empty())
        throw std::invalid_argument(std::string(flag) + ": empty range");
    return out;
}

Rational parse_rational(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("parse_rational: empty string");
    const size_t dot = s.find('.');
    if (dot != std::string::npos) {
        // decimal literal, e.g. "0.5" or ".6665"
        std::string ip = s.substr(0, dot);
        std::string fp = s.substr(dot + 1);
        if (ip.empty())
            ip = "0";
        if (fp.find_first_not_of("0123456789") != std::string::npos ||
            ip.find_first_not_of("0123456789") != std::string::npos || fp.empty())
            throw std::invalid_argument("parse_rational: bad decimal '" + s + "'");
        mpz_class den = 1;
        for (size_t i = 0; i < fp.size(); ++i)
            den *= 10;
        mpz_class num(ip + fp, 10);
        return make_rational(num, den);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

OutputFormat parse_format(const std::string& s) {
    if (s == "text")
        return OutputFormat::Text;
    if (s == "json")
        return OutputFormat::Json;
    throw std::invalid_argument("--format: expected text or json, got '" + s + "'");
}

CaseSelection parse_case_selection(const std::string& s) {
    if (s == "fixed")
        return {true, false};
    if (s == "shifted")
        return {false, true};
    if (s == "both")
        return {true, true};
    throw std::invalid_argument("--case: expected fixed, shifted or both, got '" + s + "'");
}

ordered_json report_to_json(const DichotomyReport& r) {
    ordered_json j;
    j["ell"] = r.ell;
    j["n"] = r.level;
    j["case"] = to_string(r.kase);
    j["mode"] = r.mode == ScanMode::Exhaustive ? "exhaustive" : "sampled";
    if (r.mode == ScanMode::Sampled) {
        j["seed"] = r.seed;
        j["samples"] = r.samples;
    }
    j["total"] = r.total;
    j["rank_zero"] = r.rank_zero;
    j["full_rank"] = r.full_rank;
    j["violations"] = ordered_json::array();
    for (const auto& v : r.violations) {
        ordered_json jv;
        jv["assignment"] = v.assignment;
        jv["rank"] = v.rank;
        j["violations"].push_back(jv);
    }
    return j;
}

DichotomyReport report_from_json(const ordered_json& j) {
    DichotomyReport r;
    r.ell = j.at("ell").get<uint64_t>();
    r.level = j.at("n").get<unsigned>();
    r.kase = prime_case_from_string(j.at("case").get<std::string>());
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "exhaustive") {
        r.mode = ScanMode::Exhaustive;
    } else if (mode == "sampled") {
        r.mode = ScanMode::Sampled;
        r.seed = j.at("seed").get<uint64_t>();
        r.samples = j.at("samples").get<uint64_t>();
    } else {
        throw std::invalid_argument("report_from_json: unknown mode '" + mode + "'");
    }
    r.total = j.at("total").get<uint64_t>();
    r.rank_zero = j.at("rank_zero").get<uint64_t>();
    r.full_rank = j.at("full_rank").get<uint64_t>();
    for (const auto& jv : j.at("violations"))
        r.violations.push_back(
            {jv.at("assignment").get<std::vector<uint64_t>>(), jv.at("rank").get<size_t>()});
    return r;
}

ordered_json distribution_to_json(const RamificationProfile& profile, unsigned n,
                                  const RankDistribution& dist) {
    ordered_json j;
    j["profile"] = {{"ell", profile.ell}, {"t", profile.t}, {"s", profile.s}};
    j["n"] = n;
    j["entries"] = ordered_json::array();
    const uint64_t top = (uint64_t{1} << n) * profile.t - 1;
    for (uint64_t r = 0; r <= top; ++r) {
        auto it = dist.find(static_cast<unsigned>(r));
        const Rational q = it == dist.end() ? Rational(0) : it->second;
        ordered_json e;
        e["rank"] = r;
        e["num"] = q.get_num().get_str();
        e["den"] = q.get_den().get_str();
        e["decimal"] = decimal4(q);
        j["entries"].push_back(e);
    }
    return j;
}

std::tuple<RamificationProfile, unsigned, RankDistribution>
distribution_from_json(const ordered_json& j) {
    RamificationProfile profile{j.at("profile").at("ell").get<uint64_t>(),
                                j.at("profile").at("t").get<unsigned>(),
                                j.at("profile").at("s").get<unsigned>()};
    unsigned n = j.at("n").get<unsigned>();
    RankDistribution dist;
    for (const auto& e : j.at("entries")) {
        Rational q = make_rational(mpz_class(e.at("num").get<std::string>()),
                                   mpz_class(e.at("den").get<std::string>()));
        if (q != 0)
            dist[e.at("rank").get<unsigned>()] = q;
    }
    return {profile, n, dist};
}

} // namespace antnorm
