#include "chainring/json_io.hpp"

namespace chainring {

namespace {

IdealCase case_from_string(const std::string& s) {
    if (s == "I") return IdealCase::I;
    if (s == "II") return IdealCase::II;
    if (s == "III-a") return IdealCase::IIIa;
    if (s == "III-b") return IdealCase::IIIb;
    if (s == "IV") return IdealCase::IV;
    if (s == "V") return IdealCase::V;
    throw InvalidInput("unknown ideal case '" + s + "'");
}

}  // namespace

json to_json(const IdealSpec& spec) {
    json j;
    j["case"] = to_string(spec.c);
    switch (spec.c) {
        case IdealCase::I: j["l"] = spec.l; break;
        case IdealCase::II: j["m"] = spec.m; break;
        case IdealCase::IIIa:
        case IdealCase::IIIb:
            j["l"] = spec.l;
            j["t"] = spec.t;
            break;
        case IdealCase::IV:
            j["l"] = spec.l;
            j["m"] = spec.m;
            break;
        case IdealCase::V:
            j["l"] = spec.l;
            j["t"] = spec.t;
            j["m"] = spec.m;
            break;
    }
    if (!spec.h.empty()) {
        json hd = json::array();
        for (const auto& d : spec.h) hd.push_back(d.coeffs());
        j["h"] = hd;
    }
    return j;
}

IdealSpec ideal_from_json(const json& j, uint32_t p) {
    IdealSpec spec;
    spec.c = case_from_string(j.at("case").get<std::string>());
    spec.l = j.value("l", uint64_t(0));
    spec.t = j.value("t", uint64_t(0));
    spec.m = j.value("m", uint64_t(0));
    if (j.contains("h"))
        for (const auto& d : j.at("h"))
            spec.h.emplace_back(p, d.get<std::vector<uint32_t>>());
    return spec;
}

json to_json(const Context& ctx, const CodeSpec& code) {
    json j;
    j["p"] = ctx.p;
    j["s"] = ctx.s;
    j["k"] = ctx.k;
    j["n"] = ctx.n;
    j["w"] = ctx.w;
    j["variant"] = code.variant == Variant::plain ? "plain" : "hat";
    json comps = json::array();
    for (const auto& c : code.comps) comps.push_back(to_json(c));
    j["components"] = comps;
    return j;
}

CodeSpec code_from_json(const json& j, const Context& ctx) {
    for (auto [key, val] : std::initializer_list<std::pair<const char*, uint64_t>>{
             {"p", ctx.p}, {"s", ctx.s}, {"k", ctx.k}, {"n", ctx.n}, {"w", ctx.w}}) {
        if (j.contains(key) && j.at(key).get<uint64_t>() != val)
            throw InvalidInput(std::string("code JSON field '") + key +
                               "' does not match the context");
    }
    CodeSpec code;
    code.variant =
        j.value("variant", std::string("plain")) == "hat" ? Variant::hat : Variant::plain;
    for (const auto& c : j.at("components"))
        code.comps.push_back(ideal_from_json(c, ctx.p));
    if (code.comps.size() != ctx.r)
        throw InvalidInput("code JSON needs one component per factor");
    return code;
}

json context_to_json(const Context& ctx) {
    json j;
    j["p"] = ctx.p;
    j["s"] = ctx.s;
    j["k"] = ctx.k;
    j["n"] = ctx.n;
    j["N"] = ctx.N;
    j["w"] = ctx.w;
    j["w0"] = ctx.w0;
    j["what"] = ctx.what;
    j["what0"] = ctx.what0;
    j["gamma"] = ctx.gamma();
    j["gamma_hat"] = ctx.gamma_hat();
    j["seed"] = ctx.seed;
    json fs = json::array();
    for (size_t i = 0; i < ctx.r; ++i) {
        json f;
        f["index"] = i + 1;
        f["poly"] = to_text(ctx.factors[i]);
        f["degree"] = ctx.degrees[i];
        f["mu"] = ctx.mu[i] + 1;
        f["delta"] = ctx.delta[i];
        fs.push_back(f);
    }
    j["factors"] = fs;
    j["lambda"] = ctx.lambda;
    j["epsilon"] = ctx.epsilon;
    return j;
}

}  // namespace chainring
