#include "chainring/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "chainring/json_io.hpp"
#include "chainring/oracle.hpp"

namespace chainring {

namespace {

Context make_ctx(const RunConfig& cfg) {
    return build_context(cfg.p, cfg.s, cfg.k, cfg.n, cfg.w, cfg.seed);
}

int config_error(std::ostream& err, const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_config;
}

std::string cycles_of_mu(const Context& ctx) {
    std::ostringstream os;
    std::vector<bool> seen(ctx.r, false);
    for (size_t i = 0; i < ctx.r; ++i) {
        if (seen[i]) continue;
        seen[i] = true;
        if (ctx.mu[i] == i) {
            os << '(' << i + 1 << ')';
        } else {
            seen[ctx.mu[i]] = true;
            os << '(' << i + 1 << ' ' << ctx.mu[i] + 1 << ')';
        }
    }
    return os.str();
}

void print_ctx_text(const Context& ctx, std::ostream& out) {
    out << "p=" << ctx.p << " s=" << ctx.s << " k=" << ctx.k << " n=" << ctx.n
        << " N=" << ctx.N << "\n";
    out << "w=" << ctx.w << " w0=" << ctx.w0 << " what=" << ctx.what
        << " what0=" << ctx.what0 << " gamma=" << ctx.gamma()
        << " gamma_hat=" << ctx.gamma_hat() << "\n";
    out << "factors (" << ctx.r << "):\n";
    for (size_t i = 0; i < ctx.r; ++i)
        out << "  f" << i + 1 << " deg=" << ctx.degrees[i] << " poly="
            << to_text(ctx.factors[i]) << " delta=" << ctx.delta[i] << "\n";
    out << "mu=" << cycles_of_mu(ctx) << " lambda=" << ctx.lambda
        << " epsilon=" << ctx.epsilon << "\n";
}

}  // namespace

void apply_env_seed(RunConfig& cfg) {
    if (const char* env = std::getenv("CHAINRING_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            // ignore malformed values; the configured seed stands
        }
    }
}

int cmd_ctx(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        Context ctx = make_ctx(cfg);
        if (cfg.json)
            out << context_to_json(ctx).dump(2) << "\n";
        else
            print_ctx_text(ctx, out);
        return exit_ok;
    } catch (const InternalInconsistency& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        return config_error(err, e);
    }
}

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        Context ctx = make_ctx(cfg);
        bigint total = 1;
        std::ostringstream expr;
        json per = json::array();
        for (size_t i = 0; i < ctx.r; ++i) {
            bigint ni = count_ideals(ctx.p, ctx.degrees[i], ctx.nu());
            total *= ni;
            if (i) expr << " x ";
            expr << ni.str();
            per.push_back(ni.str());
        }
        if (cfg.json) {
            json j;
            j["per_factor"] = per;
            j["total"] = total.str();
            out << j.dump(2) << "\n";
        } else {
            out << expr.str() << " = " << total.str() << "\n";
        }
        return exit_ok;
    } catch (const InternalInconsistency& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        return config_error(err, e);
    }
}

int cmd_idempotents(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        Context ctx = make_ctx(cfg);
        IdempotentSet idem = compute_idempotents(ctx);
        if (cfg.json) {
            json j;
            json th = json::array(), thh = json::array();
            for (const auto& t : idem.theta) th.push_back(to_text(t));
            for (const auto& t : idem.theta_hat) thh.push_back(to_text(t));
            j["theta"] = th;
            j["theta_hat"] = thh;
            out << j.dump(2) << "\n";
        } else {
            for (size_t i = 0; i < idem.theta.size(); ++i)
                out << "theta" << i + 1 << "=" << to_text(idem.theta[i]) << "\n";
            for (size_t i = 0; i < idem.theta_hat.size(); ++i)
                out << "theta_hat" << i + 1 << "=" << to_text(idem.theta_hat[i]) << "\n";
        }
        return exit_ok;
    } catch (const InternalInconsistency& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        return config_error(err, e);
    }
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        Context ctx = make_ctx(cfg);
        System sys(ctx);
        uint64_t emitted = 0;
        auto want_case = [&](const IdealSpec& s) {
            return cfg.case_filter.empty() || cfg.case_filter == to_string(s.c);
        };
        if (cfg.codes) {
            CodeSpec cur;
            cur.variant = Variant::plain;
            cur.comps.assign(ctx.r, IdealSpec{});
            bool stop = false;
            std::function<void(size_t)> walk = [&](size_t i) {
                if (stop) return;
                if (i == ctx.r) {
                    if (cfg.json)
                        out << to_json(ctx, cur).dump() << "\n";
                    else {
                        for (size_t c = 0; c < ctx.r; ++c)
                            out << (c ? " | " : "") << to_text(cur.comps[c]);
                        out << "\n";
                    }
                    if (cfg.limit && ++emitted >= cfg.limit) stop = true;
                    return;
                }
                IdealEnumerator en(sys.ring(Variant::plain, i));
                while (en.next() && !stop) {
                    if (!want_case(en.spec())) continue;
                    cur.comps[i] = en.spec();
                    walk(i + 1);
                }
            };
            walk(0);
            return exit_ok;
        }
        size_t idx = cfg.factor_index.value_or(1);
        if (idx < 1 || idx > ctx.r) throw InvalidInput("factor index out of range");
        IdealEnumerator en(sys.ring(Variant::plain, idx - 1));
        while (en.next()) {
            if (!want_case(en.spec())) continue;
            if (cfg.json)
                out << to_json(en.spec()).dump() << "\n";
            else
                out << to_text(en.spec()) << "\n";
            if (cfg.limit && ++emitted >= cfg.limit) break;
        }
        return exit_ok;
    } catch (const InternalInconsistency& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        return config_error(err, e);
    }
}

int cmd_dual(const RunConfig& cfg, std::istream& in, std::ostream& out,
             std::ostream& err) {
    try {
        Context ctx = make_ctx(cfg);
        System sys(ctx);
        json j = json::parse(in);
        CodeSpec code = code_from_json(j, ctx);
        CodeSpec dual = dual_code(sys, code);
        out << to_json(ctx, dual).dump(2) << "\n";
        return exit_ok;
    } catch (const InternalInconsistency& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        return config_error(err, e);
    }
}

int cmd_selfdual(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        Context ctx = make_ctx(cfg);
        if (!selfdual_compatible(ctx)) {
            err << "error: self-dual codes need p = 2 and (1+2w)^2 = 1 mod 2^s\n";
            return exit_precondition;
        }
        System sys(ctx);
        if (cfg.count_only) {
            out << count_self_dual(sys, cfg.jobs).str() << "\n";
            return exit_ok;
        }
        uint64_t emitted = 0;
        enumerate_self_dual(
            sys,
            [&](const CodeSpec& code) {
                if (cfg.json)
                    out << to_json(ctx, code).dump() << "\n";
                else {
                    for (size_t c = 0; c < ctx.r; ++c)
                        out << (c ? " | " : "") << to_text(code.comps[c]);
                    out << "\n";
                }
                ++emitted;
                return !(cfg.limit && emitted >= cfg.limit);
            },
            cfg.jobs);
        return exit_ok;
    } catch (const NotSelfDualCompatible& e) {
        err << "error: " << e.what() << "\n";
        return exit_precondition;
    } catch (const InternalInconsistency& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        return config_error(err, e);
    }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        Context ctx = make_ctx(cfg);
        System sys(ctx);
        VerifyReport rep = verify_small_instance(sys, cfg.jobs, cfg.cap);
        for (const auto& line : rep.lines)
            out << (line.pass ? "PASS" : "FAIL") << "  " << line.name << " ("
                << line.detail << ")\n";
        if (!rep.all_pass()) {
            err << "verification failed\n";
            return exit_internal;
        }
        return exit_ok;
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_precondition;
    } catch (const InternalInconsistency& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        return config_error(err, e);
    }
}

}  // namespace chainring
