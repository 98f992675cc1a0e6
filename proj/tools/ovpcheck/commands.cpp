#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ovp/binomial_tables.hpp"
#include "ovp/dissection_steps.hpp"
#include "ovp/identities.hpp"
#include "ovp/oracle.hpp"
#include "ovp/parallel.hpp"
#include "cli.hpp"
#include "table.hpp"

namespace ovpcheck {

namespace {

using nlohmann::ordered_json;

constexpr const char* schema_prefix = "ovpcheck-";
constexpr int schema_version = 1;

std::string schema(const std::string& name) { return schema_prefix + name + "/" + std::to_string(schema_version); }

const char* extension(Format f) {
    switch (f) {
        case Format::json: return "json";
        case Format::csv: return "csv";
        case Format::table: break;
    }
    return "txt";
}

// Writes the report to stdout and, with --out, to DIR/<name>.<ext>.
void emit(const Options& opt, Output io, const std::string& name, const std::string& text) {
    io.out << text;
    if (opt.out_dir.empty()) {
        return;
    }
    std::filesystem::create_directories(opt.out_dir);
    const auto path = std::filesystem::path(opt.out_dir) / (name + "." + extension(opt.format));
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw usage_error("cannot write " + path.string());
    }
    file << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json params_json(const ovp::ParamMap& p) {
    ordered_json j = ordered_json::object();
    for (const auto& [name, value] : p) {
        j[name] = value;
    }
    return j;
}

ordered_json grid_json(const Options& opt) {
    return {{"n_max", opt.n_max},
            {"t_max", opt.grid.t_max},
            {"alpha_max", opt.grid.alpha_max},
            {"i_max", opt.grid.i_max},
            {"j_max", opt.grid.j_max},
            {"r_max", opt.grid.r_max},
            {"k_max", opt.grid.k_max},
            {"ell_max", opt.grid.ell_max},
            {"primes_only", opt.grid.primes_only},
            {"include_conjectures", opt.include_conjectures},
            {"exact_samples", opt.exact_samples},
            {"seed", opt.seed}};
}

std::string mismatch_text(const std::optional<ovp::Mismatch>& m) {
    if (!m) {
        return "";
    }
    return "q^" + std::to_string(m->exponent) + ": " + m->lhs.get_str() + " vs " + m->rhs.get_str();
}

ordered_json mismatch_json(const std::optional<ovp::Mismatch>& m) {
    if (!m) {
        return nullptr;
    }
    return {{"n", m->exponent}, {"lhs", m->lhs.get_str()}, {"rhs", m->rhs.get_str()}};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        s += (i ? sep : "") + parts[i];
    }
    return s;
}

// ---------------------------------------------------------------- identities

}  // namespace

int cmd_identities(const Options& opt, Output io) {
    auto cases = ovp::builtin_identities();
    if (!opt.only.empty()) {
        for (const auto& key : opt.only) {
            if (std::none_of(cases.begin(), cases.end(), [&](const auto& c) { return c.key == key; })) {
                throw usage_error("unknown identity \"" + key + "\"");
            }
        }
        std::erase_if(cases, [&](const auto& c) {
            return std::find(opt.only.begin(), opt.only.end(), c.key) == opt.only.end();
        });
    }
    const auto reports = ovp::verify_identities(cases, opt.order, opt.jobs);
    const bool bad =
        std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.status != ovp::CheckStatus::pass; });

    std::ostringstream os;
    switch (opt.format) {
        case Format::table: {
            Table t({"KEY", "MODE", "MODULUS", "ORDER", "STATUS", "DETAIL"});
            for (const auto& r : reports) {
                t.add({r.key, ovp::to_string(r.mode), r.modulus ? std::to_string(r.modulus) : "-",
                       std::to_string(r.order), ovp::to_string(r.status),
                       r.error.empty() ? mismatch_text(r.first_mismatch) : r.error});
            }
            t.print(os);
            break;
        }
        case Format::json: {
            ordered_json results = ordered_json::array();
            for (const auto& r : reports) {
                results.push_back({{"key", r.key},
                                   {"mode", ovp::to_string(r.mode)},
                                   {"modulus", r.modulus},
                                   {"order", r.order},
                                   {"status", ovp::to_string(r.status)},
                                   {"first_mismatch", mismatch_json(r.first_mismatch)},
                                   {"error", r.error}});
            }
            os << dump({{"schema", schema("identities")},
                        {"order", opt.order},
                        {"passed", !bad},
                        {"results", results}});
            break;
        }
        case Format::csv: {
            csv_row(os, {"key", "mode", "modulus", "order", "status", "n", "lhs", "rhs", "error"});
            for (const auto& r : reports) {
                const auto& m = r.first_mismatch;
                csv_row(os, {r.key, ovp::to_string(r.mode), std::to_string(r.modulus), std::to_string(r.order),
                             ovp::to_string(r.status), m ? std::to_string(m->exponent) : "",
                             m ? m->lhs.get_str() : "", m ? m->rhs.get_str() : "", r.error});
            }
            break;
        }
    }
    emit(opt, io, "identities", os.str());
    return bad ? exit_mismatch : exit_pass;
}

// -------------------------------------------------------------------- verify

int cmd_verify(const Options& opt, Output io) {
    const auto families = ovp::builtin_families();
    if (opt.keys.empty()) {
        throw usage_error("verify needs at least one family key, or 'all'");
    }
    std::set<std::string> chosen;
    for (const auto& key : opt.keys) {
        if (key == "all") {
            for (const auto& f : families) {
                if (f.status == ovp::FamilyStatus::theorem || opt.include_conjectures) {
                    chosen.insert(f.key);
                }
            }
            continue;
        }
        try {
            chosen.insert(ovp::find_family(families, key).key);
        } catch (const std::invalid_argument& e) {
            throw usage_error(e.what());
        }
    }
    if (!opt.only.empty()) {
        for (const auto& key : opt.only) {
            try {
                ovp::find_family(families, key);
            } catch (const std::invalid_argument& e) {
                throw usage_error(e.what());
            }
        }
        std::erase_if(chosen, [&](const auto& k) { return std::find(opt.only.begin(), opt.only.end(), k) == opt.only.end(); });
    }

    std::vector<const ovp::CongruenceFamily*> selected;
    std::vector<std::vector<ovp::ParamMap>> grids;
    for (const auto& f : families) {
        if (!chosen.count(f.key)) {
            continue;
        }
        auto grid = f.default_grid(opt.grid);
        std::size_t needed = 1;
        for (const auto& p : grid) {
            needed = std::max(needed, ovp::required_order(f, p, opt.n_max));
        }
        if (opt.order_given && opt.order < needed) {
            io.err << "warning: " << f.key << ": raising order from " << opt.order << " to " << needed << '\n';
        }
        selected.push_back(&f);
        grids.push_back(std::move(grid));
    }

    ovp::CheckOptions check;
    check.max_order = opt.max_order;
    check.exact_samples = opt.exact_samples;
    check.seed = opt.seed;

    std::vector<std::optional<ovp::VerificationReport>> slots(selected.size());
    try {
        ovp::parallel_for(selected.size(), opt.jobs, [&](std::size_t i) {
            slots[i] = ovp::check_family(*selected[i], grids[i], opt.n_max, check);
        });
    } catch (const ovp::order_budget_exceeded& e) {
        throw usage_error(e.what());
    } catch (const ovp::parameter_out_of_domain& e) {
        throw usage_error(e.what());
    }

    std::size_t counts[4] = {0, 0, 0, 0};
    bool bad = false;
    for (const auto& s : slots) {
        ++counts[static_cast<int>(s->status)];
        bad = bad || s->failed();
    }

    std::ostringstream os;
    switch (opt.format) {
        case Format::table: {
            Table t({"KEY", "STATUS", "POINTS", "COEFFICIENTS", "ORDER", "FAILURES"});
            for (const auto& s : slots) {
                t.add({s->key, ovp::to_string(s->status), std::to_string(s->params_tried),
                       std::to_string(s->coefficients_checked), std::to_string(s->order),
                       std::to_string(s->failures)});
            }
            t.print(os);
            for (const auto& s : slots) {
                for (const auto& w : s->witnesses) {
                    os << "witness " << s->key << " [" << ovp::to_string(w.params) << "] n=" << w.n
                       << " value=" << w.value << " expected=" << w.expected << " (mod " << w.modulus << ", "
                       << w.source << ")\n";
                }
            }
            os << slots.size() << " families: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2]
               << " conjecture-pass, " << counts[3] << " conjecture-fail\n";
            break;
        }
        case Format::json: {
            ordered_json out = ordered_json::array();
            for (std::size_t i = 0; i < slots.size(); ++i) {
                const auto& s = *slots[i];
                ordered_json witnesses = ordered_json::array();
                for (const auto& w : s.witnesses) {
                    witnesses.push_back({{"params", params_json(w.params)},
                                         {"n", w.n},
                                         {"value", w.value},
                                         {"modulus", w.modulus},
                                         {"expected", w.expected},
                                         {"source", w.source}});
                }
                out.push_back({{"key", s.key},
                               {"statement", selected[i]->statement},
                               {"family_status", ovp::to_string(selected[i]->status)},
                               {"status", ovp::to_string(s.status)},
                               {"params_tried", s.params_tried},
                               {"coefficients_checked", s.coefficients_checked},
                               {"failures", s.failures},
                               {"order", s.order},
                               {"exact_cross_checks", s.exact_cross_checks},
                               {"witnesses", witnesses}});
            }
            os << dump({{"schema", schema("verify")},
                        {"config", grid_json(opt)},
                        {"passed", !bad},
                        {"summary",
                         {{"pass", counts[0]},
                          {"fail", counts[1]},
                          {"conjecture_pass", counts[2]},
                          {"conjecture_fail", counts[3]}}},
                        {"families", out}});
            break;
        }
        case Format::csv: {
            csv_row(os, {"key", "params", "n", "value", "modulus", "expected"});
            for (const auto& s : slots) {
                for (const auto& w : s->witnesses) {
                    csv_row(os, {s->key, ovp::to_string(w.params), std::to_string(w.n), std::to_string(w.value),
                                 std::to_string(w.modulus), std::to_string(w.expected)});
                }
            }
            break;
        }
    }
    emit(opt, io, "verify", os.str());
    return bad ? exit_mismatch : exit_pass;
}

// -------------------------------------------------------------------- oracle

namespace {

struct OracleResult {
    ovp::oracle::CountTable table;
    std::size_t enumerated_upto = 0;
    bool enumerated = false;
    std::optional<std::string> mismatch;
};

OracleResult run_oracle(ovp::oracle::Family family, std::uint64_t p, std::size_t upto) {
    using ovp::oracle::Family;
    OracleResult res;
    res.table = family == Family::overpartition_tuples ? ovp::oracle::count_overpartition_tuples(p, upto)
                                                       : ovp::oracle::count_opt_tuples(p, upto);
    const ovp::Ring exact = ovp::Ring::exact();
    const ovp::Series gf = family == Family::overpartition_tuples ? ovp::overpartition_gf(p, exact, upto + 1)
                                                                  : ovp::opt_gf(p, exact, upto + 1);
    const std::string where = ovp::oracle::to_string(family) + " parameter " + std::to_string(p);
    for (std::size_t n = 0; n <= upto; ++n) {
        if (gf.coeff(n) != res.table.counts[n]) {
            res.mismatch = where + " n=" + std::to_string(n) + ": oracle " + res.table.counts[n].get_str() +
                           ", generating function " + gf.coeff(n).get_str();
            return res;
        }
    }
    constexpr unsigned enum_t = 2;
    constexpr std::size_t enum_n = 12;
    if (family == Family::overpartition_tuples && p <= enum_t) {
        res.enumerated = true;
        res.enumerated_upto = std::min(upto, enum_n);
        for (std::size_t n = 0; n <= res.enumerated_upto; ++n) {
            const auto e = ovp::oracle::enumerate_tiny(static_cast<unsigned>(p), static_cast<unsigned>(n));
            if (mpz_class(static_cast<unsigned long>(e)) != res.table.counts[n]) {
                res.mismatch = where + " n=" + std::to_string(n) + ": oracle " + res.table.counts[n].get_str() +
                               ", enumeration " + std::to_string(e);
                return res;
            }
        }
    }
    return res;
}

}  // namespace

int cmd_oracle(const Options& opt, Output io) {
    using ovp::oracle::Family;
    std::vector<std::pair<Family, std::uint64_t>> targets;
    for (auto t : opt.oracle_t) {
        targets.emplace_back(Family::overpartition_tuples, t);
    }
    for (auto k : opt.oracle_opt) {
        targets.emplace_back(Family::opt_tuples, k);
    }
    if (targets.empty()) {
        for (std::uint64_t p = 0; p <= 6; ++p) {
            targets.emplace_back(Family::overpartition_tuples, p);
        }
        for (std::uint64_t p = 0; p <= 6; ++p) {
            targets.emplace_back(Family::opt_tuples, p);
        }
    }

    std::vector<std::optional<OracleResult>> slots(targets.size());
    ovp::parallel_for(targets.size(), opt.jobs,
                      [&](std::size_t i) { slots[i] = run_oracle(targets[i].first, targets[i].second, opt.upto); });
    bool bad = false;
    for (const auto& s : slots) {
        if (s->mismatch) {
            bad = true;
            io.err << "mismatch: " << *s->mismatch << '\n';
        }
    }

    std::ostringstream os;
    switch (opt.format) {
        case Format::table: {
            Table t({"FAMILY", "PARAMETER", "UPTO", "ENUMERATED", "STATUS", "COUNTS"});
            for (const auto& s : slots) {
                std::vector<std::string> head;
                for (std::size_t n = 0; n < std::min<std::size_t>(s->table.counts.size(), 8); ++n) {
                    head.push_back(s->table.counts[n].get_str());
                }
                if (s->table.counts.size() > 8) {
                    head.push_back("...");
                }
                t.add({ovp::oracle::to_string(s->table.family), std::to_string(s->table.parameter),
                       std::to_string(s->table.upto), s->enumerated ? "n<=" + std::to_string(s->enumerated_upto) : "-",
                       s->mismatch ? "FAIL" : "PASS", join(head, ",")});
            }
            t.print(os);
            break;
        }
        case Format::json: {
            ordered_json tables = ordered_json::array();
            for (const auto& s : slots) {
                ordered_json counts = ordered_json::array();
                for (const auto& c : s->table.counts) {
                    counts.push_back(c.get_str());
                }
                tables.push_back({{"family", ovp::oracle::to_string(s->table.family)},
                                  {"parameter", s->table.parameter},
                                  {"upto", s->table.upto},
                                  {"status", s->mismatch ? "fail" : "pass"},
                                  {"enumerated_upto", s->enumerated ? ordered_json(s->enumerated_upto) : nullptr},
                                  {"mismatch", s->mismatch ? ordered_json(*s->mismatch) : nullptr},
                                  {"counts", counts}});
            }
            os << dump({{"schema", schema("oracle")}, {"passed", !bad}, {"tables", tables}});
            break;
        }
        case Format::csv: {
            csv_row(os, {"family", "parameter", "n", "count"});
            for (const auto& s : slots) {
                for (std::size_t n = 0; n < s->table.counts.size(); ++n) {
                    csv_row(os, {ovp::oracle::to_string(s->table.family), std::to_string(s->table.parameter),
                                 std::to_string(n), s->table.counts[n].get_str()});
                }
            }
            break;
        }
    }
    emit(opt, io, "oracle", os.str());
    return bad ? exit_mismatch : exit_pass;
}

// -------------------------------------------------------------------- replay

int cmd_replay(const Options& opt, Output io) {
    std::vector<unsigned> widths;
    if (opt.width) {
        widths.push_back(*opt.width);
    } else if (opt.step.empty()) {
        widths = {16, 32};
    }

    std::vector<std::pair<const ovp::DissectionStep*, ovp::ParamMap>> work;
    if (!opt.step.empty()) {
        const ovp::DissectionStep* step = nullptr;
        try {
            step = &ovp::find_step(opt.step);
        } catch (const std::invalid_argument& e) {
            throw usage_error(e.what());
        }
        const std::pair<const char*, const std::optional<std::int64_t>*> given[] = {
            {"t", &opt.t}, {"i", &opt.i}, {"r", &opt.r}};
        ovp::ParamMap params;
        for (const auto& [name, value] : given) {
            if (!value->has_value()) {
                continue;
            }
            if (std::find(step->param_names.begin(), step->param_names.end(), name) == step->param_names.end()) {
                throw usage_error("step " + step->key + " takes no parameter --" + name);
            }
            params[name] = **value;
        }
        if (params.empty()) {
            for (auto& p : step->default_grid()) {
                work.emplace_back(step, std::move(p));
            }
        } else {
            if (params.size() != step->param_names.size()) {
                throw usage_error("step " + step->key + " needs --" + join(step->param_names, " --"));
            }
            work.emplace_back(step, std::move(params));
        }
    } else if (!opt.width) {
        for (const auto& step : ovp::builtin_steps()) {
            for (auto& p : step.default_grid()) {
                work.emplace_back(&step, std::move(p));
            }
        }
    }

    std::vector<ovp::BinomialReplayReport> tables;
    for (unsigned w : widths) {
        tables.push_back(ovp::replay_binomial_tables(w));
    }
    std::vector<std::optional<ovp::StepReport>> steps(work.size());
    try {
        ovp::parallel_for(work.size(), opt.jobs, [&](std::size_t i) {
            steps[i] = ovp::verify_dissection_step(*work[i].first, work[i].second, opt.order);
        });
    } catch (const ovp::parameter_out_of_domain& e) {
        throw usage_error(e.what());
    } catch (const ovp::order_budget_exceeded& e) {
        throw usage_error(e.what());
    }

    bool bad = false;
    for (const auto& t : tables) {
        bad = bad || !t.passed();
    }
    for (const auto& s : steps) {
        bad = bad || s->status != ovp::CheckStatus::pass;
    }

    const auto row_text = [](const std::vector<std::uint64_t>& v) {
        std::vector<std::string> parts;
        for (auto x : v) {
            parts.push_back(std::to_string(x));
        }
        return "(" + join(parts, ",") + ")";
    };
    const auto step_detail = [](const ovp::StepReport& s) {
        if (!s.error.empty()) {
            return s.error;
        }
        if (!s.first_mismatch) {
            return std::string();
        }
        return "link " + std::to_string(s.failing_link) + " " + mismatch_text(s.first_mismatch);
    };

    std::ostringstream os;
    switch (opt.format) {
        case Format::table: {
            if (!tables.empty()) {
                Table t({"WIDTH", "ROW", "TABULATED", "AT t=i", "AT t=i+PERIOD", "STATUS"});
                for (const auto& tb : tables) {
                    for (const auto& r : tb.rows) {
                        t.add({std::to_string(tb.width), std::to_string(r.residue), row_text(r.tabulated),
                               row_text(r.at_residue), row_text(r.at_next_period), r.ok() ? "PASS" : "FAIL"});
                    }
                }
                t.print(os);
            }
            if (!steps.empty()) {
                if (!tables.empty()) {
                    os << '\n';
                }
                Table t({"STEP", "PARAMS", "MODULUS", "ORDER", "STATUS", "DETAIL"});
                for (const auto& s : steps) {
                    t.add({s->key, ovp::to_string(s->params), std::to_string(s->modulus), std::to_string(s->order),
                           ovp::to_string(s->status), step_detail(*s)});
                }
                t.print(os);
            }
            break;
        }
        case Format::json: {
            ordered_json jt = ordered_json::array();
            for (const auto& tb : tables) {
                ordered_json rows = ordered_json::array();
                for (const auto& r : tb.rows) {
                    rows.push_back({{"i", r.residue},
                                    {"tabulated", r.tabulated},
                                    {"at_residue", r.at_residue},
                                    {"at_next_period", r.at_next_period},
                                    {"status", r.ok() ? "pass" : "fail"}});
                }
                jt.push_back({{"width", tb.width}, {"passed", tb.passed()}, {"rows", rows}});
            }
            ordered_json js = ordered_json::array();
            for (const auto& s : steps) {
                js.push_back({{"key", s->key},
                              {"params", params_json(s->params)},
                              {"modulus", s->modulus},
                              {"order", s->order},
                              {"status", ovp::to_string(s->status)},
                              {"failing_link", s->first_mismatch ? ordered_json(s->failing_link) : nullptr},
                              {"first_mismatch", mismatch_json(s->first_mismatch)},
                              {"error", s->error}});
            }
            os << dump({{"schema", schema("replay")}, {"passed", !bad}, {"tables", jt}, {"steps", js}});
            break;
        }
        case Format::csv: {
            csv_row(os, {"kind", "key", "params", "modulus", "status", "detail"});
            for (const auto& tb : tables) {
                for (const auto& r : tb.rows) {
                    csv_row(os, {"table", "width-" + std::to_string(tb.width), "i=" + std::to_string(r.residue),
                                 std::to_string(tb.width), r.ok() ? "PASS" : "FAIL", row_text(r.tabulated)});
                }
            }
            for (const auto& s : steps) {
                csv_row(os, {"step", s->key, ovp::to_string(s->params), std::to_string(s->modulus),
                             ovp::to_string(s->status), step_detail(*s)});
            }
            break;
        }
    }
    emit(opt, io, "replay", os.str());
    return bad ? exit_mismatch : exit_pass;
}

// ------------------------------------------------------------------ families

int cmd_families(const Options& opt, Output io) {
    const auto families = ovp::builtin_families();
    std::ostringstream os;
    switch (opt.format) {
        case Format::table: {
            Table t({"KEY", "STATUS", "GF", "PROGRESSION", "MODULUS", "GROUPS"});
            for (const auto& f : families) {
                t.add({f.key, ovp::to_string(f.status), ovp::to_string(f.gf) + "(" + f.gf_parameter_expr + ")",
                       f.progression_expr, f.modulus_expr, join(f.groups, ",")});
            }
            t.print(os);
            break;
        }
        case Format::json: {
            ordered_json out = ordered_json::array();
            for (const auto& f : families) {
                ordered_json params = ordered_json::array();
                for (const auto& p : f.params) {
                    params.push_back({{"name", p.name}, {"domain", p.domain}});
                }
                out.push_back({{"key", f.key},
                               {"statement", f.statement},
                               {"groups", f.groups},
                               {"gf", ovp::to_string(f.gf)},
                               {"gf_parameter", f.gf_parameter_expr},
                               {"progression", f.progression_expr},
                               {"modulus", f.modulus_expr},
                               {"params", params},
                               {"expected", f.triangular_residue ? "2 if t odd and n triangular, else 0" : "0"},
                               {"status", ovp::to_string(f.status)}});
            }
            os << dump({{"schema", schema("families")}, {"families", out}});
            break;
        }
        case Format::csv: {
            csv_row(os, {"key", "status", "gf", "gf_parameter", "progression", "modulus", "groups", "statement"});
            for (const auto& f : families) {
                csv_row(os, {f.key, ovp::to_string(f.status), ovp::to_string(f.gf), f.gf_parameter_expr,
                             f.progression_expr, f.modulus_expr, join(f.groups, ";"), f.statement});
            }
            break;
        }
    }
    emit(opt, io, "families", os.str());
    return exit_pass;
}

}  // namespace ovpcheck
