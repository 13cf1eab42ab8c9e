// Copyright 2026 The pentasum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pentasum/decomposer.hpp"
#include "pentasum/range_verifier.hpp"
#include "pentasum/ternary_forms.hpp"

namespace pentasum::cli {

namespace {

using Json = nlohmann::ordered_json;

// All integers leave the tool as decimal strings.
std::string dec(i64 v) { return std::to_string(v); }

i64 parse_int(const std::string& s, const char* what) {
    i64 v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw Error(ErrorCode::domain, std::string("invalid integer for ") + what + ": '" + s + "'");
    return v;
}

std::vector<i64> parse_list(const std::string& s, const char* what) {
    std::vector<i64> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_int(item, what));
    return out;
}

std::size_t parse_bytes(std::string s) {
    std::size_t scale = 1;
    if (!s.empty()) {
        switch (s.back()) {
        case 'K': case 'k': scale = std::size_t{1} << 10; break;
        case 'M': case 'm': scale = std::size_t{1} << 20; break;
        case 'G': case 'g': scale = std::size_t{1} << 30; break;
        default: break;
        }
        if (scale != 1) s.pop_back();
    }
    const i64 v = parse_int(s, "memory budget");
    if (v <= 0) throw Error(ErrorCode::domain, "memory budget must be positive");
    return static_cast<std::size_t>(v) * scale;
}

CoefficientTriple parse_triple(const std::string& s) {
    const auto v = parse_list(s, "triple");
    if (v.size() != 3) throw Error(ErrorCode::domain, "a triple has three weights b,c,d: '" + s + "'");
    return {v[0], v[1], v[2]};
}

Json list_json(std::span<const i64> v) {
    Json a = Json::array();
    for (const i64 x : v) a.push_back(dec(x));
    return a;
}

std::string join(std::span<const i64> v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += dec(v[i]);
    }
    return s;
}

enum class Format { json, csv, text };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    throw Error(ErrorCode::domain, "unknown format '" + s + "'");
}

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

// ---------------------------------------------------------------------------

struct DecomposeArgs {
    std::string n;
    std::string triple = "1,1,2";
    std::string method = "auto";
    std::string format = "json";
    std::optional<std::uint64_t> probe_budget;
};

Json decomposition_json(const Decomposition& d) {
    Json j;
    j["command"] = "decompose";
    j["n"] = dec(d.n);
    j["triple"] = list_json(std::array<i64, 3>{d.triple.b, d.triple.c, d.triple.d});
    j["w0"] = dec(d.index[0]);
    j["x0"] = dec(d.index[1]);
    j["y0"] = dec(d.index[2]);
    j["z0"] = dec(d.index[3]);
    j["method"] = std::string(to_string(d.method));
    if (d.shift) {
        j["B"] = dec(d.shift->B);
        if (d.shift->delta) j["delta"] = dec(*d.shift->delta);
        j["residual"] = dec(d.shift->residual);
    }
    j["certified"] = certify(d);
    return j;
}

int cmd_decompose(const DecomposeArgs& a, Streams io) {
    const Format format = parse_format(a.format);
    DecomposeOptions opt;
    if (a.method == "auto") opt.method = MethodChoice::automatic;
    else if (a.method == "constructive") opt.method = MethodChoice::constructive;
    else if (a.method == "search") opt.method = MethodChoice::search;
    else throw Error(ErrorCode::domain, "unknown method '" + a.method + "'");
    opt.probe_budget = a.probe_budget;

    const Decomposition d = decompose(parse_int(a.n, "n"), parse_triple(a.triple), opt);
    const Json j = decomposition_json(d);
    switch (format) {
    case Format::json: io.out << j.dump() << '\n'; break;
    case Format::csv:
        io.out << "n,b,c,d,w0,x0,y0,z0,method,B,certified\n"
               << d.n << ',' << d.triple.b << ',' << d.triple.c << ',' << d.triple.d << ',' << d.index[0] << ','
               << d.index[1] << ',' << d.index[2] << ',' << d.index[3] << ',' << to_string(d.method) << ','
               << (d.shift ? dec(d.shift->B) : "") << ',' << (certify(d) ? "true" : "false") << '\n';
        break;
    case Format::text:
        io.out << d.n << " = p5(" << d.index[0] << ") + " << d.triple.b << "*p5(" << d.index[1] << ") + "
               << d.triple.c << "*p5(" << d.index[2] << ") + " << d.triple.d << "*p5(" << d.index[3] << ")  ["
               << to_string(d.method) << (d.shift ? ", B=" + dec(d.shift->B) : "") << "]\n";
        break;
    }
    return certify(d) ? kOk : kInternal;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string coeffs;
    bool all_triples = false;
    std::string max;
    bool generalized = false;
    bool report_gaps = false;
    bool timing = false;
    unsigned workers = 1;
    std::string memory_budget;
    std::string strategy = "auto";
    std::string format = "json";
    std::uint64_t chunk_bits = std::uint64_t{1} << 21;
};

std::size_t default_budget() {
    if (const char* env = std::getenv(kMemoryBudgetEnv); env != nullptr && *env != '\0') return parse_bytes(env);
    return kDefaultMemoryBudget;
}

int cmd_verify(const VerifyArgs& a, Streams io) {
    const Format format = parse_format(a.format);
    const i64 N = parse_int(a.max, "max");
    if (a.workers == 0) throw Error(ErrorCode::domain, "workers must be positive");

    VerifyOptions opt;
    opt.generalized = a.generalized;
    opt.workers = a.workers;
    opt.chunk_bits = a.chunk_bits;
    opt.memory_budget = a.memory_budget.empty() ? default_budget() : parse_bytes(a.memory_budget);
    if (a.strategy == "auto") opt.strategy = SieveStrategy::automatic;
    else if (a.strategy == "layered") opt.strategy = SieveStrategy::layered;
    else if (a.strategy == "pair-table") opt.strategy = SieveStrategy::pair_table;
    else throw Error(ErrorCode::domain, "unknown strategy '" + a.strategy + "'");

    std::vector<std::vector<i64>> lists;
    if (a.all_triples) {
        for (const auto& t : candidate_triples()) {
            const auto w = t.weights();
            lists.emplace_back(w.begin(), w.end());
        }
    } else {
        if (a.coeffs.empty()) throw Error(ErrorCode::domain, "verify needs --coeffs or --all-triples");
        lists.push_back(parse_list(a.coeffs, "coeffs"));
    }

    if (format == Format::csv) io.out << "record,coefficients,max,n,gaps,last_gap,expected_gap_free\n";
    bool unexpected = false;
    for (const auto& coeffs : lists) {
        const bool expected_gap_free = a.all_triples || proven_universal(coeffs);
        if (a.report_gaps) {
            opt.on_gap = [&](i64 g) {
                switch (format) {
                case Format::json: {
                    Json j;
                    j["type"] = "gap";
                    j["coefficients"] = list_json(coeffs);
                    j["n"] = dec(g);
                    io.out << j.dump() << '\n';
                    break;
                }
                case Format::csv: io.out << "gap," << join(coeffs, ';') << ',' << N << ',' << g << ",,,\n"; break;
                case Format::text: io.out << "gap " << g << '\n'; break;
                }
                io.out.flush();
            };
        }
        const VerificationReport r = verify_range(coeffs, N, opt);
        const bool bad = expected_gap_free && !r.gaps.empty();
        unexpected = unexpected || bad;
        const std::string last = r.gaps.empty() ? "" : dec(r.gaps.back());
        switch (format) {
        case Format::json: {
            Json j;
            j["type"] = "summary";
            j["coefficients"] = list_json(r.coefficients);
            j["max"] = dec(r.bound);
            j["generalized"] = r.generalized;
            j["strategy"] = std::string(to_string(r.strategy));
            j["checked"] = dec(r.checked);
            j["gaps"] = dec(static_cast<i64>(r.gaps.size()));
            if (!r.gaps.empty()) j["last_gap"] = last;
            j["expected_gap_free"] = expected_gap_free;
            j["memory_peak"] = dec(static_cast<i64>(r.memory_peak));
            if (a.timing)
                j["elapsed_ms"] = dec(std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count());
            j["complete"] = r.complete;
            io.out << j.dump() << '\n';
            break;
        }
        case Format::csv:
            io.out << "summary," << join(r.coefficients, ';') << ',' << r.bound << ",," << r.gaps.size() << ','
                   << last << ',' << (expected_gap_free ? "true" : "false") << '\n';
            break;
        case Format::text:
            io.out << "coefficients " << join(r.coefficients, ',') << "  max " << r.bound << "  gaps "
                   << r.gaps.size() << (last.empty() ? "" : "  last " + last)
                   << (bad ? "  UNEXPECTED" : "") << '\n';
            break;
        }
        if (bad)
            io.err << "unexpected gaps for coefficients " << join(r.coefficients, ',') << " up to " << N << '\n';
    }
    return unexpected ? kFailed : kOk;
}

// ---------------------------------------------------------------------------

struct FormsArgs {
    std::string form;
    std::string q;
    std::string mode = "auto";
};

int cmd_forms(const FormsArgs& a, Streams io) {
    const auto c = parse_list(a.form, "form");
    if (c.size() != 3) throw Error(ErrorCode::domain, "a form has three coefficients: '" + a.form + "'");
    const DiagonalForm form{c[0], c[1], c[2]};
    const i64 q = parse_int(a.q, "q");
    if (a.mode != "auto" && a.mode != "search" && a.mode != "predicate")
        throw Error(ErrorCode::domain, "unknown mode '" + a.mode + "'");

    const PredicateVerdict verdict = predicate_verdict(form, q);
    if (a.mode == "predicate" && !verdict.has_predicate)
        throw Error(ErrorCode::unsupported_triple, "no exceptional-set predicate for form (" + form.name() + ")");

    Json j;
    j["command"] = "forms";
    j["form"] = list_json(c);
    j["q"] = dec(q);
    if (verdict.has_predicate) {
        j["verdict"] = verdict.excluded ? "excluded" : verdict.guaranteed ? "representable" : "undecided";
        j["predicate"] = verdict.reason;
    }
    if (a.mode != "predicate") {
        const auto rep = verdict.guaranteed ? std::optional(represent_guaranteed(form, q)) : represent(form, q);
        j["representable"] = rep.has_value();
        if (rep) j["representation"] = list_json(std::array<i64, 3>{rep->a, rep->b, rep->c});
        if (verdict.excluded && rep)
            throw Error(ErrorCode::predicate_violation, "excluded value " + dec(q) + " has a representation");
    }
    io.out << j.dump() << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------

struct CertifyArgs {
    std::string n;
    std::string triple = "1,1,2";
    std::string witness;
    std::string record;
};

bool certify_record(const std::string& line) {
    const Json j = Json::parse(line);
    const auto field = [&](const char* key) { return parse_int(j.at(key).get<std::string>(), key); };
    const auto& t = j.at("triple");
    if (!t.is_array() || t.size() != 3) throw Error(ErrorCode::domain, "record triple must have three entries");
    const CoefficientTriple triple{parse_int(t[0].get<std::string>(), "triple"),
                                   parse_int(t[1].get<std::string>(), "triple"),
                                   parse_int(t[2].get<std::string>(), "triple")};
    return certify(field("n"), triple, {field("w0"), field("x0"), field("y0"), field("z0")});
}

int cmd_certify(const CertifyArgs& a, Streams io) {
    bool ok = true;
    std::size_t checked = 0;
    if (!a.record.empty()) {
        if (a.record == "-") {
            for (std::string line; std::getline(io.in, line);) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                ok = certify_record(line) && ok;
                ++checked;
            }
        } else {
            ok = certify_record(a.record);
            ++checked;
        }
        if (checked == 0) throw Error(ErrorCode::domain, "no records to certify");
    } else {
        if (a.n.empty() || a.witness.empty()) throw Error(ErrorCode::domain, "certify needs --n and --witness, or --record");
        const auto w = parse_list(a.witness, "witness");
        if (w.size() != 4) throw Error(ErrorCode::domain, "witness is w0,x0,y0,z0");
        ok = certify(parse_int(a.n, "n"), parse_triple(a.triple), {w[0], w[1], w[2], w[3]});
        checked = 1;
    }
    Json j;
    j["command"] = "certify";
    j["checked"] = dec(static_cast<i64>(checked));
    j["certified"] = ok;
    io.out << j.dump() << '\n';
    return ok ? kOk : kFailed;
}

// ---------------------------------------------------------------------------

int cmd_ju(const std::string& coeffs, Streams io) {
    const auto c = parse_list(coeffs, "coeffs");
    for (const i64 x : c)
        if (x <= 0) throw Error(ErrorCode::domain, "coefficients must be positive");
    const JuResult r = ju_universality_check(c);
    Json j;
    j["command"] = "ju";
    j["coefficients"] = list_json(c);
    j["universal"] = r.universal;
    Json ws = Json::array();
    for (const auto& w : r.witnesses) {
        Json e;
        e["n"] = dec(w.target);
        if (w.arguments) e["arguments"] = list_json(*w.arguments);
        else e["arguments"] = nullptr;
        ws.push_back(std::move(e));
    }
    j["witnesses"] = std::move(ws);
    io.out << j.dump() << '\n';
    return r.universal ? kOk : kFailed;
}

int exit_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::domain:
    case ErrorCode::unsupported_triple:
    case ErrorCode::hypothesis_violation:
    case ErrorCode::overflow:
    case ErrorCode::resource_limit:
    case ErrorCode::search_cap_exceeded: return kUnsupported;
    default: return kInternal;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Explicit pentagonal-sum decompositions and range verification", "pentasum"};
    app.require_subcommand(1);
    Streams io{in, out, err};

    DecomposeArgs dec_args;
    auto* decompose_cmd = app.add_subcommand("decompose", "Write n as p5(w)+b p5(x)+c p5(y)+d p5(z)");
    decompose_cmd->add_option("--n", dec_args.n, "Target n >= 0")->required();
    decompose_cmd->add_option("--triple", dec_args.triple, "Weights b,c,d")->capture_default_str();
    decompose_cmd->add_option("--method", dec_args.method, "auto | constructive | search")->capture_default_str();
    decompose_cmd->add_option("--format", dec_args.format, "json | csv | text")->capture_default_str();
    decompose_cmd->add_option("--probe-budget", dec_args.probe_budget, "Cap on direct-search probes");

    VerifyArgs ver_args;
    auto* verify_cmd = app.add_subcommand("verify", "Find every n <= max with no representation");
    verify_cmd->add_option("--coeffs", ver_args.coeffs, "Weights 1,b,c,d (any length)");
    verify_cmd->add_flag("--all-triples", ver_args.all_triples, "Run all fifteen conjectured triples");
    verify_cmd->add_option("--max", ver_args.max, "Upper end N of [0, N]")->required();
    verify_cmd->add_flag("--generalized", ver_args.generalized, "Arguments range over all integers");
    verify_cmd->add_flag("--report-gaps", ver_args.report_gaps, "Stream one record per gap");
    verify_cmd->add_flag("--timing", ver_args.timing, "Include elapsed time in summaries");
    verify_cmd->add_option("--workers", ver_args.workers, "Worker threads")->capture_default_str();
    verify_cmd->add_option("--memory-budget", ver_args.memory_budget, "Bytes (K/M/G suffix); default from " + std::string(kMemoryBudgetEnv) + " or 1G");
    verify_cmd->add_option("--strategy", ver_args.strategy, "auto | layered | pair-table")->capture_default_str();
    verify_cmd->add_option("--chunk-bits", ver_args.chunk_bits, "Bits per work chunk")->capture_default_str();
    verify_cmd->add_option("--format", ver_args.format, "json | csv | text")->capture_default_str();

    FormsArgs form_args;
    auto* forms_cmd = app.add_subcommand("forms", "Represent q by a diagonal ternary form");
    forms_cmd->add_option("--form", form_args.form, "Coefficients alpha,beta,gamma")->required();
    forms_cmd->add_option("--q", form_args.q, "Target q >= 0")->required();
    forms_cmd->add_option("--mode", form_args.mode, "auto | search | predicate")->capture_default_str();

    CertifyArgs cert_args;
    auto* certify_cmd = app.add_subcommand("certify", "Check a decomposition from scratch");
    certify_cmd->add_option("--n", cert_args.n, "Target n");
    certify_cmd->add_option("--triple", cert_args.triple, "Weights b,c,d")->capture_default_str();
    certify_cmd->add_option("--witness", cert_args.witness, "Indices w0,x0,y0,z0");
    certify_cmd->add_option("--record", cert_args.record, "A decompose JSON record, or - for records on stdin");

    std::string ju_coeffs;
    auto* ju_cmd = app.add_subcommand("ju", "Twelve-number universality check over generalized pentagonals");
    ju_cmd->add_option("--coeffs", ju_coeffs, "Weights a1,...,ak")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUnsupported;
    }

    try {
        if (*decompose_cmd) return cmd_decompose(dec_args, io);
        if (*verify_cmd) return cmd_verify(ver_args, io);
        if (*forms_cmd) return cmd_forms(form_args, io);
        if (*certify_cmd) return cmd_certify(cert_args, io);
        if (*ju_cmd) return cmd_ju(ju_coeffs, io);
    } catch (const Error& e) {
        Json j;
        j["type"] = "error";
        j["code"] = std::string(to_string(e.code()));
        j["message"] = e.what();
        err << j.dump() << '\n';
        return exit_for(e.code());
    } catch (const nlohmann::json::exception& e) {
        err << "malformed record: " << e.what() << '\n';
        return kUnsupported;
    }
    return kUnsupported;
}

} // namespace pentasum::cli
