// Copyright 2026 The slocc4 Authors
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

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <sstream>

#include "slocc/canonical.hpp"
#include "slocc/error.hpp"
#include "slocc/io.hpp"
#include "slocc/pencil.hpp"
#include "slocc/quad.hpp"
#include "slocc/tri.hpp"

namespace slocc::cli {

namespace {

using io::json;

constexpr int kExitGenuine = 0;
constexpr int kExitError = 1;
constexpr int kExitDegenerate = 2;

std::string read_input(const std::string &file, std::istream &in) {
    if (file == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    std::ifstream f(file);
    if (!f) {
        throw Error(ErrorCode::ParseError, "cannot open '" + file + "'");
    }
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

double parse_double(const std::string &text, const std::string &what) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::logic_error &) {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(v)) {
        throw Error(ErrorCode::ParseError, "bad number '" + text + "' in " + what);
    }
    return v;
}

// "name=re,im" or "name=re".
std::pair<std::string, Complex> parse_param(const std::string &text) {
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw Error(ErrorCode::ParseError, "--param expects name=re,im, got '" + text + "'");
    }
    std::string name = text.substr(0, eq);
    std::string value = text.substr(eq + 1);
    auto comma = value.find(',');
    double re = parse_double(value.substr(0, comma), "--param " + name);
    double im = comma == std::string::npos ? 0.0 : parse_double(value.substr(comma + 1), "--param " + name);
    return {name, {re, im}};
}

int exit_for(const TriClass &t) {
    return t.genuine() ? kExitGenuine : kExitDegenerate;
}

bool exact_product(const ExactState &s) {
    return (s[0] * s[3] - s[1] * s[2]).is_zero();
}

json two_qubit_json(bool entangled) {
    return {{"class", entangled ? "Entangled" : "Product"}};
}

json summary_json(const QuadSummary &summary) {
    json per = json::array();
    for (const auto &v : summary.per_qubit) {
        per.push_back(io::verdict_to_json(v));
    }
    return {{"per_qubit", std::move(per)}, {"canonical_label", summary.canonical_label}};
}

struct ClassifyOptions {
    std::string file = "-";
    double eps = kDefaultEps;
    std::string distinguished = "1";
    bool all = false;
    bool exact = false;
    bool explain = false;
};

int cmd_classify(const ClassifyOptions &o, std::istream &in, std::ostream &out) {
    std::string text = read_input(o.file, in);
    bool all = o.all || o.distinguished == "all";
    int d = all ? 1 : std::stoi(o.distinguished);
    if (o.exact) {
        ExactState s = io::parse_exact_state(text);
        if (s.is_zero()) {
            throw Error(ErrorCode::ZeroState, "zero state");
        }
        switch (s.qubits()) {
            case 2: {
                bool ent = !exact_product(s);
                out << two_qubit_json(ent).dump(2) << "\n";
                return ent ? kExitGenuine : kExitDegenerate;
            }
            case 3: {
                TriClass t = classify3(s);
                out << io::verdict_to_json(t).dump(2) << "\n";
                return exit_for(t);
            }
            case 4: {
                if (all) {
                    auto summary = classify4_all(s);
                    out << summary_json(summary).dump(2) << "\n";
                    return summary.per_qubit.front().degenerate() ? kExitDegenerate : kExitGenuine;
                }
                QuadClass v = classify4(s, d);
                out << io::verdict_to_json(v).dump(2) << "\n";
                return v.degenerate() ? kExitDegenerate : kExitGenuine;
            }
            default:
                throw Error(ErrorCode::DimensionMismatch, "classify needs 2, 3 or 4 qubits");
        }
    }
    PureState s = io::parse_state(text);
    if (s.max_abs() == 0) {
        throw Error(ErrorCode::ZeroState, "zero state");
    }
    switch (s.qubits()) {
        case 2: {
            bool ent = two_qubit_entangled(s, o.eps);
            out << two_qubit_json(ent).dump(2) << "\n";
            return ent ? kExitGenuine : kExitDegenerate;
        }
        case 3: {
            TriClass t = classify3(s, o.eps);
            out << io::verdict_to_json(t).dump(2) << "\n";
            return exit_for(t);
        }
        case 4: {
            if (all) {
                auto summary = classify4_all(s, o.eps);
                out << summary_json(summary).dump(2) << "\n";
                return summary.per_qubit.front().degenerate() ? kExitDegenerate : kExitGenuine;
            }
            QuadClass v = classify4(s, d, o.eps);
            out << io::verdict_to_json(v).dump(2) << "\n";
            return v.degenerate() ? kExitDegenerate : kExitGenuine;
        }
        default:
            throw Error(ErrorCode::DimensionMismatch, "classify needs 2, 3 or 4 qubits");
    }
}

json exact_form_json(const ExactBinaryForm &f) {
    json c = json::array();
    for (const auto &v : f.c) {
        c.push_back(v.str());
    }
    return c;
}

int cmd_explain(const ClassifyOptions &o, std::istream &in, std::ostream &out) {
    std::string text = read_input(o.file, in);
    int d = std::stoi(o.distinguished);
    json j;
    if (o.exact) {
        ExactState s = io::parse_exact_state(text);
        if (s.qubits() != 4) {
            throw Error(ErrorCode::DimensionMismatch, "explain needs a 4-qubit state");
        }
        if (s.is_zero()) {
            throw Error(ErrorCode::ZeroState, "zero state");
        }
        auto dec = decompose(s, d);
        j["distinguished"] = d;
        j["phi0"] = io::state_to_json(dec.phi0.to_numeric());
        j["phi1"] = io::state_to_json(dec.phi1.to_numeric());
        j["span_dimension"] = span_dimension(dec.phi0, dec.phi1);
        QuadClass v = classify4(s, d);
        if (!v.degenerate()) {
            j["quartic_exact"] = exact_form_json(exact_quartic(dec.phi0, dec.phi1));
            json quads = json::array();
            for (const auto &q : exact_clause_quadratics(dec.phi0, dec.phi1)) {
                quads.push_back(exact_form_json(q));
            }
            j["clause_quadratics_exact"] = std::move(quads);
        }
        j["verdict"] = io::verdict_to_json(v);
        out << j.dump(2) << "\n";
        return v.degenerate() ? kExitDegenerate : kExitGenuine;
    }
    PureState s = io::parse_state(text);
    if (s.qubits() != 4) {
        throw Error(ErrorCode::DimensionMismatch, "explain needs a 4-qubit state");
    }
    if (s.max_abs() == 0) {
        throw Error(ErrorCode::ZeroState, "zero state");
    }
    auto dec = decompose(s, d);
    j["distinguished"] = d;
    j["phi0"] = io::state_to_json(dec.phi0);
    j["phi1"] = io::state_to_json(dec.phi1);
    int dim = span_dimension(dec.phi0, dec.phi1, o.eps);
    j["span_dimension"] = dim;
    QuadClass v = classify4(s, d, o.eps);
    if (!v.degenerate()) {
        j["quartic"] = io::quartic_to_json(quartic(dec.phi0, dec.phi1));
        json quads = json::array();
        for (const auto &pair : clause_quadratics(dec.phi0, dec.phi1)) {
            for (const auto &q : pair) {
                json c = json::array();
                for (const auto &x : q.c) {
                    c.push_back(json::array({static_cast<double>(x.real()), static_cast<double>(x.imag())}));
                }
                quads.push_back({{"coefficients", std::move(c)}, {"node_ratio", q.node_ratio}});
            }
        }
        j["clause_quadratics"] = std::move(quads);
    }
    j["verdict"] = io::verdict_to_json(v);
    out << j.dump(2) << "\n";
    return v.degenerate() ? kExitDegenerate : kExitGenuine;
}

struct GenerateOptions {
    std::string family;
    std::vector<std::string> params;
    int sign = 1;
    int cut = 1;
    double perturb = 0;
    std::uint64_t seed = 1;
};

int cmd_generate(const GenerateOptions &o, std::ostream &out) {
    FamilySpec spec{o.family, {}, o.sign, o.cut};
    for (const auto &p : o.params) {
        auto [name, value] = parse_param(p);
        spec.params[name] = value;
    }
    PureState s = make_canonical(spec);
    if (o.perturb > 0) {
        s = apply_slocc(s, random_slocc(s.qubits(), o.perturb, o.seed));
    }
    out << io::state_to_json(s).dump(2) << "\n";
    return kExitGenuine;
}

struct FuzzOptions {
    int trials = 1000;
    std::uint64_t seed = 1;
    double condition = 1e3;
    double eps = kDefaultEps;
    bool fixed_ghz = false;
    bool exact = false;
    bool verbose = false;
};

PureState unit(const PureState &s) {
    return s.scaled(1.0 / s.norm());
}

std::string signature(const SpanProfile &p) {
    std::vector<std::string> types;
    for (const auto &e : p.exceptional) {
        types.push_back(e.type.label());
    }
    std::sort(types.begin(), types.end());
    std::string s = p.generic_type.label() + ":";
    for (std::size_t i = 0; i < types.size(); ++i) {
        s += (i ? "," : "") + types[i];
    }
    return s;
}

// Pencils spanned by two random SLOCC images of GHZ (or one image and GHZ
// itself with --fixed-ghz). A pencil with no non-GHZ element would refute
// the emptiness of the GHZ-GHZ superclass.
int cmd_fuzz(const FuzzOptions &o, std::ostream &out, std::ostream &err) {
    const PureState ghz = make_canonical({"GHZ", {}});
    const ExactState ghz_exact = ExactState::from_numeric(ghz);
    int all_ghz = 0;
    int failures = 0;
    std::map<std::string, int> types;
    std::map<std::string, int> signatures;
    double y4_error = 0;
    bool y4_exact_one = true;
    json trials = json::array();
    for (int t = 0; t < o.trials; ++t) {
        std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                          static_cast<std::uint32_t>(t)};
        std::mt19937_64 rng(seq);
        PureState phi0 = unit(apply_slocc(ghz, random_slocc(3, o.condition, rng)));
        PureState phi1 = o.fixed_ghz ? ghz : unit(apply_slocc(ghz, random_slocc(3, o.condition, rng)));
        json row = {{"trial", t}};
        try {
            SpanProfile p = analyze_span(phi0, phi1, o.eps);
            bool empty = p.generic_type.kind == TriClass::Kind::GHZ && p.exceptional.empty();
            all_ghz += empty ? 1 : 0;
            for (const auto &e : p.exceptional) {
                ++types[e.type.label()];
            }
            ++signatures[signature(p)];
            row["signature"] = signature(p);
        } catch (const Error &e) {
            ++failures;
            row["error"] = std::string(to_string(e.code()));
            err << "trial " << t << ": " << e.what() << "\n";
        }
        if (o.fixed_ghz) {
            if (o.exact) {
                auto q = exact_quartic(ExactState::from_numeric(phi0), ghz_exact);
                bool one = q.c.back() == GaussianRational(1);
                y4_exact_one = y4_exact_one && one;
                row["y4"] = q.c.back().str();
            } else {
                WideComplex c = quartic(phi0, phi1).c[4];
                double rel = static_cast<double>(std::abs(c - WideComplex(1)));
                y4_error = std::max(y4_error, rel);
                row["y4"] = json::array({static_cast<double>(c.real()), static_cast<double>(c.imag())});
            }
        }
        if (o.verbose) {
            trials.push_back(std::move(row));
        }
    }
    json report = {{"trials", o.trials},
                   {"seed", o.seed},
                   {"condition", o.condition},
                   {"all_ghz_pencils", all_ghz},
                   {"failed_trials", failures},
                   {"exceptional_types", types},
                   {"signatures", signatures}};
    if (o.fixed_ghz) {
        if (o.exact) {
            report["y4_all_exactly_one"] = y4_exact_one;
        } else {
            report["y4_max_relative_error"] = y4_error;
        }
    }
    if (o.verbose) {
        report["per_trial"] = std::move(trials);
    }
    out << report.dump(2) << "\n";
    return all_ghz == 0 && failures == 0 && y4_exact_one ? kExitGenuine : kExitError;
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"SLOCC classification of 2-, 3- and 4-qubit pure states", "slocc"};
    app.require_subcommand(1);

    ClassifyOptions classify_opts;
    auto *classify = app.add_subcommand("classify", "Classify a state read from FILE or stdin");
    classify->add_option("file", classify_opts.file, "State JSON ('-' for stdin)");
    classify->add_option("--eps", classify_opts.eps, "Tolerance")->check(CLI::PositiveNumber);
    classify->add_option("--distinguished", classify_opts.distinguished, "Distinguished qubit (1..4) or 'all'")
        ->check(CLI::IsMember({"1", "2", "3", "4", "all"}));
    classify->add_flag("--all", classify_opts.all, "Verdicts for every distinguished qubit");
    classify->add_flag("--exact", classify_opts.exact, "Exact arithmetic over Q(i)");
    classify->add_flag("--explain", classify_opts.explain, "Dump the pencil analysis (4 qubits)");

    ClassifyOptions explain_opts;
    auto *explain = app.add_subcommand("explain", "Dump the pencil analysis behind a 4-qubit verdict");
    explain->add_option("file", explain_opts.file, "State JSON ('-' for stdin)");
    explain->add_option("--eps", explain_opts.eps, "Tolerance")->check(CLI::PositiveNumber);
    explain->add_option("--distinguished", explain_opts.distinguished, "Distinguished qubit (1..4)")
        ->check(CLI::IsMember({"1", "2", "3", "4"}));
    explain->add_flag("--exact", explain_opts.exact, "Exact arithmetic over Q(i)");

    GenerateOptions gen_opts;
    auto *generate = app.add_subcommand("generate", "Write a canonical family member as state JSON");
    generate->add_option("--family", gen_opts.family, "Family tag")->required();
    generate->add_option("--param", gen_opts.params, "Parameter name=re,im (repeatable)");
    generate->add_option("--sign", gen_opts.sign, "Square-root sign for WW_W")->check(CLI::IsMember({1, -1}));
    generate->add_option("--cut", gen_opts.cut, "Biseparable qubit (1..3)")->check(CLI::Range(1, 3));
    generate->add_option("--perturb", gen_opts.perturb, "Apply a random SLOCC map of this condition bound")
        ->check(CLI::Range(1.0, 1e300));
    generate->add_option("--seed", gen_opts.seed, "Seed for --perturb");

    FuzzOptions fuzz_opts;
    auto *fuzz = app.add_subcommand("fuzz-empty", "Search pencils of two GHZ images for an all-GHZ line");
    fuzz->add_option("--trials", fuzz_opts.trials, "Number of pencils")->check(CLI::Range(1, 100000000));
    fuzz->add_option("--seed", fuzz_opts.seed, "Seed");
    fuzz->add_option("--condition", fuzz_opts.condition, "Condition bound of the SLOCC maps")
        ->check(CLI::Range(1.0, 1e6));
    fuzz->add_option("--eps", fuzz_opts.eps, "Tolerance")->check(CLI::PositiveNumber);
    fuzz->add_flag("--fixed-ghz", fuzz_opts.fixed_ghz, "Use GHZ itself as the second spanning vector");
    fuzz->add_flag("--exact", fuzz_opts.exact, "With --fixed-ghz, compute the y^4 coefficient exactly");
    fuzz->add_flag("--verbose", fuzz_opts.verbose, "Per-trial rows");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (classify->parsed()) {
            return classify_opts.explain ? cmd_explain({classify_opts.file, classify_opts.eps,
                                                        classify_opts.all ? "1" : classify_opts.distinguished,
                                                        false, classify_opts.exact, true},
                                                       in, out)
                                         : cmd_classify(classify_opts, in, out);
        }
        if (explain->parsed()) {
            return cmd_explain(explain_opts, in, out);
        }
        if (generate->parsed()) {
            return cmd_generate(gen_opts, out);
        }
        if (fuzz->parsed()) {
            return cmd_fuzz(fuzz_opts, out, err);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace slocc::cli
