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


// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// all seven pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "reference.hpp"
#include "slocc/canonical.hpp"
#include "slocc/error.hpp"
#include "slocc/io.hpp"
#include "slocc/oracle.hpp"
#include "slocc/pencil.hpp"
#include "slocc/quad.hpp"
#include "slocc/tri.hpp"

namespace {

using namespace slocc;
using Clock = std::chrono::steady_clock;

constexpr double kCondition = 1e3;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<std::string> type_multiset(const SpanProfile &p) {
    std::vector<std::string> v;
    for (const auto &e : p.exceptional) {
        v.push_back(e.type.label());
    }
    std::sort(v.begin(), v.end());
    return v;
}

int count_orbit(const PureState &s, const std::string &want, int trials, std::mt19937_64 &rng) {
    int ok = 0;
    for (int t = 0; t < trials; ++t) {
        try {
            ok += classify4(apply_slocc(s, random_slocc(4, kCondition, rng))).label() == want ? 1 : 0;
        } catch (const Error &) {
        }
    }
    return ok;
}

Outcome restored_classes() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(2026);
    int lambda_ok = 0, lambda_total = 0;
    for (Complex l : {Complex(0), Complex(1), Complex(-1), Complex(0, 1), Complex(2, 3)}) {
        lambda_ok += count_orbit(make_canonical({"W0kPsi_W", {{"lambda", l}}}), "W0kPsi_W(1)", 500, rng);
        lambda_total += 500;
    }
    int ww_ok = 0, ww_total = 0, skipped = 0;
    const std::vector<Complex> as = {1.0, 2.0, {0.0, 1.0}, {1.0, 1.0}};
    for (Complex a3 : as) {
        for (Complex a5 : as) {
            for (Complex mu : {Complex(0), Complex(1), Complex(0, 1)}) {
                for (int sign : {1, -1}) {
                    PureState s = PureState::basis(4, 0);
                    try {
                        s = make_canonical({"WW_W", {{"a3", a3}, {"a5", a5}, {"mu", mu}}, sign});
                    } catch (const Error &e) {
                        if (e.code() != ErrorCode::ConstraintViolation) {
                            throw;
                        }
                        ++skipped;
                        continue;
                    }
                    ww_ok += count_orbit(s, "WW_W", 500, rng);
                    ww_total += 500;
                }
            }
        }
    }
    double secs = seconds_since(t0);
    bool pass = lambda_ok == lambda_total && ww_ok == ww_total && secs < 60;
    return {pass, fmt("W0kPsi_W %d/%d, WW_W %d/%d (%d grid points excluded by the constraint), %.1f s (limit 60 s)",
                      lambda_ok, lambda_total, ww_ok, ww_total, skipped, secs)};
}

io::json run_cli(const std::vector<std::string> &args, int &code) {
    std::istringstream in;
    std::ostringstream out, err;
    code = cli::run(args, in, out, err);
    return io::json::parse(out.str());
}

Outcome ghz_emptiness() {
    int code = 0;
    auto fuzz = run_cli({"fuzz-empty", "--trials", "10000", "--seed", "2026"}, code);
    int all_ghz = fuzz["all_ghz_pencils"];
    int failed = fuzz["failed_trials"];
    auto fixed = run_cli({"fuzz-empty", "--trials", "1000", "--seed", "2026", "--fixed-ghz"}, code);
    double y4 = fixed["y4_max_relative_error"];
    auto exact = run_cli({"fuzz-empty", "--trials", "1000", "--seed", "2026", "--fixed-ghz", "--exact"}, code);
    bool exactly_one = exact["y4_all_exactly_one"];
    bool pass = all_ghz == 0 && failed == 0 && y4 <= 1e-12 && exactly_one;
    return {pass, fmt("all-GHZ pencils %d of 10000 (%d failed trials); y^4 max relative error %.2e over 1000 "
                      "(limit 1e-12); exact y^4 == 1 on all 1000: %s",
                      all_ghz, failed, y4, exactly_one ? "yes" : "no")};
}

Outcome tri_vs_oracle() {
    std::mt19937_64 rng(2026);
    int total = 0, disagree = 0, wrong = 0;
    for (const auto &[s, cls] : tri_fixtures()) {
        for (int t = 0; t < 10000; ++t) {
            auto img = apply_slocc(s, random_slocc(3, kCondition, rng));
            TriClass a = classify3(img, 1e-9);
            TriClass b = oracle::classify3_by_ranks(img, 1e-9);
            disagree += a == b ? 0 : 1;
            wrong += a == cls ? 0 : 1;
            ++total;
        }
    }
    return {disagree == 0, fmt("%d disagreements in %d images (%d off the source class)", disagree, total, wrong)};
}

Outcome evaluation_identity() {
    std::mt19937_64 rng(2026);
    std::normal_distribution<double> g;
    double worst = 0;
    for (int t = 0; t < 1000; ++t) {
        auto p0 = random_state(3, rng), p1 = random_state(3, rng);
        auto q = quartic(p0, p1);
        for (int j = 0; j < 20; ++j) {
            Complex x(g(rng), g(rng)), y(g(rng), g(rng));
            double scale = std::max(p0.max_abs(), p1.max_abs()) * std::max(std::abs(x), std::abs(y));
            Complex want = reference::hyperdeterminant(reference::line_element(p0, p1, x, y));
            worst = std::max(worst, std::abs(q.evaluate(x, y) - want) / std::pow(scale, 4));
        }
    }
    return {worst <= 1e-10, fmt("max relative error %.2e over 1000 pencils x 20 points (limit 1e-10)", worst)};
}

Outcome profile_vs_oracle() {
    int mismatches = 0;
    std::string first;
    for (const auto &f : quad_fixtures()) {
        auto d = decompose(f.state, 1);
        auto a = analyze_span(d.phi0, d.phi1);
        auto b = oracle::profile_by_sampling(d.phi0, d.phi1);
        if (a.generic_type != b.generic_type || type_multiset(a) != type_multiset(b)) {
            ++mismatches;
            if (first.empty()) {
                first = " first: " + f.name;
            }
        }
    }
    // Separable points of the SepLine construction at x = -1/(p0 psi01)
    // and x = -1/(p0 psi10), y = 1.
    Complex p0(1.5, 0.5), psi01(0.5, 1.0), psi10(-2.0, 0.25);
    auto d = decompose(make_canonical({"SepLine", {{"p0", p0}, {"psi00", 1.0}, {"psi01", psi01}, {"psi10", psi10}}}), 1);
    auto a = analyze_span(d.phi0, d.phi1);
    auto b = oracle::profile_by_sampling(d.phi0, d.phi1);
    double worst = 0;
    for (Complex x : {-1.0 / (p0 * psi01), -1.0 / (p0 * psi10)}) {
        auto want = ProjectivePoint::make(x, 1.0);
        for (const auto *p : {&a, &b}) {
            double best = 1;
            for (const auto &e : p->exceptional) {
                if (e.type.separable()) {
                    best = std::min(best, chordal_distance(e.point, want));
                }
            }
            worst = std::max(worst, best);
        }
    }
    bool pass = mismatches == 0 && worst <= 1e-6;
    return {pass, fmt("%d of %zu fixtures disagree%s; separable points found to chordal %.1e (limit 1e-6)",
                      mismatches, quad_fixtures().size(), first.c_str(), worst)};
}

Outcome scale_invariance() {
    std::mt19937_64 rng(2026);
    int changed = 0, checked = 0;
    auto check4 = [&](const PureState &s) {
        for (int k = 1; k <= 4; ++k) {
            auto base = classify4(s, k);
            for (double f : {1e-6, 1e6}) {
                changed += same_verdict(classify4(s.scaled(f), k), base) ? 0 : 1;
                ++checked;
            }
        }
    };
    for (const auto &f : quad_fixtures()) {
        check4(f.state);
        for (int t = 0; t < 20; ++t) {
            check4(apply_slocc(f.state, random_slocc(4, kCondition, rng)));
        }
    }
    for (const auto &[s, cls] : tri_fixtures()) {
        for (int t = 0; t < 100; ++t) {
            auto img = t == 0 ? s : apply_slocc(s, random_slocc(3, kCondition, rng));
            for (double f : {1e-6, 1e6}) {
                changed += classify3(img.scaled(f)) == classify3(img) ? 0 : 1;
                ++checked;
            }
        }
    }
    return {changed == 0, fmt("%d of %d verdicts changed under scaling by 1e-6 and 1e6", changed, checked)};
}

Outcome random_states_tally() {
    std::mt19937_64 rng(2026);
    std::map<std::string, int> tally;
    int contradictions = 0, other_errors = 0;
    for (int t = 0; t < 10000; ++t) {
        try {
            tally[std::string(to_string(classify4(random_state(4, rng)).tag))]++;
        } catch (const Error &e) {
            (e.code() == ErrorCode::InternalContradiction ? contradictions : other_errors)++;
        }
    }
    int covered = 0;
    std::string parts;
    for (const auto &[k, v] : tally) {
        covered += v;
        parts += " " + k + "=" + std::to_string(v);
    }
    bool pass = contradictions == 0 && other_errors == 0 && covered == 10000;
    return {pass, fmt("%d contradictions, %d other errors; tally:%s", contradictions, other_errors, parts.c_str())};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"restored-class non-emptiness", restored_classes},
        {"W_GHZ,GHZ emptiness", ghz_emptiness},
        {"3-qubit classifier vs rank oracle", tri_vs_oracle},
        {"quartic evaluation identity", evaluation_identity},
        {"pencil profile vs sampling oracle", profile_vs_oracle},
        {"scale invariance", scale_invariance},
        {"no all-GHZ contradiction on random states", random_states_tally},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("threw ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
