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


#include "slocc/io.hpp"

#include <string>
#include <vector>

#include "slocc/error.hpp"

namespace slocc::io {

namespace {

// Keeps every number as the literal text it was written with, so the exact
// reader sees "0.1" rather than the nearest double.
class LiteralSax : public nlohmann::json_sax<json> {
  public:
    json result;

    bool null() override {
        return put(nullptr);
    }
    bool boolean(bool v) override {
        return put(v);
    }
    bool number_integer(number_integer_t v) override {
        return put(std::to_string(v));
    }
    bool number_unsigned(number_unsigned_t v) override {
        return put(std::to_string(v));
    }
    bool number_float(number_float_t, const string_t &text) override {
        return put(text);
    }
    bool string(string_t &v) override {
        return put(v);
    }
    bool binary(binary_t &) override {
        return false;
    }
    bool start_object(std::size_t) override {
        return open(json::object());
    }
    bool key(string_t &k) override {
        key_ = k;
        return true;
    }
    bool end_object() override {
        return close();
    }
    bool start_array(std::size_t) override {
        return open(json::array());
    }
    bool end_array() override {
        return close();
    }
    bool parse_error(std::size_t, const std::string &, const nlohmann::detail::exception &e) override {
        throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
    }

  private:
    std::vector<json *> stack_;
    std::string key_;

    json *slot() {
        if (stack_.empty()) {
            return &result;
        }
        json &top = *stack_.back();
        if (top.is_array()) {
            top.push_back(nullptr);
            return &top.back();
        }
        return &top[key_];
    }
    bool put(json v) {
        *slot() = std::move(v);
        return true;
    }
    bool open(json v) {
        json *s = slot();
        *s = std::move(v);
        stack_.push_back(s);
        return true;
    }
    bool close() {
        stack_.pop_back();
        return true;
    }
};

[[noreturn]] void shape_error(const std::string &what) {
    throw Error(ErrorCode::ParseError, "state JSON: " + what);
}

// Validates {"n": int, "amps": [[re, im], ...]} and returns n.
int check_shape(const json &doc, bool literal) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("amps")) {
        shape_error("expected an object with \"n\" and \"amps\"");
    }
    const json &jn = doc.at("n");
    int n = 0;
    if (literal) {
        if (!jn.is_string()) {
            shape_error("\"n\" must be an integer");
        }
        try {
            std::size_t used = 0;
            n = std::stoi(jn.get<std::string>(), &used);
            if (used != jn.get<std::string>().size()) {
                shape_error("\"n\" must be an integer");
            }
        } catch (const std::logic_error &) {
            shape_error("\"n\" must be an integer");
        }
    } else {
        if (!jn.is_number_integer()) {
            shape_error("\"n\" must be an integer");
        }
        n = jn.get<int>();
    }
    if (n < 1 || n > 4) {
        throw Error(ErrorCode::DimensionMismatch, "n must be between 1 and 4");
    }
    const json &amps = doc.at("amps");
    if (!amps.is_array() || amps.size() != (std::size_t{1} << n)) {
        throw Error(ErrorCode::DimensionMismatch,
                    "\"amps\" must hold 2^n = " + std::to_string(1 << n) + " entries");
    }
    for (const auto &a : amps) {
        if (!a.is_array() || a.size() != 2) {
            shape_error("each amplitude must be a [re, im] pair");
        }
    }
    return n;
}

json pair(Complex z) {
    return json::array({z.real(), z.imag()});
}

std::string kind_name(const TriClass &t) {
    std::string s = t.label();
    return s.substr(0, s.find('('));
}

}  // namespace

PureState parse_state(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
    }
    int n = check_shape(doc, false);
    std::vector<Complex> amps;
    for (const auto &a : doc.at("amps")) {
        if (!a[0].is_number() || !a[1].is_number()) {
            shape_error("amplitude parts must be numbers");
        }
        amps.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
    return {n, std::move(amps)};
}

ExactState parse_exact_state(std::string_view text) {
    LiteralSax sax;
    json::sax_parse(text, &sax);
    int n = check_shape(sax.result, true);
    std::vector<GaussianRational> amps;
    for (const auto &a : sax.result.at("amps")) {
        if (!a[0].is_string() || !a[1].is_string()) {
            shape_error("amplitude parts must be numbers or \"p/q\" strings");
        }
        amps.emplace_back(GaussianRational::parse_rational(a[0].get<std::string>()),
                          GaussianRational::parse_rational(a[1].get<std::string>()));
    }
    return {n, std::move(amps)};
}

json state_to_json(const PureState &state) {
    json amps = json::array();
    for (const auto &a : state.amplitudes()) {
        amps.push_back(pair(a));
    }
    return {{"n", state.qubits()}, {"amps", std::move(amps)}};
}

json point_to_json(const ProjectivePoint &p) {
    return {{"x", pair(p.x)}, {"y", pair(p.y)}, {"multiplicity", p.multiplicity}};
}

json profile_to_json(const SpanProfile &profile) {
    json exceptional = json::array();
    for (const auto &e : profile.exceptional) {
        json j = point_to_json(e.point);
        j["type"] = e.type.label();
        exceptional.push_back(std::move(j));
    }
    return {{"generic", profile.generic_type.label()},
            {"quartic_identically_zero", profile.quartic_identically_zero},
            {"exact", profile.exact},
            {"exceptional", std::move(exceptional)},
            {"contains_000", profile.contains_000},
            {"bisep_cuts", profile.bisep_cuts},
            {"w_points", profile.w_points}};
}

json quartic_to_json(const QuarticForm &q) {
    json c = json::array();
    for (const auto &v : q.c) {
        c.push_back(pair({static_cast<double>(v.real()), static_cast<double>(v.imag())}));
    }
    return {{"coefficients", std::move(c)}, {"scale", q.scale}, {"node_ratio", q.node_ratio}};
}

json verdict_to_json(const QuadClass &verdict) {
    json j = {{"class", to_string(verdict.tag)},
              {"label", verdict.label()},
              {"distinguished", verdict.distinguished},
              {"cuts", verdict.cuts},
              {"absolute_cuts", verdict.absolute_cuts()}};
    if (verdict.degenerate()) {
        j["description"] = verdict.description;
    }
    if (verdict.profile) {
        j["profile"] = profile_to_json(*verdict.profile);
    }
    return j;
}

json verdict_to_json(const TriClass &verdict) {
    json cuts = json::array();
    if (verdict.kind == TriClass::Kind::Bisep) {
        cuts.push_back(verdict.cut);
    }
    return {{"class", kind_name(verdict)}, {"label", verdict.label()}, {"cuts", std::move(cuts)}};
}

}  // namespace slocc::io
