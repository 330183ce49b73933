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


// The `slocc` command line, callable in-process for tests.
//
//   slocc classify [FILE] [--eps E] [--distinguished K|all] [--all] [--exact] [--explain]
//   slocc generate --family TAG [--param name=re,im]... [--sign +1|-1] [--cut K]
//                  [--perturb COND --seed S]
//   slocc fuzz-empty --trials N [--seed S] [--fixed-ghz] [--exact] [--verbose]
//   slocc explain [FILE] [--distinguished K] [--eps E] [--exact]
//
// stdout carries JSON only; diagnostics go to stderr. Exit codes: 0 genuine
// class (or success), 2 not genuinely entangled (Degenerate for 4 qubits,
// Sep000/Bisep for 3, product for 2), 1 any error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slocc::cli {

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace slocc::cli
