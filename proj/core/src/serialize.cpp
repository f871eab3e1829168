// Copyright 2026 The SoftEx Model Authors
// SPDX-License-Identifier: Apache-2.0
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

#include <string>

#include "json.hpp"
#include "softex/errors.hpp"
#include "softex/expu.hpp"
#include "softex/gelu.hpp"
#include "softex/mesh.hpp"
#include "softex/minimax.hpp"
#include "softex/perf_model.hpp"

namespace softex {

using nlohmann::json;

namespace {

json Parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

template <class F>
auto Guard(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid ") + what + " document: " + e.what());
  }
}

json Encoding(const DyadicConstant& c) { return {{"int", c.code}, {"scale_log2", -c.frac_bits}}; }

DyadicConstant Decoding(const json& j) {
  return {j.at("int").get<std::int32_t>(), -j.at("scale_log2").get<int>()};
}

}  // namespace

std::string to_json(const ExppParams& p) {
  json j;
  j["alpha"] = p.alpha().value();
  j["beta"] = p.beta().value();
  j["gamma1"] = p.gamma1().value();
  j["gamma2"] = p.gamma2().value();
  j["encodings"] = {{"alpha", Encoding(p.alpha())},
                    {"beta", Encoding(p.beta())},
                    {"gamma1", Encoding(p.gamma1())},
                    {"gamma2", Encoding(p.gamma2())}};
  return j.dump(2) + "\n";
}

ExppParams expp_params_from_json(const std::string& text) {
  const json j = Parse(text, "expp parameter");
  return Guard("expp parameter", [&] {
    const json& e = j.at("encodings");
    return ExppParams(Decoding(e.at("alpha")), Decoding(e.at("beta")), Decoding(e.at("gamma1")),
                      Decoding(e.at("gamma2")));
  });
}

std::string to_json(const SumExpParams& p) {
  json terms = json::array();
  for (const SumExpTerm& t : p.terms) terms.push_back({{"a", t.a}, {"b", t.b}});
  json j;
  j["terms"] = terms;
  j["r_max"] = p.r_max;
  j["fit_meta"] = Parse(p.fit_meta, "fit_meta");
  return j.dump(2) + "\n";
}

SumExpParams sum_exp_params_from_json(const std::string& text) {
  const json j = Parse(text, "sum-of-exponentials parameter");
  SumExpParams p = Guard("sum-of-exponentials parameter", [&] {
    SumExpParams out;
    for (const json& t : j.at("terms")) {
      out.terms.push_back({t.at("a").get<double>(), t.at("b").get<double>()});
    }
    out.r_max = j.value("r_max", 0.0);
    out.fit_meta = j.contains("fit_meta") ? j["fit_meta"].dump() : "{}";
    return out;
  });
  p.Validate();
  return p;
}

std::string to_json(const SoftexConfig& c) {
  json j = {{"lanes", c.lanes},
            {"acc_pipeline_depth", c.acc_pipeline_depth},
            {"rescale_stall_cycles", c.rescale_stall_cycles},
            {"newton_cycles", c.newton_cycles},
            {"datapath_latency", c.datapath_latency}};
  return j.dump(2) + "\n";
}

SoftexConfig softex_config_from_json(const std::string& text) {
  const json j = Parse(text, "latency config");
  SoftexConfig c = Guard("latency config", [&] {
    SoftexConfig d;
    d.lanes = j.value("lanes", d.lanes);
    d.acc_pipeline_depth = j.value("acc_pipeline_depth", d.acc_pipeline_depth);
    d.rescale_stall_cycles = j.value("rescale_stall_cycles", d.rescale_stall_cycles);
    d.newton_cycles = j.value("newton_cycles", d.newton_cycles);
    d.datapath_latency = j.value("datapath_latency", d.datapath_latency);
    return d;
  });
  c.Validate();
  return c;
}

std::string to_json(const MeshConfig& c) {
  json j = {{"n", c.n},
            {"trials", c.trials},
            {"hop_delay_max", c.hop_delay_max},
            {"chunk_elems", c.chunk_elems},
            {"link_bytes_per_cycle", c.link_bytes_per_cycle},
            {"cluster_peak_gops", c.cluster_peak_gops},
            {"utilization", c.utilization},
            {"clock_ghz", c.clock_ghz},
            {"seed", c.seed}};
  return j.dump(2) + "\n";
}

MeshConfig mesh_config_from_json(const std::string& text) {
  const json j = Parse(text, "mesh config");
  MeshConfig c = Guard("mesh config", [&] {
    MeshConfig d;
    d.n = j.value("n", d.n);
    d.trials = j.value("trials", d.trials);
    d.hop_delay_max = j.value("hop_delay_max", d.hop_delay_max);
    d.chunk_elems = j.value("chunk_elems", d.chunk_elems);
    d.link_bytes_per_cycle = j.value("link_bytes_per_cycle", d.link_bytes_per_cycle);
    d.cluster_peak_gops = j.value("cluster_peak_gops", d.cluster_peak_gops);
    d.utilization = j.value("utilization", d.utilization);
    d.clock_ghz = j.value("clock_ghz", d.clock_ghz);
    d.seed = j.value("seed", d.seed);
    return d;
  });
  c.Validate();
  return c;
}

std::string fit_report_json(const MinimaxProblem& problem, const MinimaxSolution& solution) {
  json j = {{"N", problem.n_terms},
            {"x_end", problem.x_end},
            {"metric", to_string(problem.metric)},
            {"r0_mode", to_string(problem.r0_mode)},
            {"r_max", solution.err_max},
            {"extrema", solution.extrema},
            {"iterations", solution.iterations}};
  return j.dump(2) + "\n";
}

}  // namespace softex
