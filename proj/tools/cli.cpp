// Copyright 2026 The ratbase Authors.
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

#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ratbase/amalgam.hpp"
#include "ratbase/errors.hpp"
#include "ratbase/fraisse.hpp"
#include "ratbase/io.hpp"
#include "ratbase/rationalize.hpp"

namespace ratbase::cli {
namespace {

namespace fs = std::filesystem;
using io::Json;
using io::ToJson;

constexpr const char* kVersion = "0.1.0";
constexpr std::size_t kExactConstantMaxDim = 12;

struct Output {
  Json json = Json::object();
  /// Overrides the generic text rendering when nonempty.
  std::string text;
  int code = kOk;
};

// ---------------------------------------------------------------------------
// Rendering.

std::string Scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "YES" : "NO";
  if (v.is_null()) return "-";
  return v.dump();
}

bool IsFlat(const Json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
}

std::string Flat(const Json& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + Scalar(v[k]);
  return out + ")";
}

void Render(const Json& j, std::ostream& out, const std::string& pad) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    out << pad << it.key() << ":";
    if (v.is_primitive()) {
      out << " " << Scalar(v) << "\n";
    } else if (IsFlat(v)) {
      out << " " << Flat(v) << "\n";
    } else if (v.is_object()) {
      out << "\n";
      Render(v, out, pad + "  ");
    } else {
      out << "\n";
      for (const Json& item : v) {
        if (item.is_primitive()) {
          out << pad << "  - " << Scalar(item) << "\n";
        } else if (IsFlat(item)) {
          out << pad << "  - " << Flat(item) << "\n";
        } else {
          out << pad << "  -\n";
          Render(item, out, pad + "    ");
        }
      }
    }
  }
}

Json PatternJson(const SignPattern& s) {
  Json out = Json::array();
  for (int x : s) out.push_back(x);
  return out;
}

Json MapJson(const BasedMorphism& f) {
  Json out = Json::object();
  for (const auto& [from, to] : f.LabelPairs()) out[from] = to;
  return out;
}

std::vector<std::string> SplitLabels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw ParseError("empty label in '" + text + "'");
    out.push_back(item);
  }
  if (out.empty()) throw ParseError("no labels given");
  return out;
}

Rat ParseParam(const std::string& text, const char* name) {
  try {
    return ParseRat(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string("--") + name + ": " + e.what());
  }
}

fs::path CertificatePath(const fs::path& out) {
  fs::path p = out;
  if (p.extension() == ".json") p.replace_extension();
  return p.string() + ".certificate.json";
}

// ---------------------------------------------------------------------------
// space

Output SpaceValidate(const std::string& file) {
  io::RawSpace raw = io::ParseRawSpace(io::ReadTextFile(file));
  ValidationReport report = ValidateVertexList(raw.basis, raw.vertices);
  Output o;
  o.json["file"] = file;
  o.json["name"] = raw.name;
  o.json["dim"] = raw.basis.size();
  Json checks = Json::object();
  for (const ValidationCheck& c : report.checks) {
    Json entry;
    entry["passed"] = c.passed;
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks[c.name] = entry;
  }
  bool ok = report.ok();
  if (ok && raw.facets) {
    bool facets_ok = true;
    try {
      io::BuildSpace(raw);
    } catch (const ValidationFailed&) {
      facets_ok = false;
    }
    checks["facets"] = Json{{"passed", facets_ok}};
    ok = ok && facets_ok;
  }
  o.json["checks"] = checks;
  o.json["valid"] = ok;
  o.code = ok ? kOk : kValidation;
  return o;
}

Output SpaceNorm(const std::string& file, const std::string& vector) {
  BasedSpace s = io::ReadSpaceFile(file);
  Vector x = ParseVector(vector);
  if (x.size() != s.dim()) {
    throw ParseError("vector has " + std::to_string(x.size()) + " coordinates, space has dimension " +
                     std::to_string(s.dim()));
  }
  Output o;
  o.json["norm"] = ToJson(s.Norm(x));
  return o;
}

Output SpaceConstants(const std::string& file) {
  BasedSpace s = io::ReadSpaceFile(file);
  ConstantWitness ku = UnconditionalConstantWitness(s);
  ConstantWitness ks = SuppressionConstantWitness(s);
  Output o;
  o.json["K_u"] = ToJson(ku.value);
  o.json["K_u_signs"] = PatternJson(ku.pattern);
  o.json["K_u_vertex"] = ToJson(ku.vertex);
  o.json["K_s"] = ToJson(ks.value);
  o.json["K_s_pattern"] = PatternJson(ks.pattern);
  o.json["K_s_vertex"] = ToJson(ks.vertex);
  o.json["K_s <= K_u <= 2 K_s"] = ks.value <= ku.value && ku.value <= 2 * ks.value;
  return o;
}

Output EmitSpace(const BasedSpace& s, const std::string& out_path) {
  Output o;
  if (out_path.empty()) {
    o.json = io::SpaceToJson(s);
    o.text = io::SerializeSpace(s);
    return o;
  }
  io::WriteTextFile(out_path, io::SerializeSpace(s));
  o.json["written"] = out_path;
  o.json["dim"] = s.dim();
  o.json["vertices"] = s.ball().vertices().size();
  return o;
}

// ---------------------------------------------------------------------------
// amalgamate

struct AmalgamateArgs {
  std::string z, x, y, i, j, out, certificate;
};

Output Amalgamate(const AmalgamateArgs& a) {
  BasedSpace z = io::ReadSpaceFile(a.z);
  BasedSpace x = io::ReadSpaceFile(a.x);
  BasedSpace y = io::ReadSpaceFile(a.y);
  BasedMorphism i = io::ResolveMorphism(io::ParseMorphismFile(io::ReadTextFile(a.i)), z, x);
  BasedMorphism j = io::ResolveMorphism(io::ParseMorphismFile(io::ReadTextFile(a.j)), z, y);
  AmalgamOptions options;
  options.name = fs::path(a.out).stem().string();
  Pushout p = ratbase::Amalgamate(z, x, y, i, j, options);

  Json cert;
  cert["dim"] = p.w.dim();
  cert["vertices"] = p.w.ball().vertices().size();
  cert["i_prime"] = MapJson(p.i_prime);
  cert["j_prime"] = MapJson(p.j_prime);
  cert["i_prime_isometric"] = CertifyInclusionIsometry(p, i, j);
  cert["j_prime_isometric"] = CertifyIsometry(p.j_prime);
  cert["square_commutes"] = SameLabelMap(Compose(p.i_prime, i), Compose(p.j_prime, j));
  if (p.w.dim() <= kExactConstantMaxDim) {
    Rat kx = UnconditionalConstant(x);
    Rat ky = UnconditionalConstant(y);
    Rat kw = UnconditionalConstant(p.w);
    cert["K_u"] = Json{{"X", ToString(kx)}, {"Y", ToString(ky)}, {"W", ToString(kw)}};
    cert["K_u_within_max"] = kw <= std::max(kx, ky);
  } else {
    cert["K_u"] = nullptr;
  }
  const std::string cert_path = a.certificate.empty() ? CertificatePath(a.out).string() : a.certificate;
  io::WriteTextFile(a.out, io::SerializeSpace(p.w));
  io::WriteTextFile(cert_path, cert.dump(2) + "\n");

  Output o;
  o.json["written"] = a.out;
  o.json["certificate"] = cert_path;
  for (auto it = cert.begin(); it != cert.end(); ++it) o.json[it.key()] = it.value();
  bool ok = cert["i_prime_isometric"].get<bool>() && cert["j_prime_isometric"].get<bool>() &&
            cert["square_commutes"].get<bool>();
  if (cert.contains("K_u_within_max") && !cert["K_u_within_max"].get<bool>()) ok = false;
  o.code = ok ? kOk : kValidation;
  return o;
}

// ---------------------------------------------------------------------------
// chain

struct ChainArgs {
  std::size_t max_dim = 2;
  long max_den = 1;
  std::string k_bound = "1";
  std::size_t max_vertices = 12;
  std::size_t steps = 10;
  std::string out_dir;
  std::string seed;
};

Output RunChain(const ChainArgs& a) {
  CatalogBounds bounds;
  bounds.max_dim = a.max_dim;
  bounds.max_denominator = a.max_den;
  bounds.k_bound = ParseParam(a.k_bound, "k-bound");
  bounds.max_vertices = a.max_vertices;
  if (a.max_dim == 0 || a.max_den <= 0 || bounds.k_bound < 1) {
    throw ValidationFailed("catalog bounds must be positive and the K bound at least 1");
  }
  Catalog catalog = EnumerateSpaces(bounds);
  BasedSpace seed = a.seed.empty() ? BasedSpace({"e1"}, catalog.spaces.at(0).ball(), "interval")
                                   : io::ReadSpaceFile(a.seed);
  Chain chain = BuildGenericChain(catalog, a.steps, seed);
  ChainVerification v = VerifyChain(chain);

  Json ledger = Json::array();
  for (const ChainTask& t : chain.ledger) {
    Json e;
    e["stage"] = "U" + std::to_string(t.stage);
    e["target"] = catalog.spaces[t.catalog_index].name();
    e["f"] = MapJson(t.f);
    e["answered_at"] = t.answered_at ? Json("U" + std::to_string(*t.answered_at)) : Json(nullptr);
    e["witness"] = t.witness ? MapJson(*t.witness) : Json(nullptr);
    e["verified"] = t.verified;
    ledger.push_back(e);
  }
  Json summary;
  summary["catalog_size"] = catalog.spaces.size();
  summary["steps"] = chain.steps_taken;
  summary["stages"] = chain.stages.size();
  summary["last_stage_dim"] = chain.stages.back().dim();
  summary["tasks"] = chain.ledger.size();
  summary["answered"] = chain.answered();
  summary["pending"] = chain.pending();
  summary["halted"] = chain.halted.empty() ? Json(nullptr) : Json(chain.halted);
  summary["inclusions_isometric"] = v.inclusions_isometric;
  summary["witnesses_valid"] = v.witnesses_valid;
  summary["stages_within_k"] = v.stages_within_k;
  Json ku = Json::array();
  for (const auto& k : chain.ku) ku.push_back(k ? Json(ToString(*k)) : Json(nullptr));
  summary["stage_K_u"] = ku;
  if (!v.failures.empty()) summary["failures"] = v.failures;

  if (!a.out_dir.empty()) {
    fs::create_directories(fs::path(a.out_dir) / "catalog");
    for (const BasedSpace& s : catalog.spaces) {
      io::WriteTextFile(fs::path(a.out_dir) / "catalog" / (s.name() + ".json"), io::SerializeSpace(s));
    }
    for (const BasedSpace& s : chain.stages) {
      io::WriteTextFile(fs::path(a.out_dir) / (s.name() + ".json"), io::SerializeSpace(s));
    }
    io::WriteTextFile(fs::path(a.out_dir) / "ledger.json", ledger.dump(2) + "\n");
    io::WriteTextFile(fs::path(a.out_dir) / "verification.json", summary.dump(2) + "\n");
  }
  Output o;
  o.json = summary;
  if (a.out_dir.empty()) o.json["ledger"] = ledger;
  o.code = v.ok() ? kOk : kValidation;
  return o;
}

// ---------------------------------------------------------------------------
// counterexample, bound and rationalization

struct ParamArgs {
  std::string eta, eps, delta;
};

CounterexampleParams ToParams(const ParamArgs& a) {
  return {ParseParam(a.eta, "eta"), ParseParam(a.eps, "eps"), ParseParam(a.delta, "delta")};
}

Output CounterexampleCmd(const ParamArgs& a, const std::string& out_path) {
  Counterexample c = BuildCounterexample(ToParams(a));
  Output o;
  o.json["space"] = io::SpaceToJson(c.a);
  o.json["a_point"] = ToJson(c.a_point);
  o.json["norm_a_point"] = ToJson(c.gauge_a_point);
  o.json["norm_e1"] = ToJson(c.gauge_basis[0]);
  o.json["norm_e2"] = ToJson(c.gauge_basis[1]);
  o.json["norm_e3"] = ToJson(c.gauge_basis[2]);
  o.json["K_u"] = ToJson(c.ku);
  o.json["K_u_bound"] = ToJson(c.ku_bound);
  o.json["K_u_within_bound"] = c.ku <= c.ku_bound;
  o.json["section_e1_e2_is_max_norm_square"] = c.section_is_square;
  o.json["lambda_prime_vertices"] = ToJson(c.lambda_prime_ball.vertices());
  o.json["lambda_prime_one_based"] = c.lambda_prime_one_based;
  o.json["lambda_prime_sandwich"] = c.lambda_prime_sandwich;
  o.json["all_certificates_pass"] = c.Passed();
  if (!out_path.empty()) io::WriteTextFile(out_path, io::SerializeSpace(c.a));
  o.code = c.Passed() ? kOk : kValidation;
  return o;
}

Output BoundCmd(const ParamArgs& a, const std::string& candidate) {
  CounterexampleParams p = ToParams(a);
  CheckNonUniversalityParams(p);
  Rat bound = NonUniversalityBound(p);
  Output o;
  o.json["bound"] = ToJson(bound);
  o.json["one_plus_delta"] = ToJson(1 + p.delta);
  o.json["exceeds"] = bound > 1 + p.delta;
  std::ostringstream text;
  text << "bound: " << ToString(bound) << "\n";
  text << "exceeds " << ToString(1 + p.delta) << ": " << (bound > 1 + p.delta ? "YES" : "NO") << "\n";
  if (!candidate.empty()) {
    BasedSpace s = io::ReadSpaceFile(candidate);
    NonUniversalityReport r = VerifyNonUniversalityBound(p, s.ball());
    Json c;
    c["norm_e3"] = ToJson(r.gauge_e3);
    c["norm_e1_plus_e2"] = ToJson(r.gauge_e1_plus_e2);
    c["norm_a_point"] = ToJson(r.gauge_a_point);
    c["hypotheses_met"] = r.hypotheses_met;
    c["bound_respected"] = r.hypotheses_met ? Json(r.bound_respected) : Json(nullptr);
    o.json["candidate"] = c;
    std::ostringstream rendered;
    Render(Json{{"candidate", c}}, rendered, "");
    text << rendered.str();
    if (r.hypotheses_met && !r.bound_respected) o.code = kValidation;
  }
  o.text = text.str();
  return o;
}

struct RationalizeArgs {
  std::string space, lambda, lambda_ball, delta, delta_prime, eps, out;
  bool lenient = false;
};

Output RationalizeCmd(const RationalizeArgs& a) {
  BasedSpace s = io::ReadSpaceFile(a.space);
  std::vector<std::string> lambda = SplitLabels(a.lambda);
  BasedSpace lambda_space = io::ReadSpaceFile(a.lambda_ball);
  if (lambda_space.labels() != Subspace(s, lambda).labels()) {
    throw ValidationFailed("the Lambda ball file must use the Lambda labels in the space's order");
  }
  SandwichParams p{ParseParam(a.delta, "delta"), ParseParam(a.delta_prime, "delta-prime"), ParseParam(a.eps, "eps")};
  RationalizeOptions options;
  options.enforce_preconditions = !a.lenient;
  RationalizeResult r = RationalizeExtension(s, lambda, lambda_space.ball(), p, options);
  const RationalizeReport& rep = r.report;
  Output o;
  if (!rep.precondition_failures.empty()) o.json["precondition_failures"] = rep.precondition_failures;
  o.json["K"] = ToJson(rep.k);
  o.json["sandwich_factor"] = ToJson(rep.sandwich_factor);
  o.json["vertices"] = r.a_prime.ball().vertices().size();
  o.json["i_section_equal"] = rep.certificate_i();
  o.json["ii_unit_basis"] = rep.certificate_ii();
  o.json["iii_K_u"] = ToJson(rep.ku_prime);
  o.json["iii_K_u_within_K"] = rep.certificate_iii();
  o.json["iv_alpha"] = ToJson(rep.alpha);
  o.json["iv_beta"] = ToJson(rep.beta);
  o.json["iv_strict_sandwich"] = rep.certificate_iv();
  o.json["all_certificates_pass"] = rep.Passed();
  if (!a.out.empty()) io::WriteTextFile(a.out, io::SerializeSpace(r.a_prime));
  o.code = rep.Passed() ? kOk : kValidation;
  return o;
}

// ---------------------------------------------------------------------------

void ApplyBudgetOverride() {
  const char* env = std::getenv("RATBASE_VERTEX_BUDGET");
  if (env == nullptr) return;
  std::string text(env);
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit) || text.size() > 12) {
    throw ParseError("RATBASE_VERTEX_BUDGET must be a positive integer, got '" + text + "'");
  }
  std::size_t value = std::stoull(text);
  if (value == 0) throw ParseError("RATBASE_VERTEX_BUDGET must be positive");
  SetDefaultBudget(Budget{value});
}

std::string JoinArgs(const std::vector<std::string>& args) {
  std::string out = "ratbase";
  for (const std::string& a : args) out += " " + a;
  return out;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rational based Banach spaces", "ratbase"};
  app.require_subcommand(1);
  bool json = false;
  bool meta = false;
  app.add_flag("--json", json, "Machine-readable JSON output");
  app.add_flag("--meta", meta, "Prefix output with tool version and command line");
  app.set_version_flag("--version", kVersion);

  std::function<Output()> action;

  CLI::App* space = app.add_subcommand("space", "Inspect a space file");
  space->require_subcommand(1);
  std::string file, vector, labels, out_path;
  auto* validate = space->add_subcommand("validate", "Check symmetry, dimension, irredundancy, unit basis");
  validate->add_option("file", file)->required();
  validate->callback([&] { action = [&] { return SpaceValidate(file); }; });
  auto* norm = space->add_subcommand("norm", "Exact norm of a vector such as 8/5,8/5,-3/5");
  norm->add_option("file", file)->required();
  norm->add_option("vector", vector)->required();
  norm->callback([&] { action = [&] { return SpaceNorm(file, vector); }; });
  auto* constants = space->add_subcommand("constants", "Unconditional and suppression constants");
  constants->add_option("file", file)->required();
  constants->callback([&] { action = [&] { return SpaceConstants(file); }; });
  auto* subspace = space->add_subcommand("subspace", "Section on a comma-separated label list");
  subspace->add_option("file", file)->required();
  subspace->add_option("labels", labels)->required();
  subspace->add_option("-o,--out", out_path, "Output space file (default: stdout)");
  subspace->callback([&] {
    action = [&] { return EmitSpace(Subspace(io::ReadSpaceFile(file), SplitLabels(labels)), out_path); };
  });
  auto* one_base = space->add_subcommand("one-base", "Intersect the ball with all its sign reflections");
  one_base->add_option("file", file)->required();
  one_base->add_option("-o,--out", out_path, "Output space file (default: stdout)");
  one_base->callback([&] { action = [&] { return EmitSpace(OneBasing(io::ReadSpaceFile(file)), out_path); }; });

  AmalgamateArgs am;
  CLI::App* amalgamate = app.add_subcommand("amalgamate", "Pushout of i: Z -> X and j: Z -> Y");
  amalgamate->add_option("--z", am.z, "Space file of Z")->required();
  amalgamate->add_option("--x", am.x, "Space file of X")->required();
  amalgamate->add_option("--y", am.y, "Space file of Y")->required();
  amalgamate->add_option("--i", am.i, "Morphism file Z -> X")->required();
  amalgamate->add_option("--j", am.j, "Morphism file Z -> Y")->required();
  amalgamate->add_option("--out", am.out, "Output space file for W")->required();
  amalgamate->add_option("--certificate", am.certificate, "Certificate file (default: <out>.certificate.json)");
  amalgamate->callback([&] { action = [&] { return Amalgamate(am); }; });

  ChainArgs ch;
  CLI::App* chain = app.add_subcommand("chain", "Build a generic chain over an enumerated catalog");
  chain->add_option("--max-dim", ch.max_dim, "Catalog dimension bound")->capture_default_str();
  chain->add_option("--max-den", ch.max_den, "Catalog denominator bound")->capture_default_str();
  chain->add_option("--k-bound", ch.k_bound, "Catalog K_u bound")->capture_default_str();
  chain->add_option("--max-vertices", ch.max_vertices, "Catalog vertex bound")->capture_default_str();
  chain->add_option("--steps", ch.steps, "Number of tasks to answer")->capture_default_str();
  chain->add_option("--out-dir", ch.out_dir, "Directory for stage, catalog and ledger files");
  chain->add_option("--seed", ch.seed, "Seed space file (default: the interval)");
  chain->callback([&] { action = [&] { return RunChain(ch); }; });

  CLI::App* paper = app.add_subcommand("paper", "The 3-dimensional counterexample and the rationalization step");
  paper->require_subcommand(1);
  ParamArgs pa;
  std::string candidate;
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--eta", pa.eta)->required();
    cmd->add_option("--eps", pa.eps)->required();
    cmd->add_option("--delta", pa.delta)->required();
  };
  auto* example = paper->add_subcommand("example", "Build the counterexample space and check its certificates");
  add_params(example);
  example->add_option("-o,--out", out_path, "Also write the space file");
  example->callback([&] { action = [&] { return CounterexampleCmd(pa, out_path); }; });
  auto* bound = paper->add_subcommand("non-universal-bound", "Exact lower bound on the extended norm of the a-point");
  add_params(bound);
  bound->add_option("--candidate", candidate, "Space file of a candidate norm to test against the bound");
  bound->callback([&] { action = [&] { return BoundCmd(pa, candidate); }; });
  RationalizeArgs ra;
  auto* rationalize = paper->add_subcommand("rationalize", "Rational extension of a Lambda norm with certificates");
  rationalize->add_option("--space", ra.space, "Space file of A (K_u = 1)")->required();
  rationalize->add_option("--lambda", ra.lambda, "Comma-separated Lambda labels")->required();
  rationalize->add_option("--lambda-ball", ra.lambda_ball, "Space file of the new Lambda norm")->required();
  rationalize->add_option("--delta", ra.delta)->required();
  rationalize->add_option("--delta-prime", ra.delta_prime)->required();
  rationalize->add_option("--eps", ra.eps)->required();
  rationalize->add_option("-o,--out", ra.out, "Also write the extended space file");
  rationalize->add_flag("--lenient", ra.lenient, "Record precondition failures instead of stopping");
  rationalize->callback([&] { action = [&] { return RationalizeCmd(ra); }; });

  for (CLI::App* sub : {space, amalgamate, chain, paper}) sub->fallthrough();
  for (CLI::App* sub : {validate, norm, constants, subspace, one_base, example, bound, rationalize}) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  auto fail = [&](int code, const std::string& what) {
    err << "error: " << what << "\n";
    if (json) {
      Json j;
      j["error"] = what;
      j["exit_code"] = code;
      out << j.dump(2) << "\n";
    }
    return code;
  };
  Output o;
  try {
    ApplyBudgetOverride();
    o = action();
  } catch (const ParseError& e) {
    return fail(kParse, e.what());
  } catch (const BudgetExceeded& e) {
    return fail(kBudget, e.what());
  } catch (const NotIsometric& e) {
    return fail(kNotIsometric, e.what());
  } catch (const PreconditionFailed& e) {
    return fail(kPrecondition, e.what());
  } catch (const InfeasibleSandwich& e) {
    return fail(kPrecondition, e.what());
  } catch (const Error& e) {
    return fail(kValidation, e.what());
  } catch (const fs::filesystem_error& e) {
    return fail(kParse, e.what());
  }

  if (json) {
    Json j;
    if (meta) j["meta"] = Json{{"tool", "ratbase"}, {"version", kVersion}, {"command", JoinArgs(args)}};
    for (auto it = o.json.begin(); it != o.json.end(); ++it) j[it.key()] = it.value();
    out << j.dump(2) << "\n";
  } else {
    if (meta) out << "# ratbase " << kVersion << "\n# command: " << JoinArgs(args) << "\n";
    if (!o.text.empty()) {
      out << o.text;
    } else {
      Render(o.json, out, "");
    }
  }
  return o.code;
}

}  // namespace ratbase::cli
