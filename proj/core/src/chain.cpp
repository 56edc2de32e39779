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

#include <algorithm>

#include "ratbase/errors.hpp"
#include "ratbase/fraisse.hpp"

namespace ratbase {
namespace {

constexpr std::size_t kDirectCertifyMaxDim = 6;

std::size_t MaxCatalogDim(const Catalog& catalog) {
  std::size_t out = 0;
  for (const BasedSpace& s : catalog.spaces) out = std::max(out, s.dim());
  return out;
}

void EnqueueTasks(Chain& chain, const Catalog& catalog, std::size_t stage) {
  const BasedSpace& u = chain.stages[stage];
  if (u.dim() > MaxCatalogDim(catalog)) return;
  for (std::size_t c = 0; c < catalog.spaces.size(); ++c) {
    for (BasedMorphism& f : EnumerateEmbeddings(u, catalog.spaces[c])) {
      chain.ledger.push_back(ChainTask{stage, c, std::move(f), std::nullopt, std::nullopt, false});
    }
  }
}

std::optional<Rat> StageConstant(const BasedSpace& u, const ChainOptions& options) {
  if (u.dim() > options.exact_ku_max_dim) return std::nullopt;
  return UnconditionalConstant(u);
}

std::string StageName(std::size_t k) { return "U" + std::to_string(k); }

bool CertifyStage(const Pushout& p, const BasedMorphism& i, const BasedMorphism& j) {
  if (!CertifyInclusionIsometry(p, i, j)) return false;
  if (p.w.dim() <= kDirectCertifyMaxDim) return CertifyIsometry(p.i_prime);
  return true;
}

// Amalgamates i: Z -> U_m and j: Z -> Y onto the end of the chain. Returns
// the index of the stage receiving Y and the map Y -> that stage.
std::pair<std::size_t, BasedMorphism> Extend(Chain& chain, const BasedMorphism& i, const BasedMorphism& j,
                                             const ChainOptions& options) {
  const std::size_t m = chain.stages.size() - 1;
  AmalgamOptions amalgam_options;
  amalgam_options.name = StageName(m + 1);
  Pushout p = Amalgamate(i.domain(), chain.stages[m], j.codomain(), i, j, amalgam_options);
  if (p.w.dim() == chain.stages[m].dim()) {
    return {m, BasedMorphism(j.codomain(), chain.stages[m], p.j_prime.targets())};
  }
  if (p.w.dim() > options.max_stage_dim || p.w.ball().vertices().size() > options.max_stage_vertices) {
    throw BudgetExceeded("stage " + std::to_string(m + 1) + " would have dimension " + std::to_string(p.w.dim()) +
                         " and " + std::to_string(p.w.ball().vertices().size()) + " vertices");
  }
  chain.inclusion_verified.push_back(CertifyStage(p, i, j));
  chain.inclusions.push_back(p.i_prime);
  chain.origins.push_back(StageOrigin{i, j, p.j_prime});
  chain.stages.push_back(p.w);
  chain.ku.push_back(StageConstant(p.w, options));
  return {m + 1, p.j_prime};
}

}  // namespace

std::size_t Chain::answered() const {
  return static_cast<std::size_t>(
      std::count_if(ledger.begin(), ledger.end(), [](const ChainTask& t) { return t.answered_at.has_value(); }));
}

std::size_t Chain::pending() const { return ledger.size() - answered(); }

Chain BuildGenericChain(const Catalog& catalog, std::size_t steps, const BasedSpace& seed,
                        const ChainOptions& options) {
  if (!FindInCatalog(catalog, seed)) throw PreconditionFailed("the seed space is not in the catalog");
  Chain chain;
  chain.k_bound = catalog.bounds.k_bound;
  chain.stages.push_back(seed.WithName(StageName(0)));
  chain.ku.push_back(StageConstant(chain.stages[0], options));
  EnqueueTasks(chain, catalog, 0);

  std::size_t next = 0;
  while (chain.steps_taken < steps && next < chain.ledger.size()) {
    const std::size_t n = chain.ledger[next].stage;
    const std::size_t m = chain.stages.size() - 1;
    const std::size_t before = chain.stages.size();
    BasedMorphism f = chain.ledger[next].f;
    std::pair<std::size_t, BasedMorphism> answer{0, f};
    try {
      answer = Extend(chain, Inclusion(chain.stages[n], chain.stages[m]), f, options);
    } catch (const BudgetExceeded& e) {
      chain.halted = e.what();
      break;
    }
    ChainTask& task = chain.ledger[next];
    task.answered_at = answer.first;
    task.witness = answer.second;
    task.verified = CertifyIsometry(answer.second) &&
                    SameLabelMap(Compose(answer.second, f), Inclusion(chain.stages[n], chain.stages[answer.first]));
    if (chain.stages.size() > before) EnqueueTasks(chain, catalog, chain.stages.size() - 1);
    ++chain.steps_taken;
    ++next;
  }
  return chain;
}

ChainVerification VerifyChain(const Chain& chain) {
  ChainVerification out;
  for (std::size_t k = 0; k < chain.inclusions.size(); ++k) {
    const StageOrigin& o = chain.origins[k];
    Pushout p{chain.stages[k + 1], chain.inclusions[k], o.j_prime};
    bool ok = chain.inclusions[k].domain().labels() == chain.stages[k].labels() && CertifyStage(p, o.i, o.j);
    if (!ok) {
      out.inclusions_isometric = false;
      out.failures.push_back("inclusion U" + std::to_string(k) + " -> U" + std::to_string(k + 1) + " not isometric");
    }
  }
  for (std::size_t t = 0; t < chain.ledger.size(); ++t) {
    const ChainTask& task = chain.ledger[t];
    if (!task.answered_at) continue;
    ++out.answered;
    const BasedMorphism& g = *task.witness;
    const BasedSpace& target = chain.stages[*task.answered_at];
    bool ok = g.codomain().labels() == target.labels() && CertifyIsometry(g) &&
              SameLabelMap(Compose(g, task.f), Inclusion(chain.stages[task.stage], target));
    if (!ok) {
      out.witnesses_valid = false;
      out.failures.push_back("task " + std::to_string(t) + " has an invalid witness");
    }
  }
  for (std::size_t k = 0; k < chain.stages.size(); ++k) {
    if (chain.ku[k] && *chain.ku[k] > chain.k_bound) {
      out.stages_within_k = false;
      out.failures.push_back("stage U" + std::to_string(k) + " has K_u " + ToString(*chain.ku[k]));
    }
  }
  return out;
}

BasedMorphism TestUniversality(Chain& chain, const BasedSpace& a, std::span<const std::string> lambda_labels,
                               const BasedMorphism& f, const ChainOptions& options) {
  BasedSpace lambda = Subspace(a, lambda_labels);
  if (f.domain().labels() != lambda.labels()) throw Error("f is not defined on the Lambda subspace");
  std::size_t n = chain.stages.size();
  for (std::size_t k = 0; k < chain.stages.size(); ++k) {
    if (chain.stages[k].labels() == f.codomain().labels()) {
      n = k;
      break;
    }
  }
  if (n == chain.stages.size()) throw Error("f does not land in a stage of the chain");
  if (!CertifyIsometry(f)) throw NotIsometric("f is not an isometry");
  Rat ku = UnconditionalConstant(a);
  if (ku > chain.k_bound) {
    throw PreconditionFailed("K_u of the space is " + ToString(ku) + ", above the chain bound " +
                             ToString(chain.k_bound));
  }
  const std::size_t m = chain.stages.size() - 1;
  BasedMorphism i = Compose(Inclusion(chain.stages[n], chain.stages[m]), f);
  BasedMorphism j = Inclusion(lambda, a);
  auto [target, extension] = Extend(chain, i, j, options);
  bool ok = CertifyIsometry(extension) &&
            SameLabelMap(Compose(extension, j), Compose(Inclusion(chain.stages[n], chain.stages[target]), f));
  if (!ok) throw Error("extension failed verification");
  return extension;
}

}  // namespace ratbase
