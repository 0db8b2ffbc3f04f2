/*
 * Copyright 2026 The vstlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "vstlab/irreducibility.hpp"

#include <deque>
#include <variant>

#include "vstlab/error.hpp"

namespace vstlab {

namespace {

std::vector<Gaussian> flatten(const FieldMatrix& m) {
  return {m.entries().begin(), m.entries().end()};
}

std::vector<std::vector<Gaussian>> witness_candidates(const FieldRep& rep,
                                                      std::optional<Gaussian> weight) {
  const auto n = static_cast<std::size_t>(rep.strands());
  std::vector<std::vector<Gaussian>> out;
  out.emplace_back(n, Gaussian(1));
  if (weight && !(*weight == Gaussian(1))) {
    std::vector<Gaussian> w(n);
    Gaussian acc(1);
    for (std::size_t k = n; k-- > 0;) {
      w[k] = acc;
      acc *= *weight;
    }
    out.push_back(std::move(w));
  }
  std::vector<FieldMatrix> shifted;
  for (const auto& m : rep.generator_images()) shifted.push_back(m - FieldMatrix::identity(n));
  for (auto& v : common_kernel(shifted)) out.push_back(std::move(v));
  return out;
}

IrreducibilityReport decide_impl(const FieldRep& rep, std::optional<Gaussian> weight) {
  IrreducibilityReport report;
  report.n = rep.strands();
  const auto mats = rep.generator_images();
  report.algebra_dimension = burnside_dimension(mats);
  const auto full = static_cast<std::size_t>(rep.strands()) * static_cast<std::size_t>(rep.strands());
  report.verdict = report.algebra_dimension == full ? Verdict::Irreducible : Verdict::Reducible;
  if (report.verdict == Verdict::Reducible) {
    for (auto& x : witness_candidates(rep, weight)) {
      if (invariant_vector_check(mats, x)) {
        report.witness = std::move(x);
        break;
      }
    }
  }
  return report;
}

}  // namespace

std::size_t burnside_dimension(std::span<const FieldMatrix> mats) {
  if (mats.empty()) throw ConstraintError("burnside_dimension needs at least one matrix");
  const std::size_t n = mats.front().size();
  for (const auto& m : mats) {
    if (m.size() != n) throw MismatchError("burnside_dimension: mixed matrix sizes");
  }
  const std::size_t full = n * n;
  EchelonBasis basis(full);
  std::deque<FieldMatrix> pending;
  auto identity = FieldMatrix::identity(n);
  basis.insert(flatten(identity));
  pending.push_back(std::move(identity));
  std::size_t stale = 0;
  const std::size_t cap = full * full;
  while (!pending.empty() && basis.rank() < full && stale < cap) {
    FieldMatrix word = std::move(pending.front());
    pending.pop_front();
    for (const auto& g : mats) {
      FieldMatrix next = word * g;
      if (basis.insert(flatten(next))) {
        pending.push_back(std::move(next));
        stale = 0;
      } else {
        ++stale;
      }
    }
  }
  return basis.rank();
}

bool invariant_vector_check(std::span<const FieldMatrix> mats, std::span<const Gaussian> x) {
  std::size_t pivot = 0;
  while (pivot < x.size() && x[pivot].is_zero()) ++pivot;
  if (pivot == x.size()) throw ConstraintError("invariant_vector_check: zero vector");
  for (const auto& m : mats) {
    auto y = m.apply(x);
    Gaussian lambda = y[pivot] / x[pivot];
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (!(y[k] == lambda * x[k])) return false;
    }
  }
  return true;
}

bool eta1_irreducible_predicate(const LaurentPoly& v) { return !v.is_one(); }

bool eta2_irreducible_predicate(const Eta2PrimeParams& p) {
  const LaurentPoly one(1);
  return !(p.f == p.v) || !(p.w * p.v + p.f * p.f * p.y == p.v) || !(p.v * p.y + p.w == one);
}

std::string_view to_string(Verdict v) { return v == Verdict::Irreducible ? "irreducible" : "reducible"; }

IrreducibilityReport decide(const PolyRep& rep, const Gaussian& t0) {
  if (t0.is_zero()) throw ConstraintError("specialization at t = 0 is not defined");
  std::optional<Gaussian> weight;
  std::optional<Verdict> predicate;
  if (const auto* p = std::get_if<Eta1PrimeParams>(&rep.origin())) {
    weight = p->v.eval(t0);
    predicate = eta1_irreducible_predicate(p->v) ? Verdict::Irreducible : Verdict::Reducible;
  } else if (const auto* q = std::get_if<Eta2PrimeParams>(&rep.origin())) {
    weight = q->v.eval(t0);
    predicate = eta2_irreducible_predicate(*q) ? Verdict::Irreducible : Verdict::Reducible;
  }
  IrreducibilityReport report = decide_impl(specialize(rep, t0), weight);
  report.t0 = t0;
  report.predicate = predicate;
  return report;
}

IrreducibilityReport decide(const FieldRep& rep) {
  std::optional<Gaussian> weight;
  if (const auto* p = std::get_if<UpsilonParams>(&rep.origin()); p && !p->v.is_zero()) weight = p->v;
  IrreducibilityReport report = decide_impl(rep, weight);
  report.t0 = Gaussian(1);
  return report;
}

}  // namespace vstlab
