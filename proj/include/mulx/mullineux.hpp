#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mulx/affine_weyl.hpp"
#include "mulx/crystal.hpp"
#include "mulx/symbols.hpp"

namespace mulx {

struct TraceStage {
  std::string name;
  Multicharge charge;
  Multipartition mp;
};

struct MullineuxResult {
  Multipartition image;
  std::vector<int> source_class;    // entries in [0, e)
  std::vector<int> target_class;    // (-s_{l-1},..,-s_0) mod e
  std::vector<int> exponents;       // p_1..p_{l-1} of the asymptotic lift
  WeylWord eta;
  std::vector<TraceStage> trace;    // input, componentwise-m1, asymptotic-lift, eta-image
};

/// The generalized Mullineux involution on the rank-n Kleshchev vertices of
/// class 𝔰: componentwise m1, asymptotic lift of -𝔰, then psi_word along eta.
/// n defaults to rank(mp); larger n gives the same image.
/// Throws not_regular_component / not_kleshchev on bad input.
MullineuxResult mullineux(const Multipartition& mp, const std::vector<int>& charge_class, int e,
                          std::optional<int> n = std::nullopt);

/// Path-negation computation of the same map, used for cross-validation:
/// replay the highest-weight path with negated labels in the crystal of the
/// reversed negated class.
Multipartition mullineux_oracle(const Multipartition& mp, const std::vector<int>& charge_class,
                                int e);

/// e = infinity: componentwise conjugation followed by psi_word along w_0,
/// threading the negated charges. mp must be a vertex for NodeOrder::uglov(s)
/// (throws not_in_crystal); s.e must be infinity.
Multipartition mullineux_infinity(const Multipartition& mp, const Multicharge& s);

struct SweepMismatch {
  std::vector<int> charge_class;
  Multipartition mp;
  Multipartition pipeline;
  Multipartition oracle;
};

struct SweepReport {
  int level = 0;
  int e = 0;
  int n_max = 0;
  std::size_t classes = 0;
  std::size_t vertices = 0;
  std::vector<SweepMismatch> mismatches;      // pipeline vs oracle
  std::size_t involution_failures = 0;        // applying the 𝔰̃-pipeline to the image
  std::size_t membership_failures = 0;        // image not Kleshchev for 𝔰̃
  std::size_t component_stage_failures = 0;   // componentwise-m1 stage not Kleshchev for -𝔰
  double seconds = 0.0;

  bool ok() const noexcept {
    return mismatches.empty() && involution_failures == 0 && membership_failures == 0 &&
           component_stage_failures == 0;
  }
};

/// Pipeline-vs-oracle comparison over every class in [0,e)^level and every
/// Kleshchev vertex of rank <= n_max, plus the involution and membership
/// checks. Deterministic; failures are collected, not thrown.
SweepReport verify_sweep(int level, int e, int n_max);

}  // namespace mulx
