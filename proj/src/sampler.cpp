// Copyright 2026 The povm-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "povm/sampler.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <limits>

#include "povm/error.hpp"

namespace povm {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t prod = std::uint64_t{a} * b;
  hi = static_cast<std::uint32_t>(prod >> 32);
  lo = static_cast<std::uint32_t>(prod);
}

Ket act(const Complex2x2& m, const Ket& v) { return m * v; }

double norm2(const Ket& v) { return std::norm(v[0]) + std::norm(v[1]); }

std::optional<PolarizationState> post_state_of(const Ket& v) {
  if (norm2(v) == 0.0) return std::nullopt;
  return PolarizationState::normalized(v);
}

}  // namespace

Philox4x32::Block Philox4x32::generate(Block ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

Philox4x32::Philox4x32(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

std::uint32_t Philox4x32::next_u32() {
  if (used_ == 4) {
    const Block ctr{static_cast<std::uint32_t>(index_), static_cast<std::uint32_t>(index_ >> 32),
                    static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
    buffer_ = generate(ctr, {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
    ++index_;
    used_ = 0;
  }
  return buffer_[used_++];
}

std::uint64_t Philox4x32::next_u64() {
  const std::uint64_t hi = next_u32();
  return (hi << 32) | next_u32();
}

double Philox4x32::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::vector<double> born_probabilities(const PolarizationState& state,
                                       const std::vector<Complex2x2>& ops, double tol) {
  if (ops.empty()) throw Error(ErrorCode::kIncompleteSet, "empty operator set");
  Complex2x2 sum = Complex2x2::zero();
  for (const Complex2x2& m : ops) sum += gram(m);
  if (!(max_abs_diff(sum, Complex2x2::identity()) <= tol)) {
    throw Error(ErrorCode::kIncompleteSet, "sum of M†M differs from the identity");
  }
  std::vector<double> p;
  p.reserve(ops.size());
  for (const Complex2x2& m : ops) p.push_back(norm2(act(m, state.ket())));
  return p;
}

namespace {

std::size_t draw_index(const std::vector<double>& p, double u) {
  double cum = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0.0) continue;
    last_nonzero = k;
    cum += p[k];
    if (u < cum) return k;
  }
  return last_nonzero;
}

}  // namespace

std::vector<OutcomeRecord> outcome_table(const PolarizationState& state,
                                         const std::vector<Complex2x2>& ops) {
  const std::vector<double> p = born_probabilities(state, ops);
  std::vector<OutcomeRecord> out;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    out.push_back({k, p[k], post_state_of(act(ops[k], state.ket()))});
  }
  return out;
}

OutcomeRecord sample_outcome(const PolarizationState& state, const std::vector<Complex2x2>& ops,
                             Philox4x32& rng) {
  const std::vector<double> p = born_probabilities(state, ops);
  const std::size_t k = draw_index(p, rng.uniform());
  return {k, p[k], post_state_of(act(ops[k], state.ket()))};
}

ChainRunRecord run_chain(const PolarizationState& state, const MultiOutcomePovm& chain,
                         Philox4x32& rng) {
  const std::size_t n_stages = chain.stages.size();
  Ket psi = state.ket();
  double path = 1.0;
  for (std::size_t l = 0; l < n_stages; ++l) {
    const ChainStage& s = chain.stages[l];
    const Ket stop = act(s.m1, psi);
    const Ket go = act(s.m2, psi);
    const double p_stop = norm2(stop);
    const double p_go = norm2(go);
    const double u = rng.uniform() * (p_stop + p_go);
    if (p_go == 0.0 || (p_stop > 0.0 && u < p_stop)) {
      return {l, static_cast<int>(l + 1), path * p_stop / (p_stop + p_go),
              post_state_of(act(chain.w_ops[l], stop))};
    }
    path *= p_go / (p_stop + p_go);
    psi = scale(go, 1.0 / std::sqrt(p_go));
  }
  return {n_stages, static_cast<int>(n_stages), path, post_state_of(act(chain.w_ops[n_stages], psi))};
}

std::vector<double> chain_path_probabilities(const PolarizationState& state,
                                             const MultiOutcomePovm& chain) {
  std::vector<double> out;
  Ket psi = state.ket();  // unnormalised Y_l |psi>
  for (const ChainStage& s : chain.stages) {
    out.push_back(norm2(act(s.m1, psi)));
    psi = act(s.m2, psi);
  }
  out.push_back(norm2(psi));
  return out;
}

double expected_measurement_count(const std::vector<double>& probabilities) {
  const std::size_t n = probabilities.size();
  double e = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    e += probabilities[k] * static_cast<double>(std::min(k + 1, n > 1 ? n - 1 : 1));
  }
  return e;
}

std::vector<OutcomeRecord> sample_shots(const PolarizationState& state,
                                        const std::vector<Complex2x2>& ops, std::uint64_t seed,
                                        std::size_t shots) {
  const std::vector<double> p = born_probabilities(state, ops);
  std::vector<std::optional<PolarizationState>> post;
  for (const Complex2x2& m : ops) post.push_back(post_state_of(act(m, state.ket())));

  std::vector<OutcomeRecord> out;
  out.reserve(shots);
  for (std::size_t start = 0; start < shots; start += kShotsPerStream) {
    Philox4x32 rng(seed, start / kShotsPerStream);
    const std::size_t end = std::min(shots, start + kShotsPerStream);
    for (std::size_t i = start; i < end; ++i) {
      const std::size_t k = draw_index(p, rng.uniform());
      out.push_back({k, p[k], post[k]});
    }
  }
  return out;
}

std::vector<ChainRunRecord> run_chain_shots(const PolarizationState& state,
                                            const MultiOutcomePovm& chain, std::uint64_t seed,
                                            std::size_t shots) {
  std::vector<ChainRunRecord> out;
  out.reserve(shots);
  for (std::size_t start = 0; start < shots; start += kShotsPerStream) {
    Philox4x32 rng(seed, start / kShotsPerStream);
    const std::size_t end = std::min(shots, start + kShotsPerStream);
    for (std::size_t i = start; i < end; ++i) out.push_back(run_chain(state, chain, rng));
  }
  return out;
}

double chi_square_pvalue(double statistic, int dof) {
  if (!std::isfinite(statistic)) return 0.0;  // a count the model forbids
  if (dof <= 0) return 1.0;
  const boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

ChiSquareResult chi_square_gof(const std::vector<std::uint64_t>& counts,
                               const std::vector<double>& probabilities) {
  if (counts.size() != probabilities.size()) {
    throw Error(ErrorCode::kValidation, "counts and probabilities differ in length");
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  ChiSquareResult r;
  int bins = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const double expected = probabilities[k] * static_cast<double>(total);
    if (expected <= 0.0) {
      if (counts[k] > 0) r.statistic = std::numeric_limits<double>::infinity();
      continue;
    }
    const double d = static_cast<double>(counts[k]) - expected;
    r.statistic += d * d / expected;
    ++bins;
  }
  r.dof = std::max(0, bins - 1);
  r.p_value = chi_square_pvalue(r.statistic, r.dof);
  return r;
}

ChiSquareResult chi_square_homogeneity(const std::vector<std::uint64_t>& a,
                                       const std::vector<std::uint64_t>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kValidation, "samples differ in bin count");
  double na = 0.0, nb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    na += static_cast<double>(a[k]);
    nb += static_cast<double>(b[k]);
  }
  ChiSquareResult r;
  if (na == 0.0 || nb == 0.0) return r;
  const double n = na + nb;
  int bins = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double col = static_cast<double>(a[k] + b[k]);
    if (col == 0.0) continue;
    const double ea = na * col / n;
    const double eb = nb * col / n;
    r.statistic += (a[k] - ea) * (a[k] - ea) / ea + (b[k] - eb) * (b[k] - eb) / eb;
    ++bins;
  }
  r.dof = std::max(0, bins - 1);
  r.p_value = chi_square_pvalue(r.statistic, r.dof);
  return r;
}

}  // namespace povm
