#pragma once

// Modular and unary separability of VAS sections. Two semi-procedures run in
// alternation: the positive one looks for a modulus n at which every target
// of the pair instance is provably unreachable, the negative one enumerates
// witness linear sets inside both expansions and asks linsep whether some
// pair of them is inseparable.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "vassep/linsep.hpp"
#include "vassep/linsets.hpp"
#include "vassep/reach.hpp"
#include "vassep/vas.hpp"

namespace vassep {

struct Budgets {
  std::size_t states = 10'000;  // forward exploration per oracle component
  std::size_t backward_states = 5'000;
  std::size_t km_nodes = 5'000;
  std::int64_t max_n = 12;
  std::size_t max_targets = 4'096;  // pair-instance targets per n
  std::size_t max_run_len = 24;
  std::size_t max_runs = 20'000;  // runs enumerated per side
  std::size_t max_periods = 4;    // pumps kept per witness
  std::size_t max_witness_pairs = 5'000;
  std::size_t pairs_per_round = 50;
  unsigned workers = 1;
  std::uint64_t seed = 0;

  ReachBudget reach() const {
    ReachBudget b;
    b.max_states = states;
    b.backward_states = backward_states;
    b.km_nodes = km_nodes;
    return b;
  }
};

/// Transition indices on the expanded system: a base run and pump runs that
/// each embed it. All targets vanish off the kept coordinates.
struct Witness {
  std::vector<std::size_t> base_run;
  std::vector<std::vector<std::size_t>> pump_runs;
};

/// The linear set {target(base)} + Lin>=0(target(pump) - target(base)) over the
/// first `kept` coordinates, after checking every witness condition.
inline LinearSet witness_set(const Vas& vas, std::size_t kept, const Witness& w) {
  auto in_expansion = [&](const Run& r, const char* what) {
    for (std::size_t i = kept; i < vas.dim; ++i)
      if (r.target()[i] != 0)
        throw std::invalid_argument(std::string("witness: ") + what + " target " + r.target().str() +
                                    " is nonzero off the kept coordinates");
  };
  std::vector<std::size_t> keep(kept);
  for (std::size_t i = 0; i < kept; ++i) keep[i] = i;
  const Run base = replay(vas, w.base_run);
  in_expansion(base, "base");
  std::vector<Config> periods;
  for (const auto& labels : w.pump_runs) {
    const Run pump = replay(vas, labels);
    in_expansion(pump, "pump");
    if (!run_embeds(base, pump)) throw std::invalid_argument("witness: base run does not embed into a pump run");
    Config delta = (pump.target() - base.target()).project(keep);
    if (!delta.is_zero()) periods.push_back(std::move(delta));
  }
  return LinearSet(base.target().project(keep), std::move(periods));
}

/// Runs of the expanded system by increasing length. After the runs of
/// length L are known, every run ending in the expansion is a base whose
/// pumps are the longer such runs embedding it, added shortest first and
/// skipped when the new period is already a nonnegative combination of the
/// kept ones. advance() returns the witnesses whose pump set grew, so a
/// witness with base and pumps of length <= L is emitted (or subsumed by an
/// emitted one with the same base) by the L-th call, unless max_periods or
/// max_runs cut the search.
class WitnessEnumerator {
 public:
  WitnessEnumerator(Vas vas, std::size_t kept, std::size_t max_len, std::size_t max_runs, std::size_t max_periods)
      : vas_(std::move(vas)), kept_(kept), max_len_(max_len), max_runs_(max_runs), max_periods_(max_periods) {
    for (std::size_t i = 0; i < kept_; ++i) keep_.push_back(i);
  }

  bool exhausted() const { return exhausted_; }
  std::size_t length() const { return length_; }
  std::size_t runs() const { return total_runs_; }

  std::vector<Witness> advance() {
    std::vector<Witness> out;
    if (exhausted_) return out;
    std::vector<Run> layer;
    if (!started_) {
      started_ = true;
      layer.push_back(Run{vas_.source, {}});
    } else {
      ++length_;
      for (const auto& r : frontier_) {
        for (std::size_t j = 0; j < vas_.transitions.size(); ++j) {
          Config next = r.target() + vas_.transitions[j];
          if (!next.is_nonneg()) continue;
          if (total_runs_ + layer.size() >= max_runs_) {
            exhausted_ = true;
            break;
          }
          Run e = r;
          e.steps.push_back({r.target(), j, std::move(next)});
          layer.push_back(std::move(e));
        }
        if (exhausted_) break;
      }
    }
    total_runs_ += layer.size();
    if (layer.empty() || length_ >= max_len_) exhausted_ = true;

    std::vector<bool> changed(bases_.size(), false);
    const std::size_t old = bases_.size();
    for (const auto& r : layer) {
      if (!in_expansion(r.target())) continue;
      for (std::size_t b = 0; b < old; ++b) {
        Base& base = bases_[b];
        if (base.periods.size() >= max_periods_ || !run_embeds(base.run, r)) continue;
        Config delta = (r.target() - base.run.target()).project(keep_);
        if (delta.is_zero() || nonneg_member(delta, base.periods)) continue;
        base.periods.push_back(std::move(delta));
        base.pumps.push_back(r.labels());
        changed[b] = true;
      }
      bases_.push_back(Base{r, {}, {}});
      changed.push_back(true);
    }
    for (std::size_t b = 0; b < bases_.size(); ++b)
      if (changed[b]) out.push_back(Witness{bases_[b].run.labels(), bases_[b].pumps});
    frontier_ = std::move(layer);
    return out;
  }

 private:
  struct Base {
    Run run;
    std::vector<std::vector<std::size_t>> pumps;
    std::vector<Config> periods;
  };

  bool in_expansion(const Config& c) const {
    for (std::size_t i = kept_; i < vas_.dim; ++i)
      if (c[i] != 0) return false;
    return true;
  }

  Vas vas_;
  std::size_t kept_;
  std::size_t max_len_;
  std::size_t max_runs_;
  std::size_t max_periods_;
  std::vector<std::size_t> keep_;
  std::vector<Run> frontier_;
  std::vector<Base> bases_;
  std::size_t length_ = 0;
  std::size_t total_runs_ = 0;
  bool started_ = false;
  bool exhausted_ = false;
};

/// Every witness the enumerator emits up to run length max_len.
inline std::vector<Witness> enumerate_witnesses(const Vas& vas, std::size_t kept, std::size_t max_len,
                                                std::size_t max_runs = 20'000, std::size_t max_periods = 4) {
  WitnessEnumerator e(vas, kept, max_len, max_runs, max_periods);
  std::vector<Witness> out;
  while (!e.exhausted()) {
    auto w = e.advance();
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

enum class Verdict { Separable, NotSeparable, Unknown };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Separable: return "separable";
    case Verdict::NotSeparable: return "not_separable";
    default: return "unknown";
  }
}

using Separator = std::variant<ModularSet, UnarySet>;

/// Separable: `proofs[j]` refutes target j of the pair instance at modulus n.
/// Each proof lives on one side's coordinates, and the separator is exactly
/// the classes refuted on the second side.
/// NotSeparable: witnesses on both expansions and linsep's proof for them.
struct Certificate {
  Verdict verdict = Verdict::Unknown;
  Mode mode = Mode::Modular;
  std::int64_t n = 0;
  std::optional<Separator> separator;
  std::vector<UnreachProof> proofs;
  std::optional<Witness> witness_u;
  std::optional<Witness> witness_v;
  std::optional<NotSeparableProof> linsep;
  std::string report;
};

inline ReachInstance pair_instance(const NormalizedPair& p, Mode mode, std::int64_t n,
                                   std::size_t max_targets = 100'000) {
  return mode == Mode::Modular ? modpair_instance(p, n, max_targets) : unarypair_instance(p, n, max_targets);
}

namespace detail {

/// Coordinates of the pair instance that belong to the first system.
inline std::size_t first_block_dim(const NormalizedPair& p, Mode mode, std::int64_t n) {
  if (mode == Mode::Modular) return p.dim();
  return unary_block(p.u, p.kept, n).vas.dim;
}

/// The separator read off per-target proofs: class j is included iff its
/// proof only talks about the second system. nullopt if a proof mixes sides.
inline std::optional<Separator> separator_from_proofs(const NormalizedPair& p, Mode mode, std::int64_t n,
                                                      const ReachInstance& inst,
                                                      const std::vector<UnreachProof>& proofs) {
  const std::size_t split = first_block_dim(p, mode, n), k = p.kept;
  std::set<Residue> mod;
  std::set<UnaryClass> un;
  for (std::size_t j = 0; j < proofs.size(); ++j) {
    const auto& c = proofs[j].coords;
    if (c.empty()) return std::nullopt;
    const bool second = c.front() >= split;
    for (auto i : c)
      if ((i >= split) != second) return std::nullopt;
    if (!second) continue;
    Residue w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = to_int64(inst.targets[j][i]);
    if (mode == Mode::Modular) {
      mod.insert(w);
    } else {
      UnaryClass cls(k);
      for (std::size_t i = 0; i < k; ++i) cls[i] = UnaryCoord::from_canonical(w[i], n);
      un.insert(std::move(cls));
    }
  }
  if (mode == Mode::Modular) return Separator{ModularSet(k, n, std::move(mod))};
  return Separator{UnarySet(k, n, std::move(un))};
}

class PositiveSearch {
 public:
  PositiveSearch(const NormalizedPair& p, Mode mode, const Budgets& b) : p_(p), mode_(mode), b_(b) {}

  bool done() const { return next_ > b_.max_n; }
  const std::string& log() const { return log_; }

  /// Tries the next modulus.
  std::optional<Certificate> step() {
    const std::int64_t n = next_++;
    ReachInstance inst;
    try {
      inst = pair_instance(p_, mode_, n, b_.max_targets);
    } catch (const BudgetExceeded&) {
      next_ = b_.max_n + 1;
      note(n, "target budget");
      return std::nullopt;
    }
    ReachOracle oracle(inst.vas, b_.reach());
    std::vector<UnreachProof> proofs;
    for (const auto& t : inst.targets) {
      auto v = oracle.solve(t);
      if (v.status != ReachStatus::ProvedEmpty) {
        note(n, v.status == ReachStatus::Found ? "target reached" : "target open");
        return std::nullopt;
      }
      proofs.push_back(*v.proof);
    }
    auto sep = separator_from_proofs(p_, mode_, n, inst, proofs);
    if (!sep) {
      note(n, "proof spans both systems");
      return std::nullopt;
    }
    Certificate c;
    c.verdict = Verdict::Separable;
    c.mode = mode_;
    c.n = n;
    c.separator = std::move(sep);
    c.proofs = std::move(proofs);
    c.report = "all " + std::to_string(inst.targets.size()) + " targets refuted at n=" + std::to_string(n);
    return c;
  }

 private:
  void note(std::int64_t n, const char* why) {
    if (!log_.empty()) log_ += ", ";
    log_ += "n=" + std::to_string(n) + ": " + why;
  }

  const NormalizedPair& p_;
  Mode mode_;
  const Budgets& b_;
  std::int64_t next_ = 1;
  std::string log_;
};

class NegativeSearch {
 public:
  NegativeSearch(const NormalizedPair& p, Mode mode, const Budgets& b)
      : p_(p),
        mode_(mode),
        b_(b),
        eu_(p.u, p.kept, b.max_run_len, b.max_runs, b.max_periods),
        ev_(p.v, p.kept, b.max_run_len, b.max_runs, b.max_periods),
        rng_(b.seed) {}

  bool done() const {
    return tested_ >= b_.max_witness_pairs || (pending_.empty() && eu_.exhausted() && ev_.exhausted());
  }

  std::string log() const {
    return "run length " + std::to_string(std::max(eu_.length(), ev_.length())) + ", " +
           std::to_string(wu_.size()) + "+" + std::to_string(wv_.size()) + " witnesses, " +
           std::to_string(tested_) + " pairs tested";
  }

  /// Tests up to `quantum` witness pairs, enumerating longer runs when no
  /// untested pair is left.
  std::optional<Certificate> step(std::size_t quantum) {
    std::size_t budget = quantum;
    while (budget > 0 && tested_ < b_.max_witness_pairs) {
      if (pending_.empty()) {
        if (eu_.exhausted() && ev_.exhausted()) break;
        grow();
        continue;
      }
      auto [i, j] = pending_.back();
      pending_.pop_back();
      --budget;
      ++tested_;
      std::optional<NotSeparableProof> proof;
      try {
        proof = inseparability_proof(wu_[i].second, wv_[j].second, mode_);
      } catch (const BudgetExceeded&) {
        continue;
      }
      if (!proof) continue;
      Certificate c;
      c.verdict = Verdict::NotSeparable;
      c.mode = mode_;
      c.witness_u = wu_[i].first;
      c.witness_v = wv_[j].first;
      c.linsep = std::move(proof);
      c.report = "inseparable witnesses " + wu_[i].second.str() + " and " + wv_[j].second.str();
      return c;
    }
    return std::nullopt;
  }

 private:
  using Entry = std::pair<Witness, LinearSet>;

  static std::vector<std::size_t> take(WitnessEnumerator& e, const Vas& vas, std::size_t kept,
                                       std::vector<Entry>& into) {
    std::vector<std::size_t> fresh;
    if (e.exhausted()) return fresh;
    for (auto& w : e.advance()) {
      fresh.push_back(into.size());
      LinearSet s = witness_set(vas, kept, w);
      into.emplace_back(std::move(w), std::move(s));
    }
    return fresh;
  }

  // one more run length on both sides; new pairs are every new witness
  // against everything on the other side
  void grow() {
    const std::size_t old_u = wu_.size();
    auto nu = take(eu_, p_.u, p_.kept, wu_);
    auto nv = take(ev_, p_.v, p_.kept, wv_);
    std::vector<std::pair<std::size_t, std::size_t>> batch;
    for (auto i : nu)
      for (std::size_t j = 0; j < wv_.size(); ++j) batch.emplace_back(i, j);
    for (auto j : nv)
      for (std::size_t i = 0; i < old_u; ++i) batch.emplace_back(i, j);
    std::shuffle(batch.begin(), batch.end(), rng_);
    pending_.insert(pending_.begin(), batch.begin(), batch.end());
  }

  const NormalizedPair& p_;
  Mode mode_;
  const Budgets& b_;
  WitnessEnumerator eu_, ev_;
  std::mt19937_64 rng_;
  std::vector<Entry> wu_, wv_;
  std::vector<std::pair<std::size_t, std::size_t>> pending_;
  std::size_t tested_ = 0;
};

}  // namespace detail

/// Alternates the two searches in quanta (one modulus, then
/// `pairs_per_round` witness pairs). With workers >= 2 each search gets its
/// own thread and the first certificate wins.
inline Certificate decide_separability(const SectionedVas& a, const SectionedVas& b, Mode mode,
                                       const Budgets& budgets = {}) {
  const NormalizedPair p = normalize_pair(a, b);
  detail::PositiveSearch pos(p, mode, budgets);
  detail::NegativeSearch neg(p, mode, budgets);
  auto unknown = [&] {
    Certificate c;
    c.mode = mode;
    c.report = "budgets exhausted; positive: " + (pos.log().empty() ? std::string("not run") : pos.log()) +
               "; negative: " + neg.log();
    return c;
  };

  if (budgets.workers <= 1) {
    while (!pos.done() || !neg.done()) {
      if (!pos.done())
        if (auto c = pos.step()) return *c;
      if (!neg.done())
        if (auto c = neg.step(budgets.pairs_per_round)) return *c;
    }
    return unknown();
  }

  std::atomic<bool> stop{false};
  std::mutex m;
  std::optional<Certificate> result;
  auto publish = [&](Certificate c) {
    std::lock_guard<std::mutex> lock(m);
    if (!result) result = std::move(c);
    stop = true;
  };
  std::thread tp([&] {
    while (!stop && !pos.done())
      if (auto c = pos.step()) publish(std::move(*c));
  });
  std::thread tn([&] {
    while (!stop && !neg.done())
      if (auto c = neg.step(budgets.pairs_per_round)) publish(std::move(*c));
  });
  tp.join();
  tn.join();
  return result ? *result : unknown();
}

struct VerifyOptions {
  std::size_t member_states = 2'000;  // configurations explored per side for the member check
};

namespace detail {

inline std::vector<Config> bounded_expansion(const Vas& vas, std::size_t kept, std::size_t budget) {
  std::vector<std::size_t> keep(kept);
  for (std::size_t i = 0; i < kept; ++i) keep[i] = i;
  std::vector<Config> out;
  Exploration ex(vas, budget, std::nullopt);
  ex.for_each_config([&](const Config& c) {
    for (std::size_t i = kept; i < vas.dim; ++i)
      if (c[i] != 0) return;
    out.push_back(c.project(keep));
  });
  return out;
}

inline bool separator_member(const Separator& s, const Config& x) {
  if (auto* m = std::get_if<ModularSet>(&s)) return modular_member(*m, x);
  return unary_member(std::get<UnarySet>(s), x);
}

}  // namespace detail

/// Re-checks a certificate from the problem alone. Unknown certificates carry
/// nothing to check and are rejected.
inline bool verify_certificate(const SectionedVas& a, const SectionedVas& b, const Certificate& cert,
                               const VerifyOptions& opt = {}) {
  try {
    const NormalizedPair p = normalize_pair(a, b);
    if (cert.verdict == Verdict::NotSeparable) {
      if (!cert.witness_u || !cert.witness_v || !cert.linsep || cert.linsep->mode != cert.mode) return false;
      const LinearSet l = witness_set(p.u, p.kept, *cert.witness_u);
      const LinearSet m = witness_set(p.v, p.kept, *cert.witness_v);
      return check_not_separable_proof(l, m, *cert.linsep);
    }
    if (cert.verdict != Verdict::Separable || !cert.separator || cert.n < 1) return false;
    const Separator& s = *cert.separator;
    const bool modular = std::holds_alternative<ModularSet>(s);
    if (modular != (cert.mode == Mode::Modular)) return false;
    const std::int64_t sn = modular ? std::get<ModularSet>(s).modulus() : std::get<UnarySet>(s).modulus();
    const std::size_t sd = modular ? std::get<ModularSet>(s).dim() : std::get<UnarySet>(s).dim();
    if (sn != cert.n || sd != p.kept) return false;

    const ReachInstance inst = pair_instance(p, cert.mode, cert.n);
    if (cert.proofs.size() != inst.targets.size()) return false;
    for (std::size_t j = 0; j < inst.targets.size(); ++j)
      if (!check_unreach_proof(inst.vas, inst.targets[j], cert.proofs[j])) return false;
    auto expected = detail::separator_from_proofs(p, cert.mode, cert.n, inst, cert.proofs);
    if (!expected || *expected != s) return false;

    for (const auto& x : detail::bounded_expansion(p.u, p.kept, opt.member_states))
      if (!detail::separator_member(s, x)) return false;
    for (const auto& x : detail::bounded_expansion(p.v, p.kept, opt.member_states))
      if (detail::separator_member(s, x)) return false;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace vassep
