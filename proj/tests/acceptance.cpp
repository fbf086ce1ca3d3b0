// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Oracles here are brute-force searches on machine integers.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "vassep/json_io.hpp"
#include "vassep/linsep.hpp"
#include "vassep/vassep.hpp"

namespace {

using namespace vassep;
using brute::Vec;
using testutil::Rng;
using testutil::to_vec;

struct Result {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

Vas example1() { return Vas(3, IntVector{1, 0, 0}, {IntVector{-1, 2, 1}, IntVector{2, -1, 1}}); }

Vass example2() {
  Vass v;
  v.dim = 3;
  v.states = {"p", "p2"};
  v.source = IntVector{1, 0, 0};
  v.transitions = {{0, IntVector{-1, 1, 0}, 0}, {0, IntVector{0, 0, 0}, 1}, {1, IntVector{2, -1, 0}, 1},
                   {1, IntVector{0, 0, 1}, 0}};
  return v;
}

SectionedVas whole(const Vas& v) { return {v, SectionSpec::full(v.dim)}; }

Vas counter(long long source, std::vector<long long> steps) {
  std::vector<IntVector> ts;
  for (auto s : steps) ts.push_back(IntVector{s});
  return Vas(1, IntVector{source}, ts);
}

std::int64_t mod(std::int64_t x, std::int64_t n) { return ((x % n) + n) % n; }

/// Configurations found by the library's forward exploration under a cap.
std::set<Vec> explored(const Vas& v, std::int64_t cap) {
  Exploration ex(v, 50'000'000, Integer(cap));
  std::set<Vec> out;
  ex.for_each_config([&](const Config& c) { out.insert(to_vec(c)); });
  return out;
}

std::size_t mismatches(const std::set<Vec>& a, const std::set<Vec>& b) {
  std::size_t k = 0;
  for (const auto& x : a) k += !b.count(x);
  for (const auto& x : b) k += !a.count(x);
  return k;
}

// ---- 1-3: examples ----

Result criterion1() {
  const auto t0 = Clock::now();
  auto got = explored(example1(), 12);
  std::set<Vec> want;
  brute::for_each_in_box(3, 0, 12, [&](const Vec& v) {
    if (v[0] + v[1] == v[2] + 1 && mod(v[0] - v[1], 3) == 1) want.insert(v);
  });
  const double s = seconds_since(t0);
  const std::size_t bad = mismatches(got, want);
  return {bad == 0 && s < 5.0, std::to_string(want.size()) + " members, " + std::to_string(bad) + " mismatches, " +
                                   fmt_seconds(s)};
}

Result criterion2() {
  const std::set<Vec> want{{0, 8}, {3, 5}, {6, 2}};
  std::set<Vec> lib;
  for (const auto& v : explored(example1(), 8))
    if (v[2] == 7) lib.insert({v[0], v[1]});
  auto ex = example1();
  std::vector<Vec> ts;
  for (const auto& t : ex.transitions) ts.push_back(to_vec(t));
  auto oracle = brute::section(brute::bounded_reach_vas(to_vec(ex.source), ts, 8), {0, 1}, {{2, 7}});
  std::ostringstream os;
  os << "library " << lib.size() << " members, oracle " << oracle.size() << " members";
  return {lib == want && oracle == want, os.str()};
}

Result criterion3() {
  const auto t0 = Clock::now();
  const SectionedVas s = vass_to_vas(example2(), 0);
  std::set<Vec> got;
  // c never decreases, and a run ending at c <= 3 keeps a + b <= 2^3 before
  // its last doubling phase, so a cap of 16 loses nothing
  for (const auto& v : explored(s.vas, 16)) {
    if (!s.section.matches(IntVector(v))) continue;
    Vec p;
    for (auto i : s.section.keep) p.push_back(v[i]);
    if (p[2] <= 3) got.insert(p);
  }
  std::set<Vec> want;
  brute::for_each_in_box(3, 0, 16, [&](const Vec& v) {
    if (v[2] <= 3 && 1 <= v[0] + v[1] && v[0] + v[1] <= (1 << v[2])) want.insert(v);
  });
  const double s_ = seconds_since(t0);
  const std::size_t bad = mismatches(got, want);
  return {bad == 0 && s_ < 30.0, std::to_string(want.size()) + " members, " + std::to_string(bad) +
                                     " mismatches, " + fmt_seconds(s_)};
}

// ---- 4-5: linear sets ----

LinearSet random_linear(Rng& rng, std::size_t d) {
  std::vector<IntVector> ps;
  for (int k = static_cast<int>(rng.uniform(0, 3)); k > 0; --k) ps.push_back(IntVector(rng.period(d, 4)));
  return LinearSet(IntVector(rng.vec(d, 0, 4)), ps);
}

Vec lvec(const IntVector& v) { return to_vec(v); }

std::vector<Vec> lperiods(const LinearSet& l) {
  std::vector<Vec> out;
  for (const auto& p : l.periods()) out.push_back(lvec(p));
  return out;
}

std::set<Vec> residues_exact(const LinearSet& l, std::int64_t n) {
  std::set<Vec> out;
  for (auto r : brute::subgroup_by_coeffs(lperiods(l), l.dim(), n)) {
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(r[i] + to_int64(l.base()[i]), n);
    out.insert(r);
  }
  return out;
}

Vec mod_key(const Vec& v, std::int64_t n) {
  Vec k(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) k[i] = mod(v[i], n);
  return k;
}

Vec unary_key(const Vec& v, std::int64_t n) {
  Vec k(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) k[i] = v[i] < n ? v[i] : n + mod(v[i], n);
  return k;
}

bool share_key(const std::set<Vec>& us, const std::set<Vec>& vs, const std::function<Vec(const Vec&)>& key) {
  std::set<Vec> ku;
  for (const auto& u : us) ku.insert(key(u));
  for (const auto& v : vs)
    if (ku.count(key(v))) return true;
  return false;
}

/// part is {b} + Lin>=0(P) with b in whole and every p in Lin>=0(whole's periods).
bool sub_linear(const LinearSet& part, const LinearSet& whole) {
  Vec diff = lvec(part.base());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= to_int64(whole.base()[i]);
  for (auto x : diff)
    if (x < 0) return false;
  if (!brute::nonneg_search(diff, lperiods(whole))) return false;
  for (const auto& p : part.periods())
    if (!brute::nonneg_search(lvec(p), lperiods(whole))) return false;
  return true;
}

bool recombines(const NotSeparableProof& p) {
  std::vector<IntVector> gens = p.left.periods();
  gens.insert(gens.end(), p.right.periods().begin(), p.right.periods().end());
  if (gens.size() != p.coeffs.size()) return false;
  IntVector sum(p.left.dim());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < sum.dim(); ++i) sum[i] += p.coeffs[j] * gens[j][i];
  return sum == p.left.base() - p.right.base();
}

Result criterion4() {
  Rng rng(2024);
  const int trials = 200;
  int conclusive = 0, disagree = 0, bad_proofs = 0, bad_separators = 0;
  for (int t = 0; t < trials; ++t) {
    const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
    LinearSet l = random_linear(rng, d), m = random_linear(rng, d);
    auto verdict = modular_separable_linear(l, m);
    const auto lm = brute::linear_members(lvec(l.base()), lperiods(l), 40);
    const auto mm = brute::linear_members(lvec(m.base()), lperiods(m), 40);

    std::optional<std::int64_t> sep_at;
    bool pair_everywhere = true;
    for (std::int64_t n = 1; n <= 12; ++n) {
      auto rl = residues_exact(l, n), rm = residues_exact(m, n);
      bool disjoint = true;
      for (const auto& r : rl)
        if (rm.count(r)) disjoint = false;
      if (disjoint && !sep_at) sep_at = n;
      if (!share_key(lm, mm, [n](const Vec& v) { return mod_key(v, n); })) pair_everywhere = false;
    }

    if (verdict.separable()) {
      const auto& s = std::get<ModularSet>(verdict.value);
      for (const auto& u : lm)
        if (!s.residues().count(mod_key(u, s.modulus()))) ++bad_separators;
      for (const auto& v : mm)
        if (s.residues().count(mod_key(v, s.modulus()))) ++bad_separators;
    } else {
      const auto& p = verdict.proof();
      if (!recombines(p) || !sub_linear(p.left, l) || !sub_linear(p.right, m)) ++bad_proofs;
    }

    if (sep_at) {
      ++conclusive;
      if (!verdict.separable()) ++disagree;
    } else if (pair_everywhere) {
      const bool beyond = verdict.separable() && std::get<ModularSet>(verdict.value).modulus() > 12;
      if (!beyond) {
        ++conclusive;
        if (verdict.separable()) ++disagree;
      }
    }
  }
  std::ostringstream os;
  os << trials << " pairs, " << conclusive << " conclusive, " << disagree << " disagreements, " << bad_proofs
     << " bad proofs, " << bad_separators << " separator violations";
  return {disagree == 0 && bad_proofs == 0 && bad_separators == 0 && conclusive > 0, os.str()};
}

Result criterion5() {
  Rng rng(808);
  const int trials = 200;
  int separable = 0, inseparable = 0, violations = 0, missing_pairs = 0;
  for (int t = 0; t < trials; ++t) {
    const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
    LinearSet l = random_linear(rng, d), m = random_linear(rng, d);
    auto verdict = unary_separable_linear(l, m);
    const std::int64_t bound = 40;
    const auto lm = brute::linear_members(lvec(l.base()), lperiods(l), bound);
    const auto mm = brute::linear_members(lvec(m.base()), lperiods(m), bound);
    if (verdict.separable()) {
      ++separable;
      const auto& s = std::get<UnarySet>(verdict.value);
      std::set<Vec> keys;
      for (const auto& cls : s.classes()) {
        Vec k;
        for (const auto& c : cls) k.push_back(c.large ? s.modulus() + c.value : c.value);
        keys.insert(k);
      }
      for (const auto& u : lm) violations += !keys.count(unary_key(u, s.modulus()));
      for (const auto& v : mm) violations += keys.count(unary_key(v, s.modulus())) ? 1 : 0;
    } else {
      ++inseparable;
      for (std::int64_t n = 1; n <= 6; ++n)
        if (!share_key(lm, mm, [n](const Vec& v) { return unary_key(v, n); })) ++missing_pairs;
    }
  }
  std::ostringstream os;
  os << trials << " pairs (" << separable << " separable, " << inseparable << " not), " << violations
     << " separator violations, " << missing_pairs << " missing equivalent pairs";
  return {violations == 0 && missing_pairs == 0, os.str()};
}

// ---- 6: pumping ----

std::vector<Run> runs_up_to(const Vas& v, std::size_t len, std::size_t cap) {
  std::vector<Run> out;
  std::vector<std::size_t> labels;
  std::function<void(const Config&)> go = [&](const Config& c) {
    if (out.size() >= cap) return;
    out.push_back(replay(v, labels));
    if (labels.size() == len) return;
    for (std::size_t j = 0; j < v.transitions.size(); ++j) {
      Config next = c + v.transitions[j];
      if (!next.is_nonneg()) continue;
      labels.push_back(j);
      go(next);
      labels.pop_back();
    }
  };
  go(v.source);
  return out;
}

/// Independent replay on machine integers.
bool genuine(const Vas& v, const Run& r) {
  Vec cur = to_vec(v.source);
  if (to_vec(r.source) != cur) return false;
  for (const auto& s : r.steps) {
    if (s.transition >= v.transitions.size() || to_vec(s.from) != cur) return false;
    cur = brute::add(cur, to_vec(v.transitions[s.transition]));
    for (auto x : cur)
      if (x < 0) return false;
    if (to_vec(s.to) != cur) return false;
  }
  return true;
}

Vas random_vas(Rng& rng) {
  const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
  std::vector<IntVector> ts;
  for (int k = static_cast<int>(rng.uniform(1, 3)); k > 0; --k) ts.push_back(IntVector(rng.vec(d, -1, 2)));
  return Vas(d, IntVector(rng.vec(d, 0, 2)), ts);
}

Result criterion6() {
  Rng rng(6006);
  int triples = 0, failures = 0;
  while (triples < 1000) {
    const Vas v = random_vas(rng);
    auto runs = runs_up_to(v, 5, 400);
    for (int k = 0; k < 20 && triples < 1000; ++k) {
      const Run& rho = runs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(runs.size()) - 1))];
      std::vector<const Run*> above;
      for (const auto& r : runs)
        if (run_embeds(rho, r)) above.push_back(&r);
      const Run& r1 = *above[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(above.size()) - 1))];
      const Run& r2 = *above[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(above.size()) - 1))];
      ++triples;
      try {
        Run out = pump_compose(v, rho, r1, r2);
        Vec want = brute::add(to_vec(r1.target()), to_vec(r2.target()));
        Vec base = to_vec(rho.target());
        for (std::size_t i = 0; i < want.size(); ++i) want[i] -= base[i];
        if (!genuine(v, out) || to_vec(out.target()) != want) ++failures;
      } catch (const std::exception&) {
        ++failures;
      }
    }
  }

  int members = 0, member_failures = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const Vas v = random_vas(rng);
    for (const auto& w : enumerate_witnesses(v, v.dim, 4, 2'000)) {
      if (w.pump_runs.empty()) continue;
      const Run base = replay(v, w.base_run);
      std::vector<Run> pumps;
      for (const auto& p : w.pump_runs) pumps.push_back(replay(v, p));
      for (int sample = 0; sample < 2; ++sample) {
        std::vector<Integer> coeffs;
        Vec want = to_vec(base.target());
        for (const auto& p : pumps) {
          coeffs.push_back(rng.uniform(0, 2));
          Vec delta = to_vec(p.target());
          for (std::size_t i = 0; i < want.size(); ++i) want[i] += to_int64(coeffs.back()) * (delta[i] - to_vec(base.target())[i]);
        }
        ++members;
        try {
          Run r = pump_linear(v, base, pumps, coeffs);
          if (!genuine(v, r) || to_vec(r.target()) != want) ++member_failures;
        } catch (const std::exception&) {
          ++member_failures;
        }
      }
    }
  }
  std::ostringstream os;
  os << triples << " triples, " << failures << " failures; " << members << " witness members, " << member_failures
     << " failures";
  return {failures == 0 && member_failures == 0 && members > 0, os.str()};
}

// ---- 7-8: end to end ----

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run_cli(const std::string& args) {
  const std::string cmd = std::string(VASSEP_BIN) + " " + args + " 2>&1";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return o;
  std::array<char, 4096> buf{};
  while (std::size_t k = std::fread(buf.data(), 1, buf.size(), pipe)) o.out.append(buf.data(), k);
  int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

Result criterion7() {
  const auto dir = std::filesystem::temp_directory_path() / "vassep_acceptance";
  std::filesystem::create_directories(dir);
  std::ostringstream os;
  bool ok = true;
  struct Case {
    std::string a, b;
    int code;
  };
  for (const auto& c : {Case{"evens.json", "odds.json", 0}, Case{"evens.json", "evens.json", 1},
                        Case{"example1.json", "example1.json", 1}}) {
    const auto cert = (dir / (c.a + "_" + c.b + ".json")).string();
    const auto t0 = Clock::now();
    auto s = run_cli("sep " + fixture(c.a) + " " + fixture(c.b) + " --mode modular --out " + cert);
    const double secs = seconds_since(t0);
    auto v = run_cli("verify " + fixture(c.a) + " " + fixture(c.b) + " " + cert);
    bool good = s.code == c.code && secs < 10.0 && v.code == 0;
    if (good && c.code == 0) good = io::read_certificate(io::load_file(cert)).n == 2;
    ok = ok && good;
    if (os.tellp() > 0) os << "; ";
    os << c.a << " vs " << c.b << ": exit " << s.code << " in " << fmt_seconds(secs) << ", verify exit " << v.code;
  }
  return {ok, os.str()};
}

Result criterion8() {
  const SectionedVas zero = whole(counter(0, {})), positive = whole(counter(1, {1}));
  auto t0 = Clock::now();
  auto u = decide_separability(zero, positive, Mode::Unary);
  const double su = seconds_since(t0);
  t0 = Clock::now();
  auto m = decide_separability(zero, positive, Mode::Modular);
  const double sm = seconds_since(t0);
  const bool unary_ok = u.verdict == Verdict::Separable && u.n == 1 &&
                        std::get<UnarySet>(*u.separator) == UnarySet(1, 1, {{UnaryCoord::small(0)}}) &&
                        verify_certificate(zero, positive, u);
  const bool modular_ok = m.verdict == Verdict::NotSeparable && verify_certificate(zero, positive, m);
  std::ostringstream os;
  os << "unary " << verdict_name(u.verdict) << " n=" << u.n << " in " << fmt_seconds(su) << ", modular "
     << verdict_name(m.verdict) << " in " << fmt_seconds(sm);
  return {unary_ok && modular_ok && su < 10.0 && sm < 10.0, os.str()};
}

// ---- 9: per-n instances ----

enum class PerN { Separable, NotSeparable, Unknown };

PerN positive_side(const NormalizedPair& p, Mode mode, std::int64_t n, const ReachBudget& budget) {
  const ReachInstance inst = pair_instance(p, mode, n, 4096);
  ReachOracle oracle(inst.vas, budget);
  bool unknown = false;
  for (const auto& t : inst.targets) {
    auto v = oracle.solve(t);
    if (v.status == ReachStatus::Found) return PerN::NotSeparable;
    if (v.status == ReachStatus::Unknown) unknown = true;
  }
  return unknown ? PerN::Unknown : PerN::Separable;
}

struct Side {
  SectionedVas s;
  Vec source;
  std::vector<Vec> ts;
  std::size_t keep;
  std::map<std::size_t, std::int64_t> fixed;

  std::set<Vec> members(std::int64_t cap) const {
    return brute::section(brute::bounded_reach_vas(source, ts, cap), {keep}, fixed);
  }
  bool finite_within(std::int64_t cap) const {
    // steps are at most 3, so any run leaving the cap box lands inside twice the cap first
    return brute::bounded_reach_vas(source, ts, cap) == brute::bounded_reach_vas(source, ts, 2 * cap);
  }
};

Side random_side(Rng& rng) {
  Side s;
  const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 2));
  std::vector<IntVector> ts;
  for (int k = static_cast<int>(rng.uniform(0, 2)); k > 0; --k) ts.push_back(IntVector(rng.vec(d, -2, 3)));
  Vas v(d, IntVector(rng.vec(d, 0, 4)), ts);
  s.keep = 0;
  SectionSpec sec;
  sec.keep = {0};
  if (d == 2) {
    const std::int64_t fixed = rng.uniform(0, 1);
    sec.fixed[1] = fixed;
    s.fixed[1] = fixed;
  }
  s.s = {v, sec};
  s.source = to_vec(v.source);
  for (const auto& t : v.transitions) s.ts.push_back(to_vec(t));
  return s;
}

Result criterion9() {
  Rng rng(9009);
  ReachBudget budget;
  budget.max_states = 2'000;
  budget.backward_states = 1'000;
  budget.km_nodes = 1'000;
  const int trials = 500;
  int checks = 0, conclusive = 0, contradictions = 0;
  for (int t = 0; t < trials; ++t) {
    Side a = random_side(rng), b = random_side(rng);
    const NormalizedPair p = normalize_pair(a.s, b.s);
    for (Mode mode : {Mode::Modular, Mode::Unary}) {
      const auto rel = mode == Mode::Modular ? brute::Relation::Modular : brute::Relation::Unary;
      for (std::int64_t n = 1; n <= 6; ++n) {
        ++checks;
        const std::int64_t bound = 6 * n;
        const bool pair = brute::equivalent_pair(a.members(bound), b.members(bound), n, rel).has_value();
        const bool no_pair = !pair && a.finite_within(bound) && b.finite_within(bound);
        if (!pair && !no_pair) continue;
        const PerN got = positive_side(p, mode, n, budget);
        if (got == PerN::Unknown) continue;
        ++conclusive;
        if (pair && got == PerN::Separable) ++contradictions;
        if (no_pair && got == PerN::NotSeparable) ++contradictions;
      }
    }
  }
  std::ostringstream os;
  os << trials << " pairs, " << checks << " (mode, n) checks, " << conclusive << " conclusive, " << contradictions
     << " contradictions";
  return {contradictions == 0 && conclusive > 0, os.str()};
}

// ---- 10: hardness gadget ----

Vass random_vass(Rng& rng) {
  Vass v;
  v.dim = static_cast<std::size_t>(rng.uniform(1, 2));
  const int ns = static_cast<int>(rng.uniform(2, 3));
  for (int i = 0; i < ns; ++i) v.states.push_back("s" + std::to_string(i));
  v.source = IntVector(rng.vec(v.dim, 0, 1));
  for (int k = static_cast<int>(rng.uniform(1, 4)); k > 0; --k)
    v.transitions.push_back({static_cast<std::size_t>(rng.uniform(0, ns - 1)), IntVector(rng.vec(v.dim, -1, 1)),
                             static_cast<std::size_t>(rng.uniform(0, ns - 1))});
  return v;
}

/// True / false when bounded search settles reachability of state q.
std::optional<bool> state_reachable(const Vass& v, std::size_t q) {
  std::vector<brute::Transition> ts;
  for (const auto& t : v.transitions) ts.push_back({t.from, to_vec(t.delta), t.to});
  auto small = brute::bounded_reach(v.initial, to_vec(v.source), ts, 8);
  for (const auto& [s, c] : small)
    if (s == q) return true;
  // steps are at most 1, so an escape from the cap box is seen under twice the cap
  if (small == brute::bounded_reach(v.initial, to_vec(v.source), ts, 16)) return false;
  return std::nullopt;
}

Result criterion10() {
  std::ostringstream os;
  bool ok = true;

  Vass toy;
  toy.dim = 1;
  toy.states = {"s", "q"};
  toy.source = IntVector{0};
  toy.transitions = {{0, IntVector{1}, 0}};
  {
    auto [a, b] = hardness_instance(toy, 1);
    auto c = decide_separability(a, b, Mode::Modular);
    ok = ok && c.verdict == Verdict::Separable && verify_certificate(a, b, c);
    os << "unreachable toy " << verdict_name(c.verdict) << "; ";
  }
  toy.transitions.push_back({0, IntVector{-2}, 1});
  {
    auto [a, b] = hardness_instance(toy, 1);
    auto c = decide_separability(a, b, Mode::Modular);
    ok = ok && c.verdict == Verdict::NotSeparable && verify_certificate(a, b, c);
    os << "reachable toy " << verdict_name(c.verdict) << "; ";
  }

  Rng rng(1010);
  Budgets budgets;
  budgets.max_n = 6;
  int conclusive = 0, disagree = 0, unsettled = 0, unknown = 0;
  for (int t = 0; t < 50; ++t) {
    Vass v = random_vass(rng);
    const std::size_t q = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(v.states.size()) - 1));
    auto truth = state_reachable(v, q);
    if (!truth) {
      ++unsettled;
      continue;
    }
    auto [a, b] = hardness_instance(v, q);
    auto c = decide_separability(a, b, Mode::Modular, budgets);
    if (c.verdict == Verdict::Unknown) {
      ++unknown;
      continue;
    }
    ++conclusive;
    if ((c.verdict == Verdict::Separable) == *truth) ++disagree;
    if (!verify_certificate(a, b, c)) ++disagree;
  }
  os << "50 random VASSes: " << conclusive << " conclusive, " << disagree << " disagreements, " << unsettled
     << " unsettled by search, " << unknown << " unknown";
  return {ok && disagree == 0 && conclusive > 0, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Result()> fn;
  };
  const std::vector<Criterion> all{
      {1, "Example 1 reachability set", criterion1},
      {2, "Example 3 section", criterion2},
      {3, "Example 2 VASS through vass_to_vas", criterion3},
      {4, "modular separability of linear sets vs residue oracle", criterion4},
      {5, "unary separability of linear sets vs bounded class search", criterion5},
      {6, "pump_compose and pump_linear on random runs", criterion6},
      {7, "evens vs odds and self vs self end to end", criterion7},
      {8, "{0} vs {k >= 1}: unary separable, modular not", criterion8},
      {9, "per-n pair instances vs bounded pair search", criterion9},
      {10, "hardness gadget vs forward reachability", criterion10},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = Clock::now();
    Result r;
    try {
      r = c.fn();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failed += !r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " -- " << r.detail << " ["
              << fmt_seconds(seconds_since(t0)) << "]" << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
