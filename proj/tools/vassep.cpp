// vassep: separability of VAS reachability sets from the command line.
//
// Exit codes: 0 separable (or success), 1 not separable (or a failed check),
// 2 unknown within the budgets, 3 bad input, 4 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vassep/brute.hpp"
#include "vassep/json_io.hpp"

namespace {

using namespace vassep;
using io::Json;

enum Exit { kSeparable = 0, kNotSeparable = 1, kUnknown = 2, kBadInput = 3, kInternal = 4 };

struct BudgetFlags {
  Budgets b;
  bool json = false;
  std::optional<std::string> out;

  void add_to(CLI::App* app) {
    app->add_option("--budget-states", b.states, "configurations explored per reachability component")
        ->capture_default_str();
    app->add_option("--max-run-len", b.max_run_len, "longest run enumerated for witnesses")->capture_default_str();
    app->add_option("--max-n", b.max_n, "largest modulus tried on the positive side")->capture_default_str();
    app->add_option("--max-witness-pairs", b.max_witness_pairs, "witness pairs tested on the negative side")
        ->capture_default_str();
    app->add_option("--workers", b.workers, "1 alternates both searches; 2 or more runs them in parallel")
        ->capture_default_str();
    app->add_option("--seed", b.seed, "seed for the witness pair schedule")->capture_default_str();
  }
};

void add_json_flag(CLI::App* app, bool& json) {
  app->add_flag("--json", json, "print the full JSON document instead of a summary");
}

io::Problem load_problem(const std::string& file) { return io::read_problem(io::load_file(file)); }

void emit(const Json& doc, bool json, const std::string& summary, const std::optional<std::string>& out) {
  if (out) {
    std::ofstream f(*out);
    if (!f) throw std::runtime_error("cannot write " + *out);
    f << doc.dump(2) << '\n';
  }
  if (json)
    std::cout << doc.dump(2) << '\n';
  else
    std::cout << summary;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Separable: return kSeparable;
    case Verdict::NotSeparable: return kNotSeparable;
    default: return kUnknown;
  }
}

std::string summary_of(const Certificate& c) {
  std::ostringstream os;
  os << "verdict: " << verdict_name(c.verdict) << "\nmode: " << mode_name(c.mode) << '\n';
  if (c.verdict == Verdict::Separable) {
    os << "n: " << c.n << '\n';
    os << "separator: " << std::visit([](const auto& s) { return io::to_json(s); }, *c.separator).dump() << '\n';
    os << "proofs: " << c.proofs.size() << " unreachable targets\n";
  }
  if (c.linsep) os << "witnesses: " << c.linsep->left.str() << " vs " << c.linsep->right.str() << " (" << c.linsep->path
                   << ")\n";
  if (!c.report.empty()) os << "report: " << c.report << '\n';
  return os.str();
}

Mode pick_mode(const std::string& flag, const io::Problem& a) {
  if (flag == "modular") return Mode::Modular;
  if (flag == "unary") return Mode::Unary;
  if (!flag.empty()) throw std::invalid_argument("--mode must be modular or unary");
  return a.mode.value_or(Mode::Modular);
}

/// Section members whose runs keep data coordinates within `bound` and control
/// coordinates within 1.
std::set<brute::Vec> bounded_members(const io::Problem& p, std::int64_t bound) {
  const SectionedVas s = p.sectioned();
  auto vec = [](const IntVector& v) {
    brute::Vec out;
    for (const auto& x : v) out.push_back(to_int64(x));
    return out;
  };
  brute::Vec caps(s.vas.dim, 1);
  for (std::size_t i = 0; i < p.data_dim(); ++i) caps[i] = bound;
  std::vector<brute::Vec> ts;
  for (const auto& t : s.vas.transitions) ts.push_back(vec(t));
  std::map<std::size_t, std::int64_t> fixed;
  for (const auto& [i, x] : s.section.fixed) fixed[i] = to_int64(x);
  return brute::section(brute::bounded_reach_box(vec(s.vas.source), ts, caps), s.section.keep, fixed);
}

brute::Vec parse_list(const std::string& text, const std::string& what) {
  brute::Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t x = 0;
    try {
      x = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument(what + ": '" + text + "' is not a list like 1,0,2");
    out.push_back(x);
  }
  return out;
}

Json members_json(const std::set<brute::Vec>& s) {
  Json out = Json::array();
  for (const auto& v : s) out.push_back(v);
  return out;
}

std::string vec_str(const brute::Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

int cmd_sep(const std::string& fa, const std::string& fb, const std::string& mode_flag, const BudgetFlags& f) {
  auto a = load_problem(fa), b = load_problem(fb);
  const Mode mode = pick_mode(mode_flag, a);
  Certificate c = decide_separability(a.sectioned(), b.sectioned(), mode, f.b);
  emit(io::to_json(c), f.json, summary_of(c), f.out);
  return verdict_exit(c.verdict);
}

int cmd_comsep(const std::string& fa, const std::string& fb, bool closures, const BudgetFlags& f) {
  auto a = load_problem(fa), b = load_problem(fb);
  if (a.kind != io::Problem::Kind::Labeled || b.kind != io::Problem::Kind::Labeled)
    throw std::invalid_argument("comsep needs two labeled systems");
  LanguageCertificate c = closures ? regular_sep_commutative_closures(a.labeled, b.labeled, f.b)
                                   : commutative_regular_separability(a.labeled, b.labeled, f.b);
  std::string summary = summary_of(c.cert);
  if (c.language_separator) summary += "language separator: " + *c.language_separator + '\n';
  summary += "bridge: " + c.bridge + '\n';
  emit(io::to_json(c), f.json, summary, f.out);
  return verdict_exit(c.cert.verdict);
}

int cmd_verify(const std::string& fa, const std::string& fb, const std::string& fc) {
  auto a = load_problem(fa), b = load_problem(fb);
  Json doc = io::load_file(fc);
  bool ok = false;
  if (doc.is_object() && doc.contains("language_separator")) {
    if (a.kind != io::Problem::Kind::Labeled || b.kind != io::Problem::Kind::Labeled)
      throw std::invalid_argument("a language certificate needs two labeled systems");
    auto c = io::read_language_certificate(doc);
    ok = verify_language_certificate(a.labeled, b.labeled, c);
    if (ok && c.cert.verdict == Verdict::Separable)
      ok = c.language_separator ==
           describe_language_separator(std::get<UnarySet>(*c.cert.separator), a.labeled.alphabet);
  } else {
    ok = verify_certificate(a.sectioned(), b.sectioned(), io::read_certificate(doc));
  }
  std::cout << (ok ? "valid" : "invalid") << '\n';
  return ok ? 0 : 1;
}

int cmd_reach(const std::string& file, const std::string& target_flag, std::size_t states, bool json) {
  auto p = load_problem(file);
  const SectionedVas s = p.sectioned();
  IntVector target;
  if (!target_flag.empty())
    target = IntVector(parse_list(target_flag, "--target"));
  else if (p.target)
    target = *p.target;
  else
    throw std::invalid_argument("reach needs --target or params.target");
  if (target.dim() != s.arity())
    throw std::invalid_argument("target has " + std::to_string(target.dim()) + " entries, the section keeps " +
                                std::to_string(s.arity()));
  Config full(s.vas.dim);
  for (std::size_t k = 0; k < s.section.keep.size(); ++k) full[s.section.keep[k]] = target[k];
  for (const auto& [i, x] : s.section.fixed) full[i] = x;

  ReachBudget budget;
  budget.max_states = states;
  ReachOracle oracle(s.vas, budget);
  TargetVerdict v = oracle.solve(full);
  Json doc{{"status", status_name(v.status)}, {"target", io::to_json(target)}};
  std::ostringstream os;
  os << "status: " << status_name(v.status) << '\n';
  if (v.run) {
    doc["run"] = io::to_json(*v.run);
    os << "run:";
    for (auto l : v.run->labels()) os << ' ' << l;
    os << "\nconfigs: " << v.run->source.str();
    for (const auto& st : v.run->steps) os << " -> " << st.to.str();
    os << '\n';
  }
  if (v.proof) {
    doc["proof"] = io::to_json(*v.proof);
    os << "proof: " << v.proof->prover << '\n';
  }
  emit(doc, json, os.str(), std::nullopt);
  return v.status == ReachStatus::Found ? 0 : v.status == ReachStatus::ProvedEmpty ? 1 : 2;
}

int cmd_normalize(const std::string& file, bool json) {
  const SectionedVas s = load_problem(file).sectioned();
  NormalizedPair np = normalize_pair(s, s);
  io::Problem out = io::problem_of(as_section(np.u, np.kept));
  out.coordinates = np.labels_u;
  Json doc = io::to_json(out);
  std::ostringstream os;
  os << "dim: " << np.u.dim << "\nkept: " << np.kept << "\ncoordinates:";
  for (const auto& l : np.labels_u) os << ' ' << l;
  os << '\n';
  emit(doc, json, os.str(), std::nullopt);
  return 0;
}

int cmd_gen_hardness(const std::string& file, const std::string& state_flag, const std::string& prefix) {
  auto p = load_problem(file);
  const Vass v = p.as_vass();
  std::size_t q = 0;
  if (!state_flag.empty()) {
    bool numeric = state_flag.find_first_not_of("0123456789") == std::string::npos;
    q = numeric ? static_cast<std::size_t>(std::stoull(state_flag)) : v.state_index(state_flag);
  } else if (p.state) {
    q = *p.state;
  } else {
    throw std::invalid_argument("gen-hardness needs --state or params.state");
  }
  auto [a, b] = hardness_instance(v, q);
  for (const auto& [suffix, s] : {std::pair{".0.json", &a}, std::pair{".1.json", &b}}) {
    std::ofstream f(prefix + suffix);
    if (!f) throw std::runtime_error("cannot write " + prefix + suffix);
    f << io::to_json(io::problem_of(*s)).dump(2) << '\n';
    std::cout << prefix + suffix << '\n';
  }
  return 0;
}

int cmd_brute_members(const std::string& file, std::int64_t bound, bool json) {
  auto members = bounded_members(load_problem(file), bound);
  std::ostringstream os;
  for (const auto& m : members) os << vec_str(m) << '\n';
  emit(Json{{"bound", bound}, {"members", members_json(members)}}, json, os.str(), std::nullopt);
  return 0;
}

int cmd_brute_pairs(const std::string& fa, const std::string& fb, std::int64_t n, const std::string& relation,
                    std::int64_t bound, bool json) {
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  brute::Relation rel;
  if (relation == "modular")
    rel = brute::Relation::Modular;
  else if (relation == "unary")
    rel = brute::Relation::Unary;
  else
    throw std::invalid_argument("--relation must be modular or unary");
  auto us = bounded_members(load_problem(fa), bound), vs = bounded_members(load_problem(fb), bound);
  auto pair = brute::equivalent_pair(us, vs, n, rel);
  Json doc{{"n", n}, {"relation", relation}, {"bound", bound}, {"members_a", us.size()}, {"members_b", vs.size()}};
  doc["pair"] = pair ? Json::array({pair->first, pair->second}) : Json(nullptr);
  std::string summary = pair ? "pair: " + vec_str(pair->first) + " ~ " + vec_str(pair->second) + '\n'
                             : "no pair within bound " + std::to_string(bound) + '\n';
  emit(doc, json, summary, std::nullopt);
  return 0;
}

int cmd_brute_nonneg(const std::string& target, const std::vector<std::string>& periods, bool json) {
  brute::Vec v = parse_list(target, "--target");
  std::vector<brute::Vec> ps;
  for (const auto& p : periods) {
    ps.push_back(parse_list(p, "--period"));
    if (ps.back().size() != v.size()) throw std::invalid_argument("--period " + p + ": wrong dimension");
    for (auto x : ps.back())
      if (x < 0) throw std::invalid_argument("--period " + p + ": negative entry");
  }
  for (auto x : v)
    if (x < 0) throw std::invalid_argument("--target: negative entry");
  auto found = brute::nonneg_search(v, ps);
  Json doc{{"target", v}, {"coeffs", found ? Json(*found) : Json(nullptr)}};
  emit(doc, json, found ? "coeffs: " + vec_str(*found) + '\n' : "no nonnegative combination\n", std::nullopt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separability of VAS reachability sets by modular and unary sets"};
  app.require_subcommand(1);
  int status = kInternal;

  std::string fa, fb, fc, mode_flag, target, state, prefix, relation = "modular";
  BudgetFlags flags;
  bool closures = false;
  std::int64_t bound = 8, n = 1;
  std::size_t reach_states = ReachBudget{}.max_states;
  std::vector<std::string> periods;

  auto* sep = app.add_subcommand("sep", "decide separability of two sections");
  sep->add_option("first", fa, "problem file of the set to cover")->required()->check(CLI::ExistingFile);
  sep->add_option("second", fb, "problem file of the set to avoid")->required()->check(CLI::ExistingFile);
  sep->add_option("--mode", mode_flag, "modular or unary (default: params.mode of the first file, else modular)");
  sep->add_option("-o,--out", flags.out, "also write the certificate to this file");
  flags.add_to(sep);
  add_json_flag(sep, flags.json);

  auto* comsep = app.add_subcommand("comsep", "commutative regular separability of two labeled systems");
  comsep->add_option("first", fa, "labeled problem file")->required()->check(CLI::ExistingFile);
  comsep->add_option("second", fb, "labeled problem file")->required()->check(CLI::ExistingFile);
  comsep->add_flag("--closures", closures, "ask about the commutative closures instead");
  comsep->add_option("-o,--out", flags.out, "also write the certificate to this file");
  flags.add_to(comsep);
  add_json_flag(comsep, flags.json);

  auto* verify = app.add_subcommand("verify", "re-check a certificate against its two problem files");
  verify->add_option("first", fa, "first problem file")->required()->check(CLI::ExistingFile);
  verify->add_option("second", fb, "second problem file")->required()->check(CLI::ExistingFile);
  verify->add_option("certificate", fc, "certificate file")->required()->check(CLI::ExistingFile);

  auto* reach = app.add_subcommand("reach", "reachability of one section member");
  reach->add_option("file", fa, "problem file")->required()->check(CLI::ExistingFile);
  reach->add_option("--target", target, "kept coordinates of the target, e.g. 2,1,2 (default: params.target)");
  reach->add_option("--budget-states", reach_states, "forward exploration budget")->capture_default_str();
  add_json_flag(reach, flags.json);

  auto* normalize = app.add_subcommand("normalize", "rewrite a section to keep-first, zero-fixed form");
  normalize->add_option("file", fa, "problem file")->required()->check(CLI::ExistingFile);
  add_json_flag(normalize, flags.json);

  auto* hard = app.add_subcommand("gen-hardness", "write the two-copy pair that is separable iff a state is unreachable");
  hard->add_option("file", fa, "VAS or VASS problem file")->required()->check(CLI::ExistingFile);
  hard->add_option("--state", state, "state name or index (default: params.state)");
  hard->add_option("--out", prefix, "output prefix; writes PREFIX.0.json and PREFIX.1.json")->required();

  auto* brute_cmd = app.add_subcommand("brute", "bounded brute-force oracles");
  brute_cmd->require_subcommand(1);
  auto* members = brute_cmd->add_subcommand("members", "section members with every data coordinate <= bound");
  members->add_option("file", fa, "problem file")->required()->check(CLI::ExistingFile);
  members->add_option("--bound", bound, "coordinate bound")->capture_default_str();
  add_json_flag(members, flags.json);
  auto* pairs = brute_cmd->add_subcommand("pairs", "search an equivalent pair between two bounded sections");
  pairs->add_option("first", fa, "problem file")->required()->check(CLI::ExistingFile);
  pairs->add_option("second", fb, "problem file")->required()->check(CLI::ExistingFile);
  pairs->add_option("--n", n, "modulus")->capture_default_str();
  pairs->add_option("--relation", relation, "modular or unary")->capture_default_str();
  pairs->add_option("--bound", bound, "coordinate bound")->capture_default_str();
  add_json_flag(pairs, flags.json);
  auto* nonneg = brute_cmd->add_subcommand("nonneg", "exhaustive nonnegative combination search");
  nonneg->add_option("--target", target, "vector, e.g. 3,4")->required();
  nonneg->add_option("--period", periods, "period vector; repeat for each period");
  add_json_flag(nonneg, flags.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*sep) status = cmd_sep(fa, fb, mode_flag, flags);
    if (*comsep) status = cmd_comsep(fa, fb, closures, flags);
    if (*verify) status = cmd_verify(fa, fb, fc);
    if (*reach) status = cmd_reach(fa, target, reach_states, flags.json);
    if (*normalize) status = cmd_normalize(fa, flags.json);
    if (*hard) status = cmd_gen_hardness(fa, state, prefix);
    if (*members) status = cmd_brute_members(fa, bound, flags.json);
    if (*pairs) status = cmd_brute_pairs(fa, fb, n, relation, bound, flags.json);
    if (*nonneg) status = cmd_brute_nonneg(target, periods, flags.json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return status;
}
