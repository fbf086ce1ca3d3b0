#pragma once

// JSON wire formats: sets, systems, sections, problem files and certificates.
// Readers reject unknown fields and report errors by JSON pointer. Integers
// are written as numbers when they fit 64 bits and as decimal strings
// otherwise; both forms are accepted on input.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "vassep/commutative.hpp"
#include "vassep/vassep.hpp"

namespace vassep::io {

using Json = nlohmann::ordered_json;

inline constexpr int kVersion = 1;

class FormatError : public std::invalid_argument {
 public:
  FormatError(const std::string& pointer, const std::string& msg)
      : std::invalid_argument((pointer.empty() ? std::string("(root)") : pointer) + ": " + msg), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

namespace detail {

inline std::string child(const std::string& path, const std::string& key) {
  std::string k;
  for (char c : key) {
    if (c == '~')
      k += "~0";
    else if (c == '/')
      k += "~1";
    else
      k += c;
  }
  return path + "/" + k;
}

inline std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

/// Field access on a JSON object that remembers which keys were read, so
/// finish() can reject the rest.
class Object {
 public:
  Object(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j.is_object()) throw FormatError(path_, "expected an object");
  }

  const Json* get(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }
  const Json& need(const std::string& key) {
    if (auto* p = get(key)) return *p;
    throw FormatError(path_, "missing field '" + key + "'");
  }
  bool has(const std::string& key) const { return j_.contains(key); }
  std::string at(const std::string& key) const { return child(path_, key); }
  const std::string& path() const { return path_; }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.count(it.key())) throw FormatError(child(path_, it.key()), "unknown field");
  }

 private:
  const Json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

inline const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw FormatError(path, "expected an array");
  return j;
}

inline std::string string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw FormatError(path, "expected a string");
  return j.get<std::string>();
}

inline Integer integer(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start) throw FormatError(path, "expected a decimal integer string");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw FormatError(path, "expected a decimal integer string");
    return Integer(s);
  }
  throw FormatError(path, "expected an integer");
}

inline std::int64_t small(const Json& j, const std::string& path) {
  Integer x = integer(j, path);
  if (!fits_int64(x)) throw FormatError(path, "integer out of range");
  return to_int64(x);
}

inline std::size_t index(const Json& j, const std::string& path) {
  std::int64_t x = small(j, path);
  if (x < 0) throw FormatError(path, "expected a nonnegative index");
  return static_cast<std::size_t>(x);
}

inline std::vector<std::size_t> indices(const Json& j, const std::string& path) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(index(j[i], child(path, i)));
  return out;
}

inline IntVector vector(const Json& j, const std::string& path, std::optional<std::size_t> dim = std::nullopt) {
  array(j, path);
  if (dim && j.size() != *dim)
    throw FormatError(path, "expected " + std::to_string(*dim) + " entries, got " + std::to_string(j.size()));
  std::vector<Integer> xs;
  for (std::size_t i = 0; i < j.size(); ++i) xs.push_back(integer(j[i], child(path, i)));
  return IntVector(std::move(xs));
}

inline std::vector<IntVector> vectors(const Json& j, const std::string& path, std::optional<std::size_t> dim) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(vector(j[i], child(path, i), dim));
  return out;
}

/// Runs a constructor that validates, turning its complaint into a located one.
template <class Fn>
auto located(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FormatError(path, e.what());
  }
}

}  // namespace detail

inline Json to_json(const Integer& x) {
  if (fits_int64(x)) return to_int64(x);
  return x.str();
}

inline Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline Json to_json(const std::vector<std::size_t>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(x);
  return out;
}

// ---- sets ----

inline Json to_json(const LinearSet& l) {
  Json ps = Json::array();
  for (const auto& p : l.periods()) ps.push_back(to_json(p));
  return Json{{"base", to_json(l.base())}, {"periods", ps}};
}

inline LinearSet read_linear(const Json& j, const std::string& path = "") {
  detail::Object o(j, path);
  IntVector base = detail::vector(o.need("base"), o.at("base"));
  auto periods = detail::vectors(o.need("periods"), o.at("periods"), base.dim());
  o.finish();
  return detail::located(path, [&] { return LinearSet(base, periods); });
}

inline Json to_json(const ModularSet& m) {
  Json rs = Json::array();
  for (const auto& r : m.residues()) rs.push_back(r);
  return Json{{"dim", m.dim()}, {"n", m.modulus()}, {"residues", rs}};
}

inline ModularSet read_modular(const Json& j, const std::string& path = "") {
  detail::Object o(j, path);
  std::int64_t n = detail::small(o.need("n"), o.at("n"));
  const Json& rs = detail::array(o.need("residues"), o.at("residues"));
  std::optional<std::size_t> dim;
  if (auto* d = o.get("dim")) dim = detail::index(*d, o.at("dim"));
  std::set<Residue> residues;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const std::string p = detail::child(o.at("residues"), i);
    detail::array(rs[i], p);
    if (!dim) dim = rs[i].size();
    Residue r;
    for (std::size_t k = 0; k < rs[i].size(); ++k) r.push_back(detail::small(rs[i][k], detail::child(p, k)));
    residues.insert(std::move(r));
  }
  if (!dim) throw FormatError(path, "empty modular set needs 'dim'");
  o.finish();
  return detail::located(path, [&] { return ModularSet(*dim, n, residues); });
}

inline Json to_json(const UnarySet& s) {
  Json cs = Json::array();
  for (const auto& cls : s.classes()) {
    Json c = Json::array();
    for (const auto& x : cls) c.push_back(Json{{x.large ? "large" : "small", x.value}});
    cs.push_back(c);
  }
  return Json{{"dim", s.dim()}, {"n", s.modulus()}, {"classes", cs}};
}

inline UnarySet read_unary(const Json& j, const std::string& path = "") {
  detail::Object o(j, path);
  std::int64_t n = detail::small(o.need("n"), o.at("n"));
  const Json& cs = detail::array(o.need("classes"), o.at("classes"));
  std::optional<std::size_t> dim;
  if (auto* d = o.get("dim")) dim = detail::index(*d, o.at("dim"));
  std::set<UnaryClass> classes;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string p = detail::child(o.at("classes"), i);
    detail::array(cs[i], p);
    if (!dim) dim = cs[i].size();
    UnaryClass cls;
    for (std::size_t k = 0; k < cs[i].size(); ++k) {
      detail::Object c(cs[i][k], detail::child(p, k));
      const bool large = c.has("large");
      if (large == c.has("small")) throw FormatError(c.path(), "expected exactly one of 'small' or 'large'");
      const char* key = large ? "large" : "small";
      cls.push_back({large, detail::small(c.need(key), c.at(key))});
      c.finish();
    }
    classes.insert(std::move(cls));
  }
  if (!dim) throw FormatError(path, "empty unary set needs 'dim'");
  o.finish();
  return detail::located(path, [&] { return UnarySet(*dim, n, classes); });
}

// ---- systems ----

inline Json to_json(const Vas& v) {
  Json ts = Json::array();
  for (const auto& t : v.transitions) ts.push_back(to_json(t));
  return Json{{"dim", v.dim}, {"source", to_json(v.source)}, {"transitions", ts}};
}

inline Json to_json(const Vass& v) {
  Json ts = Json::array();
  for (const auto& t : v.transitions) ts.push_back(Json::array({v.states[t.from], to_json(t.delta), v.states[t.to]}));
  return Json{{"dim", v.dim},
              {"states", v.states},
              {"initial", v.states[v.initial]},
              {"source", to_json(v.source)},
              {"transitions", ts}};
}

inline Json to_json(const SectionSpec& s) {
  Json fixed = Json::object();
  for (const auto& [i, x] : s.fixed) fixed[std::to_string(i)] = to_json(x);
  return Json{{"keep", to_json(s.keep)}, {"fixed", fixed}};
}

inline SectionSpec read_section(const Json& j, std::size_t dim, const std::string& path = "") {
  detail::Object o(j, path);
  SectionSpec s;
  s.keep = detail::indices(o.need("keep"), o.at("keep"));
  if (auto* f = o.get("fixed")) {
    if (!f->is_object()) throw FormatError(o.at("fixed"), "expected an object");
    for (auto it = f->begin(); it != f->end(); ++it) {
      const std::string p = detail::child(o.at("fixed"), it.key());
      std::size_t i = detail::index(Json(it.key()), p);
      s.fixed[i] = detail::integer(it.value(), p);
    }
  }
  o.finish();
  detail::located(path, [&] { s.validate(dim); });
  return s;
}

namespace detail {

inline std::size_t state_ref(const Json& j, const std::vector<std::string>& states, const std::string& path) {
  if (j.is_string()) {
    auto name = j.get<std::string>();
    for (std::size_t i = 0; i < states.size(); ++i)
      if (states[i] == name) return i;
    throw FormatError(path, "unknown state '" + name + "'");
  }
  std::size_t i = index(j, path);
  if (i >= states.size()) throw FormatError(path, "state index out of range");
  return i;
}

}  // namespace detail

/// What a problem file describes. The section of a VASS ranges over its
/// counters and is read at the `final` state; a labeled system is read
/// through its Parikh section.
struct Problem {
  enum class Kind { Vas, Vass, Labeled };
  Kind kind = Kind::Vas;
  Vas vas;
  Vass vass;
  std::optional<std::size_t> final_state;
  LabeledVas labeled;
  std::optional<SectionSpec> section;
  std::vector<std::string> coordinates;  // optional names, one per coordinate of a VAS
  std::optional<IntVector> target;
  std::optional<std::size_t> state;
  std::optional<Mode> mode;

  SectionedVas sectioned() const {
    switch (kind) {
      case Kind::Vas: return {vas, section ? *section : SectionSpec::full(vas.dim)};
      case Kind::Labeled: return parikh_section(labeled);
      case Kind::Vass: break;
    }
    if (!final_state) throw std::invalid_argument("problem: a VASS section needs a 'final' state");
    SectionedVas s = vass_to_vas(vass, *final_state);
    if (section) {
      SectionSpec merged = *section;
      for (const auto& [i, x] : s.section.fixed) merged.fixed[i] = x;
      s.section = std::move(merged);
      s.validate();
    }
    return s;
  }

  /// Coordinates of sectioned() that hold counter data; the remaining ones
  /// are control coordinates bounded by 1.
  std::size_t data_dim() const {
    switch (kind) {
      case Kind::Vas: return vas.dim;
      case Kind::Vass: return vass.dim;
      case Kind::Labeled: return labeled.vas.dim + labeled.alphabet.size();
    }
    return 0;
  }

  Vass as_vass() const {
    if (kind == Kind::Vas) return vas_as_vass(vas);
    if (kind == Kind::Vass) return vass;
    throw std::invalid_argument("problem: a labeled system is not a VASS");
  }
};

inline Json to_json(const LabeledVas& lv) {
  Json j = to_json(lv.vas);
  Json labels = Json::array();
  for (const auto& l : lv.labels) labels.push_back(l ? Json(lv.alphabet[*l]) : Json(nullptr));
  j["alphabet"] = lv.alphabet;
  j["labels"] = labels;
  j["acceptance"] = lv.acceptance == Acceptance::Exact ? "exact" : "cover";
  j["accept"] = to_json(lv.v0);
  return j;
}

inline Json to_json(const Problem& p) {
  Json j{{"format", "vassep-problem"}, {"version", kVersion}};
  switch (p.kind) {
    case Problem::Kind::Vas:
      j["system"] = to_json(p.vas);
      if (!p.coordinates.empty()) j["system"]["coordinates"] = p.coordinates;
      break;
    case Problem::Kind::Vass:
      j["system"] = to_json(p.vass);
      if (p.final_state) j["system"]["final"] = p.vass.states[*p.final_state];
      break;
    case Problem::Kind::Labeled: j["system"] = to_json(p.labeled); break;
  }
  if (p.section) j["section"] = to_json(*p.section);
  Json params = Json::object();
  if (p.target) params["target"] = to_json(*p.target);
  if (p.state) params["state"] = p.vass.states.empty() ? Json(*p.state) : Json(p.vass.states[*p.state]);
  if (p.mode) params["mode"] = mode_name(*p.mode);
  if (!params.empty()) j["params"] = params;
  return j;
}

inline Problem problem_of(const SectionedVas& s) {
  Problem p;
  p.vas = s.vas;
  p.section = s.section;
  return p;
}

inline Mode read_mode(const Json& j, const std::string& path) {
  auto s = detail::string(j, path);
  if (s == "modular") return Mode::Modular;
  if (s == "unary") return Mode::Unary;
  throw FormatError(path, "expected \"modular\" or \"unary\"");
}

inline Problem read_problem(const Json& j) {
  detail::Object o(j, "");
  if (detail::string(o.need("format"), o.at("format")) != "vassep-problem")
    throw FormatError(o.at("format"), "expected \"vassep-problem\"");
  if (detail::small(o.need("version"), o.at("version")) != kVersion)
    throw FormatError(o.at("version"), "unsupported version");

  Problem p;
  detail::Object s(o.need("system"), o.at("system"));
  const std::size_t dim = detail::index(s.need("dim"), s.at("dim"));
  IntVector source = detail::vector(s.need("source"), s.at("source"), dim);
  const bool is_vass = s.has("states"), is_labeled = s.has("labels");
  if (is_vass && is_labeled) throw FormatError(s.path(), "a system has either 'states' or 'labels'");

  if (is_vass) {
    p.kind = Problem::Kind::Vass;
    Vass& v = p.vass;
    v.dim = dim;
    v.source = source;
    const Json& states = detail::array(s.need("states"), s.at("states"));
    for (std::size_t i = 0; i < states.size(); ++i)
      v.states.push_back(detail::string(states[i], detail::child(s.at("states"), i)));
    if (v.states.empty()) throw FormatError(s.at("states"), "no states");
    if (auto* init = s.get("initial")) v.initial = detail::state_ref(*init, v.states, s.at("initial"));
    const Json& ts = detail::array(s.need("transitions"), s.at("transitions"));
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const std::string tp = detail::child(s.at("transitions"), k);
      if (!ts[k].is_array() || ts[k].size() != 3) throw FormatError(tp, "expected [from, delta, to]");
      v.transitions.push_back({detail::state_ref(ts[k][0], v.states, detail::child(tp, 0)),
                               detail::vector(ts[k][1], detail::child(tp, 1), dim),
                               detail::state_ref(ts[k][2], v.states, detail::child(tp, 2))});
    }
    if (auto* f = s.get("final")) p.final_state = detail::state_ref(*f, v.states, s.at("final"));
    detail::located(s.path(), [&] { v.validate(); });
  } else {
    auto ts = detail::vectors(s.need("transitions"), s.at("transitions"), dim);
    Vas vas = detail::located(s.path(), [&] { return Vas(dim, source, ts); });
    if (is_labeled) {
      p.kind = Problem::Kind::Labeled;
      LabeledVas& lv = p.labeled;
      lv.vas = std::move(vas);
      const Json& alpha = detail::array(s.need("alphabet"), s.at("alphabet"));
      for (std::size_t i = 0; i < alpha.size(); ++i)
        lv.alphabet.push_back(detail::string(alpha[i], detail::child(s.at("alphabet"), i)));
      const Json& labels = detail::array(s.need("labels"), s.at("labels"));
      if (labels.size() != lv.vas.transitions.size())
        throw FormatError(s.at("labels"), "expected one label per transition");
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].is_null()) {
          lv.labels.push_back(std::nullopt);
          continue;
        }
        auto letter = detail::string(labels[i], detail::child(s.at("labels"), i));
        auto it = std::find(lv.alphabet.begin(), lv.alphabet.end(), letter);
        if (it == lv.alphabet.end())
          throw FormatError(detail::child(s.at("labels"), i), "letter '" + letter + "' not in the alphabet");
        lv.labels.push_back(static_cast<std::size_t>(it - lv.alphabet.begin()));
      }
      auto acc = detail::string(s.need("acceptance"), s.at("acceptance"));
      if (acc == "exact")
        lv.acceptance = Acceptance::Exact;
      else if (acc == "cover")
        lv.acceptance = Acceptance::Cover;
      else
        throw FormatError(s.at("acceptance"), "expected \"exact\" or \"cover\"");
      lv.v0 = detail::vector(s.need("accept"), s.at("accept"), dim);
      detail::located(s.path(), [&] { lv.validate(); });
    } else {
      p.vas = std::move(vas);
      if (auto* names = s.get("coordinates")) {
        for (std::size_t i = 0; i < detail::array(*names, s.at("coordinates")).size(); ++i)
          p.coordinates.push_back(detail::string((*names)[i], detail::child(s.at("coordinates"), i)));
        if (p.coordinates.size() != dim) throw FormatError(s.at("coordinates"), "expected one name per coordinate");
      }
    }
  }
  s.finish();

  if (auto* sec = o.get("section")) {
    if (p.kind == Problem::Kind::Labeled) throw FormatError(o.at("section"), "labeled systems take no section");
    p.section = read_section(*sec, dim, o.at("section"));
  }
  if (auto* par = o.get("params")) {
    detail::Object q(*par, o.at("params"));
    if (auto* t = q.get("target")) p.target = detail::vector(*t, q.at("target"));
    if (auto* st = q.get("state")) {
      if (p.kind == Problem::Kind::Vass)
        p.state = detail::state_ref(*st, p.vass.states, q.at("state"));
      else
        p.state = detail::index(*st, q.at("state"));
    }
    if (auto* m = q.get("mode")) p.mode = read_mode(*m, q.at("mode"));
    q.finish();
  }
  o.finish();
  return p;
}

// ---- certificates ----

inline Json to_json(const Witness& w) {
  Json pumps = Json::array();
  for (const auto& r : w.pump_runs) pumps.push_back(to_json(r));
  return Json{{"base_run", to_json(w.base_run)}, {"pump_runs", pumps}};
}

inline Witness read_witness(const Json& j, const std::string& path) {
  detail::Object o(j, path);
  Witness w;
  w.base_run = detail::indices(o.need("base_run"), o.at("base_run"));
  const Json& pumps = detail::array(o.need("pump_runs"), o.at("pump_runs"));
  for (std::size_t i = 0; i < pumps.size(); ++i)
    w.pump_runs.push_back(detail::indices(pumps[i], detail::child(o.at("pump_runs"), i)));
  o.finish();
  return w;
}

inline Json to_json(const UnreachProof& p) {
  Json j{{"prover", p.prover}, {"coords", to_json(p.coords)}};
  if (p.modulus) j["modulus"] = p.modulus;
  if (p.budget) j["budget"] = p.budget;
  if (p.km_budget) j["km_budget"] = p.km_budget;
  return j;
}

inline UnreachProof read_proof(const Json& j, const std::string& path) {
  detail::Object o(j, path);
  UnreachProof p;
  p.prover = detail::string(o.need("prover"), o.at("prover"));
  p.coords = detail::indices(o.need("coords"), o.at("coords"));
  if (auto* m = o.get("modulus")) p.modulus = detail::small(*m, o.at("modulus"));
  if (auto* b = o.get("budget")) p.budget = detail::index(*b, o.at("budget"));
  if (auto* k = o.get("km_budget")) p.km_budget = detail::index(*k, o.at("km_budget"));
  o.finish();
  return p;
}

inline Json to_json(const Certificate& c) {
  Json j{{"format", "vassep-certificate"}, {"version", kVersion}, {"verdict", verdict_name(c.verdict)},
         {"mode", mode_name(c.mode)},      {"n", c.n}};
  if (c.separator)
    j["separator"] = std::visit([](const auto& s) { return to_json(s); }, *c.separator);
  else
    j["separator"] = nullptr;
  Json proofs = Json::array();
  for (const auto& p : c.proofs) proofs.push_back(to_json(p));
  j["proofs"] = proofs;
  j["witness_u"] = c.witness_u ? to_json(*c.witness_u) : Json(nullptr);
  j["witness_v"] = c.witness_v ? to_json(*c.witness_v) : Json(nullptr);
  Json coeffs = Json::array();
  if (c.linsep)
    for (const auto& x : c.linsep->coeffs) coeffs.push_back(to_json(x));
  j["coeffs"] = coeffs;
  if (c.linsep) {
    j["linsep"] = Json{{"left", to_json(c.linsep->left)},
                       {"right", to_json(c.linsep->right)},
                       {"linked", c.linsep->linked ? to_json(*c.linsep->linked) : Json(nullptr)},
                       {"path", c.linsep->path}};
  } else {
    j["linsep"] = nullptr;
  }
  j["report"] = c.report;
  return j;
}

namespace detail {

inline Certificate read_certificate_fields(Object& o) {
  if (string(o.need("format"), o.at("format")) != "vassep-certificate")
    throw FormatError(o.at("format"), "expected \"vassep-certificate\"");
  if (small(o.need("version"), o.at("version")) != kVersion) throw FormatError(o.at("version"), "unsupported version");
  Certificate c;
  auto v = string(o.need("verdict"), o.at("verdict"));
  if (v == "separable")
    c.verdict = Verdict::Separable;
  else if (v == "not_separable")
    c.verdict = Verdict::NotSeparable;
  else if (v == "unknown")
    c.verdict = Verdict::Unknown;
  else
    throw FormatError(o.at("verdict"), "unknown verdict");
  c.mode = read_mode(o.need("mode"), o.at("mode"));
  c.n = small(o.need("n"), o.at("n"));
  if (auto* s = o.get("separator"); s && !s->is_null()) {
    if (c.mode == Mode::Modular)
      c.separator = read_modular(*s, o.at("separator"));
    else
      c.separator = read_unary(*s, o.at("separator"));
  }
  if (auto* ps = o.get("proofs"))
    for (std::size_t i = 0; i < array(*ps, o.at("proofs")).size(); ++i)
      c.proofs.push_back(read_proof((*ps)[i], child(o.at("proofs"), i)));
  if (auto* w = o.get("witness_u"); w && !w->is_null()) c.witness_u = read_witness(*w, o.at("witness_u"));
  if (auto* w = o.get("witness_v"); w && !w->is_null()) c.witness_v = read_witness(*w, o.at("witness_v"));
  std::vector<Integer> coeffs;
  if (auto* cs = o.get("coeffs"))
    for (std::size_t i = 0; i < array(*cs, o.at("coeffs")).size(); ++i)
      coeffs.push_back(integer((*cs)[i], child(o.at("coeffs"), i)));
  if (auto* l = o.get("linsep"); l && !l->is_null()) {
    Object ls(*l, o.at("linsep"));
    NotSeparableProof p;
    p.mode = c.mode;
    p.left = read_linear(ls.need("left"), ls.at("left"));
    p.right = read_linear(ls.need("right"), ls.at("right"));
    if (auto* k = ls.get("linked"); k && !k->is_null()) p.linked = indices(*k, ls.at("linked"));
    p.path = string(ls.need("path"), ls.at("path"));
    p.coeffs = std::move(coeffs);
    ls.finish();
    c.linsep = std::move(p);
  } else if (!coeffs.empty()) {
    throw FormatError(o.at("coeffs"), "coefficients without a linsep proof");
  }
  if (auto* r = o.get("report")) c.report = string(*r, o.at("report"));
  return c;
}

}  // namespace detail

inline Certificate read_certificate(const Json& j) {
  detail::Object o(j, "");
  Certificate c = detail::read_certificate_fields(o);
  if (o.has("language_separator")) throw FormatError(o.at("language_separator"), "unexpected language block");
  o.finish();
  return c;
}

inline Json to_json(const LanguageCertificate& c) {
  Json j = to_json(c.cert);
  j["language_separator"] =
      Json{{"alphabet", c.alphabet},
           {"bridge", c.bridge},
           {"description", c.language_separator ? Json(*c.language_separator) : Json(nullptr)}};
  return j;
}

inline LanguageCertificate read_language_certificate(const Json& j) {
  detail::Object o(j, "");
  LanguageCertificate c;
  c.cert = detail::read_certificate_fields(o);
  detail::Object b(o.need("language_separator"), o.at("language_separator"));
  const Json& alpha = detail::array(b.need("alphabet"), b.at("alphabet"));
  for (std::size_t i = 0; i < alpha.size(); ++i)
    c.alphabet.push_back(detail::string(alpha[i], detail::child(b.at("alphabet"), i)));
  c.bridge = detail::string(b.need("bridge"), b.at("bridge"));
  if (auto* d = b.get("description"); d && !d->is_null())
    c.language_separator = detail::string(*d, b.at("description"));
  b.finish();
  o.finish();
  return c;
}

// ---- runs ----

inline Json to_json(const Run& r) {
  Json configs = Json::array({to_json(r.source)});
  for (const auto& s : r.steps) configs.push_back(to_json(s.to));
  return Json{{"transitions", to_json(r.labels())}, {"configs", configs}};
}

// ---- files ----

inline Json parse_text(const std::string& text, const std::string& name) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError("", name + ": " + e.what());
  }
}

inline Json load_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw FormatError("", "cannot open " + filename);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_text(text, filename);
}

}  // namespace vassep::io
