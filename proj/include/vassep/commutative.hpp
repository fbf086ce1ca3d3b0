#pragma once

// Commutative regular separability of labeled VAS languages, reduced to
// unary separability of the sections holding their Parikh images.

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vassep/linsets.hpp"
#include "vassep/vas.hpp"
#include "vassep/vassep.hpp"

namespace vassep {

enum class Acceptance { Exact, Cover };

/// A VAS whose transitions carry a letter index or nothing (silent). A run is
/// accepting when it ends at v0 (Exact) or anywhere above it (Cover).
struct LabeledVas {
  Vas vas;
  std::vector<std::string> alphabet;
  std::vector<std::optional<std::size_t>> labels;
  Acceptance acceptance = Acceptance::Exact;
  Config v0;

  void validate() const {
    vas.validate();
    if (labels.size() != vas.transitions.size())
      throw std::invalid_argument("labeled vas: " + std::to_string(labels.size()) + " labels for " +
                                  std::to_string(vas.transitions.size()) + " transitions");
    for (const auto& l : labels)
      if (l && *l >= alphabet.size()) throw std::invalid_argument("labeled vas: letter index out of range");
    if (v0.dim() != vas.dim) throw DimensionMismatch(vas.dim, v0.dim(), "labeled vas acceptance");
    if (!v0.is_nonneg()) throw std::invalid_argument("labeled vas: negative acceptance vector");
  }
};

/// Original coordinates first, then one counter per letter. The section keeps
/// the counters and pins the original coordinates: to v0 for Exact, to 0 for
/// Cover, where a final control phase subtracts v0 and then drains freely.
inline SectionedVas parikh_section(const LabeledVas& lv) {
  lv.validate();
  const std::size_t d = lv.vas.dim, m = lv.alphabet.size(), dim = d + m;
  auto widen = [&](const IntVector& t, std::optional<std::size_t> letter) {
    IntVector w(dim);
    for (std::size_t i = 0; i < d; ++i) w[i] = t[i];
    if (letter) w[d + *letter] = 1;
    return w;
  };
  Config src(dim);
  for (std::size_t i = 0; i < d; ++i) src[i] = lv.vas.source[i];

  if (lv.acceptance == Acceptance::Exact) {
    std::vector<IntVector> ts;
    for (std::size_t j = 0; j < lv.vas.transitions.size(); ++j) ts.push_back(widen(lv.vas.transitions[j], lv.labels[j]));
    SectionSpec s;
    for (std::size_t i = 0; i < d; ++i) s.fixed[i] = lv.v0[i];
    for (std::size_t i = d; i < dim; ++i) s.keep.push_back(i);
    return {Vas(dim, std::move(src), std::move(ts)), std::move(s)};
  }

  Vass w;
  w.dim = dim;
  w.states = {"run", "drain"};
  w.source = src;
  for (std::size_t j = 0; j < lv.vas.transitions.size(); ++j)
    w.transitions.push_back({0, widen(lv.vas.transitions[j], lv.labels[j]), 0});
  w.transitions.push_back({0, -widen(lv.v0, std::nullopt), 1});
  for (std::size_t i = 0; i < d; ++i) w.transitions.push_back({1, IntVector::unit(dim, i, -1), 1});
  SectionedVas compiled = vass_to_vas(w, 1);
  SectionSpec s;
  for (std::size_t i = 0; i < d; ++i) s.fixed[i] = 0;
  for (std::size_t i = d; i < dim; ++i) s.keep.push_back(i);
  for (const auto& [i, x] : compiled.section.fixed) s.fixed[i] = x;
  compiled.section = std::move(s);
  compiled.validate();
  return compiled;
}

/// A commutative language decision together with the word-level reading of a
/// unary separator: the words whose letter counts fall in one of its classes.
struct LanguageCertificate {
  Certificate cert;
  std::vector<std::string> alphabet;
  std::string bridge;
  std::optional<std::string> language_separator;
};

/// "{w : (#a = 0 and #b >= 2, #b = 0 mod 2) or ...}" over the alphabet.
inline std::string describe_language_separator(const UnarySet& s, const std::vector<std::string>& alphabet) {
  std::ostringstream os;
  os << "{w :";
  if (s.classes().empty()) os << " false";
  bool first = true;
  for (const auto& cls : s.classes()) {
    os << (first ? " " : " or ") << '(';
    first = false;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) os << " and ";
      if (!cls[i].large)
        os << '#' << alphabet[i] << " = " << cls[i].value;
      else if (s.modulus() == 1)
        os << '#' << alphabet[i] << " >= 1";
      else
        os << '#' << alphabet[i] << " >= " << s.modulus() << ", #" << alphabet[i] << " = " << cls[i].value
           << " mod " << s.modulus();
    }
    if (cls.empty()) os << "true";
    os << ')';
  }
  os << '}';
  return os.str();
}

namespace detail {

inline LanguageCertificate decide_languages(const LabeledVas& v, const LabeledVas& w, const Budgets& budgets,
                                            std::string bridge) {
  if (v.alphabet != w.alphabet) throw std::invalid_argument("languages over different alphabets");
  LanguageCertificate out;
  out.alphabet = v.alphabet;
  out.bridge = std::move(bridge);
  out.cert = decide_separability(parikh_section(v), parikh_section(w), Mode::Unary, budgets);
  if (out.cert.verdict == Verdict::Separable)
    out.language_separator = describe_language_separator(std::get<UnarySet>(*out.cert.separator), v.alphabet);
  return out;
}

}  // namespace detail

/// Some commutative regular language contains L(v) and misses L(w) iff the
/// Parikh images are unary separable.
inline LanguageCertificate commutative_regular_separability(const LabeledVas& v, const LabeledVas& w,
                                                            const Budgets& budgets = {}) {
  return detail::decide_languages(v, w, budgets, "commutative regular separability via Parikh images");
}

/// Regular separability of the commutative closures: the same question, since
/// a closure and its language share the Parikh image, and regular separability
/// of commutative languages is unary separability of their images.
inline LanguageCertificate regular_sep_commutative_closures(const LabeledVas& v, const LabeledVas& w,
                                                            const Budgets& budgets = {}) {
  return detail::decide_languages(v, w, budgets,
                                  "regular separability of commutative closures, equivalent to unary "
                                  "separability of Parikh images");
}

inline bool verify_language_certificate(const LabeledVas& v, const LabeledVas& w, const LanguageCertificate& c) {
  if (c.alphabet != v.alphabet || v.alphabet != w.alphabet || c.cert.mode != Mode::Unary) return false;
  return verify_certificate(parikh_section(v), parikh_section(w), c.cert);
}

}  // namespace vassep
