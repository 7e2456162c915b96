#include "spbw/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace spbw {

namespace {

std::string idx(const ExponentVector& a) { return a.size() == 1 ? std::to_string(a[0]) : a.str(); }

std::string set_str(const Ring& R, const std::vector<Element>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + R.format(xs[i]);
  return s + "}";
}

Json elements_json(const Ring& R, const std::vector<Element>& xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(R.format(x));
  return j;
}

std::string product_label(PropertyId p, const PairWitness& w) {
  using P = PropertyId;
  const std::string L = idx(w.left), Rr = idx(w.right);
  switch (p) {
    case P::SigmaSkewArmendariz:
    case P::WeakSigmaSkewArmendariz:
      return "a" + L + "*sigma^" + L + "(b" + Rr + ")";
    case P::SDArmendariz:
    case P::SDWeakArmendariz:
    {
      auto mon = [](const ExponentVector& e) { return e.is_zero() ? std::string() : "*" + monomial_str(e); };
      return "a" + L + mon(w.left) + "*b" + Rr + mon(w.right);
    }
    default:
      return "a" + L + "*b" + Rr;
  }
}

struct WitnessVisitor {
  const SkewExtension& a;
  PropertyId p;
  const Ring& R = a.ring();

  std::string operator()(const NilpotentWitness& w) const { return "a=" + R.format(w.a) + "; a^2=0"; }
  std::string operator()(const NonCentralIdempotentWitness& w) const {
    return "e=" + R.format(w.e) + "; x=" + R.format(w.x) + "; e*x=" + R.format(R.mul(w.e, w.x)) +
           "; x*e=" + R.format(R.mul(w.x, w.e));
  }
  std::string operator()(const IfpWitness& w) const {
    return "a=" + R.format(w.a) + "; s=" + R.format(w.s) + "; x=" + R.format(w.x) + "; a*s=0; a*x*s=" +
           R.format(R.mul(R.mul(w.a, w.x), w.s));
  }
  std::string operator()(const AnnihilatorWitness& w) const {
    return "S=" + set_str(R, w.subset) + "; r(S)=" + set_str(R, w.annihilator) + " is not e*R";
  }
  std::string operator()(const RigidWitness& w) const {
    return "r=" + R.format(w.r) + "; alpha=" + idx(w.alpha) + "; r*sigma^alpha(r)=0";
  }
  std::string operator()(const PairWitness& w) const {
    return "f=" + a.render(w.f) + "; g=" + a.render(w.g) + "; " + product_label(p, w) + "=" + a.render(w.product);
  }
  std::string operator()(const PolyNilpotentWitness& w) const { return "f=" + a.render(w.f) + "; f^2=0"; }
};

struct WitnessJson {
  const SkewExtension& a;
  const Ring& R = a.ring();

  Json operator()(const NilpotentWitness& w) const { return {{"kind", "nilpotent"}, {"a", R.format(w.a)}}; }
  Json operator()(const NonCentralIdempotentWitness& w) const {
    return {{"kind", "non-central-idempotent"}, {"e", R.format(w.e)}, {"x", R.format(w.x)}};
  }
  Json operator()(const IfpWitness& w) const {
    return {{"kind", "ifp"}, {"a", R.format(w.a)}, {"s", R.format(w.s)}, {"x", R.format(w.x)}};
  }
  Json operator()(const AnnihilatorWitness& w) const {
    return {{"kind", "annihilator"}, {"subset", elements_json(R, w.subset)}, {"annihilator", elements_json(R, w.annihilator)}};
  }
  Json operator()(const RigidWitness& w) const {
    return {{"kind", "rigid"}, {"r", R.format(w.r)}, {"alpha", w.alpha.e}};
  }
  Json operator()(const PairWitness& w) const {
    return {{"kind", "pair"},       {"f", a.render(w.f)},     {"g", a.render(w.g)},
            {"left", w.left.e},     {"right", w.right.e},     {"product", a.render(w.product)}};
  }
  Json operator()(const PolyNilpotentWitness& w) const { return {{"kind", "poly-nilpotent"}, {"f", a.render(w.f)}}; }
};

Json statement_json(const Statement& s) {
  Json j = {{"label", s.label}, {"truth", truth_name(s.truth)}, {"detail", s.detail}};
  j["bound"] = s.bound ? Json(*s.bound) : Json(nullptr);
  return j;
}

// Degree of the polynomials in a witness; 0 for witnesses living in R.
int witness_degree(const Witness& w) {
  if (const auto* p = std::get_if<PairWitness>(&w.data)) return std::max(p->f.degree(), p->g.degree());
  if (const auto* p = std::get_if<PolyNilpotentWitness>(&w.data)) return p->f.degree();
  return 0;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

std::string statement_line(const Statement& s) {
  std::string out = "  " + pad(truth_name(s.truth), 15) + s.label;
  if (s.bound && s.truth == Truth::PresumedTrue) out += " (D=" + std::to_string(*s.bound) + ")";
  if (!s.detail.empty()) out += "\n  " + std::string(15, ' ') + "  " + s.detail;
  return out + "\n";
}

}  // namespace

std::string describe_witness(const SkewExtension& a, const Witness& w) {
  return std::visit(WitnessVisitor{a, w.property}, w.data);
}

Format format_from_name(const std::string& s) {
  if (s == "human") return Format::Human;
  if (s == "json") return Format::Json;
  if (s == "json-like-tree") return Format::JsonTree;
  throw DefinitionError("unknown format '" + s + "' (expected human, json or json-like-tree)");
}

Json witness_json(const SkewExtension& a, const Witness& w) {
  Json j = std::visit(WitnessJson{a}, w.data);
  j["property"] = property_name(w.property);
  j["text"] = describe_witness(a, w);
  return j;
}

Json verdict_json(const SkewExtension& a, const Verdict& v, unsigned D) {
  Json j = {{"property", property_name(v.property)},
            {"status", status_name(v.status)},
            {"label", status_label(v)},
            {"degree", D},
            {"pairs_examined", v.pairs_examined}};
  j["bound"] = v.bound ? Json(*v.bound) : Json(nullptr);
  j["witness"] = v.witness ? witness_json(a, *v.witness) : Json(nullptr);
  j["witness_degree"] = v.witness ? Json(witness_degree(*v.witness)) : Json(nullptr);
  return j;
}

Json theorem_json(const TheoremReport& r) {
  Json j = {{"theorem", theorem_name(r.id)},
            {"claim", theorem_claim(r.id)},
            {"instance", r.instance},
            {"degree", r.degree},
            {"status", theorem_status_name(r.status)},
            {"note", r.note}};
  j["hypotheses"] = Json::array();
  for (const auto& s : r.hypotheses) j["hypotheses"].push_back(statement_json(s));
  j["conclusions"] = Json::array();
  for (const auto& s : r.conclusions) j["conclusions"].push_back(statement_json(s));
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  return j;
}

Json suite_json(const std::vector<TheoremReport>& reports) {
  const auto c = count_statuses(reports);
  Json j;
  j["reports"] = Json::array();
  for (const auto& r : reports) j["reports"].push_back(theorem_json(r));
  j["summary"] = {{"Consistent", c.consistent},
                  {"Violation", c.violation},
                  {"HypothesesNotMet", c.hypotheses_not_met},
                  {"Inconclusive", c.inconclusive}};
  return j;
}

Json implication_json(const SkewExtension& a, const ImplicationReport& r, unsigned D) {
  Json j;
  j["instance"] = describe_instance(a);
  j["degree"] = D;
  j["verdicts"] = Json::array();
  for (const auto& o : r.outcomes) {
    if (o.verdict) {
      j["verdicts"].push_back(verdict_json(a, *o.verdict, D));
    } else {
      j["verdicts"].push_back({{"property", property_name(o.property)}, {"status", "Error"}, {"error", o.error}});
    }
  }
  j["edges"] = Json::array();
  for (const auto& row : r.rows)
    j["edges"].push_back({{"stronger", property_name(row.stronger)},
                          {"weaker", property_name(row.weaker)},
                          {"consistent", !row.inconsistent},
                          {"note", row.note}});
  j["inconsistent"] = r.inconsistent_count();
  return j;
}

Json expectation_json(const CatalogEntry& e) {
  Json j = {{"name", e.name}, {"note", e.note}};
  j["expected"] = Json::array();
  for (const auto& x : e.expected)
    j["expected"].push_back({{"property", property_name(x.property)},
                             {"status", x.status},
                             {"degree", x.degree},
                             {"basis", basis_name(x.basis)}});
  return j;
}

std::string human_verdict(const SkewExtension& a, const Verdict& v) {
  std::string out = property_name(v.property) + ": " + status_label(v) + "\n";
  if (v.witness) out += "witness: " + describe_witness(a, *v.witness) + "\n";
  if (v.pairs_examined) out += "pairs examined: " + std::to_string(v.pairs_examined) + "\n";
  return out;
}

std::string human_theorem(const TheoremReport& r) {
  std::string out = theorem_name(r.id) + ": " + theorem_status_name(r.status) + "\n";
  out += "claim: " + std::string(theorem_claim(r.id)) + "\n";
  out += "instance: " + r.instance + ", D = " + std::to_string(r.degree) + "\n";
  if (!r.hypotheses.empty()) out += "hypotheses:\n";
  for (const auto& s : r.hypotheses) out += statement_line(s);
  if (!r.conclusions.empty()) out += "statements:\n";
  for (const auto& s : r.conclusions) out += statement_line(s);
  if (!r.note.empty()) out += "note: " + r.note + "\n";
  if (r.witness) out += "witness: " + *r.witness + "\n";
  return out;
}

std::string human_suite(const std::vector<TheoremReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += pad(theorem_name(r.id), 26) + theorem_status_name(r.status) + "\n";
  const auto c = count_statuses(reports);
  out += "consistent " + std::to_string(c.consistent) + ", violation " + std::to_string(c.violation) +
         ", hypotheses not met " + std::to_string(c.hypotheses_not_met) + ", inconclusive " +
         std::to_string(c.inconclusive) + "\n";
  return out;
}

std::string human_implication(const SkewExtension& a, const ImplicationReport& r, unsigned D) {
  std::string out = describe_instance(a) + ", D = " + std::to_string(D) + "\n";
  for (const auto& o : r.outcomes) {
    out += "  " + pad(property_name(o.property), 30);
    if (!o.verdict) {
      out += "error: " + o.error + "\n";
      continue;
    }
    out += status_label(*o.verdict);
    if (o.verdict->witness)
      out += "  [degree " + std::to_string(witness_degree(*o.verdict->witness)) + "] " + describe_witness(a, *o.verdict->witness);
    out += "\n";
  }
  out += "implications:\n";
  for (const auto& row : r.rows) {
    out += "  " + pad(property_name(row.stronger) + " => " + property_name(row.weaker), 58) +
           (row.inconsistent ? "INCONSISTENT" : "ok");
    if (!row.note.empty()) out += "  " + row.note;
    out += "\n";
  }
  return out;
}

std::string emit(const Json& doc, Format f) {
  if (f == Format::JsonTree) return doc.dump(2) + "\n";
  return doc.dump() + "\n";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Holds: return 0;
    case Status::FailsWithWitness: return 1;
    case Status::VerifiedUpTo: return 2;
  }
  return 70;
}

int exit_code(TheoremStatus s) {
  switch (s) {
    case TheoremStatus::Consistent: return 0;
    case TheoremStatus::Violation: return 1;
    case TheoremStatus::HypothesesNotMet:
    case TheoremStatus::Inconclusive: return 2;
  }
  return 70;
}

}  // namespace spbw
