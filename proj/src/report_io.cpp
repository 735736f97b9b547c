#include "monorel/report_io.hpp"

#include <sstream>

namespace monorel {

namespace {

struct NamedVerdict {
  const char* name;
  const Verdict* verdict;
};

std::vector<NamedVerdict> flags(const ClassificationReport& r) {
  return {{"monotone", &r.monotone},
          {"skew", &r.skew},
          {"representable", &r.representable},
          {"ni", &r.ni},
          {"unique", &r.unique},
          {"dual_representable", &r.dual_representable},
          {"maximal", &r.maximal}};
}

nlohmann::json pair_json(const PointPair& p) { return nlohmann::json::array({point_json(p.first), point_json(p.second)}); }

}  // namespace

nlohmann::json vec_json(const Vec& v) {
  auto out = nlohmann::json::array();
  for (const auto& e : v) out.push_back(to_string(e));
  return out;
}

nlohmann::json point_json(const Point& z) { return {{"x", vec_json(z.x())}, {"y", vec_json(z.y())}}; }

nlohmann::json subspace_json(const Subspace& s) {
  auto basis = nlohmann::json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) basis.push_back(vec_json(s.rows().row(i)));
  return {{"n", s.n()}, {"dim", s.dim()}, {"basis", basis}};
}

nlohmann::json verdict_json(const Verdict& v) {
  return {{"value", v.value}, {"tier", to_string(v.tier)}, {"probes", v.probes}, {"rule", v.rule}};
}

nlohmann::json report_json(const ClassificationReport& r, std::string_view kind) {
  nlohmann::json j;
  j["kind"] = std::string(kind);
  j["n"] = r.n;
  j["dim"] = r.dim;
  nlohmann::json f;
  for (const auto& [name, v] : flags(r)) f[name] = verdict_json(*v);
  j["flags"] = f;

  nlohmann::json w = nlohmann::json::object();
  if (r.non_monotone) w["non_monotone"] = point_json(*r.non_monotone);
  if (r.non_monotone_pair) w["non_monotone_pair"] = pair_json(*r.non_monotone_pair);
  if (r.non_ni) w["non_ni"] = point_json(*r.non_ni);
  if (r.non_unique) w["non_unique"] = pair_json(*r.non_unique);
  if (r.non_maximal) w["non_maximal"] = point_json(*r.non_maximal);
  if (r.non_representable) w["non_representable"] = point_json(*r.non_representable);
  j["witnesses"] = w;

  if (r.hull_monotone) {
    nlohmann::json h;
    h["monotone"] = verdict_json(*r.hull_monotone);
    if (r.hull_witness) h["witness"] = point_json(*r.hull_witness);
    if (r.hull_coefficients) h["coefficients"] = vec_json(*r.hull_coefficients);
    j["hull"] = h;
  }
  j["notes"] = r.notes;
  return j;
}

nlohmann::json sequence_json(const EvConstSeq& y) { return {{"head", vec_json(y.head)}, {"tail", to_string(y.tail)}}; }

nlohmann::json gossez_json(const GossezReport& r) {
  auto checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"identity", c.name},
                      {"applicable", c.applicable},
                      {"residual", to_string(c.residual)},
                      {"passed", c.passed()}});
  }
  return {{"checks", checks},
          {"shifted_pairing", to_string(r.shifted_pairing)},
          {"sum_v_squared", to_string(r.sum_v_squared)},
          {"all_passed", r.all_passed()}};
}

std::string format_vec(const Vec& v) {
  std::string out;
  for (const auto& e : v) out += (out.empty() ? "" : " ") + to_string(e);
  return out;
}

std::string format_point(const Point& z) { return "(" + format_vec(z.x()) + " ; " + format_vec(z.y()) + ")"; }

std::string format_verdict(const Verdict& v) {
  std::string tier = to_string(v.tier);
  if (v.tier == Certainty::Probed) tier += "(" + std::to_string(v.probes) + ")";
  return std::string(v.value ? "true " : "false") + "  " + tier;
}

std::string report_text(const ClassificationReport& r, std::string_view kind) {
  std::ostringstream os;
  os << "kind                " << kind << '\n';
  os << "n                   " << r.n << '\n';
  os << "dim                 " << r.dim << '\n';
  for (const auto& [name, v] : flags(r)) {
    std::string label = name;
    label.resize(20, ' ');
    os << label << format_verdict(*v) << "  " << v->rule << '\n';
  }
  if (r.hull_monotone) {
    os << "hull_monotone       " << format_verdict(*r.hull_monotone) << "  " << r.hull_monotone->rule << '\n';
    if (r.hull_witness) os << "hull witness        " << format_point(*r.hull_witness) << '\n';
    if (r.hull_coefficients) os << "hull coefficients   " << format_vec(*r.hull_coefficients) << '\n';
  }
  auto pair_text = [](const PointPair& p) { return format_point(p.first) + " " + format_point(p.second); };
  if (r.non_monotone) os << "witness non_monotone " << format_point(*r.non_monotone) << '\n';
  if (r.non_monotone_pair) os << "witness non_monotone_pair " << pair_text(*r.non_monotone_pair) << '\n';
  if (r.non_ni) os << "witness non_ni " << format_point(*r.non_ni) << '\n';
  if (r.non_unique) os << "witness non_unique " << pair_text(*r.non_unique) << '\n';
  if (r.non_maximal) os << "witness non_maximal " << format_point(*r.non_maximal) << '\n';
  if (r.non_representable) os << "witness non_representable " << format_point(*r.non_representable) << '\n';
  for (const auto& note : r.notes) os << "note " << note << '\n';
  return os.str();
}

std::string subspace_text(const Subspace& s) {
  std::ostringstream os;
  os << "n " << s.n() << "\ndim " << s.dim() << "\nbasis\n";
  for (std::size_t i = 0; i < s.dim(); ++i) os << format_vec(s.rows().row(i)) << '\n';
  os << "end\n";
  return os.str();
}

std::string sequence_text(const EvConstSeq& y) {
  return "head [" + format_vec(y.head) + "]\ntail " + to_string(y.tail) + '\n';
}

std::string gossez_text(const GossezReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << (c.applicable ? (c.passed() ? "pass " : "FAIL ") : "n/a  ") << c.name << "  residual " << to_string(c.residual)
       << '\n';
  }
  os << "<Tv + <v, e> e, v> = " << to_string(r.shifted_pairing) << ", <v, e>^2 = " << to_string(r.sum_v_squared) << '\n';
  return os.str();
}

}  // namespace monorel
