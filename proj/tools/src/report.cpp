#include "fakequad_cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace fakequad::cli {

namespace {

Json big(const BigInt& x) {
  if (x >= 0 && x <= BigInt(std::numeric_limits<std::uint64_t>::max())) return x.convert_to<std::uint64_t>();
  return x.str();
}

std::string fixed4(double x) {
  if (std::fabs(x) < 5e-5) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string joined(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

Json to_json(const AbelianInvariants& a) {
  Json j;
  j["free_rank"] = a.free_rank;
  Json t = Json::array();
  for (const auto& d : a.torsion) t.push_back(big(d));
  j["torsion"] = t;
  j["order"] = big(a.torsion_order());
  j["text"] = a.to_string();
  return j;
}

Json to_json(const Evidence& e) {
  Json j;
  j["id"] = e.id;
  j["anchor"] = e.anchor;
  j["kind"] = to_string(e.kind);
  j["passed"] = e.passed;
  j["detail"] = e.detail;
  return j;
}

Json to_json(const ParityVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.verdict);
  j["coefficients"] = {{"a1", v.coefficients.a1}, {"a2", v.coefficients.a2}};
  j["d1"] = v.coefficients.d1;
  j["d2"] = v.coefficients.d2;
  Json t = Json::array();
  for (const auto& d : v.h1.torsion) t.push_back(big(d));
  j["torsion"] = t;
  j["torsion_order"] = big(v.h1.torsion_order());
  j["torsion_odd"] = v.torsion_odd;
  j["literature_note"] = v.literature_note ? Json(*v.literature_note) : Json(nullptr);
  Json ev = Json::array();
  for (const auto& e : v.evidence) ev.push_back(to_json(e));
  j["evidence"] = ev;
  return j;
}

Json to_json(const RowReport& r) {
  Json j;
  j["row"] = r.row.index;
  j["group"] = r.row.group_label;
  j["group_id"] = {r.row.id_order, r.row.id_index};
  j["sig1"] = r.row.sig1;
  j["sig2"] = r.row.sig2;
  j["skipped"] = r.skipped ? Json(*r.skipped) : Json(nullptr);
  j["witness_source"] = r.witness_source;
  j["gv1"] = r.gv1;
  j["gv2"] = r.gv2;
  j["g1"] = r.g1;
  j["g2"] = r.g2;
  j["chi"] = r.chi;
  j["D"] = r.d;
  j["D_expected"] = r.row.d_expected;
  j["h1"] = to_json(r.h1);
  j["h1_expected"] = to_json(r.h1_expected);
  j["h1_printed"] = r.row.h1_printed;
  j["parity_annotation"] = to_string(r.row.parity);
  j["parity"] = r.parity ? to_json(*r.parity) : Json(nullptr);
  j["match"] = {{"free", r.free_match}, {"D", r.d_match}, {"h1", r.h1_match}, {"parity", r.parity_match}};
  j["passed"] = r.passed();
  return j;
}

Json to_json(const MainTheoremReport& r) {
  Json j;
  Json stages = Json::array();
  for (const auto& s : r.stages) stages.push_back({{"stage", s.name}, {"passed", s.passed}, {"detail", s.detail}});
  j["stages"] = stages;
  const auto failed = r.failed_stage();
  j["failed_stage"] = failed ? Json(*failed) : Json(nullptr);
  if (r.verdict) {
    const Json v = to_json(*r.verdict);
    for (auto it = v.begin(); it != v.end(); ++it) j[it.key()] = it.value();
  } else {
    j["verdict"] = nullptr;
  }
  j["passed"] = r.passed;
  return j;
}

std::vector<std::string> class_names(const ConjClassSet& cls) {
  std::vector<std::string> names;
  std::map<std::size_t, int> seen;
  for (std::size_t k = 0; k < cls.count(); ++k) {
    const std::size_t o = cls.rep_orders[k];
    names.push_back(std::to_string(o) + static_cast<char>('a' + seen[o]++));
  }
  return names;
}

std::string approx_string(const Cyclotomic& c) {
  const auto z = c.approx();
  const std::string re = fixed4(z.real());
  if (std::fabs(z.imag()) < 5e-5) return re;
  const std::string im = fixed4(z.imag());
  return re + (im.front() == '-' ? "" : "+") + im + "i";
}

Json to_json(const CharTable& ct) {
  Json j;
  const auto& cls = ct.classes();
  const auto names = class_names(cls);
  j["group"] = ct.group().label();
  j["order"] = ct.group().order();
  j["root_order"] = ct.root_order();
  Json classes = Json::array();
  for (std::size_t k = 0; k < cls.count(); ++k)
    classes.push_back({{"name", names[k]},
                       {"order", cls.rep_orders[k]},
                       {"size", cls.sizes[k]},
                       {"representative", format_cycles(ct.group().element(cls.reps[k]))}});
  j["classes"] = classes;
  j["degrees"] = ct.degrees();
  Json irr = Json::array();
  for (const auto& chi : ct.irreducibles()) {
    Json values = Json::array();
    for (const auto& v : chi.values) values.push_back({{"exact", v.to_string()}, {"approx", approx_string(v)}});
    irr.push_back(values);
  }
  j["irreducibles"] = irr;
  const auto orth = check_orthogonality(ct);
  j["orthogonality"] = {{"rows", orth.rows},
                        {"columns", orth.columns},
                        {"degrees_divide_order", orth.degrees_divide_order},
                        {"sum_of_squares", orth.sum_of_squares}};
  return j;
}

std::string to_text(const ParityVerdict& v) {
  std::ostringstream os;
  os << "K_S = " << v.coefficients.a1 << " Phi_1 + " << v.coefficients.a2 << " Phi_2  (d1 = " << v.coefficients.d1
     << ", d2 = " << v.coefficients.d2 << ")\n";
  os << "torsion: " << v.h1.torsion_string() << ", order " << v.h1.torsion_order().str()
     << (v.torsion_odd ? " (odd)" : " (even)") << "\n";
  os << "evidence:\n";
  for (const auto& e : v.evidence)
    os << "  [" << pass_fail(e.passed) << "] " << e.id << " (" << to_string(e.kind) << "; " << e.anchor << "): " << e.detail
       << "\n";
  if (v.literature_note) os << "literature note: " << *v.literature_note << "\n";
  os << "verdict: " << to_string(v.verdict) << "\n";
  return os.str();
}

std::string to_text(const RowReport& r) {
  std::ostringstream os;
  os << "row " << r.row.index << ": " << r.row.group_label << " <" << r.row.id_order << "," << r.row.id_index << "> "
     << format_multiplicities(r.row.sig1) << " " << format_multiplicities(r.row.sig2) << "\n";
  if (r.skipped) {
    os << "  skipped: " << *r.skipped << "\n";
    return os.str();
  }
  if (r.gv1.empty()) {
    os << "  no free witness pair found\n  result: FAIL\n";
    return os.str();
  }
  os << "  witnesses (" << r.witness_source << "):\n";
  os << "    gv1 = " << joined(r.gv1, " ") << "\n";
  os << "    gv2 = " << joined(r.gv2, " ") << "\n";
  os << "  genera: " << r.g1 << ", " << r.g2 << "; chi = " << r.chi << "\n";
  os << "  D: " << r.d << " (expected " << r.row.d_expected << ") " << pass_fail(r.d_match) << "\n";
  os << "  H1: " << r.h1.torsion_string() << " (expected " << r.h1_expected.torsion_string() << " from "
     << r.row.h1_printed << ") " << pass_fail(r.h1_match) << "\n";
  if (r.parity) {
    const char* v = to_string(r.parity->verdict);
    os << "  parity: computed " << v << ", annotated " << to_string(r.row.parity);
    if (r.parity->verdict == Verdict::undetermined) os << " (left open by computation)";
    os << " " << pass_fail(r.parity_match) << "\n";
  } else {
    os << "  parity: not computed FAIL\n";
  }
  os << "  result: " << pass_fail(r.passed()) << "\n";
  return os.str();
}

std::string to_text(const MainTheoremReport& r) {
  std::ostringstream os;
  for (const auto& s : r.stages) os << "[" << pass_fail(s.passed) << "] " << s.name << ": " << s.detail << "\n";
  if (r.verdict) {
    os << "evidence:\n";
    for (const auto& e : r.verdict->evidence)
      os << "  [" << pass_fail(e.passed) << "] " << e.id << " (" << to_string(e.kind) << "; " << e.anchor
         << "): " << e.detail << "\n";
  }
  if (r.passed)
    os << "verdict: " << to_string(r.verdict->verdict) << "\n";
  else
    os << "verdict: NONE (failed at " << r.failed_stage().value_or("unknown") << ")\n";
  return os.str();
}

std::string to_text(const CharTable& ct) {
  std::ostringstream os;
  const auto& cls = ct.classes();
  const auto names = class_names(cls);
  os << "group " << ct.group().label() << ", order " << ct.group().order() << ", " << cls.count()
     << " classes; z = exp(2 pi i / " << ct.root_order() << ")\n";
  os << "classes:\n";
  for (std::size_t k = 0; k < cls.count(); ++k)
    os << "  " << names[k] << "  order " << cls.rep_orders[k] << "  size " << cls.sizes[k] << "  rep "
       << format_cycles(ct.group().element(cls.reps[k])) << "\n";
  std::vector<std::string> deg;
  for (auto d : ct.degrees()) deg.push_back(std::to_string(d));
  os << "degrees: " << joined(deg, ",") << "\n";
  for (std::size_t i = 0; i < ct.size(); ++i) {
    const auto& chi = ct.irreducibles()[i];
    os << "chi_" << i + 1 << " (degree " << chi.degree() << "):\n";
    for (std::size_t k = 0; k < cls.count(); ++k)
      os << "  " << names[k] << ": " << chi[k].to_string() << "  ~ " << approx_string(chi[k]) << "\n";
  }
  const auto orth = check_orthogonality(ct);
  os << "orthogonality: rows " << pass_fail(orth.rows) << ", columns " << pass_fail(orth.columns) << "\n";
  return os.str();
}

}  // namespace fakequad::cli
