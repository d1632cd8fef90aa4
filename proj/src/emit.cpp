#include "artin1/emit.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace artin1 {

namespace {

nlohmann::ordered_json coeff_strings(const std::vector<uint32_t>& coeffs) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (uint32_t c : coeffs) a.push_back(std::to_string(c));
  return a;
}

std::vector<uint32_t> coeffs_from(const nlohmann::json& a) {
  std::vector<uint32_t> v;
  for (const auto& s : a) v.push_back(uint32_t(std::stoul(s.get<std::string>())));
  return v;
}

std::string coeff_list(const std::vector<uint32_t>& coeffs) {
  std::string s = "[";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coeffs[i]);
  }
  return s + "]";
}

}  // namespace

std::string verdict_string(const Certificate& cert) {
  switch (cert.verdict) {
    case Verdict::Certified21:
      return "CERTIFIED_21";
    case Verdict::CertifiedOther:
      return "CERTIFIED_OTHER(" + std::to_string(cert.plus_p) + ")";
    case Verdict::Inconsistent:
      return "INCONSISTENT";
  }
  return "INCONSISTENT";
}

nlohmann::ordered_json cert_to_json(const Certificate& cert) {
  nlohmann::ordered_json curve;
  curve["a"] = cert.prov.curve_a;
  curve["b"] = cert.prov.curve_b;
  curve["j"] = cert.prov.curve_j;

  nlohmann::ordered_json params;
  params["B_sign"] = cert.prov.b_sign;
  params["c"] = cert.prov.c;
  params["twist_d"] = cert.prov.twist_d;

  nlohmann::ordered_json model;
  model["curve"] = curve;
  model["params"] = params;
  model["a4_coeffs"] = coeff_strings(cert.a4_coeffs);
  model["a6_coeffs"] = coeff_strings(cert.a6_coeffs);

  nlohmann::ordered_json fibers = nlohmann::ordered_json::array();
  for (const FiberSummary& f : cert.fibers) {
    nlohmann::ordered_json e;
    e["place"] = f.place;
    e["type"] = f.type;
    e["euler"] = f.euler;
    if (f.split < 0)
      e["split"] = nullptr;
    else
      e["split"] = f.split == 1;
    fibers.push_back(e);
  }

  nlohmann::ordered_json counts;
  counts["N1"] = cert.n1;
  counts["N2"] = cert.n2;

  nlohmann::ordered_json traces;
  traces["t1"] = cert.t1;
  traces["t2"] = cert.t2;

  nlohmann::ordered_json eigen;
  eigen["plus_p"] = cert.plus_p;
  eigen["minus_p"] = cert.minus_p;

  nlohmann::ordered_json j;
  j["p"] = cert.p;
  j["model"] = model;
  j["fibers"] = fibers;
  j["counts"] = counts;
  j["traces"] = traces;
  j["eigen"] = eigen;
  j["rho_fp"] = cert.rho_fp;
  j["rho_fp2"] = cert.rho_fp2;
  j["artin_invariant"] = cert.artin_invariant;
  j["verdict"] = verdict_string(cert);
  return j;
}

Certificate cert_from_json(const nlohmann::json& j) {
  Certificate c;
  c.p = j.at("p").get<uint64_t>();
  const auto& model = j.at("model");
  const auto& curve = model.at("curve");
  // The schema only ever carries pipeline certificates, whose pencils are all
  // of the double-II* construction.
  c.prov.kind = PencilKind::Inose;
  c.prov.curve_a = curve.at("a").get<uint32_t>();
  c.prov.curve_b = curve.at("b").get<uint32_t>();
  c.prov.curve_j = curve.at("j").get<uint32_t>();
  const auto& params = model.at("params");
  c.prov.b_sign = params.at("B_sign").get<int>();
  c.prov.c = params.at("c").get<uint32_t>();
  c.prov.twist_d = params.at("twist_d").get<uint32_t>();
  c.a4_coeffs = coeffs_from(model.at("a4_coeffs"));
  c.a6_coeffs = coeffs_from(model.at("a6_coeffs"));
  for (const auto& f : j.at("fibers")) {
    FiberSummary s;
    s.place = f.at("place").get<std::string>();
    s.type = f.at("type").get<std::string>();
    s.euler = f.at("euler").get<int>();
    const auto& sp = f.at("split");
    s.split = sp.is_null() ? -1 : (sp.get<bool>() ? 1 : 0);
    c.fibers.push_back(s);
  }
  c.n1 = j.at("counts").at("N1").get<int64_t>();
  c.n2 = j.at("counts").at("N2").get<int64_t>();
  c.t1 = j.at("traces").at("t1").get<int64_t>();
  c.t2 = j.at("traces").at("t2").get<int64_t>();
  c.plus_p = j.at("eigen").at("plus_p").get<int>();
  c.minus_p = j.at("eigen").at("minus_p").get<int>();
  c.rho_fp = j.at("rho_fp").get<int>();
  c.rho_fp2 = j.at("rho_fp2").get<int>();
  c.artin_invariant = j.at("artin_invariant").get<std::string>();
  const std::string v = j.at("verdict").get<std::string>();
  c.verdict = v == "CERTIFIED_21"
                  ? Verdict::Certified21
                  : (v == "INCONSISTENT" ? Verdict::Inconsistent : Verdict::CertifiedOther);
  return c;
}

std::string cert_json_text(const Certificate& cert) { return cert_to_json(cert).dump(2) + "\n"; }

std::string csv_header() {
  return "p,b_sign,c,twist_d,curve_a,curve_b,n1,n2,t1,t2,plus_p,minus_p,rho_fp,"
         "rho_fp2,verdict";
}

std::string cert_csv_row(const Certificate& c) {
  std::ostringstream os;
  os << c.p << ',' << c.prov.b_sign << ',' << c.prov.c << ',' << c.prov.twist_d << ','
     << c.prov.curve_a << ',' << c.prov.curve_b << ',' << c.n1 << ',' << c.n2 << ',' << c.t1
     << ',' << c.t2 << ',' << c.plus_p << ',' << c.minus_p << ',' << c.rho_fp << ','
     << c.rho_fp2 << ',' << verdict_string(c);
  return os.str();
}

std::string cert_text(const Certificate& c) {
  std::ostringstream os;
  os << "p = " << c.p << "\n";
  os << "model: y^2 = x^3 + A4(t) x + A6(t) over F_" << c.p << "\n";
  os << "  curve: a = " << c.prov.curve_a << ", b = " << c.prov.curve_b
     << ", j = " << c.prov.curve_j << "\n";
  os << "  params: B_sign = " << (c.prov.b_sign >= 0 ? "+1" : "-1") << ", c = " << c.prov.c
     << ", twist_d = " << c.prov.twist_d << "\n";
  os << "  A4 coefficients: " << coeff_list(c.a4_coeffs) << "\n";
  os << "  A6 coefficients: " << coeff_list(c.a6_coeffs) << "\n";
  os << "singular fibers:\n";
  for (const FiberSummary& f : c.fibers) {
    os << "  " << f.place << "  " << f.type << "  euler " << f.euler;
    if (f.split == 1)
      os << "  (components rational)";
    else if (f.split == 0)
      os << "  (components not all rational)";
    os << "\n";
  }
  os << "counts: N1 = " << c.n1 << " over F_p, N2 = " << c.n2 << " over F_{p^2}\n";
  os << "traces: t1 = " << c.t1 << ", t2 = " << c.t2 << "\n";
  os << "eigenvalue multiplicities: +p x " << c.plus_p << ", -p x " << c.minus_p << "\n";
  os << "rho over F_p = " << c.rho_fp << ", rho over F_{p^2} = " << c.rho_fp2 << "\n";
  os << "artin invariant: " << c.artin_invariant << "\n";
  os << "verdict: " << verdict_string(c) << "\n";
  return os.str();
}

std::string cache_key(uint64_t p, const PencilProvenance& prov) {
  std::string s = "cert-v";
  s += kArtifactVersion;
  s += "-p" + std::to_string(p);
  s += "-B";
  s += prov.b_sign >= 0 ? "+1" : "-1";
  s += "-c" + std::to_string(prov.c);
  s += "-d" + std::to_string(prov.twist_d);
  s += ".json";
  return s;
}

std::optional<std::string> cache_load(const std::string& dir, const std::string& key) {
  std::filesystem::path path = std::filesystem::path(dir) / key;
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) return std::nullopt;
  return buf.str();
}

void cache_store(const std::string& dir, const std::string& key, const std::string& bytes) {
  namespace fs = std::filesystem;
  fs::path d(dir);
  fs::create_directories(d);
  fs::path tmp = d / (key + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), std::streamsize(bytes.size()));
    if (!out.good()) fail(Errc::Internal, "cache write failed: " + tmp.string());
  }
  fs::rename(tmp, d / key);
}

}  // namespace artin1
