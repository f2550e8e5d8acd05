#include "tough/report.hpp"

#include <charconv>
#include <cmath>

namespace tough {

namespace {

Json members(VertexSet s) { return Json(s.members()); }

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, end) : std::to_string(x);
}

Json json_real(double x) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

Json to_json(const ToughnessCertificate& c) {
  Json j;
  j["tau"] = c.to_string();
  if (c.infinite) {
    j["cut"] = nullptr;
    j["omega"] = nullptr;
  } else {
    j["cut"] = members(c.cut);
    j["omega"] = c.omega;
  }
  return j;
}

Json to_json(const IndependenceCertificate& c) {
  Json j;
  j["alpha"] = c.alpha;
  j["witness"] = members(c.witness);
  return j;
}

Json to_json(const ConnectivityCertificate& c) {
  Json j;
  j["kappa"] = c.kappa;
  j["separator"] = c.separator ? members(*c.separator) : Json(nullptr);
  return j;
}

Json to_json(const SpectralSummary& s) {
  Json j;
  j["adjacency"] = s.adjacency;
  j["laplacian"] = s.laplacian;
  j["normalized_laplacian"] = s.normalized;
  j["mu_1"] = s.mu_max();
  j["mu_n_minus_1"] = s.algebraic_connectivity();
  j["xi"] = s.xi;
  j["lambda"] = s.lambda ? Json(*s.lambda) : Json(nullptr);
  return j;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["delta"] = r.min_degree;
  j["Delta"] = r.max_degree;
  j["tau"] = r.tau.to_string();
  j["thm11_inv_Delta"] = json_real(r.thm11.inv_max_degree);
  j["thm11_degree_term"] = json_real(r.thm11.degree_term);
  j["thm11_spectral_term"] = json_real(r.thm11.spectral_term);
  j["eq11_value"] = json_real(r.gu_haemers.eq11);
  j["eq12_value"] = json_real(r.gu_haemers.eq12);
  j["regular_brouwer"] = r.regular ? json_real(r.regular->brouwer) : Json(nullptr);
  j["regular_brouwer_strict"] = r.regular ? json_real(r.regular->brouwer_strict) : Json(nullptr);
  j["regular_alon"] = r.regular ? json_real(r.regular->alon) : Json(nullptr);
  j["corollary_cap"] = r.corollary_cap ? json_real(*r.corollary_cap) : Json(nullptr);
  j["equality_eq11"] = r.equality_eq11;
  j["equality_eq12"] = r.equality_eq12;
  j["xi_anomaly"] = r.thm11.xi_anomaly;
  return j;
}

Json to_json(const ExtremalWitness& w) {
  Json j;
  j["delta"] = w.delta;
  j["independent_part"] = members(w.independent_part);
  j["base_edges"] = w.base.edge_list();
  j["eigen_condition_ok"] = w.eigen_condition_ok;
  return j;
}

Json to_json(const EqualityVerdict& v) {
  Json j;
  j["eq11_holds"] = v.eq11_holds;
  j["eq12_holds"] = v.eq12_holds;
  j["structural"] = v.structural;
  j["consistent"] = v.consistent;
  return j;
}

std::string bound_report_csv_header() {
  return "graph_id,n,m,delta,Delta,tau,thm11_inv_Delta,thm11_degree_term,thm11_spectral_term,"
         "eq11_value,eq12_value,regular_brouwer,regular_brouwer_strict,regular_alon,"
         "corollary_cap,equality_eq11,equality_eq12,xi_anomaly";
}

std::string to_csv_row(const BoundReport& r) {
  auto opt = [](bool present, double x) { return present ? format_real(x) : std::string(); };
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  std::string row;
  for (const std::string& cell :
       {r.graph_id, std::to_string(r.n), std::to_string(r.m), std::to_string(r.min_degree),
        std::to_string(r.max_degree), r.tau.to_string(), format_real(r.thm11.inv_max_degree),
        format_real(r.thm11.degree_term), format_real(r.thm11.spectral_term),
        format_real(r.gu_haemers.eq11), format_real(r.gu_haemers.eq12),
        opt(r.regular.has_value(), r.regular ? r.regular->brouwer : 0.0),
        opt(r.regular.has_value(), r.regular ? r.regular->brouwer_strict : 0.0),
        opt(r.regular.has_value(), r.regular ? r.regular->alon : 0.0),
        opt(r.corollary_cap.has_value(), r.corollary_cap.value_or(0.0)), flag(r.equality_eq11),
        flag(r.equality_eq12), flag(r.thm11.xi_anomaly)}) {
    if (!row.empty()) row += ',';
    row += cell;
  }
  return row;
}

}  // namespace tough
