#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"

namespace deltacodes {

using json = nlohmann::ordered_json;

inline json vec_tokens(const Field& F, const vec& v) {
  json a = json::array();
  for (elem x : v) a.push_back(to_token(F, x));
  return a;
}

// "(n, (q^2)^k, d)" when the F_q-dimension is even, "(n, q^K, d)" otherwise.
inline std::string param_label(const AdditiveCode& C, std::optional<u64> d) {
  const u64 q = C.ctx->q;
  const unsigned t = C.ctx->t;
  std::string card = C.k_fq() % t == 0
                         ? "(" + std::to_string(q) + "^" + std::to_string(t) + ")^" + std::to_string(C.k_fq() / t)
                         : std::to_string(q) + "^" + std::to_string(C.k_fq());
  return "(" + std::to_string(C.n()) + ", " + card + ", " + (d ? std::to_string(*d) : std::string("?")) + ")";
}

inline json code_record(const AdditiveCode& C, const std::optional<DistanceResult>& dist = std::nullopt,
                        const std::vector<SubcodeChoice>* profile = nullptr) {
  json j;
  j["n"] = C.n();
  j["q"] = C.ctx->q;
  j["t"] = C.ctx->t;
  j["k_fq"] = C.k_fq();
  j["cardinality_log"] = C.k_fq();  // log_q |C|
  if (dist) {
    j["d"] = dist->d;
    j["d_exact"] = dist->exact;
  } else {
    j["d"] = nullptr;
    j["d_exact"] = false;
  }
  j["label"] = param_label(C, dist ? std::optional<u64>(dist->d) : std::nullopt);
  json b = json::array();
  for (auto& r : C.fq_basis) b.push_back(vec_tokens(*C.ctx->Fqt, r));
  j["basis"] = b;
  j["self_orthogonal"] = is_self_orthogonal(C);
  j["self_dual"] = is_self_dual(C);
  j["cyclic"] = is_cyclic(C);
  if (profile) {
    json p = json::array();
    for (auto& s : *profile) p.push_back({{"i", s.i}, {"choice", s.label}});
    j["profile"] = p;
  }
  return j;
}

inline json poly_json(const Polynomial& f) { return to_text(f); }

inline json atlas_json(const IdealAtlas& A) {
  const auto& T = A.table;
  json j;
  j["n"] = A.n();
  j["q"] = A.q();
  j["t"] = A.t();
  j["fields"] = {{"F_q", A.Fq->spec()}, {"F_qt", A.Fqt->spec()}, {"splitting", A.W->spec()}};
  j["eta_prime"] = to_token(*A.W, A.eta_prime);
  j["i_sharp"] = T.i_sharp ? json(*T.i_sharp) : json(nullptr);
  j["fixed"] = T.J_set;
  j["paired"] = T.M_set;
  json cs = json::array();
  for (unsigned i = 0; i < A.size(); ++i) {
    const auto& c = T[i];
    const auto& I = A.ideals[i];
    json e;
    e["i"] = i;
    e["rep"] = c.rep;
    e["coset"] = c.coset;
    e["d"] = c.d;
    e["s"] = c.s;
    e["D"] = c.D;
    e["subcosets"] = c.subcosets;
    e["mu"] = c.mu;
    e["orientation"] = orientation_name(c.orientation);
    e["m"] = poly_json(I.m);
    e["m_hat"] = poly_json(I.mhat);
    json M = json::array(), Mh = json::array(), ee = json::array(), rr = json::array();
    for (auto& p : I.M) M.push_back(poly_json(p));
    for (auto& p : I.Mhat) Mh.push_back(poly_json(p));
    for (auto& v : I.e) ee.push_back(to_text(A.R.to_poly(v)));
    for (auto& v : I.rho) rr.push_back(to_text(A.R.to_poly(v)));
    e["M"] = M;
    e["M_hat"] = Mh;
    e["e"] = ee;
    e["rho"] = rr;
    e["rho_value"] = to_token(*A.W, I.rho_value);
    e["E"] = to_text(A.R.to_poly(I.E));
    cs.push_back(e);
  }
  j["cosets"] = cs;
  return j;
}

}  // namespace deltacodes
