#pragma once

#include <array>
#include <cctype>
#include <string>
#include <vector>

#include "codes.hpp"

namespace deltacodes::reference {

// Sums of terms "c X^e" written high-to-low, c a token ("w", "w^k" or an integer), e.g. "w^5 X^6 + w^7 X + 4".
inline vec parse_term_sum(const Field& F, long n, const std::string& text) {
  vec out(n, 0);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('+', pos);
    if (end == std::string::npos) end = text.size();
    std::string term;
    for (char ch : text.substr(pos, end - pos))
      if (!std::isspace(static_cast<unsigned char>(ch))) term += ch;
    pos = end + 1;
    if (term.empty()) raise(errc::parse_error, "empty term in '" + text + "'");
    long e = 0;
    std::string coef = term;
    if (auto x = term.find('X'); x != std::string::npos) {
      coef = term.substr(0, x);
      std::string ex = term.substr(x + 1);
      e = ex.empty() ? 1 : (ex[0] == '^' ? std::stol(ex.substr(1)) : -1);
      if (e < 0 || e >= n) raise(errc::parse_error, "bad exponent in term '" + term + "'");
    }
    if (coef.empty()) coef = "1";
    out[e] = F.add(out[e], parse_token(F, coef));
  }
  return out;
}

struct TableRow {
  int idx;  // generator label alpha_idx
  u64 q;
  long n;
  unsigned k;  // cardinality (q^2)^k
  u64 d;
  const char* generator;
};

// Good cyclic self-orthogonal codes and their generators, over F_{q^2} with the tabulated moduli.
inline const std::array<TableRow, 15>& table() {
  static const std::array<TableRow, 15> rows = {{
      {1, 2, 11, 5, 6, "w X^10 + w^2 X^9 + w X^8 + w X^7 + w X^6 + w^2 X^5 + w^2 X^4 + w^2 X^3 + w X^2 + w^2 X + 1"},
      {2, 2, 19, 9, 8,
       "w X^18 + w^2 X^17 + w^2 X^16 + w X^15 + w X^14 + w X^13 + w X^12 + w^2 X^11 + w X^10 + w^2 X^9 + w X^8 + "
       "w^2 X^7 + w^2 X^6 + w^2 X^5 + w^2 X^4 + w X^3 + w X^2 + w^2 X + 1"},
      {3, 3, 7, 3, 5, "w^5 X^6 + w^5 X^5 + w^7 X^4 + w^5 X^3 + w^7 X^2 + w^7 X"},
      {4, 3, 19, 9, 10,
       "w^5 X^18 + w^7 X^17 + w^7 X^16 + w^5 X^15 + w^5 X^14 + w^5 X^13 + w^5 X^12 + w^7 X^11 + w^5 X^10 + "
       "w^7 X^9 + w^5 X^8 + w^7 X^7 + w^7 X^6 + w^7 X^5 + w^7 X^4 + w^5 X^3 + w^5 X^2 + w^7 X"},
      {5, 5, 7, 3, 5, "w^7 X^6 + w^7 X^5 + w^11 X^4 + w^7 X^3 + w^11 X^2 + w^11 X + 4"},
      {6, 5, 23, 11, 12,
       "w^22 X^22 + w^22 X^21 + w^22 X^20 + w^22 X^19 + w^14 X^18 + w^22 X^17 + w^14 X^16 + w^22 X^15 + "
       "w^22 X^14 + w^14 X^13 + w^14 X^12 + w^22 X^11 + w^22 X^10 + w^14 X^9 + w^14 X^8 + w^22 X^7 + w^14 X^6 + "
       "w^22 X^5 + w^14 X^4 + w^14 X^3 + w^14 X^2 + w^14 X + 2"},
      {7, 7, 11, 5, 7,
       "w^41 X^10 + w^47 X^9 + w^41 X^8 + w^41 X^7 + w^41 X^6 + w^47 X^5 + w^47 X^4 + w^47 X^3 + w^41 X^2 + "
       "w^47 X + 3"},
      {8, 7, 23, 11, 12,
       "w^35 X^22 + w^35 X^21 + w^35 X^20 + w^35 X^19 + w^5 X^18 + w^35 X^17 + w^5 X^16 + w^35 X^15 + w^35 X^14 + "
       "w^5 X^13 + w^5 X^12 + w^35 X^11 + w^35 X^10 + w^5 X^9 + w^5 X^8 + w^35 X^7 + w^5 X^6 + w^35 X^5 + "
       "w^5 X^4 + w^5 X^3 + w^5 X^2 + w^5 X + 2"},
      {9, 11, 23, 11, 12,
       "w^99 X^22 + w^99 X^21 + w^99 X^20 + w^99 X^19 + w^9 X^18 + w^99 X^17 + w^9 X^16 + w^99 X^15 + w^99 X^14 + "
       "w^9 X^13 + w^9 X^12 + w^99 X^11 + w^99 X^10 + w^9 X^9 + w^9 X^8 + w^99 X^7 + w^9 X^6 + w^99 X^5 + "
       "w^9 X^4 + w^9 X^3 + w^9 X^2 + w^9 X"},
      {10, 13, 11, 5, 7,
       "w^158 X^10 + w^38 X^9 + w^158 X^8 + w^158 X^7 + w^158 X^6 + w^38 X^5 + w^38 X^4 + w^38 X^3 + w^158 X^2 + "
       "w^38 X + 4"},
      {11, 13, 19, 9, 11,
       "w^143 X^18 + w^11 X^17 + w^11 X^16 + w^143 X^15 + w^143 X^14 + w^143 X^13 + w^143 X^12 + w^11 X^11 + "
       "w^143 X^10 + w^11 X^9 + w^143 X^8 + w^11 X^7 + w^11 X^6 + w^11 X^5 + w^11 X^4 + w^143 X^3 + w^143 X^2 + "
       "w^11 X + 8"},
      {12, 17, 7, 3, 5, "w^40 X^6 + w^40 X^5 + w^104 X^4 + w^40 X^3 + w^104 X^2 + w^104 X + 15"},
      {13, 17, 11, 5, 7,
       "w^19 X^10 + w^35 X^9 + w^19 X^8 + w^19 X^7 + w^19 X^6 + w^35 X^5 + w^35 X^4 + w^35 X^3 + w^19 X^2 + "
       "w^35 X + 2"},
      {14, 19, 7, 3, 5, "w^61 X^6 + w^61 X^5 + w^79 X^4 + w^61 X^3 + w^79 X^2 + w^79 X + 14"},
      {15, 19, 11, 5, 7,
       "w^331 X^10 + w^169 X^9 + w^331 X^8 + w^331 X^7 + w^331 X^6 + w^169 X^5 + w^169 X^4 + w^169 X^3 + "
       "w^331 X^2 + w^169 X + 16"},
  }};
  return rows;
}

inline const TableRow& row(int idx) {
  for (auto& r : table())
    if (r.idx == idx) return r;
  raise(errc::invalid_params, "no reference row alpha_" + std::to_string(idx));
}

inline ContextPtr row_context(const TableRow& r) { return make_context(r.n, r.q, 2, FieldMode::paper); }

inline AdditiveCode row_code(const TableRow& r) {
  auto ctx = row_context(r);
  return cyclic_span(ctx, parse_term_sum(*ctx->Fqt, r.n, r.generator));
}

// The n = 7, q = 3 example: factors, idempotents and the printed generator matrix of <e_{1,0}>.
namespace seven_three {

inline const std::vector<std::string> factors_f3 = {"X + 2", "X^6 + X^5 + X^4 + X^3 + X^2 + X + 1"};
inline const std::vector<std::string> factors_f9 = {"X + 2", "X^3 + w*X^2 + w^7*X + 2", "X^3 + w^3*X^2 + w^5*X + 2"};
inline constexpr u64 eta_prime_log = 104;
inline const char* e00 = "X^6 + X^5 + X^4 + X^3 + X^2 + X + 1";
inline const char* e10 = "w^5 X^6 + w^5 X^5 + w^7 X^4 + w^5 X^3 + w^7 X^2 + w^7 X";
inline const char* e11 = "w^7 X^6 + w^7 X^5 + w^5 X^4 + w^7 X^3 + w^5 X^2 + w^5 X";
inline const char* rho00_sq = "w^2 X^6 + w^2 X^5 + w^2 X^4 + w^2 X^3 + w^2 X^2 + w^2 X + w^2";
inline const std::vector<std::vector<std::string>> good_matrix = {
    {"0", "w^7", "w^7", "w^5", "w^7", "w^5", "w^5"}, {"w^5", "0", "w^7", "w^7", "w^5", "w^7", "w^5"},
    {"w^5", "w^5", "0", "w^7", "w^7", "w^5", "w^7"}, {"w^7", "w^5", "w^5", "0", "w^7", "w^7", "w^5"},
    {"w^5", "w^7", "w^5", "w^5", "0", "w^7", "w^7"}, {"w^7", "w^5", "w^7", "w^5", "w^5", "0", "w^7"}};
inline const std::map<unsigned, u64> rho_log = {{0, 91}, {1, 243}};

inline AtlasPtr atlas() {
  AtlasOptions o;
  o.mode = FieldMode::paper;
  o.rho_log = rho_log;
  return build_atlas(7, 3, 2, o);
}

}  // namespace seven_three

}  // namespace deltacodes::reference
