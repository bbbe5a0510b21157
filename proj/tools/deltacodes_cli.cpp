#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "deltacodes/json_io.hpp"
#include "deltacodes/verify.hpp"

using namespace deltacodes;

namespace {

struct Config {
  long n = 0;
  u64 q = 0;
  unsigned t = 2;
  bool paper_fields = false;
  std::string mode = "so";
  bool complete = false;
  u64 limit = 0;
  u64 budget = u64{1} << 28;
  u64 samples = 10'000'000;
  u64 seed = 0x5eed;
  unsigned threads = 0;
  std::string format = "text";
  std::vector<std::string> vectors;
  bool cyclic = false;
  std::string a, b;
  std::string verify_budget = "default";
  bool extended = false;
  std::string f9_modulus;
};

FieldMode field_mode(const Config& c) { return c.paper_fields ? FieldMode::paper : FieldMode::standard; }

// Hypotheses every run needs before anything is built.
void validate(const Config& c) {
  auto pp = nt::prime_power(c.q);
  if (!pp) raise(errc::invalid_params, "q must be a prime power (q=" + std::to_string(c.q) + ")");
  if (c.n < 1) raise(errc::invalid_params, "n must be a positive integer");
  if (std::gcd<u64>(static_cast<u64>(c.n), c.q) != 1)
    raise(errc::not_coprime, "gcd(n,q)=1 required (n=" + std::to_string(c.n) + ", q=" + std::to_string(c.q) + ")");
  if (c.t == 0 || c.t % 2) raise(errc::invalid_params, "t must be even (t=" + std::to_string(c.t) + ")");
  if (c.t % pp->first == 1)
    raise(errc::invalid_params, "t != 1 (mod p) required for psi to be a bijection (t=" + std::to_string(c.t) + ")");
}

Mode parse_mode(const std::string& s) {
  if (s == "so") return Mode::so;
  if (s == "sd") return Mode::sd;
  raise(errc::parse_error, "mode must be so or sd");
}

AtlasPtr atlas_for(const Config& c) {
  AtlasOptions o;
  o.mode = field_mode(c);
  if (c.paper_fields && c.n == 7 && c.q == 3 && c.t == 2) o.rho_log = reference::seven_three::rho_log;
  return build_atlas(c.n, c.q, c.t, o);
}

ContextPtr context_for(const Config& c, bool with_atlas) {
  validate(c);
  if (with_atlas) return make_context(atlas_for(c), field_mode(c));
  return make_context(c.n, c.q, c.t, field_mode(c));
}

vec parse_vector(const DeltaContext& ctx, const std::string& s) {
  vec v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(parse_token(*ctx.Fqt, tok));
  if (static_cast<long>(v.size()) != ctx.n)
    raise(errc::length_mismatch, "vector '" + s + "' has " + std::to_string(v.size()) + " entries, n=" + std::to_string(ctx.n));
  return v;
}

AdditiveCode code_from_config(const ContextPtr& ctx, const Config& c) {
  std::vector<vec> vs;
  for (auto& s : c.vectors) vs.push_back(parse_vector(*ctx, s));
  return c.cyclic ? cyclic_span(ctx, vs) : code_from_vectors(ctx, vs);
}

DistanceOptions dist_options(const Config& c) {
  DistanceOptions d;
  d.budget = c.budget;
  d.samples = c.samples;
  d.seed = c.seed;
  d.threads = c.threads;
  return d;
}

std::string set_text(const std::vector<long>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

void print_code(const AdditiveCode& C, const std::optional<DistanceResult>& d, const std::vector<SubcodeChoice>* prof) {
  std::cout << param_label(C, d ? std::optional<u64>(d->d) : std::nullopt);
  if (d) std::cout << (d->exact ? " exact" : " upper-bound");
  if (prof) {
    std::cout << "  ";
    for (auto& s : *prof) std::cout << " C_" << s.i << "=" << s.label;
  }
  std::cout << "\n" << matrix_text(C);
}

int cmd_factor(const Config& c) {
  validate(c);
  auto Fq = field_of_size(c.q, field_mode(c));
  auto Fqt = field_of_size(nt::ipow(c.q, c.t), field_mode(c));
  auto fq = factor_xn_minus_1(c.n, Fq, field_mode(c));
  auto fqt = factor_xn_minus_1(c.n, Fqt, field_mode(c));
  if (c.format == "json") {
    json j;
    j["n"] = c.n;
    for (auto& [name, F, fs] : {std::tuple{"F_q", Fq, &fq}, std::tuple{"F_qt", Fqt, &fqt}}) {
      json a = json::array();
      for (auto& f : *fs) a.push_back({{"poly", to_text(f.poly)}, {"coset", f.coset}});
      j[name] = {{"field", F->spec()}, {"factors", a}};
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "X^" << c.n << " - 1 over F_" << c.q << " (" << Fq->spec() << ")\n";
  for (std::size_t i = 0; i < fq.size(); ++i) std::cout << "  m_" << i << " = " << to_pretty(fq[i].poly) << "   " << set_text(fq[i].coset) << "\n";
  std::cout << "X^" << c.n << " - 1 over F_" << Fqt->size() << " (" << Fqt->spec() << ")\n";
  for (auto& f : fqt) std::cout << "  " << to_pretty(f.poly) << "   " << set_text(f.coset) << "\n";
  return 0;
}

int cmd_cosets(const Config& c) {
  if (c.n < 1) raise(errc::invalid_params, "n must be a positive integer");
  auto cs = cyclotomic_cosets(c.n, c.q);
  if (c.format == "json") {
    std::cout << json(cs).dump() << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < cs.size(); ++i) std::cout << (i ? ", " : "") << set_text(cs[i]);
  std::cout << "\n";
  return 0;
}

int cmd_atlas(const Config& c) {
  validate(c);
  auto A = atlas_for(c);
  if (c.format == "json") {
    std::cout << atlas_json(*A).dump(2) << "\n";
    return 0;
  }
  const auto& T = A->table;
  std::cout << "n=" << c.n << " q=" << c.q << " t=" << c.t << "  F_q=" << A->Fq->spec() << "  F_qt=" << A->Fqt->spec()
            << "  eta'=" << to_token(*A->W, A->eta_prime) << " in " << A->W->spec() << "\n";
  std::cout << "i#: " << (T.i_sharp ? std::to_string(*T.i_sharp) : "-") << "   fixed:";
  for (auto i : T.J_set) std::cout << " " << i;
  std::cout << "   paired:";
  for (auto i : T.M_set) std::cout << " " << i << "<->" << T[i].mu;
  std::cout << "\n";
  for (unsigned i = 0; i < A->size(); ++i) {
    const auto& ci = T[i];
    std::cout << "[" << i << "] coset " << set_text(ci.coset) << "  d=" << ci.d << " s=" << ci.s << " D=" << ci.D
              << " mu=" << ci.mu << " orientation=" << orientation_name(ci.orientation) << "\n";
    for (unsigned j = 0; j < ci.s; ++j) {
      std::cout << "    M_{" << i << "," << j << "} = " << to_pretty(A->ideals[i].M[j]) << "\n";
      std::cout << "    e_{" << i << "," << j << "} = " << to_pretty(A->R.to_poly(A->e(i, j))) << "\n";
      std::cout << "    rho_{" << i << "," << j << "} = " << to_pretty(A->R.to_poly(A->rho(i, j))) << "\n";
    }
  }
  return 0;
}

int cmd_form(const Config& c) {
  auto ctx = context_for(c, false);
  vec a = parse_vector(*ctx, c.a), b = parse_vector(*ctx, c.b);
  elem s = delta_inner(a, b, *ctx);
  vec f = delta_form(a, b, *ctx);
  Polynomial fp(ctx->Fq, f);
  if (c.format == "json") {
    std::cout << json{{"inner", to_token(*ctx->Fq, s)}, {"form", to_text(fp)}}.dump() << "\n";
    return 0;
  }
  std::cout << "(a,b) = " << to_token(*ctx->Fq, s) << "\n[a,b] = " << to_pretty(fp) << "\n";
  return 0;
}

int cmd_dual(const Config& c) {
  auto ctx = context_for(c, false);
  auto D = dual_delta(code_from_config(ctx, c));
  if (c.format == "json") std::cout << code_record(D).dump(2) << "\n";
  else print_code(D, std::nullopt, nullptr);
  return 0;
}

int cmd_mindist(const Config& c) {
  auto ctx = context_for(c, false);
  auto C = code_from_config(ctx, c);
  auto d = min_distance(C, dist_options(c));
  if (c.format == "json") {
    std::cout << code_record(C, d).dump(2) << "\n";
    return 0;
  }
  std::cout << param_label(C, d.d) << (d.exact ? " exact over " : " upper bound from ") << d.work
            << (d.exact ? " nonzero words\n" : " sampled words\n");
  return 0;
}

int cmd_enumerate(const Config& c) {
  if (c.t != 2) raise(errc::unsupported_t, "classification requires t=2 (t=" + std::to_string(c.t) + ")");
  auto ctx = context_for(c, true);
  EnumerateOptions o;
  o.variant = c.complete ? Variant::complete : Variant::stated;
  o.limit = c.limit;
  const bool js = c.format == "json";
  const bool with_d = c.budget > 0;
  if (js) std::cout << "[";
  u64 k = 0;
  enumerate_codes(ctx, parse_mode(c.mode), [&](const AdditiveCode& C, const std::vector<SubcodeChoice>& prof) {
    std::optional<DistanceResult> d;
    if (with_d && !C.is_zero()) d = min_distance(C, dist_options(c));
    if (js) std::cout << (k ? ",\n" : "\n") << code_record(C, d, &prof).dump();
    else print_code(C, d, &prof);
    ++k;
    return true;
  }, o);
  if (js) std::cout << "\n]\n";
  else std::cout << k << " codes\n";
  return 0;
}

int cmd_count(const Config& c) {
  if (c.t != 2) raise(errc::unsupported_t, "classification requires t=2 (t=" + std::to_string(c.t) + ")");
  validate(c);
  Mode m = parse_mode(c.mode);
  bigint stated = count_codes(c.n, c.q, m, Variant::stated), full = count_codes(c.n, c.q, m, Variant::complete);
  if (c.format == "json") {
    std::cout << json{{"n", c.n}, {"q", c.q}, {"mode", c.mode}, {"stated", stated.str()}, {"complete", full.str()}}.dump() << "\n";
    return 0;
  }
  std::cout << (c.complete ? full : stated).str() << "\n";
  return 0;
}

int cmd_goodcodes(const Config& c) {
  if (c.t != 2) raise(errc::unsupported_t, "classification requires t=2 (t=" + std::to_string(c.t) + ")");
  auto ctx = context_for(c, true);
  GoodCodeOptions o;
  o.variant = c.complete ? Variant::complete : Variant::stated;
  o.dist = dist_options(c);
  o.limit = c.limit;
  auto rep = good_code_report(ctx, o);
  if (c.format == "json") {
    json a = json::array();
    for (auto& r : rep) a.push_back(code_record(r.code, r.dist, &r.profile));
    std::cout << a.dump(2) << "\n";
    return 0;
  }
  for (auto& r : rep) {
    std::cout << param_label(r.code, r.dist.d) << (r.dist.exact ? " exact" : " upper-bound") << "  generated by";
    for (auto& s : r.profile)
      if (s.kind != SubcodeChoice::zero) std::cout << " " << s.label;
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const Config& c) {
  verify::Options o;
  if (c.verify_budget != "default" && c.verify_budget != "small") raise(errc::parse_error, "budget must be default or small");
  o.small_budget = c.verify_budget == "small";
  o.extended = c.extended;
  o.samples = c.samples;
  o.seed = c.seed;
  o.threads = c.threads;
  if (!c.f9_modulus.empty()) {
    std::stringstream ss(c.f9_modulus);
    std::string tok;
    while (std::getline(ss, tok, ',')) o.f9_modulus.push_back(static_cast<elem>(std::stoul(tok)));
  }
  bool ok = verify::run_all(o, [](const verify::Item& it) { std::cout << verify::render(it) << std::flush; });
  std::cout << (ok ? "verify-paper: all criteria pass\n" : "verify-paper: some criteria fail\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deltacodes: cyclic codes under the Delta trace bilinear form"};
  app.require_subcommand(1);
  Config c;

  auto params = [&](CLI::App* s, bool need_t) {
    s->add_option("-n", c.n, "code length")->required();
    s->add_option("-q", c.q, "base field size")->required();
    if (need_t) s->add_option("-t", c.t, "extension degree (even)")->capture_default_str();
    s->add_flag("--paper-fields", c.paper_fields, "use the tabulated field moduli");
    s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  };
  auto dist = [&](CLI::App* s) {
    s->add_option("--mindist-budget", c.budget, "exhaustive when the word count is at most this (0 disables)")->capture_default_str();
    s->add_option("--samples", c.samples, "random-walk samples beyond the budget")->capture_default_str();
    s->add_option("--seed", c.seed, "sampling seed")->capture_default_str();
    s->add_option("--threads", c.threads, "worker threads (default: DELTACODES_THREADS or all cores)");
  };
  auto code_in = [&](CLI::App* s) {
    s->add_option("--vector", c.vectors, "comma-separated tokens, one per coordinate (repeatable)")->required();
    s->add_flag("--cyclic", c.cyclic, "take the cyclic span of the vectors");
  };
  auto classify_opts = [&](CLI::App* s) {
    s->add_option("--mode", c.mode, "so or sd")->check(CLI::IsMember({"so", "sd"}))->capture_default_str();
    s->add_flag("--complete", c.complete, "include the isotropic lines missing from the stated option lists");
    s->add_option("--limit", c.limit, "stop after this many codes");
  };

  auto* factor = app.add_subcommand("factor", "factor X^n - 1 over F_q and F_{q^t}");
  params(factor, true);
  auto* cosets = app.add_subcommand("cosets", "q-cyclotomic cosets modulo n");
  cosets->add_option("-n", c.n)->required();
  cosets->add_option("-q", c.q)->required();
  cosets->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
  auto* atlas = app.add_subcommand("atlas", "cosets, mu, idempotents and primitive elements");
  params(atlas, true);
  auto* form = app.add_subcommand("form", "evaluate (a,b) and [a,b]");
  params(form, true);
  form->add_option("-a", c.a, "first vector")->required();
  form->add_option("-b", c.b, "second vector")->required();
  auto* dual = app.add_subcommand("dual", "Delta-dual of a code");
  params(dual, true);
  code_in(dual);
  auto* mind = app.add_subcommand("mindist", "minimum Hamming distance of a code");
  params(mind, true);
  code_in(mind);
  dist(mind);
  auto* en = app.add_subcommand("enumerate", "list the classified cyclic self-orthogonal or self-dual codes");
  params(en, true);
  classify_opts(en);
  dist(en);
  auto* cnt = app.add_subcommand("count", "closed-form number of classified codes");
  params(cnt, true);
  classify_opts(cnt);
  auto* good = app.add_subcommand("goodcodes", "best minimum distance per dimension among self-orthogonal codes");
  params(good, true);
  classify_opts(good);
  dist(good);
  auto* ver = app.add_subcommand("verify-paper", "reproduce the worked example and the reference table");
  ver->add_option("--budget", c.verify_budget, "default or small")->check(CLI::IsMember({"default", "small"}));
  ver->add_flag("--extended", c.extended, "also run the 3^18-word exhaustive scan");
  ver->add_option("--samples", c.samples)->capture_default_str();
  ver->add_option("--seed", c.seed)->capture_default_str();
  ver->add_option("--threads", c.threads);
  ver->add_option("--f9-modulus", c.f9_modulus, "override the F_9 modulus, low-to-high coefficients");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }
  try {
    if (*factor) return cmd_factor(c);
    if (*cosets) return cmd_cosets(c);
    if (*atlas) return cmd_atlas(c);
    if (*form) return cmd_form(c);
    if (*dual) return cmd_dual(c);
    if (*mind) return cmd_mindist(c);
    if (*en) return cmd_enumerate(c);
    if (*cnt) return cmd_count(c);
    if (*good) return cmd_goodcodes(c);
    if (*ver) return cmd_verify(c);
  } catch (const error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
