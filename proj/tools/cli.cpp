#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "criteria.hpp"
#include "spinl/eisenstein.hpp"
#include "spinl/group_w.hpp"
#include "spinl/json_io.hpp"

namespace spinl::cli {

namespace {

struct Config {
  std::optional<QuatAlgebra> custom;
  std::string algebra = "hamilton";
  std::string character = "trivial";
  unsigned long level = 1;
  long weight = 6;
  unsigned long long budget = enumeration_budget();
  std::optional<Matrix> t;

  const QuatAlgebra& alg() const {
    if (custom) return *custom;
    if (algebra == "hamilton") return QuatAlgebra::hamilton();
    if (algebra == "disc7") return QuatAlgebra::disc7();
    throw Error("config_error", "unknown algebra", {{"algebra", algebra}});
  }
};

// A flag value is inline JSON when it starts with '{' or '[', else a file path.
Json load_json(const std::string& arg, const std::string& what) {
  std::string text = arg;
  if (arg.empty() || (arg[0] != '{' && arg[0] != '[')) {
    std::ifstream in(arg);
    if (!in) throw Error("io_error", "cannot read " + what, {{"path", arg}});
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error("schema_error", std::string("invalid JSON in ") + what, {{"pointer", "/"}, {"detail", e.what()}});
  }
}

void apply_config(Config& cfg, const std::string& path) {
  Json j = load_json(path, "config");
  if (!j.is_object()) throw Error("config_error", "config must be an object");
  try {
    if (j.contains("algebra")) {
      const Json& a = j["algebra"];
      if (a.is_string()) {
        cfg.algebra = a.get<std::string>();
        cfg.alg();
      } else {
        Json order = a.at("order");
        if (!order.is_array() || order.size() != 4) throw Error("config_error", "order needs four basis elements");
        Matrix basis = matrix_from_json(order, "/algebra/order");
        cfg.custom.emplace(rational_from_json(a.at("a"), "/algebra/a"), rational_from_json(a.at("b"), "/algebra/b"),
                           a.at("discriminant").get<unsigned long>(), basis);
      }
    }
    if (j.contains("character")) cfg.character = j["character"].get<std::string>();
    if (j.contains("level")) cfg.level = j["level"].get<unsigned long>();
    if (j.contains("weight")) cfg.weight = j["weight"].get<long>();
    if (j.contains("budget")) {
      cfg.budget = j["budget"].get<unsigned long long>();
      if (cfg.budget == 0) throw Error("config_error", "budget must be positive");
    }
    if (j.contains("T")) cfg.t = matrix_from_json(j["T"], "/T");
  } catch (const Json::exception& e) {
    throw Error("config_error", "malformed config", {{"detail", e.what()}});
  } catch (const Error& e) {
    if (e.code() == "config_error") throw;
    throw Error("config_error", e.what(), e.context());
  }
}

template <class T>
std::vector<T> split_list(const std::string& s, T (*conv)(const std::string&)) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(conv(item));
  return out;
}

int to_int(const std::string& s) {
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected an integer list, got " + s);
  }
}
long to_long(const std::string& s) { return to_int(s); }
Rational to_rat(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected a rational, got " + s);
  }
}

Json graded_json(const GradedConstant& g) {
  return Json{{"value", cyclo_json(g.rational_part)}, {"pi_exponent", g.pi_exponent}, {"i_exponent", g.i_exponent}};
}

Json local_json(const LocalFactorResult& lf) {
  return Json{{"ell", lf.ell},          {"vals", lf.vals},  {"poly", lf.p.to_string()},
              {"s_poly", lf.s.to_string()}, {"u", cyclo_json(lf.u)}, {"p_value", cyclo_json(lf.p_value)},
              {"value", cyclo_json(lf.value)}};
}

HermMatrix<Gaussian> gaussian_herm(const HermQ& x, const HermQ& y) {
  HermMatrix<Gaussian> z;
  for (int i = 0; i < 3; ++i) {
    z.c[i] = Gaussian(x.c[i], y.c[i]);
    for (int k = 0; k < 4; ++k) z.a[i][k] = Gaussian(x.a[i][k], y.a[i][k]);
  }
  return z;
}

Json gaussian_herm_json(const QuatAlgebra& alg, const HermMatrix<Gaussian>& z) {
  HermQ x, y;
  for (int i = 0; i < 3; ++i) {
    x.c[i] = z.c[i].re;
    y.c[i] = z.c[i].im;
    for (int k = 0; k < 4; ++k) {
      x.a[i][k] = z.a[i][k].re;
      y.a[i][k] = z.a[i][k].im;
    }
  }
  return Json{{"x", herm_json(alg, x)}, {"y", herm_json(alg, y)}};
}

GElement parse_element(const QuatAlgebra& alg, const std::string& name) {
  if (name == "identity") return identity_element(alg);
  if (name.size() == 5 && name.rfind("iota", 0) == 0 && name[4] >= '0' && name[4] <= '3') return iota(alg, name[4] - '0');
  if (name.size() > 1 && name[0] == 'w') {
    long m = to_long(name.substr(1));
    if (m < 1) throw Error("domain_error", "level of w_M must be positive");
    return w_m(alg, Integer(m));
  }
  throw CLI::ValidationError("--element must be identity, iota0..iota3 or w<M>");
}

}  // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out) {
  CLI::App app{"Exact arithmetic for Eisenstein series, restriction and Spin L-values", "spinl"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path, algebra_flag, char_flag;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--algebra", algebra_flag, "hamilton or disc7 (overrides the config)");
  app.add_option("--char", char_flag, "Dirichlet character: trivial, trivial:M or M:order:g=e,...");

  Config cfg;
  auto character = [&] { return DirichletChar::parse(cfg.character); };
  std::function<Json()> action;

  // local-factor
  auto* lf = app.add_subcommand("local-factor", "closed-form local factor S_l and its polynomial P_l");
  int lf_rank = 1;
  unsigned long lf_ell = 2;
  std::string lf_vals;
  std::optional<long> lf_r;
  lf->add_option("--rank", lf_rank)->required()->check(CLI::Range(1, 3));
  lf->add_option("--ell", lf_ell)->required();
  lf->add_option("--vals", lf_vals, "comma-separated valuations")->required();
  lf->add_option("--r", lf_r);
  lf->callback([&] {
    action = [&] {
      long r = lf_r.value_or(cfg.weight);
      auto vals = split_list<int>(lf_vals, to_int);
      LocalFactorResult res = s_factor(ValProfile::make(lf_rank, lf_ell, vals), r, character());
      Json j = local_json(res);
      j["rank"] = lf_rank;
      j["r"] = r;
      j["character"] = character().to_spec();
      j["polynomial"] = res.p.to_string();
      return j;
    };
  });

  // oracle-sum
  auto* os = app.add_subcommand("oracle-sum", "brute-force interior character sum at level l^m");
  int os_rank = 1;
  unsigned long os_ell = 2;
  unsigned os_m = 1;
  std::string os_h;
  os->set_help_flag("--help", "Print this help message and exit");
  os->add_option("--rank", os_rank)->required()->check(CLI::Range(1, 3));
  os->add_option("--ell", os_ell)->required();
  os->add_option("--m", os_m)->required();
  os->add_option("--h", os_h, "Hermitian matrix JSON (file or inline)")->required();
  os->callback([&] {
    action = [&] {
      const QuatAlgebra& alg = cfg.alg();
      HermQ h = herm_from_json(alg, load_json(os_h, "--h"), "");
      Integer v = interior_sum_oracle(alg, os_rank, os_ell, os_m, h, cfg.budget);
      return Json{{"value", to_string(v)}};
    };
  });

  // kernel-coeff
  auto* kc = app.add_subcommand("kernel-coeff", "rank-j Fourier coefficient kernel of the Eisenstein series");
  std::string kc_h;
  std::optional<long> kc_r;
  kc->set_help_flag("--help", "Print this help message and exit");
  kc->add_option("--h", kc_h, "Hermitian matrix JSON (file or inline)")->required();
  kc->add_option("--r", kc_r);
  kc->callback([&] {
    action = [&] {
      const QuatAlgebra& alg = cfg.alg();
      HermQ h = herm_from_json(alg, load_json(kc_h, "--h"), "");
      long r = kc_r.value_or(cfg.weight);
      KernelCoeff k = kernel_coeff(alg, h, r, character());
      Json local = Json::array();
      for (const auto& l : k.local) local.push_back(local_json(l));
      return Json{{"h", herm_json(alg, h)},
                  {"j", k.j},
                  {"value", cyclo_json(k.value)},
                  {"pi_exponent", k.normalization.pi_exponent},
                  {"normalization", graded_json(k.normalization)},
                  {"factors",
                   {{"Linv", cyclo_json(k.l_inverse)},
                    {"Nj_power", rational_json(k.nj_power)},
                    {"vol", rational_json(k.dual_volume)},
                    {"local", local}}},
                  {"bridge", graded_json(normalization_bridge(alg, r, character()))}};
    };
  });

  // restrict
  auto* rs = app.add_subcommand("restrict", "restrict a Hermitian q-expansion to Siegel indices");
  std::string rs_coeffs, rs_targets;
  std::optional<unsigned long> rs_level;
  bool rs_zero = false;
  rs->add_option("--coeffs", rs_coeffs, "list of {h, a}")->required();
  rs->add_option("--targets", rs_targets, "list of 3x3 symmetric matrices")->required();
  rs->add_option("--level", rs_level);
  rs->add_flag("--zero-fill", rs_zero, "treat absent fiber coefficients as zero");
  rs->callback([&] {
    action = [&] {
      const QuatAlgebra& alg = cfg.alg();
      HermExpansion coeffs = herm_expansion_from_json(alg, load_json(rs_coeffs, "--coeffs"));
      Json tj = load_json(rs_targets, "--targets");
      if (!tj.is_array()) throw Error("schema_error", "targets must be a list", {{"pointer", "/"}});
      std::vector<SiegelIndex> targets;
      for (std::size_t i = 0; i < tj.size(); ++i) targets.push_back(matrix_from_json(tj[i], "/" + std::to_string(i)));
      RestrictionResult res = restrict_expansion(alg, coeffs, targets, rs_level.value_or(cfg.level),
                                                 rs_zero ? MissingPolicy::zero_fill : MissingPolicy::strict);
      Json j{{"expansion", siegel_expansion_json(res.coeffs)}};
      if (!res.warnings.empty()) j["warnings"] = res.warnings;
      return j;
    };
  });

  // euler-factor
  auto* ef = app.add_subcommand("euler-factor", "degree-8 Spin Euler factor in X");
  std::string ef_satake, ef_charq = "1";
  ef->add_option("--satake", ef_satake, "b0,b1,b2,b3")->required();
  ef->add_option("--charq", ef_charq, "chi(q), rational");
  ef->callback([&] {
    action = [&] {
      auto b = split_list<Rational>(ef_satake, to_rat);
      if (b.size() != 4) throw CLI::ValidationError("--satake needs four values");
      SatakeParams p{b[0], b[1], b[2], b[3]};
      UPoly f = spin_euler_factor(p, CycloValue(to_rat(ef_charq)));
      Json coeffs = Json::array();
      for (int k = 0; k <= 8; ++k) coeffs.push_back(cyclo_json(f.coeff(k)));
      return Json{{"coeffs", coeffs}};
    };
  });

  // partial-l
  auto* pl = app.add_subcommand("partial-l", "truncated partial Spin Euler product at an integer point");
  std::string pl_params;
  long pl_s = 0;
  unsigned long pl_bound = 0;
  std::optional<unsigned long> pl_level;
  pl->add_option("--params", pl_params, "Satake parameters keyed by prime")->required();
  pl->add_option("--s", pl_s)->required();
  pl->add_option("--bound", pl_bound)->required();
  pl->add_option("--level", pl_level);
  pl->callback([&] {
    action = [&] {
      auto params = satake_from_json(load_json(pl_params, "--params"));
      return Json{{"value", cyclo_json(partial_euler_product(params, character(), pl_s, pl_bound,
                                                             pl_level.value_or(cfg.level)))}};
    };
  });

  // evdokimov
  auto* ev = app.add_subcommand("evdokimov", "truncated Evdokimov double sum");
  std::string ev_t, ev_coeffs, ev_bounds;
  long ev_s = 0;
  std::optional<long> ev_r;
  std::optional<unsigned long> ev_level;
  ev->add_option("--T", ev_t, "3x3 half-integral matrix (defaults to the config T)");
  ev->add_option("--coeffs", ev_coeffs, "coefficient oracle")->required();
  ev->add_option("--s", ev_s)->required();
  ev->add_option("--r", ev_r);
  ev->add_option("--bounds", ev_bounds, "lambda_bound,det_bound")->required();
  ev->add_option("--level", ev_level);
  ev->callback([&] {
    action = [&] {
      Matrix t = ev_t.empty() ? (cfg.t ? *cfg.t : throw CLI::ValidationError("--T is required"))
                              : matrix_from_json(load_json(ev_t, "--T"), "");
      auto b = split_list<long>(ev_bounds, to_long);
      if (b.size() != 2) throw CLI::ValidationError("--bounds needs lambda,det");
      CoeffOracle oracle = oracle_from_json(load_json(ev_coeffs, "--coeffs"));
      return Json{{"value", cyclo_json(evdokimov_partial(t, oracle, character(), ev_s, ev_r.value_or(cfg.weight), b[0],
                                                         b[1], ev_level.value_or(cfg.level)))}};
    };
  });

  // bernoulli
  auto* bn = app.add_subcommand("bernoulli", "generalized Bernoulli number B_{n,chi}");
  unsigned long bn_n = 0;
  bn->add_option("--n", bn_n)->required();
  bn->callback([&] {
    action = [&] { return Json{{"value", cyclo_json(gen_bernoulli(character(), bn_n))}}; };
  });

  // jfactor
  auto* jf = app.add_subcommand("jfactor", "factor of automorphy j(g, Z) and gZ");
  std::string jf_element, jf_g6, jf_z;
  jf->add_option("--element", jf_element, "identity, iota0..iota3 or w<M>");
  jf->add_option("--g6", jf_g6, "6x6 GSp6 matrix to embed");
  jf->add_option("--z", jf_z, "{\"x\": herm, \"y\": herm} for Z = X + iY")->required();
  jf->callback([&] {
    action = [&] {
      const QuatAlgebra& alg = cfg.alg();
      if (jf_element.empty() == jf_g6.empty()) throw CLI::ValidationError("give exactly one of --element, --g6");
      GElement g = jf_g6.empty() ? parse_element(alg, jf_element)
                                 : embed_gsp6(alg, matrix_from_json(load_json(jf_g6, "--g6"), ""));
      Json zj = load_json(jf_z, "--z");
      if (!zj.is_object()) throw Error("schema_error", "Z must be an object", {{"pointer", "/"}});
      HermQ x = herm_from_json(alg, zj.value("x", Json{{"c", {0, 0, 0}}}), "/x");
      HermQ y = herm_from_json(alg, zj.value("y", Json{{"c", {0, 0, 0}}}), "/y");
      JFactor res = j_factor(alg, g, gaussian_herm(x, y));
      return Json{{"j", {{"re", rational_json(res.j.re)}, {"im", rational_json(res.j.im)}}},
                  {"gz", gaussian_herm_json(alg, res.gz)}};
    };
  });

  // verify
  auto* vf = app.add_subcommand("verify", "run acceptance checks for one module suite or all");
  std::string vf_suite = "all";
  vf->add_option("--suite", vf_suite);
  bool verify_failed = false;
  vf->callback([&] {
    action = [&] {
      Json results = Json::array();
      int passed = 0, failed = 0;
      for (const auto& c : checks::criteria()) {
        if (vf_suite != "all" && c.suite != vf_suite) continue;
        checks::CriterionResult r = checks::run_criterion(c);
        (r.pass ? passed : failed)++;
        results.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      }
      if (passed + failed == 0) throw CLI::ValidationError("unknown suite " + vf_suite);
      verify_failed = failed > 0;
      return Json{{"suite", vf_suite}, {"passed", passed}, {"failed", failed}, {"results", results}};
    };
  });

  auto error_json = [&](const std::string& code, const std::string& message,
                        const std::map<std::string, std::string>& context) {
    out << dump_canonical(Json{{"error", {{"code", code}, {"message", message}, {"context", context}}}});
  };

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string code = "usage_error";
    for (const auto& a : argv) {
      if (a.rfind("-", 0) == 0) continue;
      if (app.get_subcommand_no_throw(a) == nullptr) code = "unknown_command";
      break;
    }
    error_json(code, e.what(), {});
    return 2;
  }
  try {
    if (!config_path.empty()) apply_config(cfg, config_path);
    if (!algebra_flag.empty()) {
      cfg.custom.reset();
      cfg.algebra = algebra_flag;
      cfg.alg();
    }
    if (!char_flag.empty()) cfg.character = char_flag;
    Json result = action();
    out << dump_canonical(result);
    return verify_failed ? 1 : 0;
  } catch (const CLI::ValidationError& e) {
    error_json("usage_error", e.what(), {});
    return 2;
  } catch (const Error& e) {
    error_json(e.code(), e.what(), e.context());
    return 1;
  }
}

}  // namespace spinl::cli
