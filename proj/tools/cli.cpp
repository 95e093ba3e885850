#include "cli.hpp"

#include "sunspec/errors.hpp"
#include "sunspec/factored_poly.hpp"
#include "sunspec/hypergraph.hpp"
#include "sunspec/profiles.hpp"
#include "sunspec/spectra.hpp"
#include "sunspec/trace.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace sunspec::cli {

namespace {

using json = nlohmann::json;

struct Common {
  int k = 0;
  int s = 0;
  int p = 0;
  bool json = false;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  unsigned threads = 1;
};

std::string fixed6(double v) {
  if (std::abs(v) < 5e-13) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string complex_text(std::complex<double> z) {
  std::string im = fixed6(z.imag());
  if (im.front() != '-') im = "+" + im;
  return fixed6(z.real()) + im + "i";
}

json complex_json(std::complex<double> z) {
  auto clean = [](double v) { return std::abs(v) < 5e-13 ? 0.0 : v; };
  return json{{"re", clean(z.real())}, {"im", clean(z.imag())}};
}

json cyc_json(const CyclotomicElement& c) {
  json coeffs = json::array();
  for (const auto& x : c.coeffs()) coeffs.push_back(x.get_str());
  return json{{"order", c.order()}, {"coeffs", coeffs}, {"text", c.to_string()}};
}

json params_json(const SunflowerParams& p) { return json{{"k", p.k}, {"s", p.s}, {"p", p.p}}; }

void emit_json(Context& ctx, const std::string& command, const SunflowerParams& params, json result) {
  json env{{"command", command}, {"params", params_json(params)}, {"result", std::move(result)}, {"version", kVersion}};
  ctx.out << env.dump(2) << "\n";
}

void add_params(CLI::App* sub, Common& c) {
  sub->add_option("-k", c.k, "uniformity")->required();
  sub->add_option("-s", c.s, "number of seeds")->required();
  sub->add_option("-p", c.p, "number of petals")->required();
  sub->add_flag("--json", c.json, "emit a JSON envelope");
}

// ---- charpoly -------------------------------------------------------------

int cmd_charpoly(Context& ctx, const Common& c, bool expand, long cap) {
  const auto params = SunflowerParams::make(c.k, c.s, c.p);
  const FactoredCharPoly f = char_poly_factored(params);
  std::optional<IntPolynomial> expanded;
  if (expand) expanded = expand_factored(f, cap);

  if (c.json) {
    json factors = json::array();
    for (const auto& x : f.factors) factors.push_back({{"constant", cyc_json(x.constant)}, {"exponent", x.exponent.get_str()}});
    json result{{"k", f.k},
                {"degree", f.degree().get_str()},
                {"zero_exponent", f.zero_exponent.get_str()},
                {"factors", factors},
                {"text", f.to_string()}};
    if (expanded) {
      json coeffs = json::array();
      for (const auto& [e, v] : expanded->terms()) coeffs.push_back({{"degree", e}, {"coeff", v.get_str()}});
      result["expanded"] = {{"coefficients", coeffs}, {"text", expanded->to_string()}};
    }
    emit_json(ctx, "charpoly", params, std::move(result));
  } else {
    ctx.out << f.to_string() << "\n";
    if (expanded) ctx.out << expanded->to_string() << "\n";
  }
  return kOk;
}

// ---- moment / oracle ------------------------------------------------------

BigInt factored_moment(const SunflowerParams& params, long d) {
  const BigRat r = factored_power_sum(char_poly_factored(params), d);
  if (!is_integral(r)) throw IntegralityViolation("factored power sum is not an integer");
  return r.get_num();
}

int cmd_moment(Context& ctx, const Common& c, long d, const std::string& method, long cap) {
  const auto params = SunflowerParams::make(c.k, c.s, c.p);
  if (d < 1) throw InvalidArgument("d must be positive");
  auto oracle = [&] {
    return spectral_moment_oracle_detailed(make_sunflower(params), d, OracleOptions{cap, ctx.threads}).moment;
  };

  if (method != "all") {
    BigInt value;
    if (method == "closed") {
      value = spectral_moment_closed(params, d);
    } else if (method == "factored") {
      value = factored_moment(params, d);
    } else {
      value = oracle();
    }
    if (c.json) {
      emit_json(ctx, "moment", params, json{{"d", d}, {"method", method}, {"value", value.get_str()}});
    } else {
      ctx.out << value.get_str() << "\n";
    }
    return kOk;
  }

  std::vector<std::pair<std::string, BigInt>> values;
  if (params.k >= 3) values.emplace_back("closed", spectral_moment_closed(params, d));
  values.emplace_back("factored", factored_moment(params, d));
  values.emplace_back("oracle", oracle());
  bool agree = true;
  for (const auto& [name, v] : values) agree = agree && v == values.front().second;

  if (c.json) {
    json result{{"d", d}, {"method", "all"}, {"agree", agree}};
    for (const auto& [name, v] : values) result[name] = v.get_str();
    emit_json(ctx, "moment", params, std::move(result));
  } else {
    for (const auto& [name, v] : values) ctx.out << name << " " << v.get_str() << "\n";
    ctx.out << (agree ? "agree" : "MISMATCH") << "\n";
  }
  return agree ? kOk : kMismatch;
}

int cmd_oracle(Context& ctx, const Common& c, long d, long cap) {
  const auto params = SunflowerParams::make(c.k, c.s, c.p);
  const OracleResult r = spectral_moment_oracle_detailed(make_sunflower(params), d, OracleOptions{cap, ctx.threads});
  if (c.json) {
    emit_json(ctx, "oracle", params,
              json{{"d", d},
                   {"moment", r.moment.get_str()},
                   {"sequences", r.sequences.get_str()},
                   {"balanced", r.balanced.get_str()},
                   {"digraphs", r.digraphs}});
  } else {
    ctx.out << "S_" << d << " = " << r.moment.get_str() << "\n"
            << "sequences = " << r.sequences.get_str() << "\n"
            << "balanced = " << r.balanced.get_str() << "\n"
            << "digraphs = " << r.digraphs << "\n";
  }
  return kOk;
}

// ---- eigen ----------------------------------------------------------------

XiVector parse_xi(const std::string& spec, int s) {
  XiVector xi;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "z") {
      xi.emplace_back(std::nullopt);
      continue;
    }
    std::size_t used = 0;
    int j = 0;
    try {
      j = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("bad xi token '" + tok + "' (expected 'z' or a root index)");
    }
    if (used != tok.size()) throw InvalidArgument("bad xi token '" + tok + "'");
    if (j < 0 || j >= s) throw InvalidArgument("xi root index " + tok + " must lie in [0, s)");
    xi.emplace_back(j);
  }
  return xi;
}

int cmd_eigen(Context& ctx, const Common& c, const std::string& xi_spec, int branch) {
  const auto params = SunflowerParams::make(c.k, c.s, c.p);
  if (xi_spec.empty()) {
    const auto values = numeric_eigenvalues(params);
    if (c.json) {
      json list = json::array();
      for (const auto& v : values) list.push_back({{"value", complex_json(v.value)}, {"multiplicity", v.multiplicity.get_str()}});
      emit_json(ctx, "eigen", params, json{{"eigenvalues", list}});
    } else {
      for (const auto& v : values)
        ctx.out << "lambda = " << complex_text(v.value) << "  multiplicity " << v.multiplicity.get_str() << "\n";
    }
    return kOk;
  }

  EigvecRecipe recipe = EigvecRecipe::principal(parse_xi(xi_spec, params.s));
  recipe.lambda_branch = branch;
  const Eigenpair pair = eigvec_construct(params, recipe);
  const double residual = eigen_residual(make_sunflower(params), pair.lambda, pair.x);
  const bool ok = residual <= 1e-9;
  if (c.json) {
    json x = json::array();
    for (Eigen::Index i = 0; i < pair.x.size(); ++i) x.push_back(complex_json(pair.x(i)));
    emit_json(ctx, "eigen", params,
              json{{"xi", xi_spec}, {"branch", branch}, {"lambda", complex_json(pair.lambda)}, {"x", x}, {"residual", residual}});
  } else {
    ctx.out << "lambda = " << complex_text(pair.lambda) << "\n";
    for (Eigen::Index i = 0; i < pair.x.size(); ++i) ctx.out << "x[" << i + 1 << "] = " << complex_text(pair.x(i)) << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", residual);
    ctx.out << "residual = " << buf << "\n";
  }
  return ok ? kOk : kMismatch;
}

// ---- radius ---------------------------------------------------------------

int cmd_radius(Context& ctx, const Common& c) {
  const auto params = SunflowerParams::make(c.k, c.s, c.p);
  const SpectralRadius r = spectral_radius(params);
  const FactoredCharPoly f = char_poly_factored(params);
  const BigInt exponent = f.exponent_of(CyclotomicElement(params.s, ipow(params.p, static_cast<unsigned long>(params.s))));
  const bool agree = exponent == r.multiplicity;
  if (c.json) {
    emit_json(ctx, "radius", params,
              json{{"rho", r.rho}, {"multiplicity", r.multiplicity.get_str()}, {"factor_exponent", exponent.get_str()}, {"agree", agree}});
  } else {
    ctx.out << "rho = " << fixed6(r.rho) << "\n"
            << "multiplicity = " << r.multiplicity.get_str() << "\n"
            << "charpoly exponent = " << exponent.get_str() << (agree ? " (agrees)" : " (MISMATCH)") << "\n";
  }
  return agree ? kOk : kMismatch;
}

// ---- verify ---------------------------------------------------------------

class Checklist {
 public:
  struct Entry {
    std::string status;
    std::string name;
    std::string detail;
  };

  void run(const std::string& name, const std::function<std::string()>& check) {
    try {
      const std::string failure = check();
      entries_.push_back({failure.empty() ? "PASS" : "FAIL", name, failure});
    } catch (const CapExceeded& e) {
      entries_.push_back({"SKIP", name, e.what()});
    } catch (const Error& e) {
      entries_.push_back({"FAIL", name, e.what()});
    }
  }

  int failures() const {
    return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [](const Entry& e) { return e.status == "FAIL"; }));
  }

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

int cmd_verify(Context& ctx, const Common& c, long max_d, long cap) {
  const auto params = SunflowerParams::make(c.k, c.s, c.p);
  const int k = params.k;
  if (max_d < 1) throw InvalidArgument("--max-d must be positive");
  const UniformHypergraph h = make_sunflower(params);
  const FactoredCharPoly f = char_poly_factored(params);
  Checklist list;

  list.run("degree-identity", [&] {
    return f.degree() == degree_of_charpoly(params) ? "" : f.degree().get_str() + " != " + degree_of_charpoly(params).get_str();
  });
  list.run("galois-closure", [&] { return is_galois_closed(f) ? "" : std::string("factor multiset not Galois-closed"); });

  if (k >= 3) {
    list.run("total-multiplicity", [&] {
      BigRat sum = 0;
      for (const auto& cls : xi_classes(params.s, params.p))
        if (cls.support() > 0) sum += BigRat(cls.class_size()) * multiplicity_mu(params, cls);
      return sum == total_nonzero_multiplicity(params) ? "" : sum.get_str() + " != closed total";
    });
    list.run("eigenvalue-factors", [&] {
      std::set<CyclotomicElement> from_theorem, from_poly;
      for (const auto& e : eigenvalue_factors(params)) from_theorem.insert(e.value);
      for (const auto& x : f.factors) from_poly.insert(x.constant);
      if (f.zero_exponent > 0) from_poly.insert(CyclotomicElement(params.s));
      return from_theorem == from_poly ? "" : std::string("eigenvalue factors differ from charpoly factors");
    });
  }

  for (long d = 1; d <= max_d; ++d) {
    const std::string tag = "d=" + std::to_string(d);
    if (d % k != 0) {
      list.run("k-symmetry " + tag, [&] {
        if (k >= 3 && spectral_moment_closed(params, d) != 0) return std::string("closed form nonzero");
        if (factored_power_sum(f, d) != 0) return std::string("factored power sum nonzero");
        const BigInt o = spectral_moment_oracle_detailed(h, d, OracleOptions{cap, ctx.threads}).moment;
        return o == 0 ? std::string() : "oracle gives " + o.get_str();
      });
      continue;
    }
    list.run("moment-closed-vs-factored " + tag, [&] {
      const BigInt fac = factored_moment(params, d);
      if (k < 3) return std::string();
      const BigInt closed = spectral_moment_closed(params, d);
      return closed == fac ? std::string() : closed.get_str() + " != " + fac.get_str();
    });
    list.run("moment-oracle " + tag, [&] {
      const BigInt fac = factored_moment(params, d);
      const BigInt o = spectral_moment_oracle_detailed(h, d, OracleOptions{cap, ctx.threads}).moment;
      return o == fac ? std::string() : "oracle " + o.get_str() + " != " + fac.get_str();
    });
    list.run("balanced-digraphs " + tag, [&] {
      const Prop34Report r = verify_prop34(params, d, cap);
      return r.ok() ? std::string() : r.counterexamples.front();
    });
    list.run("subsunflower-supports " + tag, [&] {
      subsunflower_supports(params, d, cap);
      return std::string();
    });
    list.run("tree-and-degree-formulas " + tag, [&] {
      for (int t = 1; t <= std::min<long>(d / k, params.p); ++t)
        for (const auto& prof : enumerate_profiles(k, params.s, d, t)) {
          const Lemma35bReport r = verify_lemma35b(prof, t);
          if (!r.ok()) return "profile " + prof.to_string();
        }
      return std::string();
    });
  }

  if (k >= 3) {
    list.run("eigenvector-residuals", [&] {
      for (const auto& cls : xi_classes(params.s, params.p)) {
        if (cls.support() == 0 || class_sum(cls).is_zero()) continue;
        if (params.s == k - 1 && !cls.is_extremal()) continue;
        for (int b = 0; b < k; ++b) {
          EigvecRecipe recipe = EigvecRecipe::principal(cls.representative());
          recipe.lambda_branch = b;
          const Eigenpair pair = eigvec_construct(params, recipe);
          const double r = eigen_residual(h, pair.lambda, pair.x);
          if (!(r <= 1e-9)) return "residual " + std::to_string(r) + " for a class of support " + std::to_string(cls.support());
        }
      }
      return std::string();
    });
  }

  list.run("spectral-radius", [&] {
    const SpectralRadius r = spectral_radius(params);
    const CyclotomicElement top = k == 2 ? CyclotomicElement(1, BigInt(params.p))
                                         : CyclotomicElement(params.s, ipow(params.p, static_cast<unsigned long>(params.s)));
    for (const auto& x : f.factors) {
      if (x.constant == top) continue;
      const double mod = std::pow(std::abs(x.constant.to_complex()), 1.0 / k);
      if (!(mod < r.rho - 1e-9)) return "factor " + x.constant.to_string() + " reaches the radius";
    }
    return std::string();
  });

  const int failed = list.failures();
  if (c.json) {
    json checks = json::array();
    for (const auto& e : list.entries()) checks.push_back({{"name", e.name}, {"status", e.status}, {"detail", e.detail}});
    emit_json(ctx, "verify", params, json{{"max_d", max_d}, {"checks", checks}, {"failures", failed}});
  } else {
    for (const auto& e : list.entries()) {
      ctx.out << e.status << " " << e.name;
      if (!e.detail.empty()) ctx.out << ": " << e.detail;
      ctx.out << "\n";
    }
    if (failed == 0)
      ctx.out << "all checks passed\n";
    else
      ctx.out << failed << " check(s) failed\n";
  }
  return failed == 0 ? kOk : kMismatch;
}

unsigned parse_threads(const char* env) {
  if (env == nullptr || *env == '\0') return std::max(1u, std::thread::hardware_concurrency());
  const std::string text(env);
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v < 1) throw InvalidArgument("SUNSPEC_THREADS must be a positive integer");
  return static_cast<unsigned>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* threads_env) {
  CLI::App app{"Exact spectra of sunflower hypergraphs", "sunspec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;
  long cap = -1;
  long d = 0;
  long max_d = 0;
  bool expand = false;
  std::string method = "closed";
  std::string xi_spec;
  int branch = 0;

  auto* charpoly = app.add_subcommand("charpoly", "factored characteristic polynomial");
  add_params(charpoly, common);
  charpoly->add_flag("--expand", expand, "also print the expanded polynomial");
  charpoly->add_option("--cap", cap, "maximum expanded degree (default 100000)");

  auto* moment = app.add_subcommand("moment", "d-th spectral moment");
  add_params(moment, common);
  moment->add_option("-d", d, "moment order")->required();
  moment->add_option("--method", method, "closed | factored | oracle | all")
      ->check(CLI::IsMember({"closed", "factored", "oracle", "all"}));
  moment->add_option("--cap", cap, "maximum enumerated sequences for the oracle (default 1e7)");

  auto* eigen = app.add_subcommand("eigen", "eigenvalues, or an explicit eigenpair with --xi");
  add_params(eigen, common);
  eigen->add_option("--xi", xi_spec, "comma list of p tokens: z for 0, j for zeta_s^j");
  eigen->add_option("--branch", branch, "k-th root branch of lambda");
  eigen->add_option("--cap", cap, "unused; accepted for uniformity");

  auto* radius = app.add_subcommand("radius", "spectral radius and its multiplicity");
  add_params(radius, common);
  radius->add_option("--cap", cap, "unused; accepted for uniformity");

  auto* verify = app.add_subcommand("verify", "run every identity and oracle cross-check");
  add_params(verify, common);
  verify->add_option("--max-d", max_d, "largest moment order checked (default 2k)");
  verify->add_option("--cap", cap, "maximum enumerated sequences per oracle run (default 1e7)");

  auto* oracle = app.add_subcommand("oracle", "brute-force moment with enumeration statistics");
  add_params(oracle, common);
  oracle->add_option("-d", d, "moment order")->required();
  oracle->add_option("--cap", cap, "maximum enumerated sequences (default 1e7)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    Context ctx{out, err, parse_threads(threads_env)};
    if (charpoly->parsed()) return cmd_charpoly(ctx, common, expand, cap < 0 ? kDefaultDegreeCap : cap);
    const long seq_cap = cap < 0 ? kDefaultSizeCap : cap;
    if (moment->parsed()) return cmd_moment(ctx, common, d, method, seq_cap);
    if (oracle->parsed()) return cmd_oracle(ctx, common, d, seq_cap);
    if (eigen->parsed()) return cmd_eigen(ctx, common, xi_spec, branch);
    if (radius->parsed()) return cmd_radius(ctx, common);
    if (verify->parsed()) return cmd_verify(ctx, common, max_d > 0 ? max_d : 2L * common.k, seq_cap);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kInvalidInput;
}

}  // namespace sunspec::cli
