// Command-line surface: hypergeometric evaluation, regulator formulas,
// curve/L-value inspection, golden-table reproduction, and identity suites.
//
// Exit codes: 0 success, 1 computation error, 2 usage error,
// 3 verification mismatch.

#include "CLI11.hpp"
#include "json.hpp"

#include "hgreg/ellcurve.hpp"
#include "hgreg/hyper.hpp"
#include "hgreg/lfunc.hpp"
#include "hgreg/precision.hpp"
#include "hgreg/regulators.hpp"
#include "hgreg/verify.hpp"

#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using ordered_json = nlohmann::ordered_json;

namespace {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

hgreg::Rational parse_rat_cli(const std::string& s, const char* what) {
  try {
    return hgreg::parse_rational(s);
  } catch (const std::exception& e) {
    throw usage_error(std::string(what) + ": " + e.what() +
                      " (exact \"p/q\" or integer required)");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

hgreg::Family parse_family(const std::string& s) {
  if (s == "legendre") return hgreg::Family::Legendre;
  if (s == "family2") return hgreg::Family::Family2;
  if (s == "family3") return hgreg::Family::Family3;
  throw usage_error("unknown family '" + s +
                    "' (expected legendre|family2|family3)");
}

const char* family_str(hgreg::Family f) {
  switch (f) {
    case hgreg::Family::Legendre: return "legendre";
    case hgreg::Family::Family2: return "family2";
    default: return "family3";
  }
}

const char* amb_str(hgreg::Ambiguity a) {
  switch (a) {
    case hgreg::Ambiguity::Exact: return "exact";
    case hgreg::Ambiguity::ModQ1: return "mod 2*pi*i*Q";
    default: return "mod (2*pi*i)^2*Q";
  }
}

const char* kind_str(hgreg::ReductionKind k) {
  switch (k) {
    case hgreg::ReductionKind::Good: return "good";
    case hgreg::ReductionKind::SplitMultiplicative: return "split-multiplicative";
    case hgreg::ReductionKind::NonsplitMultiplicative:
      return "nonsplit-multiplicative";
    default: return "additive";
  }
}

std::string csv_escape(const std::string& s) {
  bool need = s.find_first_of(",\"\n") != std::string::npos;
  if (!need) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string residual_str(double r) {
  std::ostringstream os;
  os.setf(std::ios::scientific);
  os.precision(3);
  os << r;
  return os.str();
}

struct Globals {
  long prec = 40;
  long long qmax = 100000;
  double tol = 1e-8;
  std::string format;  // empty = per-command default
  long max_terms = 10000000;
  bool timings = false;
};

std::string resolve_format(const Globals& g, const char* dflt) {
  std::string f = g.format.empty() ? dflt : g.format;
  if (f != "text" && f != "json" && f != "csv")
    throw usage_error("unknown format '" + f + "' (text|json|csv)");
  return f;
}

ordered_json rt_row_json(const hgreg::RtResult& r, long P) {
  ordered_json o;
  o["family"] = family_str(r.family);
  o["t"] = hgreg::rational_str(r.t);
  o["R_decimal"] = r.R_decimal;
  if (r.reconstructed)
    o["R_rational"] = hgreg::rational_str(r.R_rational);
  else
    o["R_rational"] = nullptr;
  if (r.has_expected)
    o["expected"] = hgreg::rational_str(r.expected);
  else
    o["expected"] = nullptr;
  o["status"] = r.status;
  o["P"] = P;
  o["runtime_ms"] = r.runtime_ms;
  return o;
}

void emit_rt_rows(const std::vector<hgreg::RtResult>& rows,
                  const std::string& fmt, long P, bool single) {
  if (fmt == "json") {
    if (single) {
      std::cout << rt_row_json(rows[0], P).dump(2) << "\n";
    } else {
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) arr.push_back(rt_row_json(r, P));
      std::cout << arr.dump(2) << "\n";
    }
    return;
  }
  if (fmt == "csv") {
    std::cout << "family,t,R_decimal,R_rational,expected,status,P,runtime_ms\n";
    for (const auto& r : rows) {
      std::cout << family_str(r.family) << ',' << hgreg::rational_str(r.t)
                << ',' << csv_escape(r.R_decimal) << ','
                << (r.reconstructed ? hgreg::rational_str(r.R_rational) : "")
                << ','
                << (r.has_expected ? hgreg::rational_str(r.expected) : "")
                << ',' << r.status << ',' << P << ',' << r.runtime_ms << "\n";
    }
    return;
  }
  for (const auto& r : rows) {
    std::cout << "family=" << family_str(r.family)
              << " t=" << hgreg::rational_str(r.t) << " status=" << r.status
              << " R_rational="
              << (r.reconstructed ? hgreg::rational_str(r.R_rational) : "-")
              << " expected="
              << (r.has_expected ? hgreg::rational_str(r.expected) : "-")
              << " R_decimal=" << r.R_decimal << " P=" << P
              << " runtime_ms=" << r.runtime_ms << "\n";
  }
}

void emit_reg_result(const hgreg::RegResult& r, const std::string& fmt,
                     long P) {
  if (fmt == "json") {
    ordered_json o;
    o["value"] = hgreg::to_string(r.value, P);
    o["ambiguity"] = amb_str(r.ambiguity);
    o["branch"] = r.branch_note;
    std::cout << o.dump(2) << "\n";
  } else if (fmt == "csv") {
    std::cout << "value,ambiguity,branch\n"
              << csv_escape(hgreg::to_string(r.value, P)) << ','
              << amb_str(r.ambiguity) << ',' << csv_escape(r.branch_note)
              << "\n";
  } else {
    std::cout << "value = " << hgreg::to_string(r.value, P) << "\n"
              << "ambiguity = " << amb_str(r.ambiguity) << "\n"
              << "branch = " << (r.branch_note.empty() ? "-" : r.branch_note)
              << "\n";
  }
}

void emit_scalar(const char* key, const std::string& val,
                 const std::string& fmt) {
  if (fmt == "json") {
    ordered_json o;
    o[key] = val;
    std::cout << o.dump(2) << "\n";
  } else if (fmt == "csv") {
    std::cout << key << "\n" << csv_escape(val) << "\n";
  } else {
    std::cout << key << " = " << val << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  Globals G;
  CLI::App app{
      "hgreg: extended-precision regulator formulas for hypergeometric "
      "fibrations, elliptic L-values, and the rational-ratio tables"};
  app.fallthrough();
  app.add_option("--prec", G.prec,
                 "working decimal precision P (>= 20, default 40)")
      ->envname("HGREG_PREC");
  app.add_option("--qmax", G.qmax,
                 "rational reconstruction denominator cap (default 1e5)");
  app.add_option("--tol", G.tol,
                 "rational reconstruction tolerance (default 1e-8)");
  app.add_option("--format", G.format,
                 "output format: text|json|csv (default: json for table and "
                 "verify, text otherwise)");
  app.add_option("--max-terms", G.max_terms,
                 "series term cap for hyper eval (default 1e7)");
  app.add_flag("--timings", G.timings,
               "record per-row wall time in runtime_ms (output is then "
               "machine-dependent)");

  // hyper eval
  auto* c_hyper = app.add_subcommand("hyper", "hypergeometric evaluation");
  c_hyper->fallthrough();
  auto* c_heval =
      c_hyper->add_subcommand("eval", "evaluate pFq from an exact spec");
  c_heval->fallthrough();
  std::string pfq_s;
  c_heval->add_option("--pfq", pfq_s, "\"a1,a2,..;b1,..;z\" exact rationals")
      ->required();

  // reg <family>
  auto* c_reg = app.add_subcommand("reg", "regulator evaluation");
  c_reg->fallthrough();
  std::string t_leg, t_f2, t_f3;
  auto* c_rleg = c_reg->add_subcommand("legendre", "Legendre family symbol");
  c_rleg->fallthrough();
  c_rleg->add_option("--t", t_leg, "rational parameter")->required();
  auto* c_rf2 = c_reg->add_subcommand("family2", "3y^2 = 2x^3 - 3x^2 + t");
  c_rf2->fallthrough();
  c_rf2->add_option("--t", t_f2, "rational parameter")->required();
  auto* c_rf3 = c_reg->add_subcommand("family3", "y^2 = x^3 + (3x+4t)^2");
  c_rf3->fallthrough();
  c_rf3->add_option("--t", t_f3, "rational parameter")->required();

  auto* c_rfer = c_reg->add_subcommand("fermat", "(x^n, y^m) fibration");
  c_rfer->fallthrough();
  long fn = 2, fm = 2, fnu1 = 1, fnu2 = 1, feps1 = 0, feps2 = 0;
  long fi0 = 1, fj0 = 1;
  std::string t_fer, fer_cycle = "delta";
  c_rfer->add_option("--n", fn, "x-exponent n")->required();
  c_rfer->add_option("--m", fm, "y-exponent m")->required();
  c_rfer->add_option("--nu1", fnu1, "exponent of nu1 (mod n)")->required();
  c_rfer->add_option("--nu2", fnu2, "exponent of nu2 (mod m)")->required();
  c_rfer->add_option("--eps1", feps1, "cycle label exponent (mod n)")
      ->required();
  c_rfer->add_option("--eps2", feps2, "cycle label exponent (mod m)")
      ->required();
  c_rfer->add_option("--t", t_fer, "rational parameter")->required();
  c_rfer->add_option("--cycle", fer_cycle, "delta|gamma (default delta)");
  c_rfer->add_option("--i0", fi0, "gamma cycle orbit seed i0");
  c_rfer->add_option("--j0", fj0, "gamma cycle orbit seed j0");

  auto* c_rgau =
      c_reg->add_subcommand("gauss", "y^N = x^a (1-x)^b (1-tx)^(N-b)");
  c_rgau->fallthrough();
  long gN = 3, ga = 1, gb = 2, gd = 1;
  std::string g_lambda, t_gau, gau_cycle;
  c_rgau->add_option("--N", gN, "degree N")->required();
  c_rgau->add_option("--a", ga, "exponent a")->required();
  c_rgau->add_option("--b", gb, "exponent b")->required();
  c_rgau->add_option("--d", gd, "kernel size d (d | N)")->required();
  c_rgau->add_option("--lambda", g_lambda, "\"r1,r2,..\" over the index set")
      ->required();
  c_rgau->add_option("--t", t_gau, "rational parameter")->required();
  c_rgau->add_option("--cycle", gau_cycle, "gamma0|gamma1")->required();

  // curve info
  auto* c_curve = app.add_subcommand("curve", "elliptic curve inspection");
  c_curve->fallthrough();
  auto* c_cinfo = c_curve->add_subcommand(
      "info", "invariants, minimal model, conductor, local data");
  c_cinfo->fallthrough();
  std::string cf_s, ct_s;
  c_cinfo->add_option("--family", cf_s, "legendre|family2|family3")
      ->required();
  c_cinfo->add_option("--t", ct_s, "rational parameter")->required();

  // lvalue
  auto* c_lval = app.add_subcommand("lvalue", "L(E,2) evaluation");
  c_lval->fallthrough();
  std::string lf_s, lt_s, lmodel_s;
  c_lval->add_option("--family", lf_s, "legendre|family2|family3");
  c_lval->add_option("--t", lt_s, "rational parameter");
  c_lval->add_option("--model", lmodel_s, "a1,a2,a3,a4,a6 exact rationals");

  // table
  auto* c_table =
      app.add_subcommand("table", "reproduce the golden R_t tables");
  c_table->fallthrough();
  std::string table_which;
  long jobs = static_cast<long>(std::thread::hardware_concurrency());
  if (jobs <= 0) jobs = 1;
  c_table->add_option("which", table_which, "legendre|family2|family3|all")
      ->required();
  c_table->add_option("--jobs", jobs, "worker threads (default: cores)");

  // verify
  auto* c_verify = app.add_subcommand("verify", "verification suites");
  c_verify->fallthrough();
  auto* c_vident =
      c_verify->add_subcommand("identities", "randomized identity suite");
  c_vident->fallthrough();
  unsigned long seed = 1;
  int vcount = 20;
  c_vident->add_option("--seed", seed, "RNG seed (default 1)");
  c_vident->add_option("--count", vcount, "instances per randomized family");
  auto* c_vbeil = c_verify->add_subcommand(
      "beilinson", "R_t = pi^2 reg / L(X_t,2) at one parameter");
  c_vbeil->fallthrough();
  std::string vf_s, vt_s;
  bool v_allow = false;
  c_vbeil->add_option("--family", vf_s, "legendre|family2|family3")
      ->required();
  c_vbeil->add_option("--t", vt_s, "rational parameter")->required();
  c_vbeil->add_flag("--allow-nonintegral", v_allow,
                    "proceed past the integrality criterion (exploration)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (G.prec < 20) throw usage_error("--prec must be at least 20");
    if (G.qmax < 1) throw usage_error("--qmax must be positive");
    if (G.max_terms < 1) throw usage_error("--max-terms must be positive");
    hgreg::Prec P(G.prec);

    if (app.got_subcommand(c_hyper)) {
      if (!c_hyper->got_subcommand(c_heval))
        throw usage_error("usage: hyper eval --pfq \"a1,..;b1,..;z\"");
      auto parts = split(pfq_s, ';');
      if (parts.size() != 3)
        throw usage_error("--pfq needs three ';'-separated fields");
      hgreg::HGSpec spec;
      for (const auto& a : split(parts[0], ','))
        if (!a.empty())
          spec.upper.emplace_back(parse_rat_cli(a, "upper parameter"), P.bits);
      for (const auto& b : split(parts[1], ','))
        if (!b.empty())
          spec.lower.emplace_back(parse_rat_cli(b, "lower parameter"), P.bits);
      spec.z = hgreg::XComplex(
          hgreg::XReal(parse_rat_cli(parts[2], "argument"), P.bits));
      hgreg::XComplex v = hgreg::pfq(spec, P, G.max_terms);
      emit_scalar("value", hgreg::to_string(v, P.digits),
                  resolve_format(G, "text"));
      return 0;
    }

    if (app.got_subcommand(c_reg)) {
      std::string fmt = resolve_format(G, "text");
      if (c_reg->got_subcommand(c_rleg)) {
        hgreg::XReal v = hgreg::legendre_reg(parse_rat_cli(t_leg, "--t"), P);
        emit_scalar("value", hgreg::to_string(v, P.digits), fmt);
        return 0;
      }
      if (c_reg->got_subcommand(c_rf2)) {
        hgreg::XReal v = hgreg::family2_reg(parse_rat_cli(t_f2, "--t"), P);
        emit_scalar("value", hgreg::to_string(v, P.digits), fmt);
        return 0;
      }
      if (c_reg->got_subcommand(c_rf3)) {
        hgreg::XReal v = hgreg::family3_reg(parse_rat_cli(t_f3, "--t"), P);
        emit_scalar("value", hgreg::to_string(v, P.digits), fmt);
        return 0;
      }
      if (c_reg->got_subcommand(c_rfer)) {
        hgreg::FermatFibration fib;
        fib.n = fn;
        fib.m = fm;
        fib.nu1_exp = fnu1;
        fib.nu2_exp = fnu2;
        fib.eps1_exp = feps1;
        fib.eps2_exp = feps2;
        hgreg::XComplex t(hgreg::XReal(parse_rat_cli(t_fer, "--t"), P.bits));
        hgreg::RegResult r;
        if (fer_cycle == "delta") {
          r = hgreg::fermat_reg_delta(fib, t, P);
        } else if (fer_cycle == "gamma") {
          auto Ie = hgreg::fermat_index_set(fn, fm, fi0, fj0);
          r = hgreg::fermat_reg_gamma(fib, Ie, t, P);
        } else {
          throw usage_error("--cycle must be delta or gamma");
        }
        emit_reg_result(r, fmt, P.digits);
        return 0;
      }
      if (c_reg->got_subcommand(c_rgau)) {
        hgreg::GaussFibration fib;
        fib.N = gN;
        fib.a = ga;
        fib.b = gb;
        fib.d = gd;
        for (const auto& l : split(g_lambda, ','))
          if (!l.empty()) fib.lambda.push_back(parse_rat_cli(l, "--lambda"));
        hgreg::XComplex t(hgreg::XReal(parse_rat_cli(t_gau, "--t"), P.bits));
        hgreg::GaussCycle cyc;
        if (gau_cycle == "gamma0") cyc = hgreg::GaussCycle::Gamma0;
        else if (gau_cycle == "gamma1") cyc = hgreg::GaussCycle::Gamma1;
        else throw usage_error("--cycle must be gamma0 or gamma1");
        emit_reg_result(hgreg::gauss_reg(fib, t, cyc, P), fmt, P.digits);
        return 0;
      }
      throw usage_error(
          "usage: reg legendre|family2|family3|fermat|gauss ...");
    }

    if (app.got_subcommand(c_curve)) {
      if (!c_curve->got_subcommand(c_cinfo))
        throw usage_error("usage: curve info --family <f> --t <rational>");
      hgreg::Family f = parse_family(cf_s);
      hgreg::Rational t = parse_rat_cli(ct_s, "--t");
      hgreg::WeierstrassModel m = f == hgreg::Family::Legendre
                                      ? hgreg::legendre_model(t)
                                      : f == hgreg::Family::Family2
                                            ? hgreg::family2_model(t)
                                            : hgreg::family3_model(t);
      hgreg::WeierstrassModel mini = hgreg::minimal_model(m);
      hgreg::CurveInvariants red = hgreg::reduction_data(mini);
      hgreg::CurveInvariants inv = hgreg::invariants(mini);
      std::string fmt = resolve_format(G, "text");
      auto rs = [](const hgreg::Rational& q) { return hgreg::rational_str(q); };
      if (fmt == "json") {
        ordered_json o;
        o["family"] = family_str(f);
        o["t"] = rs(t);
        o["minimal_model"] = {rs(mini.a1), rs(mini.a2), rs(mini.a3),
                              rs(mini.a4), rs(mini.a6)};
        o["c4"] = rs(inv.c4);
        o["c6"] = rs(inv.c6);
        o["disc"] = rs(inv.disc);
        o["j"] = rs(inv.j);
        o["conductor"] = red.conductor.get_str();
        ordered_json loc = ordered_json::array();
        for (const auto& ld : red.local_data) {
          ordered_json lo;
          lo["p"] = ld.p.get_str();
          lo["kodaira"] = ld.kodaira;
          lo["f"] = ld.f;
          lo["kind"] = kind_str(ld.kind);
          loc.push_back(lo);
        }
        o["local_data"] = loc;
        std::cout << o.dump(2) << "\n";
      } else {
        std::cout << "family = " << family_str(f) << "\n"
                  << "t = " << rs(t) << "\n"
                  << "minimal model: [" << rs(mini.a1) << ", " << rs(mini.a2)
                  << ", " << rs(mini.a3) << ", " << rs(mini.a4) << ", "
                  << rs(mini.a6) << "]\n"
                  << "c4 = " << rs(inv.c4) << "\n"
                  << "c6 = " << rs(inv.c6) << "\n"
                  << "disc = " << rs(inv.disc) << "\n"
                  << "j = " << rs(inv.j) << "\n"
                  << "conductor = " << red.conductor.get_str() << "\n";
        for (const auto& ld : red.local_data)
          std::cout << "local: p=" << ld.p.get_str()
                    << " kodaira=" << ld.kodaira << " f=" << ld.f
                    << " kind=" << kind_str(ld.kind) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_lval)) {
      hgreg::WeierstrassModel m;
      if (!lmodel_s.empty()) {
        if (!lf_s.empty() || !lt_s.empty())
          throw usage_error("give either --model or --family/--t, not both");
        auto parts = split(lmodel_s, ',');
        if (parts.size() != 5)
          throw usage_error("--model needs five coefficients a1,a2,a3,a4,a6");
        m.a1 = parse_rat_cli(parts[0], "a1");
        m.a2 = parse_rat_cli(parts[1], "a2");
        m.a3 = parse_rat_cli(parts[2], "a3");
        m.a4 = parse_rat_cli(parts[3], "a4");
        m.a6 = parse_rat_cli(parts[4], "a6");
      } else if (!lf_s.empty() && !lt_s.empty()) {
        hgreg::Family f = parse_family(lf_s);
        hgreg::Rational t = parse_rat_cli(lt_s, "--t");
        m = f == hgreg::Family::Legendre    ? hgreg::legendre_model(t)
            : f == hgreg::Family::Family2 ? hgreg::family2_model(t)
                                          : hgreg::family3_model(t);
      } else {
        throw usage_error("lvalue needs --family and --t, or --model");
      }
      hgreg::WeierstrassModel mini =
          hgreg::minimal_model(hgreg::integral_model(m));
      hgreg::LSeries series = hgreg::lseries_for_l2(mini, P.digits);
      int eps = hgreg::root_number(series, mini);
      hgreg::XReal L = hgreg::l_value_2(series, P);
      std::string fmt = resolve_format(G, "text");
      if (fmt == "json") {
        ordered_json o;
        o["conductor"] = series.conductor.get_str();
        o["eps"] = eps;
        o["L2"] = hgreg::to_string(L, P.digits);
        std::cout << o.dump(2) << "\n";
      } else {
        std::cout << "conductor = " << series.conductor.get_str() << "\n"
                  << "eps = " << (eps > 0 ? "+1" : "-1") << "\n"
                  << "L2 = " << hgreg::to_string(L, P.digits) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_table)) {
      std::vector<hgreg::Family> fams;
      if (table_which == "legendre") fams = {hgreg::Family::Legendre};
      else if (table_which == "family2") fams = {hgreg::Family::Family2};
      else if (table_which == "family3") fams = {hgreg::Family::Family3};
      else if (table_which == "all")
        fams = {hgreg::Family::Legendre, hgreg::Family::Family2,
                hgreg::Family::Family3};
      else
        throw usage_error("table expects legendre|family2|family3|all");
      if (jobs < 1) throw usage_error("--jobs must be positive");
      auto rows = hgreg::reproduce_tables(fams, P, static_cast<int>(jobs),
                                          G.timings);
      emit_rt_rows(rows, resolve_format(G, "json"), P.digits, false);
      for (const auto& r : rows)
        if (r.status != "match") return 3;
      return 0;
    }

    if (app.got_subcommand(c_verify)) {
      if (c_verify->got_subcommand(c_vident)) {
        if (vcount < 0) throw usage_error("--count must be >= 0");
        auto checks = hgreg::run_identity_suite(seed, vcount, P);
        std::string fmt = resolve_format(G, "json");
        if (fmt == "json") {
          ordered_json arr = ordered_json::array();
          for (const auto& c : checks) {
            ordered_json o;
            o["name"] = c.name;
            o["detail"] = c.detail;
            o["pass"] = c.pass;
            o["residual"] = c.residual;
            arr.push_back(o);
          }
          std::cout << arr.dump(2) << "\n";
        } else if (fmt == "csv") {
          std::cout << "name,detail,pass,residual\n";
          for (const auto& c : checks)
            std::cout << c.name << ',' << csv_escape(c.detail) << ','
                      << (c.pass ? "true" : "false") << ','
                      << residual_str(c.residual) << "\n";
        } else {
          for (const auto& c : checks)
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " "
                      << c.detail << " residual=" << residual_str(c.residual)
                      << "\n";
        }
        for (const auto& c : checks)
          if (!c.pass) return 3;
        return 0;
      }
      if (c_verify->got_subcommand(c_vbeil)) {
        hgreg::Family f = parse_family(vf_s);
        hgreg::Rational t = parse_rat_cli(vt_s, "--t");
        if (v_allow && !hgreg::integrality_check(f, t))
          std::cerr << "warning: symbol is non-integral at t="
                    << hgreg::rational_str(t) << "; proceeding\n";
        auto r = hgreg::compute_Rt(f, t, P,
                                   hgreg::Int(static_cast<long>(G.qmax)),
                                   G.tol, v_allow);
        std::vector<hgreg::RtResult> rows{r};
        emit_rt_rows(rows, resolve_format(G, "json"), P.digits, true);
        return r.status == "mismatch" ? 3 : 0;
      }
      throw usage_error("usage: verify identities|beilinson ...");
    }

    throw usage_error("no subcommand given (try --help)");
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const hgreg::calc_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
