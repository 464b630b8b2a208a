#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "nbt/dynamics.hpp"
#include "nbt/io.hpp"

namespace {

using namespace nbt;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_fraction(const std::string& text, const char* flag) {
  int a = 0, b = 0;
  char slash = 0, extra = 0;
  std::istringstream in(text);
  if (!(in >> a >> slash >> b) || slash != '/' || (in >> extra))
    throw UsageError(std::string(flag) + " expects a fraction like 1/3, got '" + text + "'");
  return {a, b};
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

std::string fixed(double x, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

/// Runs f over the items on up to `jobs` threads, keeping the input order.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, int jobs, F f) {
  using R = decltype(f(items.front()));
  std::vector<R> out(items.size());
  std::size_t next = 0;
  while (next < items.size()) {
    std::vector<std::future<R>> batch;
    const std::size_t end = std::min(items.size(), next + static_cast<std::size_t>(std::max(jobs, 1)));
    for (std::size_t i = next; i < end; ++i) batch.push_back(std::async(std::launch::async, f, items[i]));
    for (std::size_t i = next; i < end; ++i) out[i] = batch[i - next].get();
    next = end;
  }
  return out;
}

json roles_json(const RoleMap& roles) {
  json j = json::object();
  for (const auto& [k, v] : roles) j[k] = v;
  return j;
}

/// Closure plus axis for the named manifold; fills are applied afterwards.
SurgeredLink manifold_link(const std::string& name, const std::string& q, const std::string& nu) {
  if (name == "Mq") {
    if (q.empty()) throw UsageError("--manifold Mq needs --q");
    auto [m, n] = parse_fraction(q, "--q");
    const FamilyBraid b = beta(m, n);
    std::vector<LinkComponent> cs;
    const auto cycles = cycle_components(b.word);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      auto ss = cycles[i];
      std::sort(ss.begin(), ss.end());
      cs.push_back({cycles.size() == 1 ? "beta" : "beta" + std::to_string(i + 1), ss, std::nullopt});
    }
    return SurgeredLink(b.word, true, cs);
  }
  if (name == "Mhat") {
    if (nu.empty()) throw UsageError("--manifold Mhat needs --nu");
    auto [l, m] = parse_fraction(nu, "--nu");
    const FamilyBraid g = gamma(l, m);
    std::vector<int> rest;
    for (int s = 2; s <= g.word.strands(); ++s) rest.push_back(s);
    return SurgeredLink(g.word, true, {{"fixed", {1}, std::nullopt}, {"ribbons", rest, std::nullopt}});
  }
  if (name == "M") {
    const FamilyBraid d = delta_word();
    std::vector<LinkComponent> cs;
    for (const auto& [k, v] : d.roles) cs.push_back({k, v, std::nullopt});
    return SurgeredLink(d.word, true, cs);
  }
  if (name == "magic") return *verify_magic().final_link;
  throw UsageError("unknown manifold '" + name + "' (Mq, Mhat, M, magic)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid families, surgery chains and horseshoe dynamics"};
  app.require_subcommand(1);

  std::string q, nu, out, format = "text", manifold;
  int k = 0, kappa = 0, jobs = 1, max_n = 20;
  double eps = 1e-12;
  bool as_json = false;
  std::vector<std::string> fills, coeffs, files;

  auto add_common = [&](CLI::App* c) {
    c->add_flag("--json", as_json, "JSON output");
    c->add_option("--out", out, "write output to PATH");
  };

  // family
  auto* family = app.add_subcommand("family", "print a braid of one of the families");
  std::string which;
  family->add_option("which", which, "beta, beta-prime, gamma, delta or zeta")
      ->required()
      ->check(CLI::IsMember({"beta", "beta-prime", "gamma", "delta", "zeta"}));
  family->add_option("--q", q, "m/n for beta and beta-prime");
  family->add_option("--nu", nu, "l/m for gamma");
  family->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  add_common(family);

  // verify
  auto* verify = app.add_subcommand("verify", "replay a twist chain or check a filling sequence");
  verify->require_subcommand(1);
  auto* v42 = verify->add_subcommand("thm42", "1/k filling on the fixed string of gamma_nu");
  v42->add_option("--nu", nu, "l/m; all of 0/1 1/2 1/3 2/3 3/4 when omitted");
  v42->add_option("--k", k, "k >= 1; 1..3 when omitted");
  v42->add_option("--jobs", jobs, "parallel replays")->check(CLI::PositiveNumber);
  add_common(v42);
  auto* v53 = verify->add_subcommand("thm53", "-4 + 1/kappa filling on the black string of zeta");
  v53->add_option("--kappa", kappa, "kappa >= 1")->required();
  add_common(v53);
  auto* vmagic = verify->add_subcommand("magic", "gamma_0 to a three-strand braid plus axis");
  add_common(vmagic);
  auto* vhdst = verify->add_subcommand("hdst", "filling coefficients distinct with a^2+b^2 increasing");
  vhdst->add_option("coeffs", coeffs, "coefficients b/a")->required();
  add_common(vhdst);

  // dynamics
  auto* dyn = app.add_subcommand("dynamics", "horseshoe codes, t(q) and dilatations");
  dyn->require_subcommand(1);
  auto* dcode = dyn->add_subcommand("code", "code of pi_q from its rightmost point");
  auto* dtq = dyn->add_subcommand("tq", "tent slope t(q) by bisection");
  auto* ddil = dyn->add_subcommand("dilatation", "Perron root of the transition matrix");
  for (auto* c : {dcode, dtq, ddil}) {
    c->add_option("--q", q, "m/n")->required();
    add_common(c);
  }
  dtq->add_option("--eps", eps, "bracket width")->check(CLI::PositiveNumber);
  auto* dsweep = dyn->add_subcommand("sweep", "CSV of q, t(q), Perron root over q = m/n, n <= N");
  dsweep->add_option("--max-n", max_n, "largest denominator")->check(CLI::Range(3, 200));
  dsweep->add_option("--eps", eps, "bracket width")->check(CLI::PositiveNumber);
  dsweep->add_option("--jobs", jobs, "threads")->check(CLI::PositiveNumber);
  dsweep->add_option("--out", out, "write output to PATH");

  // export
  auto* exp = app.add_subcommand("export", "link JSON or SnapPy script for a manifold");
  exp->require_subcommand(1);
  auto* elink = exp->add_subcommand("link", "link JSON");
  auto* escript = exp->add_subcommand("snappy-script", "Python script for SnapPy");
  for (auto* c : {elink, escript}) {
    c->add_option("--manifold", manifold, "Mq, Mhat, M or magic")->required();
    c->add_option("--q", q, "m/n for Mq");
    c->add_option("--nu", nu, "l/m for Mhat");
    c->add_option("--fill", fills, "component=b/a, repeatable");
    c->add_option("--out", out, "write output to PATH");
  }

  // plot-data
  auto* plot = app.add_subcommand("plot-data", "merge CSV tables for plotting");
  plot->require_subcommand(1);
  auto* merge = plot->add_subcommand("merge", "outer join of CSV files on their first column");
  merge->add_option("files", files, "CSV files")->required()->check(CLI::ExistingFile);
  merge->add_option("--out", out, "write output to PATH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*family) {
      FamilyBraid fb;
      if (which == "beta" || which == "beta-prime") {
        if (q.empty()) throw UsageError("family " + which + " needs --q");
        auto [m, n] = parse_fraction(q, "--q");
        fb = which == "beta" ? beta(m, n) : beta_prime(m, n);
      } else if (which == "gamma") {
        if (nu.empty()) throw UsageError("family gamma needs --nu");
        auto [l, m] = parse_fraction(nu, "--nu");
        fb = gamma(l, m);
      } else {
        fb = which == "delta" ? delta_word() : zeta_word();
      }
      if (format == "json" || as_json)
        emit(json{{"family", which}, {"braid", braid_to_json(fb.word)}, {"roles", roles_json(fb.roles)}}.dump(2) +
                 "\n",
             out);
      else
        emit(to_text(fb.word) + "\n", out);
      return 0;
    }

    if (*verify) {
      std::vector<VerificationReport> reports;
      if (*v42) {
        std::vector<std::pair<int, int>> nus{{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}};
        if (!nu.empty()) nus = {parse_fraction(nu, "--nu")};
        std::vector<int> ks{1, 2, 3};
        if (v42->count("--k")) ks = {k};
        for (auto [l, m] : nus) check_nu(l, m);
        for (int kk : ks)
          if (kk < 1) throw UsageError("--k must be at least 1");
        std::vector<std::tuple<int, int, int>> cases;
        for (auto [l, m] : nus)
          for (int kk : ks) cases.emplace_back(l, m, kk);
        reports = parallel_map(cases, jobs, [](const std::tuple<int, int, int>& c) {
          return verify_thm42(std::get<0>(c), std::get<1>(c), std::get<2>(c));
        });
      } else if (*v53) {
        if (kappa < 1) throw UsageError("--kappa must be at least 1");
        reports.push_back(verify_thm53(kappa));
      } else if (*vmagic) {
        reports.push_back(verify_magic());
      } else {
        std::vector<ExtendedRational> cs;
        for (const auto& c : coeffs) cs.push_back(ExtendedRational::parse(c));
        const bool ok = hdst_check(cs);
        if (as_json) {
          json arr = json::array();
          for (const auto& c : cs) arr.push_back(c.to_string());
          emit(json{{"coefficients", arr}, {"pass", ok}}.dump(2) + "\n", out);
        } else {
          emit(std::string(ok ? "PASS" : "FAIL") + "\n", out);
        }
        return ok ? 0 : 1;
      }
      bool ok = true;
      std::string text;
      json arr = json::array();
      for (const auto& r : reports) {
        ok = ok && r.overall();
        text += report_text(r);
        arr.push_back(report_to_json(r));
      }
      if (as_json)
        emit((arr.size() == 1 ? arr[0] : arr).dump(2) + "\n", out);
      else
        emit(text, out);
      return ok ? 0 : 1;
    }

    if (*dyn) {
      if (*dsweep) {
        std::vector<std::pair<int, int>> qs;
        for (int n = 3; n <= max_n; ++n)
          for (int m = 1; 3 * m <= n; ++m)
            if (std::gcd(m, n) == 1) qs.emplace_back(m, n);
        auto rows = parallel_map(qs, jobs, [eps](const std::pair<int, int>& mn) {
          const double t = t_of_q(mn.first, mn.second, eps).t;
          const double lam = perron_root(transition_matrix(orbit_pattern(mn.first, mn.second)));
          return std::vector<std::string>{std::to_string(mn.first) + "/" + std::to_string(mn.second), fixed(t),
                                          fixed(lam), sci(std::abs(t - lam))};
        });
        emit(to_csv({{"q", "t", "perron", "diff"}, rows}), out);
        return 0;
      }
      auto [m, n] = parse_fraction(q, "--q");
      const OrbitPattern p = orbit_pattern(m, n);
      std::string value;
      json j = {{"q", q}};
      if (*dcode) {
        value = symbol_code(p);
        j["code"] = value;
        j["fold"] = p.fold;
      } else if (*dtq) {
        const TentParams tp = t_of_q(m, n, eps);
        value = fixed(tp.t);
        j["t"] = tp.t;
        j["bracket"] = {tp.lo, tp.hi};
      } else {
        const double lam = perron_root(transition_matrix(p));
        value = fixed(lam);
        j["dilatation"] = lam;
      }
      emit(as_json ? j.dump(2) + "\n" : value + "\n", out);
      return 0;
    }

    if (*exp) {
      SurgeredLink link = manifold_link(manifold, q, nu);
      for (const auto& f : fills) {
        const auto eq = f.find('=');
        if (eq == std::string::npos) throw UsageError("--fill expects component=b/a, got '" + f + "'");
        const std::string name = f.substr(0, eq);
        if (!link.has_component(name)) throw UsageError("no component '" + name + "' in " + manifold);
        link = link.with_coefficient(name, ExtendedRational::parse(f.substr(eq + 1)));
      }
      emit(*elink ? link_to_json(link).dump(2) + "\n" : snappy_script(link), out);
      return 0;
    }

    if (*plot) {
      std::vector<std::pair<std::string, CsvTable>> inputs;
      for (const auto& path : files) {
        std::ifstream in(path);
        std::string label = path;
        if (auto s = label.find_last_of('/'); s != std::string::npos) label = label.substr(s + 1);
        if (auto d = label.rfind('.'); d != std::string::npos) label = label.substr(0, d);
        inputs.emplace_back(label, parse_csv(in));
      }
      emit(to_csv(merge_csv(inputs)), out);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
