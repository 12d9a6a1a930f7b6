#include "qsym/cli.hpp"

#include <chrono>
#include <ctime>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qsym/detail/parallel.hpp"
#include "qsym/errors.hpp"
#include "qsym/identities.hpp"
#include "qsym/qbernoulli.hpp"
#include "qsym/qcore.hpp"
#include "qsym/serialize.hpp"
#include "qsym/volkenborn.hpp"

namespace qsym {

namespace {

struct GlobalFlags {
  unsigned threads = 1;
  bool verbose = false;
  Guards guards;
};

struct ComputeFlags {
  std::string what;
  std::int64_t n = 0, r = 1, h = 1, w = 1, arg = 0, i = 0, wlim = 1, b = 1, m = 0;
  std::string output = "json";
};

struct VerifyFlags {
  std::vector<std::string> identities;
  std::int64_t min_n = 0, max_n = 3;
  std::int64_t min_r = 1, max_r = 2;
  std::int64_t min_h = 1, max_h = 4;
  std::int64_t min_w = 1, max_w = 3;
  std::int64_t min_x = 0, max_x = 1;
  std::string mutation = "none";
};

struct TableFlags {
  std::int64_t min_n = 0, max_n = 0;
  std::int64_t min_r = 1, max_r = 1;
  std::int64_t min_w = 1, max_w = 1;
  std::int64_t min_arg = 0, max_arg = 0;
  std::string output = "csv";
};

struct VolkenbornFlags {
  std::string family = "single";
  std::int64_t n = 0, r = 1, h = 1, x = 0, p = 5, levels = 3;
  std::int64_t budget = PadicContext::kDefaultBudget;
  std::string q0;
};

void log_line(const GlobalFlags& g, std::ostream& err, const std::string& msg) {
  if (!g.verbose) {
    return;
  }
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  err << '[' << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ") << "] " << msg << '\n';
}

void guard_value(bool ok, const std::string& what) {
  if (!ok) {
    throw ResourceError("guard exceeded: " + what);
  }
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

// Guards on the values a compute/table request may use.
void guard_query(const Guards& g, std::int64_t n, std::int64_t r, std::int64_t w, std::optional<std::int64_t> h) {
  guard_value(n <= g.max_n, "n = " + std::to_string(n) + " > " + std::to_string(g.max_n));
  guard_value(r <= g.max_r, "r = " + std::to_string(r) + " > " + std::to_string(g.max_r));
  guard_value(w <= g.max_w, "w = " + std::to_string(w) + " > " + std::to_string(g.max_w));
  if (h) {
    guard_value(abs64(*h) <= g.max_abs_h, "|h| = " + std::to_string(abs64(*h)) + " > " + std::to_string(g.max_abs_h));
  }
}

int run_compute(const GlobalFlags& g, const ComputeFlags& c, std::ostream& out) {
  RatFun value;
  const std::string& what = c.what;
  if (what == "beta") {
    guard_query(g.guards, c.n, c.r, c.w, std::nullopt);
    value = beta_higher(BetaQuery{c.n, c.r, BaseExp(c.w), c.arg});
  } else if (what == "beta-h") {
    guard_query(g.guards, c.n, c.r, c.w, c.h);
    value = beta_weighted(WeightedBetaQuery{c.n, c.h, c.r, BaseExp(c.w), c.arg});
  } else if (what == "beta-number") {
    guard_query(g.guards, c.n, 1, 1, std::nullopt);
    value = beta_number(c.n);
  } else if (what == "t-sum") {
    guard_query(g.guards, c.n, c.r, c.wlim, std::nullopt);
    value = t_sum(c.n, c.i, c.r, c.wlim, BaseExp(c.b));
  } else if (what == "t-sum-h") {
    guard_query(g.guards, c.n, c.r, c.wlim, c.h);
    value = t_sum_h(c.n, c.i, c.h, c.r, c.wlim, BaseExp(c.b));
  } else if (what == "bracket") {
    value = q_bracket(c.m, BaseExp(c.w));
  } else if (what == "q-factorial") {
    value = q_factorial(c.r, BaseExp(c.w));
  } else {  // q-binomial
    value = q_binomial(c.m, c.r, BaseExp(c.w));
  }
  if (c.output == "pretty") {
    out << value.pretty() << '\n';
  } else {
    out << to_json(value).dump() << '\n';
  }
  return kExitOk;
}

int run_verify(const GlobalFlags& g, const VerifyFlags& v, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  cfg.identities.clear();
  if (v.identities.empty()) {
    cfg.identities = all_identities();
  }
  for (const auto& name : v.identities) {
    if (name == "all") {
      cfg.identities.insert(cfg.identities.end(), all_identities().begin(), all_identities().end());
    } else {
      cfg.identities.push_back(identity_from_name(name));
    }
  }
  cfg.n = {v.min_n, v.max_n};
  cfg.r = {v.min_r, v.max_r};
  cfg.h = {v.min_h, v.max_h};
  cfg.w1 = {v.min_w, v.max_w};
  cfg.w2 = {v.min_w, v.max_w};
  cfg.x = {v.min_x, v.max_x};
  cfg.guards = g.guards;
  cfg.threads = g.threads;
  cfg.mutation = v.mutation == "thm4-lhs-exponent" ? Mutation::thm4_lhs_exponent : Mutation::none;

  log_line(g, err, "verify: sweep start");
  const auto reports = sweep(cfg);
  std::size_t failures = 0;
  for (const auto& rep : reports) {
    failures += rep.holds ? 0 : 1;
    out << to_json(rep, g.verbose).dump() << '\n';
  }
  log_line(g, err,
           "verify: " + std::to_string(reports.size()) + " checks, " + std::to_string(failures) + " failed");
  return failures == 0 ? kExitOk : kExitIdentityFailure;
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char ch : s) {
    q += ch;
    if (ch == '"') {
      q += '"';
    }
  }
  return q + '"';
}

int run_table(const GlobalFlags& g, const TableFlags& t, std::ostream& out, std::ostream& err) {
  std::vector<BetaQuery> rows;
  const bool empty = t.min_n > t.max_n || t.min_r > t.max_r || t.min_w > t.max_w || t.min_arg > t.max_arg;
  if (!empty) {
    guard_query(g.guards, t.max_n, t.max_r, t.max_w, std::nullopt);
    for (std::int64_t n = t.min_n; n <= t.max_n; ++n) {
      for (std::int64_t r = t.min_r; r <= t.max_r; ++r) {
        for (std::int64_t w = t.min_w; w <= t.max_w; ++w) {
          for (std::int64_t a = t.min_arg; a <= t.max_arg; ++a) {
            rows.push_back(BetaQuery{n, r, BaseExp(w), a});
          }
        }
      }
    }
  }
  log_line(g, err, "table: " + std::to_string(rows.size()) + " rows");
  const auto values =
      detail::parallel_map<RatFun>(rows.size(), g.threads, [&](std::size_t k) { return beta_higher(rows[k]); });
  if (t.output == "csv") {
    out << "n,r,w,arg,ratfun\n";
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const BetaQuery& q = rows[k];
    if (t.output == "csv") {
      out << q.n << ',' << q.r << ',' << q.w.value() << ',' << q.arg << ',' << csv_quote(values[k].pretty()) << '\n';
    } else if (t.output == "pretty") {
      out << "beta(n=" << q.n << ", r=" << q.r << ", w=" << q.w.value() << ", arg=" << q.arg
          << ") = " << values[k].pretty() << '\n';
    } else {
      Json row = Json::object();
      row["n"] = q.n;
      row["r"] = q.r;
      row["w"] = q.w.value();
      row["arg"] = q.arg;
      row["ratfun"] = to_json(values[k]);
      out << row.dump() << '\n';
    }
  }
  return kExitOk;
}

int run_volkenborn(const GlobalFlags& g, const VolkenbornFlags& v, std::ostream& out, std::ostream& err) {
  const Family family = family_from_name(v.family);
  if (!is_prime(v.p)) {
    throw DomainError("p must be prime, got " + std::to_string(v.p));
  }
  const Rational q0 = v.q0.empty() ? PadicContext::default_q0(v.p) : Rational::parse(v.q0);
  const PadicContext ctx(v.p, q0, v.levels, v.budget);
  log_line(g, err, "volkenborn: start");
  const auto rep = convergence_report(family, FamilyParams{v.n, v.r, v.h, v.x}, ctx, g.threads);
  out << to_json(rep).dump() << '\n';
  log_line(g, err, std::string("volkenborn: monotone = ") + (rep.monotone ? "true" : "false"));
  return rep.monotone ? kExitOk : kExitIdentityFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Carlitz q-Bernoulli polynomials, symmetry identities and q-Volkenborn sums", "qsym"};
  // Plain --help only: "-h" would collide with the weight flag --h.
  app.set_help_flag("--help", "print this help and exit");
  app.fallthrough();
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)")->envname("QSYM_THREADS");
  app.add_flag("--verbose", g.verbose, "timestamps on stderr; verify also prints both sides");
  app.add_option("--guard-n", g.guards.max_n, "largest n allowed")->capture_default_str();
  app.add_option("--guard-r", g.guards.max_r, "largest r allowed")->capture_default_str();
  app.add_option("--guard-w", g.guards.max_w, "largest w allowed")->capture_default_str();
  app.add_option("--guard-x", g.guards.max_abs_x, "largest |x| allowed")->capture_default_str();
  app.add_option("--guard-h", g.guards.max_abs_h, "largest |h| allowed")->capture_default_str();

  ComputeFlags c;
  auto* compute = app.add_subcommand("compute", "evaluate one closed form");
  compute->set_help_flag("--help", "print this help and exit");
  compute->add_option("what", c.what, "quantity to compute")
      ->required()
      ->check(CLI::IsMember({"beta", "beta-h", "beta-number", "t-sum", "t-sum-h", "bracket", "q-factorial",
                             "q-binomial"}));
  compute->add_option("--n", c.n, "degree");
  compute->add_option("--r", c.r, "order");
  compute->add_option("--h", c.h, "weight");
  compute->add_option("--w", c.w, "bracket base exponent");
  compute->add_option("--arg", c.arg, "scaled argument A");
  compute->add_option("--i", c.i, "T-sum index");
  compute->add_option("--wlim", c.wlim, "T-sum range");
  compute->add_option("--b", c.b, "T-sum base exponent");
  compute->add_option("--m", c.m, "bracket argument");
  compute->add_option("--output", c.output)->check(CLI::IsMember({"json", "pretty"}))->capture_default_str();

  VerifyFlags v;
  auto* verify = app.add_subcommand("verify", "check identities over a parameter grid");
  verify->set_help_flag("--help", "print this help and exit");
  verify->add_option("--identity", v.identities, "identity name or 'all' (repeatable)");
  verify->add_option("--min-n", v.min_n)->capture_default_str();
  verify->add_option("--max-n", v.max_n)->capture_default_str();
  verify->add_option("--min-r", v.min_r)->capture_default_str();
  verify->add_option("--max-r", v.max_r)->capture_default_str();
  verify->add_option("--min-h", v.min_h)->capture_default_str();
  verify->add_option("--max-h", v.max_h)->capture_default_str();
  verify->add_option("--min-w", v.min_w)->capture_default_str();
  verify->add_option("--max-w", v.max_w)->capture_default_str();
  verify->add_option("--min-x", v.min_x)->capture_default_str();
  verify->add_option("--max-x", v.max_x)->capture_default_str();
  verify->add_option("--mutation", v.mutation)
      ->check(CLI::IsMember({"none", "thm4-lhs-exponent"}))
      ->group("");  // test hook, hidden from --help

  TableFlags t;
  auto* table = app.add_subcommand("table", "tabulate beta_higher over a grid");
  table->set_help_flag("--help", "print this help and exit");
  table->add_option("--min-n", t.min_n)->capture_default_str();
  table->add_option("--max-n", t.max_n)->capture_default_str();
  table->add_option("--min-r", t.min_r)->capture_default_str();
  table->add_option("--max-r", t.max_r)->capture_default_str();
  table->add_option("--min-w", t.min_w)->capture_default_str();
  table->add_option("--max-w", t.max_w)->capture_default_str();
  table->add_option("--min-arg", t.min_arg)->capture_default_str();
  table->add_option("--max-arg", t.max_arg)->capture_default_str();
  table->add_option("--output", t.output)->check(CLI::IsMember({"csv", "json", "pretty"}))->capture_default_str();

  VolkenbornFlags vk;
  auto* volk = app.add_subcommand("volkenborn", "p-adic convergence of finite q-Volkenborn sums");
  volk->set_help_flag("--help", "print this help and exit");
  volk->add_option("--family", vk.family)->check(CLI::IsMember({"single", "multi", "weighted"}))->capture_default_str();
  volk->add_option("--n", vk.n)->capture_default_str();
  volk->add_option("--r", vk.r)->capture_default_str();
  volk->add_option("--h", vk.h)->capture_default_str();
  volk->add_option("--x", vk.x)->capture_default_str();
  volk->add_option("--p", vk.p)->capture_default_str();
  volk->add_option("--q0", vk.q0, "rational q0 (default 1+p, or 5 for p = 2)");
  volk->add_option("--N", vk.levels, "largest level N")->capture_default_str();
  volk->add_option("--budget", vk.budget, "largest number of summands")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (compute->parsed()) {
      return run_compute(g, c, out);
    }
    if (verify->parsed()) {
      return run_verify(g, v, out, err);
    }
    if (table->parsed()) {
      return run_table(g, t, out, err);
    }
    return run_volkenborn(g, vk, out, err);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) {
    args.emplace_back(argv[k]);
  }
  return run_cli(args, out, err);
}

}  // namespace qsym
