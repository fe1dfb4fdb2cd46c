#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <limits>

#include "search.hpp"
#include "trinom/serialize.hpp"

namespace trinom::cli {

namespace {

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::BudgetExceeded:
      return kExitBudget;
    case Errc::NoValidCandidate:
    case Errc::Zeta1Zero:
    case Errc::ZeroDenominator:
    case Errc::NotAPermutation:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

// Options shared by the commands that take one family instance.
struct InstanceArgs {
  std::string family;
  unsigned k = 0;
  unsigned m = 0;
  std::string modulus;
  bool force_params = false;
  CLI::Option* k_opt = nullptr;
  CLI::Option* m_opt = nullptr;

  void attach(CLI::App* app, bool allow_force) {
    app->add_option("--family", family, "F1..F6")->required();
    k_opt = app->add_option("--k", k, "parameter k");
    m_opt = app->add_option("--m", m, "parameter m (F6 only)");
    app->add_option("--modulus", modulus, "irreducible modulus in hex; X^n bit optional");
    if (allow_force) {
      app->add_flag("--force-params", force_params, "skip hypothesis checks; result is data only");
    }
  }

  FamilyInstance build() const {
    const FamilyId id = parse_family(family);
    if (!k_opt->count()) throw Error(Errc::InvalidArgument, "--k is required");
    if (id == FamilyId::F6 && !m_opt->count()) throw Error(Errc::InvalidArgument, "--m is required for F6");
    if (id != FamilyId::F6 && m_opt->count()) throw Error(Errc::InvalidArgument, "--m applies only to F6");
    const FamilyParams params{k, m};
    FieldPtr field;
    if (!modulus.empty()) {
      if (k == 0 || (id == FamilyId::F6 && m == 0)) {
        throw Error(Errc::ConditionViolated, "parameters must be positive");
      }
      const unsigned n = family_degree(id, params);
      if (n < gf2poly::kMinDegree || n > gf2poly::kMaxDegree) {
        throw Error(Errc::UnsupportedDegree, "degree " + std::to_string(n) + " is outside [2, 32]");
      }
      field = FieldSpec::make(n, normalize_modulus(n, parse_hex(modulus)));
    }
    return force_params ? instantiate_unchecked(id, params, field) : instantiate(id, params, field);
  }
};

Bits parse_element(const std::string& text, const FieldSpec& field) {
  const std::uint64_t v = parse_hex(text);
  if (!field.contains(v)) {
    throw Error(Errc::InvalidArgument, text + " is not an element of GF(2^" +
                                           std::to_string(field.degree()) + ")");
  }
  return static_cast<Bits>(v);
}

std::string optional_m(const FamilyId id, const FamilyParams& p) {
  return id == FamilyId::F6 ? std::to_string(p.m) : "-";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation trinomials over GF(2^n): verify, invert, search", "trinom"};
  app.require_subcommand(1);

  // verify
  InstanceArgs verify_args;
  unsigned verify_threads = 0;
  bool verify_force = false;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "exhaustively check that a family instance permutes the field");
  verify_args.attach(verify, true);
  verify->add_option("--threads", verify_threads, "worker threads (0: all cores)");
  verify->add_flag("--force", verify_force, "lift the n <= 28 budget");
  verify->add_flag("--json", verify_json, "JSON output (the only format)");

  // invert
  InstanceArgs invert_args;
  std::string invert_a;
  bool invert_trace = false, invert_json = false;
  auto* invert_cmd = app.add_subcommand("invert", "compute the preimage of a field element");
  invert_args.attach(invert_cmd, false);
  invert_cmd->add_option("--a", invert_a, "target value in hex")->required();
  invert_cmd->add_flag("--trace", invert_trace, "print the intermediate quantities");
  invert_cmd->add_flag("--json", invert_json, "print {x, trace} as JSON");

  // search
  SearchOptions search_opts;
  std::string search_out;
  auto* search_cmd = app.add_subcommand("search", "enumerate trinomials x^e1 + x^e2 + x^e3 over GF(2^n)");
  search_cmd->add_option("--n", search_opts.n, "field degree")->required();
  search_cmd->add_option("--samples", search_opts.samples, "quick-reject sample count");
  search_cmd->add_option("--seed", search_opts.seed, "quick-reject seed");
  search_cmd->add_option("--threads", search_opts.threads, "worker threads (0: all cores)");
  search_cmd->add_option("--out", search_out, "CSV path (default: stdout)");
  search_cmd->add_flag("--force", search_opts.force, "lift the n <= 14 budget");

  // gcd-suite
  unsigned gcd_n_max = 32;
  bool gcd_json = false;
  auto* gcd_cmd = app.add_subcommand("gcd-suite", "evaluate the gcd identities behind each family");
  gcd_cmd->add_option("--n-max", gcd_n_max, "largest field degree (<= 64)");
  gcd_cmd->add_flag("--json", gcd_json, "JSON output");

  // families
  unsigned families_n_max = 0;
  bool families_json = false;
  auto* families_cmd = app.add_subcommand("families", "list the families and their hypotheses");
  families_cmd->add_option("--n-max", families_n_max, "also list valid parameters up to this degree");
  families_cmd->add_flag("--json", families_json, "JSON output");

  // bench
  InstanceArgs bench_args;
  unsigned bench_reps = 3, bench_threads = 0;
  auto* bench_cmd = app.add_subcommand("bench", "time verification and inversion");
  bench_args.attach(bench_cmd, false);
  bench_cmd->add_option("--reps", bench_reps, "repetitions; the minimum is reported");
  bench_cmd->add_option("--threads", bench_threads, "worker threads for verification");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*verify) {
      const auto inst = verify_args.build();
      const auto report = check(inst, inst.field(),
                                {.threads = verify_threads, .override_budget = verify_force});
      Json j;
      j["instance"] = to_json(inst);
      j["report"] = to_json(report);
      out << j.dump() << "\n";
      if (inst.forced()) return kExitOk;
      return report.is_permutation ? kExitOk : kExitNotPermutation;
    }

    if (*invert_cmd) {
      const auto inst = invert_args.build();
      const auto r = invert(inst, parse_element(invert_a, inst.field()));
      if (invert_json) {
        Json j;
        j["x"] = to_hex(r.x);
        if (invert_trace) j["trace"] = to_json(r.trace);
        out << j.dump() << "\n";
      } else {
        out << to_hex(r.x) << "\n";
        if (invert_trace) out << to_json(r.trace).dump() << "\n";
      }
      return kExitOk;
    }

    if (*search_cmd) {
      const auto records = search(search_opts);
      if (search_out.empty()) {
        write_csv(search_opts, records, out);
      } else {
        std::ofstream file(search_out, std::ios::binary);
        if (!file) throw Error(Errc::InvalidArgument, "cannot open " + search_out);
        write_csv(search_opts, records, file);
      }
      return kExitOk;
    }

    if (*gcd_cmd) {
      if (gcd_n_max > 64) throw Error(Errc::InvalidArgument, "--n-max must be <= 64");
      bool all = true;
      Json rows = Json::array();
      if (!gcd_json) out << "family\tk\tm\tn\tidentity\tholds\n";
      for (FamilyId id : kAllFamilies) {
        for (const auto& e : enumerate_params(id, gcd_n_max)) {
          for (const auto& row : check_gcd_identities(id, e.params)) {
            all = all && row.holds;
            if (gcd_json) {
              Json r;
              r["family"] = std::string(to_string(id));
              r["k"] = e.params.k;
              r["m"] = id == FamilyId::F6 ? Json(e.params.m) : Json(nullptr);
              r["n"] = e.n;
              r["identity"] = row.name;
              r["holds"] = row.holds;
              rows.push_back(std::move(r));
            } else {
              out << to_string(id) << '\t' << e.params.k << '\t' << optional_m(id, e.params) << '\t'
                  << e.n << '\t' << row.name << '\t' << (row.holds ? "true" : "false") << "\n";
            }
          }
        }
      }
      if (gcd_json) out << rows.dump() << "\n";
      return all ? kExitOk : kExitNotPermutation;
    }

    if (*families_cmd) {
      Json list = Json::array();
      for (FamilyId id : kAllFamilies) {
        Json params = Json::array();
        if (families_n_max) {
          for (const auto& e : enumerate_params(id, families_n_max)) {
            Json p;
            p["n"] = e.n;
            p["k"] = e.params.k;
            if (id == FamilyId::F6) p["m"] = e.params.m;
            params.push_back(std::move(p));
          }
        }
        if (families_json) {
          Json f;
          f["id"] = std::string(to_string(id));
          f["formula"] = std::string(formula(id));
          f["hypotheses"] = std::string(hypotheses(id));
          if (families_n_max) f["params"] = std::move(params);
          list.push_back(std::move(f));
        } else {
          out << to_string(id) << "  " << formula(id) << "  [" << hypotheses(id) << "]\n";
          for (const auto& p : params) {
            out << "    n=" << p["n"].get<unsigned>() << " k=" << p["k"].get<unsigned>();
            if (p.contains("m")) out << " m=" << p["m"].get<unsigned>();
            out << "\n";
          }
        }
      }
      if (families_json) out << list.dump() << "\n";
      return kExitOk;
    }

    if (*bench_cmd) {
      if (bench_reps == 0) throw Error(Errc::InvalidArgument, "--reps must be positive");
      const auto inst = bench_args.build();
      using Clock = std::chrono::steady_clock;
      auto ns = [](Clock::duration d) {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(d).count();
      };
      std::int64_t verify_ns = std::numeric_limits<std::int64_t>::max();
      double invert_ns = std::numeric_limits<double>::max();
      const std::uint64_t count = std::uint64_t{1} << std::min(inst.degree(), 16u);
      volatile Bits sink = 0;
      for (unsigned rep = 0; rep < bench_reps; ++rep) {
        auto t0 = Clock::now();
        const auto report = check(inst, inst.field(), {.threads = bench_threads, .cycle_type = false});
        verify_ns = std::min(verify_ns, ns(Clock::now() - t0));
        sink = sink ^ report.is_permutation;
        t0 = Clock::now();
        for (std::uint64_t a = 0; a < count; ++a) sink = sink ^ invert(inst, static_cast<Bits>(a)).x;
        invert_ns = std::min(invert_ns, static_cast<double>(ns(Clock::now() - t0)) / count);
      }
      Json j;
      j["verify_ns"] = verify_ns;
      j["invert_ns_per_op"] = invert_ns;
      out << j.dump() << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace trinom::cli
