#include "nlnum/cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlnum/analysis.hpp"
#include "nlnum/inequalities.hpp"
#include "nlnum/newell_littlewood.hpp"
#include "nlnum/partition.hpp"
#include "nlnum/polytope.hpp"
#include "nlnum/symfunc.hpp"
#include "nlnum/tableau.hpp"

namespace nlnum {

namespace {

using nlohmann::json;

json to_json(const Partition& p) { return json(p.parts()); }

template <class Tag>
json terms_to_json(const Expansion<Tag>& e) {
  json arr = json::array();
  for (const auto& [p, c] : e.terms())
    arr.push_back(json{{"coeff", c}, {"partition", p.parts()}});
  return arr;
}

// Human form of an expansion: coefficient-1 terms render bare, e.g.
// [1,1] + 2[2,1] - [3].
template <class Tag>
std::string terms_to_text(const Expansion<Tag>& e) {
  if (e.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : e.terms()) {
    Int mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag;
    os << p.to_bracket();
  }
  return os.str();
}

json scan_to_json(const ScanReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  json cx = json::array();
  for (const auto& c : r.counterexamples) {
    json inputs = json::array();
    for (const auto& p : c.inputs) inputs.push_back(p.parts());
    cx.push_back(json{{"detail", c.detail}, {"inputs", inputs}});
  }
  return json{{"scan", r.scan_name},
              {"parameters", params},
              {"checked", r.checked_count},
              {"counterexamples", cx}};
}

void print_scan(const ScanReport& r, bool as_json, std::ostream& out) {
  if (as_json) {
    out << scan_to_json(r).dump() << '\n';
    return;
  }
  out << "scan: " << r.scan_name << '\n';
  for (const auto& [k, v] : r.parameters) out << k << ": " << v << '\n';
  out << "checked: " << r.checked_count << '\n';
  out << "counterexamples: " << r.counterexamples.size() << '\n';
  for (const auto& c : r.counterexamples) {
    out << " ";
    for (const auto& p : c.inputs) out << ' ' << p.to_bracket();
    out << ": " << c.detail << '\n';
  }
}

constexpr const char* kUnset = "\x01unset";

struct PartitionFlag {
  std::string text;
  std::string flag;
  Partition value;

  [[nodiscard]] bool provided() const { return text != kUnset; }

  bool parse(std::ostream& err) {
    try {
      value = Partition::parse(text);
      return true;
    } catch (const std::exception& e) {
      err << "flag " << flag << ": " << e.what() << '\n';
      return false;
    }
  }
};

std::string matrix_text(const std::vector<std::vector<Int>>& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) os << ',';
      os << m[i][j];
    }
  }
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Newell-Littlewood number toolkit"};
  app.name("nl");
  app.fallthrough();  // global flags are accepted after the subcommand too
  app.require_subcommand(1);
  bool as_json = false;
  int threads = 1;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--threads", threads, "worker threads for scans")
      ->check(CLI::PositiveNumber);

  PartitionFlag mu{kUnset, "-m"}, nu{kUnset, "-n"}, lam{kUnset, "-l"};
  auto add_partition_option = [&](CLI::App* cmd, PartitionFlag& f,
                                  const char* flags, const char* desc,
                                  bool required = true) {
    auto* opt = cmd->add_option(flags, f.text, desc);
    if (required) opt->required();
  };

  // Every subcommand stores its action here; parsing happens first, the
  // selected action runs once, and its return value is the exit status.
  std::function<int()> action;

  auto* compute = app.add_subcommand("compute", "Newell-Littlewood number N(mu,nu,lam)");
  add_partition_option(compute, mu, "-m,--mu", "partition mu");
  add_partition_option(compute, nu, "-n,--nu", "partition nu");
  add_partition_option(compute, lam, "-l,--lambda", "partition lambda");
  compute->callback([&]() {
    action = [&]() {
      Int v = nl_number(mu.value, nu.value, lam.value);
      if (as_json)
        out << json{{"mu", to_json(mu.value)},
                    {"nu", to_json(nu.value)},
                    {"lambda", to_json(lam.value)},
                    {"value", v}}
                   .dump()
            << '\n';
      else
        out << v << '\n';
      return 0;
    };
  });

  std::string via = "formula";
  auto* product = app.add_subcommand("product", "expansion of s[mu]*s[nu]");
  add_partition_option(product, mu, "-m,--mu", "partition mu");
  add_partition_option(product, nu, "-n,--nu", "partition nu");
  product->add_option("--via", via, "computation path: formula or schur")
      ->check(CLI::IsMember({"formula", "schur"}));
  product->callback([&]() {
    action = [&]() {
      KTExpansion e = via == "schur" ? kt_product_via_schur(mu.value, nu.value)
                                     : nl_product(mu.value, nu.value);
      out << (as_json ? terms_to_json(e).dump() : terms_to_text(e)) << '\n';
      return 0;
    };
  });

  auto* profile = app.add_subcommand("profile", "size-graded coefficient sums of s[mu]*s[nu]");
  add_partition_option(profile, mu, "-m,--mu", "partition mu");
  add_partition_option(profile, nu, "-n,--nu", "partition nu");
  profile->callback([&]() {
    action = [&]() {
      HProfile h = h_profile(mu.value, nu.value);
      if (as_json) {
        out << json{{"mu", to_json(mu.value)},
                    {"nu", to_json(nu.value)},
                    {"values", h.values}}
                   .dump()
            << '\n';
      } else {
        for (std::size_t i = 0; i < h.values.size(); ++i)
          out << (i ? "," : "") << h.values[i];
        out << '\n';
      }
      return 0;
    };
  });

  auto* lrcoef = app.add_subcommand("lrcoef", "Littlewood-Richardson coefficient c_{mu,nu}^lambda");
  add_partition_option(lrcoef, mu, "-m,--mu", "partition mu");
  add_partition_option(lrcoef, nu, "-n,--nu", "partition nu");
  add_partition_option(lrcoef, lam, "-l,--lambda", "partition lambda");
  lrcoef->callback([&]() {
    action = [&]() {
      Int v = lr_coefficient(mu.value, nu.value, lam.value);
      if (as_json)
        out << json{{"value", v}}.dump() << '\n';
      else
        out << v << '\n';
      return 0;
    };
  });

  auto* ktexpand = app.add_subcommand("ktexpand", "Schur expansion of s[lambda]");
  add_partition_option(ktexpand, lam, "-l,--lambda", "partition lambda");
  ktexpand->callback([&]() {
    action = [&]() {
      SchurExpansion e = kt_to_schur(lam.value);
      out << (as_json ? terms_to_json(e).dump() : terms_to_text(e)) << '\n';
      return 0;
    };
  });

  std::size_t dim = 0;
  Int dilate_k = 1;
  bool list_points = false, dump_constraints = false;
  auto* polytope = app.add_subcommand("polytope", "lattice points of the Newell-Littlewood polytope");
  add_partition_option(polytope, mu, "-m,--mu", "partition mu");
  add_partition_option(polytope, nu, "-n,--nu", "partition nu");
  add_partition_option(polytope, lam, "-l,--lambda", "partition lambda");
  polytope->add_option("--dim", dim, "index range n (default: max partition length)");
  polytope->add_option("--dilate", dilate_k, "count the k-fold dilation")
      ->check(CLI::PositiveNumber);
  polytope->add_flag("--list", list_points, "print the lattice points");
  polytope->add_flag("--constraints", dump_constraints, "dump the constraint system");
  polytope->callback([&]() {
    action = [&]() {
      std::size_t n = dim;
      if (n == 0)
        n = std::max({mu.value.length(), nu.value.length(), lam.value.length(),
                      std::size_t{1}});
      NLPolytope p = NLPolytope::build(mu.value, nu.value, lam.value, n);
      if (dilate_k > 1) p = p.dilate(dilate_k);
      if (dump_constraints) {
        out << p.constraint_text();
        return 0;
      }
      if (list_points) {
        auto points = enumerate_lattice_points(p);
        if (as_json) {
          json arr = json::array();
          for (const auto& pt : points)
            arr.push_back(json{{"alpha", pt.alpha}, {"beta", pt.beta}, {"gamma", pt.gamma}});
          out << arr.dump() << '\n';
        } else {
          for (const auto& pt : points)
            out << "a:" << matrix_text(pt.alpha) << " b:" << matrix_text(pt.beta)
                << " c:" << matrix_text(pt.gamma) << '\n';
        }
        return 0;
      }
      Int v = count_lattice_points(p);
      if (as_json)
        out << json{{"count", v}}.dump() << '\n';
      else
        out << v << '\n';
      return 0;
    };
  });

  int horn_dim = 0;
  bool horn_list = false;
  auto* horn = app.add_subcommand("horn", "Horn inequality triples at level n");
  horn->add_option("--dim", horn_dim, "index range n")->required()->check(CLI::PositiveNumber);
  horn->add_flag("--list", horn_list, "print each triple");
  horn->callback([&]() {
    action = [&]() {
      const auto& triples = horn_triples(horn_dim);
      if (as_json) {
        json arr = json::array();
        for (const auto& t : triples)
          arr.push_back(json{{"d", t.d}, {"I", t.I}, {"J", t.J}, {"K", t.K}});
        out << arr.dump() << '\n';
      } else if (horn_list) {
        for (const auto& t : triples) {
          auto render = [&](const char* name, const std::vector<int>& s) {
            std::ostringstream os;
            for (std::size_t i = 0; i < s.size(); ++i)
              os << (i ? " + " : "") << name << '[' << s[i] << ']';
            return os.str();
          };
          out << "d=" << t.d << ": " << render("lam", t.K)
              << " <= " << render("mu", t.I) << " + " << render("nu", t.J) << '\n';
        }
      } else {
        out << triples.size() << '\n';
      }
      return 0;
    };
  });

  bool extended = false;
  int ineq_dim = 0;
  auto* check = app.add_subcommand("check-ineq", "Horn (and extended Weyl) inequality check");
  add_partition_option(check, mu, "-m,--mu", "partition mu");
  add_partition_option(check, nu, "-n,--nu", "partition nu");
  add_partition_option(check, lam, "-l,--lambda", "partition lambda");
  check->add_flag("--extended", extended, "also check the extended Weyl inequalities");
  check->add_option("--dim", ineq_dim, "index range n (default: max partition length + 1)");
  check->callback([&]() {
    action = [&]() {
      int n = ineq_dim;
      if (n == 0)
        n = static_cast<int>(std::max({mu.value.length(), nu.value.length(),
                                       lam.value.length(), std::size_t{1}})) +
            1;
      auto violation = first_horn_violation(mu.value, nu.value, lam.value, n);
      if (!violation && extended)
        violation = first_extended_weyl_violation(mu.value, nu.value, lam.value, n);
      if (violation) {
        err << *violation << '\n';
        if (as_json) out << json{{"holds", false}}.dump() << '\n';
        else out << "violated" << '\n';
        return 1;
      }
      if (as_json) out << json{{"holds", true}}.dump() << '\n';
      else out << "holds" << '\n';
      return 0;
    };
  });

  auto* nl2 = app.add_subcommand("nl2", "NL_2 membership by the two-row inequality list");
  add_partition_option(nl2, mu, "-m,--mu", "partition mu");
  add_partition_option(nl2, nu, "-n,--nu", "partition nu");
  add_partition_option(nl2, lam, "-l,--lambda", "partition lambda");
  nl2->callback([&]() {
    action = [&]() {
      auto violation = first_nl2_violation(mu.value, nu.value, lam.value);
      if (violation) {
        err << *violation << '\n';
        if (as_json) out << json{{"member", false}}.dump() << '\n';
        else out << "non-member" << '\n';
        return 1;
      }
      if (as_json) out << json{{"member", true}}.dump() << '\n';
      else out << "member" << '\n';
      return 0;
    };
  });

  Int max_size = 0, max_k = 3;
  auto* scan = app.add_subcommand("scan", "batch verification sweeps");
  scan->require_subcommand(1);
  auto add_scan = [&](const char* name, const char* desc, Int default_size,
                      bool has_k, std::function<ScanReport()> runner) {
    auto* sub = scan->add_subcommand(name, desc);
    sub->add_option("--max-size", max_size, "partition size bound");
    if (has_k) sub->add_option("--max-k", max_k, "largest dilation factor");
    sub->callback([&, default_size, runner]() {
      action = [&, default_size, runner]() {
        if (max_size == 0) max_size = default_size;
        ScanReport r = runner();
        print_scan(r, as_json, out);
        return r.clean() ? 0 : 1;
      };
    });
  };
  add_scan("saturation", "saturation counterexample sweep", 6, true,
           [&]() { return check_saturation(max_size, max_k, threads); });
  add_scan("unimodality", "h-profile unimodality sweep", 7, false,
           [&]() { return check_unimodality(max_size, threads); });
  add_scan("mf", "multiplicity-freeness classification sweep", 5, false,
           [&]() { return check_multiplicity_free(max_size, threads); });
  add_scan("hahn", "N(lam,lam,lam) parity sweep", 8, false,
           [&]() { return check_hahn(max_size, threads); });

  Int fun_k = 1;
  auto* nlfun = app.add_subcommand("nlfun", "values N(k*mu,k*nu,k*lam) for k=1..K");
  add_partition_option(nlfun, mu, "-m,--mu", "partition mu");
  add_partition_option(nlfun, nu, "-n,--nu", "partition nu");
  add_partition_option(nlfun, lam, "-l,--lambda", "partition lambda");
  nlfun->add_option("-K,--max-k", fun_k, "number of samples")->required()->check(CLI::PositiveNumber);
  nlfun->callback([&]() {
    action = [&]() {
      NLFunctionSample s = nl_function(mu.value, nu.value, lam.value, fun_k);
      if (as_json) {
        out << json{{"values", s.values}}.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < s.values.size(); ++i)
          out << (i ? "," : "") << s.values[i];
        out << '\n';
      }
      return 0;
    };
  });

  Int rect_a = 0, rect_b = 0;
  auto* kleber = app.add_subcommand("kleber", "rank of the s[lam]*s[lam^c] products in an a x b rectangle");
  kleber->add_option("-a", rect_a, "rectangle rows")->required()->check(CLI::PositiveNumber);
  kleber->add_option("-b", rect_b, "rectangle columns")->required()->check(CLI::PositiveNumber);
  kleber->callback([&]() {
    action = [&]() {
      auto [rank, pair_count] = kleber_rank(rect_a, rect_b);
      if (as_json)
        out << json{{"pairs", pair_count}, {"rank", rank}}.dump() << '\n';
      else
        out << "pairs: " << pair_count << "\nrank: " << rank << '\n';
      return 0;
    };
  });

  auto* witnesses = app.add_subcommand("witnesses", "witness triples for N(mu,nu,lam)");
  add_partition_option(witnesses, mu, "-m,--mu", "partition mu");
  add_partition_option(witnesses, nu, "-n,--nu", "partition nu");
  add_partition_option(witnesses, lam, "-l,--lambda", "partition lambda");
  witnesses->callback([&]() {
    action = [&]() {
      auto ws = nl_witnesses(mu.value, nu.value, lam.value);
      if (as_json) {
        json arr = json::array();
        for (const auto& w : ws)
          arr.push_back(json{{"alpha", to_json(w.alpha)},
                             {"beta", to_json(w.beta)},
                             {"gamma", to_json(w.gamma)},
                             {"multiplicity", w.multiplicity}});
        out << arr.dump() << '\n';
      } else {
        for (const auto& w : ws)
          out << "alpha=" << w.alpha.to_bracket() << " beta=" << w.beta.to_bracket()
              << " gamma=" << w.gamma.to_bracket() << " mult=" << w.multiplicity
              << '\n';
      }
      return 0;
    };
  });

  auto* detect = app.add_subcommand("detect", "explicit mu with c_{mu,mu}^lambda > 0 for even |lambda|");
  add_partition_option(detect, lam, "-l,--lambda", "partition lambda");
  detect->callback([&]() {
    action = [&]() {
      if (lam.value.size() % 2 != 0) {
        err << "|lambda| is odd; no detection witness exists\n";
        return 1;
      }
      Partition w = detection_witness(lam.value);
      if (as_json)
        out << json{{"mu", to_json(w)}}.dump() << '\n';
      else
        out << w.to_bracket() << '\n';
      return 0;
    };
  });

  std::vector<std::string> cli_args(args.rbegin(), args.rend());
  try {
    app.parse(cli_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  // partition flags parse after CLI11 so errors can name the flag
  for (PartitionFlag* f : {&mu, &nu, &lam})
    if (f->provided() && !f->parse(err)) return 2;

  if (!action) {
    err << "no subcommand selected\n";
    return 2;
  }
  try {
    return action();
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 1;
  }
}

}  // namespace nlnum
