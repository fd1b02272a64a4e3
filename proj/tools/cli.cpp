#include "cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "verlinde/dimensions.hpp"
#include "verlinde/errors.hpp"
#include "verlinde/json_io.hpp"
#include "verlinde/partitions.hpp"
#include "verlinde/shorthand.hpp"
#include "verlinde/suites.hpp"

namespace verlinde::cli {

namespace {

struct Flags {
  std::optional<int> p;
  std::vector<std::string> objects;
  std::vector<std::string> jordans;
  std::optional<std::string> module;
  std::optional<unsigned> n;
  std::optional<unsigned> j;
  std::size_t cap = 0;
  std::uint64_t seed = 1;
  unsigned precision = 128;
  std::string format = "json";
  std::optional<std::uint64_t> instances;
  std::optional<std::string> partition;
  std::optional<int> residue;
  std::optional<int> k;
  std::optional<std::uint64_t> a;
  std::optional<std::string> series;
  std::optional<std::string> d1;
  std::optional<std::string> d2;
  std::string rule = "minus-plus";
  std::vector<std::string> positionals;
};

struct Result {
  Json json;
  std::string table;
  int exit_code = kExitOk;
};

Result both(Json j, std::string table) { return {std::move(j), std::move(table)}; }
Result plain(Json j) {
  std::string t = j.is_string() ? j.get<std::string>() : j.dump();
  return {std::move(j), std::move(t)};
}

int need_p(const Flags& f) {
  if (!f.p) throw InvalidArgument("--p is required");
  require_small_prime(*f.p);
  return *f.p;
}

unsigned need_n(const Flags& f) {
  if (!f.n) throw InvalidArgument("--n is required");
  return *f.n;
}

VerObject one_object(const Flags& f) {
  if (f.objects.size() != 1) throw InvalidArgument("exactly one --object is required");
  return parse_ver_object(need_p(f), f.objects.front());
}

std::vector<VerObject> all_objects(const Flags& f, std::size_t min_count) {
  if (f.objects.size() < min_count) throw InvalidArgument("at least " + std::to_string(min_count) + " --object values are required");
  std::vector<VerObject> out;
  for (const auto& s : f.objects) out.push_back(parse_ver_object(need_p(f), s));
  return out;
}

// A concrete module from --module (JSON) or --jordan (standard realization).
CyclicRep one_module(const Flags& f) {
  if (f.module && !f.jordans.empty()) throw InvalidArgument("give either --module or --jordan, not both");
  if (f.module) {
    CyclicRep v = cyclic_rep_from_json(parse_json_text(*f.module));
    if (f.p && *f.p != v.p()) throw InvalidArgument("--p disagrees with the module");
    return v;
  }
  if (f.jordans.size() != 1) throw InvalidArgument("exactly one --jordan (or --module) is required");
  return CyclicRep::from_jordan_type(parse_jordan_type(need_p(f), f.jordans.front()));
}

CycNum cycnum_arg(int p, const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    CycNum x = cycnum_from_json(parse_json_text(text));
    if (x.p() != p) throw InvalidArgument("value is over a different p");
    return x;
  }
  return parse_cycnum(p, text);
}

Partition need_partition(const Flags& f) {
  if (!f.partition) throw InvalidArgument("--partition is required");
  return parse_partition(*f.partition);
}

Json boxes_json(const std::vector<BoxPos>& boxes) {
  Json out = Json::array();
  for (const auto& b : boxes) out.push_back(to_json(b));
  return out;
}

std::string boxes_table(const std::vector<BoxPos>& boxes) {
  std::ostringstream s;
  for (const auto& b : boxes) s << "(" << b.row << "," << b.col << ") residue " << b.residue << "\n";
  std::string t = s.str();
  if (!t.empty()) t.pop_back();
  return t;
}

std::string reports_table(const std::vector<SuiteReport>& reports) {
  std::ostringstream s;
  for (const auto& r : reports) {
    for (const auto& prop : r.properties) {
      s << (prop.failure_count == 0 ? "PASS " : "FAIL ") << r.suite << ": " << prop.property << " (" << prop.instances
        << " instances, " << prop.failure_count << " failures)\n";
      for (const auto& msg : prop.failures) s << "    " << msg << "\n";
    }
  }
  std::string t = s.str();
  if (!t.empty()) t.pop_back();
  return t;
}

Result cmd_partition(const Flags& f) {
  if (f.positionals.empty()) throw InvalidArgument("partition needs a subcommand");
  const std::string& sub = f.positionals.front();
  if (sub == "rho") {
    if (!f.k) throw InvalidArgument("--k is required");
    const Partition r = rho(need_p(f), *f.k);
    return both(to_json(r), r.to_string());
  }
  if (sub == "sasha") return plain(Json(sasha_bound(need_p(f), need_n(f))));
  if (sub == "ell") {
    if (!f.a) throw InvalidArgument("--a is required");
    return plain(Json(ell_p(need_p(f), *f.a)));
  }
  if (sub == "list") {
    const auto all = partitions_of(static_cast<int>(need_n(f)));
    std::string t;
    for (const auto& l : all) t += (t.empty() ? "" : "\n") + l.to_string();
    return both(to_json(all), t);
  }
  const Partition lambda = need_partition(f);
  const int p = need_p(f);
  if (sub == "regular") return plain(Json(is_p_regular(lambda, p)));
  if (sub == "core") {
    const Partition c = p_core(lambda, p);
    return both(to_json(c), c.to_string());
  }
  if (sub == "addable") {
    const auto b = addable_boxes(lambda, p);
    return both(boxes_json(b), boxes_table(b));
  }
  if (sub == "removable") {
    const auto b = removable_boxes(lambda, p);
    return both(boxes_json(b), boxes_table(b));
  }
  if (sub == "conormal") {
    if (!f.residue) throw InvalidArgument("--residue is required");
    SignatureRule rule;
    if (f.rule == "minus-plus") {
      rule = SignatureRule::CancelMinusPlus;
    } else if (f.rule == "plus-minus") {
      rule = SignatureRule::CancelPlusMinus;
    } else {
      throw InvalidArgument("--rule must be minus-plus or plus-minus");
    }
    const auto b = conormal_boxes(lambda, p, *f.residue, rule);
    return both(boxes_json(b), boxes_table(b));
  }
  if (sub == "greedy") {
    const auto chain = greedy_to_rho(lambda, p);
    std::string t;
    for (const auto& l : chain) t += (t.empty() ? "" : "\n") + l.to_string();
    return both(to_json(chain), t);
  }
  if (sub == "envelope") {
    const Partition mu = james_envelope(lambda, p);
    return both(to_json(mu), mu.to_string());
  }
  if (sub == "james") return plain(Json(james_condition(lambda, p)));
  throw InvalidArgument("unknown partition subcommand \"" + sub + "\"");
}

Result cmd_verify(const Flags& f) {
  if (f.positionals.size() != 1) throw InvalidArgument("verify needs exactly one suite name (or all)");
  SuiteOptions options;
  options.seed = f.seed;
  options.p = f.p;
  options.instances = f.instances;
  options.cap = f.cap;
  std::vector<std::string> names;
  const bool all = f.positionals.front() == "all";
  if (all) {
    names = suite_names();
  } else {
    names.push_back(f.positionals.front());
  }
  std::vector<SuiteReport> reports;
  for (const auto& name : names) reports.push_back(run_suite(name, options));
  bool passed = true;
  Json j = Json::array();
  for (const auto& r : reports) {
    passed = passed && r.passed();
    j.push_back(to_json(r));
  }
  Result res = both(all ? j : j.front(), reports_table(reports));
  res.exit_code = passed ? kExitOk : kExitFailures;
  return res;
}

using Handler = std::function<Result(const Flags&)>;

const std::map<std::string, Handler>& commands() {
  static const std::map<std::string, Handler> table{
      {"fuse",
       [](const Flags& f) {
         auto xs = all_objects(f, 1);
         VerObject r = xs.front();
         for (std::size_t i = 1; i < xs.size(); ++i) r = fuse(r, xs[i]);
         return both(to_json(r), r.to_string());
       }},
      {"fpdim", [](const Flags& f) { return plain(Json(fpdim(one_object(f)).to_string())); }},
      {"dim-mod-p", [](const Flags& f) { return plain(Json(cat_dim_mod_p(one_object(f)))); }},
      {"frobenius",
       [](const Flags& f) {
         const VerPair r = frobenius(one_object(f));
         std::ostringstream s;
         for (int i = 1; i < r.p(); ++i)
           for (int j = 1; j < r.p(); ++j)
             if (r(i, j) != 0) s << (s.tellp() > 0 ? " + " : "") << (r(i, j) == 1 ? "" : std::to_string(r(i, j)) + "*") << "L" << i << "[x]L" << j;
         return both(to_json(r), s.tellp() > 0 ? s.str() : "0");
       }},
      {"frobenius-en",
       [](const Flags& f) {
         const EnhancedObject e = frobenius_enhanced(one_object(f));
         std::ostringstream s;
         for (const auto& [key, m] : e.terms()) {
           const auto& [i, j, a] = key;
           s << (s.tellp() > 0 ? " + " : "") << (m == 1 ? "" : std::to_string(m) + "*") << "L" << i << "[x](L" << j << ", chi^" << a << ")";
         }
         return both(to_json(e), s.tellp() > 0 ? s.str() : "0");
       }},
      {"frobenius-type", [](const Flags& f) { return plain(Json(to_string(frobenius_type(one_object(f))))); }},
      {"mckay",
       [](const Flags& f) {
         const McKayGraph g = mckay_graph(one_object(f));
         std::ostringstream s;
         for (const auto& e : g.edges) s << "L" << e.from << " -> L" << e.to << " (" << e.weight << ")\n";
         std::string t = s.str();
         if (!t.empty()) t.pop_back();
         return both(to_json(g), t);
       }},
      {"tensor",
       [](const Flags& f) {
         if (f.jordans.size() != 2) throw InvalidArgument("tensor needs two --jordan values");
         const int p = need_p(f);
         const JordanType t = jordan_type_of(tensor(CyclicRep::from_jordan_type(parse_jordan_type(p, f.jordans[0])),
                                                    CyclicRep::from_jordan_type(parse_jordan_type(p, f.jordans[1])), f.cap));
         return both(to_json(t), t.to_string());
       }},
      {"jordan",
       [](const Flags& f) {
         if (f.module) {
           const JordanType t = jordan_type_of(one_module(f));
           return both(to_json(t), t.to_string());
         }
         const CyclicRep v = one_module(f);
         return both(to_json(v), to_json(v).dump());
       }},
      {"ssimp",
       [](const Flags& f) {
         const VerObject x = semisimplify(one_module(f));
         return both(to_json(x), x.to_string());
       }},
      {"alt-power",
       [](const Flags& f) {
         if (!f.objects.empty()) {
           const VerObject x = alt_power_ver(one_object(f), need_n(f), f.cap);
           return both(to_json(x), x.to_string());
         }
         const JordanType t = jordan_type_of(skew_image(one_module(f), need_n(f), f.cap));
         return both(to_json(t), t.to_string());
       }},
      {"fr-plus",
       [](const Flags& f) {
         if (!f.j) throw InvalidArgument("--j is required");
         const JordanType t = jordan_type_of(fr_plus(one_module(f), *f.j, f.cap));
         return both(to_json(t), t.to_string());
       }},
      {"delta", [](const Flags& f) { return plain(Json(delta(jordan_type_of(one_module(f))).to_string())); }},
      {"delta-n", [](const Flags& f) { return plain(Json(delta_n(one_module(f), need_n(f), f.cap))); }},
      {"ad",
       [](const Flags& f) {
         const auto a = f.objects.empty() ? ad_rep(one_module(f), f.cap) : ad(one_object(f), f.cap);
         return a ? plain(Json(*a)) : both(Json(nullptr), "undefined (zero object)");
       }},
      {"gd",
       [](const Flags& f) {
         const VerObject x = one_object(f);
         const CycNum g = gd(x);
         const RealInterval iv = numeric_eval(g, f.precision);
         Json j{{"fpdim", g.to_string()}, {"lower", iv.lower_double()}, {"upper", iv.upper_double()}};
         std::ostringstream s;
         s.precision(17);
         s << g.to_string() << " ~ " << iv.midpoint_double();
         if (f.n) {
           j["empirical"] = gd_empirical(x, *f.n);
           s << "\nlength(X^n)^(1/n), n = 1.." << *f.n << ":";
           for (double v : gd_empirical(x, *f.n)) s << " " << v;
         }
         return both(j, s.str());
       }},
      {"sd-at-least", [](const Flags& f) { return plain(Json(sd_at_least(one_module(f), need_n(f), f.cap))); }},
      {"padic",
       [](const Flags& f) {
         PadicDim d{};
         if (f.series) {
           std::vector<long long> s;
           std::stringstream in(*f.series);
           for (std::string tok; std::getline(in, tok, ',');) {
             try {
               s.push_back(std::stoll(tok));
             } catch (const std::exception&) {
               throw InvalidArgument("--series must be comma-separated integers");
             }
           }
           d = padic_dimension(need_p(f), s);
         } else {
           d = padic_dimension_of(one_object(f), f.cap);
         }
         std::string t = d.value.get_str() + " (digits";
         for (int v : d.digits) t += " " + std::to_string(v);
         return both(to_json(d), t + ")");
       }},
      {"recover-content",
       [](const Flags& f) {
         const int p = need_p(f);
         if (!f.d1 || !f.d2) throw InvalidArgument("--d1 and --d2 are required");
         const JordanContent c = recover_jordan_content(p, cycnum_arg(p, *f.d1), cycnum_arg(p, *f.d2));
         JordanType t(p);
         for (int k = 1; k < p; ++k) t[k] = c.m[static_cast<std::size_t>(k - 1)];
         return both(to_json(c), t.to_string());
       }},
      {"partition", cmd_partition},
      {"verify", cmd_verify},
  };
  return table;
}

std::string usage() {
  std::string s = "usage: verlinde-lab <command> [flags]\ncommands:";
  for (const auto& [name, h] : commands()) s += " " + name;
  s += "\nsuites: all";
  for (const auto& n : suite_names()) s += " " + n;
  return s + "\nrun verlinde-lab <command> --help for flags";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << usage() << "\n";
    return kExitUnknownCommand;
  }
  const std::string& name = args.front();
  if (name == "help" || name == "--help" || name == "-h") {
    out << usage() << "\n";
    return kExitOk;
  }
  const auto it = commands().find(name);
  if (it == commands().end()) {
    err << "unknown command \"" << name << "\"\n" << usage() << "\n";
    return kExitUnknownCommand;
  }

  Flags f;
  f.cap = default_cap();
  CLI::App app("verlinde-lab " + name);
  app.add_option("--p", f.p, "prime");
  app.add_option("--object", f.objects, "object of Ver_p: shorthand \"L2+2*L3\" or JSON (repeatable)");
  app.add_option("--jordan", f.jordans, "Jordan type: shorthand \"J2+J5\" or JSON (repeatable)");
  app.add_option("--module", f.module, "C_p-module as JSON {\"p\", \"nilpotent\"}");
  app.add_option("--n", f.n, "degree / count");
  app.add_option("--j", f.j, "Frobenius twist exponent");
  app.add_option("--cap", f.cap, "dimension cap for brute-force constructions");
  app.add_option("--seed", f.seed, "seed for randomized suites");
  app.add_option("--precision", f.precision, "bits for numeric enclosures")->check(CLI::Range(32u, 100000u));
  app.add_option("--format", f.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--instances", f.instances, "random instances per suite");
  app.add_option("--partition", f.partition, "partition \"3,2,1\"");
  app.add_option("--residue", f.residue, "residue for conormal boxes");
  app.add_option("--rule", f.rule, "signature rule: minus-plus or plus-minus");
  app.add_option("--k", f.k, "rho index");
  app.add_option("--a", f.a, "argument of ell_p");
  app.add_option("--series", f.series, "power series coefficients \"1,2,1\"");
  app.add_option("--d1", f.d1, "delta(V)");
  app.add_option("--d2", f.d2, "sum m_k [k]_{q^2}");
  app.add_option("args", f.positionals, "subcommand or suite");

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    const Result r = it->second(f);
    if (f.format == "table") {
      out << r.table << "\n";
    } else {
      out << r.json.dump() << "\n";
    }
    return r.exit_code;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const NotDivisible& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InconsistentInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailures;
  }
}

}  // namespace verlinde::cli
