// ksl: exact invariants of torus knots, Dehn-surgery classification,
// L-space-knot staircases, and the shared-surgery pair family.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
#include <algorithm>
#include <cctype>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ksl/pairs.hpp"
#include "ksl/report.hpp"
#include "ksl/staircase.hpp"
#include "ksl/surgery.hpp"
#include "ksl/torus_knot.hpp"
#include "ksl/verify.hpp"

namespace {

using namespace ksl;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Int parse_int(const std::string& s, const char* what) {
  if (!is_integer_literal(s)) throw UsageError(std::string(what) + ": expected an integer, got '" + s + "'");
  return Int(s);
}

/// Knot descriptor grammar: T(a,b) with optional whitespace.
TorusKnot parse_knot(const std::string& raw) {
  const std::string s = strip_spaces(raw);
  if (s.size() < 6 || s[0] != 'T' || s[1] != '(' || s.back() != ')')
    throw UsageError("knot descriptor must look like T(a,b): '" + raw + "'");
  const std::string inner = s.substr(2, s.size() - 3);
  const auto comma = inner.find(',');
  if (comma == std::string::npos || inner.find(',', comma + 1) != std::string::npos)
    throw UsageError("knot descriptor must look like T(a,b): '" + raw + "'");
  const Int a = parse_int(inner.substr(0, comma), "knot parameter");
  const Int b = parse_int(inner.substr(comma + 1), "knot parameter");
  try {
    return TorusKnot(a, b);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + ": '" + raw + "'");
  }
}

/// Slope grammar: "p" or "p/q".
Slope parse_slope(const std::string& raw) {
  const std::string s = strip_spaces(raw);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Slope(parse_int(s, "slope"));
    return Slope(parse_int(s.substr(0, slash), "slope numerator"),
                 parse_int(s.substr(slash + 1), "slope denominator"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad slope '") + raw + "': " + e.what());
  }
}

/// One --n argument: a single integer or an inclusive range "2..8".
void parse_n_spec(const std::string& spec, std::set<Int>& out) {
  const auto dots = spec.find("..");
  if (dots == std::string::npos) {
    out.insert(parse_int(spec, "-n"));
    return;
  }
  const Int lo = parse_int(spec.substr(0, dots), "-n range start");
  const Int hi = parse_int(spec.substr(dots + 2), "-n range end");
  if (lo > hi) throw UsageError("empty range '" + spec + "'");
  if (hi - lo > 100000) throw UsageError("range '" + spec + "' is too wide");
  for (Int v = lo; v <= hi; ++v) out.insert(v);
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("format '" + format + "' is not supported by this command");
}

int cmd_invariants(const std::string& descriptor, const std::string& format) {
  require_format(format, {"text", "json"});
  const TorusKnot t = parse_knot(descriptor);
  const LaurentPoly alex = t.alexander();
  const Int dd = t.delta_dd_half();
  Int sig;
  try {
    sig = t.signature();
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  if (format == "json") {
    OrderedJson j;
    j["schema_version"] = Report::kSchemaVersion;
    j["knot"] = t.to_string();
    j["genus"] = t.genus().get_str();
    j["alexander"] = alex.to_string();
    j["ddHalf"] = dd.get_str();
    j["signature"] = sig.get_str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "knot       " << t.to_string() << (t.is_trivial() ? " (unknot)" : "") << "\n"
              << "genus      " << t.genus().get_str() << "\n"
              << "alexander  " << alex.to_string() << "\n"
              << "ddHalf     " << dd.get_str() << "\n"
              << "signature  " << sig.get_str() << "\n";
  }
  return 0;
}

OrderedJson classification_json(const SurgeryClass& c) {
  OrderedJson j;
  switch (c.kind) {
    case SurgeryKind::Lens:
      j["kind"] = "Lens";
      j["order"] = c.lens_order.get_str();
      if (c.lens)
        j["param"] = c.lens->param().get_str();
      else
        j["param"] = nullptr;
      break;
    case SurgeryKind::ConnectedSumOfLens:
      j["kind"] = "ConnectedSumOfLens";
      j["orders"] = {c.sum_order_a.get_str(), c.sum_order_b.get_str()};
      break;
    case SurgeryKind::SmallSeifert:
      j["kind"] = "SmallSeifert";
      break;
    case SurgeryKind::ZeroFilling:
      j["kind"] = "ZeroFilling";
      break;
  }
  return j;
}

int cmd_surgery(const std::string& descriptor, const std::string& slope_text,
                const std::string& format) {
  require_format(format, {"text", "json"});
  const TorusKnot t = parse_knot(descriptor);
  const Slope r = parse_slope(slope_text);
  if (t.is_trivial()) throw UsageError("surgery classification needs a nontrivial torus knot");
  if (r.p() == 0)
    throw UnsupportedSlope("slope 0 is a zero filling; no lens parameters are defined for it");
  const SurgeryClass c = classify_torus_surgery(t, r);
  if (format == "json") {
    OrderedJson j;
    j["schema_version"] = Report::kSchemaVersion;
    j["knot"] = t.to_string();
    j["slope"] = r.to_string();
    j["classification"] = classification_json(c);
    j["rendered"] = c.to_string();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << c.to_string() << "\n";
  }
  return 0;
}

int cmd_pairs(long k, const std::vector<std::string>& n_specs, const std::string& format) {
  require_format(format, {"text", "json", "csv"});
  if (k < 1) throw UsageError("-k must be at least 1");
  std::set<Int> ns;
  for (const auto& spec : n_specs) parse_n_spec(spec, ns);
  if (ns.empty()) throw UsageError("at least one -n value is required");

  const auto states = generate(k);
  const PairFamilyState& state = states[static_cast<std::size_t>(k + 1)];

  struct Row {
    PairInstance inst;
    bool verified;
    std::string failures;
  };
  std::vector<Row> rows;
  for (const Int& n : ns) {
    PairInstance inst = instantiate(state, n);  // DegenerateInstance -> usage error upstream
    const PairReport rep = verify_pair(inst);
    std::string failures;
    for (const auto& c : rep.checks)
      if (!c.pass) failures += c.id + " (" + c.witness + "); ";
    rows.push_back({std::move(inst), rep.all_pass(), std::move(failures)});
  }

  auto fields = [](const Row& r) {
    const PairInstance& i = r.inst;
    return std::vector<std::string>{std::to_string(i.k),
                                    i.n.get_str(),
                                    i.knot1.a().get_str(),
                                    i.knot1.b().get_str(),
                                    i.knot2.a().get_str(),
                                    i.knot2.b().get_str(),
                                    i.slope.get_str(),
                                    i.lens1.to_string(),
                                    i.lens2.to_string(),
                                    i.knot1.genus().get_str(),
                                    i.knot2.genus().get_str(),
                                    i.knot1.delta_dd_half().get_str(),
                                    r.verified ? "true" : "false"};
  };
  static const char* kColumns[] = {"k",     "n",     "a",      "b",      "c",     "d",    "p",
                                   "lens1", "lens2", "genus1", "genus2", "ddHalf", "verified"};

  if (format == "csv") {
    std::string header;
    for (std::size_t i = 0; i < 13; ++i) header += std::string(i ? "," : "") + kColumns[i];
    std::cout << header << "\n";
    for (const auto& row : rows) {
      const auto f = fields(row);
      std::string line;
      for (std::size_t i = 0; i < f.size(); ++i) line += (i ? "," : "") + csv_quote(f[i]);
      std::cout << line << "\n";
    }
  } else if (format == "json") {
    OrderedJson arr = OrderedJson::array();
    for (const auto& row : rows) {
      const auto f = fields(row);
      OrderedJson j;
      j["k"] = row.inst.k;
      j["n"] = f[1];
      j["a"] = f[2];
      j["b"] = f[3];
      j["c"] = f[4];
      j["d"] = f[5];
      j["p"] = f[6];
      j["lens1"] = f[7];
      j["lens2"] = f[8];
      j["genus1"] = f[9];
      j["genus2"] = f[10];
      j["ddHalf"] = f[11];
      j["verified"] = row.verified;
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < 13; ++i) std::cout << (i ? "  " : "") << kColumns[i];
    std::cout << "\n";
    for (const auto& row : rows) {
      const auto f = fields(row);
      for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? "  " : "") << f[i];
      std::cout << "\n";
    }
  }

  bool all = true;
  for (const auto& row : rows)
    if (!row.verified) {
      all = false;
      std::cerr << "verification failed at (k,n) = (" << row.inst.k << ","
                << row.inst.n.get_str() << "): " << row.failures << "\n";
    }
  return all ? 0 : 1;
}

int cmd_staircases(long long genus, const std::string& mode, const std::string& format) {
  require_format(format, {"text", "json"});
  if (genus < 1) throw UsageError("--genus must be at least 1");
  OrderedJson j;
  j["schema_version"] = Report::kSchemaVersion;
  j["genus"] = genus;
  j["mode"] = mode;
  // candidates satisfy the structural constraints; no claim that each is
  // realized by an actual L-space knot
  j["note"] = "admissible exponent sequences; realizability is not checked";

  if (mode == "list") {
    const auto all = enumerate_staircases(genus);
    if (format == "json") {
      OrderedJson arr = OrderedJson::array();
      for (const auto& s : all) arr.push_back(s.exps());
      j["staircases"] = std::move(arr);
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& s : all) std::cout << s.to_string() << "\n";
    }
  } else if (mode == "count") {
    const auto all = enumerate_staircases(genus);
    if (format == "json") {
      j["count"] = all.size();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << all.size() << "\n";
    }
  } else if (mode == "extremal") {
    const auto [max, argmax] = extremal_bound_check(genus);
    if (format == "json") {
      j["max"] = max.get_str();
      j["argmax"] = argmax.exps();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "max " << max.get_str() << " at " << argmax.to_string() << "\n";
    }
  } else if (mode == "collisions") {
    const auto found = dd_collision_search(genus);
    if (format == "json") {
      OrderedJson arr = OrderedJson::array();
      for (const auto& c : found) {
        OrderedJson e;
        e["genus"] = c.genus;
        e["first"] = c.first.exps();
        e["second"] = c.second.exps();
        e["ddHalf"] = c.first.delta_dd_half().get_str();
        arr.push_back(std::move(e));
      }
      j["collisions"] = std::move(arr);
      std::cout << j.dump(2) << "\n";
    } else {
      if (found.empty()) {
        std::cout << "none\n";
      } else {
        for (const auto& c : found)
          std::cout << "g=" << c.genus << ": " << c.first.to_string() << " vs "
                    << c.second.to_string() << " (ddHalf " << c.first.delta_dd_half().get_str()
                    << ")\n";
      }
    }
  } else {
    throw UsageError("unknown mode '" + mode + "'");
  }
  return 0;
}

int cmd_verify(const std::string& scope_text) {
  const auto scope = parse_scope(scope_text);
  if (!scope) throw UsageError("unknown scope '" + scope_text + "'");
  const Report report = run_verification(*scope, default_thread_count());
  std::cout << report.to_json().dump(2) << "\n";
  std::cerr << report.suite << ": " << report.checks.size() << " checks, "
            << report.pass_count() << " passed, " << report.fail_count() << " failed\n";
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact torus-knot surgery calculator"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format: text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::string descriptor, slope_text;
  auto* invariants = app.add_subcommand("invariants", "classical invariants of a torus knot");
  invariants->fallthrough();
  invariants->add_option("knot", descriptor, "knot descriptor T(a,b)")->required();

  auto* surgery = app.add_subcommand("surgery", "classify a Dehn surgery on a torus knot");
  surgery->fallthrough();
  surgery->add_option("knot", descriptor, "knot descriptor T(a,b)")->required();
  surgery->add_option("slope", slope_text, "surgery slope p or p/q")->required();

  long k = 0;
  std::vector<std::string> n_specs;
  auto* pairs = app.add_subcommand("pairs", "generate and verify shared-surgery pairs");
  pairs->fallthrough();
  pairs->add_option("--k,-k", k, "family level (k >= 1)")->required();
  pairs->add_option("--n,-n", n_specs, "value of n (>= 2), or a range like 2..8")->required();

  long long genus = 0;
  std::string mode = "list";
  auto* staircases = app.add_subcommand("staircases", "enumerate L-space staircases of a genus");
  staircases->fallthrough();
  staircases->add_option("--genus,-g", genus, "Seifert genus (>= 1)")->required();
  staircases->add_option("--mode,-m", mode, "list, count, extremal, or collisions")
      ->check(CLI::IsMember({"list", "count", "extremal", "collisions"}));

  std::string scope_text = "all";
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->fallthrough();
  verify->add_option("--scope", scope_text, "all, appendix, staircase, or surgery")
      ->check(CLI::IsMember({"all", "appendix", "staircase", "surgery"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (invariants->parsed()) return cmd_invariants(descriptor, format);
    if (surgery->parsed()) return cmd_surgery(descriptor, slope_text, format);
    if (pairs->parsed()) return cmd_pairs(k, n_specs, format);
    if (staircases->parsed()) return cmd_staircases(genus, mode, format);
    if (verify->parsed()) return cmd_verify(scope_text);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateInstance& e) {
    std::cerr << "error: degenerate instance: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
