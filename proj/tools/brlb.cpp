// brlb: border-rank lower bounds, minimal-border-rank obstructions, decomposition
// checks and exponent bounds from the command line.
//
// Exit codes: 0 success, 1 certificate rejected (verify), 2 malformed input,
// 3 internal consistency violation.

#include <brlb/brlb.hpp>
#include <brlb/io/json_io.hpp>
#include <brlb/io/report.hpp>
#include <brlb/io/source.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace brlb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitConsistency = 3;

const std::string kDefaultField = "prime:2305843009213693951";

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BRLB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw MalformedInput(std::string("BRLB_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

void emit_json(const Json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << j.dump(2) << '\n';
}

std::set<ObstructionKind> parse_methods(const std::string& list) {
  std::set<ObstructionKind> out;
  if (list.empty() || list == "all") return out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    std::transform(item.begin(), item.end(), item.begin(), [](unsigned char c) { return std::toupper(c); });
    out.insert(parse_obstruction_kind(item));
  }
  return out;
}

struct AnalyzeArgs {
  std::string source;
  std::optional<std::size_t> target_r;
  std::string methods;
  std::string field;
  std::optional<std::uint64_t> seed;
  std::size_t p_max = 3;
  bool exact_recheck = false;
  std::string out;
  std::string ledger;
  bool json_stdout = false;
};

template <typename S>
BatteryReport<S> run_battery(const Tensor3<Rational>& t, const BatteryOptions& opt) {
  return minimal_br_battery(convert<S>(t), opt);
}

int cmd_analyze(const AnalyzeArgs& args) {
  const auto src = resolve_source(args.source);
  std::string field = args.field;
  if (field.empty()) field = src.file.field != "rational" ? src.file.field : kDefaultField;
  const std::uint64_t p = field_modulus(field);

  BatteryOptions opt;
  opt.seed = args.seed ? *args.seed : default_seed();
  opt.methods = parse_methods(args.methods);
  opt.p_max = args.p_max;

  Json battery;
  std::vector<Obstruction> obstructions;
  std::size_t aggregate = 0;
  if (p == 0) {
    auto rep = run_battery<Rational>(src.file.tensor, opt);
    battery = battery_to_json(rep);
    obstructions = rep.obstructions;
    aggregate = rep.aggregate_lower_bound;
  } else {
    PrimeFieldScope scope(p);
    auto rep = run_battery<Fp>(src.file.tensor, opt);
    battery = battery_to_json(rep);
    obstructions = rep.obstructions;
    aggregate = rep.aggregate_lower_bound;
  }

  Json recheck = Json::array();
  if (args.exact_recheck && p != 0) {
    BatteryOptions exact = opt;
    exact.methods.clear();
    for (const auto& ob : obstructions)
      if (ob.failed()) exact.methods.insert(ob.name);
    if (!exact.methods.empty()) {
      const auto rep = run_battery<Rational>(src.file.tensor, exact);
      for (const auto& ob : rep.obstructions) {
        const auto fast = std::find_if(obstructions.begin(), obstructions.end(), [&](const Obstruction& o) { return o.name == ob.name; });
        Json r = obstruction_to_json(ob);
        r["agrees_with_" + field] = ob.verdict == fast->verdict;
        recheck.push_back(r);
      }
    }
  }

  Json report = {{"tool_version", kToolVersion},
                 {"tensor",
                  {{"id", src.id},
                   {"content_hash", src.hash},
                   {"dims", src.file.tensor.dims()},
                   {"file_field", src.file.field},
                   {"nonzero_entries", src.file.tensor.nonzero_count()}}},
                 {"battery", battery},
                 {"aggregate_lower_bound", aggregate},
                 {"exact_recheck", recheck}};
  if (args.target_r)
    report["target_r"] = {{"value", *args.target_r}, {"excluded", aggregate > *args.target_r}};

  Json upper = Json::array();
  if (!args.ledger.empty()) {
    Ledger ledger = read_ledger(args.ledger);
    if (src.power_of) ledger.register_kronecker(*src.power_of);
    ledger.add({src.id, FactKind::LOWER, aggregate, "analyze seed=" + std::to_string(opt.seed) + " field=" + field});
    ledger = kron_ledger_update(std::move(ledger));
    write_ledger(args.ledger, ledger);
    for (const auto& f : ledger.facts)
      if (f.tensor_id == src.id && f.kind == FactKind::UPPER) upper.push_back({{"value", f.value}, {"provenance", f.provenance}});
  }
  report["upper_bound_facts"] = upper;
  report["reproducibility_hash"] = reproducibility_hash(report);

  if (!args.out.empty()) emit_json(report, args.out);
  if (args.json_stdout) {
    emit_json(report, "-");
    return kExitOk;
  }
  std::cout << "tensor " << src.id << " dims " << src.file.tensor.a() << "x" << src.file.tensor.b() << "x" << src.file.tensor.c()
            << " field " << field << " seed " << opt.seed << "\n";
  for (const auto& ob : obstructions) {
    std::cout << "  " << std::left << std::setw(17) << to_string(ob.name) << std::setw(13) << to_string(ob.verdict);
    if (ob.payload) std::cout << " payload " << *ob.payload;
    if (ob.lower_bound) std::cout << " lower_bound " << *ob.lower_bound;
    std::cout << "\n";
  }
  for (const auto& r : recheck) std::cout << "  exact recheck " << r["name"].get<std::string>() << " " << r["verdict"].get<std::string>() << "\n";
  std::cout << "border rank >= " << aggregate << "\n";
  if (!upper.empty()) {
    std::uint64_t best = upper[0]["value"];
    for (const auto& u : upper) best = std::min<std::uint64_t>(best, u["value"]);
    std::cout << "border rank <= " << best << " (ledger)\n";
  }
  if (args.target_r)
    std::cout << "target r = " << *args.target_r << (aggregate > *args.target_r ? " is excluded" : " is not excluded") << "\n";
  return kExitOk;
}

struct ZooArgs {
  std::string name;
  std::size_t l = 0, m = 0, n = 0, q = 0, k = 0, power = 1;
  std::string table;
  std::string out;
};

int cmd_zoo(const ZooArgs& a) {
  std::vector<std::string> params;
  auto req = [&](std::size_t v, const char* flag) {
    if (v == 0) throw std::invalid_argument("zoo " + a.name + " needs " + flag);
    params.push_back(std::to_string(v));
  };
  if (a.name == "matmul") {
    const std::size_t n = a.n ? a.n : (a.m ? a.m : a.l);
    req(a.l ? a.l : n, "--l/--m/--n");
    req(a.m ? a.m : n, "--m");
    req(n, "--n");
  } else if (a.name == "unit") {
    req(a.m ? a.m : a.n, "--m");
  } else if (a.name == "big_cw" || a.name == "small_cw" || a.name == "cw_algebra") {
    req(a.q, "--q");
  } else if (a.name == "truncpoly") {
    req(a.k, "--k");
  } else if (a.name == "structure") {
    if (a.table.empty()) throw std::invalid_argument("zoo structure needs --table");
    params.push_back(a.table);
  }
  std::string id = "zoo:" + a.name;
  for (const auto& s : params) id += ":" + s;
  auto t = zoo_tensor(a.name, params);
  if (a.power > 1) {
    t = kronecker_power(t, a.power);
    id += "^" + std::to_string(a.power);
  }
  TensorFile tf{t, "rational", {{"name", id}, {"provenance", "zoo"}}};
  emit_json(tensor_file_to_json(tf), a.out);
  return kExitOk;
}

struct VerifyArgs {
  std::string tensor, certificate, ledger, out;
};

int cmd_verify(const VerifyArgs& a) {
  const auto src = resolve_source(a.tensor);
  const auto dec = read_certificate(a.certificate);
  for (const auto& term : dec.terms)
    if (term.a.size() != src.file.tensor.a() || term.b.size() != src.file.tensor.b() || term.c.size() != src.file.tensor.c())
      throw MalformedInput("certificate vector lengths do not match the tensor dims");
  const bool ok = verify_eps_decomposition(src.file.tensor, dec);
  Json report = {{"tool_version", kToolVersion},
                 {"tensor", {{"id", src.id}, {"content_hash", src.hash}}},
                 {"certificate", {{"h", dec.h}, {"r", dec.r()}, {"sha256", sha256_hex(certificate_to_json(dec).dump())}}},
                 {"field", "rational"},
                 {"verdict", ok ? "PASS" : "FAIL"}};
  if (ok) {
    const BrFact fact{src.id, FactKind::UPPER, dec.r(),
                      "eps-certificate h=" + std::to_string(dec.h) + " sha256=" + report["certificate"]["sha256"].get<std::string>()};
    report["fact"] = {{"tensor_id", fact.tensor_id}, {"kind", "UPPER"}, {"value", fact.value}, {"provenance", fact.provenance}};
    if (!a.ledger.empty()) {
      Ledger ledger = read_ledger(a.ledger);
      if (src.power_of) ledger.register_kronecker(*src.power_of);
      ledger.add(fact);
      write_ledger(a.ledger, kron_ledger_update(std::move(ledger)));
    }
  }
  if (!a.out.empty()) emit_json(report, a.out);
  std::cout << (ok ? "PASS" : "FAIL") << ": " << dec.r() << "-term certificate (h=" << dec.h << ") for " << src.id << "\n";
  if (ok) std::cout << "border rank <= " << dec.r() << "\n";
  return ok ? kExitOk : kExitRejected;
}

struct LedgerArgs {
  std::string path;
  std::vector<std::string> upper, lower;
  std::string kron_product;
  std::vector<std::string> kron_factors;
};

BrFact parse_fact_flag(const std::string& s, FactKind kind) {
  const auto eq = s.rfind('=');
  if (eq == std::string::npos || eq == 0) throw std::invalid_argument("fact must be <tensor_id>=<value>: " + s);
  return {s.substr(0, eq), kind, std::stoull(s.substr(eq + 1)), "user"};
}

int cmd_ledger(const LedgerArgs& a) {
  Ledger ledger = read_ledger(a.path);
  for (const auto& s : a.upper) ledger.add(parse_fact_flag(s, FactKind::UPPER));
  for (const auto& s : a.lower) ledger.add(parse_fact_flag(s, FactKind::LOWER));
  if (!a.kron_product.empty()) ledger.register_kronecker({a.kron_product, a.kron_factors});
  ledger = kron_ledger_update(std::move(ledger));
  write_ledger(a.path, ledger);
  std::set<std::string> ids;
  for (const auto& f : ledger.facts) ids.insert(f.tensor_id);
  for (const auto& id : ids) {
    const auto lo = ledger.best(id, FactKind::LOWER), hi = ledger.best(id, FactKind::UPPER);
    std::cout << id << ": " << (lo ? std::to_string(*lo) : "?") << " <= border rank <= " << (hi ? std::to_string(*hi) : "?") << "\n";
  }
  return kExitOk;
}

struct OmegaArgs {
  std::string formula = "cw";
  long long q = 0, k = 1, n = 0, r = 0;
};

int cmd_omega(const OmegaArgs& a) {
  const OmegaBound b = a.formula == "bini" ? bini_bound(a.n, a.r)
                                            : cw_omega_bound(a.q, a.k, a.r, a.formula == "skewcw" ? CwFormula::Skew : CwFormula::Small);
  std::cout << "omega <= " << b.decimal() << (b.informative ? "" : " (not below 3; no improvement)") << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Border-rank lower bounds and minimal-border-rank obstructions for 3-way tensors"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Run certificates on a tensor and report border-rank bounds");
  analyze->add_option("source", an.source, "TensorFile path or zoo:<name>[:<params>][^k], e.g. zoo:matmul:2")->required();
  analyze->add_option("--target-r", an.target_r, "Report whether border rank <= r is excluded");
  analyze->add_option("--methods", an.methods,
                      "Comma-separated subset of STRASSEN,COMMUTATOR,END_CLOSED,T111_TRIPLE,T111_TWOFACTOR,SYMLIE,KOSZUL,"
                      "ALG111_ABUNDANCE (case-insensitive; default all)");
  analyze->add_option("--field", an.field, "rational or prime:<p> (default: the file's prime, else " + kDefaultField + ")");
  analyze->add_option("--seed", an.seed, "Random seed (default: $BRLB_SEED, else 0)");
  analyze->add_option("--p-max", an.p_max, "Largest Koszul p to try")->capture_default_str();
  analyze->add_flag("--exact-recheck", an.exact_recheck, "Rerun methods that FAIL over the prime field over Q");
  analyze->add_option("--out", an.out, "Write the JSON report here");
  analyze->add_option("--ledger", an.ledger, "Merge the lower bound into this ledger file");
  analyze->add_flag("--json", an.json_stdout, "Print the JSON report instead of the summary");

  ZooArgs zo;
  auto* zoo = app.add_subcommand("zoo", "Write a benchmark tensor as a TensorFile");
  zoo->add_option("name", zo.name, "Tensor name")->required()->check(CLI::IsMember(zoo_names()));
  zoo->add_option("--l", zo.l, "matmul: first dimension");
  zoo->add_option("--m", zo.m, "matmul: middle dimension; unit: size");
  zoo->add_option("--n", zo.n, "matmul: last dimension (alone: square)");
  zoo->add_option("--q", zo.q, "big_cw, small_cw, cw_algebra: q");
  zoo->add_option("--k", zo.k, "truncpoly: C[x]/(x^k)");
  zoo->add_option("--table", zo.table, "structure: algebra table JSON");
  zoo->add_option("--power", zo.power, "Kronecker power")->check(CLI::Range(1, 8));
  zoo->add_option("--out", zo.out, "Output path (default stdout)");

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "Check an eps-decomposition certificate exactly over Q");
  verify->add_option("tensor", ve.tensor, "TensorFile path or zoo spec")->required();
  verify->add_option("certificate", ve.certificate, "Certificate JSON")->required();
  verify->add_option("--ledger", ve.ledger, "Record the upper bound in this ledger file");
  verify->add_option("--out", ve.out, "Write the JSON report here");

  LedgerArgs le;
  auto* ledger = app.add_subcommand("ledger", "Add facts to a ledger and close it under Kronecker products");
  ledger->add_option("path", le.path, "Ledger JSON (created if missing)")->required();
  ledger->add_option("--upper", le.upper, "<tensor_id>=<value> upper bound");
  ledger->add_option("--lower", le.lower, "<tensor_id>=<value> lower bound");
  auto* kp = ledger->add_option("--kron", le.kron_product, "Register a Kronecker product id");
  ledger->add_option("--factors", le.kron_factors, "Factor ids of --kron")->delimiter(',')->needs(kp);

  OmegaArgs om;
  auto* omega = app.add_subcommand("omega", "Exponent bound from a border-rank upper bound");
  omega->add_option("formula", om.formula, "cw, skewcw or bini")->check(CLI::IsMember({"cw", "skewcw", "bini"}));
  omega->add_option("--q", om.q, "cw: q");
  omega->add_option("--k", om.k, "cw: Kronecker power")->capture_default_str();
  omega->add_option("--n", om.n, "bini: matrix size");
  omega->add_option("--r", om.r, "Border-rank upper bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (*analyze) return cmd_analyze(an);
    if (*zoo) return cmd_zoo(zo);
    if (*verify) return cmd_verify(ve);
    if (*ledger) return cmd_ledger(le);
    if (*omega) return cmd_omega(om);
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency violation: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitOk;
}
