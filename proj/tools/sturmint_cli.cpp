// Command-line front end: parse polynomial expressions and run the chain /
// matrix / count / isolate / verify commands in text or structured form.
//
// Exit codes: 0 success, 1 usage or parse error, 2 violated mathematical
// precondition, 3 theorem-check disagreement.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "sturmint/sturmint.hpp"

using json = nlohmann::ordered_json;
using namespace sturmint;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitMismatch = 3;

struct Options {
  std::string f_text;
  std::string g_text;
  std::string from_text;
  std::string to_text;
  std::string method = "both";
  std::string format = "text";
  std::string fault;
  long samples = 100;
  long seed = 0;
};

bool structured(const Options& o) { return o.format == "structured"; }

Polynomial parse_g_or_derivative(const Options& o, const Polynomial& f) {
  if (!o.g_text.empty()) return parse_poly(o.g_text);
  return derivative(f);
}

json chain_json(const SturmChain& c) {
  json arr = json::array();
  for (const auto& p : c.chain) arr.push_back(to_string(p));
  return arr;
}

json quotients_json(const SturmChain& c) {
  json arr = json::array();
  for (const auto& p : c.quotients) arr.push_back(to_string(p));
  return arr;
}

int cmd_chain(const Options& o) {
  const Polynomial f = parse_poly(o.f_text);
  const Polynomial g = parse_g_or_derivative(o, f);
  const SturmChain c = build_chain(f, g);
  if (structured(o)) {
    json doc;
    doc["command"] = "chain";
    doc["f"] = to_string(f);
    doc["g"] = to_string(g);
    doc["m"] = c.m();
    doc["chain"] = chain_json(c);
    doc["quotients"] = quotients_json(c);
    std::cout << doc.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < c.chain.size(); ++i)
      std::cout << "f" << i << "(x) = " << c.chain[i] << "\n";
    for (size_t i = 0; i < c.quotients.size(); ++i)
      std::cout << "d" << i + 1 << "(x) = " << c.quotients[i] << "\n";
  }
  return kExitOk;
}

int cmd_matrix(const Options& o) {
  const Polynomial f = parse_poly(o.f_text);
  const Polynomial g = parse_g_or_derivative(o, f);
  const SturmChain c = build_chain(f, g);
  const SturmMatrix s = build_matrix(c);
  const auto minors = trailing_minor_polys(s);
  if (structured(o)) {
    json doc;
    doc["command"] = "matrix";
    doc["f"] = to_string(f);
    doc["g"] = to_string(g);
    doc["m"] = s.size();
    json diag = json::array();
    for (const auto& d : s.diag) diag.push_back(to_string(d));
    doc["diag"] = diag;
    json mj = json::array();
    for (const auto& d : minors) mj.push_back(to_string(d));
    doc["minors"] = mj;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < s.diag.size(); ++i)
      std::cout << "d" << i + 1 << "(x) = " << s.diag[i] << "\n";
    for (size_t i = 0; i < minors.size(); ++i)
      std::cout << "D" << i + 1 << "(x) = " << minors[i] << "\n";
  }
  return kExitOk;
}

int cmd_count(const Options& o) {
  const Polynomial f = parse_poly(o.f_text);
  const Rational a = parse_rational(o.from_text);
  const Rational b = parse_rational(o.to_text);

  if (o.method == "variation") {
    // let precondition violations escape as domain errors (exit 2)
    int count = count_roots_variation(f, a, b);
    if (o.fault == "variation-off-by-one") ++count;
    if (structured(o)) {
      json doc;
      doc["command"] = "count";
      doc["f"] = to_string(f);
      doc["from"] = to_string(a);
      doc["to"] = to_string(b);
      doc["method"] = "variation";
      doc["variation"] = {{"count", count}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "variation: " << count << "\n";
    }
    return kExitOk;
  }

  RootCountReport rep = count_report(f, a, b);
  if (o.fault == "variation-off-by-one" && rep.count_variation.has_value()) {
    *rep.count_variation += 1;
    rep.agreement = (*rep.count_variation == rep.count_inertia);
  }

  const bool want_variation = o.method == "both";
  if (structured(o)) {
    json doc;
    doc["command"] = "count";
    doc["f"] = to_string(f);
    doc["from"] = to_string(a);
    doc["to"] = to_string(b);
    doc["method"] = o.method;
    doc["inertia"] = {{"q_from", rep.qa}, {"q_to", rep.qb}, {"count", rep.count_inertia}};
    if (want_variation) {
      if (rep.count_variation.has_value())
        doc["variation"] = {{"count", *rep.count_variation}};
      else
        doc["variation"] = nullptr;  // endpoint is a multiple root
      if (rep.agreement.has_value())
        doc["agreement"] = *rep.agreement;
      else
        doc["agreement"] = nullptr;
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "inertia: " << rep.count_inertia << " (q(a) = " << rep.qa << ", q(b) = " << rep.qb
              << ")\n";
    if (want_variation) {
      if (rep.count_variation.has_value()) {
        std::cout << "variation: " << *rep.count_variation << "\n";
        std::cout << "agreement: " << (*rep.agreement ? "yes" : "NO") << "\n";
      } else {
        std::cout << "variation: n/a (an endpoint is a multiple root)\n";
      }
    }
  }
  if (want_variation && rep.agreement.has_value() && !*rep.agreement) {
    std::cerr << "error[mismatch]: variation and inertia counts disagree\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_isolate(const Options& o) {
  const Polynomial f = parse_poly(o.f_text);
  const auto intervals = isolate_roots(f);
  if (structured(o)) {
    json doc;
    doc["command"] = "isolate";
    doc["f"] = to_string(f);
    doc["count"] = intervals.size();
    json arr = json::array();
    for (const auto& iv : intervals) arr.push_back({{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}});
    doc["intervals"] = arr;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& iv : intervals) std::cout << "(" << iv.lo << ", " << iv.hi << "]\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const Polynomial f = parse_poly(o.f_text);
  const Polynomial g = parse_g_or_derivative(o, f);
  const SturmSystem sys(f, g);

  std::mt19937_64 eng(static_cast<std::uint64_t>(o.seed));
  auto rand_int = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng); };

  // check 1: q(S(a)) equals the sign variation at sampled non-common-roots
  long tested = 0;
  long failures = 0;
  std::optional<Rational> first_failure;
  long attempts = 0;
  while (tested < o.samples && attempts < o.samples * 50) {
    ++attempts;
    const Rational a(rand_int(-99, 99), rand_int(1, 9));
    if (eval(sys.chain().last(), a).is_zero()) continue;  // common root of (f, g)
    int variation = sys.variation_at(a);
    if (o.fault == "variation-off-by-one") ++variation;
    if (sys.q_at_oracle(a) != variation) {
      ++failures;
      if (!first_failure) first_failure = a;
    }
    ++tested;
  }
  const bool agree_ok = failures == 0 && tested > 0;

  // check 2: the trailing minors reproduce the refined chain in reverse
  const auto minors = trailing_minor_polys(sys.matrix());
  const auto refined = refine(sys.chain()).chain;
  bool minors_ok = minors.size() + 1 == refined.size();
  if (minors_ok)
    for (size_t i = 0; i < minors.size() && minors_ok; ++i)
      minors_ok = minors[i] == refined[refined.size() - 2 - i];

  const bool ok = agree_ok && minors_ok;
  if (structured(o)) {
    json doc;
    doc["command"] = "verify";
    doc["f"] = to_string(f);
    doc["g"] = to_string(g);
    doc["samples"] = o.samples;
    doc["seed"] = o.seed;
    json checks = json::array();
    json c1;
    c1["name"] = "variation-inertia-agreement";
    c1["status"] = agree_ok ? "pass" : "fail";
    c1["points"] = tested;
    if (first_failure) c1["first_failure_at"] = to_string(*first_failure);
    checks.push_back(c1);
    checks.push_back({{"name", "minor-identity"}, {"status", minors_ok ? "pass" : "fail"}});
    doc["checks"] = checks;
    doc["ok"] = ok;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "check variation-inertia-agreement: " << (agree_ok ? "pass" : "FAIL") << " ("
              << tested << " points";
    if (first_failure) std::cout << ", first failure at a = " << *first_failure;
    std::cout << ")\n";
    std::cout << "check minor-identity: " << (minors_ok ? "pass" : "FAIL") << "\n";
  }
  if (!ok) {
    std::cerr << "error[mismatch]: verification failed\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact real-root counting for rational polynomials, two ways:\n"
               "classical Sturm sign variations and the negative inertia index\n"
               "of the associated tridiagonal Sturm matrix."};
  app.require_subcommand(1);
  app.get_formatter()->column_width(28);

  const std::string poly_help = "polynomial in x, e.g. \"x^3 - 3*x + 2\" or \"3/2*x^2\"";

  auto* chain = app.add_subcommand("chain", "Print the Sturm chain and its quotients");
  chain->add_option("f", o.f_text, poly_help)->required();
  chain->add_option("--g", o.g_text, "second chain polynomial (default: derivative of f)");

  auto* matrix = app.add_subcommand("matrix", "Print the Sturm matrix diagonal and minor polynomials");
  matrix->add_option("f", o.f_text, poly_help)->required();
  matrix->add_option("--g", o.g_text, "second chain polynomial (default: derivative of f)");

  auto* count = app.add_subcommand("count", "Count distinct real roots in (from, to]");
  count->add_option("f", o.f_text, poly_help)->required();
  count->add_option("--from", o.from_text, "interval lower endpoint, rational like -3 or 1/2")->required();
  count->add_option("--to", o.to_text, "interval upper endpoint")->required();
  count->add_option("--method", o.method, "variation | inertia | both (default both)")
      ->check(CLI::IsMember({"variation", "inertia", "both"}));

  auto* isolate = app.add_subcommand("isolate", "Isolate every distinct real root in its own interval");
  isolate->add_option("f", o.f_text, poly_help)->required();

  auto* verify = app.add_subcommand("verify", "Cross-check the counting identities on random points");
  verify->add_option("f", o.f_text, poly_help)->required();
  verify->add_option("--g", o.g_text, "second chain polynomial (default: derivative of f)");
  verify->add_option("--samples", o.samples, "number of sample points (default 100)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "random seed (default 0)");

  for (auto* sub : {chain, matrix, count, isolate, verify}) {
    sub->add_option("--format", o.format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));
  }
  for (auto* sub : {count, verify}) {
    sub->add_option("--inject-fault", o.fault)->group("");  // test hook, hidden
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(chain)) return cmd_chain(o);
    if (app.got_subcommand(matrix)) return cmd_matrix(o);
    if (app.got_subcommand(count)) return cmd_count(o);
    if (app.got_subcommand(isolate)) return cmd_isolate(o);
    if (app.got_subcommand(verify)) return cmd_verify(o);
  } catch (const ParseError& e) {
    std::cerr << "error[parse]: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error[domain]: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error[domain]: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitUsage;
}
