// Runs the nine acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "jacflow/families.hpp"
#include "jacflow/jacobian.hpp"
#include "jacflow/symmetry.hpp"
#include "jacflow/verify.hpp"
#include "oracles.hpp"

using namespace jacflow;
using verify::Outcome;
using verify::SuiteResult;

namespace {

struct Verdict {
  bool ok = true;
  std::string why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

void require_all_pass(Verdict& v, const SuiteResult& r) {
  for (const auto& c : r.cases)
    v.require(c.outcome == Outcome::Pass, c.id + " " + verify::to_string(c.outcome) + ": " + c.diagnostics);
}

std::size_t cases_with_prefix(const SuiteResult& r, const std::string& prefix, bool pass_only) {
  std::size_t n = 0;
  for (const auto& c : r.cases)
    if (c.id.rfind(prefix, 0) == 0 && (!pass_only || c.outcome == Outcome::Pass)) ++n;
  return n;
}

int failures = 0;

void criterion(int number, const char* title, double limit_seconds, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= limit_seconds) v.require(false, "took " + std::to_string(secs) + " s");
  if (!v.ok) ++failures;
  std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", v.ok ? "PASS" : "FAIL", number, title, secs,
              limit_seconds, v.ok ? "" : " -- ", v.why.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "order-72 example: |Aut| = 72, Jac = Z3 x Z3, tau = 9, |GL2(3)| = 48, kernel > 1", 1.0, [] {
    Verdict v;
    auto r = verify::run_suite("example72");
    require_all_pass(v, r);
    v.require(r.cases.size() == 5, "expected five checks");
    const auto x = families::triple_star();
    v.require(oracle::count_multigraph_automorphisms(x) == 72, "brute-force |Aut| differs from 72");
    v.require(oracle::invertible_2x2_mod(3) == 48, "brute-force GL2(3) count differs from 48");
    v.require(oracle::hom_count(jacobian(x).group.factors(), 3) == oracle::count_harmonic_maps(x, 3),
              "harmonic map count disagrees with Jac");
    return v;
  });

  criterion(2, "|Jac| by SNF = tau by matrix-tree (= enumeration up to 12 edges)", 60.0, [] {
    Verdict v;
    auto r = verify::run_suite("p1");
    require_all_pass(v, r);
    v.require(cases_with_prefix(r, "simple/", true) == 100, "expected 100 simple graphs");
    v.require(cases_with_prefix(r, "multigraph/", true) == 20, "expected 20 multigraphs");
    for (const auto& c : r.cases) {
      if (c.id.rfind("simple/", 0) != 0) continue;
      const std::size_t n = c.details["vertices"];
      v.require(n >= 5 && n <= 9, c.id + " has " + std::to_string(n) + " vertices");
      const std::size_t m = c.details["edges"];
      v.require(m > 12 || c.details.contains("enumerated"), c.id + " skipped enumeration");
    }
    return v;
  });

  criterion(3, "tau(X) >= p tau(Y) on 100 prime-fold covers, strict when 3-edge-connected", 120.0, [] {
    Verdict v;
    auto r = verify::run_suite("pfold");
    require_all_pass(v, r);
    v.require(r.cases.size() == 100, "expected 100 instances");
    std::set<std::size_t> primes;
    std::size_t strict_checked = 0;
    for (const auto& c : r.cases) {
      primes.insert(c.details["p"].get<std::size_t>());
      if (c.details["three_edge_connected"] == true) {
        ++strict_checked;
        v.require(c.details["strict"] == true, c.id + " is 3-edge-connected but not strict");
      }
    }
    v.require(primes == std::set<std::size_t>{2, 3, 5}, "not every prime was exercised");
    v.require(strict_checked > 0, "no 3-edge-connected instance was drawn");
    return v;
  });

  criterion(4, "faithful Theta on K4, Petersen, Cay(S3), Cay(Q8), Q3 with semiregular groups", 60.0, [] {
    Verdict v;
    const auto main_suite = verify::run_suite("main");
    std::set<std::string> expected{"k4/z2", "petersen/z5", "cay-s3-transpositions", "cay-q8-pm-i-pm-j", "cube/z2"};
    std::set<std::string> seen;
    for (const auto& c : main_suite.cases) {
      if (c.id.rfind("control/", 0) == 0) continue;
      seen.insert(c.id);
      v.require(c.outcome == Outcome::Pass, c.id + ": " + c.diagnostics);
      v.require(c.details["hypotheses_hold"] == true, c.id + ": hypotheses not confirmed");
      v.require(c.details["kernel_size"] == 1, c.id + ": kernel not trivial");
      v.require(c.details["image_size"] == c.details["group_order"], c.id + ": |Theta(G)| != |G|");
    }
    v.require(seen == expected, "unexpected case list");
    return v;
  });

  criterion(5, "C3..C8 with rotations: kernel is the whole group", 5.0, [] {
    Verdict v;
    const auto main_suite = verify::run_suite("main");
    v.require(cases_with_prefix(main_suite, "control/", true) == 6, "expected six passing controls");
    for (const auto& c : main_suite.cases)
      if (c.id.rfind("control/", 0) == 0)
        v.require(c.details["kernel_size"] == c.details["group_order"], c.id + ": kernel smaller than group");
    return v;
  });

  criterion(6, "Cay(S3), Cay(D4), Cay(Q8): edge connectivity = valency >= 3, rank(Jac) >= 2", 30.0, [] {
    Verdict v;
    auto r = verify::run_suite("cayley-rank");
    require_all_pass(v, r);
    v.require(r.cases.size() == 3, "expected three Cayley graphs");
    for (const auto& c : r.cases) {
      v.require(c.details["edge_connectivity"] == c.details["valency"], c.id + ": connectivity below valency");
      v.require(c.details["valency"].get<std::size_t>() >= 3, c.id + ": valency below 3");
      v.require(c.details["rank"].get<std::size_t>() >= 2, c.id + ": cyclic Jacobian");
    }
    return v;
  });

  criterion(7, "loops and semiedges leave invariant factors unchanged; K4/Z2 Jacobian matches tau", 30.0, [] {
    Verdict v;
    auto r = verify::run_suite("semiedge-null");
    require_all_pass(v, r);
    v.require(cases_with_prefix(r, "random/", true) == 25, "expected 25 random graphs");
    v.require(cases_with_prefix(r, "k4-quotient", true) == 1, "K4 quotient case missing");
    return v;
  });

  criterion(8, "xi-invariant quotients: |K| divides the acting group order", 30.0, [] {
    Verdict v;
    auto r = verify::run_suite("local-group");
    require_all_pass(v, r);
    v.require(cases_with_prefix(r, "c6/z2", true) == 1 && cases_with_prefix(r, "c6/z3", true) == 1,
              "C6 cases missing");
    v.require(cases_with_prefix(r, "random/", true) >= 20, "expected at least 20 randomised cases");
    return v;
  });

  criterion(9, "derived graphs: regular, |CT| = |G|, |Mon| = fold", 30.0, [] {
    Verdict v;
    auto r = verify::run_suite("covering");
    require_all_pass(v, r);
    for (const auto& c : r.cases) {
      v.require(c.details["is_regular"] == true, c.id + ": not regular");
      v.require(c.details["ct_order"] == c.details["fold"], c.id + ": |CT| != fold");
      v.require(c.details["monodromy_order"] == c.details["fold"], c.id + ": |Mon| != fold");
    }
    v.require(r.cases.size() >= 32, "too few covers");
    return v;
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
