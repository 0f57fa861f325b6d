// Acceptance run: one line per criterion, exact comparisons throughout.
//
// Exit status is nonzero if any criterion fails, except for failures listed
// as known below. A known failure is still printed as FAIL.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "motivic/bundles.hpp"
#include "motivic/higgs.hpp"
#include "motivic/render.hpp"
#include "motivic/verify.hpp"

namespace {

using namespace motivic;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void absorb(const SuiteResult& r) { require(r.passed(), r.summary()); }
};

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
  // Reason the criterion cannot hold as stated, or empty.
  std::string known_failure;
};

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string(MOTIVIC_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Outcome golden_diamond(const std::string& args, const std::vector<std::vector<long long>>& golden) {
  Outcome o;
  const auto [status, out] = run_cli(args);
  o.require(status == 0, "motivic " + args + " exits 0");
  if (status != 0) return o;
  HodgeMatrix expected;
  for (const auto& r : golden) expected.rows.emplace_back(r.begin(), r.end());
  HodgeMatrix got;
  try {
    got = parse_diamond_text(out);
  } catch (const Error& e) {
    o.require(false, std::string("parse output: ") + e.what());
    return o;
  }
  const std::size_t n = expected.size();
  o.require(got.size() == n, std::to_string(got.size()) + "x" + std::to_string(got.size()) + " matrix, expected " +
                                 std::to_string(n) + "x" + std::to_string(n));
  if (got.size() != n) return o;
  std::size_t mismatches = 0;
  std::string first;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (got.at(p, q) != expected.at(p, q) && mismatches++ == 0) {
        std::ostringstream os;
        os << "h^{" << p << "," << q << "} = " << got.at(p, q) << ", expected " << expected.at(p, q);
        first = os.str();
      }
  o.require(mismatches == 0, std::to_string(n * n - mismatches) + "/" + std::to_string(n * n) + " entries match" +
                                 (first.empty() ? "" : "; first mismatch " + first));
  return o;
}

// Smallest D with h^{p,q} = h^{D-p,D-q} everywhere, or -1.
int duality_center(const BiPoly& h) {
  const int top = 2 * std::max(h.max_p(), h.max_q());
  for (int d = 0; d <= top; ++d)
    if (has_poincare_duality(h, d)) return d;
  return -1;
}

Outcome structural(int max_genus) {
  Outcome o;
  for (int g = 2; g <= max_genus; ++g) {
    const std::string at = " (g=" + std::to_string(g) + ")";
    const IntPoly nl = poincare(bundle_motive_fixed_det({g, 1}));
    bool palindromic = nl.degree() == 16 * (g - 1);
    for (int k = 0; palindromic && k <= nl.degree(); ++k) palindromic = nl.coeff(k) == nl.coeff(nl.degree() - k);
    o.require(palindromic && has_poincare_duality(hodge_realize(bundle_motive_fixed_det({g, 1})), 8 * (g - 1)),
              "N_L Poincare duality, b_k = b_{" + std::to_string(16 * (g - 1)) + "-k}" + at);

    const MotiveClass m = higgs_motive(HiggsSpec::make(g, 1));
    const BiPoly h = hodge_realize(m);
    const int center = duality_center(h);
    std::ostringstream os;
    os << "M Poincare duality" << at << ": ";
    if (center < 0) {
      const int dim = 2 * higgs_half_dimension(g);
      os << "no D works; at D=dim M=" << dim << ", h^{0,0}=" << h.coeff(0, 0) << " vs h^{" << dim << "," << dim
         << "}=" << h.coeff(dim, dim) << "; at D=" << dim / 2 << ", h^{" << dim / 2 << "," << dim / 2
         << "}=" << h.coeff(dim / 2, dim / 2);
    } else {
      os << "D=" << center;
    }
    o.require(center >= 0, os.str());

    const IntPoly p = poincare(m);
    o.require(p.eval(Integer(-1)) == 0, "Euler characteristic of M is 0" + at);
    o.require(p.coeff(0) == 1, "b_0(M) = 1" + at);
    o.require(p.coeff(1) == 2 * g, "b_1(M) = " + std::to_string(2 * g) + at);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "genus-2 Higgs diamond (11x11, exact)",
       [] { return golden_diamond("higgs --genus 2 --degree 1", golden::kGenus2Higgs); }, ""},
      {2, "genus-3 Higgs diamond mod Jac (17x17, exact)",
       [] { return golden_diamond("higgs --genus 3 --degree 1 --mod-jac", golden::kGenus3HiggsModJac); }, ""},
      {3, "pair route agreement, 2 <= g <= 8, e <= 4g-5",
       [] {
         Outcome o;
         o.absorb(verify_route_agreement(8));
         return o;
       },
       ""},
      {4, "R positivity and exact Q division, g <= 10",
       [] {
         Outcome o;
         o.absorb(verify_r_positivity(10));
         o.absorb(verify_q_divisibility(10));
         return o;
       },
       ""},
      {5, "symmetric-power reduction identity, 2 <= g <= 8",
       [] {
         Outcome o;
         o.absorb(verify_symmetric_power_reduction(8));
         return o;
       },
       ""},
      {6, "Lagrangian twist audit, g <= 5, d in {1,2}",
       [] {
         Outcome o;
         o.absorb(verify_audit(5));
         return o;
       },
       ""},
      {7, "structural properties, g <= 4", [] { return structural(4); },
       "M is non-compact; its Hodge numbers are not Poincare dual (h^{0,0}=1, top-degree entries differ)"},
      {8, "d-independence of the Higgs class, g <= 4",
       [] {
         Outcome o;
         for (int g = 2; g <= 4; ++g)
           o.require(higgs_motive(HiggsSpec::make(g, 1)) == higgs_motive(HiggsSpec::make(g, 2)),
                     "higgs_motive(g=" + std::to_string(g) + ", d=1) == higgs_motive(g=" + std::to_string(g) +
                         ", d=2)");
         return o;
       },
       ""},
  };

  int passed = 0, unexpected = 0;
  std::vector<int> known;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << " (" << secs << "s)";
    if (!o.pass && !c.known_failure.empty()) line << " [known: " << c.known_failure << "]";
    std::cout << line.str() << "\n";
    for (const auto& n : o.notes) std::cout << "         " << n << "\n";
    if (o.pass) {
      ++passed;
    } else if (c.known_failure.empty()) {
      ++unexpected;
    } else {
      known.push_back(c.id);
    }
  }
  std::cout << "acceptance: " << passed << "/" << criteria.size() << " criteria pass";
  if (!known.empty()) {
    std::cout << "; known failures:";
    for (int id : known) std::cout << " " << id;
  }
  std::cout << "; unexpected failures: " << unexpected << "\n";
  return unexpected == 0 ? 0 : 1;
}
