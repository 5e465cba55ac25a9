// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.
// Usage: acceptance [path-to-ppfun-cli]

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "ppfun/ppfun.hpp"

using namespace ppfun;
using namespace ppfun::verify;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Timed {
  CheckReport report;
  double seconds = 0;
};

std::map<std::string, Timed> runs;

const CheckReport& run(const std::string& name) {
  auto it = runs.find(name);
  if (it != runs.end()) return it->second.report;
  CheckSpec s;
  s.name = name;
  const auto t0 = Clock::now();
  Timed t{run_check(s), 0};
  t.seconds = seconds_since(t0);
  return runs.emplace(name, std::move(t)).first->second.report;
}

std::string summary(const CheckReport& r) {
  std::ostringstream os;
  os << r.name << " " << r.instances_run << " instances, " << r.failures.size() << " failures";
  return os.str();
}

bool all_passed;

void verdict(int n, bool ok, const std::string& detail) {
  std::cout << "criterion " << n << " " << (ok ? "PASS" : "FAIL") << ": " << detail << std::endl;
  all_passed = all_passed && ok;
}

bool suite_ok(const std::string& name, std::size_t min_instances) {
  const CheckReport& r = run(name);
  return r.passed() && r.instances_run >= min_instances;
}

std::string all_text() {
  std::string out;
  for (const auto& name : check_names()) {
    CheckSpec s;
    s.name = name;
    out += report_to_text(run_check(s));
  }
  return out;
}

std::pair<int, std::string> capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, out};
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  return {pclose(pipe), out};
}

// Exhaustive comparison against enumeration at p = 2, dim <= 3, n + m <= 3.
std::string oracle_run(bool& ok) {
  const PrimeField f(2);
  Sizes sz;
  sz.max_module_dim = 3;
  sz.max_arity = 3;
  std::size_t instances = 0, nonzero = 0;
  ok = true;
  for (std::size_t i = 0; i < 40; ++i) {
    const Instance in = gen_random_instance(0, i, sz, f);
    for (const PpFormula* phi : {&in.pair.phi(), &in.pair.psi()})
      for (const Module* m : {&in.m, &in.n})
        ok = ok && oracle::elements(solution_set(*phi, *m)) == oracle::solution_set(*phi, *m);
    ok = ok && oracle::elements(hom_space(in.m, in.n).space()) == oracle::homs(in.m, in.n);
    const Module& right = in.side == Side::right ? in.m : in.other;
    const Module& left = in.side == Side::left ? in.m : in.other;
    ok = ok && tensor_over_R(right, left).dim() == oracle::tensor_dim(right, left);
    nonzero += in.m.dim() > 0;
    ++instances;
  }
  ok = ok && instances >= 30;
  return std::to_string(instances) + " instances (" + std::to_string(nonzero) +
         " with nonzero M), solution sets, Hom and tensor against enumeration";
}

// Exact values over the path algebra of 2 -> 1, computed directly.
bool a2_values(std::string& detail) {
  const PrimeField f(2);
  const AlgebraPtr a2 = algebras::linear_quiver(f, 2);
  const Module sb = simple_module(a2, Side::left, 0), sa = simple_module(a2, Side::left, 1);
  const std::size_t e = ext_dim(sb, sa, 1);
  const std::size_t ov = stable_hom(sa, sa, StableFlavor::injective).dim();
  const std::size_t un = stable_hom(sa, sa, StableFlavor::projective).dim();
  detail = "A2 Ext1(Sb,Sa)=" + std::to_string(e) + " ovHom(Sa,Sa)=" + std::to_string(ov) +
           " unHom(Sa,Sa)=" + std::to_string(un);
  return e == 1 && ov == 1 && un == 0;
}

}  // namespace

int main(int argc, char** argv) {
  all_passed = true;
  const std::string cli = argc > 1 ? argv[1] : "";

  try {
    {
      const bool ok = suite_ok("dual-annihilator", 50) && runs["dual-annihilator"].seconds < 60;
      std::ostringstream d;
      d << summary(run("dual-annihilator")) << ", " << std::fixed;
      d.precision(2);
      d << runs["dual-annihilator"].seconds << " s";
      verdict(1, ok, d.str());
    }
    verdict(2, suite_ok("annihilator-predual", 50), summary(run("annihilator-predual")));
    {
      const CheckReport& r = run("d-involution");
      const std::size_t formulas = 3 * r.instances_run;
      verdict(3, r.passed() && formulas >= 100, summary(r) + ", " + std::to_string(formulas) + " formulas");
    }
    {
      bool ok = false;
      const std::string d = oracle_run(ok);
      verdict(4, ok, d);
    }
    verdict(5, suite_ok("presentation-bridge", 50), summary(run("presentation-bridge")));
    verdict(6, suite_ok("d-functor", 50), summary(run("d-functor")));
    verdict(7, suite_ok("hom-tensor", 50) && suite_ok("sigma-iso", 50),
            summary(run("hom-tensor")) + "; " + summary(run("sigma-iso")));
    {
      std::string a2;
      const bool ok = suite_ok("ext-shift", 50) && suite_ok("stable-hom-sequence", 50) && suite_ok("ar-formula", 50) &&
                      a2_values(a2);
      verdict(8, ok,
              summary(run("ext-shift")) + "; " + summary(run("stable-hom-sequence")) + "; " + summary(run("ar-formula")) +
                  "; " + a2);
    }
    verdict(9, suite_ok("zero-kernel", 50) && suite_ok("projective-over-epi", 50),
            summary(run("zero-kernel")) + "; " + summary(run("projective-over-epi")));
    {
      const auto t0 = Clock::now();
      const std::string first = all_text();
      const double one = seconds_since(t0);
      const std::string second = all_text();
      bool ok = first == second && one < 300;
      std::ostringstream d;
      d.precision(2);
      d << std::fixed << "registry twice in-process, identical=" << (first == second ? "yes" : "no") << ", " << one
        << " s per run";
      if (!cli.empty()) {
        const std::string cmd = "'" + cli + "' check all --seed 0 2>&1";
        const auto a = capture(cmd), b = capture(cmd);
        const bool same = a.first == 0 && b.first == 0 && a.second == b.second && !a.second.empty();
        ok = ok && same;
        d << "; cli check all twice, identical=" << (same ? "yes" : "no");
      }
      verdict(10, ok, d.str());
    }
  } catch (const std::exception& e) {
    std::cout << "acceptance aborted: " << e.what() << std::endl;
    return 1;
  }
  return all_passed ? 0 : 1;
}
