// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include "checks.hpp"

#include "ardlboot/csv.hpp"
#include "ardlboot/dgp.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

using namespace ardlboot;

namespace {

struct Line {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) ok = false;
    detail << (cond ? "" : "!") << what << "; ";
  }
};

bool report(int id, const std::string& title, Line& line) {
  std::cout << "CRITERION " << id << " " << (line.ok ? "PASS" : "FAIL") << " " << title << " | "
            << line.detail.str() << std::endl;
  return line.ok;
}

std::string fmt(double v, int prec = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool criterion1() {
  Line line;
  const double tol = 1e-10;
  DgpConfig a = reference_config();
  a.A_xx = axx_cointegrated();
  DgpConfig b = reference_config();
  b.A_xx = axx_stationary();
  const ConditionalParams pa = derive_conditional_params(a);
  const ConditionalParams pb = derive_conditional_params(b);
  // closed forms of the published repeating decimals
  const double w1 = 0.4044444444444444444, w2 = 0.6413333333333333333;
  const double ac = 0.7 * 1.1 * w2;
  line.require(near(pa.omega(0), w1, tol) && near(pa.omega(1), w2, tol),
               "omega=(" + fmt(pa.omega(0), 12) + "," + fmt(pa.omega(1), 12) + ")");
  line.require(near(pa.a_c_yx(0), ac, tol) && near(pa.a_c_yx(1), ac, tol),
               "a_c(A)=" + fmt(pa.a_c_yx(0), 12));
  line.require(near(pa.a_tilde_yx(0), 0.6 - ac, tol) && near(pa.a_tilde_yx(1), 0.4 - ac, tol) &&
                   near(pa.a_tilde_yx(0), 0.1062, 5e-5) && near(pa.a_tilde_yx(1), -0.0938, 5e-5),
               "a~(A)=(" + fmt(pa.a_tilde_yx(0), 6) + "," + fmt(pa.a_tilde_yx(1), 6) + ")");
  line.require(near(pb.a_c_yx(0), 0.442, tol) && near(pb.a_c_yx(1), 0.0306222222222222222, tol),
               "a_c(B)=(" + fmt(pb.a_c_yx(0), 12) + "," + fmt(pb.a_c_yx(1), 12) + ")");
  line.require(near(pb.a_tilde_yx(0), 0.158, tol) && near(pb.a_tilde_yx(1), 0.3693777777777777778, tol),
               "a~(B)=(" + fmt(pb.a_tilde_yx(0), 12) + "," + fmt(pb.a_tilde_yx(1), 12) + ")");
  return report(1, "parameter derivation", line);
}

struct McKey {
  DgpId dgp;
  Conditioning cond;
  bool operator<(const McKey& o) const {
    return std::pair{dgp, cond} < std::pair{o.dgp, o.cond};
  }
};

std::map<McKey, MonteCarloResult> run_monte_carlo() {
  std::map<McKey, MonteCarloResult> out;
  const std::pair<DgpId, Conditioning> rows[] = {
      {DgpId::H1, Conditioning::Conditional},  {DgpId::A3, Conditioning::Conditional},
      {DgpId::D6, Conditioning::Conditional},  {DgpId::D6, Conditioning::Unconditional},
      {DgpId::B4, Conditioning::Conditional},
  };
  for (const auto& [dgp, cond] : rows) {
    MonteCarloConfig mc;
    mc.dgp = dgp;
    mc.det_case = DeterministicCase::III;
    mc.conditioning = cond;
    mc.repetitions = 200;
    mc.base.T = 200;
    mc.base.seed = 20240611;
    mc.boot.replicates = 200;
    mc.boot.alpha = 0.05;
    out[{dgp, cond}] = monte_carlo(mc);
    const auto& r = out[{dgp, cond}];
    std::cout << "  mc " << to_string(dgp) << " " << to_string(cond) << ":";
    for (const auto& t : r.tests) std::cout << " " << to_string(t.kind) << "=" << fmt(t.rejection_rate, 3);
    std::cout << " (completed " << r.completed << "/" << r.repetitions << ")" << std::endl;
  }
  return out;
}

double rate(const std::map<McKey, MonteCarloResult>& mc, DgpId d, Conditioning c, TestKind k) {
  return mc.at({d, c}).find(k)->rejection_rate;
}

bool criterion2(const std::map<McKey, MonteCarloResult>& mc) {
  Line line;
  const auto C = Conditioning::Conditional;
  const auto UC = Conditioning::Unconditional;
  for (TestKind k : {TestKind::Fov, TestKind::T, TestKind::Find}) {
    const double r = rate(mc, DgpId::H1, C, k);
    line.require(r >= 0.95, "1H C " + std::string(to_string(k)) + "=" + fmt(r, 3) + ">=0.95");
  }
  const double fov3 = rate(mc, DgpId::A3, C, TestKind::Fov);
  line.require(fov3 >= 0.005 && fov3 <= 0.10, "3A C F_ov=" + fmt(fov3, 3) + " in [0.005,0.10]");
  const double find3 = rate(mc, DgpId::A3, C, TestKind::Find);
  line.require(find3 >= 0.005 && find3 <= 0.11, "3A C F_ind=" + fmt(find3, 3) + " in [0.005,0.11]");
  const double find6 = rate(mc, DgpId::D6, C, TestKind::Find);
  line.require(find6 <= 0.12, "6 C F_ind=" + fmt(find6, 3) + "<=0.12");
  const double find6u = rate(mc, DgpId::D6, UC, TestKind::Find);
  line.require(find6u >= 0.80, "6 UC F_ind=" + fmt(find6u, 3) + ">=0.80");
  const double t4 = rate(mc, DgpId::B4, C, TestKind::T);
  line.require(t4 >= 0.01 && t4 <= 0.12, "4B C t=" + fmt(t4, 3) + " in [0.01,0.12]");
  const double fov4 = rate(mc, DgpId::B4, C, TestKind::Fov);
  line.require(fov4 >= 0.55, "4B C F_ov=" + fmt(fov4, 3) + ">=0.55");
  return report(2, "reduced-scale size/power table", line);
}

bool criterion3() {
  Line line;
  const TimeSeriesFrame f = load_csv(ARDLBOOT_TEST_DATA_DIR "/e1.csv", "C", {"INV", "INC"}, true);
  BootstrapConfig boot;
  boot.replicates = 1999;
  boot.seed = 1982;
  const BootstrapReport c3 =
      bootstrap_tests(f, ArdlSpec{DeterministicCase::III, Conditioning::Conditional, 2, {1, 1}}, boot);
  boot.tests = {TestKind::Fov};
  const BootstrapReport c2 =
      bootstrap_tests(f, ArdlSpec{DeterministicCase::II, Conditioning::Conditional, 2, {1, 1}}, boot);
  const std::pair<const TestResult*, double> want[] = {
      {c3.find(TestKind::Fov), 10.751},
      {c3.find(TestKind::T), -5.608},
      {c3.find(TestKind::Find), 15.636},
      {c2.find(TestKind::Fov), 18.019},
  };
  const char* labels[] = {"III F_ov", "III t", "III F_ind", "II F_ov"};
  for (int i = 0; i < 4; ++i) {
    const TestResult* r = want[i].first;
    line.require(near(r->observed, want[i].second, 0.05),
                 std::string(labels[i]) + "=" + fmt(r->observed, 3));
    line.require(r->p_value <= 0.005, "p=" + fmt(r->p_value, 4));
  }
  return report(3, "empirical replication (West German consumption data)", line);
}

bool criterion4() {
  Line line;
  const checks::Verdict v = checks::oracle_equivalence(1000, 4242, 1e-9);
  line.require(v.ok, v.detail);
  return report(4, "oracle equivalence, 1000 instances at 1e-9", line);
}

bool criterion5() {
  Line line;
  const std::pair<const char*, checks::Verdict> props[] = {
      {"recenter", checks::recenter_zero_mean(2000, 51)},
      {"regeneration", checks::regeneration_identity(52)},
      {"cv monotone", checks::critical_value_monotone(500, 53)},
      {"p/cv consistency", checks::pvalue_critical_consistency(99, 220)},
      {"classify", checks::classify_truth_table()},
      {"threads", checks::thread_determinism(54)},
  };
  for (const auto& [name, v] : props) line.require(v.ok, std::string(name) + ": " + v.detail);
  return report(5, "property suite", line);
}

bool criterion6(const std::map<McKey, MonteCarloResult>& mc) {
  Line line;
  const double alpha = 0.05;
  // (DGP, model, test) triples whose null is true in the data
  const std::tuple<DgpId, Conditioning, TestKind> nulls[] = {
      {DgpId::A3, Conditioning::Conditional, TestKind::Fov},
      {DgpId::A3, Conditioning::Conditional, TestKind::T},
      {DgpId::A3, Conditioning::Conditional, TestKind::Find},
      {DgpId::B4, Conditioning::Conditional, TestKind::T},
      {DgpId::D6, Conditioning::Conditional, TestKind::Find},
  };
  for (const auto& [d, c, k] : nulls) {
    const auto& res = mc.at({d, c});
    const double R = res.find(k)->completed;
    const double band = 3.0 * std::sqrt(alpha * (1 - alpha) / R);
    const double r = res.find(k)->rejection_rate;
    line.require(std::abs(r - alpha) <= band, std::string(to_string(d)) + " " +
                                                  std::string(to_string(k)) + "=" + fmt(r, 3) +
                                                  " in " + fmt(alpha - band, 4) + ".." +
                                                  fmt(alpha + band, 4));
  }
  return report(6, "size within binomial 3-sigma band", line);
}

}  // namespace

int main() {
  bool ok = true;
  auto guard = [&](int id, auto fn) {
    try {
      ok = fn() && ok;
    } catch (const std::exception& e) {
      std::cout << "CRITERION " << id << " FAIL | exception: " << e.what() << std::endl;
      ok = false;
    }
  };
  std::map<McKey, MonteCarloResult> mc;
  try {
    mc = run_monte_carlo();
  } catch (const std::exception& e) {
    std::cout << "Monte Carlo failed: " << e.what() << std::endl;
  }
  guard(1, criterion1);
  guard(2, [&] { return criterion2(mc); });
  guard(3, criterion3);
  guard(4, criterion4);
  guard(5, criterion5);
  guard(6, [&] { return criterion6(mc); });
  return ok ? 0 : 1;
}
