// Acceptance suite: runs every top-level correctness criterion of the
// workbench at its exact threshold and prints one PASS/FAIL line each.
// Everything here is exact arithmetic; the suite exits nonzero when any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "eds/bcjs.hpp"
#include "eds/connection.hpp"
#include "eds/cartan_lemma.hpp"
#include "eds/document.hpp"
#include "eds/prng.hpp"
#include "test_util.hpp"

using namespace eds;

namespace {

struct Criterion {
  std::string name;
  std::function<void()> run;  // throws on failure
};

struct failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw failure(what);
}

template <typename T, typename U>
void expect_eq(const T& got, const U& want, const std::string& what) {
  if (!(got == static_cast<T>(want))) {
    std::ostringstream msg;
    msg << what << ": got " << got << ", want " << want;
    throw failure(msg.str());
  }
}

BcjsSystem exact_system(int m, int N, std::uint64_t seed) {
  const SecondFundamentalForm h = random_h_in_H(m, N, seed);
  return bcjs_build(m, N, gauss_map(h), h);
}

const std::vector<std::pair<int, int>> kGrid = {{2, 3}, {3, 6}, {4, 10}};

// 1. Character closed-form agreement on the (m, N) grid with random valid
//    (R = gauss_map(h), h in H): tableau- and polar-computed characters both
//    equal the closed form [4,6], [9,15,18], [16,28,36,40].
void criterion_characters() {
  const std::vector<std::vector<int>> expected = {{4, 6}, {9, 15, 18}, {16, 28, 36, 40}};
  for (std::size_t g = 0; g < kGrid.size(); ++g) {
    const auto [m, N] = kGrid[g];
    const CertifyResult res = bcjs_certify(exact_system(m, N, 1000 + g));
    expect(res.chars.tableau_c.has_value(), "tableau characters missing");
    for (int p = 0; p < m; ++p) {
      expect_eq(res.chars.c[p], expected[g][p], "polar c_p at (m,N)=(" + std::to_string(m) + "," + std::to_string(N) + ")");
      expect_eq((*res.chars.tableau_c)[p], expected[g][p], "tableau c_p");
    }
  }
}

// 2. Character sums match N m(m+1)/2 + m^2(m^2-1)/12: 10, 42, 120.
void criterion_character_sums() {
  const std::vector<long long> expected = {10, 42, 120};
  for (std::size_t g = 0; g < kGrid.size(); ++g) {
    const auto [m, N] = kGrid[g];
    const auto c = characters_closed_form(m, N);
    long long sum = 0;
    for (long long v : c) sum += v;
    expect_eq(sum, expected[g], "sum of closed-form characters");
    expect_eq(sum, static_cast<long long>(N) * m * (m + 1) / 2 + dim_Km(m), "closed-form identity");
    const CertifyResult res = bcjs_certify(exact_system(m, N, 2000 + g));
    expect_eq(res.chars.sum_c, expected[g], "computed character sum");
  }
}

// 3. Ordinariness across >= 20 random seeds on (2,3) and (3,6):
//    tangent codimension equals the character sum and the verdict is
//    ordinary every time.
void criterion_ordinary() {
  for (const auto& [m, N] : std::vector<std::pair<int, int>>{{2, 3}, {3, 6}}) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const CertifyResult res = bcjs_certify(exact_system(m, N, seed));
      expect(res.chars.verdict == Verdict::ordinary, "verdict not ordinary at seed " + std::to_string(seed));
      expect_eq(res.chars.tangent_codim, res.chars.sum_c, "tangent codim");
    }
  }
}

// 4. Dimension bookkeeping: dim_Fm, dim_Km (plus the m = 5 rank value),
//    dim_Z, and the Grassmannian codimension at each grid point.
void criterion_dims() {
  const std::vector<DimsReport> expected = {
      {6, 3, 1, 10, 10, 10}, {18, 18, 6, 33, 42, 42}, {40, 60, 20, 84, 120, 120}};
  for (std::size_t g = 0; g < kGrid.size(); ++g) {
    const auto [m, N] = kGrid[g];
    const DimsReport d = dims_report(m, N);
    expect_eq(d.dim_Fm, expected[g].dim_Fm, "dim_Fm");
    expect_eq(d.dim_H, expected[g].dim_H, "dim_H");
    expect_eq(d.dim_Km, expected[g].dim_Km, "dim_Km");
    expect_eq(dim_Km_by_rank(m), d.dim_Km, "dim_Km by rank");
    expect_eq(d.dim_Z, expected[g].dim_Z, "dim_Z");
    expect_eq(d.grassmannian_codim, expected[g].grassmannian_codim, "grassmannian codim");
    expect_eq(d.grassmannian_codim, d.sum_c_closed_form, "codim equals character sum");
  }
  expect_eq(dim_Km_by_rank(5), 50LL, "dim_K5 by rank");
}

// 5. Gauss-map submersion certificate: jacobian rank equals dim_Km at 100
//    random h in H for (2,3) and (3,6); rank 0 at h = 0.
void criterion_submersion() {
  for (const auto& [m, N] : std::vector<std::pair<int, int>>{{2, 3}, {3, 6}}) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed)
      expect_eq(gauss_jacobian_rank(random_h_in_H(m, N, seed)), dim_Km(m),
                "jacobian rank at seed " + std::to_string(seed));
    expect_eq(gauss_jacobian_rank(SecondFundamentalForm(m, N)), 0LL, "rank at h = 0");
  }
}

// 6. Gauss equation as integrability: the flag is integral iff
//    gauss_map(h) = R, over 50 random pairs per grid point including
//    deliberate mismatches.
void criterion_integrality() {
  for (std::size_t g = 0; g < kGrid.size(); ++g) {
    const auto [m, N] = kGrid[g];
    SplitMix64 rng(3000 + g);
    for (int trial = 0; trial < 50; ++trial) {
      const SecondFundamentalForm h = random_h_in_H(m, N, rng.next());
      RiemannTensor r = gauss_map(h);
      const bool tamper = trial % 2 == 1;
      if (tamper) r = gauss_map(random_h_in_H(m, N, rng.next()));
      const BcjsSystem sys = bcjs_build(m, N, r, h);
      const bool matched = is_zero(gauss_residual(sys).max_abs());
      expect_eq(is_integral(sys.flag().element(m), sys.generators()), matched,
                "integrality equivalence at trial " + std::to_string(trial));
    }
  }
}

// 7. Cartan lemma: 200 exact round trips (r <= 6) and 200 rejections with
//    the exact residual reported.
void criterion_cartan_lemma() {
  SplitMix64 rng(4000);
  int round_trips = 0;
  while (round_trips < 200) {
    const int n = rng.range_int(2, 8);
    const int r = rng.range_int(1, std::min(n, 6));
    auto space = Space::standard(n);
    std::vector<Form> omega;
    for (int i = 1; i <= r; ++i) {
      Form f = Form::basis(space, {i});
      for (int j = r + 1; j <= n; ++j) f = f + rng.rational(2, 2) * Form::basis(space, {j});
      omega.push_back(std::move(f));
    }
    RationalMatrix h(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = i; j < r; ++j) {
        h.at(i, j) = rng.rational(4, 3);
        h.at(j, i) = h.at(i, j);
      }
    std::vector<Form> theta;
    for (int i = 0; i < r; ++i) {
      Form t(space, 1);
      for (int j = 0; j < r; ++j) t = t + h.at(i, j) * omega[j];
      theta.push_back(std::move(t));
    }
    expect(cartan_lemma_solve(theta, omega) == h, "round trip failed");
    ++round_trips;
  }

  int rejections = 0;
  while (rejections < 200) {
    const int n = rng.range_int(2, 6);
    const int r = rng.range_int(1, n);
    auto space = Space::standard(n);
    std::vector<Form> omega, theta;
    for (int i = 1; i <= r; ++i) omega.push_back(Form::basis(space, {i}));
    for (int i = 0; i < r; ++i) theta.push_back(eds::testing::random_form(rng, space, 1, 2));
    Form residual(space, 2);
    for (int i = 0; i < r; ++i) residual = residual + theta[i].wedge(omega[i]);
    if (residual.is_zero()) continue;
    try {
      cartan_lemma_solve(theta, omega);
      throw failure("solver accepted a non-solution");
    } catch (const cartan_lemma_residual& err) {
      expect(err.residual == residual, "reported residual differs from the recomputed wedge sum");
    }
    ++rejections;
  }
}

// 8. Formal identities: graded Leibniz, d^2 = 0 under integrable structure
//    data, and both Bianchi defects vanish over 100 random connection
//    matrices in dimensions 3..5.
void criterion_identities() {
  SplitMix64 rng(5000);
  int connections = 0;
  while (connections < 100) {
    const int dim = 3 + connections % 3;
    auto space = Space::standard(dim);
    StructureDifferential sd = connections % 4 == 0 ? StructureDifferential::flat(space)
                                                    : eds::testing::random_integrable_sd(rng, space);
    expect(sd.is_integrable(), "sampler produced non-integrable data");

    const Form a = eds::testing::random_form(rng, space, rng.range_int(0, 2));
    const Form b = eds::testing::random_form(rng, space, rng.range_int(0, 2));
    Form rhs = sd.d(a).wedge(b);
    const Form adb = a.wedge(sd.d(b));
    rhs = (a.degree() % 2 == 0) ? rhs + adb : rhs - adb;
    expect(sd.d(a.wedge(b)) == rhs, "graded Leibniz failed");
    expect(sd.d(sd.d(a)).is_zero(), "d^2 != 0 with integrable data");

    const int msize = rng.range_int(2, dim);
    std::vector<Form> eta;
    for (int i = 1; i <= msize; ++i) eta.push_back(Form::basis(space, {i}));
    ConnectionData cd{eta, eds::testing::random_skew_matrix(rng, space, msize), sd};
    for (const Form& defect : first_bianchi_defect(cd)) expect(defect.is_zero(), "first Bianchi defect nonzero");
    expect(second_bianchi_defect(cd).is_zero(), "second Bianchi defect nonzero");
    ++connections;
  }
}

// 9. Gauge invariance: 10 random w_ab perturbations per grid point leave
//    the whole character report unchanged.
void criterion_gauge() {
  for (std::size_t g = 0; g < kGrid.size(); ++g) {
    const auto [m, N] = kGrid[g];
    const BcjsSystem sys = exact_system(m, N, 6000 + g);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const GaugeCheckResult res = gauge_invariance_check(sys, seed);
      expect(res.ok, "gauge check failed at seed " + std::to_string(seed) + ": " + res.diff);
    }
  }
}

// 10. Polar-space oracle: on 100 random systems (ambient dim <= 5, <= 3
//     generators of degree <= 3) the generator-route polar space matches
//     brute-force constraint enumeration over the whole degree slice.
void criterion_polar_oracle() {
  SplitMix64 rng(7000);
  int checked = 0;
  while (checked < 100) {
    const int n = rng.range_int(2, 5);
    auto space = Space::standard(n);
    std::vector<Form> gens;
    for (int k = 0, g = rng.range_int(1, 3); k < g; ++k)
      gens.push_back(eds::testing::random_form(rng, space, rng.range_int(1, 3), 2));
    bool nonzero = false;
    for (const Form& f : gens) nonzero |= !f.is_zero();
    if (!nonzero) continue;
    const GeneratorSet gs(gens, StructureDifferential::flat(space));

    const int p = rng.range_int(0, std::min(2, n - 1));
    std::vector<Vector> basis;
    for (int i = 0; i < p; ++i) basis.push_back(eds::testing::random_vector(rng, space));
    if (eds::testing::rows_from_vectors(basis, n).rank() != p) continue;
    const IntegralElement e(space, basis);
    if (!is_integral(e, gs)) continue;

    const auto fast = polar_space(e, gs);
    const auto slow = eds::testing::brute_force_polar(e, gs);
    expect_eq(static_cast<int>(fast.size()), static_cast<int>(slow.size()), "polar dimension");
    expect(eds::testing::spans_equal(fast, slow, n), "polar spans differ");
    ++checked;
  }
}

// 11. Conformal threshold over m in 2..6, n in 1..21.
void criterion_conformal() {
  for (int m = 2; m <= 6; ++m)
    for (int n = 1; n <= 21; ++n) {
      const ConformalReport r = conformal_threshold(m, n);
      const bool want = n >= m * (m + 1) / 2 - 1;
      expect_eq(r.satisfied, want, "threshold at m=" + std::to_string(m) + ", n=" + std::to_string(n));
      if (!want)
        expect_eq(r.deficit, static_cast<long long>(m * (m + 1) / 2 - 1 - n), "deficit");
    }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1. characters match the closed form on (2,3), (3,6), (4,10)", criterion_characters},
      {"2. character sums are 10, 42, 120", criterion_character_sums},
      {"3. ordinary verdict across 20 seeds on (2,3) and (3,6)", criterion_ordinary},
      {"4. dimension bookkeeping (dim_Fm, dim_H, dim_Km, dim_Z, codim)", criterion_dims},
      {"5. gauss-map submersion rank certificate (100 samples each)", criterion_submersion},
      {"6. flag integrality iff the gauss equation holds (50 pairs each)", criterion_integrality},
      {"7. cartan lemma: 200 round trips and 200 exact rejections", criterion_cartan_lemma},
      {"8. leibniz, d^2 = 0, bianchi identities (100 random connections)", criterion_identities},
      {"9. gauge invariance of reports (10 perturbations per grid point)", criterion_gauge},
      {"10. polar space equals the brute-force slice oracle (100 systems)", criterion_polar_oracle},
      {"11. conformal embedding threshold over the (m, n) grid", criterion_conformal},
  };

  int failed = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.run();
    } catch (const std::exception& err) {
      ok = false;
      detail = err.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "PASS" : "FAIL") << "  " << c.name << "  [" << ms << " ms]";
    if (!ok) std::cout << "\n      " << detail;
    std::cout << "\n";
    failed += ok ? 0 : 1;
  }
  const auto total =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (failed == 0 ? "ALL CRITERIA PASSED" : std::to_string(failed) + " CRITERIA FAILED") << "  ["
            << total << " ms total]\n";
  return failed == 0 ? 0 : 1;
}
