// Copyright 2026 The quditstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Every check compares against the brute-force
// oracle or fixed worked examples; runtimes are wall-clock.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "quditstab.hpp"
#include "support/random_stabilizer.hpp"

using namespace quditstab;
namespace qt = quditstab::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (out.pass && secs >= limit_seconds) {
    out.pass = false;
    out.detail += " runtime limit exceeded";
  }
  if (!out.pass) ++failures;
  std::ostringstream time;
  if (secs < 0.01)
    time << secs * 1e3 << " ms";
  else
    time << secs << " s";
  std::printf("%s [%d] %s (%s; %s)\n", out.pass ? "PASS" : "FAIL", id, name.c_str(), out.detail.c_str(),
              time.str().c_str());
  std::fflush(stdout);
}

StabilizerPresentation S(Int d, std::size_t n, std::vector<const char*> texts) {
  std::vector<PauliProduct> gens;
  for (const char* t : texts) gens.push_back(parse_pauli(t, Modulus(d), n));
  return StabilizerPresentation::from_generators(gens);
}

std::uint64_t total_dim(Int d, std::size_t n) {
  std::uint64_t t = 1;
  for (std::size_t i = 0; i < n; ++i) t *= static_cast<std::uint64_t>(d);
  return t;
}

// The random presentations shared by criteria 2 and 4.
std::vector<StabilizerPresentation> make_suite() {
  qt::Rng rng(2024);
  std::vector<StabilizerPresentation> suite;
  const auto shapes = qt::shapes({2, 3, 4, 6, 8, 9, 12}, 3, 256);
  while (suite.size() < 221)
    for (const auto& shape : shapes) suite.push_back(qt::random_valid_presentation(rng, shape.d, shape.n));
  return suite;
}

}  // namespace

int main() {
  const auto suite = make_suite();

  criterion(1, "two-generator example round trip", 1e-3, [] {
    Outcome o;
    const Modulus mod(4);
    const char* texts[] = {"w^2 X1^3 Z2^2", "X2^2"};
    std::vector<PauliProduct> gens;
    for (const char* t : texts) gens.push_back(parse_pauli(t, mod, 2));
    const auto s = StabilizerPresentation::from_generators(gens);
    o.require(s.phases() == std::vector<Int>{2, 0}, "phase vector " + format_phase_vector(s.phases()));
    o.require(s.matrix() == Matrix(2, 4, mod, {{3, 0, 0, 2}, {0, 2, 0, 0}}), "matrix\n" + s.matrix().str());
    for (std::size_t i = 0; i < 2; ++i)
      o.require(format_pauli(s.generator(i)) == texts[i], "formatted " + format_pauli(s.generator(i)));
    if (o.pass) o.detail = "phases (2,0), matrix [3 0 | 0 2; 0 2 | 0 0]";
    return o;
  });

  criterion(2, "group order and code dimension vs closure and dense projector", 120, [&] {
    Outcome o;
    double worst_trace = 0, worst_idem = 0;
    for (const auto& s : suite) {
      const auto order = group_order(s);
      const auto closure = oracle::enumerate_group(s);
      o.require(closure.size() == order, "closure " + std::to_string(closure.size()) + " != " +
                                             std::to_string(order) + " for\n" + format_stabilizer_file(s));
      const auto p = oracle::projector(s);
      const double expected = static_cast<double>(total_dim(s.dim(), s.num_qudits())) / static_cast<double>(order);
      worst_trace = std::max(worst_trace, std::abs(p.trace() - Complex(expected)));
      worst_idem = std::max(worst_idem, max_abs_diff(p * p, p));
    }
    o.require(worst_trace < 1e-6, "trace error " + std::to_string(worst_trace));
    o.require(worst_idem < 1e-9, "idempotence error " + std::to_string(worst_idem));
    if (o.pass) {
      std::ostringstream os;
      os << suite.size() << " presentations, max trace err " << worst_trace << ", max |P^2-P| " << worst_idem;
      o.detail = os.str();
    }
    return o;
  });

  criterion(3, "micro-examples <Z^2> and <X^2,Z^2> in D=4", 10, [] {
    Outcome o;
    const auto z2 = S(4, 1, {"Z1^2"});
    o.require(group_order(z2) == 2 && code_dimension(z2) == 2, "<Z^2>: |S|, K wrong");
    const auto xz = S(4, 1, {"X1^2", "Z1^2"});
    o.require(group_order(xz) == 4 && code_dimension(xz) == 1, "<X^2,Z^2>: |S|, K wrong");
    const auto p = oracle::projector(xz);
    const double h = 1.0 / std::sqrt(2.0);
    const std::vector<Complex> psi{h, 0, h, 0};
    Complex overlap = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) overlap += std::conj(psi[i]) * p(i, j) * psi[j];
    o.require(std::abs(overlap - Complex(1.0)) < 1e-9, "overlap " + std::to_string(overlap.real()));
    if (o.pass) {
      std::ostringstream os;
      os << "|S|=2 K=2; |S|=4 K=1; overlap err " << std::abs(overlap - Complex(1.0));
      o.detail = os.str();
    }
    return o;
  });

  criterion(4, "standard form on the random suite", 180, [&] {
    Outcome o;
    std::size_t gates = 0, rows = 0;
    for (const auto& s : suite) {
      const auto sf = standardize(s);
      const auto where = "\n" + format_stabilizer_file(s);
      const auto check = check_standard_invariants(sf);
      o.require(check.ok, (check.failures.empty() ? "" : check.failures.front()) + where);
      o.require(replay(sf) == sf.result, "replay differs" + where);
      o.require(group_order(sf.result) == group_order(s), "group order changed" + where);
      const auto tr_in = oracle::projector(s).trace(), tr_out = oracle::projector(sf.result).trace();
      o.require(std::abs(tr_in - tr_out) < 1e-6, "projector trace changed" + where);
      const auto v = oracle::verify_standard_form(sf);
      o.require(v.pass, (v.notes.empty() ? "" : v.notes.front()) + where);
      gates += sf.gates.size();
      rows += sf.row_ops.size();
    }
    if (o.pass)
      o.detail = std::to_string(suite.size()) + " presentations, " + std::to_string(gates) + " gates, " +
                 std::to_string(rows) + " row ops";
    return o;
  });

  criterion(5, "prime-D reduction", 60, [] {
    Outcome o;
    qt::Rng rng(5);
    int count = 0;
    for (Int d : {2, 3, 5, 7})
      for (std::size_t n = 1; n <= 3; ++n)
        for (int t = 0; t < 30; ++t) {
          const auto sf = standardize(qt::random_valid_presentation(rng, d, n));
          const auto where = "\n" + format_stabilizer_file(sf.input);
          o.require(sf.m == Matrix::identity(sf.r, Modulus(d)), "M is not the identity" + where);
          o.require(sf.z1 == sf.z1.transpose(), "Z1 not symmetric" + where);
          o.require(sf.z2.is_zero(), "Z2 nonzero" + where);
          ++count;
        }
    if (o.pass) o.detail = std::to_string(count) + " presentations over D in {2,3,5,7}";
    return o;
  });

  criterion(6, "gate identities and conjugation tables, dense", 30, [] {
    Outcome o;
    double worst = 0;
    std::size_t checks = 0;
    for (Int d = 2; d <= 6; ++d) {
      const auto report = oracle::assert_identities(d);
      for (const auto& c : report.checks) {
        worst = std::max(worst, c.error);
        o.require(c.pass, "D=" + std::to_string(d) + ": " + c.name);
        ++checks;
      }
    }
    if (o.pass) {
      std::ostringstream os;
      os << checks << " checks over D=2..6, max err " << worst;
      o.detail = os.str();
    }
    return o;
  });

  criterion(7, "Smith normal form vs row-span enumeration", 60, [] {
    Outcome o;
    qt::Rng rng(7);
    const std::vector<Int> dims{2, 3, 4, 5, 6, 8, 9, 10, 12};
    int checked = 0;
    for (int t = 0; checked < 520 && o.pass; ++t) {
      const Int d = dims[static_cast<std::size_t>(t) % dims.size()];
      const auto rows = static_cast<std::size_t>(qt::uniform(rng, 1, 6));
      const auto cols = static_cast<std::size_t>(qt::uniform(rng, 1, 8));
      auto a = qt::random_matrix(rng, Modulus(d), rows, cols);
      if (t % 2 == 0)
        for (std::size_t i = 0; i < rows; ++i)
          for (std::size_t j = 0; j < cols; ++j)
            if (qt::uniform(rng, 0, 3) != 0) a.set(i, j, Modulus(d).mul(a(i, j), qt::uniform(rng, 0, 1) * 2));
      const auto dec = smith_normal_form(a);
      const auto check = verify_snf(a, dec);
      o.require(check.ok, check.diagnostic + "\n" + a.str());
      const auto brute = qt::brute_row_span_size(a, 10000);
      if (!brute) continue;
      o.require(static_cast<std::size_t>(row_lattice_order(dec)) == *brute, "lattice order mismatch\n" + a.str());
      ++checked;
    }
    if (o.pass) o.detail = std::to_string(checked) + " matrices up to 6x8";
    return o;
  });

  criterion(8, "commutation verdict vs dense commutator", 60, [] {
    Outcome o;
    qt::Rng rng(8);
    int pairs = 0, commuting = 0;
    const auto shapes = qt::shapes({2, 3, 4, 5, 6, 7, 8}, 6, 64);
    while (pairs < 1200)
      for (const auto& shape : shapes) {
        const Modulus mod(shape.d);
        auto p1 = qt::random_pauli(rng, mod, shape.n), p2 = qt::random_pauli(rng, mod, shape.n);
        // Bias towards commuting pairs so both verdicts are exercised.
        if (pairs % 3 == 0) p2 = power(p1, qt::uniform(rng, 0, shape.d - 1));
        const auto a = oracle::pauli_to_dense(p1), b = oracle::pauli_to_dense(p2);
        const bool dense = max_abs_diff(a * b, b * a) < 1e-9;
        o.require(commutes(p1, p2) == dense, "disagree on " + format_pauli(p1) + " , " + format_pauli(p2));
        commuting += dense;
        ++pairs;
      }
    if (o.pass)
      o.detail = std::to_string(pairs) + " pairs, " + std::to_string(commuting) + " commuting";
    return o;
  });

  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
