// Copyright 2026 The bsqec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "bsqec/code_algebra.hpp"

using namespace bsqec;

namespace {

Pauli P(int q, char k) { return Pauli::single(kNumQubits, q, k); }

Pauli prod(std::initializer_list<Pauli> fs) {
  Pauli p = Pauli::identity(kNumQubits);
  for (const auto& f : fs) p = p * f;
  return p;
}

// Expected factorization of the 27 single-qubit errors: subspace, logical
// factor, and the gauge-qubit operator as (x, z) masks with gauge qubit j at
// bit (4 - j).
struct ExpectedAction {
  int channel;
  int subspace;
  LogicalOp logical;
  uint16_t gx, gz;
};

constexpr ExpectedAction kExpectedActions[27] = {
    {channel_index(1, 'X'), 4, LogicalOp::I, 0, 0},
    {channel_index(2, 'X'), 4, LogicalOp::I, 8, 0},
    {channel_index(3, 'X'), 4, LogicalOp::I, 12, 0},
    {channel_index(4, 'X'), 5, LogicalOp::X, 3, 0},
    {channel_index(5, 'X'), 5, LogicalOp::X, 9, 0},
    {channel_index(6, 'X'), 5, LogicalOp::X, 12, 0},
    {channel_index(7, 'X'), 1, LogicalOp::I, 3, 0},
    {channel_index(8, 'X'), 1, LogicalOp::I, 1, 0},
    {channel_index(9, 'X'), 1, LogicalOp::I, 0, 0},
    {channel_index(1, 'Z'), 12, LogicalOp::I, 0, 0},
    {channel_index(2, 'Z'), 15, LogicalOp::Z, 0, 5},
    {channel_index(3, 'Z'), 3, LogicalOp::I, 0, 5},
    {channel_index(4, 'Z'), 12, LogicalOp::I, 0, 8},
    {channel_index(5, 'Z'), 15, LogicalOp::Z, 0, 9},
    {channel_index(6, 'Z'), 3, LogicalOp::I, 0, 1},
    {channel_index(7, 'Z'), 12, LogicalOp::I, 0, 10},
    {channel_index(8, 'Z'), 15, LogicalOp::Z, 0, 10},
    {channel_index(9, 'Z'), 3, LogicalOp::I, 0, 0},
    {channel_index(1, 'Y'), 8, LogicalOp::I, 0, 0},
    {channel_index(2, 'Y'), 11, LogicalOp::Z, 8, 5},
    {channel_index(3, 'Y'), 7, LogicalOp::I, 12, 5},
    {channel_index(4, 'Y'), 9, LogicalOp::X, 3, 8},
    {channel_index(5, 'Y'), 10, LogicalOp::Y, 9, 9},
    {channel_index(6, 'Y'), 6, LogicalOp::X, 12, 1},
    {channel_index(7, 'Y'), 13, LogicalOp::I, 3, 10},
    {channel_index(8, 'Y'), 14, LogicalOp::Z, 1, 10},
    {channel_index(9, 'Y'), 2, LogicalOp::I, 0, 0},
};

}  // namespace

TEST_CASE("tables construct and self-check") {
  // Construction throws if the computed subspace products disagree with the
  // stored reference table.
  CHECK_NOTHROW(code());
}

TEST_CASE("syndromes of representatives and named errors") {
  const auto& t = code();
  CHECK(t.syndrome_of(Pauli::identity(kNumQubits)) == 0);
  CHECK(t.syndrome_of(P(9, 'X')) == 1);
  CHECK(t.syndrome_of(P(1, 'Y')) == 8);
  for (int l = 0; l < kNumSubspaces; ++l) {
    CHECK(t.syndrome_of(t.subspace_rep(l)) == l);
    CHECK(t.subspace_from_signs(t.syndrome_signs(l)) == l);
  }
}

TEST_CASE("subspace products") {
  const auto& t = code();
  CHECK(t.q_mul(4, 5).subspace == 1);
  CHECK(t.q_mul(4, 5).phase == 0);
  CHECK(t.q_mul(15, 4).subspace == 11);
  CHECK(t.q_mul(15, 4).phase == 1);  // i
  for (int l = 0; l < kNumSubspaces; ++l) {
    CHECK(t.q_mul(l, 0).subspace == l);
    CHECK(t.q_mul(l, 0).phase == 0);
    CHECK(t.q_mul(l, l).subspace == 0);
  }
  // Index part is symmetric; phases need not be.
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) {
      CHECK(t.q_mul(a, b).subspace == t.q_mul(b, a).subspace);
    }
  }
}

TEST_CASE("error factorizations match the equivalence table") {
  const auto& t = code();
  for (const auto& e : kExpectedActions) {
    const auto a = t.error_action(e.channel);
    CAPTURE(e.channel);
    CHECK(a.subspace == e.subspace);
    CHECK(a.logical == e.logical);
    CHECK(a.gauge_op.x == e.gx);
    CHECK(a.gauge_op.z == e.gz);
    // Consistency between the syndrome map and the factorization.
    CHECK(t.syndrome_of(channel_pauli(e.channel)) == a.subspace);
  }
}

TEST_CASE("full nine-qubit identities for all 27 errors") {
  // Exact operator identities, including phases, expressing each error over
  // the subspace representatives, bare logicals, measured operators and
  // stabilizer generators.
  const auto& t = code();
  const Pauli XL = t.logical_x();
  const Pauli ZL = t.logical_z();
  const Pauli Sx1 = t.stabilizer(0), Sz1 = t.stabilizer(1);
  const Pauli Sx2 = t.stabilizer(2), Sz2 = t.stabilizer(3);
  auto G = [&](int k) { return t.gauge_op(k); };
  auto Q = [&](int l) { return t.subspace_rep(l); };
  auto neg = [](Pauli p) {
    p.phase = static_cast<uint8_t>((p.phase + 2) & 3);
    return p;
  };
  auto times_i = [](Pauli p) {
    p.phase = static_cast<uint8_t>((p.phase + 1) & 3);
    return p;
  };

  CHECK(P(1, 'X') == Q(4));
  CHECK(P(2, 'X') == prod({Q(4), G(7)}));
  CHECK(P(3, 'X') == prod({Q(4), G(7), G(10)}));
  CHECK(P(4, 'X') == prod({Q(5), XL, G(9), G(12)}));
  CHECK(P(5, 'X') == prod({Q(5), XL, G(7), G(12), Sx1}));
  CHECK(P(6, 'X') == prod({Q(5), XL, G(7), G(10), Sx1, Sx2}));
  CHECK(P(7, 'X') == prod({Q(1), G(9), G(12)}));
  CHECK(P(8, 'X') == prod({Q(1), G(12)}));
  CHECK(P(9, 'X') == Q(1));

  CHECK(P(1, 'Z') == Q(12));
  CHECK(P(2, 'Z') == prod({Q(15), ZL, G(3), G(6)}));
  CHECK(P(3, 'Z') == prod({Q(3), G(3), G(6)}));
  CHECK(P(4, 'Z') == prod({Q(12), G(1)}));
  CHECK(P(5, 'Z') == prod({Q(15), ZL, G(1), G(6), Sz1}));
  CHECK(P(6, 'Z') == prod({Q(3), G(6)}));
  CHECK(P(7, 'Z') == prod({Q(12), G(1), G(4)}));
  CHECK(P(8, 'Z') == prod({Q(15), ZL, G(1), G(4), Sz1, Sz2}));
  CHECK(P(9, 'Z') == Q(3));

  CHECK(P(1, 'Y') == Q(8));
  CHECK(P(2, 'Y') == neg(prod({Q(11), ZL, G(3), G(6), G(7)})));
  CHECK(P(3, 'Y') == prod({Q(7), G(7), times_i(G(10) * G(3)), G(6)}));
  CHECK(P(4, 'Y') == neg(prod({Q(9), XL, G(9), G(12), G(1)})));
  CHECK(P(5, 'Y') ==
        prod({Q(10), times_i(XL * ZL), times_i(G(7) * G(1)), times_i(G(12) * G(6)), Sx1, Sz1}));
  CHECK(P(6, 'Y') == neg(prod({Q(6), XL, G(7), G(10), G(6), Sx1, Sx2})));
  CHECK(P(7, 'Y') == prod({Q(13), G(12), times_i(G(9) * G(4)), G(1)}));
  CHECK(P(8, 'Y') == neg(prod({Q(14), ZL, G(1), G(4), G(12), Sz1, Sz2})));
  CHECK(P(9, 'Y') == Q(2));
}

TEST_CASE("recomposition reproduces each error up to the recorded phase") {
  const auto& t = code();
  for (int c = 0; c < kNumErrorChannels; ++c) {
    const Pauli e = channel_pauli(c);
    const auto a = t.error_action(c);
    const auto red = t.reduce_mod_gauge(adjoint(t.subspace_rep(a.subspace)) * e);
    REQUIRE(red.has_value());
    Pauli recon = t.subspace_rep(a.subspace);
    if (a.logical == LogicalOp::X || a.logical == LogicalOp::Y) recon = recon * t.logical_x();
    if (a.logical == LogicalOp::Z || a.logical == LogicalOp::Y) recon = recon * t.logical_z();
    if (a.logical == LogicalOp::Y) recon.phase = static_cast<uint8_t>((recon.phase + 1) & 3);
    for (int k = 1; k <= kNumGauge; ++k) {
      if (red->gauge_mask & (1u << (k - 1))) recon = recon * t.gauge_op(k);
    }
    recon.phase = static_cast<uint8_t>((recon.phase + a.phase) & 3);
    CHECK(recon == e);
  }
}

TEST_CASE("decompose_error rejects multi-qubit input") {
  CHECK_THROWS(code().decompose_error(P(1, 'X') * P(2, 'X')));
  CHECK_THROWS(code().decompose_error(Pauli::identity(kNumQubits)));
}

TEST_CASE("measured-operator signs per subspace") {
  const auto& t = code();
  for (int k = 1; k <= kNumGauge; ++k) CHECK(t.zeta(k, 0) == 1);
  CHECK(t.zeta(6, 1) == -1);  // Z6Z9 vs X9
  CHECK(t.zeta(7, 1) == 1);   // X1X2 vs X9
  // Product of zetas over a stabilizer's three factors gives its sign.
  const int triples[4][3] = {{7, 8, 9}, {1, 2, 3}, {10, 11, 12}, {4, 5, 6}};
  for (int l = 0; l < kNumSubspaces; ++l) {
    for (int n = 0; n < 4; ++n) {
      int s = 1;
      for (int j = 0; j < 3; ++j) s *= t.zeta(triples[n][j], l);
      CHECK(s == t.syndrome_signs(l)[n]);
    }
  }
}

TEST_CASE("gauge-qubit representations") {
  const auto& t = code();
  CHECK(t.gauge_rep(1) == Pauli::single(4, 1, 'Z'));
  CHECK(t.gauge_rep(8) == Pauli::single(4, 1, 'X') * Pauli::single(4, 3, 'X'));
  CHECK(t.gauge_rep(12) == Pauli::single(4, 4, 'X'));
  // The representation preserves products of commuting generators within a
  // stabilizer triple: each triple multiplies to the identity.
  const int triples[4][3] = {{7, 8, 9}, {1, 2, 3}, {10, 11, 12}, {4, 5, 6}};
  for (const auto& tri : triples) {
    Pauli g = Pauli::identity(kNumGaugeQubits);
    for (int j = 0; j < 3; ++j) g = g * t.gauge_rep(tri[j]);
    CHECK(g.is_identity_up_to_phase());
  }
  // Commutation structure matches the nine-qubit operators.
  for (int a = 1; a <= kNumGauge; ++a) {
    for (int b = 1; b <= kNumGauge; ++b) {
      CHECK(commutes(t.gauge_rep(a), t.gauge_rep(b)) == commutes(t.gauge_op(a), t.gauge_op(b)));
    }
  }
}

TEST_CASE("gauge group elements commute with every stabilizer generator") {
  const auto& t = code();
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> mask(0, (1 << kNumGauge) - 1);
  for (int it = 0; it < 200; ++it) {
    Pauli g = Pauli::identity(kNumQubits);
    const int m = mask(gen);
    for (int k = 0; k < kNumGauge; ++k) {
      if (m & (1 << k)) g = g * t.gauge_op(k + 1);
    }
    for (int n = 0; n < kNumStabilizers; ++n) CHECK(commutes(g, t.stabilizer(n)));
  }
}

TEST_CASE("correction classes carry the expected logical factors") {
  const auto& t = code();
  const LogicalOp expected[16] = {
      LogicalOp::I, LogicalOp::I, LogicalOp::I, LogicalOp::I, LogicalOp::I, LogicalOp::X,
      LogicalOp::X, LogicalOp::I, LogicalOp::I, LogicalOp::X, LogicalOp::Y, LogicalOp::Z,
      LogicalOp::I, LogicalOp::I, LogicalOp::Z, LogicalOp::Z};
  for (int l = 0; l < kNumSubspaces; ++l) CHECK(t.class_logical(l) == expected[l]);
}

TEST_CASE("harmful pair counts and exchange symmetry") {
  const auto& t = code();
  const auto pairs = t.enumerate_harmful_pairs();

  std::map<LogicalOp, int> counts;
  std::set<std::pair<int, int>> x_set, z_set, y_set;
  for (const auto& hp : pairs) {
    counts[hp.logical]++;
    auto key = std::minmax(hp.channel1, hp.channel2);
    if (hp.logical == LogicalOp::X) x_set.insert(key);
    if (hp.logical == LogicalOp::Z) z_set.insert(key);
    if (hp.logical == LogicalOp::Y) y_set.insert(key);
  }
  CHECK(counts[LogicalOp::X] == 90);
  CHECK(counts[LogicalOp::Z] == 90);
  CHECK(counts[LogicalOp::Y] == 18);
  CHECK(pairs.size() == 198);

  // Spot checks.
  auto mk = [](int q1, char k1, int q2, char k2) -> std::pair<int, int> {
    const int a = channel_index(q1, k1), b = channel_index(q2, k2);
    return {std::min(a, b), std::max(a, b)};
  };
  CHECK(x_set.count(mk(1, 'X', 4, 'X')) == 1);
  CHECK(y_set.count(mk(1, 'Y', 5, 'Y')) == 1);
  CHECK(x_set.count(mk(1, 'X', 2, 'X')) == 0);  // a measured operator, harmless

  // X <-> Z exchange with the qubit relabeling 2<->4, 3<->7, 6<->8 maps the
  // logical-X list onto the logical-Z list.
  const int qmap[10] = {0, 1, 4, 7, 2, 5, 8, 3, 6, 9};
  auto relabel = [&](int channel) {
    const int q = qmap[channel_qubit(channel)];
    const char k = channel_kind(channel);
    const char nk = (k == 'X') ? 'Z' : (k == 'Z') ? 'X' : 'Y';
    return channel_index(q, nk);
  };
  std::set<std::pair<int, int>> relabeled;
  for (const auto& [a, b] : x_set) {
    relabeled.insert(std::minmax(relabel(a), relabel(b)));
  }
  CHECK(relabeled == z_set);

  // The subspace recorded for (X1, X4) is the one reached from the code space.
  for (const auto& hp : pairs) {
    if (std::pair<int, int>(std::minmax(hp.channel1, hp.channel2)) == mk(1, 'X', 4, 'X')) {
      CHECK(hp.subspace == 1);
      CHECK(hp.logical == LogicalOp::X);
    }
  }
}
