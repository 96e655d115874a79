// Copyright 2026 The gpoly Authors
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

// The identity suite run by `gpoly check`: every relation between the
// polynomials that can be verified exactly on a single graph.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gpoly/encodings.hpp"
#include "gpoly/graph.hpp"
#include "gpoly/invariants.hpp"
#include "gpoly/polynomial.hpp"
#include "gpoly/transforms.hpp"

namespace gpoly {

enum class IdentityStatus { kPass, kFail, kSkip };

struct IdentityResult {
  std::string name;
  IdentityStatus status = IdentityStatus::kPass;
  std::string detail;  // mismatch or skip reason
};

inline bool is_forest(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return false;
  }
  return component_count(g) + g.edge_count() == g.vertex_count();
}

inline std::vector<IdentityResult> check_identities(const Graph& g,
                                                    const SizeGuard& guard = {}) {
  guard.check(g, "check");
  std::vector<IdentityResult> out;

  auto equal = [&](std::string name, const Polynomial& lhs, const Polynomial& rhs) {
    IdentityResult r{std::move(name), IdentityStatus::kPass, {}};
    if (lhs != rhs) {
      r.status = IdentityStatus::kFail;
      r.detail = to_canonical_text(lhs) + " != " + to_canonical_text(rhs);
    }
    out.push_back(std::move(r));
  };
  auto skip = [&](std::string name, std::string why) {
    out.push_back({std::move(name), IdentityStatus::kSkip, std::move(why)});
  };
  // Transforms signal failure by throwing; record that as a failed identity.
  auto guarded = [&](std::string name, const std::function<Polynomial()>& lhs,
                     const Polynomial& rhs) {
    try {
      equal(std::move(name), lhs(), rhs);
    } catch (const NonPolynomialResult& e) {
      out.push_back({std::move(name), IdentityStatus::kFail, e.what()});
    }
  };

  RecurrenceOptions first{guard, PivotRule::kFirst, 0};
  RecurrenceOptions last{guard, PivotRule::kLast, 0};
  RecurrenceOptions random{guard, PivotRule::kRandom, 0x5eed};

  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const Polynomial xi = eep_recurrence(g, first);
  const Polynomial potts = potts_subset(g, guard);
  const Polynomial h = scp_subset(g, guard);
  const Polynomial tcp = tcp_expansion(g, guard);
  const Polynomial badcol = badcol_subset(g, guard);
  const Polynomial bivchrom = bivariate_chromatic(g, guard);

  using namespace vars;

  equal("potts: subset = recurrence", potts, potts_recurrence(g, first));
  equal("scp: subset = induced", h, scp_induced(g, guard));
  equal("scp: subset = recurrence", h, scp_recurrence(g, first));
  equal("tcp: expansion = recurrence", tcp, tcp_recurrence(g, first));
  equal("badcol: subset = recurrence", badcol, badcol_recurrence(g, first));
  equal("bivchrom: expansion = recurrence", bivchrom,
        bivariate_chromatic_recurrence(g, first));

  equal("eep: first pivot = last pivot", xi, eep_recurrence(g, last));
  equal("eep: first pivot = random pivot", xi, eep_recurrence(g, random));
  equal("scp: first pivot = random pivot", h, scp_recurrence(g, random));
  equal("tcp: first pivot = random pivot", tcp, tcp_recurrence(g, random));

  equal("eep at z=0 = potts", substitute(xi, {{Var::Z, 0}}), potts);
  equal("eep at y=z-1, z=0 = badcol", substitute(xi, {{Var::Y, z() - 1}, {Var::Z, 0}}),
        badcol);
  equal("eep at y=-1, z=x-y = bivchrom",
        substitute(xi, {{Var::Y, -1}, {Var::Z, x() - y()}}), bivchrom);
  equal("[v^n] scp = potts",
        coefficient_of(h, {{Var::V, static_cast<std::int32_t>(n)}}), potts);

  guarded("eep_from_scp(scp) = eep", [&] { return eep_from_scp(h, n); }, xi);
  guarded("scp_from_eep(eep) = scp", [&] { return scp_from_eep(xi, n); }, h);
  guarded("tcp_from_eep(eep) = tcp", [&] { return tcp_from_eep(xi); }, tcp);
  guarded("eep_from_tcp(tcp) = eep", [&] { return eep_from_tcp(tcp); }, xi);

  if (n <= 5) {
    IdentityResult r{"tcp at integer (x, y) = coloring count", IdentityStatus::kPass, {}};
    for (int colors = 0; colors <= 3 && r.status == IdentityStatus::kPass; ++colors) {
      for (int special = 0; special <= colors; ++special) {
        const Polynomial symbolic =
            substitute(tcp, {{Var::X, colors}, {Var::Y, special}});
        const Polynomial counted = tcp_coloring_oracle(g, colors, special);
        if (symbolic != counted) {
          r.status = IdentityStatus::kFail;
          r.detail = "x=" + std::to_string(colors) + ", y=" + std::to_string(special) +
                     ": " + to_canonical_text(symbolic) +
                     " != " + to_canonical_text(counted);
          break;
        }
      }
    }
    out.push_back(std::move(r));
  } else {
    skip("tcp at integer (x, y) = coloring count", "more than 5 vertices");
  }

  {
    IdentityResult r{"degree histogram from tcp", IdentityStatus::kPass, {}};
    try {
      if (degree_histogram_from_tcp(tcp) != degree_histogram(g)) {
        r.status = IdentityStatus::kFail;
        r.detail = "recovered histogram differs from direct degrees";
      }
    } catch (const MalformedInput& e) {
      r.status = IdentityStatus::kFail;
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }

  if (n >= 1) {
    const PolyDeck d = polynomial_deck(g, guard);
    Polynomial sum;
    for (const auto& card : d.cards) sum += card;
    IdentityResult r{"deck sum: [v^i] = (n-i) [v^i] scp", IdentityStatus::kPass, {}};
    for (std::int32_t i = 0; i < n; ++i) {
      if (coefficient_of(sum, {{Var::V, i}}) !=
          coefficient_of(h, {{Var::V, i}}) * Polynomial(static_cast<int>(n - i))) {
        r.status = IdentityStatus::kFail;
        r.detail = "stratum v^" + std::to_string(i);
        break;
      }
    }
    out.push_back(std::move(r));
    const Polynomial lower =
        h - coefficient_of(h, {{Var::V, static_cast<std::int32_t>(n)}})
                .times_monomial(1, unit_exponents(Var::V, static_cast<std::int32_t>(n)));
    try {
      equal("deck: lower strata reconstructed", reconstruct_lower_coeffs(d), lower);
    } catch (const NonIntegralDivision& e) {
      out.push_back({"deck: lower strata reconstructed", IdentityStatus::kFail, e.what()});
    }
  } else {
    skip("deck sum: [v^i] = (n-i) [v^i] scp", "empty graph");
    skip("deck: lower strata reconstructed", "empty graph");
  }

  if (is_forest(g)) {
    const Polynomial q = scomp_subset(g, guard);
    equal("forest: scp_from_scomp(scomp) = scp", scp_from_scomp_forest(q), h);
    equal("forest: scomp_from_scp(scp) = scomp", scomp_from_scp_forest(h), q);
  } else {
    skip("forest: scp_from_scomp(scomp) = scp", "not a forest");
    skip("forest: scomp_from_scp(scp) = scomp", "not a forest");
  }
  return out;
}

}  // namespace gpoly
