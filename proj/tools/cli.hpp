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

/**
 * @file cli.hpp
 * @brief The `gpoly` command line, as a function over argument vectors and
 * streams so it can be driven from tests.
 *
 * Exit codes:
 *   0 success            1 an identity failed (check)
 *   2 parse error        3 size or enumeration guard
 *   4 invalid flags      5 transform produced a non-polynomial
 *   6 brute-force reconstruction found zero or several candidates
 */

#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpoly/gpoly.hpp"

namespace gpoly::cli {

enum ExitCode : int {
  kOk = 0,
  kIdentityFailed = 1,
  kParseFailure = 2,
  kGuard = 3,
  kBadFlags = 4,
  kNonPolynomial = 5,
  kReconstructionAmbiguous = 6,
};

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string path;
  std::string g6;
  std::string edges;

  void attach(CLI::App& cmd) {
    auto* a = cmd.add_option("--graph", path, "graph file (edge list; graph6 if it ends in .g6)");
    auto* b = cmd.add_option("--g6", g6, "graph6 string");
    auto* c = cmd.add_option("--edges", edges, "inline edge list, e.g. \"3 2;1 2;2 3\"");
    a->excludes(b)->excludes(c);
    b->excludes(c);
  }

  bool given() const { return !path.empty() || !g6.empty() || !edges.empty(); }

  Graph load() const {
    if (!g6.empty()) return parse_graph(g6, GraphFormat::kGraph6);
    if (!edges.empty()) return parse_inline_edges(edges);
    if (path.empty()) throw UsageError("one of --graph, --g6, --edges is required");
    const bool is_g6 = path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0;
    return parse_graph(read_file(path), is_g6 ? GraphFormat::kGraph6 : GraphFormat::kEdgeList);
  }

  static std::string read_file(const std::string& path) {
    if (path == "-") {
      return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
};

inline void print(std::ostream& out, const Polynomial& p, bool json) {
  if (json) {
    out << to_json(p).dump() << "\n";
  } else {
    out << to_canonical_text(p) << "\n";
  }
}

inline Polynomial compute(const Graph& g, const std::string& poly, const std::string& algo,
                          const SizeGuard& guard) {
  const RecurrenceOptions rec{guard, PivotRule::kFirst, 0};
  if (poly == "eep") {
    if (algo == "def" || algo == "rec") return eep_recurrence(g, rec);
  } else if (poly == "scp") {
    if (algo == "def") return scp_subset(g, guard);
    if (algo == "induced") return scp_induced(g, guard);
    if (algo == "rec") return scp_recurrence(g, rec);
  } else if (poly == "tcp") {
    if (algo == "def" || algo == "expansion") return tcp_expansion(g, guard);
    if (algo == "rec") return tcp_recurrence(g, rec);
  } else if (poly == "potts") {
    if (algo == "def") return potts_subset(g, guard);
    if (algo == "rec") return potts_recurrence(g, rec);
  } else if (poly == "badcol") {
    if (algo == "def") return badcol_subset(g, guard);
    if (algo == "rec") return badcol_recurrence(g, rec);
  } else if (poly == "bivchrom") {
    if (algo == "def" || algo == "expansion") return bivariate_chromatic(g, guard);
    if (algo == "rec") return bivariate_chromatic_recurrence(g, rec);
  } else if (poly == "scomp") {
    if (algo == "def") return scomp_subset(g, guard);
  }
  throw UsageError("--algo " + algo + " is not available for --poly " + poly);
}

inline const char* status_label(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::kPass:
      return "PASS";
    case IdentityStatus::kFail:
      return "FAIL";
    case IdentityStatus::kSkip:
      return "SKIP";
  }
  return "?";
}

inline Polynomial transform(const Polynomial& p, const std::string& from, const std::string& to,
                            std::optional<std::int64_t> n) {
  auto need_n = [&]() {
    if (!n) throw UsageError("--n is required when scp is involved");
    return *n;
  };
  if (from == to) return p;
  // Everything routes through eep.
  Polynomial xi;
  if (from == "eep") {
    xi = p;
  } else if (from == "scp") {
    xi = eep_from_scp(p, need_n());
  } else {
    xi = eep_from_tcp(p);
  }
  if (to == "eep") return xi;
  if (to == "scp") return scp_from_eep(xi, need_n());
  return tcp_from_eep(xi);
}

}  // namespace detail

/// Runs the command line; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact graph polynomials: compute, cross-check, transform, reconstruct."};
  app.name("gpoly");
  app.require_subcommand(1);

  const std::vector<std::string> polys{"eep", "scp", "tcp", "potts", "badcol", "bivchrom", "scomp"};
  const std::vector<std::string> algos{"def", "rec", "induced", "expansion"};
  const std::vector<std::string> families{"eep", "scp", "tcp"};

  detail::GraphSource compute_src;
  std::string poly;
  std::string algo = "def";
  bool compute_json = false;
  auto* compute_cmd = app.add_subcommand("compute", "compute one polynomial of a graph");
  compute_src.attach(*compute_cmd);
  compute_cmd->add_option("--poly", poly, "eep|scp|tcp|potts|badcol|bivchrom|scomp")
      ->required()
      ->check(CLI::IsMember(polys));
  compute_cmd->add_option("--algo", algo, "def|rec|induced|expansion")->check(CLI::IsMember(algos));
  compute_cmd->add_flag("--json", compute_json, "print JSON instead of canonical text");

  detail::GraphSource check_src;
  std::string corpus_name;
  auto* check_cmd = app.add_subcommand("check", "run the identity suite");
  check_src.attach(*check_cmd);
  check_cmd->add_option("--corpus", corpus_name, "all-n<k>: every labeled simple graph on k <= 5 vertices");

  std::string from;
  std::string to;
  std::optional<std::int64_t> transform_n;
  std::string input = "-";
  bool transform_json = false;
  auto* transform_cmd = app.add_subcommand("transform", "convert between eep, scp and tcp");
  transform_cmd->add_option("--from", from)->required()->check(CLI::IsMember(families));
  transform_cmd->add_option("--to", to)->required()->check(CLI::IsMember(families));
  transform_cmd->add_option("--n", transform_n, "vertex count (needed for scp)");
  transform_cmd->add_option("--input", input, "polynomial file in canonical text ('-' for stdin)");
  transform_cmd->add_flag("--json", transform_json);

  detail::GraphSource deck_src;
  auto* deck_cmd = app.add_subcommand("deck", "print the polynomial deck of a graph");
  deck_src.attach(*deck_cmd);

  std::string deck_path;
  bool brute_force = false;
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "rebuild scp from a polynomial deck");
  reconstruct_cmd->add_option("--deck", deck_path, "deck file")->required();
  reconstruct_cmd->add_flag("--brute-force", brute_force, "search all labeled graphs (n <= 7)");

  detail::GraphSource degseq_src;
  auto* degseq_cmd = app.add_subcommand("degseq", "degree histogram recovered from tcp");
  degseq_src.attach(*degseq_cmd);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "gpoly: " << e.what() << "\n";
    return kBadFlags;
  }

  const SizeGuard guard = SizeGuard::from_environment();
  try {
    if (compute_cmd->parsed()) {
      const Graph g = compute_src.load();
      detail::print(out, detail::compute(g, poly, algo, guard), compute_json);
      return kOk;
    }

    if (check_cmd->parsed()) {
      std::vector<Graph> graphs;
      if (!corpus_name.empty()) {
        if (check_src.given()) throw detail::UsageError("--corpus excludes a graph input");
        int k = -1;
        if (corpus_name.rfind("all-n", 0) == 0 && corpus_name.size() == 6 &&
            corpus_name[5] >= '0' && corpus_name[5] <= '5') {
          k = corpus_name[5] - '0';
        }
        if (k < 0) throw detail::UsageError("--corpus must be all-n<k> with 0 <= k <= 5");
        graphs = corpus::all_labeled_graphs(k);
      } else {
        graphs.push_back(check_src.load());
      }
      std::size_t passed = 0;
      std::size_t failed = 0;
      std::size_t skipped = 0;
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        out << "graph " << i << " (n=" << g.vertex_count() << ", m=" << g.edge_count() << ")\n";
        for (const auto& r : check_identities(g, guard)) {
          out << "  " << detail::status_label(r.status) << "  " << r.name;
          if (r.status == IdentityStatus::kFail) out << "  [" << r.detail << "]";
          out << "\n";
          passed += r.status == IdentityStatus::kPass;
          failed += r.status == IdentityStatus::kFail;
          skipped += r.status == IdentityStatus::kSkip;
        }
      }
      out << "summary: " << graphs.size() << " graphs, " << passed << " passed, " << failed
          << " failed, " << skipped << " skipped\n";
      return failed == 0 ? kOk : kIdentityFailed;
    }

    if (transform_cmd->parsed()) {
      const Polynomial p = parse_polynomial(detail::GraphSource::read_file(input));
      detail::print(out, detail::transform(p, from, to, transform_n), transform_json);
      return kOk;
    }

    if (deck_cmd->parsed()) {
      out << write_deck(polynomial_deck(deck_src.load(), guard));
      return kOk;
    }

    if (reconstruct_cmd->parsed()) {
      // Lower strata first; with --brute-force, the full polynomial follows.
      const PolyDeck d = read_deck(detail::GraphSource::read_file(deck_path));
      const Polynomial lower = reconstruct_lower_coeffs(d);
      if (!brute_force) {
        out << to_canonical_text(lower) << "\n";
        return kOk;
      }
      const auto found = brute_force_reconstruct_check(d);
      if (found.size() != 1) {
        err << "gpoly: brute-force search found " << found.size() << " candidates\n";
        for (const auto& h : found) err << "  " << to_canonical_text(h) << "\n";
        return kReconstructionAmbiguous;
      }
      out << to_canonical_text(lower) << "\n" << to_canonical_text(found.front()) << "\n";
      return kOk;
    }

    if (degseq_cmd->parsed()) {
      const DegreeHistogram hist = degree_histogram_from_tcp(tcp_expansion(degseq_src.load(), guard));
      for (const auto& [degree, count] : hist.counts) {
        if (count != 0) out << degree << ":" << count << "\n";
      }
      return kOk;
    }
  } catch (const detail::UsageError& e) {
    err << "gpoly: " << e.what() << "\n";
    return kBadFlags;
  } catch (const ParseError& e) {
    err << "gpoly: " << e.what() << "\n";
    return kParseFailure;
  } catch (const SizeGuardExceeded& e) {
    err << "gpoly: " << e.what() << "\n";
    return kGuard;
  } catch (const EnumerationGuardExceeded& e) {
    err << "gpoly: " << e.what() << "\n";
    return kGuard;
  } catch (const NonPolynomialResult& e) {
    err << "gpoly: " << e.what() << "\n";
    return kNonPolynomial;
  } catch (const Error& e) {
    // Malformed decks and other invalid inputs.
    err << "gpoly: " << e.what() << "\n";
    return kParseFailure;
  }
  return kBadFlags;
}

}  // namespace gpoly::cli
