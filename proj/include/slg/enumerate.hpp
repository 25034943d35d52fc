#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slg/clifford.hpp"
#include "slg/report.hpp"

namespace slg {

struct CorpusItem {
  DecoratedGroupoid item;
  std::string provenance;
  // The generative description the item was built from, when it has one;
  // build_clifford(*spec) must reproduce item.groupoid exactly.
  std::optional<StrongSemilatticeSpec> spec;
};

struct Corpus {
  std::vector<CorpusItem> items;
  int size() const { return static_cast<int>(items.size()); }
};

/// All groups of order n (1 <= n <= 8) up to isomorphism, identity fixed at
/// element 0. Backtracking with Latin-square and incremental associativity
/// pruning; deduplicated pairwise; lexicographically least table first.
Corpus enumerate_groups(int n);

/// All semilattices of order k (1 <= k <= 5) up to isomorphism, each
/// decorated as a semilattice of trivial groups.
Corpus enumerate_semilattices(int k);

/// All decorated semilattices of groups with at most `max_classes` classes,
/// per-class group order at most `max_group`, and total carrier at most
/// `max_total` (<= 12), over every coherent family of linking homs;
/// deduplicated up to isomorphism, lexicographically least table first.
Corpus enumerate_slgs(int max_total, int max_group, int max_classes);

/// Visits every Latin square of order n (1 <= n <= 5) in lexicographic
/// order. Helper for the quasigroup-correspondence counts.
void for_each_latin_square(int n, const std::function<void(const Table&)>& fn);

/// Runs a named check set on every applicable corpus member. Honors the
/// SLG_WORKERS environment variable for parallel evaluation; results are
/// merged in input order, so reports are deterministic either way.
Report verify_corpus(const Corpus& c, const std::string& suite);
std::vector<std::string> corpus_suites();

/// Bounded search for a semilattice of double Ward quasigroups satisfying
/// 3.133 and 3.134 whose designated idempotents do NOT form a semilattice
/// isomorphic to the class semilattice. Exhausts, up to isomorphism, every
/// such structure with total carrier <= max_total (<= 8): all semilattice
/// shapes, all double-Ward blocks with every admissible e, and all
/// downward slice functions, with the cross products forced by 3.134 and
/// the hypotheses re-checked on the assembled table. Reports either
/// counterexample tables or a bounded-exhaustion statement; no particular
/// answer is asserted.
Report search_question_1(int max_total);

}  // namespace slg
