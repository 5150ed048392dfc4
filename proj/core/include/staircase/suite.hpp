// The acceptance suite: twelve numbered end-to-end checks exercising the
// whole library against hardcoded tables, closed-form values, exhaustive
// scans and randomized cross-validation. Each check reports pass/fail with
// a timing and a short diagnostic for the first failure found.

#pragma once

#include "staircase/classes.hpp"
#include "staircase/families.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace staircase {

struct SuiteOptions {
  unsigned long i_max = 3;   // shift powers in the family corpus
  unsigned long n_max = 5;   // blocking-class indices in the corpus
  std::size_t kappa = 10;    // recursed steps per staircase
};

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;  // first failure, or a short success summary
};

// Every admissible staircase of the families S^i R^delta over both bases,
// i <= i_max, n <= n_max, with kappa recursed steps.
std::vector<PreStaircase> corpus(const SuiteOptions& opt);

// Distinct geometric classes appearing in the corpus: staircase steps plus
// the blocking ladders of every corpus family. Sorted deterministically.
std::vector<QuasiPerfect> corpus_classes(const SuiteOptions& opt);

// Runs one numbered criterion (1..12). DomainError for other numbers.
CriterionResult run_criterion(int number, const SuiteOptions& opt = {});

// All twelve criteria in order.
std::vector<CriterionResult> run_acceptance(const SuiteOptions& opt = {});

}  // namespace staircase
