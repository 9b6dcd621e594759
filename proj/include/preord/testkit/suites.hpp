#pragma once

// Oracle-agreement suites. Each suite runs the operations of a Subject, by
// default the real library, against the brute-force oracles, exhaustively on
// small carriers and on seeded random instances. Mutated subjects are used to
// show each suite can actually fail.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "preord/alexandroff.hpp"
#include "preord/galois.hpp"
#include "preord/pretorsion.hpp"
#include "preord/relation.hpp"

namespace preord::testkit {

struct Subject {
    std::function<Relation(const FinPreorder&)> sym_core;
    std::function<Reflection(const FinPreorder&)> reflect;
    std::function<NMembership(const PreordMorphism&)> in_ideal_N;
    std::function<NKernel(const PreordMorphism&)> n_kernel;
    std::function<NExactSequence(const FinPreorder&)> canonical_sequence;
    std::function<MorphismClassification(const PreordMorphism&)> classify;
    std::function<FactorizationResult(const PreordMorphism&)> reflective_factorization;
    std::function<FactorizationResult(const PreordMorphism&)> monotone_light_factorization;
    std::function<OrthogonalityResult(const PreordMorphism&, const PreordMorphism&, const PreordMorphism&,
                                      const PreordMorphism&)>
        check_orthogonality;
    std::function<DescentCover(const FinPreorder&)> effective_descent_cover;
    std::function<Pullback(const PreordMorphism&, const PreordMorphism&)> preord_pullback;
    std::function<bool(const FinPreorder&, const PreordMorphism&)> verify_stable_units;
    std::function<AlexandroffSpace(const FinPreorder&)> preorder_to_space;
    std::function<FinPreorder(const AlexandroffSpace&)> space_to_preorder;
    std::function<TopologicalClassification(const ContinuousMap&)> classify_continuous;
};

Subject reference_subject();

struct SuiteConfig {
    std::size_t max_n = 3;           // exhaustive carriers (morphism sweeps clamp to 3)
    std::size_t probe_n = 3;         // universal-property probes
    std::uint64_t seed = 1;
    std::optional<std::size_t> random_count;  // per-suite default when unset
    std::optional<std::size_t> random_max_n;  // per-suite default when unset
};

struct SuiteReport {
    std::string name;
    std::size_t checks = 0;
    std::size_t failure_count = 0;
    std::vector<std::string> failures;  // the first few, with counterexamples

    bool passed() const noexcept { return failure_count == 0; }
    void check(bool ok, const std::function<std::string()>& describe);
};

SuiteReport run_pretorsion_suite(const Subject& s, const SuiteConfig& c);      // 1000 random at n ≤ 30
SuiteReport run_stable_units_suite(const Subject& s, const SuiteConfig& c);    // 1000 random at n ≤ 20
SuiteReport run_factorization_suite(const Subject& s, const SuiteConfig& c);   // 1000 random at n ≤ 50
SuiteReport run_covering_suite(const Subject& s, const SuiteConfig& c);        // 1000 random at n ≤ 50
SuiteReport run_descent_suite(const Subject& s, const SuiteConfig& c);         // 500 random at n ≤ 40
SuiteReport run_alexandroff_suite(const Subject& s, const SuiteConfig& c);     // 500 random at n ≤ 50
SuiteReport run_enumeration_suite(const Subject& s, const SuiteConfig& c);

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const Subject& s, const SuiteConfig& c);

struct Mutation {
    std::string name;
    std::string description;
    std::function<void(Subject&)> apply;
};

std::vector<Mutation> documented_mutations();

}  // namespace preord::testkit
