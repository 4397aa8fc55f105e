// Consistency, composition, and refinement decisions.
//
// Every constraint extracted from a diagram is a positive fact, so the
// diagrams of a document set always have a least candidate model: the
// canonical system built from exactly the extracted atoms (with the
// subclass relation transitively closed when transitivity is required).
// Consistency of the set reduces to validity of that single system, and
// refinement to atom entailment against it. An exhaustive small-scope
// enumerator provides an independent brute-force route to the same
// verdicts for cross-validation.

#ifndef CDSEM_CHECKER_HPP
#define CDSEM_CHECKER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cdsem/ast.hpp"
#include "cdsem/semantics.hpp"
#include "cdsem/system.hpp"

namespace cdsem {

// Search bounds for the enumeration oracle. max_candidates caps the total
// number of candidate systems per class-set size; enumeration beyond it is
// refused rather than attempted.
struct Scope {
    std::size_t extra_classes = 0;
    std::size_t values_per_type = 1;  // >= 1
    bool allow_extra_attr_facts = false;
    std::uint64_t max_candidates = std::uint64_t{1} << 24;
};

class ScopeTooLarge : public std::runtime_error {
public:
    explicit ScopeTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

// A closed walk along declared subclass edges: front() == back(), at least
// one real step, every consecutive pair an entailed SubEdge.
struct CycleEvidence {
    std::vector<Ident> cycle;
    bool operator==(const CycleEvidence&) const = default;
};

struct SingleInheritanceViolation {
    Ident cls;
    std::vector<Ident> supers;  // >= 2 distinct, sorted
    bool operator==(const SingleInheritanceViolation&) const = default;
};

// Exhaustive scan found no witness within scope and no declared cycle
// explains it; only the brute-force route reports this.
struct NoWitnessInScope {
    bool operator==(const NoWitnessInScope&) const = default;
};

using Evidence = std::variant<CycleEvidence, SingleInheritanceViolation, NoWitnessInScope>;

struct Consistent {
    System witness;
};
struct Inconsistent {
    Evidence evidence;
};
using CheckResult = std::variant<Consistent, Inconsistent>;

struct Refines {};
struct NotRefines {
    System counterexample;
};
using RefineResult = std::variant<Refines, NotRefines>;

// The least candidate system of docs: exactly the extracted classes and
// types, the declared subclass edges (closed under transitivity when
// required), singleton carriers when non-emptiness is required, and the
// declared attribute and association facts.
System canonical_system(std::span<const Diagram> docs, const VariationConfig& cfg);

// Constructive decision: the canonical system is a member of the
// denotation iff the denotation is non-empty.
//
// Soundness: all atoms are positive, so every satisfying system contains
// the declared edges, and — when transitivity is required — their closure.
// If the closure breaks antisymmetry, every candidate system does, so an
// invalid canonical system means inconsistency; conversely the canonical
// system itself is a witness whenever every enabled predicate accepts it.
CheckResult check_consistency(std::span<const Diagram> docs, const VariationConfig& cfg);

// Sem(refined) is a subset of Sem(abstract) iff refined is inconsistent
// (vacuous) or the canonical system of refined entails every atom of
// abstract. A failed atom makes that canonical system the counterexample.
RefineResult check_refinement(std::span<const Diagram> refined,
                              std::span<const Diagram> abstract,
                              const VariationConfig& cfg);

// Classes whose declared supers, unioned across docs, contain at least two
// distinct names; sorted by class name.
std::vector<SingleInheritanceViolation> single_inheritance_violations(
    std::span<const Diagram> docs);

// Deterministic exhaustive enumeration of every well-formed system over
// the base documents' names plus up to extra_classes fresh `_X<n>`
// classes. Order: for each fresh-class count ascending, an odometer over
// (sub relation, carrier sizes, attribute facts, association links) with
// the later fields cycling fastest; subset fields count up through bit
// masks over their lexicographically sorted candidate lists.
class SystemEnumerator {
public:
    SystemEnumerator(std::span<const Diagram> base, const Scope& scope,
                     const VariationConfig& cfg);

    // Next system in the documented order, or nullopt when exhausted.
    std::optional<System> next();

private:
    void setup_level();
    bool advance();
    System build() const;

    Scope scope_;
    VariationConfig cfg_;
    std::vector<Ident> base_classes_;
    std::vector<Ident> basic_names_;
    std::vector<AttrFact> base_attr_facts_;
    std::vector<std::pair<Ident, Ident>> base_assoc_;

    std::size_t fresh_count_ = 0;
    bool level_ready_ = false;
    std::vector<Ident> classes_;
    std::vector<TypeId> types_;
    std::vector<std::pair<Ident, Ident>> pairs_;
    std::vector<AttrEntry> attr_cands_;
    std::vector<std::pair<Ident, Ident>> assoc_cands_;
    std::uint64_t sub_mask_ = 0;
    std::uint64_t attr_mask_ = 0;
    std::uint64_t assoc_mask_ = 0;
    std::vector<std::size_t> car_counts_;
};

// Oracle for check_consistency: scan the enumeration for the first member
// of the denotation. Refuses over-cap scopes with ScopeTooLarge.
CheckResult brute_force_consistency(std::span<const Diagram> docs, const VariationConfig& cfg,
                                    const Scope& scope);

// Oracle for check_refinement: scan for a system inside Sem(refined) but
// outside Sem(abstract). A Refines verdict is exhaustive within scope; the
// enumeration runs over the refined documents' names, which always cover
// the canonical counterexample when one exists.
RefineResult brute_force_refinement(std::span<const Diagram> refined,
                                    std::span<const Diagram> abstract,
                                    const VariationConfig& cfg, const Scope& scope);

}  // namespace cdsem

#endif
