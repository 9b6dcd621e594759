#pragma once

// Exhaustive enumeration of preorders and monotone maps on labeled carriers.
// Deliberately naive: these are the substrate the library is checked against.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "preord/relation.hpp"

namespace preord::testkit {

// 2^(n²) relations are filtered, so n = 4 (65 536 relations) is the limit.
inline constexpr std::size_t kRelationCap = 4;
// Morphism sweeps walk |Q|^|P| maps.
inline constexpr std::size_t kMorphismCap = 4;

enum class Filter { preorder, poset, equivalence };

struct EnumerationConfig {
    std::size_t max_carrier = 3;
    Filter filter = Filter::preorder;
    std::uint64_t seed = 1;

    // Throws CapExceeded past kRelationCap.
    void validate() const;
};

bool passes(const FinPreorder& p, Filter f);

// Pull-based stream over all endorelations on n points in bitmask order,
// yielding those that are preorders passing the filter.
class PreorderStream {
public:
    // Throws CapExceeded when n > kRelationCap.
    explicit PreorderStream(std::size_t n, Filter filter = Filter::preorder);
    std::optional<FinPreorder> next();

private:
    std::size_t n_;
    Filter filter_;
    std::uint64_t mask_ = 0;
    std::uint64_t end_;
};

std::vector<FinPreorder> enumerate_preorders(std::size_t n, Filter filter = Filter::preorder);
// Independent route: close every set of off-diagonal pairs with a triple-loop
// closure and deduplicate.
std::vector<FinPreorder> enumerate_preorders_by_closure(std::size_t n, Filter filter = Filter::preorder);
// All objects with carriers 0..config.max_carrier.
std::vector<FinPreorder> enumerate_objects(const EnumerationConfig& config);

// Pull-based stream over all |Q|^|P| maps in odometer order, keeping the monotone ones.
class MorphismStream {
public:
    // Throws CapExceeded when either carrier exceeds kMorphismCap.
    MorphismStream(FinPreorder p, FinPreorder q);
    std::optional<PreordMorphism> next();

private:
    bool advance();

    FinPreorder p_;
    FinPreorder q_;
    std::vector<Index> values_;
    bool done_ = false;
};

std::vector<PreordMorphism> enumerate_morphisms(const FinPreorder& p, const FinPreorder& q);

// Every morphism between objects of the list.
std::vector<PreordMorphism> enumerate_all_morphisms(const std::vector<FinPreorder>& objects);

}  // namespace preord::testkit
